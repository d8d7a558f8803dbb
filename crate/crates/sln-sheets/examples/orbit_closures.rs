//! The orbit-closure order: `y` lies in the closure of the orbit of `x`
//! exactly when `Q_i^x` divides `Q_i^y` for every `i`.
//!
//! ```bash
//! cargo run --example orbit_closures
//! ```

use sln_sheets::closure::closure_contains;
use sln_sheets::sample::Sampler;
use sln_sheets::{nilpotent_representative, Partition};

fn main() {
    // nilpotent orbits of the traceless 4x4 matrices, ordered by dominance
    let partitions = Partition::all_of(4);
    let reps: Vec<_> = partitions
        .iter()
        .map(nilpotent_representative)
        .collect();

    println!("closure order on nilpotent orbits of size 4");
    println!("(row contains column in its orbit closure)");
    print!("{:12}", "");
    for sigma in &partitions {
        print!("{:10}", sigma.to_string());
    }
    println!();
    for (i, x) in reps.iter().enumerate() {
        print!("{:12}", partitions[i].to_string());
        for y in &reps {
            let contained = closure_contains(x, y).unwrap();
            print!("{:10}", if contained { "yes" } else { "-" });
        }
        println!();
    }
    println!();

    // the order is invariant under conjugation of either argument
    let mut sampler = Sampler::new(99);
    let j4 = &reps[0];
    let sub = &reps[1];
    let a = sampler.conjugate(j4);
    let b = sampler.conjugate(sub);
    assert!(closure_contains(&a, &b).unwrap());
    assert!(!closure_contains(&b, &a).unwrap());
    println!("conjugating both arguments leaves the order unchanged");

    // the closed orbit at the bottom contains nothing but itself
    let zero = sampler.sheet_element(&Partition::new(vec![1, 1, 1, 1]).unwrap());
    for y in &reps[..3] {
        assert!(!closure_contains(&zero, y).unwrap());
    }
    println!("the closure of the zero orbit contains no other nilpotent orbit");
}
