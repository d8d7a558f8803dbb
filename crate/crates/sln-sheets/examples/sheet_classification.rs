//! Enumerate the sheets of the traceless `n x n` matrices and classify points.
//!
//! A matrix lies in the sheet of the partition `(b_1 >= b_2 >= ...)` exactly
//! when its invariant factor `q_i` has degree `b_i`. Every sheet contains one
//! nilpotent orbit, and all orbits in a sheet share one dimension.
//!
//! ```bash
//! cargo run --example sheet_classification
//! ```

use sln_sheets::sample::Sampler;
use sln_sheets::{classify_sheet, enumerate_sheets, nilpotent_representative};

fn main() {
    for n in 2..=5 {
        println!("sheets of the traceless {n} x {n} matrices:");
        for d in enumerate_sheets(n) {
            println!(
                "  sigma {:10} conjugate {:10} orbit_dim {:2}  quotient_dim {}",
                d.sigma.to_string(),
                d.conjugate.to_string(),
                d.orbit_dim,
                d.quotient_dim
            );
        }
        println!();
    }

    // classification is invariant along an orbit: conjugating the nilpotent
    // representative never changes the answer
    let mut sampler = Sampler::new(2024);
    for d in enumerate_sheets(4) {
        let rep = nilpotent_representative(&d.sigma);
        let conjugated = sampler.conjugate(&rep);
        let classified = classify_sheet(&conjugated).unwrap();
        println!(
            "conjugated representative of {} classifies as {}",
            d.sigma, classified.sigma
        );
        assert_eq!(classified.sigma, d.sigma);
    }
}
