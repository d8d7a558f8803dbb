//! Symbolic generators of the closure ideal over a quotient point: the
//! remainder coefficients of the minors of `y - tI` under division by the
//! reconstructed `Q_i(t)`. A traceless matrix lies in the fiber exactly when
//! every generator vanishes on it.
//!
//! ```bash
//! cargo run --example closure_ideal
//! ```

use sln_sheets::closure::{evaluate_generators, weyman_generators};
use sln_sheets::sample::Sampler;
use sln_sheets::{Ambient, Partition, QuotientPoint, Rational, RationalMatrix, UniPoly};

fn main() {
    // the nilpotent cone of the traceless 2x2 matrices: one quadric
    let z = QuotientPoint::nilpotent_point(Partition::new(vec![2]).unwrap());
    let gens = weyman_generators(&z).unwrap();
    println!("generators over the nilpotent point of the sheet (2):");
    for g in gens.rendered() {
        println!("  {g}");
    }
    println!();

    // a nonzero fiber: z = (t^2 - 9, 1) is the orbit of diag(3, -3)
    let z = QuotientPoint::new(
        Partition::new(vec![2]).unwrap(),
        vec![UniPoly::from_int_coeffs(&[-9, 0, 1]), UniPoly::one()],
    )
    .unwrap();
    let gens = weyman_generators(&z).unwrap();
    println!("generators over (t^2 - 9, 1):");
    for g in gens.rendered() {
        println!("  {g}");
    }
    let diag = RationalMatrix::from_int_rows(&[&[3, 0], &[0, -3]], Ambient::Sl).unwrap();
    let on_fiber = evaluate_generators(&gens, &diag).unwrap();
    println!("  at diag(3,-3):   {:?}", on_fiber);
    let zero = RationalMatrix::zero(2, Ambient::Sl);
    let off_fiber = evaluate_generators(&gens, &zero).unwrap();
    println!("  at the 0 matrix: {:?}", off_fiber);
    assert!(on_fiber.iter().all(Rational::is_zero));
    assert!(off_fiber.iter().any(|v| !v.is_zero()));
    println!();

    // a 3x3 sheet with a one-dimensional quotient: generators over a random
    // point vanish on random conjugates of its section and nowhere else
    let sigma = Partition::new(vec![2, 1]).unwrap();
    let mut sampler = Sampler::new(5);
    let z = sampler.quotient_point(&sigma);
    let gens = weyman_generators(&z).unwrap();
    println!("sheet (2,1), point {z}: {} generators", gens.len());
    let section = z.section();
    for _ in 0..5 {
        let y = sampler.conjugate(&section);
        assert!(evaluate_generators(&gens, &y)
            .unwrap()
            .iter()
            .all(Rational::is_zero));
    }
    println!("  vanish on 5 random conjugates of the section");
    let outsider = sampler.sheet_element(&Partition::new(vec![3]).unwrap());
    let values = evaluate_generators(&gens, &outsider).unwrap();
    assert!(values.iter().any(|v| !v.is_zero()));
    println!("  separate a random member of the regular sheet");
}
