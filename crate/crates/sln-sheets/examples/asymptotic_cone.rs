//! Scaling toward the nilpotent cone: the homothety `x -> eps * x` acts on
//! quotient points by rescaling each `p_i`, and as `eps -> 0` every point
//! converges coefficient-by-coefficient to the nilpotent point of its sheet.
//!
//! ```bash
//! cargo run --example asymptotic_cone
//! ```

use sln_sheets::quotient::quotient_point;
use sln_sheets::sample::Sampler;
use sln_sheets::{Partition, QuotientPoint, Rational};

fn main() {
    let sigma = Partition::new(vec![2, 1]).unwrap();
    let mut sampler = Sampler::new(12);
    let x = sampler.sheet_element(&sigma);
    let z = quotient_point(&x).unwrap();
    let nilpotent = QuotientPoint::nilpotent_point(sigma.clone());

    println!("sheet {sigma}, starting point {z}");
    println!("nilpotent point            {nilpotent}");
    println!();

    // the quotient map is equivariant: scaling the matrix scales the point
    let eps = Rational::new(1, 2);
    let scaled_matrix = quotient_point(&x.scale(&eps)).unwrap();
    let scaled_point = z.scale(&eps).unwrap();
    assert_eq!(scaled_matrix, scaled_point);
    println!("quotient(x/2) = quotient(x) scaled by 1/2 = {scaled_point}");
    println!();

    // walk toward the cone: each halving multiplies the coefficient of t^d
    // in a degree-m factor by (1/2)^(m-d), so the point contracts to the
    // nilpotent one
    let mut current = z.clone();
    for k in 1..=8 {
        current = current.scale(&eps).unwrap();
        if k <= 4 || k == 8 {
            println!("after {k} halvings: {current}");
        }
    }
    println!();

    // the nilpotent point is the unique fixed point of the contraction
    assert_eq!(nilpotent.scale(&eps).unwrap(), nilpotent);
    println!("the nilpotent point is fixed by every homothety");

    // scaling by -1 and by integers also acts exactly
    for eps in [Rational::from_int(-1), Rational::from_int(3)] {
        let lhs = quotient_point(&x.scale(&eps)).unwrap();
        let rhs = z.scale(&eps).unwrap();
        assert_eq!(lhs, rhs);
    }
    println!("equivariance holds for eps in {{-1, 3}} as well");
}
