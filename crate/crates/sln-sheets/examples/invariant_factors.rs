//! Compute the invariant-factor tower of `x - tI` for a few matrices.
//!
//! ```bash
//! cargo run --example invariant_factors
//! ```

use sln_sheets::{Ambient, RationalMatrix};

fn show(label: &str, x: &RationalMatrix) {
    println!("{label}:");
    println!("{x}");
    let profile = x.invariant_factors();
    for (i, q) in profile.big_q_list().iter().enumerate() {
        println!("  Q_{} = {}", i + 1, q);
    }
    for (i, q) in profile.q_list().iter().enumerate() {
        println!("  q_{} = {}", i + 1, q);
    }
    println!("  characteristic polynomial {}", profile.char_poly());
    println!("  minimal polynomial        {}", profile.q(1));
    println!();
}

fn main() {
    // a regular nilpotent: the whole tower collapses to Q_1 = t^3
    let j3 = RationalMatrix::from_int_rows(
        &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]],
        Ambient::Sl,
    )
    .unwrap();
    show("regular nilpotent J_3", &j3);

    // a subregular nilpotent of type (2,1)
    let e12 = RationalMatrix::from_int_rows(
        &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]],
        Ambient::Sl,
    )
    .unwrap();
    show("nilpotent of type (2,1)", &e12);

    // a semisimple matrix with a repeated eigenvalue
    let diag = RationalMatrix::from_int_rows(
        &[&[-2, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        Ambient::Sl,
    )
    .unwrap();
    show("diag(-2, 1, 1)", &diag);

    // a dense example: the tower is trivial below the characteristic polynomial
    let dense = RationalMatrix::from_int_rows(
        &[&[1, 2, 3], &[0, -4, 1], &[5, 1, 3]],
        Ambient::Sl,
    )
    .unwrap();
    show("a dense traceless matrix", &dense);
}
