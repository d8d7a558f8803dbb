//! Centralizer invariants: dimensions, derived subalgebras, abelianness,
//! and the orthogonality between orbit tangent spaces and centralizers.
//!
//! ```bash
//! cargo run --example centralizers
//! ```

use sln_sheets::centralizer::{
    centralizer, centralizer_quotient_basis_check, derived_subalgebra, dimension_report,
    is_abelian, killing_orthogonality_check,
};
use sln_sheets::sample::Sampler;
use sln_sheets::{enumerate_sheets, nilpotent_representative, Ambient, Partition};

fn main() {
    // dimension table for the nilpotent types of size 4: the centralizer in
    // all matrices has dimension sum c_j^2, and its derived subalgebra has
    // codimension b_1
    println!("nilpotent types of size 4:");
    println!(
        "{:12} {:>8} {:>8} {:>6} {:>8}",
        "type", "cent_gl", "derived", "codim", "abelian"
    );
    for d in enumerate_sheets(4) {
        let x = nilpotent_representative(&d.sigma);
        let report = dimension_report(&x, Ambient::Gl).unwrap();
        println!(
            "{:12} {:>8} {:>8} {:>6} {:>8}",
            d.sigma.to_string(),
            report.centralizer_dim,
            report.derived_dim,
            report.codim,
            report.abelian
        );
        assert!(centralizer_quotient_basis_check(&d.sigma));
    }
    println!();

    // regular elements have abelian centralizers of dimension n - 1
    let mut sampler = Sampler::new(31);
    for n in 2..=4 {
        let sigma = Partition::new(vec![n]).unwrap();
        let x = sampler.sheet_element(&sigma);
        let cent = centralizer(&x, Ambient::Sl).unwrap();
        println!(
            "random regular {n} x {n}: centralizer dim {} (abelian: {})",
            cent.dim(),
            is_abelian(&cent)
        );
        assert_eq!(cent.dim(), n - 1);
    }
    println!();

    // the derived subalgebra of the full matrix algebra is the traceless one
    let gl3 = sln_sheets::centralizer::ambient_basis(3, Ambient::Gl);
    let gl3 = sln_sheets::centralizer::MatrixSubspace::new(3, Ambient::Gl, gl3).unwrap();
    println!("dim [gl(3), gl(3)] = {}", derived_subalgebra(&gl3).dim());
    println!();

    // the invariant trace form exchanges orbit tangent spaces with
    // centralizers, for every sampled point of every small sheet
    for n in 2..=4 {
        for sigma in Partition::all_of(n) {
            let x = sampler.sheet_element(&sigma);
            assert!(killing_orthogonality_check(&x).unwrap());
        }
    }
    println!("orthogonal complement of the orbit tangent space = centralizer (n <= 4)");
}
