//! Coordinates on the quotient of a sheet: the tuple (p_1, ..., p_n), its
//! affine chart, and the companion-block section.
//!
//! ```bash
//! cargo run --example quotient_coordinates
//! ```

use sln_sheets::sample::Sampler;
use sln_sheets::{quotient_point, Ambient, Partition, QuotientPoint, RationalMatrix};

fn main() {
    // start from a concrete matrix: diag(-2, 1, 1) lies in the sheet (2,1)
    let x = RationalMatrix::from_int_rows(
        &[&[-2, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        Ambient::Sl,
    )
    .unwrap();
    let z = quotient_point(&x).unwrap();
    println!("x =\n{x}");
    println!("quotient point  {z}");
    println!("sheet           {}", z.sigma());
    let chart: Vec<String> = z.chart().iter().map(|c| c.to_string()).collect();
    println!("affine chart    [{}]", chart.join(", "));

    // the section picks a canonical representative of the orbit
    let s = z.section();
    println!("section =\n{s}");
    assert_eq!(quotient_point(&s).unwrap(), z);
    println!("round trip through the section returns the same point");
    println!();

    // the map is constant on orbits: conjugation never moves the point
    let mut sampler = Sampler::new(7);
    let conjugated = sampler.conjugate(&x);
    assert_eq!(quotient_point(&conjugated).unwrap(), z);
    println!("a random conjugate maps to the same quotient point");
    println!();

    // random points of a larger sheet: the trace relation pins one
    // subleading coefficient, leaving b_1 - 1 free coordinates
    let sigma = Partition::new(vec![3, 2]).unwrap();
    for _ in 0..3 {
        let z = sampler.quotient_point(&sigma);
        let chart: Vec<String> = z.chart().iter().map(|c| c.to_string()).collect();
        println!("random point of the sheet {}: {z}", sigma);
        println!("  chart [{}]", chart.join(", "));
    }

    // rebuilding from the chart inverts the coordinate map
    let z = sampler.quotient_point(&sigma);
    let rebuilt = QuotientPoint::from_chart(sigma, &z.chart()).unwrap();
    assert_eq!(rebuilt, z);
    println!("chart coordinates rebuild the point exactly");
}
