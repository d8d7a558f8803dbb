//! Acceptance suite: one test per shipped guarantee, every comparison exact.
//!
//! Each test prints a `criterion N PASS` line (visible with
//! `cargo test --test acceptance -- --nocapture`) and asserts the guarantee
//! with zero tolerance; there is no floating point anywhere in the library.

use std::time::Instant;

use sln_sheets::centralizer::{
    centralizer, centralizer_quotient_basis_check, derived_subalgebra, is_abelian,
    killing_orthogonality_check,
};
use sln_sheets::closure::{closure_contains, evaluate_generators, weyman_generators};
use sln_sheets::quotient::{quotient_point, QuotientPoint};
use sln_sheets::sample::Sampler;
use sln_sheets::verify::{run_verification, VerifyConfig};
use sln_sheets::{
    classify_sheet, nilpotent_representative, Ambient, Partition, Rational,
    RationalMatrix, UniPoly,
};

fn pass(criterion: u32, started: Instant, what: &str) {
    println!(
        "criterion {criterion} PASS ({} ms): {what}",
        started.elapsed().as_millis()
    );
}

fn partitions_up_to(n_max: usize) -> impl Iterator<Item = Partition> {
    (1..=n_max).flat_map(Partition::all_of)
}

#[test]
fn criterion_01_sheet_classification() {
    let started = Instant::now();
    for sigma in partitions_up_to(6) {
        let x = nilpotent_representative(&sigma);
        let profile = x.invariant_factors();
        for i in 1..=sigma.n() {
            assert_eq!(
                profile.q(i),
                &UniPoly::monomial(sigma.part(i)),
                "q_{i} of the representative of {sigma} is not t^{}",
                sigma.part(i)
            );
        }
        assert_eq!(classify_sheet(&x).unwrap().sigma, sigma);
    }
    pass(1, started, "classification recovers every partition, n <= 6");
}

#[test]
fn criterion_02_invariant_factor_tower() {
    let started = Instant::now();
    let mut s = Sampler::new(0x5eed_0002);
    for sigma in partitions_up_to(4) {
        let n = sigma.n();
        for _ in 0..50 {
            let x = s.sheet_element(&sigma);
            let profile = x.invariant_factors();
            // divisibility chain, quotient identity, product = char poly
            profile.verify(&x).unwrap();
            for i in 1..n {
                assert!(profile.q(i + 1).divides(profile.q(i)));
            }
            // conjugation invariance under a fresh unimodular conjugator
            let y = s.conjugate(&x);
            assert_eq!(profile, y.invariant_factors());
        }
    }
    pass(2, started, "tower law on 50 samples per sheet, n <= 4");
}

#[test]
fn criterion_03_quotient_round_trip() {
    let started = Instant::now();
    let mut s = Sampler::new(0x5eed_0003);
    for sigma in partitions_up_to(4) {
        let n = sigma.n();
        for _ in 0..25 {
            // round trip through the section
            let z = s.quotient_point(&sigma);
            assert_eq!(quotient_point(&z.section()).unwrap(), z);

            // reconstruction of the gcd tower from the quotient point
            let x = s.sheet_element(&sigma);
            let profile = x.invariant_factors();
            let zx = quotient_point(&x).unwrap();
            for i in 1..=n {
                assert_eq!(&zx.reconstruct_q(i).unwrap(), profile.big_q(i));
            }

            // trace relation, recomputed from scratch
            let mut relation = Rational::zero();
            for i in 1..=n {
                let s_i = zx.p(i).root_sum().unwrap();
                relation += &(&Rational::from_int(i as i64) * &s_i);
            }
            assert!(relation.is_zero(), "sum i*S(p_i) = {relation} for {zx:?}");
        }
    }
    pass(3, started, "quotient/section round trip and reconstruction, n <= 4");
}

#[test]
fn criterion_04_kernel_characterization() {
    let started = Instant::now();
    let mut s = Sampler::new(0x5eed_0004);
    for sigma in partitions_up_to(4) {
        let n = sigma.n();
        let conjugate = sigma.conjugate();
        for _ in 0..15 {
            let x = s.sheet_element(&sigma);
            let profile = x.invariant_factors();
            for i in 1..=n {
                let bound: usize = (1..=sigma.part(i)).map(|j| conjugate.part(j)).sum();
                assert!(
                    x.kernel_dim(profile.q(i)) >= bound,
                    "dim ker q_{i}(x) < {bound} on the sheet {sigma}"
                );
            }
        }
    }
    pass(4, started, "kernel dimension bound on sheet samples, n <= 4");
}

#[test]
fn criterion_05_closure_order() {
    let started = Instant::now();
    let mut s = Sampler::new(0x5eed_0005);
    let chain: Vec<RationalMatrix> = [vec![3], vec![2, 1], vec![1, 1, 1]]
        .into_iter()
        .map(|parts| nilpotent_representative(&Partition::new(parts).unwrap()))
        .collect();

    // the closure order on the representatives is exactly the chain order
    for (i, x) in chain.iter().enumerate() {
        for (j, y) in chain.iter().enumerate() {
            assert_eq!(
                closure_contains(x, y).unwrap(),
                i <= j,
                "closure order wrong between positions {i} and {j}"
            );
        }
    }

    // reflexivity, transitivity, conjugation invariance on 100 random triples
    let pool: Vec<RationalMatrix> = {
        let mut pool = chain.clone();
        for x in &chain {
            pool.push(s.conjugate(x));
            pool.push(s.conjugate(x));
        }
        for sigma in Partition::all_of(3) {
            pool.push(s.sheet_element(&sigma));
        }
        pool
    };
    let pick = |s: &mut Sampler| s.int_in(0, pool.len() as i64 - 1) as usize;
    for _ in 0..100 {
        let (a, b, c) = (pick(&mut s), pick(&mut s), pick(&mut s));
        let (xa, xb, xc) = (&pool[a], &pool[b], &pool[c]);
        assert!(closure_contains(xa, xa).unwrap(), "reflexivity failed");
        let ab = closure_contains(xa, xb).unwrap();
        let bc = closure_contains(xb, xc).unwrap();
        let ac = closure_contains(xa, xc).unwrap();
        assert!(!(ab && bc) || ac, "transitivity failed");
        let conj = closure_contains(&s.conjugate(xa), &s.conjugate(xb)).unwrap();
        assert_eq!(ab, conj, "conjugation invariance failed");
    }
    pass(5, started, "closure order on nilpotent types of size 3");
}

#[test]
fn criterion_06_weyman_generators() {
    let started = Instant::now();
    let mut s = Sampler::new(0x5eed_0006);

    // every sheet of n <= 3, plus the regular sheet of n = 4
    let mut points: Vec<QuotientPoint> = Vec::new();
    for sigma in partitions_up_to(3) {
        points.push(QuotientPoint::nilpotent_point(sigma.clone()));
        points.push(s.quotient_point(&sigma));
    }
    let regular4 = Partition::new(vec![4]).unwrap();
    points.push(QuotientPoint::nilpotent_point(regular4.clone()));
    points.push(s.quotient_point(&regular4));

    for z in &points {
        let n = z.n();
        let gens = weyman_generators(z).unwrap();

        // candidate pool: orbit conjugates plus every nilpotent type plus
        // random members of other sheets
        let mut fiber: Vec<RationalMatrix> = Vec::new();
        let mut outside: Vec<RationalMatrix> = Vec::new();
        let section = z.section();
        let mut sort = |y: RationalMatrix, z: &QuotientPoint| {
            if z.fiber_contains(&y).unwrap() {
                fiber.push(y);
            } else {
                outside.push(y);
            }
        };
        for _ in 0..20 {
            sort(s.conjugate(&section), z);
        }
        for tau in Partition::all_of(n) {
            let rep = nilpotent_representative(&tau);
            sort(s.conjugate(&rep), z);
            sort(rep, z);
            sort(s.sheet_element(&tau), z);
        }
        assert!(
            fiber.len() >= 20,
            "fewer than 20 fiber points for {z:?}"
        );

        for y in &fiber {
            let values = evaluate_generators(&gens, y).unwrap();
            assert!(
                values.iter().all(Rational::is_zero),
                "a generator fails to vanish on the fiber over {z:?}"
            );
        }
        for y in &outside {
            let values = evaluate_generators(&gens, y).unwrap();
            assert!(
                values.iter().any(|v| !v.is_zero()),
                "no generator separates {y:?} from the fiber over {z:?}"
            );
        }
    }

    // closed form for n = 2: over z = (t^2 + b, 1) the ideal collapses to
    // det(y) - b, up to sign
    for b in [Rational::from_int(5), Rational::new(-2, 3), Rational::zero()] {
        let z = QuotientPoint::new(
            Partition::new(vec![2]).unwrap(),
            vec![
                UniPoly::from_coeffs(vec![b.clone(), Rational::zero(), Rational::one()]),
                UniPoly::one(),
            ],
        )
        .unwrap();
        let gens = weyman_generators(&z).unwrap();
        assert_eq!(gens.len(), 1, "expected a single generator for {z:?}");
        // det(y) - b on traceless 2x2: -y11^2 - y12*y21 - b
        let rendered = gens.rendered().remove(0);
        let expected_core = "-y11^2 - y12*y21";
        assert!(
            rendered.starts_with(expected_core),
            "generator {rendered:?} is not det(y) - b up to sign"
        );
        // and it evaluates to det(y) - b on a sample
        let y = s.sheet_element(&Partition::new(vec![2]).unwrap());
        let det = y.at(0, 0) * y.at(1, 1) - y.at(0, 1) * y.at(1, 0);
        let value = evaluate_generators(&gens, &y).unwrap().remove(0);
        assert_eq!(value, det - b);
    }
    pass(6, started, "generators cut out the fiber, n <= 3 and regular 4");
}

#[test]
fn criterion_07_regular_centralizers() {
    let started = Instant::now();
    let mut s = Sampler::new(0x5eed_0007);
    for n in 2..=5 {
        let sigma = Partition::new(vec![n]).unwrap();
        for _ in 0..25 {
            let x = s.sheet_element(&sigma);
            let cent = centralizer(&x, Ambient::Sl).unwrap();
            assert_eq!(cent.dim(), n - 1, "regular centralizer in size {n}");
            assert!(is_abelian(&cent));
        }
    }
    pass(7, started, "regular centralizers are abelian of dimension n-1, n <= 5");
}

#[test]
fn criterion_08_centralizer_dimensions() {
    let started = Instant::now();
    for sigma in partitions_up_to(6) {
        let x = nilpotent_representative(&sigma);
        let conjugate = sigma.conjugate();
        let expected: usize = conjugate.parts().iter().map(|&c| c * c).sum();
        let b1 = sigma.part(1);

        let cent_gl = centralizer(&x, Ambient::Gl).unwrap();
        assert_eq!(cent_gl.dim(), expected, "gl centralizer of {sigma}");
        let codim_gl = cent_gl.dim() - derived_subalgebra(&cent_gl).dim();
        assert_eq!(codim_gl, b1, "gl codimension of {sigma}");

        let cent_sl = centralizer(&x, Ambient::Sl).unwrap();
        let codim_sl = cent_sl.dim() - derived_subalgebra(&cent_sl).dim();
        assert_eq!(codim_sl, b1 - 1, "sl codimension of {sigma}");

        assert!(
            centralizer_quotient_basis_check(&sigma),
            "projection family is not a quotient basis for {sigma}"
        );
    }
    pass(8, started, "centralizer dimension counts for every type, n <= 6");
}

#[test]
fn criterion_09_killing_orthogonality() {
    let started = Instant::now();
    let mut s = Sampler::new(0x5eed_0009);
    for sigma in partitions_up_to(4) {
        for _ in 0..8 {
            let x = s.sheet_element(&sigma);
            assert!(
                killing_orthogonality_check(&x).unwrap(),
                "orthogonality fails on the sheet {sigma}"
            );
        }
    }
    pass(9, started, "orbit tangent space is the form-orthogonal of the centralizer, n <= 4");
}

#[test]
fn criterion_10_scaling_and_cone() {
    let started = Instant::now();
    let mut s = Sampler::new(0x5eed_000a);
    let factors = [
        Rational::from_int(2),
        Rational::new(1, 2),
        Rational::from_int(-1),
        Rational::new(1, 3),
    ];
    for sigma in partitions_up_to(4) {
        // equivariance of the quotient map under homotheties
        for _ in 0..10 {
            let x = s.sheet_element(&sigma);
            let z = quotient_point(&x).unwrap();
            for eps in &factors {
                assert_eq!(
                    quotient_point(&x.scale(eps)).unwrap(),
                    z.scale(eps).unwrap(),
                    "equivariance fails for eps = {eps} on {sigma}"
                );
            }
        }

        // halving walks every point to the nilpotent one, coefficient by
        // coefficient: at step k each non-leading coefficient of p_i carries
        // an exact factor (1/2)^(k * (deg - d))
        let z = s.quotient_point(&sigma);
        let nilpotent = QuotientPoint::nilpotent_point(sigma.clone());
        for k in 1..=16u32 {
            let eps = Rational::new(1, 1i64 << k);
            let scaled = z.scale(&eps).unwrap();
            for i in 1..=sigma.n() {
                let p = z.p(i);
                let q = scaled.p(i);
                let deg = p.degree().unwrap();
                assert_eq!(q.degree().unwrap(), deg);
                for d in 0..deg {
                    assert_eq!(q.coeff(d), p.coeff(d) * eps.pow(deg - d));
                }
            }
            // exact distance bound toward the fixed point
            let dist = |a: &QuotientPoint| -> Rational {
                let mut m = Rational::zero();
                for i in 1..=sigma.n() {
                    let p = a.p(i);
                    for d in 0..p.degree().unwrap() {
                        let c = p.coeff(d).abs();
                        if c > m {
                            m = c;
                        }
                    }
                }
                m
            };
            assert!(dist(&scaled) <= &dist(&z) * &eps);
            assert_eq!(nilpotent.scale(&eps).unwrap(), nilpotent);
        }
    }
    pass(10, started, "homothety equivariance and convergence to the nilpotent point");
}

#[test]
fn full_suite_passes_end_to_end() {
    let started = Instant::now();
    let report = run_verification(&VerifyConfig {
        n_max: 3,
        seed: 42,
        samples: 10,
    })
    .unwrap();
    for case in &report.cases {
        println!(
            "suite case {} -> {:?}{}",
            case.description,
            case.status,
            case.witness
                .as_ref()
                .map(|w| format!(" witness {w}"))
                .unwrap_or_default()
        );
    }
    assert!(report.all_passed());
    pass(0, started, "bundled verification suite is green at n_max = 3");
}
