//! The end-to-end verification suite: every module invariant replayed on
//! deterministic random samples, with a machine-readable report.
//!
//! Each case forks its own random stream from the seed and the case name, so
//! cases can run in any order (or concurrently) and the report is identical
//! for identical `(n_max, seed, samples)` up to the elapsed time. A failing
//! case always carries a serialized witness.

use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

use crate::centralizer::{
    centralizer, centralizer_quotient_basis_check, derived_subalgebra, is_abelian,
    killing_orthogonality_check, off_diagonal_components_in_derived,
};
use crate::closure::{evaluate_generators, weyman_generators, IdealGenerators};
use crate::matrix::{Ambient, InvariantFactorProfile, RationalMatrix};
use crate::quotient::{quotient_point, QuotientPoint};
use crate::sample::Sampler;
use crate::sheets::{classify_sheet, enumerate_sheets, nilpotent_representative, Partition};
use crate::{Error, Rational, UniPoly};

/// Overall size guard for the suite.
pub const N_MAX_GUARD: usize = 5;

/// Size guard for the symbolic generator cases.
pub const SYMBOLIC_N_MAX: usize = 3;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 4,
            seed: 42,
            samples: 25,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOutcome {
    pub description: String,
    pub status: CaseStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_max: usize,
    pub seed: u64,
    pub samples: usize,
    pub elapsed_ms: u128,
    pub cases: Vec<CaseOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.status == CaseStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.cases.iter().filter(|c| c.status == CaseStatus::Fail)
    }

    /// The report with the timing removed, for byte-stability comparisons.
    pub fn stable_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("elapsed_ms");
        v
    }
}

type CaseResult = Result<(), Value>;
type CaseFn = fn(&VerifyConfig, &mut Sampler) -> CaseResult;

/// Registered cases; names are sorted and stable, and every invariant in
/// [`INVARIANT_MANIFEST`] maps to one of them.
pub(crate) const CASES: &[(&str, CaseFn)] = &[
    ("centralizer-lab/dimension-constant-on-sheet", case_dimension_constant_on_sheet),
    ("centralizer-lab/killing-orthogonality", case_killing_orthogonality),
    ("centralizer-lab/nilpotent-dimensions", case_nilpotent_dimensions),
    ("centralizer-lab/off-diagonal-absorption", case_off_diagonal_absorption),
    ("centralizer-lab/regular-abelian", case_regular_abelian),
    ("exact-arith/bit-reproducible", case_bit_reproducible),
    ("exact-arith/div-rem-reassembly", case_div_rem_reassembly),
    ("exact-arith/gcd-common-divisor", case_gcd_common_divisor),
    ("exact-arith/rescale-roundtrip", case_rescale_roundtrip),
    ("exact-arith/root-sum-additive", case_root_sum_additive),
    ("minor-gcd/conjugation-invariance", case_conjugation_invariance),
    ("minor-gcd/homothety", case_homothety),
    ("minor-gcd/kernel-characterization", case_kernel_characterization),
    ("minor-gcd/tower-law", case_tower_law),
    ("orbit-closure/antisymmetry-profiles", case_antisymmetry_profiles),
    ("orbit-closure/generator-separation", case_generator_separation),
    ("orbit-closure/generator-vanishing", case_generator_vanishing),
    ("orbit-closure/preorder", case_preorder),
    ("orbit-closure/set-consistency", case_set_consistency),
    ("quotient/cone-limit", case_cone_limit),
    ("quotient/equivariance", case_equivariance),
    ("quotient/reconstruction", case_reconstruction),
    ("quotient/section-roundtrip", case_section_roundtrip),
    ("quotient/separates-orbits", case_separates_orbits),
    ("sheets/classify-representatives", case_classify_representatives),
    ("sheets/conjugate-involution", case_conjugate_involution),
    ("sheets/orbit-dim-centralizer", case_orbit_dim_centralizer),
    ("sheets/orbit-dim-constant-on-sheet", case_orbit_dim_constant),
];

/// One entry per invariant stated by the library modules, naming the case
/// that exercises it. The suite-manifest test checks the mapping stays total.
pub const INVARIANT_MANIFEST: &[(&str, &str)] = &[
    ("exact-arith: div_rem reassembles its input exactly", "exact-arith/div-rem-reassembly"),
    ("exact-arith: gcd divides both inputs and is divided by common divisors", "exact-arith/gcd-common-divisor"),
    ("exact-arith: root_sum is additive on monic products", "exact-arith/root-sum-additive"),
    ("exact-arith: rescale round-trips under eps, 1/eps", "exact-arith/rescale-roundtrip"),
    ("exact-arith: results are exact and bit-reproducible", "exact-arith/bit-reproducible"),
    ("minor-gcd: profiles are conjugation invariant", "minor-gcd/conjugation-invariance"),
    ("minor-gcd: tower law and characteristic polynomial identity", "minor-gcd/tower-law"),
    ("minor-gcd: kernel dimension bound for sheet members", "minor-gcd/kernel-characterization"),
    ("minor-gcd: invariant factors rescale under homotheties", "minor-gcd/homothety"),
    ("sheets: classification recovers the type of every representative", "sheets/classify-representatives"),
    ("sheets: conjugation of partitions is involutive", "sheets/conjugate-involution"),
    ("sheets: orbit dimension formula matches centralizer computation", "sheets/orbit-dim-centralizer"),
    ("sheets: orbit dimension is constant along a sheet", "sheets/orbit-dim-constant-on-sheet"),
    ("quotient: section round-trip is the identity", "quotient/section-roundtrip"),
    ("quotient: reconstructed Q tower matches the minor gcds", "quotient/reconstruction"),
    ("quotient: the quotient map separates orbits", "quotient/separates-orbits"),
    ("quotient: the quotient map is homothety equivariant", "quotient/equivariance"),
    ("quotient: scaling walks every point to the nilpotent one", "quotient/cone-limit"),
    ("orbit-closure: containment is a conjugation-invariant preorder", "orbit-closure/preorder"),
    ("orbit-closure: mutual containment forces equal profiles", "orbit-closure/antisymmetry-profiles"),
    ("orbit-closure: generators vanish on the fiber", "orbit-closure/generator-vanishing"),
    ("orbit-closure: generators separate points outside the fiber", "orbit-closure/generator-separation"),
    ("orbit-closure: vanishing locus equals the fiber on samples", "orbit-closure/set-consistency"),
    ("centralizer-lab: regular centralizers are abelian of rank dimension", "centralizer-lab/regular-abelian"),
    ("centralizer-lab: nilpotent centralizer dimensions and codimensions", "centralizer-lab/nilpotent-dimensions"),
    ("centralizer-lab: off-diagonal components absorb into the derived algebra", "centralizer-lab/off-diagonal-absorption"),
    ("centralizer-lab: orbit tangent space is the form-orthogonal of the centralizer", "centralizer-lab/killing-orthogonality"),
    ("centralizer-lab: centralizer dimension is constant along a sheet", "centralizer-lab/dimension-constant-on-sheet"),
];

/// Runs the whole suite. Rejects `n_max` beyond [`N_MAX_GUARD`].
pub fn run_verification(cfg: &VerifyConfig) -> Result<VerificationReport, Error> {
    if cfg.n_max == 0 || cfg.n_max > N_MAX_GUARD {
        return Err(Error::GuardExceeded {
            n: cfg.n_max,
            limit: N_MAX_GUARD,
        });
    }
    let start = Instant::now();
    let root = Sampler::new(cfg.seed);
    let mut cases: Vec<CaseOutcome> = CASES
        .iter()
        .map(|(name, run)| {
            let mut sampler = root.fork(name);
            match run(cfg, &mut sampler) {
                Ok(()) => CaseOutcome {
                    description: (*name).into(),
                    status: CaseStatus::Pass,
                    witness: None,
                },
                Err(witness) => CaseOutcome {
                    description: (*name).into(),
                    status: CaseStatus::Fail,
                    witness: Some(witness),
                },
            }
        })
        .collect();
    cases.sort_by(|a, b| a.description.cmp(&b.description));
    Ok(VerificationReport {
        suite: "sln-sheets".into(),
        n_max: cfg.n_max,
        seed: cfg.seed,
        samples: cfg.samples,
        elapsed_ms: start.elapsed().as_millis(),
        cases,
    })
}

// ---- shared helpers ----

fn random_poly(s: &mut Sampler, max_deg: usize) -> UniPoly {
    let len = s.int_in(0, max_deg as i64 + 1) as usize;
    UniPoly::from_coeffs((0..len).map(|_| s.rational()).collect())
}

fn random_nonzero_poly(s: &mut Sampler, max_deg: usize) -> UniPoly {
    loop {
        let p = random_poly(s, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_monic(s: &mut Sampler, deg: usize) -> UniPoly {
    let mut cs: Vec<Rational> = (0..deg).map(|_| s.rational()).collect();
    cs.push(Rational::one());
    UniPoly::from_coeffs(cs)
}

/// Sample count per sheet, shrinking with the matrix size.
fn per_sheet(cfg: &VerifyConfig, n: usize) -> usize {
    (cfg.samples >> n.saturating_sub(3)).max(2)
}

fn scaling_factors() -> Vec<Rational> {
    vec![
        Rational::from_int(2),
        Rational::new(1, 2),
        Rational::from_int(-1),
        Rational::new(1, 3),
    ]
}

// ---- exact-arith cases ----

fn case_div_rem_reassembly(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for _ in 0..cfg.samples.max(10) {
        let a = random_poly(s, 5);
        let b = random_nonzero_poly(s, 3);
        let (q, r) = a.div_rem(&b).expect("b is nonzero");
        let ok = &(&q * &b) + &r == a
            && r.degree().is_none_or(|rd| rd < b.degree().expect("nonzero"));
        if !ok {
            return Err(json!({"a": a, "b": b, "q": q, "r": r}));
        }
    }
    Ok(())
}

fn case_gcd_common_divisor(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for _ in 0..cfg.samples.max(10) {
        let g = random_nonzero_poly(s, 2);
        let u = random_nonzero_poly(s, 2);
        let v = random_nonzero_poly(s, 2);
        let a = &g * &u;
        let b = &g * &v;
        let d = a.gcd(&b).expect("not both zero");
        if !(d.divides(&a) && d.divides(&b) && g.divides(&d)) {
            return Err(json!({"g": g, "u": u, "v": v, "gcd": d}));
        }
    }
    Ok(())
}

fn case_root_sum_additive(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for _ in 0..cfg.samples.max(10) {
        let dp = s.int_in(0, 4) as usize;
        let p = random_monic(s, dp);
        let dq = s.int_in(0, 4) as usize;
        let q = random_monic(s, dq);
        let lhs = (&p * &q).root_sum().expect("monic product");
        let rhs = p.root_sum().expect("monic") + q.root_sum().expect("monic");
        if lhs != rhs {
            return Err(json!({"p": p, "q": q, "lhs": lhs, "rhs": rhs}));
        }
    }
    Ok(())
}

fn case_rescale_roundtrip(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for _ in 0..cfg.samples.max(10) {
        let deg = s.int_in(0, 5) as usize;
        let p = random_monic(s, deg);
        let eps = s.nonzero_rational();
        let back = p
            .rescale(&eps)
            .and_then(|q| q.rescale(&eps.recip().expect("nonzero")))
            .expect("eps is nonzero");
        if back != p {
            return Err(json!({"p": p, "eps": eps, "back": back}));
        }
    }
    Ok(())
}

fn case_bit_reproducible(cfg: &VerifyConfig, _s: &mut Sampler) -> CaseResult {
    // run the same pipeline from two identically seeded streams and compare
    // the serialized outputs byte for byte
    let run = |seed: u64| -> String {
        let mut s = Sampler::new(seed).fork("bit-reproducible-inner");
        let sigma = Partition::new(vec![2, 1]).expect("valid partition");
        let x = s.sheet_element(&sigma);
        let profile = x.invariant_factors();
        let z = quotient_point(&x).expect("sheet members are traceless");
        serde_json::to_string(&(profile, &z, z.chart())).expect("serializable")
    };
    let a = run(cfg.seed);
    let b = run(cfg.seed);
    if a != b {
        return Err(json!({"first": a, "second": b}));
    }
    Ok(())
}

// ---- minor-gcd cases ----

fn case_conjugation_invariance(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n) {
                let x = s.sheet_element(&sigma);
                let y = s.conjugate(&x);
                if x.invariant_factors() != y.invariant_factors() {
                    return Err(json!({"sigma": sigma, "x": x, "conjugate": y}));
                }
            }
        }
    }
    Ok(())
}

fn case_tower_law(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n) {
                let x = s.sheet_element(&sigma);
                let profile = x.invariant_factors();
                if let Err(violation) = profile.verify(&x) {
                    return Err(json!({"matrix": x, "violation": violation}));
                }
            }
        }
    }
    Ok(())
}

fn case_kernel_characterization(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            let conj = sigma.conjugate();
            for _ in 0..per_sheet(cfg, n).min(8) {
                let x = s.sheet_element(&sigma);
                let profile = x.invariant_factors();
                for i in 1..=n {
                    let bound: usize = (1..=sigma.part(i)).map(|j| conj.part(j)).sum();
                    let dim = x.kernel_dim(profile.q(i));
                    if dim < bound {
                        return Err(json!({
                            "sigma": sigma, "x": x, "i": i,
                            "kernel_dim": dim, "bound": bound
                        }));
                    }
                }
            }
        }
    }
    Ok(())
}

fn case_homothety(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n).min(6) {
                let x = s.sheet_element(&sigma);
                let profile = x.invariant_factors();
                for eps in scaling_factors() {
                    let scaled = x.scale(&eps).invariant_factors();
                    for i in 1..=n {
                        let expected = profile.q(i).rescale(&eps).expect("q_i is monic");
                        if scaled.q(i) != &expected {
                            return Err(json!({
                                "sigma": sigma, "x": x, "eps": eps, "i": i
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

// ---- sheets cases ----

fn case_classify_representatives(_cfg: &VerifyConfig, _s: &mut Sampler) -> CaseResult {
    for n in 1..=6 {
        for sigma in Partition::all_of(n) {
            let x = nilpotent_representative(&sigma);
            let profile = x.invariant_factors();
            for i in 1..=n {
                if profile.q(i) != &UniPoly::monomial(sigma.part(i)) {
                    return Err(json!({"sigma": sigma, "i": i, "q": profile.q(i)}));
                }
            }
            let d = classify_sheet(&x).expect("representatives are traceless");
            if d.sigma != sigma {
                return Err(json!({"expected": sigma, "classified": d.sigma}));
            }
        }
    }
    Ok(())
}

fn case_conjugate_involution(_cfg: &VerifyConfig, _s: &mut Sampler) -> CaseResult {
    for n in 1..=12 {
        for sigma in Partition::all_of(n) {
            if sigma.conjugate().conjugate() != sigma {
                return Err(json!({"sigma": sigma}));
            }
        }
    }
    Ok(())
}

fn case_orbit_dim_centralizer(cfg: &VerifyConfig, _s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max.min(5) {
        for d in enumerate_sheets(n) {
            let x = nilpotent_representative(&d.sigma);
            let cent = centralizer(&x, Ambient::Sl).expect("traceless");
            let brute = (n * n - 1) - cent.dim();
            if brute != d.orbit_dim {
                return Err(json!({
                    "sigma": d.sigma, "formula": d.orbit_dim, "brute_force": brute
                }));
            }
        }
    }
    Ok(())
}

fn case_orbit_dim_constant(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max.min(5) {
        for d in enumerate_sheets(n) {
            for _ in 0..per_sheet(cfg, n).min(5) {
                let x = s.sheet_element(&d.sigma);
                let cent = centralizer(&x, Ambient::Sl).expect("traceless");
                let dim = (n * n - 1) - cent.dim();
                if dim != d.orbit_dim {
                    return Err(json!({
                        "sigma": d.sigma, "x": x,
                        "expected": d.orbit_dim, "observed": dim
                    }));
                }
            }
        }
    }
    Ok(())
}

// ---- quotient cases ----

fn case_section_roundtrip(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n) {
                let z = s.quotient_point(&sigma);
                let back = quotient_point(&z.section()).expect("sections are traceless");
                if back != z {
                    return Err(json!({"sigma": sigma, "z": z, "back": back}));
                }
            }
        }
    }
    Ok(())
}

fn case_reconstruction(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n) {
                let x = s.sheet_element(&sigma);
                let profile = x.invariant_factors();
                let z = quotient_point(&x).expect("traceless");
                for i in 1..=n {
                    let rebuilt = z.reconstruct_q(i).expect("index in range");
                    if &rebuilt != profile.big_q(i) {
                        return Err(json!({
                            "sigma": sigma, "x": x, "i": i,
                            "reconstructed": rebuilt, "expected": profile.big_q(i)
                        }));
                    }
                }
            }
        }
    }
    Ok(())
}

fn case_separates_orbits(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n).min(8) {
                let x = s.sheet_element(&sigma);
                let z = quotient_point(&x).expect("traceless");
                let conj = quotient_point(&s.conjugate(&x)).expect("traceless");
                if conj != z {
                    return Err(json!({"sigma": sigma, "x": x}));
                }
            }
            // distinct points have distinct invariant-factor profiles
            if sigma.part(1) > 1 {
                let a = s.quotient_point(&sigma);
                let b = loop {
                    let b = s.quotient_point(&sigma);
                    if b != a {
                        break b;
                    }
                };
                if a.section().invariant_factors() == b.section().invariant_factors() {
                    return Err(json!({"sigma": sigma, "a": a, "b": b}));
                }
            }
        }
    }
    Ok(())
}

fn case_equivariance(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n).min(6) {
                let x = s.sheet_element(&sigma);
                let z = quotient_point(&x).expect("traceless");
                for eps in scaling_factors() {
                    let lhs = quotient_point(&x.scale(&eps)).expect("still traceless");
                    let rhs = z.scale(&eps).expect("eps is nonzero");
                    if lhs != rhs {
                        return Err(json!({"sigma": sigma, "x": x, "eps": eps}));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Largest absolute value of a non-leading coefficient, the exact distance
/// to the nilpotent point of the sheet.
fn cone_distance(z: &QuotientPoint) -> Rational {
    let mut dist = Rational::zero();
    for p in z.p_list() {
        let deg = p.degree().expect("monic");
        for d in 0..deg {
            let a = p.coeff(d).abs();
            if a > dist {
                dist = a;
            }
        }
    }
    dist
}

fn case_cone_limit(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    let half = Rational::new(1, 2);
    for n in 1..=cfg.n_max {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n).min(4) {
                let z = s.quotient_point(&sigma);
                let nilpotent = QuotientPoint::nilpotent_point(sigma.clone());
                let d0 = cone_distance(&z);
                let mut iterated = z.clone();
                let mut bound = d0.clone();
                for k in 1..=10u32 {
                    iterated = iterated.scale(&half).expect("nonzero");
                    let direct = z.scale(&Rational::new(1, 1 << k)).expect("nonzero");
                    if iterated != direct {
                        return Err(json!({"sigma": sigma, "z": z, "k": k}));
                    }
                    bound = &bound * &half;
                    if cone_distance(&iterated) > bound {
                        return Err(json!({
                            "sigma": sigma, "z": z, "k": k,
                            "distance": cone_distance(&iterated), "bound": bound
                        }));
                    }
                }
                // the fixed point of the contraction is the nilpotent point
                if nilpotent.scale(&half).expect("nonzero") != nilpotent {
                    return Err(json!({"sigma": sigma}));
                }
            }
        }
    }
    Ok(())
}

// ---- orbit-closure cases ----

/// Divisibility order on precomputed profiles.
fn profile_le(a: &InvariantFactorProfile, b: &InvariantFactorProfile) -> bool {
    (1..=a.n()).all(|i| a.big_q(i).divides(b.big_q(i)))
}

/// A mixed pool of matrices of size `n` with their profiles.
fn closure_pool(
    n: usize,
    s: &mut Sampler,
) -> Vec<(RationalMatrix, InvariantFactorProfile)> {
    let mut pool = Vec::new();
    for sigma in Partition::all_of(n) {
        let rep = nilpotent_representative(&sigma);
        pool.push(s.conjugate(&rep));
        pool.push(rep);
        pool.push(s.sheet_element(&sigma));
    }
    pool.into_iter()
        .map(|x| {
            let p = x.invariant_factors();
            (x, p)
        })
        .collect()
}

fn case_preorder(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 2..=cfg.n_max.min(4) {
        let pool = closure_pool(n, s);
        let m = pool.len();
        let le: Vec<Vec<bool>> = (0..m)
            .map(|i| (0..m).map(|j| profile_le(&pool[i].1, &pool[j].1)).collect())
            .collect();
        for i in 0..m {
            if !le[i][i] {
                return Err(json!({"reflexivity": pool[i].0}));
            }
            for j in 0..m {
                for k in 0..m {
                    if le[i][j] && le[j][k] && !le[i][k] {
                        return Err(json!({
                            "transitivity": [&pool[i].0, &pool[j].0, &pool[k].0]
                        }));
                    }
                }
            }
        }
        // conjugation invariance in both arguments
        for _ in 0..cfg.samples.min(10) {
            let i = s.int_in(0, m as i64 - 1) as usize;
            let j = s.int_in(0, m as i64 - 1) as usize;
            let xc = s.conjugate(&pool[i].0);
            let yc = s.conjugate(&pool[j].0);
            let direct = le[i][j];
            let conjugated = profile_le(&xc.invariant_factors(), &yc.invariant_factors());
            if direct != conjugated {
                return Err(json!({"x": pool[i].0, "y": pool[j].0}));
            }
        }
    }
    Ok(())
}

fn case_antisymmetry_profiles(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 2..=cfg.n_max.min(4) {
        let pool = closure_pool(n, s);
        for (x, px) in &pool {
            for (y, py) in &pool {
                if profile_le(px, py) && profile_le(py, px) && px != py {
                    return Err(json!({"x": x, "y": y}));
                }
            }
        }
    }
    Ok(())
}

/// Builds generator sets over a sheet together with fiber members and
/// outsiders, shared by the three generator cases.
fn generator_fixtures(
    cfg: &VerifyConfig,
    s: &mut Sampler,
) -> Vec<(IdealGenerators, Vec<RationalMatrix>, Vec<RationalMatrix>)> {
    let mut fixtures = Vec::new();
    for n in 1..=cfg.n_max.min(SYMBOLIC_N_MAX) {
        for sigma in Partition::all_of(n) {
            let points = vec![
                QuotientPoint::nilpotent_point(sigma.clone()),
                s.quotient_point(&sigma),
            ];
            for z in points {
                let gens = weyman_generators(&z).expect("n is under the guard");
                let mut candidates: Vec<RationalMatrix> = Vec::new();
                let section = z.section();
                for _ in 0..cfg.samples.max(20) {
                    candidates.push(s.conjugate(&section));
                }
                for tau in Partition::all_of(n) {
                    let rep = nilpotent_representative(&tau);
                    candidates.push(s.conjugate(&rep));
                    candidates.push(rep);
                    candidates.push(s.sheet_element(&tau));
                }
                let mut members = Vec::new();
                let mut outsiders = Vec::new();
                for y in candidates {
                    if z.fiber_contains(&y).expect("same size, traceless") {
                        members.push(y);
                    } else {
                        outsiders.push(y);
                    }
                }
                fixtures.push((gens, members, outsiders));
            }
        }
    }
    fixtures
}

fn case_generator_vanishing(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for (gens, members, _) in generator_fixtures(cfg, s) {
        for y in &members {
            let values = evaluate_generators(&gens, y).expect("size matches");
            if !values.iter().all(Rational::is_zero) {
                return Err(json!({
                    "sigma": gens.sigma(), "z": gens.quotient_point(), "y": y,
                    "values": values
                }));
            }
        }
    }
    Ok(())
}

fn case_generator_separation(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for (gens, _, outsiders) in generator_fixtures(cfg, s) {
        for y in &outsiders {
            let values = evaluate_generators(&gens, y).expect("size matches");
            if values.iter().all(Rational::is_zero) {
                return Err(json!({
                    "sigma": gens.sigma(), "z": gens.quotient_point(), "y": y
                }));
            }
        }
    }
    Ok(())
}

fn case_set_consistency(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for (gens, members, outsiders) in generator_fixtures(cfg, s) {
        let z = gens.quotient_point();
        for (y, expected) in members
            .iter()
            .map(|y| (y, true))
            .chain(outsiders.iter().map(|y| (y, false)))
        {
            let vanishes = evaluate_generators(&gens, y)
                .expect("size matches")
                .iter()
                .all(Rational::is_zero);
            if vanishes != expected {
                return Err(json!({"z": z, "y": y, "vanishes": vanishes}));
            }
        }
    }
    Ok(())
}

// ---- centralizer-lab cases ----

fn case_regular_abelian(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 2..=cfg.n_max.min(5) {
        let sigma = Partition::new(vec![n]).expect("valid");
        for _ in 0..per_sheet(cfg, n) {
            let x = s.sheet_element(&sigma);
            let cent = centralizer(&x, Ambient::Sl).expect("traceless");
            if cent.dim() != n - 1 || !is_abelian(&cent) {
                return Err(json!({
                    "x": x, "dim": cent.dim(), "abelian": is_abelian(&cent)
                }));
            }
        }
    }
    Ok(())
}

fn case_nilpotent_dimensions(cfg: &VerifyConfig, _s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max.min(6) {
        for sigma in Partition::all_of(n) {
            let x = nilpotent_representative(&sigma);
            let conj = sigma.conjugate();
            let expected: usize = conj.parts().iter().map(|&c| c * c).sum();
            let cent_gl = centralizer(&x, Ambient::Gl).expect("gl");
            if cent_gl.dim() != expected {
                return Err(json!({
                    "sigma": sigma, "dim": cent_gl.dim(), "expected": expected
                }));
            }
            let b1 = sigma.part(1);
            let codim_gl = cent_gl.dim() - derived_subalgebra(&cent_gl).dim();
            if codim_gl != b1 {
                return Err(json!({"sigma": sigma, "codim_gl": codim_gl, "b1": b1}));
            }
            let cent_sl = centralizer(&x, Ambient::Sl).expect("traceless");
            let codim_sl = cent_sl.dim() - derived_subalgebra(&cent_sl).dim();
            if codim_sl != b1 - 1 {
                return Err(json!({"sigma": sigma, "codim_sl": codim_sl, "b1": b1}));
            }
            if !centralizer_quotient_basis_check(&sigma) {
                return Err(json!({"sigma": sigma, "projection_family": "not a basis"}));
            }
        }
    }
    Ok(())
}

fn case_off_diagonal_absorption(cfg: &VerifyConfig, _s: &mut Sampler) -> CaseResult {
    for n in 2..=cfg.n_max.min(5) {
        for sigma in Partition::all_of(n) {
            if sigma.num_parts() < 2 {
                continue;
            }
            if !off_diagonal_components_in_derived(&sigma) {
                return Err(json!({"sigma": sigma}));
            }
        }
    }
    Ok(())
}

fn case_killing_orthogonality(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max.min(5) {
        for sigma in Partition::all_of(n) {
            for _ in 0..per_sheet(cfg, n).min(4) {
                let x = s.sheet_element(&sigma);
                if !killing_orthogonality_check(&x).expect("traceless") {
                    return Err(json!({"sigma": sigma, "x": x}));
                }
            }
        }
    }
    Ok(())
}

fn case_dimension_constant_on_sheet(cfg: &VerifyConfig, s: &mut Sampler) -> CaseResult {
    for n in 1..=cfg.n_max.min(5) {
        for d in enumerate_sheets(n) {
            let expected = (n * n - 1) - d.orbit_dim;
            for _ in 0..per_sheet(cfg, n).min(4) {
                let x = s.sheet_element(&d.sigma);
                let dim = centralizer(&x, Ambient::Sl).expect("traceless").dim();
                let conj_dim = centralizer(&s.conjugate(&x), Ambient::Sl)
                    .expect("traceless")
                    .dim();
                if dim != expected || conj_dim != dim {
                    return Err(json!({
                        "sigma": d.sigma, "x": x,
                        "dim": dim, "conjugate_dim": conj_dim, "expected": expected
                    }));
                }
            }
        }
    }
    Ok(())
}
