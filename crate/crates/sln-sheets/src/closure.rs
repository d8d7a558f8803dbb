//! The orbit-closure divisibility criterion and the symbolic generators of
//! the fiberwise closure ideal.
//!
//! `y` lies in the closure of the conjugation orbit of `x` exactly when
//! `Q_i^x` divides `Q_i^y` for all `i`. Over a quotient point `z` the same
//! condition can be written symbolically: divide each `(n+1-i)`-minor of the
//! generic traceless matrix `y - tI` by `Q_i^z(t)` and collect the remainder
//! coefficients. The resulting polynomials in the entries of `y` vanish at a
//! traceless matrix exactly when it lies in the fiber over `z`.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::matrix::{minor_levels, RationalMatrix};
use crate::mpoly::{MultiPoly, NamedPoly};
use crate::quotient::QuotientPoint;
use crate::sheets::Partition;
use crate::{Error, Rational};

/// Largest `n` for which symbolic generators are computed by default; the
/// minor count and monomial growth explode beyond it.
pub const DEFAULT_SYMBOLIC_LIMIT: usize = 4;

/// True when `y` is in the closure of the orbit of `x`, i.e. `Q_i^x | Q_i^y`
/// for every `i`.
pub fn closure_contains(x: &RationalMatrix, y: &RationalMatrix) -> Result<bool, Error> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    x.require_traceless()?;
    y.require_traceless()?;
    let px = x.invariant_factors();
    let py = y.invariant_factors();
    for i in 1..=x.n() {
        if !px.big_q(i).divides(py.big_q(i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Variable index of the entry `y_rc` (0-based row/column) in `n^2 + 1` vars.
fn entry_var(n: usize, r: usize, c: usize) -> usize {
    r * n + c
}

/// Variable index of `t`.
fn t_var(n: usize) -> usize {
    n * n
}

/// Human-readable variable names: `y11, ..., ynn, t`.
pub fn var_name(n: usize, index: usize) -> String {
    if index == t_var(n) {
        "t".into()
    } else {
        format!("y{}{}", index / n + 1, index % n + 1)
    }
}

/// The generic characteristic matrix `y - tI` with entries in the variables
/// `y_11, ..., y_nn, t`. Tracelessness is built in: `y_nn` is replaced by
/// `-(y_11 + ... + y_{n-1,n-1})`.
pub fn symbolic_char_matrix(n: usize) -> Vec<Vec<MultiPoly>> {
    let nvars = n * n + 1;
    let t = MultiPoly::var(nvars, t_var(n));
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let entry = if r == n - 1 && c == n - 1 {
                        let mut acc = MultiPoly::zero(nvars);
                        for k in 0..n - 1 {
                            acc = &acc - &MultiPoly::var(nvars, entry_var(n, k, k));
                        }
                        acc
                    } else {
                        MultiPoly::var(nvars, entry_var(n, r, c))
                    };
                    if r == c {
                        &entry - &t
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect()
}

/// Generators of the closure ideal of the fiber over `z`: all remainder
/// coefficients from dividing the `(n+1-i)`-minors of `y - tI` by `Q_i^z(t)`,
/// with identically-zero ones dropped. Every generator has `t`-degree zero.
#[derive(Clone, PartialEq, Debug)]
pub struct IdealGenerators {
    sigma: Partition,
    z: QuotientPoint,
    gens: Vec<MultiPoly>,
}

impl IdealGenerators {
    pub fn sigma(&self) -> &Partition {
        &self.sigma
    }

    pub fn quotient_point(&self) -> &QuotientPoint {
        &self.z
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Renders each generator with the `y_rc` variable names.
    pub fn rendered(&self) -> Vec<String> {
        let n = self.z.n();
        self.gens
            .iter()
            .map(|g| g.render(|i| var_name(n, i)))
            .collect()
    }
}

impl Serialize for IdealGenerators {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a, G: Serialize> {
            sigma: &'a Partition,
            z: &'a QuotientPoint,
            generators: G,
        }
        struct GenList<'a> {
            n: usize,
            gens: &'a [MultiPoly],
        }
        impl Serialize for GenList<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.gens.len()))?;
                for g in self.gens {
                    seq.serialize_element(&NamedPoly {
                        poly: g,
                        name: |i| var_name(self.n, i),
                    })?;
                }
                seq.end()
            }
        }
        Repr {
            sigma: &self.sigma,
            z: &self.z,
            generators: GenList {
                n: self.z.n(),
                gens: &self.gens,
            },
        }
        .serialize(serializer)
    }
}

/// Computes the closure-ideal generators for the fiber over `z`, guarded by
/// [`DEFAULT_SYMBOLIC_LIMIT`].
pub fn weyman_generators(z: &QuotientPoint) -> Result<IdealGenerators, Error> {
    weyman_generators_with_limit(z, DEFAULT_SYMBOLIC_LIMIT)
}

/// Same as [`weyman_generators`] with an explicit size guard.
pub fn weyman_generators_with_limit(
    z: &QuotientPoint,
    limit: usize,
) -> Result<IdealGenerators, Error> {
    let n = z.n();
    if n > limit {
        return Err(Error::GuardExceeded { n, limit });
    }
    let nvars = n * n + 1;
    let sym = symbolic_char_matrix(n);
    let levels = minor_levels(&sym, n, MultiPoly::zero(nvars));

    let mut gens: Vec<MultiPoly> = Vec::new();
    for i in 1..=n {
        let cap_q = z.reconstruct_q(i)?;
        let deg = cap_q.degree().expect("reconstructed Q is monic");
        if deg == 0 {
            continue; // division by 1 leaves no remainder
        }
        for minor in &levels[n - i] {
            // long division in t by the monic scalar polynomial cap_q
            let mut coeffs = minor.coefficients_in(t_var(n));
            while coeffs.len() > deg {
                let lead = coeffs.pop().expect("length checked");
                if lead.is_zero() {
                    continue;
                }
                let shift = coeffs.len() - deg;
                for d in 0..deg {
                    coeffs[shift + d] = &coeffs[shift + d] - &lead.scale(&cap_q.coeff(d));
                }
            }
            for rem in coeffs {
                if !rem.is_zero() {
                    gens.push(rem);
                }
            }
        }
    }
    Ok(IdealGenerators {
        sigma: z.sigma().clone(),
        z: z.clone(),
        gens,
    })
}

/// Evaluates every generator at the entries of a traceless matrix `y`.
/// The fiber over `z` consists exactly of the matrices where all generators
/// vanish.
pub fn evaluate_generators(
    gens: &IdealGenerators,
    y: &RationalMatrix,
) -> Result<Vec<Rational>, Error> {
    let n = gens.z.n();
    if y.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: y.n(),
        });
    }
    y.require_traceless()?;
    let mut values = Vec::with_capacity(n * n + 1);
    for r in 0..n {
        for c in 0..n {
            values.push(y.at(r, c).clone());
        }
    }
    values.push(Rational::zero()); // t does not occur in the generators
    Ok(gens.gens.iter().map(|g| g.eval(&values)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Ambient;
    use crate::sheets::nilpotent_representative;
    use crate::UniPoly;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sl(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows, Ambient::Sl).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn closure_on_nilpotent_chain() {
        let j3 = nilpotent_representative(&pt(&[3]));
        let e12 = nilpotent_representative(&pt(&[2, 1]));
        assert!(closure_contains(&j3, &e12).unwrap());
        assert!(!closure_contains(&e12, &j3).unwrap());
        assert!(closure_contains(&j3, &j3).unwrap());
    }

    #[test]
    fn closure_rejects_size_mismatch() {
        let j3 = nilpotent_representative(&pt(&[3]));
        let j2 = nilpotent_representative(&pt(&[2]));
        assert!(closure_contains(&j3, &j2).is_err());
    }

    #[test]
    fn symbolic_matrix_eliminates_trace() {
        let m = symbolic_char_matrix(2);
        let nvars = 5;
        let y11 = MultiPoly::var(nvars, 0);
        let t = MultiPoly::var(nvars, 4);
        assert_eq!(m[0][0], &y11 - &t);
        assert_eq!(m[0][1], MultiPoly::var(nvars, 1));
        assert_eq!(m[1][0], MultiPoly::var(nvars, 2));
        assert_eq!(m[1][1], &(-&y11) - &t);

        let m1 = symbolic_char_matrix(1);
        assert_eq!(m1[0][0], -MultiPoly::var(2, 1));

        let m3 = symbolic_char_matrix(3);
        let v = |i| MultiPoly::var(10, i);
        assert_eq!(m3[2][2], &(&(-&v(0)) - &v(4)) - &v(9));
    }

    #[test]
    fn sl2_generator_is_det_minus_b() {
        // z = (t^2 + 5, 1): the only nonzero remainder is -y11^2 - y12*y21 - 5
        let z = QuotientPoint::new(
            pt(&[2]),
            vec![UniPoly::from_int_coeffs(&[5, 0, 1]), UniPoly::one()],
        )
        .unwrap();
        let gens = weyman_generators(&z).unwrap();
        assert_eq!(gens.len(), 1);
        let expected = {
            let y11 = MultiPoly::var(5, 0);
            let y12 = MultiPoly::var(5, 1);
            let y21 = MultiPoly::var(5, 2);
            &(&(-&(&y11 * &y11)) - &(&y12 * &y21)) - &MultiPoly::constant(5, q(5))
        };
        assert_eq!(gens.generators()[0], expected);
        assert_eq!(gens.rendered(), vec!["-y11^2 - y12*y21 - 5"]);
    }

    #[test]
    fn sl2_nilpotent_cone_generator() {
        let z = QuotientPoint::nilpotent_point(pt(&[2]));
        let gens = weyman_generators(&z).unwrap();
        assert_eq!(gens.rendered(), vec!["-y11^2 - y12*y21"]);
    }

    #[test]
    fn trivial_tower_gives_no_generators() {
        // sigma = (1): Q_1 = t, but n = 1 forces the single minor -t,
        // remainder 0; every i with Q_i = 1 contributes nothing either
        let z = QuotientPoint::nilpotent_point(pt(&[1]));
        let gens = weyman_generators(&z).unwrap();
        assert!(gens.is_empty());
    }

    #[test]
    fn guard_rejects_large_n() {
        let z = QuotientPoint::nilpotent_point(pt(&[5]));
        assert!(matches!(
            weyman_generators(&z),
            Err(Error::GuardExceeded { n: 5, limit: 4 })
        ));
        assert!(weyman_generators_with_limit(&z, 5).is_ok());
    }

    #[test]
    fn generators_vanish_on_the_section() {
        for parts in [vec![2], vec![3], vec![2, 1], vec![1, 1, 1]] {
            let z = QuotientPoint::nilpotent_point(pt(&parts));
            let gens = weyman_generators(&z).unwrap();
            let s = z.section();
            assert!(
                evaluate_generators(&gens, &s).unwrap().iter().all(Rational::is_zero),
                "generators of {parts:?} do not vanish on the section"
            );
            let rep = nilpotent_representative(&pt(&parts));
            assert!(evaluate_generators(&gens, &rep).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn generators_detect_points_outside_the_fiber() {
        // z = (t^2 + 1, 1): the zero matrix is not in the fiber, det(0) - 1 = -1
        let z = QuotientPoint::new(
            pt(&[2]),
            vec![UniPoly::from_int_coeffs(&[1, 0, 1]), UniPoly::one()],
        )
        .unwrap();
        let gens = weyman_generators(&z).unwrap();
        let values = evaluate_generators(&gens, &RationalMatrix::zero(2, Ambient::Sl)).unwrap();
        assert!(values.contains(&q(-1)));
    }

    #[test]
    fn vanishing_matches_fiber_membership_in_sl3() {
        let j3 = sl(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let e12 = sl(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let zero = RationalMatrix::zero(3, Ambient::Sl);
        let semisimple = sl(&[&[-2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let candidates = [&j3, &e12, &zero, &semisimple];
        for parts in [vec![3], vec![2, 1], vec![1, 1, 1]] {
            let z = QuotientPoint::nilpotent_point(pt(&parts));
            let gens = weyman_generators(&z).unwrap();
            for y in candidates {
                let vanishes = evaluate_generators(&gens, y)
                    .unwrap()
                    .iter()
                    .all(Rational::is_zero);
                assert_eq!(
                    vanishes,
                    z.fiber_contains(y).unwrap(),
                    "inconsistent at sigma = {parts:?}"
                );
            }
        }
    }
}
