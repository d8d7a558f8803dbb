//! Coordinates on the quotient of a sheet by conjugation.
//!
//! A point of the quotient is the tuple `(p_1, ..., p_n)` with
//! `p_i = q_i / q_{i+1}`, monic of degree `b_i - b_{i+1}`. The tuple
//! determines the orbit: `q_i = p_i p_{i+1} ... p_n` recovers the invariant
//! factors, and `Q_i = p_i (p_{i+1})^2 ... (p_n)^{n-i+1}` the gcd tower. The
//! subleading coefficients satisfy one linear relation,
//! `sum_i i * S(p_i) = 0` (`S` = root sum), which says exactly that the
//! trace is zero; eliminating one coordinate identifies the quotient with an
//! affine space of dimension `b_1 - 1`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::matrix::{Ambient, RationalMatrix};
use crate::sheets::{classify_sheet, Partition};
use crate::{Error, Rational, UniPoly};

/// A point of the sheet quotient: monic polynomials `p_i` of degree
/// `b_i - b_{i+1}` whose subleading coefficients satisfy the trace relation.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawQuotientPoint")]
pub struct QuotientPoint {
    sigma: Partition,
    p: Vec<UniPoly>,
}

#[derive(Deserialize)]
struct RawQuotientPoint {
    sigma: Partition,
    p: Vec<UniPoly>,
}

impl TryFrom<RawQuotientPoint> for QuotientPoint {
    type Error = Error;
    fn try_from(raw: RawQuotientPoint) -> Result<Self, Error> {
        QuotientPoint::new(raw.sigma, raw.p)
    }
}

impl QuotientPoint {
    /// Validates degrees, monicity and the trace relation.
    pub fn new(sigma: Partition, p: Vec<UniPoly>) -> Result<Self, Error> {
        let n = sigma.n();
        if p.len() != n {
            return Err(Error::InvalidQuotientPoint(format!(
                "expected {n} polynomials, got {}",
                p.len()
            )));
        }
        let mut relation = Rational::zero();
        for (idx, poly) in p.iter().enumerate() {
            let i = idx + 1;
            let expected = sigma.part(i) - sigma.part(i + 1);
            if !poly.is_monic() {
                return Err(Error::InvalidQuotientPoint(format!("p_{i} = {poly} is not monic")));
            }
            if poly.degree() != Some(expected) {
                return Err(Error::InvalidQuotientPoint(format!(
                    "p_{i} = {poly} should have degree {expected}"
                )));
            }
            let s = poly.root_sum().expect("monic");
            relation += &(&Rational::from_int(i as i64) * &s);
        }
        if !relation.is_zero() {
            return Err(Error::InvalidQuotientPoint(format!(
                "trace relation violated: sum i*S(p_i) = {relation}"
            )));
        }
        Ok(QuotientPoint { sigma, p })
    }

    /// The point of the sheet's nilpotent orbit: `p_i = t^(b_i - b_{i+1})`.
    pub fn nilpotent_point(sigma: Partition) -> Self {
        let n = sigma.n();
        let p = (1..=n)
            .map(|i| UniPoly::monomial(sigma.part(i) - sigma.part(i + 1)))
            .collect();
        QuotientPoint { sigma, p }
    }

    pub fn sigma(&self) -> &Partition {
        &self.sigma
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    /// `p_i` for `1 <= i <= n`.
    pub fn p(&self, i: usize) -> &UniPoly {
        &self.p[i - 1]
    }

    pub fn p_list(&self) -> &[UniPoly] {
        &self.p
    }

    /// The invariant factor `q_i = p_i p_{i+1} ... p_n` of the orbit.
    pub fn invariant_factor(&self, i: usize) -> Result<UniPoly, Error> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(self.p[i - 1..].iter().fold(UniPoly::one(), |acc, f| &acc * f))
    }

    /// The gcd tower entry `Q_i = p_i (p_{i+1})^2 ... (p_n)^{n-i+1}`.
    pub fn reconstruct_q(&self, i: usize) -> Result<UniPoly, Error> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut acc = UniPoly::one();
        for (j, poly) in self.p.iter().enumerate().skip(i - 1) {
            acc = &acc * &poly.pow(j + 2 - i);
        }
        Ok(acc)
    }

    /// An explicit matrix in the orbit: the direct sum of the companion
    /// matrices of the nontrivial `q_i`. Its invariant factors are exactly
    /// the `q_i`, so `quotient_point(section(z)) = z`, and the trace
    /// relation makes it traceless.
    pub fn section(&self) -> RationalMatrix {
        let n = self.n();
        let mut m = RationalMatrix::zero(n, Ambient::Sl);
        let mut offset = 0;
        for i in 1..=n {
            let q = self.invariant_factor(i).expect("index in range");
            let d = q.degree().expect("monic");
            if d == 0 {
                break; // the remaining factors are all 1
            }
            // companion block of q at the current offset
            for r in 1..d {
                m.set(offset + r, offset + r - 1, Rational::one());
            }
            for r in 0..d {
                m.set(offset + r, offset + d - 1, -q.coeff(r));
            }
            offset += d;
        }
        debug_assert!(m.is_traceless());
        m
    }

    /// True when `y` lies in the closure of the orbit of this point,
    /// i.e. `Q_i^z` divides `Q_i^y` for every `i`.
    pub fn fiber_contains(&self, y: &RationalMatrix) -> Result<bool, Error> {
        let n = self.n();
        if y.n() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: y.n(),
            });
        }
        y.require_traceless()?;
        let profile = y.invariant_factors();
        for i in 1..=n {
            if !self.reconstruct_q(i)?.divides(profile.big_q(i)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The image of the point under the homothety `x -> eps * x`:
    /// every `p_i` is rescaled. The nilpotent point is the unique fixed
    /// point, and iterating `eps = 1/2` walks any point toward it.
    pub fn scale(&self, eps: &Rational) -> Result<QuotientPoint, Error> {
        if eps.is_zero() {
            return Err(Error::ZeroScale);
        }
        let p = self
            .p
            .iter()
            .map(|poly| poly.rescale(eps))
            .collect::<Result<Vec<_>, _>>()?;
        QuotientPoint::new(self.sigma.clone(), p)
    }

    // ---- the eliminated-coordinate chart ----

    /// Index (1-based) of the polynomial whose subleading coefficient is
    /// eliminated by the trace relation: the largest `k` with `deg p_k >= 1`.
    fn eliminated_index(&self) -> usize {
        (1..=self.n())
            .rev()
            .find(|&i| self.p[i - 1].degree() != Some(0))
            .expect("some p_i has positive degree")
    }

    /// Coordinates in the affine chart of dimension `b_1 - 1`: the
    /// non-leading coefficients of `p_1, p_2, ...` in order (lowest degree
    /// first within each polynomial), with the subleading coefficient of the
    /// last nonconstant polynomial dropped.
    pub fn chart(&self) -> Vec<Rational> {
        let k = self.eliminated_index();
        let mut coords = Vec::new();
        for (idx, poly) in self.p.iter().enumerate() {
            let Some(d) = poly.degree() else { continue };
            for c in 0..d {
                if idx + 1 == k && c == d - 1 {
                    continue;
                }
                coords.push(poly.coeff(c));
            }
        }
        debug_assert_eq!(coords.len(), self.sigma.part(1) - 1);
        coords
    }

    /// Rebuilds a point from chart coordinates, solving the eliminated
    /// coefficient from the trace relation.
    pub fn from_chart(sigma: Partition, coords: &[Rational]) -> Result<QuotientPoint, Error> {
        let n = sigma.n();
        let b1 = sigma.part(1);
        if coords.len() != b1 - 1 {
            return Err(Error::InvalidQuotientPoint(format!(
                "expected {} chart coordinates, got {}",
                b1 - 1,
                coords.len()
            )));
        }
        let k = (1..=n)
            .rev()
            .find(|&i| sigma.part(i) > sigma.part(i + 1))
            .expect("b_1 >= 1");
        let mut iter = coords.iter();
        let mut p: Vec<UniPoly> = Vec::with_capacity(n);
        let mut relation = Rational::zero();
        for i in 1..=n {
            let d = sigma.part(i) - sigma.part(i + 1);
            let mut cs = vec![Rational::zero(); d + 1];
            cs[d] = Rational::one();
            for (c, slot) in cs.iter_mut().enumerate().take(d) {
                if i == k && c == d - 1 {
                    continue; // solved below
                }
                *slot = iter.next().expect("length checked").clone();
            }
            if d >= 1 && i != k {
                relation += &(&Rational::from_int(i as i64) * &cs[d - 1]);
            }
            p.push(UniPoly::from_coeffs(cs));
        }
        // sum_i i * coeff_{d_i - 1}(p_i) = 0
        let dk = sigma.part(k) - sigma.part(k + 1);
        let solved = -(&relation / &Rational::from_int(k as i64));
        let mut cs: Vec<Rational> = (0..=dk).map(|c| p[k - 1].coeff(c)).collect();
        cs[dk - 1] = solved;
        p[k - 1] = UniPoly::from_coeffs(cs);
        QuotientPoint::new(sigma, p)
    }
}

impl fmt::Display for QuotientPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, poly) in self.p.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{poly}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for QuotientPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", self, self.sigma)
    }
}

/// The quotient map: sends a traceless matrix to `(p_1, ..., p_n)` with
/// `p_i = q_i / q_{i+1}`. Constant on conjugation orbits, and injective on
/// orbits within a sheet.
pub fn quotient_point(x: &RationalMatrix) -> Result<QuotientPoint, Error> {
    x.require_traceless()?;
    let profile = x.invariant_factors();
    let n = x.n();
    let mut p = Vec::with_capacity(n);
    for i in 1..=n {
        let next = if i < n {
            profile.q(i + 1).clone()
        } else {
            UniPoly::one()
        };
        p.push(profile.q(i).exact_div(&next));
    }
    let sigma = classify_sheet(x)?.sigma;
    QuotientPoint::new(sigma, p)
}
