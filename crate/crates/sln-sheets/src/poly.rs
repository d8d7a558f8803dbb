//! Dense univariate polynomials in the indeterminate `t` over [`Rational`].
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the vector is empty for the zero polynomial and the last
//! coefficient is nonzero otherwise, so the degree of a nonzero polynomial is
//! always `coeffs.len() - 1`. The zero polynomial has no numeric degree; it is
//! reported as `None` and every formula that consumes degrees must branch on
//! it explicitly.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Rational};

/// A univariate polynomial in `t` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    // ---- constructors ----

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        UniPoly::monomial(1)
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    /// The monomial `t^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = Rational::one();
        UniPoly { coeffs }
    }

    /// Builds from coefficients in ascending degree order, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Convenience constructor from integer coefficients, degree 0 first.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    // ---- inspection ----

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^d`, zero beyond the stored length.
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial, `Some(deg)` otherwise.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    // ---- arithmetic beyond the std operators ----

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`
    /// or `r = 0`. Errors when the divisor is the zero polynomial.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), Error> {
        let d_deg = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let d_lc = divisor.leading_coeff().expect("nonzero divisor");

        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let shift = r_deg - d_deg;
            let factor = rem.leading_coeff().expect("nonzero remainder") / d_lc;
            // rem -= factor * t^shift * divisor
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let updated = rem.coeff(shift + i) - &factor * c;
                rem.coeffs[shift + i] = updated;
            }
            while rem.coeffs.last().is_some_and(Rational::is_zero) {
                rem.coeffs.pop();
            }
            quot[shift] = factor;
        }
        Ok((UniPoly::from_coeffs(quot), rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub(crate) fn exact_div(&self, divisor: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// True when `self` divides `other` with zero remainder.
    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        let (_, r) = other.div_rem(self).expect("nonzero divisor");
        r.is_zero()
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    /// `gcd(a, 0)` is `monic(a)`; `gcd(0, 0)` is rejected.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly, Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // normalizing each remainder keeps coefficient growth in check
            b = if r.is_zero() { r } else { r.monic()? };
        }
        a.monic()
    }

    /// Divides by the leading coefficient; errors on the zero polynomial.
    pub fn monic(&self) -> Result<UniPoly, Error> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = lc.recip().expect("leading coefficient is nonzero");
        Ok(self.scale(&inv))
    }

    /// Sum of the roots of a monic polynomial, read off as minus the
    /// subleading coefficient. Constants have no roots and return 0.
    pub fn root_sum(&self) -> Result<Rational, Error> {
        if !self.is_monic() {
            return Err(Error::NotMonic(self.to_string()));
        }
        let deg = self.degree().expect("monic implies nonzero");
        if deg == 0 {
            return Ok(Rational::zero());
        }
        Ok(-self.coeff(deg - 1))
    }

    /// The monic polynomial `eps^deg * p(t/eps)`, which scales every root by
    /// `eps`: the coefficient of `t^d` picks up the factor `eps^(deg-d)`.
    pub fn rescale(&self, eps: &Rational) -> Result<UniPoly, Error> {
        if !self.is_monic() {
            return Err(Error::NotMonic(self.to_string()));
        }
        if eps.is_zero() {
            return Err(Error::ZeroScale);
        }
        let deg = self.degree().expect("monic implies nonzero");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| c * eps.pow(deg - d))
            .collect();
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

// ---- operators ----

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_value_variants {
    ($trait:ident, $method:ident) => {
        impl $trait for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_variants!(Add, add);
forward_value_variants!(Sub, sub);
forward_value_variants!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl num_traits::Zero for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl num_traits::One for UniPoly {
    fn one() -> Self {
        UniPoly::one()
    }
}

// ---- text form ----

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}
