//! Sparse multivariate polynomials over `Rational`, used for symbolic
//! matrix entries `y_11, ..., y_nn` and the indeterminate `t`.
//!
//! A polynomial is a map from exponent vectors to nonzero coefficients. The
//! variable order is fixed by index; callers name the variables.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::Rational;

/// A sparse multivariate polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable with the given index.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut exp = vec![0; nvars];
        exp[index] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(exp, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn insert_term(&mut self, exp: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a * c))
                .collect(),
        }
    }

    /// Exact evaluation at a point; `values` must list every variable.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.nvars, "wrong number of values");
        let mut acc = Rational::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in values.iter().zip(exp) {
                if e > 0 {
                    term = term * v.pow(e as usize);
                }
            }
            acc += &term;
        }
        acc
    }

    /// The degree in one variable.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|e| e[index]).max().unwrap_or(0)
    }

    /// Collects the coefficients of powers of the variable `index`: entry
    /// `d` is the coefficient of `var^d`, itself a polynomial with that
    /// variable's exponent zeroed. Returns the dense list up to the degree.
    pub fn coefficients_in(&self, index: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(index) as usize;
        let mut out = vec![MultiPoly::zero(self.nvars); deg + 1];
        for (exp, c) in &self.terms {
            let d = exp[index] as usize;
            let mut e = exp.clone();
            e[index] = 0;
            out[d].insert_term(e, c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Renders with caller-supplied variable names.
    pub fn render(&self, name: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (exp, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        name(i)
                    } else {
                        format!("{}^{}", name(i), e)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }
}

// ---- operators ----

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(exp, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_value_variants {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_variants!(Add, add);
forward_value_variants!(Sub, sub);
forward_value_variants!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// A named view of a polynomial, serialized as a list of
/// `{"monomial": {name: exponent}, "coefficient": "p/q"}` terms.
pub struct NamedPoly<'a, F: Fn(usize) -> String> {
    pub poly: &'a MultiPoly,
    pub name: F,
}

impl<F: Fn(usize) -> String> Serialize for NamedPoly<'_, F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.poly.num_terms()))?;
        for (exp, c) in self.poly.terms() {
            seq.serialize_element(&NamedTerm {
                exp,
                coeff: c,
                name: &self.name,
            })?;
        }
        seq.end()
    }
}

struct NamedTerm<'a, F: Fn(usize) -> String> {
    exp: &'a [u32],
    coeff: &'a Rational,
    name: &'a F,
}

impl<F: Fn(usize) -> String> Serialize for NamedTerm<'_, F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'b, M: Serialize> {
            monomial: M,
            coefficient: &'b Rational,
        }
        struct Monomial<'b, G: Fn(usize) -> String> {
            exp: &'b [u32],
            name: &'b G,
        }
        impl<G: Fn(usize) -> String> Serialize for Monomial<'_, G> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let count = self.exp.iter().filter(|&&e| e > 0).count();
                let mut map = serializer.serialize_map(Some(count))?;
                for (i, &e) in self.exp.iter().enumerate() {
                    if e > 0 {
                        map.serialize_entry(&(self.name)(i), &e)?;
                    }
                }
                map.end()
            }
        }
        Term {
            monomial: Monomial {
                exp: self.exp,
                name: self.name,
            },
            coefficient: self.coeff,
        }
        .serialize(serializer)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|i| format!("x{i}")))
    }
}
