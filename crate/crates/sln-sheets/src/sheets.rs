//! Partitions of `n` and the sheet dictionary for traceless `n x n` matrices.
//!
//! Conjugation orbits of a fixed dimension assemble into sheets, and the
//! sheets are in bijection with the partitions of `n`: a matrix `x` lies in
//! the sheet of `sigma = (b_1 >= b_2 >= ...)` exactly when its invariant
//! factor `q_i` has degree `b_i` for every `i`. Each sheet contains a unique
//! nilpotent orbit, represented here by the Jordan matrix of type `sigma`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::matrix::{Ambient, RationalMatrix};
use crate::{Error, Rational};

/// A partition of `n`: weakly decreasing positive parts summing to `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// The partitioned integer `n`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// `b_i` with 1-based index, zero beyond the last part. The zero tail is
    /// what makes expressions like `b_i - b_{i+1}` uniform.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Conjugate partition: `c_j` counts the parts that are `>= j`.
    pub fn conjugate(&self) -> Partition {
        let b1 = self.parts[0];
        let parts = (1..=b1)
            .map(|j| self.parts.iter().filter(|&&b| b >= j).count())
            .collect();
        Partition { parts }
    }

    /// All partitions of `n` in reverse-lexicographic order, `(n)` first.
    /// Empty for `n = 0`.
    pub fn all_of(n: usize) -> Vec<Partition> {
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Numerical data of the sheet labelled by a partition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SheetDescriptor {
    pub sigma: Partition,
    pub conjugate: Partition,
    /// Dimension of every orbit in the sheet: `n^2 - sum c_j^2`.
    pub orbit_dim: usize,
    /// Dimension of the quotient of the sheet: `b_1 - 1`.
    pub quotient_dim: usize,
}

impl SheetDescriptor {
    pub fn for_partition(sigma: Partition) -> SheetDescriptor {
        let n = sigma.n();
        let conjugate = sigma.conjugate();
        let sum_c_sq: usize = conjugate.parts().iter().map(|&c| c * c).sum();
        let orbit_dim = n * n - sum_c_sq;
        debug_assert!(orbit_dim.is_multiple_of(2), "adjoint orbits have even dimension");
        SheetDescriptor {
            quotient_dim: sigma.part(1) - 1,
            conjugate,
            orbit_dim,
            sigma,
        }
    }
}

/// The sheet of a traceless matrix, read off from the degrees of its
/// invariant factors.
pub fn classify_sheet(x: &RationalMatrix) -> Result<SheetDescriptor, Error> {
    x.require_traceless()?;
    let degrees = x.invariant_factors().degrees();
    let parts: Vec<usize> = degrees.into_iter().filter(|&d| d > 0).collect();
    let sigma = Partition::new(parts)
        .expect("invariant factor degrees are weakly decreasing and sum to n");
    Ok(SheetDescriptor::for_partition(sigma))
}

/// The block-diagonal nilpotent Jordan matrix with block sizes `sigma`;
/// its invariant factors are `q_i = t^{b_i}`.
pub fn nilpotent_representative(sigma: &Partition) -> RationalMatrix {
    let n = sigma.n();
    let mut m = RationalMatrix::zero(n, Ambient::Sl);
    let mut offset = 0;
    for &b in sigma.parts() {
        for i in 0..b - 1 {
            m.set(offset + i, offset + i + 1, Rational::one());
        }
        offset += b;
    }
    m
}

/// One descriptor per partition of `n`, in reverse-lexicographic order.
pub fn enumerate_sheets(n: usize) -> Vec<SheetDescriptor> {
    Partition::all_of(n)
        .into_iter()
        .map(SheetDescriptor::for_partition)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::UniPoly;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1]).is_ok());
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(pt(&[3]).conjugate(), pt(&[1, 1, 1]));
        assert_eq!(pt(&[2, 1]).conjugate(), pt(&[2, 1]));
        assert_eq!(pt(&[1, 1, 1]).conjugate(), pt(&[3]));
    }

    #[test]
    fn conjugate_is_involutive() {
        for n in 1..=12 {
            for sigma in Partition::all_of(n) {
                assert_eq!(sigma.conjugate().conjugate(), sigma);
            }
        }
    }

    #[test]
    fn reverse_lexicographic_enumeration() {
        let partitions: Vec<Vec<usize>> = Partition::all_of(4)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            partitions,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(Partition::all_of(2).len(), 2);
        assert_eq!(Partition::all_of(3).len(), 3);
        assert_eq!(enumerate_sheets(4).len(), 5);
    }

    #[test]
    fn classify_zero_matrix() {
        let d = classify_sheet(&RationalMatrix::zero(3, Ambient::Sl)).unwrap();
        assert_eq!(d.sigma, pt(&[1, 1, 1]));
        assert_eq!(d.orbit_dim, 0);
        assert_eq!(d.quotient_dim, 0);
    }

    #[test]
    fn classify_regular_nilpotent() {
        let d = classify_sheet(&nilpotent_representative(&pt(&[3]))).unwrap();
        assert_eq!(d.sigma, pt(&[3]));
        assert_eq!(d.orbit_dim, 6);
        assert_eq!(d.quotient_dim, 2);
    }

    #[test]
    fn classify_subregular_nilpotent() {
        let d = classify_sheet(&nilpotent_representative(&pt(&[2, 1]))).unwrap();
        assert_eq!(d.sigma, pt(&[2, 1]));
        assert_eq!(d.conjugate, pt(&[2, 1]));
        assert_eq!(d.orbit_dim, 4);
        assert_eq!(d.quotient_dim, 1);
    }

    #[test]
    fn representatives_by_partition() {
        assert_eq!(
            nilpotent_representative(&pt(&[2])),
            RationalMatrix::from_int_rows(&[&[0, 1], &[0, 0]], Ambient::Sl).unwrap()
        );
        assert!(nilpotent_representative(&pt(&[1, 1])).is_zero());
        assert_eq!(
            nilpotent_representative(&pt(&[2, 1])),
            RationalMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]], Ambient::Sl)
                .unwrap()
        );
    }

    #[test]
    fn representative_has_monomial_invariant_factors() {
        for n in 1..=6 {
            for sigma in Partition::all_of(n) {
                let x = nilpotent_representative(&sigma);
                let profile = x.invariant_factors();
                for i in 1..=n {
                    assert_eq!(profile.q(i), &UniPoly::monomial(sigma.part(i)));
                }
                assert_eq!(classify_sheet(&x).unwrap().sigma, sigma);
            }
        }
    }

    #[test]
    fn classify_requires_traceless() {
        let x = RationalMatrix::from_int_rows(&[&[1, 0], &[0, 0]], Ambient::Gl).unwrap();
        assert!(classify_sheet(&x).is_err());
    }
}
