//! Matrices over the rationals and over the polynomial ring, minor
//! enumeration, and the invariant-factor tower of `x - tI`.
//!
//! For an `n x n` matrix `x`, `Q_i` is the monic gcd of all
//! `(n+1-i) x (n+1-i)` minors of `x - tI` (with `Q_{n+1} = 1`), and
//! `q_i = Q_i / Q_{i+1}` are the invariant factors, ordered so that
//! `q_{i+1}` divides `q_i`. The product of the `q_i` is the monic
//! characteristic polynomial and `q_1` is the minimal polynomial.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::{linalg, Error, Rational, UniPoly};

/// The ambient matrix algebra: traceless matrices or all matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Sl,
    Gl,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Sl => "sl",
            Ambient::Gl => "gl",
        })
    }
}

impl std::str::FromStr for Ambient {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sl" => Ok(Ambient::Sl),
            "gl" => Ok(Ambient::Gl),
            other => Err(Error::Parse(format!("unknown ambient {other:?}"))),
        }
    }
}

// ---- rational matrices ----

/// A square matrix with exact rational entries.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct RationalMatrix {
    n: usize,
    ambient: Ambient,
    entries: Vec<Vec<Rational>>,
}

// equality is entrywise; the ambient flag is bookkeeping, not identity
impl PartialEq for RationalMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for RationalMatrix {}

#[derive(Deserialize)]
struct RawMatrix {
    n: usize,
    ambient: Ambient,
    entries: Vec<Vec<Rational>>,
}

impl TryFrom<RawMatrix> for RationalMatrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self, Error> {
        if raw.entries.len() != raw.n || raw.entries.iter().any(|r| r.len() != raw.n) {
            return Err(Error::InvalidMatrix(format!(
                "entries are not a {0} x {0} array",
                raw.n
            )));
        }
        RationalMatrix::new(raw.entries, raw.ambient)
    }
}

impl RationalMatrix {
    /// Builds a matrix, validating squareness and, for `sl`, tracelessness.
    pub fn new(entries: Vec<Vec<Rational>>, ambient: Ambient) -> Result<Self, Error> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix("rows of unequal length".into()));
        }
        let m = RationalMatrix { n, ambient, entries };
        if ambient == Ambient::Sl && !m.is_traceless() {
            return Err(Error::NotTraceless(m.trace().to_string()));
        }
        Ok(m)
    }

    pub fn from_int_rows(rows: &[&[i64]], ambient: Ambient) -> Result<Self, Error> {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|&c| Rational::from_int(c)).collect())
            .collect();
        RationalMatrix::new(entries, ambient)
    }

    pub fn zero(n: usize, ambient: Ambient) -> Self {
        RationalMatrix {
            n,
            ambient,
            entries: vec![vec![Rational::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, Ambient::Gl);
        for i in 0..n {
            m.entries[i][i] = Rational::one();
        }
        m
    }

    /// The elementary matrix `E_ij` in `gl(n)`.
    pub fn basis_elem(n: usize, i: usize, j: usize) -> Self {
        let mut m = RationalMatrix::zero(n, Ambient::Gl);
        m.entries[i][j] = Rational::one();
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i][j] = value;
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).fold(Rational::zero(), |acc, i| acc + &self.entries[i][i])
    }

    pub fn is_traceless(&self) -> bool {
        self.trace().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Rational::is_zero)
    }

    pub(crate) fn require_traceless(&self) -> Result<(), Error> {
        if self.is_traceless() {
            Ok(())
        } else {
            Err(Error::NotTraceless(self.trace().to_string()))
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        RationalMatrix {
            n: self.n,
            ambient: Ambient::Gl,
            entries,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        RationalMatrix {
            n: self.n,
            ambient: Ambient::Gl,
            entries,
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "size mismatch");
        let n = self.n;
        let mut entries = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i][j] += &(&self.entries[i][k] * &rhs.entries[k][j]);
                }
            }
        }
        RationalMatrix {
            n,
            ambient: Ambient::Gl,
            entries,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x * c).collect())
            .collect();
        RationalMatrix {
            n: self.n,
            // homotheties preserve tracelessness
            ambient: self.ambient,
            entries,
        }
    }

    /// The Lie bracket `[self, rhs] = self*rhs - rhs*self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs).sub(&rhs.matmul(self))
    }

    /// `g * self * g^{-1}`; errors when `g` is singular.
    pub fn conjugated_by(&self, g: &Self) -> Result<Self, Error> {
        if g.n != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: g.n,
            });
        }
        let g_inv = linalg::invert(&g.entries)
            .ok_or_else(|| Error::InvalidMatrix("singular conjugator".into()))?;
        let g_inv = RationalMatrix {
            n: self.n,
            ambient: Ambient::Gl,
            entries: g_inv,
        };
        let mut result = g.matmul(self).matmul(&g_inv);
        result.ambient = self.ambient;
        Ok(result)
    }

    /// Evaluates `p(self)` by Horner's rule.
    pub fn evaluate_poly(&self, p: &UniPoly) -> Self {
        let mut acc = RationalMatrix::zero(self.n, Ambient::Gl);
        for c in p.coeffs().iter().rev() {
            acc = acc.matmul(self);
            for i in 0..self.n {
                acc.entries[i][i] += c;
            }
        }
        acc
    }

    pub fn rank(&self) -> usize {
        linalg::rank(self.entries.clone())
    }

    /// Dimension of the null space of `p(self)`, by exact rank.
    pub fn kernel_dim(&self, p: &UniPoly) -> usize {
        self.n - self.evaluate_poly(p).rank()
    }

    /// The characteristic matrix `self - tI` over the polynomial ring.
    pub fn char_matrix(&self) -> PolyMatrix {
        let n = self.n;
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = UniPoly::constant(self.entries[i][j].clone());
                        if i == j {
                            c - UniPoly::t()
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { n, entries }
    }

    /// Monic characteristic polynomial `det(tI - self)` by the
    /// Faddeev-LeVerrier trace recursion. This route never touches the
    /// minor enumeration, so it can cross-check it.
    pub fn char_poly(&self) -> UniPoly {
        let n = self.n;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = self.clone();
        for k in 1..=n {
            let c = -(m.trace() / Rational::from_int(k as i64));
            coeffs[n - k] = c.clone();
            if k < n {
                for i in 0..n {
                    m.entries[i][i] += &c;
                }
                m = self.matmul(&m);
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// The full invariant-factor tower of `self - tI`.
    pub fn invariant_factors(&self) -> InvariantFactorProfile {
        let n = self.n;
        let levels = minor_levels(&self.char_matrix().entries, n, UniPoly::zero());

        let mut cap_q = vec![UniPoly::one(); n]; // index i-1 holds Q_i; Q_{n+1} appended below
        cap_q[0] = levels[n - 1][0].monic().expect("determinant is nonzero");
        let mut reached_one = false;
        for i in 2..=n {
            if reached_one {
                continue; // Q_{i} divides Q_{i-1} = 1
            }
            let g = gcd_fold(&levels[n - i]);
            if g.is_one() {
                reached_one = true;
            }
            cap_q[i - 1] = g;
        }
        cap_q.push(UniPoly::one()); // Q_{n+1} = 1

        let q = (0..n)
            .map(|i| cap_q[i].exact_div(&cap_q[i + 1]))
            .collect();
        InvariantFactorProfile { n, cap_q, q }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = (0..self.n)
            .map(|j| {
                (0..self.n)
                    .map(|i| self.entries[i][j].to_string().len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", c.to_string(), width = widths[j])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

// ---- polynomial matrices ----

/// A square matrix with `UniPoly` entries, e.g. the characteristic matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Vec<UniPoly>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<UniPoly>>) -> Result<Self, Error> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix("not a square matrix".into()));
        }
        Ok(PolyMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i][j]
    }

    /// All `k x k` minors in lexicographic (row-set, column-set) order.
    pub fn minors(&self, k: usize) -> Result<Vec<UniPoly>, Error> {
        if k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: self.n,
            });
        }
        let mut levels = minor_levels(&self.entries, k, UniPoly::zero());
        Ok(levels.pop().expect("k >= 1"))
    }

    pub fn det(&self) -> UniPoly {
        self.minors(self.n).expect("n is in range").remove(0)
    }
}

/// Monic gcd of a list of polynomials, skipping zeros, with early exit once
/// the running gcd collapses to 1.
fn gcd_fold(polys: &[UniPoly]) -> UniPoly {
    let mut acc: Option<UniPoly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let next = match acc {
            None => p.monic().expect("p is nonzero"),
            Some(g) => g.gcd(p).expect("not both zero"),
        };
        if next.is_one() {
            return next;
        }
        acc = Some(next);
    }
    acc.expect("at least one nonzero polynomial")
}

// ---- memoized minor enumeration ----

/// All minors of every size `1..=max_k`, level by level. Level `k` (at index
/// `k-1`) lists the `C(n,k)^2` minors in lexicographic (row-set, column-set)
/// order. Each level is computed from the previous one by Laplace expansion
/// along the smallest row of the row set, so shared subdeterminants are
/// computed exactly once. `zero` supplies the additive identity of `T`.
pub(crate) fn minor_levels<T>(entries: &[Vec<T>], max_k: usize, zero: T) -> Vec<Vec<T>>
where
    T: Clone + PartialEq + Add<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    let n = entries.len();
    assert!(max_k >= 1 && max_k <= n);

    let mut levels: Vec<Vec<T>> = Vec::with_capacity(max_k);
    let mut prev_combs: Vec<(u64, Vec<usize>)> = Vec::new();
    let mut prev_index: HashMap<u64, usize> = HashMap::new();

    for k in 1..=max_k {
        let combs = combinations(n, k);
        let index: HashMap<u64, usize> = combs
            .iter()
            .enumerate()
            .map(|(pos, (mask, _))| (*mask, pos))
            .collect();
        let m = combs.len();
        let mut level: Vec<T> = Vec::with_capacity(m * m);
        for (row_mask, rows) in &combs {
            for (_, cols) in &combs {
                if k == 1 {
                    level.push(entries[rows[0]][cols[0]].clone());
                    continue;
                }
                // expand along the smallest row of the subset
                let r0 = rows[0];
                let sub_rows = prev_index[&(row_mask & !(1u64 << r0))];
                let mut acc = zero.clone();
                let mut negate = false;
                for &c in cols {
                    let head = entries[r0][c].clone();
                    if head != zero {
                        let col_mask = cols.iter().fold(0u64, |m, &j| m | 1 << j) & !(1u64 << c);
                        let sub = levels[k - 2][sub_rows * prev_combs.len() + prev_index[&col_mask]]
                            .clone();
                        let term = head * sub;
                        acc = if negate { acc + (-term) } else { acc + term };
                    }
                    negate = !negate;
                }
                level.push(acc);
            }
        }
        levels.push(level);
        prev_combs = combs;
        prev_index = index;
    }
    levels
}

/// Size-`k` subsets of `0..n` in lexicographic order, as (bitmask, indices).
fn combinations(n: usize, k: usize) -> Vec<(u64, Vec<usize>)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<(u64, Vec<usize>)>) {
        if cur.len() == k {
            let mask = cur.iter().fold(0u64, |m, &i| m | 1 << i);
            out.push((mask, cur.clone()));
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

// ---- invariant factor profiles ----

/// The tower `Q_1, ..., Q_{n+1}` together with the invariant factors
/// `q_1, ..., q_n` of `x - tI`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InvariantFactorProfile {
    #[serde(skip)]
    n: usize,
    #[serde(rename = "Q")]
    cap_q: Vec<UniPoly>,
    q: Vec<UniPoly>,
}

impl InvariantFactorProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `Q_i` for `1 <= i <= n+1`.
    pub fn big_q(&self, i: usize) -> &UniPoly {
        assert!((1..=self.n + 1).contains(&i), "Q index out of range");
        &self.cap_q[i - 1]
    }

    /// `q_i` for `1 <= i <= n`.
    pub fn q(&self, i: usize) -> &UniPoly {
        assert!((1..=self.n).contains(&i), "q index out of range");
        &self.q[i - 1]
    }

    pub fn big_q_list(&self) -> &[UniPoly] {
        &self.cap_q
    }

    pub fn q_list(&self) -> &[UniPoly] {
        &self.q
    }

    /// `Q_1`, the monic characteristic polynomial.
    pub fn char_poly(&self) -> &UniPoly {
        &self.cap_q[0]
    }

    /// Degrees of the invariant factors, `deg q_1 >= deg q_2 >= ...`.
    pub fn degrees(&self) -> Vec<usize> {
        self.q
            .iter()
            .map(|p| p.degree().expect("invariant factors are monic"))
            .collect()
    }

    /// Checks every structural invariant of the tower against its matrix:
    /// `Q_{n+1} = 1`, divisibility `Q_{i+1} | Q_i` and `q_{i+1} | q_i`,
    /// the quotient identity `q_i = Q_i / Q_{i+1}`, and that `Q_1` equals
    /// the characteristic polynomial computed by the trace recursion.
    /// Returns a description of the first violated invariant.
    pub fn verify(&self, x: &RationalMatrix) -> Result<(), String> {
        let n = self.n;
        if self.cap_q.len() != n + 1 || self.q.len() != n {
            return Err("tower has the wrong length".into());
        }
        if !self.cap_q[n].is_one() {
            return Err(format!("Q_{} = {} is not 1", n + 1, self.cap_q[n]));
        }
        for i in 0..n {
            if !self.cap_q[i + 1].divides(&self.cap_q[i]) {
                return Err(format!(
                    "Q_{} = {} does not divide Q_{} = {}",
                    i + 2,
                    self.cap_q[i + 1],
                    i + 1,
                    self.cap_q[i]
                ));
            }
            let ratio = self.cap_q[i].exact_div(&self.cap_q[i + 1]);
            if ratio != self.q[i] {
                return Err(format!(
                    "q_{} = {} differs from Q_{}/Q_{} = {}",
                    i + 1,
                    self.q[i],
                    i + 1,
                    i + 2,
                    ratio
                ));
            }
        }
        for i in 0..n - 1 {
            if !self.q[i + 1].divides(&self.q[i]) {
                return Err(format!(
                    "q_{} = {} does not divide q_{} = {}",
                    i + 2,
                    self.q[i + 1],
                    i + 1,
                    self.q[i]
                ));
            }
        }
        let product = self
            .q
            .iter()
            .fold(UniPoly::one(), |acc, p| &acc * p);
        if &product != self.char_poly() {
            return Err(format!(
                "product of invariant factors {} differs from Q_1 = {}",
                product,
                self.char_poly()
            ));
        }
        let char_by_traces = x.char_poly();
        if &char_by_traces != self.char_poly() {
            return Err(format!(
                "Q_1 = {} differs from the characteristic polynomial {} of the matrix",
                self.char_poly(),
                char_by_traces
            ));
        }
        Ok(())
    }

    /// Unchecked constructor, for tests that need a deliberately broken tower.
    #[doc(hidden)]
    pub fn from_raw_parts(n: usize, cap_q: Vec<UniPoly>, q: Vec<UniPoly>) -> Self {
        InvariantFactorProfile { n, cap_q, q }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows, Ambient::Sl).unwrap()
    }

    /// Jordan block of size n with zero eigenvalue.
    fn jordan(n: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zero(n, Ambient::Sl);
        for i in 0..n - 1 {
            m.set(i, i + 1, Rational::one());
        }
        m
    }

    /// Plain cofactor expansion with no sharing, as an independent oracle.
    fn naive_det(m: &[Vec<UniPoly>]) -> UniPoly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = UniPoly::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<UniPoly>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[i][c].clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &naive_det(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    fn naive_minors(m: &PolyMatrix, k: usize) -> Vec<UniPoly> {
        let n = m.n();
        let combs = combinations(n, k);
        let mut out = Vec::new();
        for (_, rows) in &combs {
            for (_, cols) in &combs {
                let sub: Vec<Vec<UniPoly>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m.at(i, j).clone()).collect())
                    .collect();
                out.push(naive_det(&sub));
            }
        }
        out
    }

    // ---- char_matrix ----

    #[test]
    fn char_matrix_entries() {
        let zero2 = RationalMatrix::zero(2, Ambient::Sl);
        let cm = zero2.char_matrix();
        let neg_t = -UniPoly::t();
        assert_eq!(cm.at(0, 0), &neg_t);
        assert_eq!(cm.at(0, 1), &UniPoly::zero());
        assert_eq!(cm.at(1, 1), &neg_t);

        let e12 = sl(&[&[0, 1], &[0, 0]]);
        let cm = e12.char_matrix();
        assert_eq!(cm.at(0, 1), &UniPoly::one());
        assert_eq!(cm.at(1, 0), &UniPoly::zero());

        let h = sl(&[&[1, 0], &[0, -1]]);
        let cm = h.char_matrix();
        assert_eq!(cm.at(0, 0), &UniPoly::from_int_coeffs(&[1, -1]));
        assert_eq!(cm.at(1, 1), &UniPoly::from_int_coeffs(&[-1, -1]));
    }

    // ---- minors ----

    #[test]
    fn minors_of_2x2_char_matrix() {
        let e12 = sl(&[&[0, 1], &[0, 0]]);
        let cm = e12.char_matrix();
        let ones = cm.minors(1).unwrap();
        assert_eq!(
            ones,
            vec![
                -UniPoly::t(),
                UniPoly::one(),
                UniPoly::zero(),
                -UniPoly::t()
            ]
        );

        let zero2 = RationalMatrix::zero(2, Ambient::Sl);
        assert_eq!(
            zero2.char_matrix().minors(2).unwrap(),
            vec![UniPoly::monomial(2)]
        );
    }

    #[test]
    fn minors_match_naive_cofactor_oracle() {
        // every 2x2 minor of the characteristic matrix of E_12 in sl(3)
        let e12 = sl(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let cm = e12.char_matrix();
        let fast = cm.minors(2).unwrap();
        let slow = naive_minors(&cm, 2);
        assert_eq!(fast, slow);
        assert!(fast.contains(&UniPoly::monomial(2)));
        assert!(fast.contains(&(-UniPoly::t())));
        assert!(fast.contains(&UniPoly::zero()));

        // a denser matrix, all levels
        let x = sl(&[&[1, 2, 3], &[0, -4, 1], &[5, 1, 3]]);
        let cm = x.char_matrix();
        for k in 1..=3 {
            assert_eq!(cm.minors(k).unwrap(), naive_minors(&cm, k));
        }
    }

    #[test]
    fn minors_rejects_out_of_range() {
        let cm = RationalMatrix::zero(2, Ambient::Sl).char_matrix();
        assert!(cm.minors(0).is_err());
        assert!(cm.minors(3).is_err());
    }

    // ---- invariant factors ----

    #[test]
    fn profile_of_regular_nilpotent() {
        let profile = jordan(3).invariant_factors();
        assert_eq!(profile.big_q_list(), &[
            UniPoly::monomial(3),
            UniPoly::one(),
            UniPoly::one(),
            UniPoly::one()
        ]);
        assert_eq!(profile.q_list(), &[
            UniPoly::monomial(3),
            UniPoly::one(),
            UniPoly::one()
        ]);
    }

    #[test]
    fn profile_of_zero_matrix() {
        let profile = RationalMatrix::zero(3, Ambient::Sl).invariant_factors();
        assert_eq!(profile.big_q_list(), &[
            UniPoly::monomial(3),
            UniPoly::monomial(2),
            UniPoly::monomial(1),
            UniPoly::one()
        ]);
        assert_eq!(profile.q_list(), &[UniPoly::t(), UniPoly::t(), UniPoly::t()]);
    }

    #[test]
    fn profile_of_subregular_nilpotent() {
        let e12 = sl(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let profile = e12.invariant_factors();
        assert_eq!(profile.big_q_list(), &[
            UniPoly::monomial(3),
            UniPoly::t(),
            UniPoly::one(),
            UniPoly::one()
        ]);
        assert_eq!(profile.q_list(), &[
            UniPoly::monomial(2),
            UniPoly::t(),
            UniPoly::one()
        ]);
    }

    #[test]
    fn profile_verifies_against_its_matrix() {
        let x = sl(&[&[-2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let profile = x.invariant_factors();
        assert!(profile.verify(&x).is_ok());

        // corrupt the tower: the checker must name the violation
        let mut cap_q: Vec<UniPoly> = profile.big_q_list().to_vec();
        cap_q[1] = UniPoly::monomial(1);
        let broken =
            InvariantFactorProfile::from_raw_parts(3, cap_q, profile.q_list().to_vec());
        let err = broken.verify(&x).unwrap_err();
        assert!(err.contains("does not divide") || err.contains("differs"));
    }

    #[test]
    fn char_poly_by_traces_matches_minor_route() {
        let samples = [
            sl(&[&[0, 1], &[0, 0]]),
            sl(&[&[1, 0], &[0, -1]]),
            sl(&[&[1, 2, 3], &[0, -4, 1], &[5, 1, 3]]),
            sl(&[&[-2, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        ];
        for x in &samples {
            assert_eq!(&x.char_poly(), x.invariant_factors().char_poly());
        }
    }

    #[test]
    fn minimal_polynomial_is_top_invariant_factor() {
        // independent oracle: smallest d with I, x, ..., x^d linearly dependent
        fn min_poly(x: &RationalMatrix) -> UniPoly {
            let n = x.n();
            let mut powers = vec![RationalMatrix::identity(n)];
            for _ in 0..n {
                powers.push(powers.last().unwrap().matmul(x));
            }
            for d in 1..=n {
                let mut cols: Vec<Vec<Rational>> = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        cols.push((0..=d).map(|k| powers[k].at(i, j).clone()).collect());
                    }
                }
                // solve sum_k c_k x^k = 0 with c_d = 1
                let kernel = crate::linalg::null_space(&cols, d + 1);
                for v in kernel {
                    if !v[d].is_zero() {
                        let inv = v[d].recip().unwrap();
                        return UniPoly::from_coeffs(v.iter().map(|c| c * &inv).collect());
                    }
                }
            }
            unreachable!("Cayley-Hamilton bounds the degree by n");
        }

        let samples = [
            jordan(3),
            sl(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
            sl(&[&[-2, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            sl(&[&[1, 2, 3], &[0, -4, 1], &[5, 1, 3]]),
        ];
        for x in &samples {
            assert_eq!(&min_poly(x), x.invariant_factors().q(1));
        }
    }

    // ---- kernel dimension ----

    #[test]
    fn kernel_dims() {
        let e12 = sl(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(e12.kernel_dim(&UniPoly::t()), 2);
        assert_eq!(e12.kernel_dim(&UniPoly::one()), 0);
        assert_eq!(jordan(3).kernel_dim(&UniPoly::monomial(3)), 3);
    }

    // ---- constructors and serialization ----

    #[test]
    fn sl_requires_zero_trace() {
        assert!(RationalMatrix::from_int_rows(&[&[1, 0], &[0, 0]], Ambient::Sl).is_err());
        assert!(RationalMatrix::from_int_rows(&[&[1, 0], &[0, 0]], Ambient::Gl).is_ok());
    }

    #[test]
    fn matrix_json_round_trip() {
        let x = sl(&[&[0, 1], &[-1, 0]]);
        let json = serde_json::to_string(&x).unwrap();
        let back: RationalMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);

        let bad = r#"{"n": 2, "ambient": "sl", "entries": [["1","0"],["0","0"]]}"#;
        assert!(serde_json::from_str::<RationalMatrix>(bad).is_err());
        let bad_shape = r#"{"n": 2, "ambient": "gl", "entries": [["1","0"]]}"#;
        assert!(serde_json::from_str::<RationalMatrix>(bad_shape).is_err());
    }

    #[test]
    fn conjugation_preserves_profile() {
        let x = sl(&[&[1, 2, 3], &[0, -4, 1], &[5, 1, 3]]);
        // unipotent conjugator with determinant 1
        let mut g = RationalMatrix::identity(3);
        g.set(0, 1, Rational::from_int(2));
        g.set(1, 2, Rational::from_int(-3));
        let y = x.conjugated_by(&g).unwrap();
        assert_eq!(x.invariant_factors(), y.invariant_factors());
    }

    // ---- properties ----

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
            prop::collection::vec(prop::collection::vec(-5i64..=5, n), n).prop_map(
                move |rows| {
                    let entries = rows
                        .iter()
                        .map(|r| r.iter().map(|&c| Rational::from_int(c)).collect())
                        .collect();
                    RationalMatrix::new(entries, Ambient::Gl).expect("square")
                },
            )
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn memoized_minors_match_naive_cofactors(x in arb_matrix(3)) {
                let cm = x.char_matrix();
                for k in 1..=3 {
                    prop_assert_eq!(cm.minors(k).unwrap(), naive_minors(&cm, k));
                }
            }

            #[test]
            fn tower_holds_on_arbitrary_matrices(x in arb_matrix(3)) {
                // the profile invariants do not require tracelessness
                prop_assert!(x.invariant_factors().verify(&x).is_ok());
            }
        }
    }
}
