//! Exact Gaussian elimination over the rationals: rank, null spaces,
//! inverses, and incremental row spans. Internal to the crate.

use crate::Rational;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// column indices in order.
pub(crate) fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(pivot_row) = (row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot_row);
        let inv = rows[row][col].recip().expect("pivot is nonzero");
        for c in col..ncols {
            rows[row][c] = &rows[row][c] * &inv;
        }
        for r in 0..nrows {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    rows[r][c] = &rows[r][c] - &(&factor * &rows[row][c]);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub(crate) fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    rref(&mut rows).len()
}

/// Basis of the right null space `{v : M v = 0}` of an `nrows x ncols` matrix.
pub(crate) fn null_space(matrix: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = matrix.to_vec();
    let pivots = rref(&mut rows);
    let piv_set: Vec<Option<usize>> = {
        let mut set = vec![None; ncols];
        for (r, &c) in pivots.iter().enumerate() {
            set[c] = Some(r);
        }
        set
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if piv_set[free].is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (col, &row) in piv_set.iter().enumerate() {
            if let Some(r) = row {
                v[col] = -rows[r][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse by Gauss-Jordan on `[M | I]`; `None` for singular input.
pub(crate) fn invert(matrix: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// An incrementally built row space kept in reduced echelon form, used for
/// span reduction, membership tests and subspace comparisons.
pub(crate) struct RowSpan {
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub(crate) fn new(ncols: usize) -> Self {
        RowSpan {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Reduces `v` against the current basis; the result is zero iff `v` is in the span.
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if !v[piv].is_zero() {
                let factor = v[piv].clone();
                for c in piv..self.ncols {
                    v[c] = &v[c] - &(&factor * &row[c]);
                }
            }
        }
        v
    }

    pub(crate) fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Rational::is_zero)
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub(crate) fn insert(&mut self, v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[piv].recip().expect("pivot is nonzero");
        for c in piv..self.ncols {
            v[c] = &v[c] * &inv;
        }
        // back-substitute into the existing rows to stay in reduced form
        for (row, &rpiv) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[piv].is_zero() {
                let factor = row[piv].clone();
                for c in piv.min(rpiv)..self.ncols {
                    row[c] = &row[c] - &(&factor * &v[c]);
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < piv);
        self.rows.insert(pos, v);
        self.pivots.insert(pos, piv);
        true
    }

    /// True when the two spans are the same subspace.
    pub(crate) fn same_span(&self, other: &RowSpan) -> bool {
        self.dim() == other.dim() && self.rows.iter().all(|r| other.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| q(c)).collect())
            .collect()
    }

    #[test]
    fn rank_and_rref() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(m), 2);
        assert_eq!(rank(mat(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn null_space_is_kernel() {
        // x + y + z = 0 has a 2-dimensional kernel
        let m = mat(&[&[1, 1, 1]]);
        let basis = null_space(&m, 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let dot = v.iter().fold(Rational::zero(), |acc, c| acc + c);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn invert_round_trip() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = invert(&m).unwrap();
        // m * inv = I
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Rational::zero();
                for k in 0..2 {
                    acc = acc + &m[i][k] * &inv[k][j];
                }
                assert_eq!(acc, if i == j { q(1) } else { q(0) });
            }
        }
        assert!(invert(&mat(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn row_span_membership() {
        let mut span = RowSpan::new(3);
        assert!(span.insert(vec![q(1), q(2), q(0)]));
        assert!(span.insert(vec![q(0), q(1), q(1)]));
        assert!(!span.insert(vec![q(1), q(3), q(1)]));
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&[q(2), q(5), q(1)]));
        assert!(!span.contains(&[q(0), q(0), q(1)]));
    }
}
