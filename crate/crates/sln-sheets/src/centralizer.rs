//! Exact linear algebra on centralizers: null spaces of the bracket with a
//! fixed matrix, derived subalgebras, trace-form orthogonality, and the
//! dimension counts attached to nilpotent matrices of a given Jordan type.

use serde::Serialize;

use crate::linalg::{null_space, rank, RowSpan};
use crate::matrix::{Ambient, RationalMatrix};
use crate::sheets::{nilpotent_representative, Partition};
use crate::{Error, Rational};

/// A linear subspace of `n x n` matrices, held as an independent basis.
/// Serializes as the plain list of basis matrices.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct MatrixSubspace {
    #[serde(skip)]
    n: usize,
    #[serde(skip)]
    ambient: Ambient,
    basis: Vec<RationalMatrix>,
}

impl MatrixSubspace {
    /// Validates exact linear independence, and tracelessness under `sl`.
    pub fn new(
        n: usize,
        ambient: Ambient,
        basis: Vec<RationalMatrix>,
    ) -> Result<MatrixSubspace, Error> {
        if basis.iter().any(|m| m.n() != n) {
            return Err(Error::InvalidMatrix("basis sizes differ".into()));
        }
        if ambient == Ambient::Sl {
            for m in &basis {
                m.require_traceless()?;
            }
        }
        let rows: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
        if rank(rows) != basis.len() {
            return Err(Error::InvalidMatrix("basis is linearly dependent".into()));
        }
        Ok(MatrixSubspace { n, ambient, basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RationalMatrix] {
        &self.basis
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        self.span().contains(&flatten(m))
    }

    pub fn same_space(&self, other: &MatrixSubspace) -> bool {
        self.n == other.n && self.span().same_span(&other.span())
    }

    fn span(&self) -> RowSpan {
        let mut span = RowSpan::new(self.n * self.n);
        for m in &self.basis {
            span.insert(flatten(m));
        }
        span
    }
}

fn flatten(m: &RationalMatrix) -> Vec<Rational> {
    m.entries().iter().flatten().cloned().collect()
}

fn unflatten(n: usize, v: &[Rational]) -> RationalMatrix {
    let mut m = RationalMatrix::zero(n, Ambient::Gl);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, v[i * n + j].clone());
        }
    }
    m
}

/// Basis of the ambient algebra: all elementary matrices for `gl`, or the
/// off-diagonal ones plus consecutive diagonal differences for `sl`.
pub fn ambient_basis(n: usize, ambient: Ambient) -> Vec<RationalMatrix> {
    let mut basis = Vec::new();
    match ambient {
        Ambient::Gl => {
            for i in 0..n {
                for j in 0..n {
                    basis.push(RationalMatrix::basis_elem(n, i, j));
                }
            }
        }
        Ambient::Sl => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        basis.push(RationalMatrix::basis_elem(n, i, j));
                    }
                }
            }
            for i in 0..n - 1 {
                let mut h = RationalMatrix::zero(n, Ambient::Sl);
                h.set(i, i, Rational::one());
                h.set(i + 1, i + 1, -Rational::one());
                basis.push(h);
            }
        }
    }
    basis
}

/// The centralizer `{y in ambient : [x, y] = 0}`, computed as the exact null
/// space of the bracket map on the ambient basis.
pub fn centralizer(x: &RationalMatrix, ambient: Ambient) -> Result<MatrixSubspace, Error> {
    if ambient == Ambient::Sl {
        x.require_traceless()?;
    }
    let n = x.n();
    let basis = ambient_basis(n, ambient);
    // columns: the flattened bracket [x, b_k]; solutions are coordinates
    let columns: Vec<Vec<Rational>> = basis.iter().map(|b| flatten(&x.commutator(b))).collect();
    let rows: Vec<Vec<Rational>> = (0..n * n)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let kernel = null_space(&rows, basis.len());
    let members = kernel
        .into_iter()
        .map(|coords| {
            let mut m = RationalMatrix::zero(n, Ambient::Gl);
            for (c, b) in coords.iter().zip(&basis) {
                if !c.is_zero() {
                    m = m.add(&b.scale(c));
                }
            }
            RationalMatrix::new(m.entries().to_vec(), ambient)
                .expect("kernel members lie in the ambient algebra")
        })
        .collect();
    MatrixSubspace::new(n, ambient, members)
}

/// The span of all brackets of basis elements, iterated to a fixed point.
/// For a subspace closed under the bracket (every centralizer is) the first
/// pass already spans the derived subalgebra.
pub fn derived_subalgebra(s: &MatrixSubspace) -> MatrixSubspace {
    let n = s.n();
    let mut span = RowSpan::new(n * n);
    let mut frontier: Vec<RationalMatrix> = s.basis().to_vec();
    loop {
        let mut grew = false;
        for i in 0..frontier.len() {
            for j in i + 1..frontier.len() {
                grew |= span.insert(flatten(&frontier[i].commutator(&frontier[j])));
            }
        }
        let next: Vec<RationalMatrix> =
            span.basis().iter().map(|v| unflatten(n, v)).collect();
        if !grew {
            let basis = next;
            return MatrixSubspace::new(n, s.ambient(), basis)
                .expect("echelon rows are independent and brackets are traceless");
        }
        frontier = next;
    }
}

/// Codimension of the derived subalgebra inside the centralizer, i.e. the
/// dimension of the space of centralizer-invariant linear forms on it.
pub fn coadjoint_invariant_dim(x: &RationalMatrix, ambient: Ambient) -> Result<usize, Error> {
    let c = centralizer(x, ambient)?;
    let d = derived_subalgebra(&c);
    Ok(c.dim() - d.dim())
}

/// True when all pairwise brackets of basis elements vanish.
pub fn is_abelian(s: &MatrixSubspace) -> bool {
    let basis = s.basis();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !basis[i].commutator(&basis[j]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Checks that the orthogonal complement of the orbit tangent space
/// `{[z, x]}` under the invariant form `2n * tr(yz)` is exactly the
/// centralizer of `x` in the traceless matrices, as subspaces.
pub fn killing_orthogonality_check(x: &RationalMatrix) -> Result<bool, Error> {
    x.require_traceless()?;
    let n = x.n();
    let sl_basis = ambient_basis(n, Ambient::Sl);
    let dim_sl = sl_basis.len();

    // tangent space of the orbit
    let mut tangent = RowSpan::new(n * n);
    let mut tangent_basis = Vec::new();
    for b in &sl_basis {
        let v = b.commutator(x);
        if tangent.insert(flatten(&v)) {
            tangent_basis.push(v);
        }
    }

    // orthogonal complement within sl, via the Gram rows of the form
    let two_n = Rational::from_int(2 * n as i64);
    let gram_rows: Vec<Vec<Rational>> = tangent_basis
        .iter()
        .map(|tb| {
            sl_basis
                .iter()
                .map(|b| &two_n * &b.matmul(tb).trace())
                .collect()
        })
        .collect();
    let perp_coords = null_space(&gram_rows, dim_sl);
    let mut perp = RowSpan::new(n * n);
    for coords in &perp_coords {
        let mut m = RationalMatrix::zero(n, Ambient::Gl);
        for (c, b) in coords.iter().zip(&sl_basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        perp.insert(flatten(&m));
    }

    let cent = centralizer(x, Ambient::Sl)?;
    let cent_span = {
        let mut span = RowSpan::new(n * n);
        for m in cent.basis() {
            span.insert(flatten(m));
        }
        span
    };

    Ok(perp.same_span(&cent_span) && tangent.dim() + cent.dim() == dim_sl)
}

/// For the nilpotent matrix of Jordan type `sigma`, checks that the matrices
/// `x^k P_i` (`P_i` the projection onto the i-th Jordan block,
/// `0 <= k < b_i - b_{i+1}`) descend to a basis of the centralizer modulo
/// its derived subalgebra. There are `b_1` of them.
pub fn centralizer_quotient_basis_check(sigma: &Partition) -> bool {
    let x = nilpotent_representative(sigma);
    let n = sigma.n();
    let cent = centralizer(&x, Ambient::Gl).expect("gl has no trace condition");
    let derived = derived_subalgebra(&cent);

    let b1 = sigma.part(1);
    if cent.dim() != derived.dim() + b1 {
        return false;
    }

    // block projections
    let mut span = RowSpan::new(n * n);
    for m in derived.basis() {
        span.insert(flatten(m));
    }
    let cent_span = {
        let mut s = RowSpan::new(n * n);
        for m in cent.basis() {
            s.insert(flatten(m));
        }
        s
    };

    let mut offset = 0;
    let mut count = 0;
    for i in 1..=sigma.num_parts() {
        let b = sigma.part(i);
        let mut proj = RationalMatrix::zero(n, Ambient::Gl);
        for r in 0..b {
            proj.set(offset + r, offset + r, Rational::one());
        }
        let mut power = proj.clone();
        for _ in 0..b - sigma.part(i + 1) {
            // each family member must commute with x and be new modulo the span
            if !cent_span.contains(&flatten(&power)) {
                return false;
            }
            if !span.insert(flatten(&power)) {
                return false;
            }
            count += 1;
            power = x.matmul(&power);
        }
        offset += b;
    }

    count == b1 && span.dim() == cent.dim()
}

/// Every off-diagonal block component (with respect to the Jordan blocks of
/// `sigma`) of the centralizer of the nilpotent representative lies in the
/// derived subalgebra.
pub fn off_diagonal_components_in_derived(sigma: &Partition) -> bool {
    let x = nilpotent_representative(sigma);
    let n = sigma.n();
    let cent = centralizer(&x, Ambient::Gl).expect("gl has no trace condition");
    let derived = derived_subalgebra(&cent);
    let derived_span = {
        let mut s = RowSpan::new(n * n);
        for m in derived.basis() {
            s.insert(flatten(m));
        }
        s
    };

    let starts: Vec<usize> = sigma
        .parts()
        .iter()
        .scan(0, |acc, &b| {
            let s = *acc;
            *acc += b;
            Some(s)
        })
        .collect();
    for m in cent.basis() {
        for (bi, &si) in starts.iter().enumerate() {
            for (bj, &sj) in starts.iter().enumerate() {
                if bi == bj {
                    continue;
                }
                // the component mapping block bi into block bj: rows in
                // block bj, columns in block bi
                let mut comp = RationalMatrix::zero(n, Ambient::Gl);
                let mut nonzero = false;
                for r in 0..sigma.part(bj + 1) {
                    for c in 0..sigma.part(bi + 1) {
                        let v = m.at(sj + r, si + c).clone();
                        if !v.is_zero() {
                            nonzero = true;
                        }
                        comp.set(sj + r, si + c, v);
                    }
                }
                if nonzero && !derived_span.contains(&flatten(&comp)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Summary of the centralizer of one matrix, as the CLI reports it.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub centralizer_dim: usize,
    pub derived_dim: usize,
    pub codim: usize,
    pub abelian: bool,
}

pub fn dimension_report(x: &RationalMatrix, ambient: Ambient) -> Result<DimensionReport, Error> {
    let c = centralizer(x, ambient)?;
    let d = derived_subalgebra(&c);
    Ok(DimensionReport {
        centralizer_dim: c.dim(),
        derived_dim: d.dim(),
        codim: c.dim() - d.dim(),
        abelian: is_abelian(&c),
    })
}
