//! Deterministic sampling of conjugators, quotient points and sheet members.
//!
//! One seedable generator drives everything, so a run is reproducible from
//! its seed alone. Conjugators are products of `2n` elementary unipotent
//! matrices with small integer entries: they have determinant 1 exactly and
//! keep coefficient growth bounded. Sheet members are produced by conjugating
//! the companion-block section of a random quotient point, which guarantees
//! exact sheet membership.

use crate::matrix::RationalMatrix;
use crate::quotient::QuotientPoint;
use crate::sheets::Partition;
use crate::Rational;

/// A splitmix64 generator; deterministic for a given seed, independent of
/// platform and build.
pub struct Sampler {
    state: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { state: seed }
    }

    /// Derives an independent stream, so cases can be reordered freely.
    pub fn fork(&self, label: &str) -> Sampler {
        let mut h: u64 = 0xcbf29ce484222325; // FNV offset basis
        for b in label.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        Sampler {
            state: self.state ^ h,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let range = (hi - lo + 1) as u64;
        lo + (self.next_u64() % range) as i64
    }

    /// A bounded-height rational: numerator in `[-4, 4]`, denominator in `[1, 3]`.
    pub fn rational(&mut self) -> Rational {
        Rational::new(self.int_in(-4, 4), self.int_in(1, 3))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// A product of `2n` elementary unipotent matrices `I + c E_ij` with
    /// integer `c` in `[-3, 3]`; determinant exactly 1.
    pub fn unipotent_conjugator(&mut self, n: usize) -> RationalMatrix {
        let mut g = RationalMatrix::identity(n);
        if n < 2 {
            return g;
        }
        for _ in 0..2 * n {
            let i = self.int_in(0, n as i64 - 1) as usize;
            let mut j = self.int_in(0, n as i64 - 2) as usize;
            if j >= i {
                j += 1;
            }
            let c = Rational::from_int(self.int_in(-3, 3));
            let mut elem = RationalMatrix::identity(n);
            elem.set(i, j, c);
            g = g.matmul(&elem);
        }
        g
    }

    /// A random conjugate `g x g^{-1}` of `x`.
    pub fn conjugate(&mut self, x: &RationalMatrix) -> RationalMatrix {
        let g = self.unipotent_conjugator(x.n());
        x.conjugated_by(&g).expect("unipotent products are invertible")
    }

    /// A random point of the quotient of the sheet of `sigma`: free chart
    /// coordinates are drawn at random and the eliminated coefficient is
    /// solved from the trace relation.
    pub fn quotient_point(&mut self, sigma: &Partition) -> QuotientPoint {
        let coords: Vec<Rational> = (1..sigma.part(1)).map(|_| self.rational()).collect();
        QuotientPoint::from_chart(sigma.clone(), &coords)
            .expect("chart coordinates are unconstrained")
    }

    /// A random member of the sheet of `sigma`, exact by construction.
    pub fn sheet_element(&mut self, sigma: &Partition) -> RationalMatrix {
        let z = self.quotient_point(sigma);
        self.conjugate(&z.section())
    }
}
