//! Exact computations for traceless matrices under conjugation: invariant
//! factors of `x - tI`, sheet classification by partitions, quotient
//! coordinates for each sheet, orbit-closure tests, closure-ideal
//! generators, and centralizer dimension invariants.
//!
//! Everything runs over arbitrary-precision rationals. There is no floating
//! point and no modular shortcut anywhere, so every equality the API reports
//! is an exact identity.
//!
//! The pieces fit together like this:
//!
//! - [`Rational`] and [`UniPoly`] are the scalar and polynomial layers.
//! - [`matrix`] computes all minors of the characteristic matrix `x - tI`
//!   and folds their gcds into the tower `Q_i` and the invariant factors
//!   `q_i` ([`matrix::InvariantFactorProfile`]).
//! - [`sheets`] reads the sheet of `x` off the degrees `deg q_i = b_i` and
//!   maps partitions to nilpotent representatives.
//! - [`quotient`] packages the ratios `p_i = q_i / q_{i+1}` into a point of
//!   an affine space of dimension `b_1 - 1`, with an explicit companion-block
//!   section of the quotient map.
//! - [`closure`] decides orbit-closure membership by divisibility of the
//!   `Q_i` and produces the symbolic remainder generators that cut out a
//!   fiber of the universal family.
//! - [`centralizer`] does exact linear algebra on centralizers: dimensions,
//!   derived subalgebras, abelianness, trace-form orthogonality.
//! - [`verify`] replays every invariant above on seeded random samples.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `sln-sheets` binary exposes the same operations as subcommands.
//!
//! ```
//! use sln_sheets::{classify_sheet, quotient_point, Ambient, RationalMatrix, UniPoly};
//!
//! // a nilpotent matrix of Jordan type (2,1)
//! let x = RationalMatrix::from_int_rows(
//!     &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]],
//!     Ambient::Sl,
//! )?;
//!
//! let profile = x.invariant_factors();
//! assert_eq!(profile.q(1), &UniPoly::monomial(2)); // minimal polynomial t^2
//!
//! let sheet = classify_sheet(&x)?;
//! assert_eq!(sheet.sigma.parts(), &[2, 1]);
//! assert_eq!(sheet.orbit_dim, 4);
//!
//! let z = quotient_point(&x)?;
//! assert_eq!(quotient_point(&z.section())?, z);
//! # Ok::<(), sln_sheets::Error>(())
//! ```

pub mod centralizer;
pub mod closure;
mod error;
mod linalg;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod quotient;
pub mod rational;
pub mod sample;
pub mod sheets;
pub mod verify;

pub use error::Error;
pub use matrix::{Ambient, InvariantFactorProfile, PolyMatrix, RationalMatrix};
pub use mpoly::MultiPoly;
pub use poly::UniPoly;
pub use quotient::{quotient_point, QuotientPoint};
pub use rational::Rational;
pub use sheets::{
    classify_sheet, enumerate_sheets, nilpotent_representative, Partition, SheetDescriptor,
};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
