//! Exact computer-algebra kernel for residual intersections.
//!
//! The crate is organized bottom-up: [`field`] and [`monomial`] provide the
//! scalars and exponent vectors, [`poly`] the sparse multivariate polynomial
//! arithmetic, [`ideal`] the Gröbner-basis calculus (membership, elimination,
//! intersection, colon, radical membership, dimension), [`module`] free-module
//! Gröbner machinery (syzygies, lifting), [`matrix`] polynomial matrices and
//! minor ideals, [`koszul`] the Koszul complex as a DG algebra, [`kitt`] the
//! Kitt ideal and its identity checks, and [`generic`] the generic extensions
//! R[U_ij] together with specialization and deformation verification.

pub mod error;
pub mod field;
pub mod monomial;
pub mod poly;
pub mod text;
pub mod ideal;
pub mod matrix;
pub mod module;
pub mod koszul;
pub mod kitt;
pub mod generic;
pub mod report;
pub mod oracle;

pub use error::{Error, Result};
pub use field::{Coeff, Field};
pub use monomial::{monomial_compare, Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial, RingRef};
pub use ideal::{DimensionResult, Height, Ideal};
pub use matrix::PolyMatrix;
pub use module::FreeVector;
pub use koszul::{CycleBasis, KoszulElement};
pub use kitt::{KittInput, KittResult};
pub use generic::GenericExtension;
pub use report::{Check, Verdict, VerificationReport};
