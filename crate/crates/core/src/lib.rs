//! Exact computations in the universal enveloping algebra of the centrally
//! extended Schrödinger algebra and in its category O.
//!
//! Everything is generic over an exact [`Scalar`] field; the aliases at the
//! crate root fix it to arbitrary-precision rationals.

pub mod annihilators;
pub mod blocks;
pub mod central;
pub mod error;
pub mod linalg;
pub mod module;
pub mod pbw;
pub mod scalar;
pub mod verma;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use module::TruncatedModule;
pub use pbw::{commutator_table, parse_element, AlgebraElement, Generator, Monomial};
pub use scalar::{frac, int, BigQ, Scalar};
pub use weight::Weight;

pub type Rational = BigQ;
pub type Element = AlgebraElement<Rational>;
pub type QWeight = Weight<Rational>;
pub type QModule = TruncatedModule<Rational>;
pub type QMatrix = linalg::Matrix<Rational>;
pub type QWeylElement = weyl::WeylElement<Rational>;
pub type QBlockDescriptor = blocks::BlockDescriptor<Rational>;
pub type QSlice = annihilators::FilteredIdealSlice<Rational>;
