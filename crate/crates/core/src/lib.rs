//! Exact Dunkl–Clifford symbolic engine.
//!
//! Everything is generic over an exact rational [`Scalar`]; the aliases
//! below fix it to arbitrary-precision [`BigRational`].

pub mod axial;
pub mod clifford;
pub mod dunkl;
pub mod error;
pub mod fueter;
pub mod groups;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod report;
pub mod scalar;

pub use num_rational::BigRational;

pub use clifford::Blade;
pub use dunkl::Ambient;
pub use error::{Error, Result};
pub use groups::GroupKind;
pub use report::{CheckEntry, VerificationReport, ENGINE_VERSION};
pub use scalar::Scalar;

pub type Rational = BigRational;
pub type Multivector = clifford::Multivector<Rational>;
pub type Polynomial = poly::CliffordPolynomial<Rational>;
pub type ScalarPolynomial = poly::ScalarPoly<Rational>;
pub type Matrix = linalg::Matrix<Rational>;
pub type ReflectionGroup = groups::ReflectionGroup<Rational>;
pub type DunklContext = dunkl::DunklContext<Rational>;
pub type AxialPair = axial::AxialPair<Rational>;
pub type MonogenicBasis = fueter::MonogenicBasis<Rational>;
pub type FischerDecomposition = fueter::FischerDecomposition<Rational>;
pub type FueterOutcome = fueter::FueterOutcome<Rational>;
