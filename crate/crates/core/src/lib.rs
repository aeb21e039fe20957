//! Complete elliptic integrals, the Toader/contraharmonic/power mean family
//! and the sharp blend bounds relating them, together with the numerical
//! machinery that checks every claimed inequality.
//!
//! The numerics are generic over [`Scalar`]; the aliases below fix the two
//! instantiations used in practice: `f64` for evaluation and the
//! double-double [`DoubleDouble`] for resolving inequalities whose margin
//! falls below `f64` resolution.

pub mod bounds;
pub mod dd;
pub mod elliptic;
pub mod error;
pub mod means;
pub mod quadrature;
pub mod scalar;
pub mod sharpness;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use dd::DoubleDouble;

pub type Modulus64 = elliptic::Modulus<f64>;
pub type ModulusDd = elliptic::Modulus<DoubleDouble>;
pub type EllipticValue64 = elliptic::EllipticValue<f64>;
pub type PositivePair64 = means::PositivePair<f64>;
pub type PositivePairDd = means::PositivePair<DoubleDouble>;
pub type InterpParam64 = means::InterpParam<f64>;
pub type AlphaWeight64 = bounds::AlphaWeight<f64>;
pub type GapParams64 = bounds::GapParams<f64>;
pub type BoundEnvelope64 = bounds::BoundEnvelope<f64>;
pub type ThresholdEstimate64 = sharpness::ThresholdEstimate<f64>;
pub type Witness64 = sharpness::Witness<f64>;
