//! Points of order 5 on E₅(b): Y² + (1+b)XY + bY = X³ + bX², computed and
//! checked exactly over Q(ζ₅) and the function fields Q(ζ₅)(b), Q(ζ₅)(u).
//! Includes a radical solution of the quintic X-factor and the q-expansion
//! of r(τ) = q^{1/5}∏(1−qⁿ)^{(n/5)}.

pub mod error;
pub mod check;
pub mod curve;
pub mod field;
pub mod ratfunc;
pub mod rrcf;
pub mod torsion;
pub mod verify;
pub mod watson;

pub use error::{Error, Result};
