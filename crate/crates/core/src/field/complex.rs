use std::fmt;

use num_complex::Complex64;

use super::{forward_field_ops, Field};
use crate::error::{Error, Result};

/// Double-precision complex number used for numeric checks.
///
/// `==` is exact float equality; tolerance-aware comparison goes through
/// [`Field::is_negligible`].
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ComplexNum(pub Complex64);

impl ComplexNum {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexNum(Complex64::new(re, im))
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn abs(&self) -> f64 {
        self.0.norm()
    }

    pub fn is_finite(&self) -> bool {
        self.0.re.is_finite() && self.0.im.is_finite()
    }

    pub fn exp(&self) -> Self {
        ComplexNum(self.0.exp())
    }

    pub fn scale(&self, s: f64) -> Self {
        ComplexNum(self.0 * s)
    }

    /// Principal n-th root.
    pub fn principal_root(&self, n: u32) -> Self {
        ComplexNum(self.0.powf(1.0 / f64::from(n)))
    }
}

impl From<Complex64> for ComplexNum {
    fn from(z: Complex64) -> Self {
        ComplexNum(z)
    }
}

impl Field for ComplexNum {
    fn zero() -> Self {
        ComplexNum::new(0.0, 0.0)
    }
    fn one() -> Self {
        ComplexNum::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        ComplexNum::new(n as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }
    fn add_ref(&self, other: &Self) -> Self {
        ComplexNum(self.0 + other.0)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        ComplexNum(self.0 - other.0)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        ComplexNum(self.0 * other.0)
    }
    fn neg_ref(&self) -> Self {
        ComplexNum(-self.0)
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(ComplexNum(self.0.inv()))
        }
    }
    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
}

forward_field_ops!(ComplexNum);

impl fmt::Debug for ComplexNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.0.re, self.0.im)
    }
}

impl fmt::Display for ComplexNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::ops::Div for ComplexNum {
    type Output = ComplexNum;

    fn div(self, rhs: ComplexNum) -> ComplexNum {
        ComplexNum(self.0 / rhs.0)
    }
}
