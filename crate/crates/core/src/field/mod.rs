//! Exact scalar arithmetic.
//!
//! [`Rational`] is the base scalar, [`Cyclo`] is the cyclotomic field
//! Q(ζ₅) in the basis {1, ζ, ζ², ζ³}, and [`ComplexNum`] is the floating
//! point field used for numeric spot checks. All three implement [`Field`],
//! which is the only interface the polynomial and curve code relies on.

mod complex;
mod cyclo;
mod rational;

pub use complex::ComplexNum;
pub use cyclo::Cyclo;
pub use rational::Rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A commutative field with exact or tolerance-aware zero tests.
///
/// The by-reference methods are the primitives; the owned `std::ops`
/// impls forward to them.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Multiplicative inverse; `Error::DivisionByZero` on zero.
    fn inv(&self) -> Result<Self>;

    fn div_ref(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Zero test used by the group law. Exact fields ignore `tol`.
    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn square(&self) -> Self {
        self.mul_ref(self)
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Integer power allowing negative exponents.
    fn powi(&self, exp: i32) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u32))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }
}

/// An exponent k ∈ {1, 2, 3, 4}, naming the automorphism ζ ↦ ζᵏ of Q(ζ₅)
/// or the complex embedding ζ ↦ exp(2πik/5).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaloisExp(u8);

impl GaloisExp {
    pub const ALL: [GaloisExp; 4] = [GaloisExp(1), GaloisExp(2), GaloisExp(3), GaloisExp(4)];
    pub const IDENTITY: GaloisExp = GaloisExp(1);
    /// ζ ↦ ζ², the generator σ of the Galois group.
    pub const SIGMA: GaloisExp = GaloisExp(2);
    /// ζ ↦ ζ⁴ = ζ⁻¹, i.e. σ² (complex conjugation under the principal embedding).
    pub const SIGMA2: GaloisExp = GaloisExp(4);

    pub fn new(k: i64) -> Result<Self> {
        match k {
            1..=4 => Ok(GaloisExp(k as u8)),
            _ => Err(Error::InvalidGaloisExponent(k)),
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Composition: ζ ↦ ζ^(k·m mod 5).
    pub fn compose(self, other: GaloisExp) -> GaloisExp {
        GaloisExp((self.0 * other.0) % 5)
    }
}

/// Coefficient-wise action of Gal(Q(ζ₅)/Q).
pub trait GaloisAction: Sized {
    fn galois(&self, k: GaloisExp) -> Self;
}

/// Ring homomorphism into the complex numbers, ζ ↦ exp(2πik/5).
pub trait Embed {
    fn embed(&self, k: GaloisExp) -> ComplexNum;
}

/// Owned `std::ops` impls forwarding to the by-reference [`Field`] methods.
macro_rules! forward_field_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::field::Field::add_ref(&self, &rhs)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::field::Field::sub_ref(&self, &rhs)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::field::Field::mul_ref(&self, &rhs)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::field::Field::neg_ref(&self)
            }
        }
        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                $crate::field::Field::add_ref(self, rhs)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                $crate::field::Field::sub_ref(self, rhs)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                $crate::field::Field::mul_ref(self, rhs)
            }
        }
    };
}

pub(crate) use forward_field_ops;
