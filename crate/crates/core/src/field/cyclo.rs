use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{forward_field_ops, ComplexNum, Embed, Field, GaloisAction, GaloisExp, Rational};
use crate::error::{Error, Result};

/// An element c₀ + c₁ζ + c₂ζ² + c₃ζ³ of Q(ζ₅).
///
/// Stored as four integer numerators over one positive common denominator,
/// with gcd(c₀, c₁, c₂, c₃, den) = 1. Zero is `[0,0,0,0]/1`. Products are
/// reduced with ζ⁵ = 1 and ζ⁴ = −1 − ζ − ζ² − ζ³, so the representation is
/// unique and equality is coordinate equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    num: [BigInt; 4],
    den: BigInt,
}

impl Cyclo {
    fn from_parts(num: [BigInt; 4], den: BigInt) -> Self {
        let mut c = Cyclo { num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        debug_assert!(!self.den.is_zero());
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            for c in &mut self.num {
                *c = -&*c;
            }
            self.den = -&self.den;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    /// Folds a vector of coefficients of 1, ζ, …, ζ⁴ into the basis.
    fn from_five(p: [BigInt; 5], den: BigInt) -> Self {
        let [p0, p1, p2, p3, p4] = p;
        Self::from_parts([p0 - &p4, p1 - &p4, p2 - &p4, p3 - &p4], den)
    }

    pub fn from_coords(coords: [Rational; 4]) -> Self {
        let mut den = BigInt::one();
        for c in &coords {
            den = den.lcm(c.denom());
        }
        let num = coords.map(|c| c.numer() * (&den / c.denom()));
        Self::from_parts(num, den)
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::from_parts(
            [r.numer().clone(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            r.denom().clone(),
        )
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Self::from_parts(c.map(BigInt::from), BigInt::one())
    }

    /// p + q·α with α = √5 = ζ − ζ² − ζ³ + ζ⁴.
    pub fn quad(p: Rational, q: Rational) -> Self {
        Self::from_rational(&p) + Self::alpha() * Self::from_rational(&q)
    }

    /// Shorthand for integer p + q·α.
    pub fn quad_int(p: i64, q: i64) -> Self {
        Self::quad(p.into(), q.into())
    }

    pub fn zeta() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    /// ζᵏ for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let mut p: [BigInt; 5] = Default::default();
        p[k.rem_euclid(5) as usize] = BigInt::one();
        Self::from_five(p, BigInt::one())
    }

    /// α = ζ − ζ² − ζ³ + ζ⁴, the square root of 5 mapped to +√5 under the
    /// principal embedding.
    pub fn alpha() -> Self {
        Self::from_ints([-1, 0, -2, -2])
    }

    /// ε = ζ + ζ⁴ = (−1 + α)/2.
    pub fn epsilon() -> Self {
        Self::from_ints([-1, 0, -1, -1])
    }

    /// ε̄ = ζ² + ζ³ = (−1 − α)/2.
    pub fn epsilon_bar() -> Self {
        Self::from_ints([0, 0, 1, 1])
    }

    /// η = (ζ − 1)/√5.
    pub fn eta() -> Self {
        (Self::zeta() - Self::one())
            .div_ref(&Self::alpha())
            .expect("alpha is a unit")
    }

    pub fn coord(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone()).expect("positive denominator")
    }

    pub fn coords(&self) -> [Rational; 4] {
        [0, 1, 2, 3].map(|i| self.coord(i))
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(self.coord(0))
        } else {
            None
        }
    }

    /// Product of the four Galois conjugates.
    pub fn norm(&self) -> Rational {
        let n = self.mul_ref(&self.other_conjugates());
        n.to_rational().expect("norm lies in Q")
    }

    fn other_conjugates(&self) -> Self {
        self.galois(GaloisExp::new(2).unwrap())
            .mul_ref(&self.galois(GaloisExp::new(3).unwrap()))
            .mul_ref(&self.galois(GaloisExp::new(4).unwrap()))
    }

    /// Multi-line-free human readable form such as `1 + 2ζ - 1/3ζ^3`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => "ζ".to_string(),
                _ => format!("ζ^{i}"),
            };
            if i == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Field for Cyclo {
    fn zero() -> Self {
        Cyclo {
            num: Default::default(),
            den: BigInt::one(),
        }
    }
    fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }
    fn from_i64(n: i64) -> Self {
        Self::from_ints([n, 0, 0, 0])
    }
    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.den == other.den {
            let num = [0, 1, 2, 3].map(|i| &self.num[i] + &other.num[i]);
            Self::from_parts(num, self.den.clone())
        } else {
            let num = [0, 1, 2, 3].map(|i| &self.num[i] * &other.den + &other.num[i] * &self.den);
            Self::from_parts(num, &self.den * &other.den)
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut p: [BigInt; 5] = Default::default();
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    p[(i + j) % 5] += a * b;
                }
            }
        }
        Self::from_five(p, &self.den * &other.den)
    }

    fn neg_ref(&self) -> Self {
        Cyclo {
            num: [0, 1, 2, 3].map(|i| -&self.num[i]),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let conj = self.other_conjugates();
        let n = self.mul_ref(&conj).to_rational().expect("norm lies in Q");
        Ok(conj.mul_ref(&Self::from_rational(&n.inv()?)))
    }
}

forward_field_ops!(Cyclo);

impl GaloisAction for Cyclo {
    fn galois(&self, k: GaloisExp) -> Self {
        let k = k.get() as usize;
        let mut p: [BigInt; 5] = Default::default();
        for (j, c) in self.num.iter().enumerate() {
            p[(j * k) % 5] += c;
        }
        Self::from_five(p, self.den.clone())
    }
}

impl Embed for Cyclo {
    fn embed(&self, k: GaloisExp) -> ComplexNum {
        let d = Rational::from_bigint(self.den.clone()).to_f64();
        let mut acc = ComplexNum::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            let angle = 2.0 * PI * (j as f64) * f64::from(k.get()) / 5.0;
            let c = Rational::from_bigint(c.clone()).to_f64() / d;
            acc = acc + ComplexNum::new(c * angle.cos(), c * angle.sin());
        }
        acc
    }
}

impl From<Rational> for Cyclo {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

/// Bracketed coordinates `[c0,c1,c2,c3]`; rational entries as `p` or `p/q`.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coords();
        write!(f, "[{a},{b},{c},{d}]")
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({})", self.pretty())
    }
}

/// Parses `[c0,c1,c2,c3]` or a bare rational.
impl FromStr for Cyclo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 4 {
                return Err(Error::Parse(format!(
                    "cyclotomic value needs 4 coordinates, got {}: {s:?}",
                    parts.len()
                )));
            }
            let mut coords: [Rational; 4] = Default::default();
            for (slot, p) in coords.iter_mut().zip(parts) {
                *slot = p.parse()?;
            }
            Ok(Self::from_coords(coords))
        } else {
            Ok(Self::from_rational(&s.parse()?))
        }
    }
}
