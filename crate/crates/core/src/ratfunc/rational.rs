use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::UniPoly;
use super::var::Indeterminate;
use crate::error::{Error, Result};
use crate::field::{ComplexNum, Embed, Field, GaloisAction, GaloisExp};

/// A reduced fraction num/den of polynomials in one variable.
///
/// Canonical form: den is monic, gcd(num, den) = 1, zero is 0/1. Because the
/// form is unique, `==` decides equality of rational functions.
pub struct RatFunc<K, V> {
    num: UniPoly<K, V>,
    den: UniPoly<K, V>,
}

impl<K: Clone, V> Clone for RatFunc<K, V> {
    fn clone(&self) -> Self {
        RatFunc {
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl<K: PartialEq, V> PartialEq for RatFunc<K, V> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<K: fmt::Debug, V: Indeterminate> fmt::Debug for RatFunc<K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

/// Substitutions for the variable of a rational function.
#[derive(Debug, Clone)]
pub enum Substitution<K: fmt::Debug, V: Indeterminate> {
    /// v ↦ c·v
    ScaleRoot(K),
    /// v ↦ 1/v
    Invert,
    /// v ↦ (a·v + b)/(c·v + d)
    Moebius { a: K, b: K, c: K, d: K },
    /// v ↦ g(v)
    Compose(RatFunc<K, V>),
}

impl<K: Field, V: Indeterminate> RatFunc<K, V> {
    /// Builds and canonicalizes num/den.
    pub fn new(num: UniPoly<K, V>, den: UniPoly<K, V>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: UniPoly<K, V>, den: UniPoly<K, V>) -> Self {
        if num.is_zero() {
            return Self::zero_value();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Self::monic_den(num, den)
    }

    fn monic_den(num: UniPoly<K, V>, den: UniPoly<K, V>) -> Self {
        let lead = den.lead().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let li = lead.inv().expect("nonzero lead");
            RatFunc {
                num: num.scale(&li),
                den: den.scale(&li),
            }
        }
    }

    fn zero_value() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn from_poly(p: UniPoly<K, V>) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(UniPoly::var())
    }

    pub fn num(&self) -> &UniPoly<K, V> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<K, V> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<K> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// (deg num, deg den); the zero function reports numerator degree 0.
    pub fn degrees(&self) -> (usize, usize) {
        (self.num.degree().unwrap_or(0), self.den.degree().unwrap_or(0))
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            Self::zero_value()
        } else {
            RatFunc {
                num: self.num.scale(c),
                den: self.den.clone(),
            }
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&K) -> K) -> Result<Self> {
        Self::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }

    pub fn eval(&self, x: &K) -> Result<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {}={:?}", V::NAME, x)));
        }
        self.num.eval(x).div_ref(&d)
    }

    /// f(c·v).
    pub fn scale_var(&self, c: &K) -> Result<Self> {
        if c.is_zero() {
            return self.compose(&RatFunc::<K, V>::constant(K::zero()));
        }
        Self::new(self.num.scale_var(c), self.den.scale_var(c))
    }

    /// f(1/v).
    pub fn invert_var(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let n = dn.max(dd);
        Self::new(self.num.reversed(n), self.den.reversed(n)).expect("reversed denominator is nonzero")
    }

    /// f(g) for g in any variable.
    pub fn compose<W: Indeterminate>(&self, g: &RatFunc<K, W>) -> Result<RatFunc<K, W>> {
        if self.num.is_zero() {
            return Ok(RatFunc::zero_value());
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let n = dn.max(dd);
        let top = self.num.homogenize(&g.num, &g.den, n);
        let bottom = self.den.homogenize(&g.num, &g.den, n);
        if bottom.is_zero() {
            return Err(Error::DegenerateSubstitution(format!(
                "denominator in {} vanishes identically after substitution",
                V::NAME
            )));
        }
        RatFunc::new(top, bottom)
    }

    pub fn substitute(&self, sub: &Substitution<K, V>) -> Result<Self> {
        match sub {
            Substitution::ScaleRoot(c) => self.scale_var(c),
            Substitution::Invert => Ok(self.invert_var()),
            Substitution::Moebius { a, b, c, d } => {
                let det = a.mul_ref(d).sub_ref(&b.mul_ref(c));
                if det.is_zero() {
                    return Err(Error::DegenerateSubstitution("moebius map with ad − bc = 0".into()));
                }
                let m = RatFunc::new(
                    UniPoly::new(vec![b.clone(), a.clone()]),
                    UniPoly::new(vec![d.clone(), c.clone()]),
                )?;
                self.compose(&m)
            }
            Substitution::Compose(g) => self.compose(g),
        }
    }

    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(top, &self.den * &self.den).expect("nonzero denominator")
    }
}

impl<K: Field + Embed, V: Indeterminate> RatFunc<K, V> {
    /// Evaluates at a complex point after embedding the coefficients.
    pub fn eval_complex(&self, x: ComplexNum, k: GaloisExp) -> Result<ComplexNum> {
        let d = self.den.eval_complex(x, k);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {}={x}", V::NAME)));
        }
        let v = self.num.eval_complex(x, k).div_ref(&d)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Pole(format!("non-finite value at {}={x}", V::NAME)))
        }
    }
}

impl<K: Field + GaloisAction, V: Indeterminate> GaloisAction for RatFunc<K, V> {
    fn galois(&self, k: GaloisExp) -> Self {
        // Automorphisms preserve coprimality and send 1 to 1.
        RatFunc {
            num: self.num.galois(k),
            den: self.den.galois(k),
        }
    }
}

impl<K: Field, V: Indeterminate> Field for RatFunc<K, V> {
    fn zero() -> Self {
        Self::zero_value()
    }
    fn one() -> Self {
        Self::constant(K::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(K::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(&self.num + &other.num, self.den.clone());
        }
        if self.den.is_constant() && other.den.is_constant() {
            return Self::from_poly(&self.num + &other.num);
        }
        let g = self.den.gcd(&other.den);
        if g.is_constant() {
            let num = &(&self.num * &other.den) + &(&other.num * &self.den);
            let den = &self.den * &other.den;
            return Self::canonical_or_zero(num, den);
        }
        let sd = self.den.exact_div(&g).expect("gcd divides");
        let od = other.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &od) + &(&other.num * &sd);
        if num.is_zero() {
            return Self::zero_value();
        }
        // Any remaining common factor of num and den divides g.
        let h = num.gcd(&g);
        if h.is_constant() {
            Self::monic_den(num, &sd * &other.den)
        } else {
            let num = num.exact_div(&h).expect("gcd divides");
            let g2 = g.exact_div(&h).expect("gcd divides");
            Self::monic_den(num, &(&sd * &od) * &g2)
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_value();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (a, d) = if g1.is_constant() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.exact_div(&g1).unwrap(), other.den.exact_div(&g1).unwrap())
        };
        let (c, b) = if g2.is_constant() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.exact_div(&g2).unwrap(), self.den.exact_div(&g2).unwrap())
        };
        Self::monic_den(&a * &c, &b * &d)
    }

    fn neg_ref(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::monic_den(self.den.clone(), self.num.clone()))
    }
}

impl<K: Field, V: Indeterminate> RatFunc<K, V> {
    fn canonical_or_zero(num: UniPoly<K, V>, den: UniPoly<K, V>) -> Self {
        if num.is_zero() {
            Self::zero_value()
        } else {
            Self::monic_den(num, den)
        }
    }
}

macro_rules! owned_rf_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<K: Field, V: Indeterminate> $tr for RatFunc<K, V> {
            type Output = RatFunc<K, V>;
            fn $m(self, rhs: RatFunc<K, V>) -> RatFunc<K, V> {
                Field::$f(&self, &rhs)
            }
        }
        impl<'a, K: Field, V: Indeterminate> $tr<&'a RatFunc<K, V>> for &'a RatFunc<K, V> {
            type Output = RatFunc<K, V>;
            fn $m(self, rhs: &'a RatFunc<K, V>) -> RatFunc<K, V> {
                Field::$f(self, rhs)
            }
        }
    };
}
owned_rf_op!(Add, add, add_ref);
owned_rf_op!(Sub, sub, sub_ref);
owned_rf_op!(Mul, mul, mul_ref);

impl<K: Field, V: Indeterminate> Neg for RatFunc<K, V> {
    type Output = RatFunc<K, V>;
    fn neg(self) -> RatFunc<K, V> {
        self.neg_ref()
    }
}

/// Panics on division by zero; use [`Field::div_ref`] for the fallible form.
impl<'a, K: Field, V: Indeterminate> Div<&'a RatFunc<K, V>> for &'a RatFunc<K, V> {
    type Output = RatFunc<K, V>;
    fn div(self, rhs: &'a RatFunc<K, V>) -> RatFunc<K, V> {
        self.div_ref(rhs).expect("division by zero rational function")
    }
}

impl<K: Field, V: Indeterminate> Div for RatFunc<K, V> {
    type Output = RatFunc<K, V>;
    fn div(self, rhs: RatFunc<K, V>) -> RatFunc<K, V> {
        &self / &rhs
    }
}

impl<K: Field, V: Indeterminate> From<UniPoly<K, V>> for RatFunc<K, V> {
    fn from(p: UniPoly<K, V>) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cyclo, Rational};
    use crate::ratfunc::var::{R, U};

    type F = RatFunc<Rational, U>;

    fn p(c: &[i64]) -> UniPoly<Rational, U> {
        UniPoly::new(c.iter().map(|&x| Rational::from(x)).collect())
    }

    fn rf(n: &[i64], d: &[i64]) -> F {
        F::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn partial_fractions_combine() {
        let sum = rf(&[1], &[1, 1]) + rf(&[1], &[-1, 1]);
        assert_eq!(sum, rf(&[0, 2], &[-1, 0, 1]));
    }

    #[test]
    fn quotient_cancels() {
        let a = rf(&[-1, 1], &[1, 1]);
        let b = rf(&[1, 1], &[-1, 1]);
        assert_eq!(a.clone() * b, F::one());
        assert_eq!(a.div_ref(&a).unwrap(), F::one());
        assert_eq!(a.div_ref(&F::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_form() {
        let f = F::new(p(&[2, 2]), p(&[4, 0, 4])).unwrap();
        assert_eq!(f.den().lead(), Some(&Rational::one()));
        assert_eq!(f.num(), &p(&[1, 1]).scale(&Rational::frac(1, 2)));
        let g = F::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert_eq!(g, F::from_poly(p(&[1, 1]).scale(&Rational::frac(1, 2))));
        assert!(F::new(p(&[1]), p(&[0])).is_err());
        assert_eq!(F::new(p(&[0]), p(&[3, 1])).unwrap(), F::zero());
    }

    #[test]
    fn invert_u5() {
        let u5 = F::from_poly(p(&[0, 0, 0, 0, 0, 1]));
        assert_eq!(u5.invert_var(), rf(&[1], &[0, 0, 0, 0, 0, 1]));
        assert_eq!(u5.invert_var().invert_var(), u5);
    }

    #[test]
    fn moebius_of_linear_ratio() {
        let e = Cyclo::epsilon();
        let eb = Cyclo::epsilon_bar();
        let lin = |c: &Cyclo| UniPoly::<Cyclo, U>::linear_root(c);
        let f = RatFunc::new(lin(&e), lin(&eb)).unwrap();
        let inv = f
            .substitute(&Substitution::Moebius {
                a: Cyclo::zero(),
                b: Cyclo::one(),
                c: Cyclo::one(),
                d: Cyclo::zero(),
            })
            .unwrap();
        let expect = RatFunc::new(
            UniPoly::new(vec![Cyclo::one(), -e]),
            UniPoly::new(vec![Cyclo::one(), -eb]),
        )
        .unwrap();
        assert_eq!(inv, expect);
        assert_eq!(inv, f.invert_var());
        let bad = f.substitute(&Substitution::Moebius {
            a: Cyclo::one(),
            b: Cyclo::one(),
            c: Cyclo::one(),
            d: Cyclo::one(),
        });
        assert!(matches!(bad, Err(Error::DegenerateSubstitution(_))));
    }

    #[test]
    fn compose_changes_variable() {
        let f = rf(&[0, 1], &[1, 1]);
        let g: RatFunc<Rational, R> = RatFunc::new(
            UniPoly::new(vec![Rational::from(-1), Rational::one()]),
            UniPoly::one(),
        )
        .unwrap();
        // (r − 1)/r
        let h = f.compose(&g).unwrap();
        assert_eq!(h.eval(&Rational::from(2)).unwrap(), Rational::frac(1, 2));
        // composing into a pole of the denominator is degenerate
        let c = RatFunc::<Rational, R>::constant(Rational::from(-1));
        assert!(matches!(f.compose(&c), Err(Error::DegenerateSubstitution(_))));
    }

    #[test]
    fn eval_pole() {
        let f = rf(&[1], &[1, 1]);
        assert!(matches!(f.eval(&Rational::from(-1)), Err(Error::Pole(_))));
        assert_eq!(f.eval(&Rational::from(1)).unwrap(), Rational::frac(1, 2));
    }

    #[test]
    fn galois_on_linear() {
        let f = RatFunc::<Cyclo, U>::from_poly(UniPoly::linear_root(&Cyclo::zeta()));
        let g = f.galois(GaloisExp::SIGMA2);
        assert_eq!(g, RatFunc::from_poly(UniPoly::linear_root(&Cyclo::zeta_pow(4))));
    }
}
