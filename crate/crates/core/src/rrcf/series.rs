use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ratfunc::var::Indeterminate;
use crate::ratfunc::{RatFunc, UniPoly};

/// Truncated Laurent series in t = q^{1/5}.
///
/// `coeffs[k]` is the coefficient of t^{val+k}; everything from
/// t^{val+len} on is unknown. Zero coefficients below `val` are exact.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<K> {
    val: i64,
    coeffs: Vec<K>,
}

impl<K: Field> Series<K> {
    pub fn new(val: i64, coeffs: Vec<K>) -> Self {
        Series { val, coeffs }.normalized()
    }

    /// c + O(t^prec).
    pub fn constant(c: K, prec: i64) -> Self {
        if prec <= 0 {
            return Series { val: prec, coeffs: Vec::new() };
        }
        let mut coeffs = vec![K::zero(); prec as usize];
        coeffs[0] = c;
        Series::new(0, coeffs)
    }

    fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        self
    }

    /// Exponent of the first stored coefficient; the valuation when the
    /// series is known to be nonzero.
    pub fn val(&self) -> i64 {
        self.val
    }

    /// Coefficients are known strictly below this exponent.
    pub fn abs_prec(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of t^e, `None` beyond the precision.
    pub fn coeff(&self, e: i64) -> Option<K> {
        if e >= self.abs_prec() {
            None
        } else if e < self.val {
            Some(K::zero())
        } else {
            Some(self.coeffs[(e - self.val) as usize].clone())
        }
    }

    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.abs_prec() {
            return self.clone();
        }
        let keep = (prec - self.val).max(0) as usize;
        Series { val: self.val.min(prec), coeffs: self.coeffs[..keep].to_vec() }
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> Series<L> {
        Series::new(self.val, self.coeffs.iter().map(f).collect())
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let val = self.val.min(other.val);
        let ap = self.abs_prec().min(other.abs_prec());
        let coeffs = (val..ap)
            .map(|e| self.coeff(e).expect("within precision") + other.coeff(e).expect("within precision"))
            .collect();
        Series::new(val, coeffs)
    }

    pub fn neg_ref(&self) -> Self {
        Series { val: self.val, coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let val = self.val + other.val;
        let ap = (self.val + other.abs_prec()).min(other.val + self.abs_prec());
        let n = (ap - val).max(0) as usize;
        let mut coeffs = vec![K::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Series::new(val, coeffs)
    }

    pub fn scale(&self, c: &K) -> Self {
        Series::new(self.val, self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Needs a known nonzero leading coefficient.
    pub fn inv(&self) -> Result<Self> {
        let Some(lead) = self.coeffs.first() else {
            return Err(Error::InsufficientPrecision { needed: 1, available: 0 });
        };
        let lead_inv = lead.inv()?;
        let n = self.coeffs.len();
        let mut out: Vec<K> = Vec::with_capacity(n);
        out.push(lead_inv.clone());
        for k in 1..n {
            let mut s = K::zero();
            for j in 1..=k {
                s = s.add_ref(&self.coeffs[j].mul_ref(&out[k - j]));
            }
            out.push(-(s * lead_inv.clone()));
        }
        Ok(Series::new(-self.val, out))
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Series::constant(K::one(), self.abs_prec() - self.val);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// t ↦ t^k; for k = 5 this turns f(τ) into f(5τ).
    pub fn subst_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![K::zero(); self.coeffs.len() * k];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Series::new(self.val * k as i64, coeffs)
    }

    pub fn eval_poly<V: Indeterminate>(&self, p: &UniPoly<K, V>) -> Self {
        // constants never limit the precision of a series with val ≥ 0
        let prec = self.abs_prec().max(1);
        let mut acc = Series::constant(K::zero(), prec);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul_ref(self).add_ref(&Series::constant(c.clone(), prec));
        }
        acc
    }

    /// f(self) for a rational function f; the denominator must not vanish
    /// to leading order.
    pub fn eval_ratfunc<V: Indeterminate>(&self, f: &RatFunc<K, V>) -> Result<Self> {
        self.eval_poly(f.num()).div_ref(&self.eval_poly(f.den()))
    }
}

impl<K: Field + fmt::Display> fmt::Display for Series<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match self.val + k as i64 {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                e => write!(f, "{c}*t^{e}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(t^{})", self.abs_prec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn s(val: i64, c: &[i64]) -> Series<Rational> {
        Series::new(val, c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_t = s(0, &[1, -1, 0, 0, 0, 0]);
        let inv = one_minus_t.inv().unwrap();
        assert_eq!(inv, s(0, &[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn precision_bookkeeping() {
        let a = s(1, &[1, 2, 3]); // t + 2t² + 3t³ + O(t⁴)
        let b = s(0, &[1, 1]); // 1 + t + O(t²)
        assert_eq!(a.mul_ref(&b).abs_prec(), 3);
        assert_eq!(a.add_ref(&b).abs_prec(), 2);
        assert_eq!(a.inv().unwrap().val(), -1);
        assert_eq!(a.coeff(7), None);
    }

    #[test]
    fn substitution_spreads_coefficients() {
        let a = s(1, &[1, -1]);
        let a5 = a.subst_pow(5);
        assert_eq!(a5.val(), 5);
        assert_eq!(a5.abs_prec(), 15);
        assert_eq!(a5.coeff(10), Some(Rational::from(-1)));
        assert_eq!(a5.coeff(12), Some(Rational::zero()));
    }

    #[test]
    fn display() {
        assert_eq!(s(1, &[1, 0, -2]).to_string(), "1*t + -2*t^3 + O(t^4)");
    }
}
