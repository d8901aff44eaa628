use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use super::var::Indeterminate;
use crate::error::{Error, Result};
use crate::field::{ComplexNum, Embed, Field, GaloisAction, GaloisExp};

/// Dense univariate polynomial over a field, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has no coefficients.
pub struct UniPoly<K, V> {
    coeffs: Vec<K>,
    _var: PhantomData<fn() -> V>,
}

impl<K: Clone, V> Clone for UniPoly<K, V> {
    fn clone(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.clone(),
            _var: PhantomData,
        }
    }
}

impl<K: PartialEq, V> PartialEq for UniPoly<K, V> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<K: Eq, V> Eq for UniPoly<K, V> {}

impl<K: fmt::Debug, V: Indeterminate> fmt::Debug for UniPoly<K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly<{}>{:?}", V::NAME, self.coeffs)
    }
}

impl<K: Field, V: Indeterminate> UniPoly<K, V> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        UniPoly {
            coeffs,
            _var: PhantomData,
        }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::new(vec![K::zero(), K::one()])
    }

    pub fn monomial(c: K, degree: usize) -> Self {
        let mut coeffs = vec![K::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// v − root.
    pub fn linear_root(root: &K) -> Self {
        Self::new(vec![root.neg_ref(), K::one()])
    }

    /// ∏ (v − rᵢ).
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a K>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    /// Coefficient of vⁱ (zero past the degree).
    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> UniPoly<L, V> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Same coefficients, different variable name.
    pub fn rename<W: Indeterminate>(&self) -> UniPoly<K, W> {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder with `self = divisor·q + r`, deg r < deg divisor.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = rem[i + dd].mul_ref(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] = rem[i + j].sub_ref(&c.mul_ref(d));
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient, failing unless the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!(
                "remainder of degree {:?} in {}",
                r.degree(),
                V::NAME
            )))
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_ref(&K::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// Evaluation after mapping coefficients into another field.
    pub fn eval_mapped<L: Field>(&self, x: &L, map: impl Fn(&K) -> L) -> L {
        self.coeffs
            .iter()
            .rev()
            .fold(L::zero(), |acc, c| acc.mul_ref(x).add_ref(&map(c)))
    }

    /// p(c·v).
    pub fn scale_var(&self, c: &K) -> Self {
        let mut pow = K::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul_ref(&pow));
            pow = pow.mul_ref(c);
        }
        Self::new(out)
    }

    /// vⁿ·p(1/v) for n ≥ deg p.
    pub fn reversed(&self, n: usize) -> Self {
        let mut out = vec![K::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[n - i] = c.clone();
        }
        Self::new(out)
    }

    /// p(q) for a polynomial q in any variable.
    pub fn compose<W: Indeterminate>(&self, q: &UniPoly<K, W>) -> UniPoly<K, W> {
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| {
            &(&acc * q) + &UniPoly::constant(c.clone())
        })
    }

    /// Σ pᵢ·numᵢ·denⁿ⁻ⁱ for n ≥ deg p: the numerator of p(num/den)·denⁿ.
    pub fn homogenize<W: Indeterminate>(
        &self,
        num: &UniPoly<K, W>,
        den: &UniPoly<K, W>,
        n: usize,
    ) -> UniPoly<K, W> {
        let mut den_pows = vec![UniPoly::one()];
        for i in 1..=n {
            let next = &den_pows[i - 1] * den;
            den_pows.push(next);
        }
        let mut acc = UniPoly::zero();
        let mut num_pow = UniPoly::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&num_pow * &den_pows[n - i]).scale(c);
            }
            num_pow = &num_pow * num;
        }
        acc
    }

    /// Resultant via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Self) -> K {
        let (Some(_), Some(_)) = (self.degree(), other.degree()) else {
            return K::zero();
        };
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = K::one();
        loop {
            let da = a.degree().expect("nonzero");
            let db = b.degree().expect("nonzero");
            if db == 0 {
                return acc.mul_ref(&b.coeffs[0].pow(da as u32));
            }
            let r = a.rem(&b).expect("nonzero divisor");
            let Some(dr) = r.degree() else {
                return K::zero();
            };
            if (da * db) % 2 == 1 {
                acc = acc.neg_ref();
            }
            acc = acc.mul_ref(&b.coeffs[db].pow((da - dr) as u32));
            a = b;
            b = r;
        }
    }

    /// (−1)^(n(n−1)/2)·Res(p, p′)/lc(p).
    pub fn discriminant(&self) -> Result<K> {
        let n = self.degree().ok_or(Error::DivisionByZero)?;
        let res = self.resultant(&self.derivative());
        let signed = if (n * (n.saturating_sub(1)) / 2) % 2 == 1 {
            res.neg_ref()
        } else {
            res
        };
        signed.div_ref(self.lead().expect("nonzero"))
    }
}

impl<K: Field + Embed, V: Indeterminate> UniPoly<K, V> {
    pub fn eval_complex(&self, x: ComplexNum, k: GaloisExp) -> ComplexNum {
        self.eval_mapped(&x, |c| c.embed(k))
    }
}

impl<K: Field + GaloisAction, V: Indeterminate> GaloisAction for UniPoly<K, V> {
    fn galois(&self, k: GaloisExp) -> Self {
        self.map_coeffs(|c| c.galois(k))
    }
}

impl<'a, K: Field, V: Indeterminate> Add<&'a UniPoly<K, V>> for &'a UniPoly<K, V> {
    type Output = UniPoly<K, V>;
    fn add(self, rhs: &'a UniPoly<K, V>) -> UniPoly<K, V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.add_ref(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a, K: Field, V: Indeterminate> Sub<&'a UniPoly<K, V>> for &'a UniPoly<K, V> {
    type Output = UniPoly<K, V>;
    fn sub(self, rhs: &'a UniPoly<K, V>) -> UniPoly<K, V> {
        self + &(-rhs)
    }
}

impl<'a, K: Field, V: Indeterminate> Mul<&'a UniPoly<K, V>> for &'a UniPoly<K, V> {
    type Output = UniPoly<K, V>;
    fn mul(self, rhs: &'a UniPoly<K, V>) -> UniPoly<K, V> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        UniPoly::new(out)
    }
}

impl<K: Field, V: Indeterminate> Neg for &UniPoly<K, V> {
    type Output = UniPoly<K, V>;
    fn neg(self) -> UniPoly<K, V> {
        UniPoly::new(self.coeffs.iter().map(Field::neg_ref).collect())
    }
}

macro_rules! owned_poly_op {
    ($tr:ident, $m:ident) => {
        impl<K: Field, V: Indeterminate> $tr for UniPoly<K, V> {
            type Output = UniPoly<K, V>;
            fn $m(self, rhs: UniPoly<K, V>) -> UniPoly<K, V> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_poly_op!(Add, add);
owned_poly_op!(Sub, sub);
owned_poly_op!(Mul, mul);

impl<K: Field, V: Indeterminate> Neg for UniPoly<K, V> {
    type Output = UniPoly<K, V>;
    fn neg(self) -> UniPoly<K, V> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cyclo, Rational};
    use crate::ratfunc::var::U;

    type P = UniPoly<Rational, U>;

    fn p(c: &[i64]) -> P {
        P::new(c.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn gcd_and_mul() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[0]).gcd(&p(&[0])), P::zero());
        assert_eq!(p(&[2, 2]).gcd(&p(&[0])), p(&[1, 1]));
    }

    #[test]
    fn synthetic_division() {
        let (q, r) = p(&[1, 0, 0, 0, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[1]).divrem(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn resultant_and_discriminant() {
        // disc(x² + bx + c) = b² − 4c
        assert_eq!(p(&[3, 5, 1]).discriminant().unwrap(), Rational::from(13));
        // disc(x³ + px + q) = −4p³ − 27q²
        assert_eq!(p(&[2, -3, 0, 1]).discriminant().unwrap(), Rational::from(108 - 108));
        assert_eq!(p(&[1, 1, 0, 1]).discriminant().unwrap(), Rational::from(-31));
        // Res(x − a, x − b) = a − b, no shared root → nonzero
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-5, 1])), Rational::from(-3));
        assert_eq!(p(&[-1, 0, 1]).resultant(&p(&[-1, 1])), Rational::zero());
    }

    #[test]
    fn cyclotomic_factorization_of_u5_minus_1() {
        let roots: Vec<Cyclo> = (0..5).map(Cyclo::zeta_pow).collect();
        let prod: UniPoly<Cyclo, U> = UniPoly::from_roots(&roots);
        let mut expect = vec![Cyclo::zero(); 6];
        expect[0] = Cyclo::from_i64(-1);
        expect[5] = Cyclo::one();
        assert_eq!(prod, UniPoly::new(expect));
    }

    #[test]
    fn compose_and_reverse() {
        // (v + 1)² composed with 2v gives (2v + 1)²
        let sq = p(&[1, 2, 1]);
        assert_eq!(sq.compose(&p(&[0, 2])), p(&[1, 4, 4]));
        assert_eq!(sq.scale_var(&Rational::from(2)), p(&[1, 4, 4]));
        assert_eq!(p(&[1, 2, 3]).reversed(3), p(&[0, 3, 2, 1]));
    }
}
