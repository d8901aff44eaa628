use std::fmt;

use super::poly::UniPoly;
use super::rational::RatFunc;
use super::var::Indeterminate;
use crate::field::{ComplexNum, Cyclo, Embed, Field, GaloisAction, GaloisExp};

/// unit · ∏ (v − root)^exp, with negative exponents in the denominator.
///
/// This is how the product formulas are entered; the canonical
/// [`RatFunc`] is derived from it.
#[derive(Clone, Debug, PartialEq)]
pub struct Factored<V> {
    pub unit: Cyclo,
    pub factors: Vec<(Cyclo, i32)>,
    _var: std::marker::PhantomData<fn() -> V>,
}

impl<V: Indeterminate> Factored<V> {
    pub fn new(unit: Cyclo, factors: Vec<(Cyclo, i32)>) -> Self {
        Factored {
            unit,
            factors,
            _var: std::marker::PhantomData,
        }
    }

    pub fn to_ratfunc(&self) -> RatFunc<Cyclo, V> {
        let mut num = UniPoly::constant(self.unit.clone());
        let mut den = UniPoly::one();
        for (root, exp) in &self.factors {
            let lin = UniPoly::linear_root(root).pow(exp.unsigned_abs());
            if *exp >= 0 {
                num = &num * &lin;
            } else {
                den = &den * &lin;
            }
        }
        RatFunc::new(num, den).expect("denominator is a product of linear factors")
    }

    /// Merges repeated roots and drops zero exponents; order of first
    /// appearance is kept.
    pub fn merged(mut self) -> Self {
        let mut out: Vec<(Cyclo, i32)> = Vec::new();
        for (r, e) in self.factors.drain(..) {
            match out.iter_mut().find(|(q, _)| *q == r) {
                Some((_, f)) => *f += e,
                None => out.push((r, e)),
            }
        }
        out.retain(|(_, e)| *e != 0);
        Factored::new(self.unit, out)
    }

    /// Substitutes v ↦ c·v: (cv − r) = c(v − r/c).
    pub fn twist(&self, c: &Cyclo) -> Self {
        let cinv = c.inv().expect("nonzero twist");
        let mut unit = self.unit.clone();
        let mut factors = Vec::with_capacity(self.factors.len());
        for (r, e) in &self.factors {
            unit = unit * c.powi(*e).expect("nonzero twist");
            factors.push((r.mul_ref(&cinv), *e));
        }
        Factored::new(unit, factors)
    }

    /// Coefficient Galois action ζ ↦ ζᵏ followed by v ↦ 1/v:
    /// (1/v − r) = −r(v − 1/r)/v.
    pub fn galois_invert(&self, k: GaloisExp) -> Self {
        let mut unit = self.unit.galois(k);
        let mut factors = Vec::with_capacity(2 * self.factors.len());
        for (r, e) in &self.factors {
            let r = r.galois(k);
            if r.is_zero() {
                factors.push((Cyclo::zero(), -e));
            } else {
                unit = unit * (-r.clone()).powi(*e).expect("nonzero root");
                factors.push((r.inv().expect("nonzero root"), *e));
                factors.push((Cyclo::zero(), -e));
            }
        }
        Factored::new(unit, factors).merged()
    }

    /// Evaluates at v = x; a vanishing denominator factor is reported as a
    /// pole naming that factor.
    pub fn eval(&self, x: &Cyclo) -> crate::error::Result<Cyclo> {
        let mut acc = self.unit.clone();
        for (r, e) in &self.factors {
            let lin = x.sub_ref(r);
            if lin.is_zero() && *e < 0 {
                return Err(crate::error::Error::Pole(format!(
                    "factor ({} - ({})) vanishes at {} = {}",
                    V::NAME,
                    r.pretty(),
                    V::NAME,
                    x.pretty()
                )));
            }
            acc = acc * lin.powi(*e)?;
        }
        Ok(acc)
    }

    /// Numeric value at v = x under the embedding ζ ↦ e^{2πik/5}. Products
    /// of linear factors stay accurate near zeros, where the expanded
    /// quotient loses digits to cancellation.
    pub fn eval_complex(&self, x: ComplexNum, k: GaloisExp) -> crate::error::Result<ComplexNum> {
        let mut acc = self.unit.embed(k);
        for (r, e) in &self.factors {
            let lin = x - r.embed(k);
            if *e < 0 && lin.is_zero() {
                return Err(crate::error::Error::Pole(format!("factor ({} - ({})) vanishes", V::NAME, r.pretty())));
            }
            acc = acc * lin.powi(*e)?;
        }
        Ok(acc)
    }

    pub fn zeros(&self) -> impl Iterator<Item = &Cyclo> {
        self.factors.iter().filter(|(_, e)| *e > 0).map(|(r, _)| r)
    }

    pub fn poles(&self) -> impl Iterator<Item = &Cyclo> {
        self.factors.iter().filter(|(_, e)| *e < 0).map(|(r, _)| r)
    }
}

fn write_side<V: Indeterminate>(
    f: &mut fmt::Formatter<'_>,
    factors: &[&(Cyclo, i32)],
) -> fmt::Result {
    for (root, exp) in factors {
        let neg = -root.clone();
        if root.is_zero() {
            write!(f, "{}", V::NAME)?;
        } else {
            write!(f, "({} + {})", V::NAME, neg.pretty())?;
        }
        let e = exp.unsigned_abs();
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Readable product form, e.g. `(-1 - ζ^2)·(u + -1 - 2ζ)^2 / ((u + 1)^3)`.
impl<V: Indeterminate> fmt::Display for Factored<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.unit.pretty())?;
        let top: Vec<_> = self.factors.iter().filter(|(_, e)| *e > 0).collect();
        let bottom: Vec<_> = self.factors.iter().filter(|(_, e)| *e < 0).collect();
        if !top.is_empty() {
            write!(f, "·")?;
            write_side::<V>(f, &top)?;
        }
        if !bottom.is_empty() {
            write!(f, " / (")?;
            write_side::<V>(f, &bottom)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}
