//! Plain-text form of polynomials and rational functions.
//!
//! Terms are written highest degree first and joined by `" + "`; each
//! coefficient uses its own `Display` (so cyclotomic coefficients appear as
//! `[c0,c1,c2,c3]`). Examples:
//!
//! ```text
//! [1,0,0,0]*u^2 + [-1,0,0,0]
//! ([0,2,0,0]*u)/([1,0,0,0]*u^2 + [-1,0,0,0])
//! 0
//! ```

use std::fmt::{self, Display};
use std::str::FromStr;

use super::poly::UniPoly;
use super::rational::RatFunc;
use super::var::Indeterminate;
use crate::error::{Error, Result};
use crate::field::Field;

impl<K: Field + Display, V: Indeterminate> Display for UniPoly<K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*{}", V::NAME)?,
                _ => write!(f, "{c}*{}^{i}", V::NAME)?,
            }
        }
        Ok(())
    }
}

impl<K: Field + Display, V: Indeterminate> Display for RatFunc<K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_constant() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({})/({})", self.num(), self.den())
        }
    }
}

fn parse_term<K, V>(term: &str) -> Result<(usize, K)>
where
    K: Field + FromStr<Err = Error>,
    V: Indeterminate,
{
    let term = term.trim();
    let Some((coef, mono)) = term.rsplit_once('*') else {
        return Ok((0, term.parse()?));
    };
    let coef: K = coef.trim().parse()?;
    let (name, exp) = match mono.split_once('^') {
        Some((n, e)) => (
            n.trim(),
            e.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?,
        ),
        None => (mono.trim(), 1),
    };
    if name != V::NAME {
        return Err(Error::Parse(format!(
            "variable mismatch: expected {}, found {name:?}",
            V::NAME
        )));
    }
    Ok((exp, coef))
}

impl<K, V> FromStr for UniPoly<K, V>
where
    K: Field + FromStr<Err = Error>,
    V: Indeterminate,
{
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<K> = Vec::new();
        for term in s.split(" + ") {
            let (exp, c) = parse_term::<K, V>(term)?;
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, K::zero());
            }
            coeffs[exp] = coeffs[exp].add_ref(&c);
        }
        Ok(UniPoly::new(coeffs))
    }
}

impl<K, V> FromStr for RatFunc<K, V>
where
    K: Field + FromStr<Err = Error>,
    V: Indeterminate,
{
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, den) = rest
                .split_once(")/(")
                .ok_or_else(|| Error::Parse(format!("expected (num)/(den): {s:?}")))?;
            let den = den
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unclosed denominator: {s:?}")))?;
            RatFunc::new(num.parse()?, den.parse()?)
        } else {
            Ok(RatFunc::from_poly(s.parse()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Cyclo, Rational};
    use crate::ratfunc::var::{B, U};

    #[test]
    fn display_polynomial() {
        let p: UniPoly<Rational, U> =
            UniPoly::new(vec![Rational::from(-1), Rational::zero(), Rational::frac(3, 2)]);
        assert_eq!(p.to_string(), "3/2*u^2 + -1");
        assert_eq!(p.to_string().parse::<UniPoly<Rational, U>>().unwrap(), p);
        assert_eq!(UniPoly::<Rational, U>::zero().to_string(), "0");
        assert_eq!("0".parse::<UniPoly<Rational, U>>().unwrap(), UniPoly::zero());
    }

    #[test]
    fn cyclotomic_rational_function_round_trip() {
        let f: RatFunc<Cyclo, U> = RatFunc::new(
            UniPoly::new(vec![Cyclo::zero(), Cyclo::zeta() * Cyclo::from_i64(2)]),
            UniPoly::new(vec![Cyclo::from_i64(-1), Cyclo::zero(), Cyclo::one()]),
        )
        .unwrap();
        let s = f.to_string();
        assert_eq!(s, "([0,2,0,0]*u)/([1,0,0,0]*u^2 + [-1,0,0,0])");
        assert_eq!(s.parse::<RatFunc<Cyclo, U>>().unwrap(), f);
    }

    #[test]
    fn wrong_variable_rejected() {
        let err = "[1,0,0,0]*u^2".parse::<UniPoly<Cyclo, B>>();
        assert!(matches!(err, Err(Error::Parse(_))));
    }
}
