//! The model E′: Y′² = p(X) of E₅(b), reached by Y′ = Y + (1+b)X/2 + b/2,
//! and its closed-form doubling map.

use super::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::field::Field;

fn half<K: Field>() -> K {
    K::from_i64(2).inv().expect("characteristic is not 2")
}

fn quarter<K: Field>() -> K {
    K::from_i64(4).inv().expect("characteristic is not 2")
}

/// E′: Y′² = X³ + (b²+6b+1)/4·X² + b(b+1)/2·X + b²/4.
pub fn eprime_curve<K: Field>(b: &K) -> Result<WeierstrassCurve<K>> {
    let [_, a2, a4, a6] = eprime_coefficients(b);
    WeierstrassCurve::new(K::zero(), a2, K::zero(), a4, a6)
}

fn eprime_coefficients<K: Field>(b: &K) -> [K; 4] {
    let a2 = (b.square() + K::from_i64(6) * b.clone() + K::one()) * quarter();
    let a4 = b.clone() * (b.clone() + K::one()) * half();
    let a6 = b.square() * quarter();
    [K::one(), a2, a4, a6]
}

/// p(X) = X³ + (b²+6b+1)/4·X² + b(b+1)/2·X + b²/4.
pub fn eprime_p<K: Field>(b: &K, x: &K) -> K {
    let [one, a2, a4, a6] = eprime_coefficients(b);
    ((one * x.clone() + a2) * x.clone() + a4) * x.clone() + a6
}

/// Maps a point of E₅(b) to E′.
pub fn to_eprime<K: Field>(b: &K, p: &CurvePoint<K>) -> CurvePoint<K> {
    match p {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { x, y } => {
            let yp = y.clone() + (K::one() + b.clone()) * x.clone() * half() + b.clone() * half();
            CurvePoint::affine(x.clone(), yp)
        }
    }
}

/// Doubling on E′ in closed form:
/// X(2P) = (X⁴ − (b²+b)X² − 2b²X − b³)/(4p(X)) and Y′(2P) = N(X)·Y′/(16p(X)²),
/// N(X) = 2X⁶ + (b²+6b+1)X⁵ + (5b²+5b)X⁴ + 10b²X³ + 10b³X² + (b⁵+5b⁴)X + b⁵.
pub fn eprime_double<K: Field>(b: &K, x: &K, yp: &K) -> Result<(K, K)> {
    let p = eprime_p(b, x);
    if p.is_zero() {
        return Err(Error::Pole("p(X) = 0: 2-torsion point on E'".into()));
    }
    let k = |n: i64| K::from_i64(n);
    let b2 = b.square();
    let b3 = b2.mul_ref(b);
    let b4 = b2.square();
    let b5 = b4.mul_ref(b);
    let xs = [K::one(), x.clone(), x.square(), x.pow(3), x.pow(4), x.pow(5), x.pow(6)];

    let top = xs[4].clone() - (b2.clone() + b.clone()) * xs[2].clone() - k(2) * b2.clone() * x.clone() - b3.clone();
    let x2 = top.div_ref(&(k(4) * p.clone()))?;

    let n = k(2) * xs[6].clone()
        + (b2.clone() + k(6) * b.clone() + K::one()) * xs[5].clone()
        + (k(5) * b2.clone() + k(5) * b.clone()) * xs[4].clone()
        + k(10) * b2 * xs[3].clone()
        + k(10) * b3 * xs[2].clone()
        + (b5.clone() + k(5) * b4) * x.clone()
        + b5;
    let yp2 = (n * yp.clone()).div_ref(&(k(16) * p.square()))?;
    Ok((x2, yp2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::tate5;
    use crate::field::Rational;
    use crate::ratfunc::var::B;
    use crate::ratfunc::RatFunc;

    #[test]
    fn translation_maps_origin_subgroup_onto_eprime() {
        let b = RatFunc::<Rational, B>::var();
        let e5 = tate5(b.clone()).unwrap();
        let ep = eprime_curve(&b).unwrap();
        for p in crate::curve::tate5_origin_subgroup(&b) {
            assert!(e5.contains(&p));
            assert!(ep.contains(&to_eprime(&b, &p)));
        }
    }

    #[test]
    fn closed_form_doubling_matches_group_law() {
        let b = RatFunc::<Rational, B>::var();
        let e5 = tate5(b.clone()).unwrap();
        let p = CurvePoint::affine(RatFunc::zero(), RatFunc::zero());
        let two_p = to_eprime(&b, &e5.double(&p));
        let CurvePoint::Affine { x, y } = to_eprime(&b, &p) else { unreachable!() };
        let (x2, y2) = eprime_double(&b, &x, &y).unwrap();
        assert_eq!(two_p, CurvePoint::affine(x2, y2));
    }

    #[test]
    fn two_torsion_is_a_pole() {
        // b = 0: p = X³ + X²/4 vanishes at X = 0
        let b = Rational::zero();
        let x = Rational::zero();
        assert!(matches!(eprime_double(&b, &x, &Rational::zero()), Err(Error::Pole(_))));
    }
}
