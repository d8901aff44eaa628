//! Long Weierstrass curves Y² + a₁XY + a₃Y = X³ + a₂X² + a₄X + a₆ over any
//! [`Field`], with the chord–tangent group law.
//!
//! The same code runs over exact cyclotomic scalars, rational function fields
//! and complex floats. Over [`ComplexNum`](crate::field::ComplexNum) the zero
//! tests in the group law use the curve's absolute tolerance; exact fields
//! ignore it.

mod division;
mod eprime;

pub use division::{division_poly_5, tate5_d5, D5_DISPLAY};
pub use eprime::{eprime_curve, eprime_double, eprime_p, to_eprime};

use crate::error::{Error, Result};
use crate::field::Field;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum CurvePoint<K> {
    Infinity,
    Affine { x: K, y: K },
}

impl<K: Field> CurvePoint<K> {
    pub fn affine(x: K, y: K) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&K> {
        match self {
            CurvePoint::Affine { x, .. } => Some(x),
            CurvePoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&K> {
        match self {
            CurvePoint::Affine { y, .. } => Some(y),
            CurvePoint::Infinity => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct WeierstrassCurve<K> {
    pub a1: K,
    pub a2: K,
    pub a3: K,
    pub a4: K,
    pub a6: K,
    tol: f64,
}

impl<K: Field> WeierstrassCurve<K> {
    /// Rejects singular curves.
    pub fn new(a1: K, a2: K, a3: K, a4: K, a6: K) -> Result<Self> {
        let c = Self::new_unchecked(a1, a2, a3, a4, a6);
        if c.discriminant().is_negligible(c.tol) {
            return Err(Error::SingularCurve("discriminant vanishes".into()));
        }
        Ok(c)
    }

    pub fn new_unchecked(a1: K, a2: K, a3: K, a4: K, a6: K) -> Self {
        WeierstrassCurve {
            a1,
            a2,
            a3,
            a4,
            a6,
            tol: DEFAULT_TOLERANCE,
        }
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn coefficients(&self) -> [K; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    /// b₂ = a₁² + 4a₂.
    pub fn b2(&self) -> K {
        self.a1.square() + K::from_i64(4) * self.a2.clone()
    }

    pub fn b4(&self) -> K {
        K::from_i64(2) * self.a4.clone() + self.a1.mul_ref(&self.a3)
    }

    pub fn b6(&self) -> K {
        self.a3.square() + K::from_i64(4) * self.a6.clone()
    }

    pub fn b8(&self) -> K {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        a1.square() * a6.clone() + K::from_i64(4) * a2.mul_ref(a6) - a1.mul_ref(a3) * a4.clone()
            + a2.mul_ref(&a3.square())
            - a4.square()
    }

    /// Δ = −b₂²b₈ − 8b₄³ − 27b₆² + 9b₂b₄b₆.
    pub fn discriminant(&self) -> K {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -(b2.square() * b8) - K::from_i64(8) * b4.pow(3) - K::from_i64(27) * b6.square()
            + K::from_i64(9) * b2 * b4 * b6
    }

    /// Y² + a₁XY + a₃Y − X³ − a₂X² − a₄X − a₆ at (x, y).
    pub fn residual(&self, x: &K, y: &K) -> K {
        let lhs = y.square() + self.a1.mul_ref(x) * y.clone() + self.a3.mul_ref(y);
        let x2 = x.square();
        let rhs = x2.mul_ref(x) + self.a2.mul_ref(&x2) + self.a4.mul_ref(x) + self.a6.clone();
        lhs - rhs
    }

    pub fn contains(&self, p: &CurvePoint<K>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => self.residual(x, y).is_negligible(self.tol),
        }
    }

    pub fn neg(&self, p: &CurvePoint<K>) -> CurvePoint<K> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), self.neg_y(x, y)),
        }
    }

    fn neg_y(&self, x: &K, y: &K) -> K {
        -y.clone() - self.a1.mul_ref(x) - self.a3.clone()
    }

    pub fn add(&self, p: &CurvePoint<K>, q: &CurvePoint<K>) -> CurvePoint<K> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let dx = x2.sub_ref(x1);
        let (lambda, nu) = if dx.is_negligible(self.tol) {
            let denom = K::from_i64(2) * y1.clone() + self.a1.mul_ref(x1) + self.a3.clone();
            if (y2.sub_ref(&self.neg_y(x1, y1))).is_negligible(self.tol) || denom.is_negligible(self.tol)
            {
                return CurvePoint::Infinity;
            }
            let inv = denom.inv().expect("nonzero tangent denominator");
            let x1sq = x1.square();
            let lambda = (K::from_i64(3) * x1sq.clone()
                + K::from_i64(2) * self.a2.mul_ref(x1)
                + self.a4.clone()
                - self.a1.mul_ref(y1))
                * inv.clone();
            let nu = (-(x1sq * x1.clone()) + self.a4.mul_ref(x1) + K::from_i64(2) * self.a6.clone()
                - self.a3.mul_ref(y1))
                * inv;
            (lambda, nu)
        } else {
            let inv = dx.inv().expect("nonzero chord");
            let lambda = y2.sub_ref(y1) * inv.clone();
            let nu = (y1.mul_ref(x2) - y2.mul_ref(x1)) * inv;
            (lambda, nu)
        };
        let x3 = lambda.square() + self.a1.mul_ref(&lambda) - self.a2.clone() - x1.clone() - x2.clone();
        let y3 = -((lambda + self.a1.clone()) * x3.clone()) - nu - self.a3.clone();
        CurvePoint::affine(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint<K>) -> CurvePoint<K> {
        self.add(p, p)
    }

    /// Double-and-add.
    pub fn mul(&self, k: i64, p: &CurvePoint<K>) -> CurvePoint<K> {
        let mut base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.double(&base);
            }
        }
        acc
    }

    /// Point equality up to the curve tolerance.
    pub fn same_point(&self, p: &CurvePoint<K>, q: &CurvePoint<K>) -> bool {
        match (p, q) {
            (CurvePoint::Infinity, CurvePoint::Infinity) => true,
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                x1.sub_ref(x2).is_negligible(self.tol) && y1.sub_ref(y2).is_negligible(self.tol)
            }
            _ => false,
        }
    }
}

/// E₅(b): Y² + (1+b)XY + bY = X³ + bX², with (0,0) of order 5.
/// The discriminant is −b⁵(b² + 11b − 1); each factor is tested on its own
/// so that small b is not mistaken for a singular curve numerically.
pub fn tate5<K: Field>(b: K) -> Result<WeierstrassCurve<K>> {
    let c = tate5_unchecked(b.clone());
    if b.is_negligible(c.tol) {
        return Err(Error::SingularCurve("factor b of the discriminant vanishes".into()));
    }
    let quad = b.square() + K::from_i64(11) * b - K::one();
    if quad.is_negligible(c.tol) {
        return Err(Error::SingularCurve(
            "factor b^2 + 11b - 1 of the discriminant vanishes".into(),
        ));
    }
    Ok(c)
}

pub fn tate5_unchecked<K: Field>(b: K) -> WeierstrassCurve<K> {
    WeierstrassCurve::new_unchecked(K::one() + b.clone(), b.clone(), b, K::zero(), K::zero())
}

/// The subgroup ⟨(0,0)⟩ = {O, (0,0), (0,−b), (−b,0), (−b,b²)} in the order
/// O, P, 2P, 3P, 4P for P = (0,0).
pub fn tate5_origin_subgroup<K: Field>(b: &K) -> [CurvePoint<K>; 5] {
    [
        CurvePoint::Infinity,
        CurvePoint::affine(K::zero(), K::zero()),
        CurvePoint::affine(-b.clone(), b.square()),
        CurvePoint::affine(-b.clone(), K::zero()),
        CurvePoint::affine(K::zero(), -b.clone()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ComplexNum, Cyclo, Rational};
    use crate::ratfunc::var::B;
    use crate::ratfunc::{RatFunc, UniPoly};

    type Qb = RatFunc<Rational, B>;

    fn b_sym() -> Qb {
        Qb::var()
    }

    fn qb(c: &[i64]) -> Qb {
        Qb::from_poly(UniPoly::new(c.iter().map(|&x| Rational::from(x)).collect()))
    }

    #[test]
    fn tate5_coefficients() {
        let e = tate5(Rational::one()).unwrap();
        let expect: [Rational; 5] = [2, 1, 1, 0, 0].map(Rational::from);
        assert_eq!(e.coefficients(), expect);
    }

    #[test]
    fn tate5_discriminant_polynomial() {
        let e = tate5_unchecked(b_sym());
        // −b⁵(b² + 11b − 1) = b⁵ − 11b⁶ − b⁷
        assert_eq!(e.discriminant(), qb(&[0, 0, 0, 0, 0, 1, -11, -1]));
    }

    #[test]
    fn singular_members_rejected() {
        assert!(matches!(tate5(Rational::zero()), Err(Error::SingularCurve(_))));
        // b = ε⁵ = (−11 + 5α)/2 is a root of b² + 11b − 1
        let eps5 = Cyclo::epsilon().pow(5);
        assert_eq!(eps5, Cyclo::quad(Rational::frac(-11, 2), Rational::frac(5, 2)));
        assert!(matches!(tate5(eps5), Err(Error::SingularCurve(_))));
        assert!(matches!(tate5(Cyclo::epsilon_bar().pow(5)), Err(Error::SingularCurve(_))));
    }

    #[test]
    fn origin_has_order_five_symbolically() {
        let b = b_sym();
        let e = tate5(b.clone()).unwrap();
        let p = CurvePoint::affine(Qb::zero(), Qb::zero());
        assert_eq!(e.add(&p, &CurvePoint::Infinity), p);
        assert_eq!(e.double(&p), CurvePoint::affine(-b.clone(), b.square()));
        let subgroup = tate5_origin_subgroup(&b);
        for (k, expect) in subgroup.iter().enumerate() {
            assert_eq!(&e.mul(k as i64, &p), expect, "{k}P");
            assert!(e.contains(expect));
        }
        assert!(e.mul(5, &p).is_infinity());
        assert_eq!(e.neg(&p), subgroup[4]);
    }

    #[test]
    fn group_law_over_rationals() {
        // y² + y = x³ − x has (0,0) generating infinite order.
        let e = WeierstrassCurve::new(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::from(-1),
            Rational::zero(),
        )
        .unwrap();
        let p = CurvePoint::affine(Rational::zero(), Rational::zero());
        let pts: Vec<_> = (1..=6).map(|k| e.mul(k, &p)).collect();
        for q in &pts {
            assert!(e.contains(q));
        }
        assert_eq!(pts[1], CurvePoint::affine(Rational::one(), Rational::zero()));
        // associativity and commutativity on a triple
        let (a, b, c) = (&pts[0], &pts[2], &pts[4]);
        assert_eq!(e.add(&e.add(a, b), c), e.add(a, &e.add(b, c)));
        assert_eq!(e.add(a, b), e.add(b, a));
        assert!(e.add(a, &e.neg(a)).is_infinity());
        assert_eq!(e.mul(-3, &p), e.neg(&pts[2]));
    }

    #[test]
    fn doubling_two_torsion_returns_infinity() {
        // y² = x³ − x has (0,0) of order 2
        let e = WeierstrassCurve::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::from(-1),
            Rational::zero(),
        )
        .unwrap();
        let t = CurvePoint::affine(Rational::zero(), Rational::zero());
        assert!(e.double(&t).is_infinity());
    }

    #[test]
    fn complex_order_five_with_tolerance() {
        let b = ComplexNum::new(0.3, 0.2);
        let e = tate5(b).unwrap();
        let p = CurvePoint::affine(ComplexNum::zero(), ComplexNum::zero());
        assert!(e.mul(5, &p).is_infinity());
        assert!(e.same_point(&e.mul(4, &p), &e.neg(&p)));
    }
}
