use super::{tate5_unchecked, WeierstrassCurve};
use crate::error::Result;
use crate::field::Field;
use crate::ratfunc::var::X;
use crate::ratfunc::UniPoly;

/// Reference coefficients of D₅(x): row i holds the coefficients of
/// b⁰…b⁸ in the coefficient of xⁱ.
pub const D5_DISPLAY: [[i64; 9]; 11] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 5],
    [0, 0, 0, 0, 0, 0, 0, 30, 10],
    [0, 0, 0, 0, 0, 0, 80, 65, 10],
    [0, 0, 0, 0, 0, 125, 180, 50, 5],
    [0, 0, 0, 0, 126, 293, 94, 12, 1],
    [0, 0, 0, 84, 322, 71, 3, -1, 0],
    [0, 0, 36, 248, 19, -3, 1, 0, 0],
    [0, 9, 127, 26, 3, -1, 0, 0, 0],
    [1, 38, 44, 7, 1, 0, 0, 0, 0],
    [5, 25, 5, 0, 0, 0, 0, 0, 0],
    [5, 0, 0, 0, 0, 0, 0, 0, 0],
];

fn poly<K: Field>(c: Vec<K>) -> UniPoly<K, X> {
    UniPoly::new(c)
}

/// ψ₅ as a polynomial in x, from the division-polynomial recurrence
/// ψ₅ = ψ₄ψ₂³ − ψ₃³ with ψ₂² = 4x³ + b₂x² + 2b₄x + b₆ eliminated.
pub fn division_poly_5<K: Field>(e: &WeierstrassCurve<K>) -> UniPoly<K, X> {
    let (b2, b4, b6, b8) = (e.b2(), e.b4(), e.b6(), e.b8());
    let k = |n: i64| K::from_i64(n);
    let psi2_sq = poly(vec![b6.clone(), k(2) * b4.clone(), b2.clone(), k(4)]);
    let psi3 = poly(vec![
        b8.clone(),
        k(3) * b6.clone(),
        k(3) * b4.clone(),
        b2.clone(),
        k(3),
    ]);
    // ψ₄ = ψ₂ · f₄
    let f4 = poly(vec![
        b4.clone() * b8.clone() - b6.square(),
        b2.clone() * b8.clone() - b4.clone() * b6.clone(),
        k(10) * b8,
        k(10) * b6,
        k(5) * b4,
        b2,
        k(2),
    ]);
    let psi2_4 = &psi2_sq * &psi2_sq;
    &(&psi2_4 * &f4) - &psi3.pow(3)
}

/// D₅ = ψ₅ / (x(x + b)) for E₅(b); leading coefficient 5.
pub fn tate5_d5<K: Field>(b: &K) -> Result<UniPoly<K, X>> {
    let psi5 = division_poly_5(&tate5_unchecked(b.clone()));
    let origin_factor = poly(vec![K::zero(), b.clone()]) + poly(vec![K::zero(), K::zero(), K::one()]);
    psi5.exact_div(&origin_factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::ratfunc::var::B;
    use crate::ratfunc::RatFunc;

    type Qb = RatFunc<Rational, B>;

    fn display_as_poly() -> UniPoly<Qb, X> {
        UniPoly::new(
            D5_DISPLAY
                .iter()
                .map(|row| Qb::from_poly(UniPoly::new(row.iter().map(|&c| Rational::from(c)).collect())))
                .collect(),
        )
    }

    #[test]
    fn psi5_degree_and_lead() {
        let psi5 = division_poly_5(&tate5_unchecked(Qb::var()));
        assert_eq!(psi5.degree(), Some(12));
        assert_eq!(psi5.lead(), Some(&Qb::from_i64(5)));
    }

    #[test]
    fn d5_matches_reference_table() {
        let d5 = tate5_d5(&Qb::var()).unwrap();
        assert_eq!(d5.coeff(0), Qb::var().pow(8).scale(&Rational::from(5)));
        assert_eq!(d5.lead(), Some(&Qb::from_i64(5)));
        assert_eq!(d5, display_as_poly());
    }

    #[test]
    fn d5_times_origin_factor_is_psi5() {
        let b = Qb::var();
        let d5 = tate5_d5(&b).unwrap();
        let xxb = UniPoly::new(vec![Qb::zero(), b.clone(), Qb::one()]);
        assert_eq!(&d5 * &xxb, division_poly_5(&tate5_unchecked(b)));
    }

    #[test]
    fn specialization_commutes() {
        // ψ₅ at b = 3 from the symbolic table
        let b = Rational::from(3);
        let d5 = tate5_d5(&b).unwrap();
        let specialized: Vec<Rational> = D5_DISPLAY
            .iter()
            .map(|row| {
                row.iter()
                    .rev()
                    .fold(Rational::zero(), |acc, &c| acc * b.clone() + Rational::from(c))
            })
            .collect();
        assert_eq!(d5, UniPoly::new(specialized));
    }
}
