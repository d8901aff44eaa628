use proptest::prelude::*;
use tate5_core::curve::{tate5, tate5_origin_subgroup, CurvePoint};
use tate5_core::field::{Cyclo, Embed, Field, GaloisAction, GaloisExp, Rational};
use tate5_core::ratfunc::var::U;
use tate5_core::ratfunc::{RatFunc, Substitution, UniPoly};
use tate5_core::torsion::{factored_point, PointLabel};

type Qu = RatFunc<Cyclo, U>;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| Rational::frac(n, d))
}

fn cyclo() -> impl Strategy<Value = Cyclo> {
    [rational(), rational(), rational(), rational()].prop_map(Cyclo::from_coords)
}

fn nonzero_cyclo() -> impl Strategy<Value = Cyclo> {
    cyclo().prop_filter("nonzero", |c| !c.is_zero())
}

fn galois_exp() -> impl Strategy<Value = GaloisExp> {
    (1i64..=4).prop_map(|k| GaloisExp::new(k).unwrap())
}

fn poly() -> impl Strategy<Value = UniPoly<Cyclo, U>> {
    prop::collection::vec(cyclo(), 1..4).prop_map(UniPoly::new)
}

fn ratfunc() -> impl Strategy<Value = Qu> {
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| Qu::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_are_reduced(n in -1000i64..1000, d in 1i64..1000) {
        use num_integer::Integer;
        let r = Rational::frac(n, d);
        prop_assert!(r.denom() > &0.into());
        prop_assert!(r.numer().gcd(r.denom()) == 1.into());
    }

    #[test]
    fn cyclo_field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
        prop_assert_eq!(a.clone() * b.clone(), b * a);
    }

    #[test]
    fn cyclo_inverse(a in nonzero_cyclo()) {
        prop_assert_eq!(a.clone() * a.inv().unwrap(), Cyclo::one());
    }

    #[test]
    fn norm_is_multiplicative(a in cyclo(), b in cyclo()) {
        prop_assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
    }

    #[test]
    fn galois_is_a_ring_homomorphism(a in cyclo(), b in cyclo(), k in galois_exp()) {
        prop_assert_eq!((a.clone() + b.clone()).galois(k), a.galois(k) + b.galois(k));
        prop_assert_eq!((a.clone() * b.clone()).galois(k), a.galois(k) * b.galois(k));
        prop_assert_eq!(a.galois(GaloisExp::IDENTITY), a);
    }

    #[test]
    fn galois_composes(a in cyclo(), k in galois_exp(), m in galois_exp()) {
        prop_assert_eq!(a.galois(m).galois(k), a.galois(k.compose(m)));
    }

    #[test]
    fn embedding_respects_galois(a in cyclo(), k in galois_exp()) {
        let d = (a.galois(k).embed(GaloisExp::IDENTITY) - a.embed(k)).abs();
        prop_assert!(d < 1e-12 * (1.0 + a.embed(k).abs()));
    }

    #[test]
    fn ratfunc_self_quotient(f in ratfunc()) {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(f.div_ref(&f).unwrap(), Qu::one());
    }

    #[test]
    fn inversion_is_an_involution(f in ratfunc()) {
        prop_assert_eq!(f.invert_var().invert_var(), f);
    }

    #[test]
    fn zeta_twist_has_order_five(f in ratfunc()) {
        let mut g = f.clone();
        for _ in 0..5 {
            g = g.substitute(&Substitution::ScaleRoot(Cyclo::zeta())).unwrap();
        }
        prop_assert_eq!(g, f);
    }

    #[test]
    fn coefficient_galois_is_a_homomorphism(f in ratfunc(), g in ratfunc(), k in galois_exp()) {
        prop_assert_eq!((f.clone() * g.clone()).galois(k), f.galois(k) * g.galois(k));
        prop_assert_eq!((f.clone() + g.clone()).galois(k), f.galois(k) + g.galois(k));
    }

    #[test]
    fn text_round_trip(f in ratfunc()) {
        let back: Qu = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn moebius_composition_is_sound(
        a in cyclo(), b in cyclo(), c in cyclo(), d in cyclo(), x in cyclo()
    ) {
        prop_assume!(!(a.clone() * d.clone() - b.clone() * c.clone()).is_zero());
        let mx_den = c.clone() * x.clone() + d.clone();
        prop_assume!(!mx_den.is_zero());
        let f = Qu::from_poly(UniPoly::monomial(Cyclo::one(), 5));
        let g = f.substitute(&Substitution::Moebius { a: a.clone(), b: b.clone(), c, d }).unwrap();
        let mx = (a * x.clone() + b) * mx_den.inv().unwrap();
        prop_assert_eq!(g.eval(&x).unwrap(), f.eval(&mx).unwrap());
    }

    /// The 25 points of order dividing 5 at u = 1 form a group.
    #[test]
    fn group_law_on_exact_torsion(i in 0usize..25, j in 0usize..25, k in 0usize..25) {
        let pts = torsion_at_u_one();
        let b = Cyclo::from_rational(&Rational::frac(-11, 2));
        let e = tate5(b).unwrap();
        let (p, q, r) = (&pts[i], &pts[j], &pts[k]);
        prop_assert_eq!(e.add(p, q), e.add(q, p));
        prop_assert_eq!(e.add(&e.add(p, q), r), e.add(p, &e.add(q, r)));
        prop_assert!(e.add(p, &e.neg(p)).is_infinity());
        prop_assert!(pts.contains(&e.add(p, q)));
    }
}

fn torsion_at_u_one() -> Vec<CurvePoint<Cyclo>> {
    let one = Cyclo::one();
    let b = Cyclo::from_rational(&Rational::frac(-11, 2));
    let mut pts: Vec<CurvePoint<Cyclo>> = tate5_origin_subgroup(&b).to_vec();
    for label in PointLabel::all() {
        let (x, y) = factored_point(label);
        pts.push(CurvePoint::affine(x.eval(&one).unwrap(), y.eval(&one).unwrap()));
    }
    pts
}
