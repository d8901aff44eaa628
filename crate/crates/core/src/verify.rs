//! Named verification suites.
//!
//! A suite is an ordered list of [`Job`]s; each job yields one or more
//! [`Check`]s. Jobs share nothing mutable, so a driver may run them in any
//! order or in parallel and still report in list order.

use std::sync::OnceLock;

use crate::check::Check;
use crate::curve::{
    division_poly_5, eprime_curve, eprime_double, tate5, tate5_d5, tate5_origin_subgroup, tate5_unchecked, to_eprime,
    CurvePoint, D5_DISPLAY,
};
use crate::error::{Error, Result};
use crate::field::{Cyclo, Embed, Field, GaloisAction, GaloisExp, Rational};
use crate::ratfunc::var::{B, X};
use crate::ratfunc::{RatFunc, UniPoly};
use crate::rrcf::{self, TauPoint};
use crate::torsion::{self, TorsionFormulas};
use crate::watson::{self, AlphaSign};

pub const SUITES: [&str; 5] = ["field", "curve", "watson", "torsion", "qseries"];

/// Sample points for the numeric checks of the q-series suite.
pub const TAU_SAMPLES: [(f64, f64); 3] = [(0.0, 1.0), (1.0 / 3.0, 2.0 / 3.0), (0.3, 0.9)];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    /// Number of exact series coefficients compared.
    pub terms: usize,
    pub tol: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options { terms: rrcf::DEFAULT_TERMS, tol: rrcf::DEFAULT_TOL }
    }
}

#[derive(Clone, Copy)]
pub struct Job {
    pub suite: &'static str,
    pub id: &'static str,
    /// What the job reproduces, in words.
    pub anchor: &'static str,
    pub run: fn(&Options) -> Result<Vec<Check>>,
}

impl std::fmt::Debug for Job {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.suite, self.id)
    }
}

/// Jobs of a named suite, or of every suite for "all".
pub fn suite(name: &str) -> Result<Vec<Job>> {
    let jobs = match name {
        "field" => field_jobs(),
        "curve" => curve_jobs(),
        "watson" => watson_jobs(),
        "torsion" => torsion_jobs(),
        "qseries" => qseries_jobs(),
        "all" => SUITES.iter().flat_map(|s| suite(s).expect("known suite")).collect(),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(jobs)
}

/// The torsion formulas are built once per process and shared read-only.
pub fn formulas() -> &'static TorsionFormulas {
    static F: OnceLock<TorsionFormulas> = OnceLock::new();
    F.get_or_init(torsion::build_formulas)
}

fn job(suite: &'static str, id: &'static str, anchor: &'static str, run: fn(&Options) -> Result<Vec<Check>>) -> Job {
    Job { suite, id, anchor, run }
}

fn z(k: i64) -> Cyclo {
    Cyclo::zeta_pow(k)
}

fn eq_check<K: PartialEq + std::fmt::Debug>(name: &str, got: K, want: K) -> Check {
    if got == want {
        Check::pass(name)
    } else {
        Check::fail(name, format!("got {got:?}, expected {want:?}"))
    }
}

fn cyclo_check(name: &str, got: Cyclo, want: Cyclo) -> Check {
    if got == want {
        Check::pass(name)
    } else {
        Check::fail(name, format!("got {}, expected {}", got.pretty(), want.pretty()))
    }
}

fn field_jobs() -> Vec<Job> {
    vec![
        job("field", "arithmetic", "reduction modulo the fifth cyclotomic polynomial", |_| {
            let (e, eb) = (Cyclo::epsilon(), Cyclo::epsilon_bar());
            Ok(vec![
                cyclo_check("zeta * zeta^4 = 1", z(1) * z(4), Cyclo::one()),
                cyclo_check("eps * epsbar = -1", e.clone() * eb.clone(), -Cyclo::one()),
                cyclo_check("eps + epsbar = -1", e + eb, -Cyclo::one()),
                cyclo_check("alpha^2 = 5", Cyclo::alpha().square(), Cyclo::from_ints([5, 0, 0, 0])),
                cyclo_check("alpha = 2 eps + 1", Cyclo::alpha(), Cyclo::epsilon() + Cyclo::epsilon() + Cyclo::one()),
            ])
        }),
        job("field", "inverses", "inverses of the golden-ratio units", |_| {
            Ok(vec![
                cyclo_check("1/1 = 1", Cyclo::one().inv()?, Cyclo::one()),
                cyclo_check("1/eps = -epsbar", Cyclo::epsilon().inv()?, -Cyclo::epsilon_bar()),
                cyclo_check("1/zeta = zeta^4", z(1).inv()?, z(4)),
                Check::new("1/0 is rejected", matches!(Cyclo::zero().inv(), Err(Error::DivisionByZero)), ""),
            ])
        }),
        job("field", "galois", "the automorphisms zeta -> zeta^k", |_| {
            let a = Cyclo::alpha();
            let orbit: Vec<Cyclo> = (1..5).map(|k| a.galois(GaloisExp::new(k).expect("valid"))).collect();
            let sample = Cyclo::from_coords([
                Rational::frac(1, 2),
                Rational::frac(-3, 7),
                Rational::from(2),
                Rational::frac(5, 3),
            ]);
            let (s, s3) = (GaloisExp::SIGMA, GaloisExp::new(3)?);
            Ok(vec![
                cyclo_check("sigma(alpha) = -alpha", a.galois(GaloisExp::SIGMA), -a.clone()),
                Check::new("alpha orbit is alpha, -alpha, -alpha, alpha", orbit == [a.clone(), -a.clone(), -a.clone(), a], ""),
                cyclo_check("zeta -> zeta^4 fixes eps", Cyclo::epsilon().galois(GaloisExp::SIGMA2), Cyclo::epsilon()),
                cyclo_check("sigma(eps) = epsbar", Cyclo::epsilon().galois(GaloisExp::SIGMA), Cyclo::epsilon_bar()),
                cyclo_check("sigma^3 after sigma is the identity", sample.galois(s3).galois(s), sample.clone()),
                Check::new("exponent 0 is rejected", GaloisExp::new(0).is_err(), ""),
            ])
        }),
        job("field", "norms", "norms to the rationals", |_| {
            Ok(vec![
                eq_check("N(1 + zeta) = 1", (Cyclo::one() + z(1)).norm(), Rational::from(1)),
                eq_check("N(zeta) = 1", z(1).norm(), Rational::from(1)),
                eq_check("N(2) = 16", Cyclo::from_ints([2, 0, 0, 0]).norm(), Rational::from(16)),
                eq_check("N(eps) = 1", Cyclo::epsilon().norm(), Rational::from(1)),
                eq_check("N(alpha) = 25", Cyclo::alpha().norm(), Rational::from(25)),
            ])
        }),
        job("field", "embeddings", "complex embeddings zeta -> exp(2 pi i k/5)", |_| {
            let k1 = GaloisExp::IDENTITY;
            let sqrt5 = 5f64.sqrt();
            let close = |name: &str, got: f64, want: f64| {
                Check::new(name, (got - want).abs() < 1e-12, format!("{got:.15} vs {want:.15}"))
            };
            let alpha = Cyclo::alpha().embed(k1);
            let sample = Cyclo::from_ints([3, -1, 4, 1]);
            let worst = (1..5)
                .map(|k| {
                    let g = GaloisExp::new(k).expect("valid");
                    (sample.galois(g).embed(k1) - sample.embed(g)).abs()
                })
                .fold(0.0, f64::max);
            Ok(vec![
                close("alpha -> sqrt 5", alpha.re(), sqrt5),
                close("alpha is real", alpha.im(), 0.0),
                close("eps -> (sqrt 5 - 1)/2", Cyclo::epsilon().embed(k1).re(), (sqrt5 - 1.0) / 2.0),
                close("|zeta| = 1", z(1).embed(k1).abs(), 1.0),
                Check::new("embedding respects the Galois action", worst < 1e-12, format!("max deviation {worst:.3e}")),
            ])
        }),
    ]
}

type Qb = RatFunc<Rational, B>;

fn d5_display() -> UniPoly<Qb, X> {
    UniPoly::new(
        D5_DISPLAY
            .iter()
            .map(|row| Qb::from_poly(UniPoly::new(row.iter().map(|&c| Rational::from(c)).collect())))
            .collect(),
    )
}

fn curve_jobs() -> Vec<Job> {
    vec![
        job("curve", "tate-normal-form", "coefficients and discriminant of the Tate normal form", |_| {
            let one = tate5(Rational::from(1))?;
            let b = Qb::var();
            let e = tate5(b.clone())?;
            let quad = Qb::from_poly(UniPoly::new(vec![Rational::from(-1), Rational::from(11), Rational::from(1)]));
            Ok(vec![
                eq_check("E5(1) = [2, 1, 1, 0, 0]", one.coefficients(), [2, 1, 1, 0, 0].map(Rational::from)),
                Check::equal("discriminant = -b^5(b^2 + 11b - 1)", &e.discriminant(), &(-(b.pow(5) * quad))),
                Check::new("b = 0 is singular", matches!(tate5(Rational::zero()), Err(Error::SingularCurve(_))), ""),
            ])
        }),
        job("curve", "origin-subgroup", "the subgroup generated by (0,0)", |_| {
            let b = Qb::var();
            let e = tate5(b.clone())?;
            let o = CurvePoint::affine(Qb::zero(), Qb::zero());
            let multiples: Vec<CurvePoint<Qb>> = (1..=5).map(|k| e.mul(k, &o)).collect();
            let listed = tate5_origin_subgroup(&b);
            let in_list = multiples.iter().all(|p| listed.contains(p));
            Ok(vec![
                Check::new("(0,0) + O = (0,0)", e.add(&o, &CurvePoint::Infinity) == o, ""),
                Check::new("2(0,0) = (-b, b^2)", multiples[1] == CurvePoint::affine(-b.clone(), b.square()), ""),
                Check::new("5(0,0) = O", multiples[4].is_infinity(), ""),
                Check::new("multiples are O, (0,0), (0,-b), (-b,0), (-b,b^2)", in_list, ""),
            ])
        }),
        job("curve", "d5-display", "the degree-10 factor of the 5-division polynomial", |_| {
            let b = Qb::var();
            let d5 = tate5_d5(&b)?;
            let shown = d5_display();
            let first = (0..=10).find(|&i| d5.coeff(i) != shown.coeff(i));
            let xxb = UniPoly::new(vec![Qb::zero(), b.clone(), Qb::one()]);
            Ok(vec![
                match first {
                    None => Check::pass("D5 matches the 11-row table"),
                    Some(i) => Check::fail("D5 matches the 11-row table", format!("x^{i}: {}", d5.coeff(i))),
                },
                eq_check("deg D5 = 10", d5.degree(), Some(10)),
                Check::new("D5 x (x + b) = psi5", &d5 * &xxb == division_poly_5(&tate5_unchecked(b)), ""),
                // 10 roots of D5 and the 2 X-values of the origin subgroup carry
                // two points each
                eq_check("2 (10 + 2) = 24 nontrivial 5-torsion points", 2 * (d5.degree().unwrap_or(0) + 2), 24),
            ])
        }),
        job("curve", "factorization", "D5 = 5 g(X) g(X) conjugate", |_| {
            let g = watson::build_g(AlphaSign::Plus);
            let gbar = watson::build_g(AlphaSign::Minus);
            let d5 = tate5_d5(&RatFunc::<Cyclo, B>::var())?;
            let prod = (&g * &gbar).scale(&RatFunc::from_i64(5));
            let first = (0..=10).find(|&i| prod.coeff(i) != d5.coeff(i));
            Ok(vec![match first {
                None => Check::pass("5 g gbar = D5"),
                Some(i) => Check::fail("5 g gbar = D5", format!("x^{i}: {} vs {}", prod.coeff(i), d5.coeff(i))),
            }])
        }),
        job("curve", "eprime-doubling", "the doubling map on the short model E'", |_| {
            let t = formulas();
            let one = Cyclo::one();
            let b = t.b_of_u.eval(&one)?;
            let p = CurvePoint::affine(t.x_of_u.eval(&one)?, t.y1_of_u.eval(&one)?);
            let e = tate5(b.clone())?;
            let ep = eprime_curve(&b)?;
            let pp = to_eprime(&b, &p);
            let two_p = e.double(&p);
            let (x, yp) = (pp.x().expect("affine").clone(), pp.y().expect("affine").clone());
            let (x2, yp2) = eprime_double(&b, &x, &yp)?;
            Ok(vec![
                cyclo_check("b(1) = -11/2", b.clone(), Cyclo::from_rational(&Rational::frac(-11, 2))),
                Check::new("P(u=1) lies on E5(-11/2)", e.contains(&p), ""),
                Check::new("translate of P lies on E'", ep.contains(&pp), ""),
                Check::new(
                    "closed-form doubling = group law",
                    to_eprime(&b, &two_p) == CurvePoint::affine(x2, yp2),
                    "",
                ),
                Check::new(
                    "p(X) = 0 is reported",
                    matches!(eprime_double(&Rational::zero(), &Rational::zero(), &Rational::zero()), Err(Error::Pole(_))),
                    "",
                ),
            ])
        }),
    ]
}

fn watson_jobs() -> Vec<Job> {
    vec![
        job("watson", "pipeline", "closed forms of the solution by radicals, alpha branch", |_| {
            Ok(watson::run(AlphaSign::Plus)?.checks)
        }),
        job("watson", "conjugate-pipeline", "closed forms of the solution by radicals, -alpha branch", |_| {
            Ok(watson::run(AlphaSign::Minus)?.checks)
        }),
    ]
}

fn torsion_jobs() -> Vec<Job> {
    vec![
        job("torsion", "formulas", "the parametrization of b, X, Y1, Y2 by u", |_| Ok(torsion::formula_checks(formulas()))),
        job("torsion", "points", "the 20 points outside <(0,0)>", |_| torsion::point_checks(formulas())),
        job("torsion", "order-five", "4P = -P over Q(zeta)(u) and the action of sigma", |_| {
            Ok(torsion::verify_order5(formulas())?.0)
        }),
        job("torsion", "doubling", "X(2P) as the sigma image of X", |_| torsion::verify_doubling(formulas())),
    ]
}

fn qseries_jobs() -> Vec<Job> {
    vec![
        job("qseries", "symbolic", "building blocks and coordinates as functions of r", |_| {
            rrcf::symbolic_checks(formulas())
        }),
        job("qseries", "series", "q-expansions of r(tau) and r(5tau)", |o| rrcf::series_checks(formulas(), o.terms)),
        job("qseries", "numeric", "the point from r(5tau) on E5(r^5(tau)) at sample tau", |o| {
            let t = formulas();
            let coords = rrcf::coords_from_r_symbolic(t)?;
            let mut out = Vec::new();
            for (re, im) in TAU_SAMPLES {
                let tau = TauPoint::new(re, im)?;
                let report = rrcf::numeric_torsion_check(t, &coords, tau, o.tol)?;
                out.extend(report.checks.into_iter().map(|c| Check { name: format!("tau = {re:.4}+{im:.4}i: {}", c.name), ..c }));
            }
            Ok(out)
        }),
        job("qseries", "fricke", "the transformation tau -> -1/(5tau)", |o| {
            let mut out = Vec::new();
            for (re, im) in TAU_SAMPLES {
                let checks = rrcf::fricke_spot_check(TauPoint::new(re, im)?, o.tol)?;
                out.extend(checks.into_iter().map(|c| Check { name: format!("tau = {re:.4}+{im:.4}i: {}", c.name), ..c }));
            }
            Ok(out)
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert!(matches!(suite("bogus"), Err(Error::UnknownSuite(_))));
        let all = suite("all").unwrap();
        let total: usize = SUITES.iter().map(|s| suite(s).unwrap().len()).sum();
        assert_eq!(all.len(), total);
        let mut ids: Vec<String> = all.iter().map(|j| format!("{j:?}")).collect();
        ids.dedup();
        assert_eq!(ids.len(), total);
    }

    #[test]
    fn field_and_curve_suites_pass() {
        let o = Options::default();
        for j in suite("field").unwrap().into_iter().chain(suite("curve").unwrap()) {
            for c in (j.run)(&o).unwrap() {
                assert!(c.passed, "{j:?}: {c}");
            }
        }
    }
}
