use serde::Serialize;
use tate5_core::curve::{tate5, CurvePoint};
use tate5_core::rrcf::{self, TauPoint};
use tate5_core::verify::formulas;

use crate::json::{self, CheckLine, Complex};
use crate::CliError;

#[derive(Serialize)]
struct Residuals {
    /// |equation of E5(b)| at (X, Y1).
    curve_y1: f64,
    curve_y2: f64,
    /// |4P − (−P)|, max over both coordinates.
    order5: f64,
    /// Worst curve residual over the 20 labelled points.
    all_points: f64,
}

#[derive(Serialize)]
struct EvalOutput {
    tau: Complex,
    r_tau: Complex,
    r_5tau: Complex,
    b: Complex,
    u: Complex,
    x: Complex,
    y1: Complex,
    y2: Complex,
    x2p: Complex,
    residuals: Residuals,
    checks: Vec<CheckLine>,
    passed: bool,
}

pub fn eval(re: f64, im: f64, tol: f64) -> Result<bool, CliError> {
    let tau = TauPoint::new(re, im)?;
    let t = formulas();
    let coords = rrcf::coords_from_r_symbolic(t)?;
    let r = rrcf::numeric_torsion_check(t, &coords, tau, tol)?;

    let e = tate5(r.b)?.with_tolerance(tol);
    let p = CurvePoint::affine(r.x, r.y1);
    let order5 = match (e.mul(4, &p), e.neg(&p)) {
        (CurvePoint::Affine { x: x4, y: y4 }, CurvePoint::Affine { x, y }) => (x4 - x).abs().max((y4 - y).abs()),
        _ => f64::INFINITY,
    };
    let residuals = Residuals {
        curve_y1: r.curve_residual,
        curve_y2: e.residual(&r.x, &r.y2).abs(),
        order5,
        all_points: r.max_point_residual,
    };
    let passed = r.checks.iter().all(|c| c.passed);
    json::print(&EvalOutput {
        tau: tau.as_complex().into(),
        r_tau: r.r_tau.into(),
        r_5tau: r.r_5tau.into(),
        b: r.b.into(),
        u: r.u.into(),
        x: r.x.into(),
        y1: r.y1.into(),
        y2: r.y2.into(),
        x2p: r.x2p.into(),
        residuals,
        checks: r.checks.into_iter().map(CheckLine::from).collect(),
        passed,
    });
    Ok(passed)
}
