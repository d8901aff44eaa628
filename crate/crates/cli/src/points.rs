//! The points command. With "u=<value>" every coordinate is exact; with a
//! bare value of b the fifth root u is only available numerically, so the
//! coordinates are complex under ζ ↦ exp(2πi/5).

use rayon::prelude::*;
use serde::Serialize;
use tate5_core::curve::{tate5, CurvePoint};
use tate5_core::field::{Cyclo, Embed, Field, GaloisExp};
use tate5_core::rrcf::order_five_defect;
use tate5_core::torsion::{factored_formulas, factored_point, PointLabel};
use tate5_core::Error;

use crate::json::{self, Complex, Exact};
use crate::CliError;

#[derive(Serialize)]
struct ExactPoint {
    label: String,
    x: Exact,
    y: Exact,
    on_curve: bool,
    order5: bool,
}

#[derive(Serialize)]
struct ExactOutput {
    u: Exact,
    b: Exact,
    distinct: usize,
    points: Vec<ExactPoint>,
    verified: bool,
}

#[derive(Serialize)]
struct NumericPoint {
    label: String,
    x: Complex,
    y: Complex,
    /// Curve equation at (x, y) divided by 1 + |x|³ + |y|².
    residual: f64,
    /// |X(2P) − X(3P)| / |X(2P)|.
    order5_defect: f64,
    verified: bool,
}

#[derive(Serialize)]
struct NumericOutput {
    b: Exact,
    /// u⁵ = (b − ε̄⁵)/(ε⁵ − b), exact.
    u5: Exact,
    u: Complex,
    b_of_u_error: f64,
    points: Vec<NumericPoint>,
    verified: bool,
}

pub fn points(value: &str, tol: f64, pool: &rayon::ThreadPool) -> Result<bool, CliError> {
    match value.trim().strip_prefix("u=") {
        Some(u) => exact(&u.parse()?, pool),
        None => numeric(&value.parse()?, tol, pool),
    }
}

fn exact(u: &Cyclo, pool: &rayon::ThreadPool) -> Result<bool, CliError> {
    let b = factored_formulas().b.eval(u).map_err(|e| in_formula("b(u)", e))?;
    let e = tate5(b.clone())?;
    let labels = PointLabel::all();
    let points: Vec<ExactPoint> = pool.install(|| {
        labels
            .par_iter()
            .map(|&label| -> Result<ExactPoint, Error> {
                let (fx, fy) = factored_point(label);
                let x = fx.eval(u).map_err(|e| in_formula(&format!("X at {label}"), e))?;
                let y = fy.eval(u).map_err(|e| in_formula(&format!("Y at {label}"), e))?;
                let p = CurvePoint::affine(x.clone(), y.clone());
                Ok(ExactPoint {
                    label: label.to_string(),
                    x: (&x).into(),
                    y: (&y).into(),
                    on_curve: e.contains(&p),
                    order5: e.mul(5, &p).is_infinity(),
                })
            })
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut keys: Vec<(&[String; 4], &[String; 4])> = points.iter().map(|p| (&p.x.coords, &p.y.coords)).collect();
    keys.sort();
    keys.dedup();
    let distinct = keys.len();
    let verified = distinct == 20 && points.iter().all(|p| p.on_curve && p.order5);
    json::print(&ExactOutput { u: u.into(), b: (&b).into(), distinct, points, verified });
    Ok(verified)
}

fn numeric(b: &Cyclo, tol: f64, pool: &rayon::ThreadPool) -> Result<bool, CliError> {
    tate5(b.clone())?;
    let (e5, eb5) = (Cyclo::epsilon().pow(5), Cyclo::epsilon_bar().pow(5));
    let den = e5.clone() - b.clone();
    if den.is_zero() {
        return Err(Error::Pole("u^5 = (b - epsbar^5)/(eps^5 - b): factor (eps^5 - b) vanishes".into()).into());
    }
    let u5 = (b.clone() - eb5) * den.inv()?;
    let k = GaloisExp::IDENTITY;
    let u = u5.embed(k).principal_root(5);
    let f = factored_formulas();
    let bc = b.embed(k);
    let b_of_u_error = (f.b.eval_complex(u, k)? - bc).abs();
    let e = tate5(bc)?.with_tolerance(tol);
    let labels = PointLabel::all();
    let points: Vec<NumericPoint> = pool.install(|| {
        labels
            .par_iter()
            .map(|&label| -> Result<NumericPoint, Error> {
                let (fx, fy) = factored_point(label);
                let (x, y) = (fx.eval_complex(u, k)?, fy.eval_complex(u, k)?);
                let residual = e.residual(&x, &y).abs() / (1.0 + x.abs().powi(3) + y.abs().powi(2));
                let order5_defect = order_five_defect(&e, CurvePoint::affine(x, y));
                Ok(NumericPoint {
                    label: label.to_string(),
                    x: x.into(),
                    y: y.into(),
                    residual,
                    order5_defect,
                    verified: residual <= tol && order5_defect <= tol.sqrt(),
                })
            })
            .collect::<Result<Vec<_>, _>>()
    })?;
    let verified = b_of_u_error <= tol && points.iter().all(|p| p.verified);
    json::print(&NumericOutput { b: b.into(), u5: (&u5).into(), u: u.into(), b_of_u_error, points, verified });
    Ok(verified)
}

/// Prefixes a pole message with the formula it came from.
fn in_formula(what: &str, e: Error) -> Error {
    match e {
        Error::Pole(m) => Error::Pole(format!("{what}: {m}")),
        other => other,
    }
}
