//! JSON shapes for the scalar types of the core crate.

use serde::Serialize;
use tate5_core::field::{ComplexNum, Cyclo};

#[derive(Serialize, Debug, Clone, Copy)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexNum> for Complex {
    fn from(z: ComplexNum) -> Self {
        Complex { re: z.re(), im: z.im() }
    }
}

/// Exact value: coordinates in the basis 1, ζ, ζ², ζ³ as "p/q" strings, plus
/// a readable form.
#[derive(Serialize, Debug, Clone)]
pub struct Exact {
    pub coords: [String; 4],
    pub pretty: String,
}

impl From<&Cyclo> for Exact {
    fn from(c: &Cyclo) -> Self {
        Exact { coords: c.coords().map(|r| r.to_string()), pretty: c.pretty() }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<tate5_core::check::Check> for CheckLine {
    fn from(c: tate5_core::check::Check) -> Self {
        CheckLine { name: c.name, passed: c.passed, detail: c.detail }
    }
}

pub fn print<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("plain data serializes"));
}
