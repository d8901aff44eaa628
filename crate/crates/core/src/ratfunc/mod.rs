//! Univariate polynomials and rational functions over a field, with the
//! variable substitutions used throughout: v ↦ ζⁱv, v ↦ 1/v, Möbius maps,
//! composition with another rational function, and coefficient-wise Galois
//! action.

mod factored;
mod poly;
mod rational;
mod text;
pub mod var;

pub use factored::Factored;
pub use poly::UniPoly;
pub use rational::{RatFunc, Substitution};

use crate::error::Result;
use crate::field::{Field, GaloisAction, GaloisExp};
use var::Indeterminate;

/// Applies ζ ↦ ζᵏ to every coefficient of `f`.
pub fn coeff_galois<K, V>(k: GaloisExp, f: &RatFunc<K, V>) -> RatFunc<K, V>
where
    K: Field + GaloisAction,
    V: Indeterminate,
{
    f.galois(k)
}

/// σ-type map: coefficient Galois action combined with v ↦ 1/v.
pub fn galois_invert<K, V>(k: GaloisExp, f: &RatFunc<K, V>) -> RatFunc<K, V>
where
    K: Field + GaloisAction,
    V: Indeterminate,
{
    f.galois(k).invert_var()
}

/// Squarefree part of a nonzero polynomial: p / gcd(p, p′), made monic.
pub fn radical<K: Field, V: Indeterminate>(p: &UniPoly<K, V>) -> Result<UniPoly<K, V>> {
    let g = p.gcd(&p.derivative());
    Ok(p.exact_div(&g)?.monic())
}
