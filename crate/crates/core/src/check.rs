//! Named pass/fail results produced by the verification routines.

use std::fmt;

use crate::field::Field;
use crate::ratfunc::var::Indeterminate;
use crate::ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Check::new(name, true, "")
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check::new(name, false, detail)
    }

    /// Exact comparison of two rational functions. On mismatch the detail
    /// names the first coefficient where num₁·den₂ and num₂·den₁ differ.
    pub fn equal<K, V>(name: impl Into<String>, got: &RatFunc<K, V>, expected: &RatFunc<K, V>) -> Self
    where
        K: Field + fmt::Display,
        V: Indeterminate,
    {
        if got == expected {
            return Check::pass(name);
        }
        let lhs = got.num() * expected.den();
        let rhs = expected.num() * got.den();
        let n = lhs.coeffs().len().max(rhs.coeffs().len());
        let detail = (0..n)
            .find(|&i| lhs.coeff(i) != rhs.coeff(i))
            .map(|i| {
                format!(
                    "cross-multiplied coefficient of {}^{i}: got {}, expected {}",
                    V::NAME,
                    lhs.coeff(i),
                    rhs.coeff(i)
                )
            })
            .unwrap_or_else(|| "denominators differ".into());
        Check::fail(name, detail)
    }

    /// Passes when `value` is identically zero.
    pub fn zero<K, V>(name: impl Into<String>, value: &RatFunc<K, V>) -> Self
    where
        K: Field + fmt::Display,
        V: Indeterminate,
    {
        Check::equal(name, value, &RatFunc::zero())
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "ok  " } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{mark} {}", self.name)
        } else {
            write!(f, "{mark} {}: {}", self.name, self.detail)
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
