//! Type-level names for polynomial variables.

use std::fmt::Debug;
use std::hash::Hash;

pub trait Indeterminate: Copy + Default + Debug + Eq + Hash + Send + Sync + 'static {
    const NAME: &'static str;
}

macro_rules! indeterminate {
    ($(#[$m:meta])* $name:ident, $text:literal) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
        pub struct $name;

        impl Indeterminate for $name {
            const NAME: &'static str = $text;
        }
    };
}

indeterminate!(
    /// The Kummer parameter u with b = (ε⁵u⁵ + ε̄⁵)/(u⁵ + 1).
    U,
    "u"
);
indeterminate!(
    /// The Tate normal form parameter b.
    B,
    "b"
);
indeterminate!(
    /// The X-coordinate variable of g(X), D₅ and ψ₅.
    X,
    "X"
);
indeterminate!(
    /// The shifted variable x of the depressed quintic and the sextic resolvent.
    XDep,
    "x"
);
indeterminate!(
    /// The symbol r standing for r(5τ).
    R,
    "r"
);
