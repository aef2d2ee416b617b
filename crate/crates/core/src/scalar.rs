use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Exact signed integer scalar: `i64`, `i128` or `BigInt`.
///
/// Every kernel in this crate is pure ring arithmetic plus exact
/// division and comparison, so it runs over any of these. Fixed-width
/// scalars are handy for small cases and benchmarks; they overflow
/// silently in release builds, so anything open-ended should use the
/// [`crate::Int`] alias.
pub trait Count:
    Integer + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 fits in any Count scalar")
    }

    /// (-1)^n as a scalar.
    fn alt_sign(n: i64) -> Self {
        if n % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Count for T where
    T: Integer + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
}

/// Divides exactly, panicking on a nonzero remainder.
///
/// The sequence formulas divide only quantities that are provably
/// divisible; a remainder here is an internal invariant failure, never
/// something to round away.
pub(crate) fn exact_div<T: Count>(value: T, divisor: i64, what: &str) -> T {
    let (q, r) = value.div_rem(&T::from_int(divisor));
    assert!(r.is_zero(), "{what}: division by {divisor} is not exact");
    q
}
