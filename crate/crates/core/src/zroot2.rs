//! Exact arithmetic in the ring of numbers `a + b√2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{exact_div, Count};

/// `a + b√2` with exact integer parts.
///
/// Conjugation flips the sign of `b`; the norm `a² − 2b²` is
/// multiplicative. The units `1 ± √2` generate the Pell pairs:
/// `(1+√2)^n = H_n + P_n·√2`.
#[derive(Clone, PartialEq, Eq)]
pub struct ZRoot2<T> {
    a: T,
    b: T,
}

impl<T: Count> ZRoot2<T> {
    pub fn new(a: T, b: T) -> Self {
        ZRoot2 { a, b }
    }

    pub fn from_int(a: T) -> Self {
        ZRoot2 { a, b: T::zero() }
    }

    pub fn sqrt2() -> Self {
        ZRoot2 {
            a: T::zero(),
            b: T::one(),
        }
    }

    pub fn one_plus_sqrt2() -> Self {
        ZRoot2 {
            a: T::one(),
            b: T::one(),
        }
    }

    pub fn one_minus_sqrt2() -> Self {
        ZRoot2 {
            a: T::one(),
            b: -T::one(),
        }
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn conjugate(&self) -> Self {
        ZRoot2 {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - T::from_int(2) * self.b.clone() * self.b.clone()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The integer value, asserting the √2 part is zero.
    pub fn expect_rational(&self, what: &str) -> T {
        assert!(self.is_rational(), "{what}: nonzero √2 part {}", self.b);
        self.a.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let a =
            self.a.clone() * other.a.clone() + T::from_int(2) * self.b.clone() * other.b.clone();
        let b = self.a.clone() * other.b.clone() + self.b.clone() * other.a.clone();
        ZRoot2 { a, b }
    }

    /// Exact power by binary squaring, n ≥ 0.
    pub fn pow(&self, n: u64) -> Self {
        let mut result = ZRoot2::from_int(T::one());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }
}

/// `((1+√2)^n + (1−√2)^n, (1+√2)^n − (1−√2)^n scaled by 1/√2)`, i.e. the
/// pair `(2·H_n, 2·P_n)` halved — the radical route to the Pell pairs,
/// with both exactness assertions applied.
pub fn pell_pair_by_radicals<T: Count>(n: u64) -> (T, T) {
    let plus = ZRoot2::<T>::one_plus_sqrt2().pow(n);
    let minus = ZRoot2::<T>::one_minus_sqrt2().pow(n);
    let sum = plus.clone() + minus.clone();
    let diff = plus - minus;
    let twice_h = sum.expect_rational("(1+√2)^n + (1−√2)^n");
    assert!(
        diff.a().is_zero(),
        "(1+√2)^n − (1−√2)^n must be a pure √2 multiple"
    );
    let twice_p = diff.b().clone();
    (
        exact_div(twice_h, 2, "half-companion Pell"),
        exact_div(twice_p, 2, "Pell"),
    )
}

impl<T: Count> Add for ZRoot2<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        ZRoot2 {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<T: Count> Sub for ZRoot2<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        ZRoot2 {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<T: Count> Mul for ZRoot2<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<T: Count> Neg for ZRoot2<T> {
    type Output = Self;

    fn neg(self) -> Self {
        ZRoot2 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<T: fmt::Display> fmt::Display for ZRoot2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}√2", self.a, self.b)
    }
}

impl<T: fmt::Debug> fmt::Debug for ZRoot2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZRoot2({:?}, {:?})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn z(a: i64, b: i64) -> ZRoot2<i64> {
        ZRoot2::new(a, b)
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(z(1, 1).pow(0), z(1, 0));
    }

    #[test]
    fn squaring_the_unit() {
        assert_eq!(z(1, 1).pow(2), z(3, 2));
    }

    #[test]
    fn conjugate_sum_of_fifth_powers() {
        // (1+√2)^5 + (1−√2)^5 = 82 = 2·H_5.
        let s = z(1, 1).pow(5) + z(1, -1).pow(5);
        assert_eq!(s, z(82, 0));
    }

    #[test]
    fn norm_is_multiplicative() {
        let u = z(3, 2);
        let v = z(5, -7);
        assert_eq!((u.clone() * v.clone()).norm(), u.norm() * v.norm());
    }

    #[test]
    fn conjugation_commutes_with_powering() {
        let u = z(2, 3);
        for n in 0..8 {
            assert_eq!(u.conjugate().pow(n), u.pow(n).conjugate());
        }
    }

    #[test]
    fn radical_pell_pairs_match_the_recurrence() {
        let (mut h, mut p) = (Int::from(1), Int::from(0));
        for n in 0..=500u64 {
            let (rh, rp) = pell_pair_by_radicals::<Int>(n);
            assert_eq!((&rh, &rp), (&h, &p), "n = {n}");
            let next_p = &h + &p;
            h = &next_p + &p;
            p = next_p;
        }
    }

    mod ring_laws {
        use super::*;
        use proptest::prelude::*;

        fn arb() -> impl Strategy<Value = ZRoot2<i64>> {
            (-100i64..=100, -100i64..=100).prop_map(|(a, b)| ZRoot2::new(a, b))
        }

        proptest! {
            #[test]
            fn commutative_associative_distributive(x in arb(), y in arb(), z in arb()) {
                prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
                prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
                prop_assert_eq!(
                    (x.clone() * y.clone()) * z.clone(),
                    x.clone() * (y.clone() * z.clone())
                );
                prop_assert_eq!(
                    x.clone() * (y.clone() + z.clone()),
                    x.clone() * y.clone() + x.clone() * z.clone()
                );
                prop_assert_eq!(
                    (x.clone() * y.clone()).conjugate(),
                    x.conjugate() * y.conjugate()
                );
            }
        }
    }
}
