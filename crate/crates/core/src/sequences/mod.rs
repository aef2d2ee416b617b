//! Exact evaluation of the lattice sequences.
//!
//! The primary path ([`seq_value`] / [`seq_range`]) maintains the
//! integer pair `(H_n, P_n)` by the coupled step `P' = H + P`,
//! `H' = P' + P` and derives everything else from it:
//!
//! * counts: `X_n = H_{n-1}`, `Y_n = P_n`, `Z_n = H_n`,
//!   `A_n = (H_{n+1} + (-1)^n)/2`, `B_n = (H_{n+1} - (-1)^n)/2`,
//!   `C_n = H_{n-1}² + P_{2n-2}`, `D_n = P_n² + P_{2n-2}`;
//! * tile statistics of `H_n`: total `h = ((5n-4)H + 3P)/2`,
//!   small `phi = 2(n-1)H + 2P`, large `q = (nH - P)/2`;
//! * tile statistics of `P_n`: total `p = (5n-3)P/2`,
//!   small `theta = (2n-1)P`, large `r = (n-1)P/2`.
//!
//! All divisions assert exactness. [`seq_value_route`] re-derives values
//! along independent routes (plain recurrences, `√2` radicals,
//! generating functions, bisections) for cross-checking.

mod gf;
mod linrec;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{exact_div, Count};
use crate::zroot2::pell_pair_by_radicals;

pub use gf::{gf_expand, RationalGf};
pub use linrec::{lin_rec, Inhom};

/// Sequence identifiers. The lower-case ids name tile statistics:
/// `h`/`phi`/`q` are the total/small/large tile counts over all tilings
/// of `H_n`, and `p`/`theta`/`r` the same for `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqId {
    P,
    H,
    X,
    Y,
    Z,
    A,
    B,
    C,
    D,
    /// `h`: total tiles over all tilings of `H_n`.
    TotalH,
    /// `p`: total tiles over all tilings of `P_n`.
    TotalP,
    /// `q`: large tiles over all tilings of `H_n`.
    LargeH,
    /// `r`: large tiles over all tilings of `P_n`.
    LargeP,
    /// `phi`: small tiles over all tilings of `H_n`.
    SmallH,
    /// `theta`: small tiles over all tilings of `P_n`.
    SmallP,
}

impl SeqId {
    pub const ALL: [SeqId; 15] = [
        SeqId::P,
        SeqId::H,
        SeqId::X,
        SeqId::Y,
        SeqId::Z,
        SeqId::A,
        SeqId::B,
        SeqId::C,
        SeqId::D,
        SeqId::TotalH,
        SeqId::TotalP,
        SeqId::LargeH,
        SeqId::LargeP,
        SeqId::SmallH,
        SeqId::SmallP,
    ];

    /// Smallest defined index. `Y_0 = 0` and `Z_0 = 1` are accepted;
    /// negative indices are rejected everywhere.
    pub fn domain_start(&self) -> i64 {
        match self {
            SeqId::P | SeqId::H | SeqId::Y | SeqId::Z | SeqId::A | SeqId::B => 0,
            _ => 1,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            SeqId::P => "P",
            SeqId::H => "H",
            SeqId::X => "X",
            SeqId::Y => "Y",
            SeqId::Z => "Z",
            SeqId::A => "A",
            SeqId::B => "B",
            SeqId::C => "C",
            SeqId::D => "D",
            SeqId::TotalH => "h",
            SeqId::TotalP => "p",
            SeqId::LargeH => "q",
            SeqId::LargeP => "r",
            SeqId::SmallH => "phi",
            SeqId::SmallP => "theta",
        }
    }
}

impl fmt::Display for SeqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SeqId {
    type Err = Error;

    // Tokens are case-sensitive: `H` is a tiling count, `h` a tile total.
    fn from_str(s: &str) -> Result<Self> {
        SeqId::ALL
            .into_iter()
            .find(|id| id.token() == s)
            .ok_or_else(|| Error::domain(format!("unknown sequence id '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqRoute {
    Recurrence,
    ClosedForm,
    Gf,
    Bisection,
}

impl SeqRoute {
    pub const ALL: [SeqRoute; 4] = [
        SeqRoute::Recurrence,
        SeqRoute::ClosedForm,
        SeqRoute::Gf,
        SeqRoute::Bisection,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            SeqRoute::Recurrence => "recurrence",
            SeqRoute::ClosedForm => "closed-form",
            SeqRoute::Gf => "gf",
            SeqRoute::Bisection => "bisection",
        }
    }

    /// Which ids the route can evaluate.
    pub fn supports(&self, id: SeqId) -> bool {
        match self {
            SeqRoute::Recurrence => true,
            SeqRoute::ClosedForm => matches!(
                id,
                SeqId::P | SeqId::H | SeqId::A | SeqId::B | SeqId::C | SeqId::D
            ),
            SeqRoute::Gf => matches!(id, SeqId::P | SeqId::H | SeqId::A | SeqId::B),
            SeqRoute::Bisection => matches!(id, SeqId::A | SeqId::B | SeqId::C | SeqId::D),
        }
    }
}

impl fmt::Display for SeqRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SeqRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "closedForm" {
            return Ok(SeqRoute::ClosedForm);
        }
        SeqRoute::ALL
            .into_iter()
            .find(|r| r.token() == s)
            .ok_or_else(|| Error::domain(format!("unknown route '{s}'")))
    }
}

/// Rolling `(H_k, P_k)` pair.
pub(crate) struct PellPair<T> {
    pub h: T,
    pub p: T,
}

impl<T: Count> PellPair<T> {
    pub fn at(n: i64) -> Self {
        debug_assert!(n >= 0);
        let mut pair = PellPair {
            h: T::one(),
            p: T::zero(),
        };
        for _ in 0..n {
            pair.step();
        }
        pair
    }

    pub fn step(&mut self) {
        let next_p = self.h.clone() + self.p.clone();
        self.h = next_p.clone() + self.p.clone();
        self.p = next_p;
    }
}

fn check_domain(id: SeqId, n: i64) -> Result<()> {
    let start = id.domain_start();
    if n < start {
        return Err(Error::domain(format!(
            "{id}_n is defined for n >= {start}, got {n}"
        )));
    }
    Ok(())
}

pub fn seq_value<T: Count>(id: SeqId, n: i64) -> Result<T> {
    Ok(seq_range(id, n, n)?.pop().expect("single value"))
}

/// Values for `from ..= to` in one linear pass.
pub fn seq_range<T: Count>(id: SeqId, from: i64, to: i64) -> Result<Vec<T>> {
    check_domain(id, from)?;
    if from > to {
        return Err(Error::domain(format!("empty range {from}..{to}")));
    }
    let len = (to - from + 1) as usize;
    let mut out = Vec::with_capacity(len);
    match id {
        SeqId::P | SeqId::Y => {
            let mut pair = PellPair::<T>::at(from);
            for _ in 0..len {
                out.push(pair.p.clone());
                pair.step();
            }
        }
        SeqId::H | SeqId::Z => {
            let mut pair = PellPair::<T>::at(from);
            for _ in 0..len {
                out.push(pair.h.clone());
                pair.step();
            }
        }
        SeqId::X => {
            let mut pair = PellPair::<T>::at(from - 1);
            for _ in 0..len {
                out.push(pair.h.clone());
                pair.step();
            }
        }
        SeqId::A | SeqId::B => {
            let mut pair = PellPair::<T>::at(from + 1);
            for k in 0..len {
                let n = from + k as i64;
                let sign = if id == SeqId::A {
                    T::alt_sign(n)
                } else {
                    -T::alt_sign(n)
                };
                out.push(exact_div(pair.h.clone() + sign, 2, "A/B closed form"));
                pair.step();
            }
        }
        SeqId::C => {
            let mut main = PellPair::<T>::at(from - 1);
            let mut doubled = PellPair::<T>::at(2 * from - 2);
            for _ in 0..len {
                out.push(main.h.clone() * main.h.clone() + doubled.p.clone());
                main.step();
                doubled.step();
                doubled.step();
            }
        }
        SeqId::D => {
            let mut main = PellPair::<T>::at(from);
            let mut doubled = PellPair::<T>::at(2 * from - 2);
            for _ in 0..len {
                out.push(main.p.clone() * main.p.clone() + doubled.p.clone());
                main.step();
                doubled.step();
                doubled.step();
            }
        }
        _ => {
            let mut pair = PellPair::<T>::at(from);
            for k in 0..len {
                let n = from + k as i64;
                out.push(stat_value(id, n, &pair));
                pair.step();
            }
        }
    }
    Ok(out)
}

fn stat_value<T: Count>(id: SeqId, n: i64, pair: &PellPair<T>) -> T {
    let h = || pair.h.clone();
    let p = || pair.p.clone();
    let scale = |k: i64, v: T| T::from_int(k) * v;
    match id {
        SeqId::TotalH => exact_div(scale(5 * n - 4, h()) + scale(3, p()), 2, "h_n"),
        SeqId::TotalP => exact_div(scale(5 * n - 3, p()), 2, "p_n"),
        SeqId::LargeH => exact_div(scale(n, h()) - p(), 2, "q_n"),
        SeqId::LargeP => exact_div(scale(n - 1, p()), 2, "r_n"),
        SeqId::SmallH => scale(2 * (n - 1), h()) + scale(2, p()),
        SeqId::SmallP => scale(2 * n - 1, p()),
        _ => unreachable!("stat_value only serves tile statistics"),
    }
}

/// Re-derives a value along an alternative route. Agrees exactly with
/// [`seq_value`] on every supported (id, route) pair.
pub fn seq_value_route<T: Count>(id: SeqId, n: i64, route: SeqRoute) -> Result<T> {
    check_domain(id, n)?;
    if !route.supports(id) {
        return Err(Error::Capability {
            id: id.token().into(),
            route: route.token().into(),
        });
    }
    match route {
        SeqRoute::Recurrence => recurrence_route(id, n),
        SeqRoute::ClosedForm => Ok(closed_form_route(id, n)),
        SeqRoute::Gf => gf_route(id, n),
        SeqRoute::Bisection => bisection_route(id, n),
    }
}

fn recurrence_route<T: Count>(id: SeqId, n: i64) -> Result<T> {
    let i = T::from_int;
    let second = |a: i64, b: i64| vec![i(2), i(1), i(a), i(b)];
    // (coeffs+initials, start, inhomogeneous term)
    let (table, start, inhom): (Vec<T>, i64, Inhom<T>) = match id {
        SeqId::P | SeqId::Y => (second(0, 1), 0, Inhom::Zero),
        SeqId::H | SeqId::Z => (second(1, 1), 0, Inhom::Zero),
        SeqId::X => (second(1, 1), 1, Inhom::Zero),
        SeqId::A => (second(1, 1), 0, Inhom::AltSign(i(1))),
        // Sign corrected: the +(-1)^n variant contradicts B_3 = 9.
        SeqId::B => (second(0, 2), 0, Inhom::AltSign(i(-1))),
        SeqId::C => (vec![i(6), i(-1), i(1), i(3)], 1, Inhom::AltSign(i(-4))),
        SeqId::D => (vec![i(6), i(-1), i(1), i(6)], 1, Inhom::AltSign(i(-2))),
        SeqId::TotalH => (second(2, 12), 1, Inhom::PellP(i(10))),
        SeqId::TotalP => (second(1, 7), 1, Inhom::PellH(i(5))),
        SeqId::LargeH => (second(0, 2), 1, Inhom::PellP(i(2))),
        SeqId::LargeP => (second(0, 1), 1, Inhom::PellH(i(1))),
        SeqId::SmallH => (second(2, 10), 1, Inhom::PellP(i(8))),
        SeqId::SmallP => (second(1, 6), 1, Inhom::PellH(i(4))),
    };
    let (coeffs, initials) = table.split_at(2);
    lin_rec(coeffs, initials, start, inhom, n)
}

fn closed_form_route<T: Count>(id: SeqId, n: i64) -> T {
    match id {
        SeqId::P => pell_pair_by_radicals::<T>(n as u64).1,
        SeqId::H => pell_pair_by_radicals::<T>(n as u64).0,
        SeqId::A => {
            let (h, _) = pell_pair_by_radicals::<T>((n + 1) as u64);
            exact_div(h + T::alt_sign(n), 2, "A_n closed form")
        }
        SeqId::B => {
            let (h, _) = pell_pair_by_radicals::<T>((n + 1) as u64);
            exact_div(h - T::alt_sign(n), 2, "B_n closed form")
        }
        SeqId::C => {
            let (h, _) = pell_pair_by_radicals::<T>((2 * n - 1) as u64);
            exact_div(h - T::alt_sign(n), 2, "C_n closed form")
        }
        SeqId::D => {
            let (h, p) = pell_pair_by_radicals::<T>((2 * n - 2) as u64);
            let head = exact_div(T::from_int(3) * h - T::alt_sign(n), 4, "D_n closed form");
            head + T::from_int(2) * p
        }
        _ => unreachable!("route support already checked"),
    }
}

fn gf_route<T: Count>(id: SeqId, n: i64) -> Result<T> {
    let gf = match id {
        SeqId::P => RationalGf::<T>::pell_p(),
        SeqId::H => RationalGf::<T>::pell_h(),
        SeqId::A => RationalGf::<T>::family_a(),
        SeqId::B => RationalGf::<T>::family_b(),
        _ => unreachable!("route support already checked"),
    };
    Ok(gf.expand(n as usize + 1).pop().expect("nonempty expansion"))
}

fn bisection_route<T: Count>(id: SeqId, n: i64) -> Result<T> {
    let i = T::from_int;
    let even = n % 2 == 0;
    // Same-parity second-order chains; A/B step by 6, C/D by 34.
    let (table, start, constant): (Vec<T>, i64, T) = match (id, even) {
        (SeqId::A, true) => (vec![i(6), i(-1), i(1), i(4)], 0, i(-2)),
        (SeqId::A, false) => (vec![i(6), i(-1), i(1), i(8)], 0, i(2)),
        (SeqId::B, true) => (vec![i(6), i(-1), i(0), i(3)], 0, i(2)),
        (SeqId::B, false) => (vec![i(6), i(-1), i(2), i(9)], 0, i(-2)),
        (SeqId::C, true) => (vec![i(34), i(-1), i(3), i(119)], 1, i(16)),
        (SeqId::C, false) => (vec![i(34), i(-1), i(1), i(21)], 0, i(-16)),
        (SeqId::D, true) => (vec![i(34), i(-1), i(6), i(214)], 1, i(8)),
        (SeqId::D, false) => (vec![i(34), i(-1), i(1), i(37)], 0, i(-8)),
        _ => unreachable!("route support already checked"),
    };
    let k = if even { n / 2 } else { (n - 1) / 2 };
    let (coeffs, initials) = table.split_at(2);
    lin_rec(coeffs, initials, start, Inhom::Const(constant), k)
}
