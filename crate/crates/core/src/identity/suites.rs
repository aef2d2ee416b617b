use num_traits::Zero;

use crate::sequences::{seq_range, seq_value_route, SeqId, SeqRoute};
use crate::Int;

use super::IdentityReport;

/// Sequence values indexed by absolute n.
struct Table {
    start: i64,
    values: Vec<Int>,
}

impl Table {
    fn new(id: SeqId, n_max: i64) -> Table {
        let start = id.domain_start();
        Table {
            start,
            values: seq_range(id, start, n_max).expect("valid range"),
        }
    }

    fn at(&self, n: i64) -> &Int {
        &self.values[(n - self.start) as usize]
    }
}

fn alt(n: i64) -> Int {
    if n % 2 == 0 {
        Int::from(1)
    } else {
        Int::from(-1)
    }
}

pub(super) fn thm4(n_max: i64) -> IdentityReport {
    let a = Table::new(SeqId::A, n_max);
    let b = Table::new(SeqId::B, n_max);
    let p = Table::new(SeqId::P, n_max);
    let h = Table::new(SeqId::H, n_max);
    let mut r = IdentityReport::new("thm4", 0, n_max);
    for n in 0..=n_max {
        r.push_eq("thm4.1", n, a.at(n), &(b.at(n) + alt(n)));
    }
    for n in 1..=n_max {
        r.push_eq("thm4.2a", n, a.at(n), &(b.at(n - 1) + p.at(n)));
        r.push_eq("thm4.2b", n, b.at(n), &(a.at(n - 1) + p.at(n)));
    }
    for n in 2..=n_max {
        r.push_eq("thm4.3a", n, &(a.at(n - 1) + a.at(n - 2)), p.at(n));
        r.push_eq("thm4.3b", n, &(b.at(n - 1) + b.at(n - 2)), p.at(n));
        r.push_eq(
            "thm4.4a",
            n,
            a.at(n),
            &(Int::from(2) * b.at(n - 1) + b.at(n - 2)),
        );
        r.push_eq(
            "thm4.4b",
            n,
            b.at(n),
            &(Int::from(2) * a.at(n - 1) + a.at(n - 2)),
        );
        r.push_eq("thm4.5a", n, &(a.at(n) - a.at(n - 2)), h.at(n));
        r.push_eq("thm4.5b", n, &(b.at(n) - b.at(n - 2)), h.at(n));
        // (8) with corrected indices; the printed n-1 variant is the
        // deliberate failure in the thm4-as-printed suite.
        r.push_eq(
            "thm4.8",
            n,
            p.at(n),
            &(p.at(n - 1) + a.at(n - 2) + b.at(n - 2)),
        );
    }
    // (6)/(7): telescoped sums of every second half-companion number.
    let mut even_sum = Int::zero();
    let mut i = 1;
    while 2 * i <= n_max {
        even_sum += h.at(2 * i);
        r.push_eq("thm4.6a", 2 * i, a.at(2 * i), &(a.at(0) + &even_sum));
        r.push_eq("thm4.7a", 2 * i, b.at(2 * i), &(b.at(0) + &even_sum));
        i += 1;
    }
    let mut odd_sum = Int::zero();
    let mut i = 1;
    while 2 * i < n_max {
        odd_sum += h.at(2 * i + 1);
        r.push_eq("thm4.6b", 2 * i + 1, a.at(2 * i + 1), &(a.at(1) + &odd_sum));
        r.push_eq("thm4.7b", 2 * i + 1, b.at(2 * i + 1), &(b.at(1) + &odd_sum));
        i += 1;
    }
    r
}

pub(super) fn thm4_as_printed(n_max: i64) -> IdentityReport {
    let a = Table::new(SeqId::A, n_max);
    let b = Table::new(SeqId::B, n_max);
    let p = Table::new(SeqId::P, n_max);
    let mut r = IdentityReport::new("thm4-as-printed", 3, n_max);
    for n in 3..=n_max {
        r.push_eq(
            "thm4.8-as-printed",
            n,
            p.at(n),
            &(p.at(n - 1) + a.at(n - 1) + b.at(n - 1)),
        );
    }
    r
}

pub(super) fn thm5(n_max: i64) -> IdentityReport {
    let a = Table::new(SeqId::A, n_max);
    let b = Table::new(SeqId::B, n_max);
    let p = Table::new(SeqId::P, n_max);
    let h = Table::new(SeqId::H, n_max);
    let one = Int::from(1);
    let two = Int::from(2);
    let mut r = IdentityReport::new("thm5", 0, n_max);
    // Each identity runs over every n whose referenced indices fit.
    let mut n = 1i64;
    while 4 * n - 1 <= n_max {
        let sq = &two * p.at(2 * n) * p.at(2 * n);
        r.push_eq("thm5.1a", n, &sq, a.at(4 * n - 1));
        r.push_eq("thm5.1b", n, a.at(4 * n - 1), &(b.at(4 * n - 1) - &one));
        let sq = h.at(2 * n) * h.at(2 * n);
        r.push_eq("thm5.3a", n, &sq, b.at(4 * n - 1));
        r.push_eq("thm5.3b", n, b.at(4 * n - 1), &(a.at(4 * n - 1) + &one));
        n += 1;
    }
    let mut n = 0i64;
    while 4 * n < n_max {
        let sq = &two * p.at(2 * n + 1) * p.at(2 * n + 1);
        r.push_eq("thm5.2a", n, &sq, b.at(4 * n + 1));
        r.push_eq("thm5.2b", n, b.at(4 * n + 1), &(a.at(4 * n + 1) + &one));
        let sq = h.at(2 * n + 1) * h.at(2 * n + 1);
        r.push_eq("thm5.4a", n, &sq, a.at(4 * n + 1));
        r.push_eq("thm5.4b", n, a.at(4 * n + 1), &(b.at(4 * n + 1) - &one));
        let prod = &two * p.at(2 * n) * p.at(2 * n + 1);
        r.push_eq("thm5.5a", n, &prod, b.at(4 * n));
        r.push_eq("thm5.5b", n, b.at(4 * n), &(a.at(4 * n) - &one));
        let prod = h.at(2 * n) * h.at(2 * n + 1);
        r.push_eq("thm5.7a", n, &prod, a.at(4 * n));
        r.push_eq("thm5.7b", n, a.at(4 * n), &(b.at(4 * n) + &one));
        n += 1;
    }
    let mut n = 0i64;
    while 4 * n + 2 <= n_max {
        let prod = &two * p.at(2 * n + 1) * p.at(2 * n + 2);
        r.push_eq("thm5.6a", n, &prod, a.at(4 * n + 2));
        r.push_eq("thm5.6b", n, a.at(4 * n + 2), &(b.at(4 * n + 2) + &one));
        let prod = h.at(2 * n + 1) * h.at(2 * n + 2);
        r.push_eq("thm5.8a", n, &prod, b.at(4 * n + 2));
        r.push_eq("thm5.8b", n, b.at(4 * n + 2), &(a.at(4 * n + 2) - &one));
        n += 1;
    }
    r
}

pub(super) fn consequence(n_max: i64) -> IdentityReport {
    let a = Table::new(SeqId::A, n_max);
    let b = Table::new(SeqId::B, n_max);
    let two = Int::from(2);
    let six = Int::from(6);
    let mut r = IdentityReport::new("consequence", 2, n_max);
    let mut n = 2i64;
    while 2 * n <= n_max {
        r.push_eq(
            "consequence.1",
            n,
            a.at(2 * n),
            &(&six * a.at(2 * n - 2) - a.at(2 * n - 4) - &two),
        );
        r.push_eq(
            "consequence.3",
            n,
            b.at(2 * n),
            &(&six * b.at(2 * n - 2) - b.at(2 * n - 4) + &two),
        );
        if 2 * n < n_max {
            // Left sides read as the (2n+1)-st terms; the printed 2n-1
            // subscripts contradict the listed values.
            r.push_eq(
                "consequence.2",
                n,
                a.at(2 * n + 1),
                &(&six * a.at(2 * n - 1) - a.at(2 * n - 3) + &two),
            );
            r.push_eq(
                "consequence.4",
                n,
                b.at(2 * n + 1),
                &(&six * b.at(2 * n - 1) - b.at(2 * n - 3) - &two),
            );
        }
        n += 1;
    }
    r
}

pub(super) fn problem1(n_max: i64) -> IdentityReport {
    let a = Table::new(SeqId::A, n_max);
    let b = Table::new(SeqId::B, n_max);
    let p = Table::new(SeqId::P, n_max);
    let h = Table::new(SeqId::H, n_max);
    let c = Table::new(SeqId::C, n_max);
    let two = Int::from(2);
    let four = Int::from(4);
    let six = Int::from(6);
    let mut r = IdentityReport::new("problem1", 0, n_max);
    let mut n = 1i64;
    while 2 * n <= n_max && 4 * n - 2 <= n_max {
        r.push_eq("problem1.even_is_B", n, c.at(2 * n), b.at(4 * n - 2));
        n += 1;
    }
    let mut n = 0i64;
    while 2 * n < n_max && 4 * n <= n_max {
        r.push_eq("problem1.odd_is_A", n, c.at(2 * n + 1), a.at(4 * n));
        n += 1;
    }
    let mut n = 0i64;
    while 2 * n <= n_max {
        r.push_eq(
            "problem1.pell_doubling",
            n,
            &(&two * p.at(n) * h.at(n)),
            p.at(2 * n),
        );
        n += 1;
    }
    let mut n = 1i64;
    while 2 * n < n_max {
        r.push_eq(
            "problem1.rec_odd",
            n,
            c.at(2 * n + 1),
            &(&six * c.at(2 * n) - c.at(2 * n - 1) + &four),
        );
        n += 1;
    }
    let mut n = 2i64;
    while 2 * n <= n_max {
        r.push_eq(
            "problem1.rec_even",
            n,
            c.at(2 * n),
            &(&six * c.at(2 * n - 1) - c.at(2 * n - 2) - &four),
        );
        n += 1;
    }
    r
}

pub(super) fn problem2(n_max: i64) -> IdentityReport {
    let d = Table::new(SeqId::D, n_max);
    let two = Int::from(2);
    let five = Int::from(5);
    let six = Int::from(6);
    let mut r = IdentityReport::new("problem2", 1, n_max);
    let mut n = 2i64;
    while 2 * n <= n_max {
        r.push_eq(
            "problem2.rec_even",
            n,
            d.at(2 * n),
            &(&six * d.at(2 * n - 1) - d.at(2 * n - 2) - &two),
        );
        n += 1;
    }
    let mut n = 1i64;
    while 2 * n < n_max {
        r.push_eq(
            "problem2.rec_odd",
            n,
            d.at(2 * n + 1),
            &(&six * d.at(2 * n) - d.at(2 * n - 1) + &two),
        );
        n += 1;
    }
    // (x² - 6x + 1)(x + 1) annihilates D: the alternating ±2 constants
    // cancel into a homogeneous third-order recurrence.
    for m in 1..=(n_max - 3) {
        r.push_eq(
            "problem2.charpoly",
            m,
            d.at(m + 3),
            &(&five * d.at(m + 2) + &five * d.at(m + 1) - d.at(m)),
        );
    }
    r
}

pub(super) fn thm6rec(n_max: i64) -> IdentityReport {
    let hn = Table::new(SeqId::H, n_max);
    let pn = Table::new(SeqId::P, n_max);
    let h = Table::new(SeqId::TotalH, n_max);
    let p = Table::new(SeqId::TotalP, n_max);
    let q = Table::new(SeqId::LargeH, n_max);
    let rr = Table::new(SeqId::LargeP, n_max);
    let phi = Table::new(SeqId::SmallH, n_max);
    let theta = Table::new(SeqId::SmallP, n_max);
    let i = Int::from;
    let mut r = IdentityReport::new("thm6rec", 1, n_max);
    for n in 2..=n_max {
        r.push_eq(
            "thm6.step_h",
            n,
            h.at(n),
            &(h.at(n - 1) + i(4) * hn.at(n - 1) + i(2) * p.at(n - 1) + i(4) * pn.at(n - 1)),
        );
        r.push_eq(
            "thm6.step_q",
            n,
            q.at(n),
            &(q.at(n - 1) + i(2) * rr.at(n - 1) + i(2) * pn.at(n - 1)),
        );
        r.push_eq(
            "thm6.step_phi",
            n,
            phi.at(n),
            &(phi.at(n - 1) + i(4) * hn.at(n - 1) + i(2) * theta.at(n - 1) + i(2) * pn.at(n - 1)),
        );
        r.push_eq(
            "thm6.step_p",
            n,
            p.at(n),
            &(h.at(n - 1) + i(3) * hn.at(n - 1) + p.at(n - 1) + pn.at(n - 1)),
        );
        r.push_eq(
            "thm6.step_r",
            n,
            rr.at(n),
            &(q.at(n - 1) + rr.at(n - 1) + pn.at(n - 1)),
        );
        r.push_eq(
            "thm6.step_theta",
            n,
            theta.at(n),
            &(phi.at(n - 1) + i(3) * hn.at(n - 1) + theta.at(n - 1)),
        );
    }
    for n in 3..=n_max {
        let second = |t: &Table, forcing: Int| i(2) * t.at(n - 1) + t.at(n - 2) + forcing;
        r.push_eq(
            "thm6.second_h",
            n,
            h.at(n),
            &second(&h, i(10) * pn.at(n - 1)),
        );
        r.push_eq(
            "thm6.second_p",
            n,
            p.at(n),
            &second(&p, i(5) * hn.at(n - 1)),
        );
        // The forcing here is 2·P_{n-1}; a 2·P_n variant also circulates
        // and is off by 2·H_{n-1}.
        r.push_eq(
            "thm6.second_q",
            n,
            q.at(n),
            &second(&q, i(2) * pn.at(n - 1)),
        );
        r.push_eq(
            "thm6.second_r",
            n,
            rr.at(n),
            &second(&rr, hn.at(n - 1).clone()),
        );
        r.push_eq(
            "thm6.second_phi",
            n,
            phi.at(n),
            &second(&phi, i(8) * pn.at(n - 1)),
        );
        r.push_eq(
            "thm6.second_theta",
            n,
            theta.at(n),
            &second(&theta, i(4) * hn.at(n - 1)),
        );
    }
    r
}

pub(super) fn closed_vs_rec(n_max: i64) -> IdentityReport {
    let mut r = IdentityReport::new("closed-vs-rec", 0, n_max);
    for id in SeqId::ALL {
        let direct: Vec<Int> = seq_range(id, id.domain_start(), n_max).expect("valid range");
        for route in SeqRoute::ALL {
            if !route.supports(id) {
                continue;
            }
            for n in id.domain_start()..=n_max {
                let via: Int = seq_value_route(id, n, route).expect("supported route");
                let name = format!("route.{id}.{route}");
                r.push_eq(&name, n, &direct[(n - id.domain_start()) as usize], &via);
            }
        }
    }
    r
}
