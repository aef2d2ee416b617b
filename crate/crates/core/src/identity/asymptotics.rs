use num_traits::One;

use crate::error::Result;
use crate::sequences::{seq_range, SeqId};
use crate::{Int, Rat};

use super::IdentityReport;

/// Exact tile-share ratios of `H_n` and `P_n` at one index, with the
/// gaps to the limiting shares 4/5 (small) and 1/5 (large).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticsRow {
    pub n: i64,
    /// small/total for `H_n`(= phi_n/h_n)
    pub phi_over_h: Rat,
    /// large/total for `H_n` (= q_n/h_n)
    pub q_over_h: Rat,
    /// small/total for `P_n` (= theta_n/p_n)
    pub theta_over_p: Rat,
    /// large/total for `P_n` (= r_n/p_n)
    pub r_over_p: Rat,
    /// phi_n/h_n - 4/5, exactly 2·H_{n-1}/(5·h_n)
    pub gap_h: Rat,
    /// theta_n/p_n - 4/5, exactly 2/(5(5n-3))
    pub gap_p: Rat,
}

fn ratio(num: &Int, den: &Int) -> Rat {
    Rat::new(num.clone(), den.clone())
}

/// Exact ratio rows for the requested indices (all must be >= 2).
pub fn asymptotics_rows(ns: &[i64]) -> Result<Vec<AsymptoticsRow>> {
    let four_fifths = Rat::new(Int::from(4), Int::from(5));
    ns.iter()
        .map(|&n| {
            if n < 2 {
                return Err(crate::error::Error::domain(format!(
                    "asymptotics rows need n >= 2, got {n}"
                )));
            }
            let h: Int = crate::sequences::seq_value(SeqId::TotalH, n)?;
            let phi: Int = crate::sequences::seq_value(SeqId::SmallH, n)?;
            let q: Int = crate::sequences::seq_value(SeqId::LargeH, n)?;
            let p: Int = crate::sequences::seq_value(SeqId::TotalP, n)?;
            let theta: Int = crate::sequences::seq_value(SeqId::SmallP, n)?;
            let r: Int = crate::sequences::seq_value(SeqId::LargeP, n)?;
            let phi_over_h = ratio(&phi, &h);
            let theta_over_p = ratio(&theta, &p);
            Ok(AsymptoticsRow {
                n,
                gap_h: phi_over_h.clone() - four_fifths.clone(),
                gap_p: theta_over_p.clone() - four_fifths.clone(),
                phi_over_h,
                q_over_h: ratio(&q, &h),
                theta_over_p,
                r_over_p: ratio(&r, &p),
            })
        })
        .collect()
}

/// The limit statements as exact finite-n identities, for 2 <= n <= n_max:
///
/// * `phi_n/h_n - 4/5 = 2·H_{n-1}/(5·h_n)` and the q complement;
/// * `theta_n/p_n - 4/5 = 2/(5(5n-3))` and the r complement;
/// * gap bound `|phi_n/h_n - 4/5| <= 1/(5n)`.
pub(super) fn asymptotics_suite(n_max: i64) -> IdentityReport {
    let mut report = IdentityReport::new("asymptotics", 2, n_max);
    let hn: Vec<Int> = seq_range(SeqId::H, 0, n_max).expect("range");
    let h: Vec<Int> = seq_range(SeqId::TotalH, 1, n_max).expect("range");
    let phi: Vec<Int> = seq_range(SeqId::SmallH, 1, n_max).expect("range");
    let q: Vec<Int> = seq_range(SeqId::LargeH, 1, n_max).expect("range");
    let p: Vec<Int> = seq_range(SeqId::TotalP, 1, n_max).expect("range");
    let theta: Vec<Int> = seq_range(SeqId::SmallP, 1, n_max).expect("range");
    let r: Vec<Int> = seq_range(SeqId::LargeP, 1, n_max).expect("range");
    let fifth = |num: Int, den: Int| Rat::new(num, Int::from(5) * den);
    let four_fifths = Rat::new(Int::from(4), Int::from(5));
    let one_fifth = Rat::new(Int::from(1), Int::from(5));
    for n in 2..=n_max {
        let k = (n - 1) as usize;
        let lhs = ratio(&phi[k], &h[k]) - four_fifths.clone();
        let rhs = fifth(Int::from(2) * &hn[k], h[k].clone());
        report.push("asym.phi_over_h", n, lhs == rhs, &lhs, &rhs);

        let lhs_q = ratio(&q[k], &h[k]) - one_fifth.clone();
        let rhs_q = -rhs.clone();
        report.push("asym.q_over_h", n, lhs_q == rhs_q, &lhs_q, &rhs_q);

        let lhs_t = ratio(&theta[k], &p[k]) - four_fifths.clone();
        let rhs_t = fifth(Int::from(2), Int::from(5 * n - 3));
        report.push("asym.theta_over_p", n, lhs_t == rhs_t, &lhs_t, &rhs_t);

        let lhs_r = ratio(&r[k], &p[k]) - one_fifth.clone();
        let rhs_r = -rhs_t.clone();
        report.push("asym.r_over_p", n, lhs_r == rhs_r, &lhs_r, &rhs_r);

        let bound = Rat::new(Int::one(), Int::from(5 * n));
        let gap_abs = if lhs < Rat::new(Int::from(0), Int::one()) {
            -lhs.clone()
        } else {
            lhs.clone()
        };
        report.push(
            "asym.gap_bound",
            n,
            gap_abs <= bound,
            &gap_abs,
            format!("<= {bound}"),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> Rat {
        Rat::new(Int::from(a), Int::from(b))
    }

    #[test]
    fn row_n2_matches_hand_values() {
        let rows = asymptotics_rows(&[2]).unwrap();
        let row = &rows[0];
        assert_eq!(row.phi_over_h, rat(5, 6));
        assert_eq!(row.q_over_h, rat(1, 6));
        assert_eq!(row.theta_over_p, rat(6, 7));
        assert_eq!(row.r_over_p, rat(1, 7));
        assert_eq!(row.gap_h, rat(1, 30));
        assert_eq!(row.gap_p, rat(2, 35));
    }

    #[test]
    fn rows_reject_small_n() {
        assert!(asymptotics_rows(&[1]).is_err());
    }

    #[test]
    fn gaps_shrink_below_a_thousandth() {
        let rows = asymptotics_rows(&[1000]).unwrap();
        let tiny = rat(1, 1000);
        assert!(rows[0].gap_h < tiny);
        assert!(rows[0].gap_p < tiny);
    }

    #[test]
    fn suite_is_exact_up_to_200() {
        let report = asymptotics_suite(200);
        assert!(report.all_passed);
    }
}
