//! Timing checks.
//!
//! `dp-count` times the profile DP across sizes and fails if time more
//! than quadruples across a size doubling (the DP is linear in cells;
//! big-integer growth adds at most another factor). `seq` times the
//! recurrence evaluation of H and P and checks the digit counts against
//! n·log10(1+√2). `dfs-vs-dp` runs both counters and insists they agree.

use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::Args;

use tristrip::{
    build_family, count_tilings_dfs, count_tilings_dfs_parallel, count_tilings_dp, seq_value,
    FamilyId, Int, SeqId,
};

use crate::Failure;

#[derive(Args)]
pub(crate) struct BenchArgs {
    /// dp-count, seq or dfs-vs-dp
    #[arg(long)]
    task: String,
    /// Comma-separated sizes
    #[arg(long)]
    sizes: String,
    /// Family for the counting tasks
    #[arg(long, default_value = "H")]
    family: String,
    /// Worker threads for the DFS side of dfs-vs-dp
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

fn parse_sizes(list: &str) -> Result<Vec<u32>, Failure> {
    list.split(',')
        .map(str::trim)
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| Failure::usage(format!("bad size '{tok}'")))
        })
        .collect()
}

/// Best of three averaged passes; short workloads are repeated until a
/// pass takes at least ~20ms so ratios are meaningful.
fn time_stable<R>(mut work: impl FnMut() -> R) -> Duration {
    let start = Instant::now();
    let _keep = work();
    let first = start.elapsed();
    let reps =
        (Duration::from_millis(20).as_nanos() / first.as_nanos().max(1)).clamp(0, 200) as u32;
    let mut best = first;
    for _ in 0..3 {
        let start = Instant::now();
        for _ in 0..reps.max(1) {
            let _keep = work();
        }
        let per_run = start.elapsed() / reps.max(1);
        best = best.min(per_run);
    }
    best
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub(crate) fn run(args: BenchArgs) -> Result<(), Failure> {
    let sizes = parse_sizes(&args.sizes)?;
    if sizes.is_empty() {
        return Err(Failure::usage("need at least one size"));
    }
    let family = FamilyId::from_str(&args.family)?;
    match args.task.as_str() {
        "dp-count" => dp_count(family, &sizes),
        "seq" => seq_digits(&sizes),
        "dfs-vs-dp" => dfs_vs_dp(family, &sizes, args.threads),
        other => Err(Failure::usage(format!("unknown task '{other}'"))),
    }
}

fn dp_count(family: FamilyId, sizes: &[u32]) -> Result<(), Failure> {
    let mut timings: Vec<(u32, Duration)> = Vec::new();
    for &n in sizes {
        let complex = build_family(family, n)?;
        let elapsed = time_stable(|| count_tilings_dp::<Int>(&complex));
        let digits = count_tilings_dp::<Int>(&complex).to_string().len();
        println!(
            "task=dp-count family={family} n={n} time_ms={:.3} count_digits={digits}",
            millis(elapsed)
        );
        timings.push((n, elapsed));
    }
    for pair in timings.windows(2) {
        let [(n1, t1), (n2, t2)] = pair else { continue };
        if *n2 == 2 * n1 {
            let ratio = t2.as_secs_f64() / t1.as_secs_f64().max(1e-12);
            println!("ratio n={n2}/n={n1} = {ratio:.2}");
            if ratio >= 4.0 {
                return Err(Failure::verification(format!(
                    "dp time grew {ratio:.2}x from n={n1} to n={n2}, expected < 4x"
                )));
            }
        }
    }
    Ok(())
}

fn seq_digits(sizes: &[u32]) -> Result<(), Failure> {
    let log10_silver = (1.0 + 2.0_f64.sqrt()).log10();
    for &n in sizes {
        let start = Instant::now();
        let h: Int = seq_value(SeqId::H, i64::from(n))?;
        let p: Int = seq_value(SeqId::P, i64::from(n))?;
        let elapsed = start.elapsed();
        let expected = f64::from(n) * log10_silver;
        for (name, value) in [("H", &h), ("P", &p)] {
            let digits = value.to_string().len();
            println!(
                "task=seq id={name} n={n} time_ms={:.3} digits={digits} expected={expected:.2}",
                millis(elapsed)
            );
            if (digits as f64 - expected).abs() > 1.0 {
                return Err(Failure::verification(format!(
                    "{name}_{n} has {digits} digits, expected {expected:.2} +/- 1"
                )));
            }
        }
    }
    Ok(())
}

fn dfs_vs_dp(family: FamilyId, sizes: &[u32], threads: usize) -> Result<(), Failure> {
    for &n in sizes {
        let complex = build_family(family, n)?;
        let start = Instant::now();
        let dfs: Int = if threads > 1 {
            count_tilings_dfs_parallel(&complex, threads)
        } else {
            count_tilings_dfs(&complex)
        };
        let dfs_time = start.elapsed();
        let start = Instant::now();
        let dp: Int = count_tilings_dp(&complex);
        let dp_time = start.elapsed();
        if dfs != dp {
            return Err(Failure::verification(format!(
                "count mismatch on {family}_{n}: dfs {dfs}, dp {dp}"
            )));
        }
        println!(
            "task=dfs-vs-dp family={family} n={n} count={dfs} dfs_ms={:.3} dp_ms={:.3} dfs_slower={}",
            millis(dfs_time),
            millis(dp_time),
            dfs_time > dp_time
        );
    }
    Ok(())
}
