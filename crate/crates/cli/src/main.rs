//! Command-line front end: counting, statistics, sequence queries,
//! identity verification, SVG rendering, generating functions, exact
//! asymptotics and timing checks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 complex-file parse error.

mod bench;
mod output;

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use tristrip::{
    asymptotics_rows, build_family, count_tilings_dfs, count_tilings_dfs_parallel,
    count_tilings_dp, cross_validate, enumerate_tilings, format_report, gf_expand, parse_complex,
    render_svg, run_suite, seq_range, seq_value_route, tile_stats, Error, FamilyId, Int, Method,
    RationalGf, RenderSpec, SeqId, SeqRoute, StripComplex, SuiteId, TileStats,
};

pub(crate) struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub(crate) fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn file(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Parse { .. } => Failure::file(err.to_string()),
            _ => Failure::usage(err.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "tristrip",
    version,
    about = "Exact tilings of two-row triangular strip lattices",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count tilings of a family member or a custom complex
    Count(CountArgs),
    /// Exact tile statistics: tilings, total, small, large
    Stats(StatsArgs),
    /// Print sequence values over an index range
    Seq(SeqArgs),
    /// Run identity suites, fixture checks and engine cross-validation
    Verify(VerifyArgs),
    /// Render one tiling as SVG
    Render(RenderArgs),
    /// Expand a rational generating function
    Gf(GfArgs),
    /// Exact tile-share ratios and their gaps to 4/5 and 1/5
    Limits(LimitsArgs),
    /// Timing checks for the DP counter and the sequence engine
    Bench(bench::BenchArgs),
}

/// A built-in family member (`--family H --n 4`) or a complex file.
#[derive(Args)]
struct Source {
    /// Built-in family: H, P, X, Y, Z, A or B
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    family: Option<String>,
    /// Family size, n >= 1
    #[arg(long, requires = "family")]
    n: Option<u32>,
    /// Complex file (line format: name/row0/row1/add/del)
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<StripComplex, Failure> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::file(format!("{}: {e}", path.display())))?;
            return parse_complex(&text).map_err(Failure::from);
        }
        let family = self
            .family
            .as_deref()
            .expect("clap enforces family or file");
        let family = FamilyId::from_str(family).map_err(|e| Failure::usage(e.to_string()))?;
        let n = self.n.ok_or_else(|| Failure::usage("--family needs --n"))?;
        build_family(family, n).map_err(|e| Failure::usage(e.to_string()))
    }
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    source: Source,
    /// dfs or dp
    #[arg(long, default_value = "dp")]
    method: String,
    /// Cross-check the result with the canonical DFS
    #[arg(long)]
    check: bool,
    /// Worker threads for the branch-parallel DFS
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    source: Source,
    /// dfs or dp
    #[arg(long, default_value = "dp")]
    method: String,
    /// plain, csv or json
    #[arg(long, default_value = "plain")]
    format: String,
}

#[derive(Args)]
struct SeqArgs {
    /// Sequence id: P H X Y Z A B C D h p q r phi theta (case-sensitive)
    #[arg(long)]
    id: String,
    #[arg(long)]
    from: i64,
    #[arg(long)]
    to: i64,
    /// Alternative route: recurrence, closed-form, gf or bisection
    #[arg(long)]
    route: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, thm4, thm5, consequence, problem1, problem2, thm6rec,
    /// closed-vs-rec, fixtures, asymptotics, cross, thm4-as-printed
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest sequence index the suites reference
    #[arg(long, default_value_t = 200)]
    max_n: i64,
    /// Largest n cross-validated with the DFS engine
    #[arg(long, default_value_t = 12)]
    oracle_max_n: u32,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    source: Source,
    /// Which tiling to draw, in canonical enumeration order
    #[arg(long, default_value_t = 0)]
    tiling_index: usize,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 40.0)]
    side_px: f64,
    #[arg(long, default_value_t = 10.0)]
    margin_px: f64,
    #[arg(long, default_value = "#f4f1e8")]
    small_fill: String,
    #[arg(long, default_value = "#7fb3d5")]
    large_up_fill: String,
    #[arg(long, default_value = "#f0b27a")]
    large_down_fill: String,
    #[arg(long, default_value = "#34495e")]
    stroke: String,
}

#[derive(Args)]
struct GfArgs {
    /// Numerator coefficients, ascending powers, comma-separated
    #[arg(long)]
    num: String,
    /// Denominator coefficients, ascending powers, comma-separated
    #[arg(long)]
    den: String,
    #[arg(long)]
    terms: usize,
}

#[derive(Args)]
struct LimitsArgs {
    /// Indices to tabulate, comma-separated (all >= 2)
    #[arg(long, default_value = "2,3,4,5,6,7,8,16,64,256,1000")]
    n: String,
    /// plain or json
    #[arg(long, default_value = "plain")]
    format: String,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count(args) => count(args),
        Command::Stats(args) => stats(args),
        Command::Seq(args) => seq(args),
        Command::Verify(args) => verify(args),
        Command::Render(args) => render(args),
        Command::Gf(args) => gf(args),
        Command::Limits(args) => limits(args),
        Command::Bench(args) => bench::run(args),
    }
}

/// Complexes this size or smaller may be cross-checked by DFS.
const CHECK_CELL_BUDGET: usize = 60;

fn count(args: CountArgs) -> Result<(), Failure> {
    let complex = args.source.load()?;
    let method = Method::from_str(&args.method)?;
    let count: Int = match method {
        Method::Dp => count_tilings_dp(&complex),
        Method::Dfs if args.threads > 1 => count_tilings_dfs_parallel(&complex, args.threads),
        Method::Dfs => count_tilings_dfs(&complex),
    };
    if args.check {
        // Cross-check with the other counter. The DP is linear and can
        // check DFS results at any size; checking a DP result needs the
        // DFS, which only scales to small complexes.
        let other = match method {
            Method::Dfs => Method::Dp,
            Method::Dp => Method::Dfs,
        };
        if other == Method::Dfs && complex.cell_count() > CHECK_CELL_BUDGET {
            return Err(Failure::usage(format!(
                "--check runs the DFS oracle and is limited to {CHECK_CELL_BUDGET} cells, got {}",
                complex.cell_count()
            )));
        }
        let reference: Int = match other {
            Method::Dfs => count_tilings_dfs(&complex),
            Method::Dp => count_tilings_dp(&complex),
        };
        if reference != count {
            return Err(Failure::verification(format!(
                "method disagreement: {method} says {count}, {other} says {reference}"
            )));
        }
        eprintln!("check: {other} agrees");
    }
    println!("{count}");
    Ok(())
}

fn stats(args: StatsArgs) -> Result<(), Failure> {
    let complex = args.source.load()?;
    let method = Method::from_str(&args.method)?;
    let stats: TileStats<Int> = tile_stats(&complex, method);
    match args.format.as_str() {
        "plain" => {
            println!("tilings {}", stats.tilings);
            println!("total {}", stats.total_tiles);
            println!("small {}", stats.small_tiles);
            println!("large {}", stats.large_tiles);
        }
        "csv" => println!(
            "{},{},{},{}",
            stats.tilings, stats.total_tiles, stats.small_tiles, stats.large_tiles
        ),
        "json" => println!("{}", output::stats_json(&complex, method, &stats)),
        other => return Err(Failure::usage(format!("unknown format '{other}'"))),
    }
    Ok(())
}

fn seq(args: SeqArgs) -> Result<(), Failure> {
    let id = SeqId::from_str(&args.id)?;
    if args.from > args.to {
        return Err(Failure::usage(format!(
            "--from {} exceeds --to {}",
            args.from, args.to
        )));
    }
    let values: Vec<Int> = match &args.route {
        None => seq_range(id, args.from, args.to)?,
        Some(route) => {
            let route = SeqRoute::from_str(route)?;
            (args.from..=args.to)
                .map(|n| seq_value_route(id, n, route))
                .collect::<Result<_, _>>()?
        }
    };
    let rendered: Vec<String> = values.iter().map(Int::to_string).collect();
    println!("{}", rendered.join(" "));
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let mut all_passed = true;
    let mut report_suite = |suite: SuiteId| -> Result<(), Failure> {
        let report = run_suite(suite, args.max_n)?;
        print!("{}", format_report(&report));
        all_passed &= report.all_passed;
        Ok(())
    };
    match args.suite.as_str() {
        "all" => {
            for suite in SuiteId::PASSING {
                report_suite(suite)?;
            }
            let cross_max = args.max_n.clamp(1, 400) as u32;
            for family in FamilyId::ALL {
                let report = cross_validate(family, cross_max, args.oracle_max_n)?;
                print!("{}", format_report(&report));
                all_passed &= report.all_passed;
            }
        }
        "cross" => {
            let cross_max = args.max_n.clamp(1, 400) as u32;
            for family in FamilyId::ALL {
                let report = cross_validate(family, cross_max, args.oracle_max_n)?;
                print!("{}", format_report(&report));
                all_passed &= report.all_passed;
            }
        }
        token => report_suite(SuiteId::from_str(token)?)?,
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::verification("some checks failed"))
    }
}

fn render(args: RenderArgs) -> Result<(), Failure> {
    let complex = args.source.load()?;
    let tilings = enumerate_tilings(&complex, args.tiling_index + 1);
    if tilings.len() <= args.tiling_index {
        let total: Int = count_tilings_dp(&complex);
        return Err(Failure::usage(format!(
            "tiling index {} out of range: {} has {total} tilings",
            args.tiling_index,
            if complex.name().is_empty() {
                "the complex".to_string()
            } else {
                complex.name().to_string()
            }
        )));
    }
    let spec = RenderSpec {
        side_px: args.side_px,
        margin_px: args.margin_px,
        small_fill: args.small_fill,
        large_up_fill: args.large_up_fill,
        large_down_fill: args.large_down_fill,
        stroke: args.stroke,
    };
    if spec.side_px <= 0.0 {
        return Err(Failure::usage("--side-px must be positive"));
    }
    let svg = render_svg(&complex, &tilings[args.tiling_index], &spec);
    match &args.out {
        Some(path) => std::fs::write(path, svg)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => print!("{svg}"),
    }
    Ok(())
}

fn parse_coeffs(list: &str, what: &str) -> Result<Vec<Int>, Failure> {
    list.split(',')
        .map(str::trim)
        .map(|tok| {
            Int::from_str(tok)
                .map_err(|_| Failure::usage(format!("bad {what} coefficient '{tok}'")))
        })
        .collect()
}

fn gf(args: GfArgs) -> Result<(), Failure> {
    let num = parse_coeffs(&args.num, "numerator")?;
    let den = parse_coeffs(&args.den, "denominator")?;
    let gf = RationalGf::new(num, den)?;
    let coeffs = gf_expand(&gf, args.terms);
    let rendered: Vec<String> = coeffs.iter().map(Int::to_string).collect();
    println!("{}", rendered.join(" "));
    Ok(())
}

fn limits(args: LimitsArgs) -> Result<(), Failure> {
    let ns: Vec<i64> = args
        .n
        .split(',')
        .map(str::trim)
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Failure::usage(format!("bad index '{tok}'")))
        })
        .collect::<Result<_, _>>()?;
    let rows = asymptotics_rows(&ns)?;
    match args.format.as_str() {
        "plain" => {
            println!(
                "n\tsmall/total(H)\tlarge/total(H)\tsmall/total(P)\tlarge/total(P)\tgap(H)\tgap(P)"
            );
            for row in &rows {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    row.n,
                    row.phi_over_h,
                    row.q_over_h,
                    row.theta_over_p,
                    row.r_over_p,
                    row.gap_h,
                    row.gap_p
                );
            }
        }
        "json" => println!("{}", output::limits_json(&rows)),
        other => return Err(Failure::usage(format!("unknown format '{other}'"))),
    }
    Ok(())
}
