//! Command-line surface: compute profiles, expand series, run the
//! verification suites, and print count tables.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 when a verification suite
//! reports a failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use dgprof::board::Board;
use dgprof::enumerate::{brute_force_profile, DEFAULT_VERTEX_LIMIT};
use dgprof::formulas;
use dgprof::poly::Profile;
use dgprof::rules::{GameId, GameRules};
use dgprof::series::{builtin_gf, regex_to_series, RationalSeries, Regex, SeriesFamily};
use dgprof::verify;

#[derive(Parser)]
#[command(
    name = "dgprof",
    about = "Polynomial profiles of distance games on graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the polynomial profile of a game on a board.
    Profile(ProfileArgs),
    /// Expand a builtin generating function and print one profile per order.
    Series(SeriesArgs),
    /// Run a cross-check suite; exits with status 2 on any failure.
    Verify(VerifyArgs),
    /// Print count tables for complete bipartite boards.
    Table(TableArgs),
}

#[derive(Args)]
struct ProfileArgs {
    /// Game id: col, snort, cis, cis2, encol:k, ensnort:k, encis:k.
    game: String,
    /// Board spec: path:N, cycle:N, star:N, kbip:M,N, or file:PATH.
    board: String,
    /// Print the univariate collapse (coefficients by piece count).
    #[arg(long)]
    univariate: bool,
    /// Restrict to positions reachable in alternating play first.
    #[arg(long)]
    alternating: bool,
    /// Emit JSON instead of the canonical text form.
    #[arg(long)]
    json: bool,
    /// Ignore the enumeration size limit.
    #[arg(long)]
    force: bool,
    /// Computation route; defaults to a formula when one exists, else brute
    /// force.
    #[arg(long, value_enum)]
    route: Option<Route>,
}

#[derive(Args)]
struct SeriesArgs {
    /// Family: col_path, snort_path, cis_path, cis2_path, cis_cycle,
    /// encis:k, ensnort:k, or regex:EXPR for a custom expression.
    family: String,
    /// Highest order to expand to.
    order: usize,
    /// Print position counts (x = y = 1) instead of profiles.
    #[arg(long)]
    count_only: bool,
    /// Also print the rational series as "numerator / denominator".
    #[arg(long)]
    gf: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: examples, recursions, series, doppelganger, oeis, or all.
    suite: String,
    /// Board-size bound for the exhaustive comparisons.
    size: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    /// Table kind: kmn (position counts) or conjecture (recursion report).
    kind: String,
    m_max: usize,
    n_max: usize,
    /// Emit CSV.
    #[arg(long)]
    csv: bool,
    /// Extra conjecture constants as m=value, e.g. --cm 7=4908.
    #[arg(long = "cm", value_name = "M=VALUE")]
    cm: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Brute,
    Formula,
    Series,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Route::Brute => write!(f, "brute"),
            Route::Formula => write!(f, "formula"),
            Route::Series => write!(f, "series"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, everything else is a
            // usage error.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Profile(args) => cmd_profile(args),
        Command::Series(args) => cmd_series(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// The series route, when a builtin family covers this game and board.
fn series_profile(game: GameId, board: &Board) -> Option<Result<Profile, String>> {
    let family = dgprof::series::board_series_family(game, board)?;
    Some(
        builtin_gf(family)
            .expand(board.vertex_count())
            .map(|mut profiles| profiles.pop().expect("order n expansion has n+1 entries"))
            .map_err(|e| e.to_string()),
    )
}

#[derive(Serialize, Deserialize)]
struct ProfileJson {
    game: String,
    board: String,
    total: String,
    /// Serializes as the canonical term list
    /// `[{"blue": j, "red": r, "count": "..."}, ...]`.
    terms: Profile,
}

fn univariate_string(counts: &[BigUint]) -> String {
    let zero = BigUint::from(0u32);
    let one = BigUint::from(1u32);
    let mut out = String::new();
    for (i, c) in counts.iter().enumerate() {
        if *c == zero {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if *c != one || i == 0 {
            let _ = write!(out, "{c}");
        }
        match i {
            0 => {}
            1 => out.push('x'),
            p => {
                let _ = write!(out, "x^{p}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn cmd_profile(args: ProfileArgs) -> Result<ExitCode, String> {
    if args.univariate && args.json {
        return Err("--univariate and --json cannot be combined".to_string());
    }
    let game: GameId = args.game.parse().map_err(|e| format!("{e}"))?;
    let board = Board::from_spec(&args.board).map_err(|e| e.to_string())?;
    let limit = if args.force {
        usize::MAX
    } else {
        DEFAULT_VERTEX_LIMIT
    };

    let rules = GameRules::named(game);
    let brute = || brute_force_profile(&board, &rules, limit).map_err(|e| e.to_string());
    let (profile, route) = match args.route {
        Some(Route::Brute) => (brute()?, Route::Brute),
        Some(Route::Formula) => {
            let p = formulas::formula_profile(game, &board)
                .ok_or_else(|| format!("no formula route for {game} on {}", args.board))?;
            (p, Route::Formula)
        }
        Some(Route::Series) => {
            let p = series_profile(game, &board)
                .ok_or_else(|| format!("no series route for {game} on {}", args.board))??;
            (p, Route::Series)
        }
        None => match formulas::formula_profile(game, &board) {
            Some(p) => (p, Route::Formula),
            None => (brute()?, Route::Brute),
        },
    };
    eprintln!("route: {route}");

    let profile = if args.alternating {
        profile.alternating_part()
    } else {
        profile
    };

    if args.json {
        let json = ProfileJson {
            game: game.to_string(),
            board: args.board.clone(),
            total: profile.total().to_string(),
            terms: profile,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&json).expect("profile serializes")
        );
    } else if args.univariate {
        println!("{}", univariate_string(&profile.univariate_collapse()));
    } else {
        println!("{profile}");
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_series_spec(spec: &str) -> Result<RationalSeries, String> {
    if let Some(expr) = spec.strip_prefix("regex:") {
        let regex = Regex::parse(expr).map_err(|e| e.to_string())?;
        return regex_to_series(&regex).map_err(|e| e.to_string());
    }
    let family = SeriesFamily::from_str(spec).map_err(|e| e.to_string())?;
    Ok(builtin_gf(family))
}

fn cmd_series(args: SeriesArgs) -> Result<ExitCode, String> {
    let series = parse_series_spec(&args.family)?;
    if args.gf {
        println!("{series}");
    }
    if args.count_only {
        let counts = series
            .expand_counts(args.order)
            .map_err(|e| e.to_string())?;
        for (n, c) in counts.iter().enumerate() {
            println!("{n}: {c}");
        }
    } else {
        let profiles = series.expand(args.order).map_err(|e| e.to_string())?;
        for (n, p) in profiles.iter().enumerate() {
            println!("{n}: {p}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let checks = verify::run_suite(&args.suite, args.size)?;
    let mut failures = 0usize;
    for check in &checks {
        if check.passed {
            println!("PASS {}", check.name);
        } else {
            failures += 1;
            println!("FAIL {}: {}", check.name, check.detail);
        }
    }
    println!("{} checks, {} failed", checks.len(), failures);
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn parse_extra_constants(specs: &[String]) -> Result<BTreeMap<usize, BigUint>, String> {
    let mut out = BTreeMap::new();
    for spec in specs {
        let (m, value) = spec
            .split_once('=')
            .ok_or_else(|| format!("bad --cm `{spec}` (expected m=value)"))?;
        let m: usize = m.parse().map_err(|_| format!("bad --cm index `{m}`"))?;
        let value = BigUint::from_str(value).map_err(|_| format!("bad --cm value `{value}`"))?;
        out.insert(m, value);
    }
    Ok(out)
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, String> {
    match args.kind.as_str() {
        "kmn" => {
            let cell = |m: usize, n: usize| formulas::colsnort_kmn_count(m, n).to_string();
            let mut rows = vec![std::iter::once("m/n".to_string())
                .chain((0..=args.n_max).map(|n| n.to_string()))
                .collect::<Vec<_>>()];
            for m in 0..=args.m_max {
                rows.push(
                    std::iter::once(m.to_string())
                        .chain((0..=args.n_max).map(|n| cell(m, n)))
                        .collect(),
                );
            }
            if args.csv {
                for row in rows {
                    println!("{}", row.join(","));
                }
            } else {
                print_aligned(&rows);
            }
            Ok(ExitCode::SUCCESS)
        }
        "conjecture" => {
            let extra = parse_extra_constants(&args.cm)?;
            let report = formulas::conjecture_check(args.m_max, args.n_max, &extra)
                .map_err(|e| e.to_string())?;
            let header = ["m", "n", "oracle_count", "conjectured_count", "match"];
            let mut rows = vec![header.map(String::from).to_vec()];
            for cell in &report {
                rows.push(vec![
                    cell.m.to_string(),
                    cell.n.to_string(),
                    cell.oracle.to_string(),
                    cell.conjectured.to_string(),
                    cell.matches.to_string(),
                ]);
            }
            if args.csv {
                for row in rows {
                    println!("{}", row.join(","));
                }
            } else {
                print_aligned(&rows);
                let mismatches = report.iter().filter(|c| !c.matches).count();
                println!(
                    "{} cells, {} mismatch{}",
                    report.len(),
                    mismatches,
                    if mismatches == 1 { "" } else { "es" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!(
            "unknown table kind `{other}` (expected kmn or conjecture)"
        )),
    }
}

fn print_aligned(rows: &[Vec<String>]) {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:>width$}", width = widths[c]))
            .collect();
        println!("{}", line.join("  "));
    }
}
