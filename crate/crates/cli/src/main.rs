use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use permstat::bijections::Bijection;
use permstat::claims::{self, DEFAULT_N_MAX};
use permstat::distributions::{
    equidistributed, scan_quadruples, AvoidanceClass, DistributionTable, SetStat, Statistic, MAX_N,
};
use permstat::patterns::registry;
use permstat::{Error, Perm};

const DEFAULT_SCAN_N_MAX: usize = 8;
const ALL_PATTERNS: [&str; 6] = ["123", "132", "213", "231", "312", "321"];

#[derive(Parser)]
#[command(
    name = "permstat",
    version,
    about = "Vincular-pattern statistics on pattern-avoiding permutations"
)]
struct Cli {
    /// Output format for tables and reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    /// Worker threads used to tally distributions.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one or more statistics (comma separated) on a permutation.
    Stat { perm: String, stats: String },
    /// Apply a bijection: phi, phi-inv, psi, psi-inv, theta, theta-inv, cr-conjugate.
    Map { perm: String, bijection: String },
    /// Distribution table of statistics over Av_n(pattern); `all` for S_n, a
    /// trailing `'` restricts to permutations beginning with n.
    Dist {
        class: String,
        n: usize,
        /// Comma-separated statistics. With --compare, two groups separated by `/`
        /// (a bare pair `a,b` compares `a` with `b`).
        stats: String,
        /// Report whether the two statistic groups are equidistributed.
        #[arg(long)]
        compare: bool,
        /// Class of the second group under --compare (defaults to CLASS).
        #[arg(long, requires = "compare")]
        against: Option<String>,
    },
    /// Run a verification suite (or `all`) for lengths 1..=N.
    Verify {
        suite: String,
        n: Option<usize>,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
    },
    /// Search for equidistributed quadruples among statistics (`all` for the registry).
    Scan {
        stats: String,
        n: Option<usize>,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        /// Comma-separated classical patterns (default: all six of length 3).
        #[arg(long)]
        patterns: Option<String>,
    },
    /// List the statistic registry and the set-valued statistics.
    List,
    /// Print the claims manifest as a markdown table.
    Claims,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ParsePermutation { .. }
        | Error::NotAPermutation { .. }
        | Error::ParsePattern { .. }
        | Error::Incomparable(_) => 2,
        Error::UnknownStatistic(_) | Error::UnknownBijection(_) | Error::UnknownSuite(_) => 3,
        Error::ContainsPattern { .. }
        | Error::Empty(_)
        | Error::NotLeadingMax(_)
        | Error::TooShort(_)
        | Error::InconsistentPair { .. } => 4,
        Error::BoundExceeded { .. } => 5,
    }
}

/// The length bound: `PERMSTAT_MAX_N` if set, never above the compiled ceiling.
fn length_bound() -> Result<usize, Failure> {
    match std::env::var("PERMSTAT_MAX_N") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|b| b.min(MAX_N))
            .map_err(|_| Failure::Usage(format!("PERMSTAT_MAX_N must be an integer, got {v:?}"))),
        Err(_) => Ok(MAX_N),
    }
}

fn check_bound(n: usize) -> Result<(), Failure> {
    let bound = length_bound()?;
    if n > bound {
        return Err(Error::BoundExceeded { n, bound }.into());
    }
    Ok(())
}

fn parse_class(text: &str, n: usize) -> Result<AvoidanceClass, Failure> {
    let text = text.trim();
    if text == "all" {
        return Ok(AvoidanceClass::all(n)?);
    }
    let (pat, leading) = match text.strip_suffix('\'') {
        Some(p) => (p, true),
        None => (text, false),
    };
    let pattern: Perm = pat.parse()?;
    Ok(if leading {
        AvoidanceClass::avoiding_leading_max(pattern, n)?
    } else {
        AvoidanceClass::avoiding(pattern, n)?
    })
}

fn render_table(t: &DistributionTable, format: Format) -> String {
    match format {
        Format::Plain => t.to_plain(),
        Format::Csv => t.to_csv(),
        Format::Json => t.to_json(),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let workers = cli.workers as usize;
    match cli.command {
        Command::Stat { perm, stats } => {
            let p: Perm = perm.parse()?;
            let stats = Statistic::resolve_list(&stats)?;
            if stats.is_empty() {
                return Err(Failure::Usage("no statistic given".into()));
            }
            if stats.len() == 1 {
                writeln!(out, "{}", stats[0].evaluate(&p)).ok();
            } else {
                for s in stats {
                    writeln!(out, "{}\t{}", s.name(), s.evaluate(&p)).ok();
                }
            }
        }
        Command::Map { perm, bijection } => {
            let p: Perm = perm.parse()?;
            let b: Bijection = bijection.parse()?;
            writeln!(out, "{}", b.apply(&p)?).ok();
        }
        Command::Dist {
            class,
            n,
            stats,
            compare,
            against,
        } => {
            check_bound(n)?;
            let left_class = parse_class(&class, n)?;
            if !compare {
                let stats = Statistic::resolve_list(&stats)?;
                let members = left_class.members();
                let t = DistributionTable::tally(left_class.label(), n, &stats, &members, workers);
                write!(out, "{}", render_table(&t, cli.format)).ok();
                return Ok(());
            }
            let (a, b) = match stats.split_once('/') {
                Some((a, b)) => (Statistic::resolve_list(a)?, Statistic::resolve_list(b)?),
                None => {
                    let all = Statistic::resolve_list(&stats)?;
                    if all.len() != 2 {
                        return Err(Failure::Usage(
                            "--compare needs two statistics, or two groups separated by '/'".into(),
                        ));
                    }
                    (vec![all[0]], vec![all[1]])
                }
            };
            let right_class = match &against {
                Some(c) => parse_class(c, n)?,
                None => left_class.clone(),
            };
            let ta =
                DistributionTable::tally(left_class.label(), n, &a, &left_class.members(), workers);
            let tb = DistributionTable::tally(
                right_class.label(),
                n,
                &b,
                &right_class.members(),
                workers,
            );
            if equidistributed(&ta, &tb)? {
                writeln!(out, "EQUIDISTRIBUTED").ok();
            } else {
                let (key, x, y) = ta.first_difference(&tb).expect("tables differ");
                let key: Vec<String> = key.iter().map(|v| v.to_string()).collect();
                writeln!(
                    out,
                    "NOT EQUIDISTRIBUTED: value ({}) occurs {x} times in {} and {y} times in {}",
                    key.join(","),
                    left_class,
                    right_class
                )
                .ok();
                return Err(Failure::Verification);
            }
        }
        Command::Verify { suite, n, n_max } => {
            let n = n_max.or(n).unwrap_or(DEFAULT_N_MAX);
            check_bound(n)?;
            let outcomes = claims::run_suite(&suite, n)?;
            let mut failed = 0;
            for o in &outcomes {
                writeln!(out, "{o}").ok();
                if !o.passed() {
                    failed += 1;
                }
            }
            let verdict = if failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{verdict}: {}/{} claims hold for n <= {n}",
                outcomes.len() - failed,
                outcomes.len()
            )
            .ok();
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Scan {
            stats,
            n,
            n_max,
            patterns,
        } => {
            let n = n_max.or(n).unwrap_or(DEFAULT_SCAN_N_MAX);
            check_bound(n)?;
            let stats = if stats.trim() == "all" {
                registry()
                    .iter()
                    .map(|d| Statistic::resolve(d.alias()))
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                Statistic::resolve_list(&stats)?
            };
            let patterns: Vec<Perm> = match &patterns {
                Some(list) => list
                    .split(',')
                    .map(|s| s.trim().parse())
                    .collect::<Result<_, _>>()?,
                None => ALL_PATTERNS
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<_, _>>()?,
            };
            let report = scan_quadruples(&stats, &patterns, n)?;
            let text = match cli.format {
                Format::Plain => report.to_plain(),
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json(),
            };
            write!(out, "{text}").ok();
        }
        Command::List => {
            for def in registry().iter() {
                writeln!(
                    out,
                    "{:<6} {:<6} {}",
                    def.name(),
                    def.alias(),
                    def.formula()
                )
                .ok();
            }
            let names: Vec<&str> = SetStat::ALL.iter().map(|s| s.name()).collect();
            writeln!(out, "set-valued: {}", names.join(" ")).ok();
        }
        Command::Claims => {
            write!(out, "{}", claims::markdown_table()).ok();
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out);
    out.flush().ok();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("permstat: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("permstat: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
