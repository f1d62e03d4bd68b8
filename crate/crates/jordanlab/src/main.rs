//! Command-line front end: exact dimension tables, character tables,
//! closed counting formulas, tensor-algebra span ranks, and the
//! verification suites.
//!
//! Every subcommand prints exact integers; the process exits nonzero on
//! usage errors, computation errors, and hard verification failures, and
//! only then.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use jordan_core::char_ring::CharError;
use jordan_core::conjecture::solve_characters;
use jordan_core::dims::{solve_cached, SolveCache, SolveForm};
use jordan_core::oracle::{span_cj, span_inner_cj, span_inner_sj, span_sj, OracleConfig};
use jordanlab::report::ReportSummary;
use jordanlab::suites::{run_suites, SuiteArg, SuiteOptions};
use jordanlab::tables::{
    render_char_tables, render_closed_table, render_dim_table, render_oracle_table, render_report,
    CharBasisArg, OracleRow, OutputFormat,
};

#[derive(Parser)]
#[command(
    name = "jordanlab",
    version,
    about = "Exact tables and verification suites for free Jordan algebra dimension conjectures"
)]
struct Cli {
    /// Output format for tables and reports
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Md)]
    format: OutputFormat,

    /// Cache directory for solved dimension tables; when absent, the
    /// JORDANLAB_CACHE_DIR environment variable is consulted
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,

    /// Worker threads for parallel suites and span computations
    #[arg(long, global = true, value_name = "INT")]
    threads: Option<usize>,

    /// Allow generator counts past the tested envelope
    #[arg(long, global = true)]
    force_envelope: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve and print the conjectured dimension table
    Dims(DimsArgs),
    /// Solve and print the conjectured character tables
    Chars(CharsArgs),
    /// Print the closed counting formulas
    Closed(ClosedArgs),
    /// Compute span ranks inside the tensor algebra
    Oracle(OracleArgs),
    /// Run a verification suite and report pass/fail per case
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Weak,
    Weakest,
}

#[derive(Args)]
struct DimsArgs {
    /// Number of generators
    #[arg(long = "D", value_parser = clap::value_parser!(u32).range(1..))]
    d: u32,
    /// Maximum degree
    #[arg(long = "N", default_value_t = 10)]
    n: usize,
    /// Which equation system to solve
    #[arg(long, value_enum, default_value_t = FormArg::Weak)]
    form: FormArg,
}

#[derive(Args)]
struct CharsArgs {
    /// Number of generators
    #[arg(long = "D", value_parser = clap::value_parser!(u32).range(1..))]
    d: u32,
    /// Maximum degree
    #[arg(long = "N", default_value_t = 7)]
    n: usize,
    /// Basis for printed coefficient maps
    #[arg(long, value_enum, default_value_t = CharBasisArg::Schur)]
    basis: CharBasisArg,
}

#[derive(Args)]
struct ClosedArgs {
    /// Number of generators
    #[arg(long = "D", value_parser = clap::value_parser!(u32).range(1..))]
    d: u32,
    /// Maximum degree
    #[arg(long = "N", default_value_t = 15)]
    n: usize,
}

#[derive(Args)]
struct OracleArgs {
    /// Number of generators
    #[arg(long = "D", value_parser = clap::value_parser!(u32).range(1..))]
    d: u32,
    /// Maximum degree
    #[arg(long = "N", default_value_t = 5)]
    n: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Largest generator count the suites may touch
    #[arg(long = "D-max", default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    d_max: u32,
    /// Largest degree the suites may touch
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("setting up the thread pool")?;
    }
    let cache = resolve_cache(cli.cache_dir.clone())?;
    match cli.command {
        Command::Dims(args) => {
            let form = match args.form {
                FormArg::Weak => SolveForm::Weak,
                FormArg::Weakest => SolveForm::Weakest,
            };
            let tbl = solve_cached(form, args.d, args.n, cache.as_ref())?;
            print!("{}", render_dim_table(&tbl, cli.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Chars(args) => {
            let tables =
                solve_characters(args.d, args.n, cli.force_envelope).map_err(|e| match e {
                    CharError::EnvelopeExceeded { .. } => {
                        anyhow!("{e}; pass --force-envelope to compute anyway")
                    }
                    other => anyhow!(other),
                })?;
            print!("{}", render_char_tables(&tables, args.basis, cli.format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Closed(args) => {
            print!("{}", render_closed_table(args.d, args.n, cli.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(args) => {
            let cfg = OracleConfig::default();
            let mut rows = Vec::new();
            for n in 1..=args.n {
                let cj = span_cj(n, args.d, None, &cfg)?;
                let sj = span_sj(n, args.d, None, &cfg)?;
                let icj = span_inner_cj(n, args.d, None, &cfg)?;
                let isj = span_inner_sj(n, args.d, None, &cfg)?;
                rows.push(OracleRow {
                    n,
                    words: cj.space().dim(),
                    cj: cj.rank(),
                    sj: sj.rank(),
                    inner_cj: icj.rank(),
                    inner_sj: isj.rank(),
                });
            }
            print!("{}", render_oracle_table(args.d, &rows, cli.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let opts = SuiteOptions {
                d_max: args.d_max,
                n_max: args.n_max,
                force_envelope: cli.force_envelope,
            };
            let results = run_suites(args.suite.suites(), &opts);
            print!("{}", render_report(&results, cli.format));
            let summary = ReportSummary::of(&results);
            Ok(if summary.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn resolve_cache(flag: Option<PathBuf>) -> anyhow::Result<Option<SolveCache>> {
    let dir = flag.or_else(|| std::env::var_os("JORDANLAB_CACHE_DIR").map(PathBuf::from));
    match dir {
        Some(d) => {
            let cache = SolveCache::new(&d)
                .with_context(|| format!("opening cache directory {}", d.display()))?;
            Ok(Some(cache))
        }
        None => Ok(None),
    }
}
