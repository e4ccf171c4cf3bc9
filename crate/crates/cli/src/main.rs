use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lescop_core::lescop::{ConventionTable, DEFAULT_SUBSET_BUDGET};

use lescop_cli::commands::{self, Job, Statement};
use lescop_cli::error::{CliError, CliResult, ErrorEnvelope};
use lescop_cli::input;
use lescop_cli::output::Output;

/// Conway polynomials, Casson-Walker-Lescop invariants of surgery
/// presentations, and congruence checks for periodic links.
///
/// `--input` takes a JSON file, inline JSON, or a fixture name (`lescop fixtures` lists them).
/// Exit status: 0 on success, 1 when a checked congruence fails, 2 on bad
/// input or violated hypotheses, 3 when a resource budget is exceeded.
#[derive(Parser, Debug)]
#[command(name = "lescop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    input: Option<String>,
    /// Prime modulus; `report` accepts a comma-separated list.
    #[arg(long, global = true, value_delimiter = ',')]
    modulus: Vec<u64>,
    /// Overrides the seed of a corpus input.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Crossing budget of the skein recursion on non-braid diagrams.
    #[arg(long, global = true, default_value_t = 16)]
    max_crossings: usize,
    /// Largest link the subset sums accept.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_BUDGET)]
    max_components: usize,
    /// Wall-clock budget in seconds, checked between presentations.
    #[arg(long, global = true)]
    time_limit: Option<u64>,
    #[arg(long, global = true)]
    json: bool,
    /// Convention table file; the calibrated standard table otherwise.
    #[arg(long, global = true)]
    conventions: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conway polynomial and its normalized coefficients.
    Conway,
    /// Linking matrix, Hoste matrix, determinant and signature.
    Linkmat,
    /// The invariant of surgery on a framed link, with its subset sums.
    Lescop,
    /// Cover of a quotient tangle and its periodicity checks.
    BuildPeriodic,
    /// Checks a congruence on a presentation or a seeded corpus.
    Verify {
        #[arg(value_enum)]
        statement: Statement,
    },
    /// Rules out periods of a surgery manifold.
    Report,
    /// Fixes the convention table from anchors (the standard set by default).
    Calibrate,
    /// Lists the named inputs.
    Fixtures,
}

fn run(cli: &Cli) -> CliResult<Option<Output>> {
    for &p in &cli.modulus {
        lescop_core::poly::require_odd_prime(p)?;
    }
    let conventions = match &cli.conventions {
        Some(path) => commands::load_conventions(path)?,
        None => ConventionTable::standard(),
    };
    let job = Job {
        input: cli.input.clone(),
        moduli: cli.modulus.clone(),
        seed: cli.seed,
        max_crossings: cli.max_crossings,
        max_components: cli.max_components,
        time_limit: cli.time_limit,
        conventions,
    };
    let out = match &cli.command {
        Command::Conway => commands::conway(&job)?,
        Command::Linkmat => commands::linkmat(&job)?,
        Command::Lescop => commands::lescop(&job)?,
        Command::BuildPeriodic => commands::build_periodic(&job)?,
        Command::Verify { statement } => commands::verify(&job, *statement)?,
        Command::Report => commands::report(&job)?,
        Command::Calibrate => commands::calibrate(&job)?,
        Command::Fixtures => return Ok(None),
    };
    Ok(Some(out))
}

fn print_fixtures(json: bool) {
    let all = input::fixtures();
    let mut stdout = std::io::stdout().lock();
    if json {
        let map: serde_json::Map<String, serde_json::Value> = all
            .into_iter()
            .map(|(n, s)| (n.to_string(), serde_json::to_value(s).expect("fixtures serialize")))
            .collect();
        let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&map).expect("fixtures serialize"));
    } else {
        for (n, s) in all {
            let _ = writeln!(stdout, "{n:<18} {}", serde_json::to_string(&s).expect("fixtures serialize"));
        }
    }
}

fn emit_error(err: &CliError, json: bool) -> ExitCode {
    let body = serde_json::to_string(&ErrorEnvelope { error: err.body() }).expect("errors serialize");
    if json {
        let _ = writeln!(std::io::stdout(), "{body}");
    } else {
        let _ = writeln!(std::io::stderr(), "error: {err}\n{body}");
    }
    ExitCode::from(err.exit_code())
}

fn main() -> ExitCode {
    let json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.render().to_string();
            return emit_error(&CliError::Usage(msg.trim().to_string()), json);
        }
    };
    match run(&cli) {
        Ok(None) => {
            print_fixtures(cli.json);
            ExitCode::SUCCESS
        }
        Ok(Some(out)) => {
            // a closed pipe downstream is not an error of ours
            let mut stdout = std::io::stdout().lock();
            let _ = if cli.json {
                writeln!(stdout, "{}", out.to_json())
            } else {
                write!(stdout, "{}", out.to_table())
            };
            ExitCode::from(out.exit_code())
        }
        Err(e) => emit_error(&e, cli.json),
    }
}
