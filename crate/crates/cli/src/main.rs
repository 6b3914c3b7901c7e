//! `schubert`: exact Schubert calculus from the command line.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use schubert_core::oracle::OracleKind;
use schubert_core::spaces::SpaceId;

use commands::{Failure, OracleArgs, Tamper, TangencyArgs};
use report::CommandResult;

#[derive(Parser, Debug)]
#[command(name = "schubert", version, about = "Exact enumerative geometry of points, planes and lines in P3")]
struct Cli {
    /// Print a JSON CommandResult instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report elapsed wall-clock time (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce an expression to normal form and count it if it has top degree.
    Eval {
        #[arg(long, value_parser = parse_space)]
        space: SpaceId,
        expr: String,
    },
    /// Check an identity `lhs == rhs [== ...]`; exits 1 when it fails.
    Check {
        #[arg(long, value_parser = parse_space)]
        space: SpaceId,
        identity: String,
    },
    /// Verify the table of seventeen identities.
    Formulas {
        /// Replace a symbol before checking: `[SPACE:]SYM=EXPR`.
        #[arg(long, hide = true)]
        tamper: Vec<Tamper>,
    },
    /// Count lines tangent to a surface of degree n at several points.
    Tangency {
        /// Number of tangency points.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        pairs: u8,
        /// Extra line condition, e.g. `g_e` (default 1).
        #[arg(long, allow_hyphen_values = true)]
        extra: Option<String>,
        /// Evaluate the count at this n.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<i64>,
        /// CSV table of values, e.g. `n=1..12`.
        #[arg(long, value_parser = parse_table)]
        table: Option<(i64, i64)>,
    },
    /// Independent numeric checks with exact arithmetic.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug, Clone, Copy)]
struct TrialArgs {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    trials: u64,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Transversals to four random lines.
    FourLines(TrialArgs),
    /// Four lines of one ruling of a quadric (seeded if --seed is given).
    FourLinesRuling(TrialArgs),
    /// Coincidences of a random correspondence of bidegree (p, q).
    Chasles {
        #[arg(long = "p")]
        p: usize,
        #[arg(long = "q")]
        q: usize,
        #[command(flatten)]
        trials: TrialArgs,
    },
}

fn parse_space(s: &str) -> Result<SpaceId, String> {
    s.parse::<SpaceId>().map_err(|e| e.to_string())
}

fn parse_table(s: &str) -> Result<(i64, i64), String> {
    let range = s.strip_prefix("n=").ok_or("expected n=a..b")?;
    let (a, b) = range.split_once("..").ok_or("expected n=a..b")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

fn run(command: &Command, result: &mut CommandResult) -> Result<(), Failure> {
    match command {
        Command::Eval { space, expr } => commands::eval(result, *space, expr),
        Command::Check { space, identity } => commands::check(result, *space, identity),
        Command::Formulas { tamper } => commands::formulas(result, tamper),
        Command::Tangency { pairs, extra, at, table } => commands::tangency(
            result,
            &TangencyArgs { pairs: usize::from(*pairs), extra: extra.clone(), at: *at, table: *table },
        ),
        Command::Oracle(o) => {
            let (kind, t, p, q) = match o {
                OracleCommand::FourLines(t) => (OracleKind::FourLines, t, None, None),
                OracleCommand::FourLinesRuling(t) => (OracleKind::FourLinesRuling, t, None, None),
                OracleCommand::Chasles { p, q, trials } => (OracleKind::Chasles, trials, Some(*p), Some(*q)),
            };
            commands::oracle(result, OracleArgs { kind, seed: t.seed, trials: t.trials, p, q })
        }
    }
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::Eval { .. } => "eval",
        Command::Check { .. } => "check",
        Command::Formulas { .. } => "formulas",
        Command::Tangency { .. } => "tangency",
        Command::Oracle(OracleCommand::FourLines(_)) => "oracle four-lines",
        Command::Oracle(OracleCommand::FourLinesRuling(_)) => "oracle four-lines-ruling",
        Command::Oracle(OracleCommand::Chasles { .. }) => "oracle chasles",
    }
}

fn write_csv(rows: &[report::TableRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    w.write_record(["n", "count"])?;
    for r in rows {
        w.write_record([r.n.to_string(), r.value.clone()])?;
    }
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut result = CommandResult::new(name(&cli.command), &argv);
    let start = Instant::now();
    let outcome = run(&cli.command, &mut result);
    if cli.timing {
        result.elapsed_us = Some(u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX));
    }
    let code = match &outcome {
        Ok(())
            if result.pass == Some(false)
                && matches!(cli.command, Command::Check { .. } | Command::Formulas { .. }) =>
        {
            1
        }
        Ok(()) => 0,
        Err(f) => f.exit_code(),
    };
    if let Err(f) = &outcome {
        result.error = Some(f.info());
    }
    let table = result.tangency.as_ref().and_then(|t| t.table.clone());
    let mut stdout = std::io::stdout().lock();
    if cli.json {
        let _ = writeln!(stdout, "{}", result.to_json());
    } else if let Err(f) = &outcome {
        eprintln!("error: {}", f.message());
    } else if let Some(rows) = table {
        drop(stdout);
        if let Err(e) = write_csv(&rows) {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    } else {
        let _ = write!(stdout, "{}", result.to_text());
    }
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
