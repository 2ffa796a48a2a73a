use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gamoid::frontend::{load, run_suite, RunOptions, BUILTIN_MODEL};
use gamoid::games::SizeGuard;
use gamoid::intensionality::{check_funext, check_uip_refuted, check_univalence, default_registry};
use gamoid::corpus::all_small_families;
use gamoid::laws::{Finding, Status};

#[derive(Parser)]
#[command(name = "gamoid", version, about = "Check the gamoid model of intensional type theory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    Uip,
    Funext,
    Univalence,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite: gamoid, dependent, cwf, pi, sigma, id, universe,
    /// intensionality, all, or a suite declared in the model.
    Check {
        suite: String,
        /// Model file; the builtin model when omitted.
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Largest game (in moves) accepted from the model.
        #[arg(long)]
        max_moves: Option<usize>,
        /// Include elapsed milliseconds per check.
        #[arg(long)]
        timings: bool,
    },
    /// Print the builtin model.
    Fixtures,
    /// Show one intensionality result with its witness.
    Demo {
        #[arg(value_enum)]
        which: Demo,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn print_finding(f: &Finding) {
    let mut s = format!("{} {}\n", f.status, f.id);
    for (k, v) in &f.witness {
        s += &format!("  {k}: {v}\n");
    }
    for (k, v) in &f.counts {
        s += &format!("  {k} = {v}\n");
    }
    if let Some(n) = &f.note {
        s += &format!("  note: {n}\n");
    }
    emit(&s);
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Fixtures => {
            emit(BUILTIN_MODEL);
            ExitCode::SUCCESS
        }
        Command::Demo { which } => {
            let f = match which {
                Demo::Uip => check_uip_refuted(),
                Demo::Funext => match all_small_families() {
                    Ok(fams) => check_funext(&fams),
                    Err(e) => Finding::new("FunExt", Status::Fail).with_note(&e.to_string()),
                },
                Demo::Univalence => check_univalence(&default_registry()),
            };
            print_finding(&f);
            if f.status == Status::Fail {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Check {
            suite,
            model,
            seed,
            format,
            max_moves,
            timings,
        } => {
            let src = match &model {
                None => BUILTIN_MODEL.to_string(),
                Some(p) => match std::fs::read_to_string(p) {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("error: cannot read {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                },
            };
            let mut guard = SizeGuard::default();
            if let Some(k) = max_moves {
                guard.max_moves = k;
            }
            let m = match load(&src, &guard) {
                Ok(m) => m,
                Err(e) => {
                    let file = model.as_ref().map(|p| p.display().to_string());
                    eprintln!("error: {}: {e}", file.as_deref().unwrap_or("<builtin>"));
                    return ExitCode::from(2);
                }
            };
            let opts = RunOptions {
                seed,
                timings,
                ..RunOptions::default()
            };
            let rep = match run_suite(&m, &suite, &opts) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            match format {
                Format::Text => emit(&rep.to_text()),
                Format::Json => emit(&format!("{}\n", rep.to_json())),
            }
            if rep.has_failure() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
