//! The `saotf` command-line tool: preprocessing, training, completion,
//! evaluation, the prefix-parsability probe and parameter sweeps.

pub mod commands;
pub mod config;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use saotf_core::{Error, Result};

use crate::config::RunConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRACT: i32 = 1;
pub const EXIT_IO: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "saotf", version, about = "Syntax-aware code completion toolkit")]
pub struct Cli {
    /// Flat `key = value` run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Overrides applied after the config file, e.g. `--set max_steps=200`.
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    pub overrides: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lex, mask, split, train BPE and write aligned datasets.
    Preprocess {
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Train a model with the configured strategy.
    Train {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// hard, soft, ift or code (overrides `strategy` in the config).
        #[arg(long)]
        strategy: Option<String>,
    },
    /// Complete the current line of a source file (or stdin).
    Complete {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        checkpoint: PathBuf,
        /// Source text to continue; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        decode: DecodeArgs,
    },
    /// Score a checkpoint and write report.json.
    Eval {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        checkpoint: PathBuf,
        #[arg(long, default_value = "test")]
        split: String,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        decode: DecodeArgs,
    },
    /// Check every character prefix of the matching files for parsability.
    Probe {
        #[arg(long)]
        glob: String,
        /// token or grammar (overrides `checker` in the config).
        #[arg(long)]
        checker: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep task weights or decoding settings.
    Sweep {
        #[command(subcommand)]
        axis: SweepAxis,
    },
}

#[derive(Debug, Subcommand)]
pub enum SweepAxis {
    /// One hard-sharing model per weight ratio plus a code-only baseline.
    Weights {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Every decoding method over its parameter grid.
    Decode {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        checkpoint: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct DecodeArgs {
    /// greedy, beam, sample, temperature, top_k or top_p.
    #[arg(long)]
    pub method: Option<String>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub temp: Option<f64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub max_new: Option<usize>,
}

impl DecodeArgs {
    fn apply(&self, cfg: &mut RunConfig) -> Result<()> {
        let pairs = [
            ("method", self.method.clone()),
            ("b", self.b.map(|v| v.to_string())),
            ("temp", self.temp.map(|v| v.to_string())),
            ("k", self.k.map(|v| v.to_string())),
            ("p", self.p.map(|v| v.to_string())),
            ("seed", self.seed.map(|v| v.to_string())),
            ("max_new", self.max_new.map(|v| v.to_string())),
        ];
        for (key, value) in pairs {
            if let Some(v) = value {
                cfg.set(key, &v)?;
            }
        }
        Ok(())
    }
}

/// Process exit code for an error: 2 for I/O failures, 1 for everything else.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_io() {
        EXIT_IO
    } else {
        EXIT_CONTRACT
    }
}

/// Runs one parsed command, writing human-readable output to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let mut cfg = RunConfig::load(cli.config.as_deref(), &cli.overrides)?;
    match &cli.command {
        Command::Preprocess { src, out } => {
            let s = commands::run_preprocess(src, out, &cfg)?;
            writeln!(
                stdout,
                "preprocessed {} train / {} valid / {} test files ({} excluded), vocabulary {} ({})",
                s.samples[0],
                s.samples[1],
                s.samples[2],
                s.excluded.len(),
                s.vocab_size,
                s.vocab_hash
            )?;
        }
        Command::Train { data, out, strategy } => {
            if let Some(s) = strategy {
                cfg.set("strategy", s)?;
            }
            let s = commands::run_train(data, out, &cfg)?;
            writeln!(stdout, "trained {} steps with strategy {}", s.steps, s.strategy)?;
            if let Some(r) = s.final_record {
                writeln!(stdout, "{}", serde_json::to_string(&r)?)?;
            }
        }
        Command::Complete {
            data,
            checkpoint,
            input,
            decode,
        } => {
            decode.apply(&mut cfg)?;
            let source = match input {
                Some(path) => {
                    commands::require(path)?;
                    std::fs::read_to_string(path)?
                }
                None => {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s)?;
                    s
                }
            };
            let c = commands::run_complete(data, checkpoint, &source, &cfg)?;
            writeln!(stdout, "{}", c.text)?;
        }
        Command::Eval {
            data,
            checkpoint,
            split,
            out,
            decode,
        } => {
            decode.apply(&mut cfg)?;
            let r = commands::run_eval(data, checkpoint, split, out, &cfg)?;
            writeln!(
                stdout,
                "acc {:.2}  acc(no literals) {:.2}  mrr {:.4}  em {:.2}  es {:.2}",
                r.report.token_accuracy, r.report.token_accuracy_excluding_literals, r.report.mrr, r.report.em, r.report.es
            )?;
        }
        Command::Probe { glob, checker, out } => {
            if let Some(c) = checker {
                cfg.set("checker", c)?;
            }
            let p = commands::run_probe(glob, out, &cfg)?;
            write!(stdout, "{}", commands::probe_table(&p))?;
        }
        Command::Sweep { axis } => match axis {
            SweepAxis::Weights { data, out } => {
                let s = commands::run_sweep_weights(data, out, &cfg)?;
                writeln!(stdout, "{:<10} {:>8} {:>8} {:>8} {:>8}", "weights", "acc", "mrr", "em", "es")?;
                for r in s.rows.iter().chain([&s.baseline]) {
                    writeln!(
                        stdout,
                        "{:<10} {:>8.2} {:>8.4} {:>8.2} {:>8.2}",
                        r.label, r.token_accuracy, r.mrr, r.em, r.es
                    )?;
                }
            }
            SweepAxis::Decode { data, checkpoint, out } => {
                let s = commands::run_sweep_decode(data, checkpoint, out, &cfg)?;
                writeln!(stdout, "{:<22} {:>16} {:>16}", "method", "em", "es")?;
                for r in &s.rows {
                    writeln!(
                        stdout,
                        "{:<22} {:>7.2} ± {:<6.2} {:>7.2} ± {:<6.2}",
                        r.label, r.em.mean, r.em.std, r.es.mean, r.es.std
                    )?;
                }
            }
        },
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the exit code. Errors are
/// written to `stderr` as one JSON object.
pub fn main_with(args: impl IntoIterator<Item = String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONTRACT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match run(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            let code = exit_code(&err);
            let kind = if code == EXIT_IO { "io" } else { "contract" };
            let body = serde_json::json!({ "error": kind, "message": err.to_string() });
            let _ = writeln!(stderr, "{body}");
            code
        }
    }
}
