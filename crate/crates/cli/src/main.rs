//! `bicyclic`: command-line access to the bicyclic monoid toolkit.
//!
//! Exit status: 0 for yes/ok, 1 for no/refuted, 2 for errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bicyclic_core::harness::{
    coverage_with_pairs, cross_validate, default_pair_bound, parse_spec_unvalidated, render_window,
};
use bicyclic_core::subsemigroup::FD_READING;
use bicyclic_core::{
    decide_left_iorder, decide_right_iorder, decompose, word_normalize, Element, Error,
    Subsemigroup, SubsemigroupSpec, Word,
};
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "bicyclic",
    version,
    about = "Computations in the bicyclic monoid B = <a, b | ba = 1>"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply two elements given as (i,j)
    Mul { x: Element, y: Element },
    /// Inverse of an element
    Inv { x: Element },
    /// Normal form of a word over {a, b}
    Normalize { word: String },
    /// Parse a spec file and report its form and any violated constraints
    Classify { file: PathBuf },
    /// Decide whether the subsemigroup is a left (or right) I-order
    Decide {
        file: PathBuf,
        #[arg(long)]
        right: bool,
    },
    /// Write q as x^-1 y with x, y in the subsemigroup and x R y
    Witness { file: PathBuf, q: Element },
    /// Draw the members inside the (W+1)x(W+1) window
    Render {
        file: PathBuf,
        #[arg(long)]
        window: u64,
    },
    /// Brute-force which window elements are of the form x^-1 y
    Coverage {
        file: PathBuf,
        #[arg(long)]
        window: u64,
        /// Bound on the coordinates of x and y (default 3*(2W + p + m + 4))
        #[arg(long)]
        pairs: Option<u64>,
    },
    /// Check the decision against the coverage oracle
    Crosscheck {
        file: PathBuf,
        #[arg(long)]
        window: u64,
    },
}

enum Outcome {
    Yes,
    No,
}

impl From<bool> for Outcome {
    fn from(yes: bool) -> Self {
        if yes {
            Outcome::Yes
        } else {
            Outcome::No
        }
    }
}

fn read_spec(path: &Path) -> Result<SubsemigroupSpec, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_spec_unvalidated(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<Subsemigroup, String> {
    Subsemigroup::new(read_spec(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_record(record: &[(String, String)]) {
    for (k, v) in record {
        println!("{k}={v}");
    }
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Mul { x, y } => {
            println!("{}", x.try_mul(y).map_err(|e| e.to_string())?);
            Ok(Outcome::Yes)
        }
        Command::Inv { x } => {
            println!("{}", x.inverse());
            Ok(Outcome::Yes)
        }
        Command::Normalize { word } => {
            let w: Word = word.parse().map_err(|e: Error| e.to_string())?;
            println!("{}", word_normalize(&w));
            Ok(Outcome::Yes)
        }
        Command::Classify { file } => {
            let spec = read_spec(&file)?;
            println!("form={}", spec.form());
            println!("fd_reading={FD_READING}");
            match spec.validate() {
                Ok(()) => {
                    println!("valid=yes");
                    Ok(Outcome::Yes)
                }
                Err(violations) => {
                    println!("valid=no");
                    for v in violations {
                        println!("violation={v}");
                    }
                    Ok(Outcome::No)
                }
            }
        }
        Command::Decide { file, right } => {
            let s = load(&file)?;
            let d = if right {
                decide_right_iorder(&s)
            } else {
                decide_left_iorder(&s)
            };
            print_record(&d.record());
            Ok(d.is_yes().into())
        }
        Command::Witness { file, q } => {
            let s = load(&file)?;
            match decompose(&s, q) {
                Ok(w) => {
                    println!("{w}");
                    Ok(Outcome::Yes)
                }
                Err(Error::NotLeftIOrder(d)) => {
                    print_record(&d.record());
                    Ok(Outcome::No)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Render { file, window } => {
            let s = load(&file)?;
            println!("{}", render_window(&s, window));
            Ok(Outcome::Yes)
        }
        Command::Coverage {
            file,
            window,
            pairs,
        } => {
            let s = load(&file)?;
            let pairs = pairs.unwrap_or_else(|| default_pair_bound(&s, window));
            let report = coverage_with_pairs(&s, window, pairs);
            println!("window={}", report.window);
            println!("pairs={}", report.pair_bound);
            println!("covered={}", report.covered.len());
            println!("gaps={}", report.gaps.len());
            let gaps: Vec<String> = report.gaps.iter().map(ToString::to_string).collect();
            println!("gap_elements={}", gaps.join(","));
            Ok(report.is_complete().into())
        }
        Command::Crosscheck { file, window } => {
            let s = load(&file)?;
            let check = cross_validate(&s, window);
            print_record(&check.record());
            Ok(check.passed().into())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Yes) => ExitCode::from(0),
        Ok(Outcome::No) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
