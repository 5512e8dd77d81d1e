//! Command-line front end: single-letter insertion, word processing,
//! growth-graph export, and the verification checks, all emitting
//! canonical JSON (or DOT) on stdout.

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::branching::{branch_insert_letter, branch_insert_word, check_conditions};
use crate::checks;
use crate::classical::{col_insert, insert_word, row_insert, InsertionAlgo};
use crate::error::{Error, Result};
use crate::growth::{growth_compute, growth_graph, Variant};
use crate::rules::rule_by_name;
use crate::tableaux::{Permutation, ShapeChain, Word};

#[derive(Parser)]
#[command(
    name = "qgrowth",
    about = "Classical and q-weighted Robinson-Schensted insertion with exact weights",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Insert one letter into a tableau.
    Insert {
        /// Algorithm: col, row, qcol, qrow or dyn3.
        #[arg(long)]
        algo: String,
        /// Tableau as JSON rows, e.g. '[[1,1,3],[2]]'.
        #[arg(long)]
        tableau: String,
        /// Alphabet bound ℓ.
        #[arg(long)]
        ell: usize,
        /// The letter to insert.
        #[arg(long)]
        letter: usize,
    },
    /// Process a whole word into (P, Q) outputs.
    Word {
        #[arg(long)]
        algo: String,
        /// The word, as digits ("31342") or comma-separated letters.
        #[arg(long)]
        word: String,
        /// Alphabet bound ℓ; defaults to the largest letter.
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Compute and export the growth graph of a permutation.
    Growth {
        /// Variant: qcol or qrow.
        #[arg(long, default_value = "qcol")]
        algo: String,
        /// The permutation in one-line notation, e.g. 1423.
        #[arg(long)]
        perm: String,
        /// Output format: json or dot.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run a verification check; exits nonzero on failure.
    Check {
        #[command(subcommand)]
        check: CheckCommand,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Pair-swap symmetry over all of S_n.
    Symmetry {
        #[arg(long)]
        algo: String,
        #[arg(long)]
        n: usize,
        /// Engine: insertion, growth or both.
        #[arg(long, default_value = "insertion")]
        engine: String,
    },
    /// Total mass 1 over every word in [ℓ]^n.
    Normalization {
        #[arg(long)]
        algo: String,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
    },
    /// The sufficient conditions for symmetry, swept exhaustively.
    Conditions {
        #[arg(long)]
        algo: String,
        /// Partition size bound.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Letter/level bound; defaults to n + 2.
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Degeneration to the classical algorithm at q = 0.
    Qzero {
        #[arg(long)]
        algo: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Nonnegativity and mass 1 at an exact rational q.
    Numeric {
        #[arg(long)]
        algo: String,
        /// Exact rational, e.g. 1/2.
        #[arg(long)]
        q: String,
        #[arg(long)]
        n: usize,
    },
}

fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad letter '{t}'")))
    };
    if s.contains(',') {
        s.split(',').map(|t| parse(t.trim())).collect()
    } else if s.chars().all(|c| c.is_ascii_digit()) && !s.is_empty() {
        s.chars().map(|c| parse(&c.to_string())).collect()
    } else {
        Err(Error::Parse(format!("cannot parse letters from '{s}'")))
    }
}

fn parse_word(s: &str, ell: Option<usize>) -> Result<Word> {
    let letters = parse_letters(s)?;
    let bound = match ell {
        Some(e) => e,
        None => letters.iter().copied().max().unwrap_or(1),
    };
    Word::new(letters, bound)
}

fn parse_perm(s: &str) -> Result<Permutation> {
    Permutation::new(parse_letters(s)?)
}

fn parse_q(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("cannot parse rational '{s}'"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn parse_tableau(s: &str, ell: usize) -> Result<ShapeChain> {
    let rows: Vec<Vec<usize>> =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad tableau JSON: {e}")))?;
    ShapeChain::from_rows(&rows, ell)
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
    println!("{text}");
    Ok(())
}

fn cmd_insert(algo: &str, tableau: &str, ell: usize, letter: usize) -> Result<bool> {
    let chain = parse_tableau(tableau, ell)?;
    match algo {
        "col" | "row" => {
            let out = if algo == "col" {
                col_insert(&chain, letter)?
            } else {
                row_insert(&chain, letter)?
            };
            emit(&json!({
                "algo": algo,
                "chain": out,
                "rows": out.to_rows(),
            }))?;
        }
        _ => {
            let rule = rule_by_name(algo)?;
            let out = branch_insert_letter(rule.as_ref(), &chain, letter)?;
            let outputs: Vec<_> = out
                .iter()
                .map(|(c, w)| {
                    json!({
                        "chain": c,
                        "weight": w,
                        "display": w.to_string(),
                    })
                })
                .collect();
            emit(&json!({ "algo": algo, "outputs": outputs }))?;
        }
    }
    Ok(true)
}

fn cmd_word(algo: &str, word: &str, ell: Option<usize>) -> Result<bool> {
    let w = parse_word(word, ell)?;
    match algo {
        "col" | "row" => {
            let kind = if algo == "col" {
                InsertionAlgo::Column
            } else {
                InsertionAlgo::Row
            };
            let (p, q) = insert_word(kind, &w);
            emit(&json!({
                "algo": algo,
                "word": w.to_string(),
                "p": p,
                "q": q,
                "p_rows": p.to_rows(),
                "q_rows": q.to_rows(),
            }))?;
        }
        _ => {
            let rule = rule_by_name(algo)?;
            let out = branch_insert_word(rule.as_ref(), &w)?;
            emit(&json!({
                "algo": algo,
                "word": w.to_string(),
                "total": out.total(),
                "pairs": out,
            }))?;
        }
    }
    Ok(true)
}

fn cmd_growth(algo: &str, perm: &str, format: &str) -> Result<bool> {
    let sigma = parse_perm(perm)?;
    let variant = Variant::from_name(algo)?;
    match format {
        "dot" => {
            let graph = growth_graph(variant, &sigma)?;
            print!("{}", graph.to_dot());
        }
        "json" => {
            let graph = growth_graph(variant, &sigma)?;
            let pairs = growth_compute(variant, &sigma)?;
            emit(&json!({ "graph": graph, "pairs": pairs }))?;
        }
        _ => return Err(Error::Parse(format!("unknown format '{format}'"))),
    }
    Ok(true)
}

fn cmd_check(check: &CheckCommand) -> Result<bool> {
    match check {
        CheckCommand::Symmetry { algo, n, engine } => {
            let engine = checks::Engine::from_name(engine)?;
            let report = checks::check_symmetry(algo, *n, engine)?;
            emit(&report)?;
            Ok(report.passed)
        }
        CheckCommand::Normalization { algo, ell, n } => {
            let report = checks::check_normalization(algo, *ell, *n)?;
            emit(&report)?;
            Ok(report.passed)
        }
        CheckCommand::Conditions { algo, n, ell } => {
            let rule = rule_by_name(algo)?;
            let report = check_conditions(rule.as_ref(), *n, ell.unwrap_or(n + 2));
            let mut value = serde_json::to_value(&report)
                .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
            value["passed"] = json!(report.passed());
            emit(&value)?;
            Ok(report.passed())
        }
        CheckCommand::Qzero { algo, word, ell } => {
            let w = parse_word(word, *ell)?;
            let report = checks::check_q_zero(algo, &w)?;
            emit(&report)?;
            Ok(report.passed)
        }
        CheckCommand::Numeric { algo, q, n } => {
            let q0 = parse_q(q)?;
            let report = checks::check_numeric(algo, &q0, *n)?;
            emit(&report)?;
            Ok(report.passed)
        }
    }
}

/// Parse arguments, dispatch, and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit code 0
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Insert {
            algo,
            tableau,
            ell,
            letter,
        } => cmd_insert(algo, tableau, *ell, *letter),
        Command::Word { algo, word, ell } => cmd_word(algo, word, *ell),
        Command::Growth { algo, perm, format } => cmd_growth(algo, perm, format),
        Command::Check { check } => cmd_check(check),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
