//! Command-line adapter. Exit codes: 0 answered, 1 usage or parse error,
//! 2 resource limit, 3 internal failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::decide::{classical_consequence, decide, decide_conj_disj_syntactic, decide_conj_syntactic};
use crate::error::{Error, Result};
use crate::formula::{parse, print, print_full, Connective, Fragment};
use crate::matrix::{congruences, evaluate, make_chain, parse_matrix, Matrix, Valuation};
use crate::oracle::Oracle;
use crate::refute::{refute_matrix_with, RefuteOptions, Variant};
use crate::search::{search_with, Corpus, SearchConfig, DEFAULT_MAX_RAW};
use crate::sequent::{Sequent, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "finsem", version, about = "Finite matrix semantics for intuitionistic fragments")]
struct Cli {
    /// Emit `key: value` lines only.
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and pretty-print a formula.
    Parse { formula: String },
    /// Evaluate a formula in a matrix under an assignment.
    Eval {
        #[arg(long)]
        matrix: PathBuf,
        /// e.g. `p1=h,p2=0`
        #[arg(long, default_value = "")]
        assign: String,
        formula: String,
    },
    /// Decide a sequent in a fragment with a finite semantics.
    Decide {
        #[arg(long)]
        sequent: String,
        #[arg(long, value_enum, default_value_t = DecideMethod::Matrix)]
        method: DecideMethod,
    },
    /// Intuitionistic derivability by proof search.
    Prove {
        #[arg(long)]
        sequent: String,
        #[arg(long, default_value_t = crate::oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print the pigeonhole formula for `n`.
    GenAlpha {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        n: u32,
        /// Fully parenthesised.
        #[arg(long)]
        expanded: bool,
    },
    /// Refute a candidate matrix for a fragment without a finite semantics.
    Refute {
        #[arg(long, conflicts_with = "chain", required_unless_present = "chain")]
        matrix: Option<PathBuf>,
        /// Use the Heyting chain of this size.
        #[arg(long)]
        chain: Option<usize>,
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        no_oracle: bool,
    },
    /// Exhaustive matrix search against a labelled corpus.
    Search {
        /// Comma-separated connectives, or `empty`.
        #[arg(long)]
        fragment: Fragment,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        corpus: PathBuf,
        /// 0 uses every core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_RAW)]
        max_raw: u128,
        /// Trust corpus labels instead of re-checking them with the oracle.
        #[arg(long)]
        skip_validation: bool,
    },
    /// List the congruences of a matrix.
    Congruences {
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DecideMethod {
    Matrix,
    Syntactic,
    Oracle,
    Classical,
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<Matrix> {
    Ok(parse_matrix(&read(path)?)?)
}

fn verdict_text(v: &Verdict) -> String {
    let mut out = format!("{} ({})\n", v.outcome, v.method);
    if let Some(w) = v.witness_text() {
        writeln!(out, "witness: {w}").unwrap();
    }
    out
}

fn execute(cli: &Cli) -> Result<String> {
    let porcelain = cli.porcelain;
    let mut out = String::new();
    match &cli.command {
        Command::Parse { formula } => {
            let f = parse(formula)?;
            if porcelain {
                writeln!(out, "formula: {}", print(&f)).unwrap();
                writeln!(out, "fragment: {}", f.fragment()).unwrap();
                writeln!(out, "depth: {}", f.depth()).unwrap();
                writeln!(out, "size: {}", f.size()).unwrap();
            } else {
                writeln!(out, "{}", print(&f)).unwrap();
            }
        }
        Command::Eval {
            matrix,
            assign,
            formula,
        } => {
            let m = load_matrix(matrix)?;
            let v = Valuation::parse(assign, &m)?;
            let f = parse(formula)?;
            let value = evaluate(&m, &v, &f)?;
            if porcelain {
                writeln!(out, "value: {}", m.name(value)).unwrap();
                writeln!(out, "designated: {}", m.is_designated(value)).unwrap();
            } else {
                let mark = if m.is_designated(value) { "designated" } else { "undesignated" };
                writeln!(out, "{} ({mark})", m.name(value)).unwrap();
            }
        }
        Command::Decide { sequent, method } => {
            let s = Sequent::parse(sequent)?;
            let v = match method {
                DecideMethod::Matrix => decide(&s)?,
                DecideMethod::Syntactic => {
                    if s.fragment().is_subset_of(Fragment::of(&[Connective::And])) {
                        decide_conj_syntactic(&s)?
                    } else {
                        decide_conj_disj_syntactic(&s)?
                    }
                }
                DecideMethod::Oracle => Oracle::default().prove(&s)?,
                DecideMethod::Classical => classical_consequence(&s)?,
            };
            out = if porcelain { v.porcelain() } else { verdict_text(&v) };
        }
        Command::Prove { sequent, budget } => {
            let v = Oracle::with_budget(*budget).prove(&Sequent::parse(sequent)?)?;
            out = if porcelain { v.porcelain() } else { verdict_text(&v) };
        }
        Command::GenAlpha { variant, n, expanded } => {
            let f = variant.alpha(*n)?;
            let text = if *expanded { print_full(&f) } else { print(&f) };
            if porcelain {
                writeln!(out, "formula: {text}").unwrap();
            } else {
                writeln!(out, "{text}").unwrap();
            }
        }
        Command::Refute {
            matrix,
            chain,
            variant,
            no_oracle,
        } => {
            let m = match (matrix, chain) {
                (Some(path), _) => load_matrix(path)?,
                (None, Some(size)) => make_chain(*size, variant.required())?,
                (None, None) => unreachable!("clap requires one of --matrix, --chain"),
            };
            let opts = RefuteOptions {
                skip_oracle: *no_oracle,
                ..RefuteOptions::default()
            };
            let report = refute_matrix_with(&m, *variant, &opts)?;
            out = if porcelain { report.porcelain() } else { report.render_text() };
        }
        Command::Search {
            fragment,
            max_size,
            corpus,
            workers,
            max_raw,
            skip_validation,
        } => {
            let text = read(corpus)?;
            let corpus = if *skip_validation {
                Corpus::parse(&text)?
            } else {
                Corpus::load(&text, &Oracle::default())?
            };
            let config = SearchConfig {
                workers: *workers,
                max_raw: *max_raw,
            };
            let outcome = search_with(*fragment, *max_size, &corpus, &config)?;
            out = if porcelain { outcome.porcelain() } else { outcome.render_table() };
        }
        Command::Congruences { matrix } => {
            let m = load_matrix(matrix)?;
            let cs = congruences(&m)?;
            if porcelain {
                writeln!(out, "count: {}", cs.len()).unwrap();
                for c in &cs {
                    writeln!(out, "congruence: {}", c.render(&m)).unwrap();
                }
            } else {
                for c in &cs {
                    let kind = if c.is_diagonal() {
                        " (diagonal)"
                    } else if c.is_all() {
                        " (all)"
                    } else {
                        ""
                    };
                    writeln!(out, "{}{kind}", c.render(&m)).unwrap();
                }
            }
        }
    }
    Ok(out)
}
