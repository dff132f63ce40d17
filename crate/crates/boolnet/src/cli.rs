//! Command-line front end. The binary is a thin wrapper over `run`, which
//! writes to the given sink and returns a process exit code.
//!
//! Exit codes: 0 success, 2 usage, 3 expression parse error, 4 evaluation
//! error, 5 enumeration/budget error, 6 normal-form cap, 7 solver
//! precondition, 8 network error, 9 io, 10 oracle cap.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bench;
use crate::dimacs;
use crate::dsat::{cnf_satisfiable_via_dnf, dnf_satisfiable, DsatError, ScanMode, SatOutcome};
use crate::expr::{
    self, evaluate, length, parse, render, EnumError, EvalError, LengthMeasure, ParseError,
    TruthAssignment,
};
use crate::net::{
    self, BuildConfig, CostModel, FallbackPolicy, NetError,
};
use crate::nf::{embed_cnf, embed_dnf, to_cnf, to_dnf, NfConfig, NfError};
use crate::oracle::{classify_default, OracleError};

#[derive(Parser)]
#[command(name = "boolnet", version, about = "Boolean expression toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct ExprInput {
    /// Expression text (ASCII aliases ! | & accepted).
    expr: Option<String>,
    /// Read a DIMACS-style file instead of an expression argument.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct NfFlags {
    /// Print DIMACS instead of expression text.
    #[arg(long)]
    dimacs: bool,
    /// Drop clauses containing a complementary pair.
    #[arg(long)]
    drop_contradictions: bool,
    /// Clause cap for the distribution step.
    #[arg(long, default_value_t = 1_000_000)]
    cap: u64,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Clone)]
enum Cmd {
    /// Evaluate an expression under a truth assignment.
    Eval {
        expr: String,
        /// Repeatable: --assign x1=1 (variables in coded form).
        #[arg(long = "assign")]
        assign: Vec<String>,
        /// Also print the chosen length measure {a,b,c,d}.
        #[arg(long)]
        measure: Option<char>,
    },
    /// Classify an expression as 0 (unsat), 1 (strict) or t (tautology).
    Classify {
        expr: String,
        #[arg(long)]
        measure: Option<char>,
    },
    /// Convert to disjunctive normal form.
    Dnf {
        #[command(flatten)]
        input: ExprInput,
        #[command(flatten)]
        flags: NfFlags,
    },
    /// Convert to conjunctive normal form.
    Cnf {
        #[command(flatten)]
        input: ExprInput,
        #[command(flatten)]
        flags: NfFlags,
    },
    /// DNF satisfiability via complementary-pair detection.
    Dsat {
        #[command(flatten)]
        input: ExprInput,
        /// Check every clause instead of stopping at the first hit.
        #[arg(long)]
        full_scan: bool,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// CNF satisfiability via conversion to DNF.
    Csat {
        #[command(flatten)]
        input: ExprInput,
        #[arg(long)]
        full_scan: bool,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Build a status network and write it to a file.
    BuildNet {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "oracle")]
        policy: String,
        #[arg(long = "cost-model", default_value = "unit")]
        cost_model: String,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Also host redundant-paren production forms like ¬(x1).
        #[arg(long = "redundant-parens")]
        redundant_parens: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Query a saved network for an expression's status.
    QueryNet {
        #[arg(long)]
        net: PathBuf,
        expr: String,
    },
    /// Print the metrics of a saved network.
    NetStats {
        #[arg(long)]
        net: PathBuf,
    },
    /// Run a measurement scenario and emit CSV.
    Bench {
        /// One of net-growth, dsat-scaling, cnf-blowup, query-path.
        scenario: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long = "n-min", default_value_t = 2)]
        n_min: usize,
        #[arg(long = "n-max", default_value_t = 8)]
        n_max: usize,
        /// Repeatable literal counts for dsat-scaling.
        #[arg(long = "l")]
        ls: Vec<u64>,
        #[arg(long, default_value_t = 12)]
        vars: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        k_max: u32,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, default_value = "oracle")]
        policy: String,
        /// Also host redundant-paren production forms like ¬(x1).
        #[arg(long = "redundant-parens")]
        redundant_parens: bool,
        /// Record wall times (breaks byte-identical reruns).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Nf(#[from] NfError),
    #[error(transparent)]
    Dsat(#[from] DsatError),
    #[error(transparent)]
    Net(#[from] NetError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Dimacs(#[from] dimacs::DimacsError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Eval(_) => 4,
            CliError::Enum(_) => 5,
            CliError::Nf(NfError::ClauseCapExceeded { .. }) => 6,
            CliError::Nf(_) => 6,
            CliError::Dsat(DsatError::Conversion(_)) => 6,
            CliError::Dsat(_) => 7,
            CliError::Net(_) => 8,
            CliError::Io(_) | CliError::Dimacs(_) => 9,
            CliError::Oracle(_) => 10,
        }
    }
}

fn parse_assignments(specs: &[String]) -> Result<TruthAssignment, CliError> {
    let mut t = TruthAssignment::new();
    for spec in specs {
        let (name, bit) = spec
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("bad --assign '{spec}', expected var=bit")))?;
        let var = match parse(name)? {
            expr::Expr::Var(i) => i,
            _ => return Err(CliError::Usage(format!("'{name}' is not a variable"))),
        };
        let bit = match bit {
            "0" => false,
            "1" => true,
            _ => return Err(CliError::Usage(format!("bad bit '{bit}' in '{spec}'"))),
        };
        t.set(var, bit);
    }
    Ok(t)
}

fn measure_from_flag(c: char) -> Result<LengthMeasure, CliError> {
    Ok(match c {
        'a' => LengthMeasure::SymbolCount,
        'b' => LengthMeasure::VariableOccurrences,
        'c' => LengthMeasure::DistinctVariables,
        'd' => LengthMeasure::CodedSymbolCount,
        _ => return Err(CliError::Usage(format!("--measure must be a, b, c or d, got '{c}'"))),
    })
}

fn print_measure(
    out: &mut impl Write,
    text: &str,
    measure: Option<char>,
) -> Result<(), CliError> {
    if let Some(m) = measure {
        let measure = measure_from_flag(m)?;
        let e = parse(text)?;
        writeln!(out, "l={}", length(&e, measure))?;
    }
    Ok(())
}

fn witness_line(w: &TruthAssignment) -> String {
    w.iter()
        .map(|(v, b)| format!("x{}={}", "1".repeat(v as usize), b as u8))
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_sat_outcome(out: &mut impl Write, o: &SatOutcome) -> Result<(), CliError> {
    writeln!(out, "{}", if o.satisfiable { "SAT" } else { "UNSAT" })?;
    if let Some(w) = &o.witness {
        writeln!(out, "{}", witness_line(w))?;
    }
    writeln!(out, "comparisons,sort_ops,clauses_checked,aborted_early")?;
    writeln!(
        out,
        "{},{},{},{}",
        o.stats.comparisons, o.stats.sort_ops, o.stats.clauses_checked, o.stats.aborted_early as u8
    )?;
    Ok(())
}

fn with_sink<F>(out: &mut impl Write, path: &Option<PathBuf>, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    match path {
        Some(p) => {
            let mut file = BufWriter::new(File::create(p)?);
            f(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => f(out),
    }
}

fn dispatch(cmd: Cmd, out: &mut impl Write) -> Result<(), CliError> {
    match cmd {
        Cmd::Eval {
            expr,
            assign,
            measure,
        } => {
            let e = parse(&expr)?;
            let t = parse_assignments(&assign)?;
            writeln!(out, "{}", evaluate(&e, &t)? as u8)?;
            print_measure(out, &expr, measure)?;
        }
        Cmd::Classify { expr, measure } => {
            let e = parse(&expr)?;
            writeln!(out, "{}", classify_default(&e)?.symbol())?;
            print_measure(out, &expr, measure)?;
        }
        Cmd::Dnf { input, flags } => {
            let cfg = NfConfig {
                clause_cap: flags.cap,
                drop_contradictions: flags.drop_contradictions,
            };
            let d = match (&input.expr, &input.file) {
                (Some(text), None) => to_dnf(&parse(text)?, &cfg)?,
                (None, Some(path)) => {
                    dimacs::read_dnf(&mut BufReader::new(File::open(path)?))?
                }
                _ => return Err(CliError::Usage("give an expression or --file".into())),
            };
            with_sink(out, &flags.out, |w| {
                if flags.dimacs {
                    dimacs::write_dnf(&d, w)?;
                } else {
                    writeln!(w, "{}", render(&embed_dnf(&d)))?;
                }
                Ok(())
            })?;
        }
        Cmd::Cnf { input, flags } => {
            let cfg = NfConfig {
                clause_cap: flags.cap,
                drop_contradictions: flags.drop_contradictions,
            };
            let c = match (&input.expr, &input.file) {
                (Some(text), None) => to_cnf(&parse(text)?, &cfg)?,
                (None, Some(path)) => {
                    dimacs::read_cnf(&mut BufReader::new(File::open(path)?))?
                }
                _ => return Err(CliError::Usage("give an expression or --file".into())),
            };
            with_sink(out, &flags.out, |w| {
                if flags.dimacs {
                    dimacs::write_cnf(&c, w)?;
                } else {
                    writeln!(w, "{}", render(&embed_cnf(&c)))?;
                }
                Ok(())
            })?;
        }
        Cmd::Dsat {
            input,
            full_scan,
            cap,
        } => {
            let cfg = NfConfig {
                clause_cap: cap,
                ..NfConfig::default()
            };
            let d = match (&input.expr, &input.file) {
                (Some(text), None) => to_dnf(&parse(text)?, &cfg)?,
                (None, Some(path)) => {
                    dimacs::read_dnf(&mut BufReader::new(File::open(path)?))?
                }
                _ => return Err(CliError::Usage("give an expression or --file".into())),
            };
            let mode = if full_scan {
                ScanMode::FullScan
            } else {
                ScanMode::EarlyExit
            };
            print_sat_outcome(out, &dnf_satisfiable(&d, mode)?)?;
        }
        Cmd::Csat {
            input,
            full_scan,
            cap,
        } => {
            let cfg = NfConfig {
                clause_cap: cap,
                ..NfConfig::default()
            };
            let c = match (&input.expr, &input.file) {
                (Some(text), None) => to_cnf(&parse(text)?, &cfg)?,
                (None, Some(path)) => {
                    dimacs::read_cnf(&mut BufReader::new(File::open(path)?))?
                }
                _ => return Err(CliError::Usage("give an expression or --file".into())),
            };
            let mode = if full_scan {
                ScanMode::FullScan
            } else {
                ScanMode::EarlyExit
            };
            let o = cnf_satisfiable_via_dnf(&c, &cfg, mode)?;
            writeln!(out, "{}", if o.satisfiable { "SAT" } else { "UNSAT" })?;
            if let Some(w) = &o.witness {
                writeln!(out, "{}", witness_line(w))?;
            }
            writeln!(out, "blowup={}/{}", o.blowup.0, o.blowup.1)?;
            writeln!(out, "comparisons,sort_ops,clauses_checked,aborted_early")?;
            writeln!(
                out,
                "{},{},{},{}",
                o.stats.comparisons,
                o.stats.sort_ops,
                o.stats.clauses_checked,
                o.stats.aborted_early as u8
            )?;
        }
        Cmd::BuildNet {
            k,
            n,
            policy,
            cost_model,
            budget,
            redundant_parens,
            out: path,
        } => {
            let mut cfg = build_config(&policy, &cost_model, budget)?;
            cfg.enum_cfg.include_redundant_parens = redundant_parens;
            let network = net::build(k, n, &cfg)?;
            if network.aborted() {
                return Err(CliError::Net(NetError::SaveAborted));
            }
            let mut file = BufWriter::new(File::create(&path)?);
            net::save(&network, &mut file)?;
            file.flush()?;
            writeln!(out, "cells={}", network.metrics().cells)?;
        }
        Cmd::QueryNet { net: path, expr } => {
            let network = net::load(&mut BufReader::new(File::open(&path)?))?;
            let (status, steps) = network.query(&expr)?;
            writeln!(out, "{} {}", status.symbol(), steps)?;
        }
        Cmd::NetStats { net: path } => {
            let network = net::load(&mut BufReader::new(File::open(&path)?))?;
            let m = network.metrics();
            writeln!(out, "k={} n={} policy={} cost_model={}",
                network.variable_count(), network.frontier(),
                network.policy().name(), network.cost_model().name())?;
            writeln!(out, "cells={}", m.cells)?;
            writeln!(out, "trie_nodes={}", m.trie_nodes)?;
            writeln!(out, "build_ops={}", m.build_ops)?;
            writeln!(out, "base_cells={}", m.base_cells)?;
            writeln!(out, "fast_path_cells={}", m.fast_path_cells)?;
            writeln!(out, "fallback_cells={}", m.fallback_cells)?;
            for (len, count) in &m.per_length {
                writeln!(out, "len{len}={count}")?;
            }
        }
        Cmd::Bench {
            scenario,
            k,
            n_min,
            n_max,
            ls,
            vars,
            seed,
            k_max,
            budget,
            policy,
            redundant_parens,
            timing,
            out: path,
        } => {
            let mut cfg = build_config(&policy, "unit", budget)?;
            cfg.enum_cfg.include_redundant_parens = redundant_parens;
            let rows = match scenario.as_str() {
                "net-growth" => bench::net_growth(k, n_min..=n_max, &cfg, timing)?,
                "dsat-scaling" => {
                    let ls = if ls.is_empty() {
                        vec![100, 1_000, 10_000]
                    } else {
                        ls
                    };
                    bench::dsat_scaling(&ls, vars, seed, timing)
                }
                "cnf-blowup" => bench::cnf_blowup(k_max, budget, timing),
                "query-path" => bench::query_path(k, n_max, &cfg, timing)?,
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown scenario '{other}' (net-growth, dsat-scaling, cnf-blowup, query-path)"
                    )))
                }
            };
            with_sink(out, &path, |w| {
                writeln!(w, "{}", bench::CSV_HEADER)?;
                for row in &rows {
                    writeln!(w, "{}", row.to_csv_row())?;
                }
                Ok(())
            })?;
        }
    }
    Ok(())
}

fn build_config(policy: &str, cost_model: &str, budget: u64) -> Result<BuildConfig, CliError> {
    Ok(BuildConfig {
        policy: FallbackPolicy::from_name(policy)
            .ok_or_else(|| CliError::Usage(format!("unknown policy '{policy}'")))?,
        cost_model: CostModel::from_name(cost_model)
            .ok_or_else(|| CliError::Usage(format!("unknown cost model '{cost_model}'")))?,
        node_budget: budget,
        ..BuildConfig::default()
    })
}

/// Parse `argv` (including the program name) and run; returns the exit code.
pub fn run<I, S>(argv: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text; keep its exit semantics.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let argv = std::iter::once("boolnet").chain(args.iter().copied());
        let code = run(argv, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn classify_tautology_symbol() {
        let (code, out) = run_capture(&["classify", "x1∨¬x1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "t\n");
    }

    #[test]
    fn eval_with_assignment() {
        let (code, out) = run_capture(&["eval", "x1∧¬x1", "--assign", "x1=1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0\n");
    }

    #[test]
    fn eval_measure_flag() {
        let (code, out) = run_capture(&["eval", "x1∨x11", "--assign", "x1=0", "--assign", "x11=1", "--measure", "c"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\nl=2\n");
    }

    #[test]
    fn dsat_prints_answer_witness_stats() {
        let (code, out) = run_capture(&["dsat", "x1∧¬x1∨x11"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "SAT");
        assert!(lines[1].contains("x11=1"));
        assert_eq!(lines[2], "comparisons,sort_ops,clauses_checked,aborted_early");
    }

    #[test]
    fn parse_error_exit_code() {
        let (code, _) = run_capture(&["classify", "∧x1"]);
        assert_eq!(code, 3);
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, _) = run_capture(&["frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn bench_deterministic_csv() {
        let (c1, out1) = run_capture(&["bench", "dsat-scaling", "--l", "50", "--seed", "3"]);
        let (c2, out2) = run_capture(&["bench", "dsat-scaling", "--l", "50", "--seed", "3"]);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(out1, out2);
        assert!(out1.starts_with(bench::CSV_HEADER));
    }

    #[test]
    fn bench_net_growth_first_points() {
        let (code, out) = run_capture(&["bench", "net-growth", "--k", "1", "--n-min", "2", "--n-max", "3"]);
        assert_eq!(code, 0);
        let rows: Vec<&str> = out.lines().skip(1).collect();
        assert!(rows[0].starts_with("net-growth,1,2,1,"));
        assert!(rows[1].starts_with("net-growth,1,3,2,"));
    }
}
