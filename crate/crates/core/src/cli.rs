//! The `cominq` command line.
//!
//! [`run`] never prints; it returns the exit code and the payload so the
//! binary and the tests share one code path. Exit codes: 0 when every
//! requested check passed, 1 on a verification failure, 2 on usage or parse
//! errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cayley::{self, MultTable, QKElement, SHIPPED_TABLE};
use crate::curve::CominSpace;
use crate::error::{Error, Result};
use crate::qconst::{self, GWTables};
use crate::report::CheckResult;
use crate::weyl::{format_word, parse_word};

pub const TABLE_ENV: &str = "COMINQ_TABLE";
pub const DEFAULT_TABLE: &str = "data/qk_e6p6.tbl";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub payload: String,
}

#[derive(Debug, Parser)]
#[command(name = "cominq", version, about = "Cominuscule Schubert calculus and QK(E6/P6)")]
struct Cli {
    /// Emit a single JSON document.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SpaceArg {
    /// Gr(m,n), LG(n), OG(n), Q(n), E6 or E7.
    #[arg(long)]
    space: String,
}

#[derive(Debug, Args)]
struct WordArgs {
    #[command(flatten)]
    space: SpaceArg,
    /// Comma-separated simple reflection indices; empty or `e` for the identity.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Root counts, highest root and cominuscule nodes.
    Roots(SpaceArg),
    /// Size and length census of W^P.
    Wp {
        #[command(flatten)]
        space: SpaceArg,
        /// Also list a reduced word for each representative.
        #[arg(long)]
        list: bool,
    },
    /// Degree distance of the minimal representative of a word.
    Dist(WordArgs),
    /// Iterated curve neighborhood.
    Gamma {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        d: usize,
    },
    /// Chain of lines from the base point.
    Chain(WordArgs),
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Cancellation sums for random coefficient functions.
    Cancel {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        dmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Compare the assembly routes for structure constants on random tables.
    Assemble {
        #[arg(long)]
        basis: usize,
        #[arg(long)]
        dmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random tables, seeded consecutively.
        #[arg(long, default_value_t = 1)]
        tables: u64,
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
        hi: i64,
        /// Print the per-sequence breakdown of one constant, as `u,v,w,d`.
        #[arg(long)]
        constant: Option<String>,
    },
    #[command(subcommand)]
    Qk(QkCommand),
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Three points lie on a curve of degree d_X(3).
    Dx3(SpaceArg),
    /// All invariants of a space.
    All(SpaceArg),
}

#[derive(Debug, Args)]
struct TableArg {
    /// Table file; defaults to $COMINQ_TABLE, then data/qk_e6p6.tbl, then the built-in copy.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum QkCommand {
    /// Product of two expressions.
    Mult {
        #[command(flatten)]
        table: TableArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// All table checks.
    Verify {
        #[command(flatten)]
        table: TableArg,
    },
}

/// What a subcommand produced before rendering.
struct Output {
    command: &'static str,
    inputs: Value,
    results: Value,
    pass: bool,
    text: String,
}

impl Output {
    fn info(command: &'static str, inputs: Value, results: Value, text: String) -> Self {
        Output { command, inputs, results, pass: true, text }
    }

    fn checks(command: &'static str, inputs: Value, checks: &[CheckResult]) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        let mut text: Vec<String> = checks
            .iter()
            .map(|c| format!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.check, c.detail))
            .collect();
        let failed = checks.iter().filter(|c| !c.pass).count();
        text.push(if pass {
            format!("all {} checks passed", checks.len())
        } else {
            format!("{failed} of {} checks failed", checks.len())
        });
        Output {
            command,
            inputs,
            results: serde_json::to_value(checks).expect("checks serialize"),
            pass,
            text: text.join("\n"),
        }
    }
}

pub fn run<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let exit_code = if err.use_stderr() { 2 } else { 0 };
            return CommandOutcome { exit_code, payload: err.render().to_string() };
        }
    };
    let json = cli.json;
    match dispatch(cli.command) {
        Ok(out) => {
            let exit_code = if out.pass { 0 } else { 1 };
            let payload = if json {
                let doc = json!({
                    "command": out.command,
                    "inputs": out.inputs,
                    "results": out.results,
                    "pass": out.pass,
                });
                serde_json::to_string_pretty(&doc).expect("json renders")
            } else {
                out.text
            };
            CommandOutcome { exit_code, payload }
        }
        Err(err) => {
            let payload = if json {
                serde_json::to_string_pretty(&json!({ "error": err.to_string(), "pass": false }))
                    .expect("json renders")
            } else {
                format!("error: {err}")
            };
            CommandOutcome { exit_code: 2, payload }
        }
    }
}

fn words(ws: &[Vec<usize>]) -> Vec<String> {
    ws.iter().map(|w| format_word(w)).collect()
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("value serializes")
}

fn dispatch(command: Command) -> Result<Output> {
    match command {
        Command::Roots(SpaceArg { space }) => {
            let x = CominSpace::parse(&space)?;
            let rs = x.root_system();
            let nodes: Vec<usize> = rs.cominuscule_nodes().into_iter().collect();
            let text = format!(
                "type {}, rank {}\npositive roots: {}\nhighest root: {}\ncominuscule nodes: {}\nnode: {}",
                rs.cartan_type(),
                rs.rank(),
                rs.positive_roots.len(),
                rs.highest_root,
                format_word(&nodes),
                x.node
            );
            let results = json!({
                "type": rs.cartan_type().to_string(),
                "rank": rs.rank(),
                "positive_roots": rs.positive_roots.len(),
                "highest_root": rs.highest_root.0,
                "cominuscule_nodes": nodes,
                "node": x.node,
            });
            Ok(Output::info("roots", json!({ "space": space }), results, text))
        }
        Command::Wp { space: SpaceArg { space }, list } => {
            let x = CominSpace::parse(&space)?;
            let sizes = x.wp.rank_sizes();
            let mut text = vec![
                format!("|W^P| = {}, dimension {}", x.wp.len(), x.dimension()),
                format!("length census: {}", sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")),
            ];
            let mut results = json!({ "size": x.wp.len(), "dimension": x.dimension(), "length_census": sizes });
            if list {
                let reps = x.wp.reps.iter().map(|u| x.word(u)).collect::<Result<Vec<_>>>()?;
                text.extend(reps.iter().map(|w| {
                    let shown = if w.is_empty() { "e".to_string() } else { format_word(w) };
                    format!("{:>3}: {shown}", w.len())
                }));
                results["representatives"] = to_json(&words(&reps));
            }
            Ok(Output::info("wp", json!({ "space": space, "list": list }), results, text.join("\n")))
        }
        Command::Dist(WordArgs { space: SpaceArg { space }, word }) => {
            let x = CominSpace::parse(&space)?;
            let u = x.wp.min_rep(&x.element(&parse_word(&word)?)?)?;
            let d = x.deg_dist(&u)?;
            let rep = format_word(&x.word(&u)?);
            let text = format!("deg_dist = {d} (representative {rep})");
            let results = json!({ "deg_dist": d, "representative": rep });
            Ok(Output::info("dist", json!({ "space": space, "word": word }), results, text))
        }
        Command::Gamma { word: WordArgs { space: SpaceArg { space }, word }, d } => {
            let x = CominSpace::parse(&space)?;
            let u = x.wp.min_rep(&x.element(&parse_word(&word)?)?)?;
            let g = x.gamma(&u, d)?;
            let w = format_word(&x.word(&g)?);
            let results = json!({
                "word": w,
                "length": g.length(),
                "is_full": g == *x.u_max(),
            });
            Ok(Output::info("gamma", json!({ "space": space, "word": word, "d": d }), results, w))
        }
        Command::Chain(WordArgs { space: SpaceArg { space }, word }) => {
            let x = CominSpace::parse(&space)?;
            let u = x.wp.min_rep(&x.element(&parse_word(&word)?)?)?;
            let chain = x.line_chain(&u)?.iter().map(|c| x.word(c)).collect::<Result<Vec<_>>>()?;
            let chain = words(&chain);
            let text = chain
                .iter()
                .enumerate()
                .map(|(i, w)| format!("{i}: {}", if w.is_empty() { "e" } else { w }))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::info("chain", json!({ "space": space, "word": word }), to_json(&chain), text))
        }
        Command::Verify(VerifyCommand::Dx3(SpaceArg { space })) => {
            let x = CominSpace::parse(&space)?;
            let report = x.verify_dx3()?;
            let checks: Vec<CheckResult> = report
                .rows
                .iter()
                .map(|r| {
                    CheckResult::new(
                        format!("dx3_d{}", r.d),
                        r.pass,
                        format!(
                            "Gamma_{}(X_{}) = X({}), X_{} = X({})",
                            r.steps,
                            r.d,
                            format_word(&r.result),
                            r.d,
                            format_word(&r.x_small)
                        ),
                    )
                })
                .collect();
            Ok(Output::checks("verify dx3", json!({ "space": space }), &checks))
        }
        Command::Verify(VerifyCommand::All(SpaceArg { space })) => {
            let x = CominSpace::parse(&space)?;
            Ok(Output::checks("verify all", json!({ "space": space }), &x.verify_all()?))
        }
        Command::Cancel { d, dmax, seed, trials } => {
            if d == 0 {
                return Err(Error::Config("cancellation sums need d >= 1".into()));
            }
            let sums = qconst::random_cancellation(d, dmax, seed, trials)?;
            let expect_zero = d > dmax;
            let pass = !expect_zero || sums.iter().all(|&s| s == 0);
            let detail = format!(
                "sums {:?}{}",
                sums,
                if expect_zero { "" } else { " (d <= dmax: no cancellation expected)" }
            );
            let check = CheckResult::new("cancellation", pass, detail);
            let mut out = Output::checks(
                "cancel",
                json!({ "d": d, "dmax": dmax, "seed": seed, "trials": trials }),
                &[check],
            );
            out.results = json!({ "sums": sums, "expect_zero": expect_zero });
            Ok(out)
        }
        Command::Assemble { basis, dmax, seed, tables, lo, hi, constant } => {
            let inputs = json!({
                "basis": basis, "dmax": dmax, "seed": seed, "tables": tables,
                "lo": lo, "hi": hi, "constant": constant,
            });
            if let Some(text) = constant {
                let idx = parse_word(&text)?;
                let [u, v, w, d] = idx[..] else {
                    return Err(Error::Word(text));
                };
                let t = GWTables::random(basis, dmax, seed, lo, hi)?;
                let report = qconst::assemble_direct(&t, u, v, w, d)?;
                let matrix = qconst::assemble_matrix(&t, u, v, w, d)?;
                let mut text: Vec<String> = report
                    .terms
                    .iter()
                    .map(|x| format!("{:>2} {} {}", if x.sign > 0 { "+" } else { "-" }, x.sequence, x.term))
                    .collect();
                text.push(format!("total {} (matrix route {matrix})", report.total));
                return Ok(Output {
                    command: "assemble",
                    inputs,
                    results: to_json(&report),
                    pass: matrix == report.total,
                    text: text.join("\n"),
                });
            }
            let mut checks = Vec::new();
            for k in 0..tables {
                let t = GWTables::random(basis, dmax, seed.wrapping_add(k), lo, hi)?;
                let c = qconst::check_oracles(&t)?;
                let detail = match c.first_mismatch {
                    None => format!("{} constants agree", c.compared),
                    Some(m) => format!("{} mismatches, first {m:?}", c.mismatches),
                };
                checks.push(CheckResult::new(
                    format!("table_seed_{}", seed.wrapping_add(k)),
                    c.mismatches == 0,
                    detail,
                ));
            }
            Ok(Output::checks("assemble", inputs, &checks))
        }
        Command::Qk(QkCommand::Mult { table, a, b }) => {
            let (t, source) = load_table(table.table.as_deref())?;
            let x: QKElement = a.parse()?;
            let y: QKElement = b.parse()?;
            let p = t.multiply(&x, &y)?.to_string();
            let inputs = json!({ "table": source, "a": a, "b": b });
            Ok(Output::info("qk mult", inputs, json!({ "product": p }), p))
        }
        Command::Qk(QkCommand::Verify { table }) => {
            let (t, source) = load_table(table.table.as_deref())?;
            let e6 = CominSpace::parse("E6")?;
            let checks = cayley::verify_table(&t, &e6)?;
            Ok(Output::checks("qk verify", json!({ "table": source }), &checks))
        }
    }
}

/// Resolves the table: flag, then `$COMINQ_TABLE`, then the default path if
/// it exists, then the copy compiled into the binary.
fn load_table(flag: Option<&Path>) -> Result<(MultTable, String)> {
    let path = flag
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(TABLE_ENV).map(PathBuf::from))
        .or_else(|| Some(PathBuf::from(DEFAULT_TABLE)).filter(|p| p.is_file()));
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| Error::Io(format!("cannot read {}: {e}", p.display())))?;
            Ok((cayley::parse_table(&text)?, p.display().to_string()))
        }
        None => Ok((cayley::parse_table(SHIPPED_TABLE)?, "<built-in>".into())),
    }
}
