//! Command-line front end for `mixcox`.
//!
//! [`run`] parses an argument vector and returns the exit code and report
//! text without touching the process, so the binary is a thin wrapper and
//! tests can drive every subcommand directly.

use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use mixcox::dickson::{dickson_e, minimal_relation_exponent, DicksonQuery};
use mixcox::enumerate::{bfs_enumerate, classify_cycle, coxeter_d_order, verify_dn_transform, DEFAULT_CAP};
use mixcox::orders::element_order;
use mixcox::presentations::{export, generate_presentation, minimality_check, verify_presentation, ExportFormat};
use mixcox::repmat::Representation;
use mixcox::taucalc::{
    dickson_suite, tau_middle_triples, verify_row_support, verify_sum_support, verify_tau_basic, verify_tau_chain,
    verify_tau_middle,
};
use mixcox::{CycleClass, EnumerationResult, Error, IdentityReport, Shape, SignedCoxeterGraph, Word};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DICKSON_MAX_R: u64 = 5;
const CHAIN_LENGTH: u32 = 3;
const SUM_SUPPORT_SEED: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { exit_code: EXIT_OK, stdout }
    }

    fn usage(message: String) -> Self {
        CommandOutcome { exit_code: EXIT_USAGE, stdout: message }
    }
}

#[derive(Parser, Debug)]
#[command(name = "mixcox", version, about = "Exact computations in mixed-sign simply-laced Coxeter groups")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Graph document (JSON)
    #[arg(long, value_name = "PATH")]
    graph: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the bilinear form and the reflection matrices
    Rep(GraphArg),
    /// Report whether the bilinear form is degenerate
    Degeneracy(GraphArg),
    /// Order of the group element named by a word
    Order {
        #[command(flatten)]
        graph: GraphArg,
        /// Space-separated 1-based generator indices, e.g. "1 2 3 2"
        #[arg(long)]
        word: String,
    },
    /// Generate the presentation of a line or cycle
    Relations {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run a verification suite
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Evaluate E_n(x, alpha) or search for its first zero
    Dickson {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_negative_numbers = true)]
        x: i64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: i64,
        /// Print the smallest relation exponent instead, or "none"
        #[arg(long, conflicts_with = "n")]
        minimal: bool,
    },
    /// Enumerate group elements breadth-first
    Enumerate {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Classify a uniformly signed cycle and gather evidence
    Classify {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Tau,
    Dickson,
    Support,
    Presentation,
    All,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `argv` (program name first) and runs the chosen subcommand.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return CommandOutcome { exit_code: code, stdout: e.render().to_string() };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(e) => CommandOutcome::usage(format!("error: {e}\n")),
    }
}

fn load_graph(path: &Path) -> CliResult<SignedCoxeterGraph> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })?;
    Ok(SignedCoxeterGraph::parse(&text)?)
}

fn load(arg: &GraphArg) -> CliResult<Representation> {
    Ok(Representation::new(load_graph(&arg.graph)?))
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> CliResult<CommandOutcome> {
    let json = cli.json;
    match &cli.command {
        Command::Rep(arg) => {
            let rep = load(arg)?;
            Ok(CommandOutcome::ok(pretty(&json!({
                "graph": rep.graph().to_document(),
                "bilinear_form": rep.bform(),
                "reflections": rep.reflections(),
            }))))
        }
        Command::Degeneracy(arg) => {
            let rep = load(arg)?;
            let degenerate = rep.is_degenerate();
            Ok(CommandOutcome::ok(if json {
                pretty(&json!({ "degenerate": degenerate, "det": rep.det_bform().to_string() }))
            } else if degenerate {
                "degenerate\n".to_string()
            } else {
                "non-degenerate\n".to_string()
            }))
        }
        Command::Order { graph, word } => {
            let rep = load(graph)?;
            let word: Word = word.parse()?;
            word.validate(rep.n())?;
            let order = element_order(&rep, &word)?;
            Ok(CommandOutcome::ok(if json {
                pretty(&json!({ "word": word, "order": order }))
            } else {
                format!("{order}\n")
            }))
        }
        Command::Relations { graph, format } => {
            let g = load_graph(&graph.graph)?;
            let format: ExportFormat = format.parse()?;
            let p = generate_presentation(&g)?;
            let format = if json { ExportFormat::Json } else { format };
            let mut out = export(&p, format);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Ok(CommandOutcome::ok(out))
        }
        Command::Verify { graph, suite } => {
            let rep = load(graph)?;
            let reports = run_suite(&rep, *suite)?;
            Ok(report_outcome(suite_name(*suite), &reports, json))
        }
        Command::Dickson { n, x, alpha, minimal } => {
            let q = DicksonQuery::new(*x, *alpha)?;
            if *minimal {
                let r = minimal_relation_exponent(q)?;
                return Ok(CommandOutcome::ok(if json {
                    pretty(&json!({ "x": x, "alpha": alpha, "minimal": r }))
                } else {
                    match r {
                        Some(r) => format!("{r}\n"),
                        None => "none\n".to_string(),
                    }
                }));
            }
            let Some(n) = n else {
                return Ok(CommandOutcome::usage("error: dickson needs --n or --minimal\n".to_string()));
            };
            let value = dickson_e(*n, q);
            Ok(CommandOutcome::ok(if json {
                pretty(&json!({ "n": n, "x": x, "alpha": alpha, "value": value.to_string() }))
            } else {
                format!("{value}\n")
            }))
        }
        Command::Enumerate { graph, cap } => {
            let rep = load(graph)?;
            let result = bfs_enumerate(&rep, *cap);
            Ok(CommandOutcome::ok(if json { pretty(&json!(result)) } else { format!("{result}\n") }))
        }
        Command::Classify { graph, cap } => classify(&load(graph)?, *cap, json),
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Tau => "tau",
        Suite::Dickson => "dickson",
        Suite::Support => "support",
        Suite::Presentation => "presentation",
        Suite::All => "all",
    }
}

/// Every index sequence of length `1..=max_len`.
fn all_chains(n: usize, max_len: u32) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|prefix| {
                (0..n).map(move |k| {
                    let mut next = prefix.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn run_suite(rep: &Representation, suite: Suite) -> CliResult<Vec<IdentityReport>> {
    let shaped = rep.graph().shape() != Shape::General;
    let mut out = Vec::new();
    if matches!(suite, Suite::Tau | Suite::All) {
        out.extend(verify_tau_basic(rep));
        let chains = all_chains(rep.n(), CHAIN_LENGTH);
        for c in &chains {
            out.push(verify_tau_chain(rep, c)?);
        }
        for c in &chains {
            out.push(verify_row_support(rep, c)?);
        }
        if shaped {
            for (i1, j, i2) in tau_middle_triples(rep.graph())? {
                out.push(verify_tau_middle(rep, i1, j, i2)?);
            }
        }
    }
    if matches!(suite, Suite::Dickson | Suite::All) {
        out.extend(dickson_suite(rep, DICKSON_MAX_R)?);
    }
    if matches!(suite, Suite::Support | Suite::All) {
        out.extend(verify_sum_support(rep, SUM_SUPPORT_SEED)?);
    }
    if matches!(suite, Suite::Presentation | Suite::All) {
        let p = generate_presentation(rep.graph())?;
        out.extend(verify_presentation(rep, &p)?);
        out.extend(minimality_check(rep, &p)?);
    }
    Ok(out)
}

fn report_outcome(suite: &str, reports: &[IdentityReport], json: bool) -> CommandOutcome {
    let failed = reports.iter().filter(|r| !r.holds).count();
    let stdout = if json {
        pretty(&json!({
            "suite": suite,
            "passed": reports.len() - failed,
            "failed": failed,
            "reports": reports,
        }))
    } else {
        let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
        s.push_str(&format!("{} passed, {} failed\n", reports.len() - failed, failed));
        s
    };
    CommandOutcome { exit_code: if failed == 0 { EXIT_OK } else { EXIT_FAILED }, stdout }
}

fn classify(rep: &Representation, cap: usize, json: bool) -> CliResult<CommandOutcome> {
    let g = rep.graph();
    let class = classify_cycle(g)?;
    let enumeration = bfs_enumerate(rep, cap);
    let mut evidence = Vec::new();
    let enumeration_agrees = match (class, enumeration) {
        (CycleClass::CoxeterD, EnumerationResult::Complete { count, .. }) => count as u128 == coxeter_d_order(g.n()),
        (CycleClass::AffineSTilde, EnumerationResult::Exceeded { .. }) => true,
        _ => false,
    };
    evidence.push(IdentityReport::from_check(
        "enumeration",
        vec![g.n()],
        enumeration_agrees,
        match (class, enumeration) {
            (CycleClass::CoxeterD, _) => format!("{enumeration}, expected {}", coxeter_d_order(g.n())),
            _ => format!("{enumeration} at cap {cap}"),
        },
    ));
    if class == CycleClass::CoxeterD {
        evidence.extend(verify_dn_transform(rep)?);
    }
    let agree = evidence.iter().all(|r| r.holds);
    let stdout = if json {
        pretty(&json!({ "class": class, "agree": agree, "evidence": evidence }))
    } else {
        let mut s = format!("{class}\n");
        for r in &evidence {
            s.push_str(&format!("{r}\n"));
        }
        s.push_str(if agree { "evidence agrees\n" } else { "evidence disagrees\n" });
        s
    };
    Ok(CommandOutcome { exit_code: if agree { EXIT_OK } else { EXIT_FAILED }, stdout })
}
