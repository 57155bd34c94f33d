//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use laperm_core::charpoly::coefficient_identities_hold;
use laperm_core::closed_forms::FormulaId;
use laperm_core::enumeration::{enumerate_all, rank_by_permanent_with, ClassKind, ClassQuery, FamilyIndex};
use laperm_core::families::{build, FamilySpec};
use laperm_core::transforms::GraftMove;
use laperm_core::verify::{verify_theorem_with, Status, TheoremId, VerifyParams};
use laperm_core::{char_poly, dominance_compare, laplacian_permanent, Graph, GraphKind};
use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::io::{parse_graph, read_text, write_edge_list, InputError, InputFormat};
use crate::report::{self, document, graph_json, num, paired};

/// Environment variable replacing the default enumeration bounds.
pub const MAX_N_VAR: &str = "LAPERM_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "laperm",
    version,
    about = "Laplacian permanents of trees and unicyclic graphs"
)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for permanent evaluation over a class.
    #[arg(long, global = true, value_name = "K", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when omitted or `-`.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: InputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyEmit {
    Graph,
    Perm,
    Coeffs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformEmit {
    Graph,
    Perm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CompareMode {
    Perm,
    Dominance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Trees,
    Unicyclic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Laplacian permanent of a graph.
    Perm(InputArgs),
    /// Build a named family member, e.g. "D(3,5)" or "C4(1^2 0, 1^1 0, 0, 0)".
    Family {
        spec: String,
        #[arg(long, value_enum, default_value = "perm")]
        emit: FamilyEmit,
    },
    /// Apply a grafting move, e.g. --move "op1(u=0,v=1,w=2)".
    Transform {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "move", value_name = "MOVE")]
        graft: String,
        #[arg(long, value_enum, default_value = "graph")]
        emit: TransformEmit,
    },
    /// List or rank a class of trees or bipartite unicyclic graphs.
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        /// Smaller colour class; requires --q or derives it as n - p.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        diameter_at_least: Option<usize>,
        #[arg(long)]
        matching: Option<usize>,
        /// Report only the k smallest by permanent.
        #[arg(long, value_name = "K")]
        rank: Option<usize>,
    },
    /// Check an extremal result over an enumerated class.
    Verify {
        /// One of T32, T33, T36, T37, T38, T39, L34, R1, R3.
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Diameter bound, T36 only.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Laplacian characteristic polynomial coefficients c_0..c_n.
    Coeffs(InputArgs),
    /// Compare two graphs by permanent or by coefficient dominance.
    Compare {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "perm")]
        mode: CompareMode,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
    },
    /// Evaluate a closed form, e.g. "Broom(10,4)" or "lemma34(7,2,3)".
    Formula { id: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Perm(_) => "perm",
            Command::Family { .. } => "family",
            Command::Transform { .. } => "transform",
            Command::Enumerate { .. } => "enumerate",
            Command::Verify { .. } => "verify",
            Command::Coeffs(_) => "coeffs",
            Command::Compare { .. } => "compare",
            Command::Formula { .. } => "formula",
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Core(#[from] laperm_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Core(laperm_core::Error::Parse(_)) => "usage",
            CliError::Core(_) => "computation",
            CliError::Usage(_) => "usage",
        }
    }
}

/// Output of one subcommand.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub refuted: bool,
}

impl Outcome {
    fn new(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            refuted: false,
        }
    }
}

pub struct Context<'a> {
    pub stdin: &'a mut dyn Read,
    pub threads: usize,
    pub max_n: Option<usize>,
}

/// Parses `argv`, runs, writes the report and returns the exit status.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    max_n: Option<&str>,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    let name = cli.command.name();
    let max_n = match max_n.map(|s| s.trim().parse::<usize>()) {
        None => None,
        Some(Ok(v)) => Some(v),
        Some(Err(_)) => {
            let _ = writeln!(stderr, "error: {MAX_N_VAR} must be a non-negative integer");
            return 2;
        }
    };
    let mut ctx = Context {
        stdin,
        threads: cli.threads as usize,
        max_n,
    };
    match execute(&cli.command, &mut ctx) {
        Ok(out) => {
            if cli.json {
                let _ = writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&document(name, out.json)).unwrap()
                );
            } else {
                let _ = write!(stdout, "{}", out.text);
            }
            if out.refuted {
                1
            } else {
                0
            }
        }
        Err(e) => {
            if cli.json {
                let doc = report::error_document(name, e.kind(), &e.to_string());
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// Evaluates permanents on `threads` workers; the output order matches the
/// input order.
pub fn threaded_permanents(graphs: &[Graph], threads: usize) -> laperm_core::Result<Vec<BigInt>> {
    if threads <= 1 || graphs.len() < 2 {
        return graphs.iter().map(laplacian_permanent).collect();
    }
    let chunk = graphs.len().div_ceil(threads);
    thread::scope(|s| {
        let handles: Vec<_> = graphs
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(laplacian_permanent)
                        .collect::<laperm_core::Result<Vec<_>>>()
                })
            })
            .collect();
        let mut out = Vec::with_capacity(graphs.len());
        for h in handles {
            out.extend(h.join().expect("permanent worker panicked")?);
        }
        Ok(out)
    })
}

fn read_graph(args: &InputArgs, ctx: &mut Context<'_>) -> Result<Graph, CliError> {
    let text = read_text(args.input.as_deref(), ctx.stdin)?;
    Ok(parse_graph(&text, args.format)?)
}

fn kind_name(g: &Graph) -> &'static str {
    match g.classify() {
        Ok(GraphKind::Tree) => "tree",
        Ok(GraphKind::Unicyclic) => "unicyclic",
        Ok(_) => "other",
        Err(_) => "disconnected",
    }
}

fn bipartition(n: usize, p: Option<usize>, q: Option<usize>) -> Result<Option<(usize, usize)>, CliError> {
    let pair = match (p, q) {
        (None, None) => return Ok(None),
        (Some(p), Some(q)) => (p, q),
        (Some(p), None) => (
            p,
            n.checked_sub(p)
                .ok_or_else(|| CliError::Usage("--p exceeds --n".into()))?,
        ),
        (None, Some(q)) => (
            n.checked_sub(q)
                .ok_or_else(|| CliError::Usage("--q exceeds --n".into()))?,
            q,
        ),
    };
    if pair.0 + pair.1 != n {
        return Err(CliError::Usage(format!(
            "--p {} and --q {} do not add up to --n {n}",
            pair.0, pair.1
        )));
    }
    Ok(Some((pair.0.min(pair.1), pair.0.max(pair.1))))
}

pub fn execute(command: &Command, ctx: &mut Context<'_>) -> Result<Outcome, CliError> {
    match command {
        Command::Perm(input) => {
            let g = read_graph(input, ctx)?;
            let value = laplacian_permanent(&g)?;
            let text = format!(
                "n={} edges={} kind={}\nper L = {value}\n",
                g.order(),
                g.size(),
                kind_name(&g)
            );
            let json = json!({ "graph": graph_json(&g), "kind": kind_name(&g), "permanent": num(&value) });
            Ok(Outcome::new(text, json))
        }
        Command::Family { spec, emit } => family(spec, *emit),
        Command::Transform { input, graft, emit } => {
            let g = read_graph(input, ctx)?;
            let mv: GraftMove = graft.parse()?;
            let h = mv.apply(&g)?;
            let mut json = json!({ "move": mv.to_string(), "graph": graph_json(&h) });
            let text = match emit {
                TransformEmit::Graph => write_edge_list(&h),
                TransformEmit::Perm => {
                    let (before, after) = (laplacian_permanent(&g)?, laplacian_permanent(&h)?);
                    json["before"] = num(&before);
                    json["after"] = num(&after);
                    json["decreased"] = Value::Bool(after < before);
                    let verdict = if after < before { "decreased" } else { "NOT decreased" };
                    format!("{mv}\nbefore {before}\nafter  {after}\n{verdict}\n")
                }
            };
            Ok(Outcome::new(text, json))
        }
        Command::Enumerate {
            class,
            n,
            p,
            q,
            diameter_at_least,
            matching,
            rank,
        } => {
            let kind = match class {
                ClassArg::Trees => ClassKind::Trees,
                ClassArg::Unicyclic => ClassKind::BipartiteUnicyclic,
            };
            let mut query = ClassQuery::new(kind, *n).with_max_order(ctx.max_n);
            query.bipartition = bipartition(*n, *p, *q)?;
            query.diameter_at_least = *diameter_at_least;
            query.matching_number = *matching;
            enumerate(&query, *rank, ctx.threads)
        }
        Command::Verify { theorem, n, p, q, d } => {
            let id: TheoremId = theorem.parse()?;
            if d.is_some() && id != TheoremId::T36 {
                return Err(CliError::Usage("--d applies to T36 only".into()));
            }
            let mut params = VerifyParams::new(*n).with_max_order(ctx.max_n);
            params.p = bipartition(*n, *p, *q)?.map(|(p, _)| p);
            params.d = *d;
            let threads = ctx.threads;
            let eval = move |gs: &[Graph]| threaded_permanents(gs, threads);
            let r = verify_theorem_with(id, &params, &eval)?;
            Ok(Outcome {
                text: report::verification_text(&r),
                json: report::verification_json(&r),
                refuted: r.status == Status::Refuted,
            })
        }
        Command::Coeffs(input) => {
            let g = read_graph(input, ctx)?;
            let poly = char_poly(&g)?;
            let cs: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
            let sane = if g.is_connected() {
                Some(coefficient_identities_hold(&g, &poly)?)
            } else {
                None
            };
            let mut text = format!("c_0..c_{} = {}\n", g.order(), cs.join(" "));
            if let Some(ok) = sane {
                let _ = writeln!(
                    text,
                    "identities c0=1, c1=2|E|, cn=0, c(n-1)=n*tau: {}",
                    if ok { "hold" } else { "FAIL" }
                );
            }
            let json =
                json!({ "graph": graph_json(&g), "coefficients": report::coeffs_json(&poly), "identities_hold": sane });
            Ok(Outcome::new(text, json))
        }
        Command::Compare {
            first,
            second,
            mode,
            format,
        } => {
            let a = parse_graph(&read_text(Some(first), ctx.stdin)?, *format)?;
            let b = parse_graph(&read_text(Some(second), ctx.stdin)?, *format)?;
            compare(&a, &b, *mode)
        }
        Command::Formula { id } => formula(id),
    }
}

fn family(text: &str, emit: FamilyEmit) -> Result<Outcome, CliError> {
    let spec: FamilySpec = text.parse()?;
    let g = build(&spec)?;
    let mut json = json!({ "family": spec.to_string(), "graph": graph_json(&g) });
    let text = match emit {
        FamilyEmit::Graph => write_edge_list(&g),
        FamilyEmit::Perm => {
            let engine = laplacian_permanent(&g)?;
            let formula = FormulaId::for_family(&spec);
            let closed = formula.map(|f| f.eval()).transpose()?;
            json["permanent"] = num(&engine);
            json["formula"] = formula.map_or(Value::Null, |f| Value::String(f.to_string()));
            json["closed_form"] = report::opt_num(closed.as_ref());
            json["equal"] = closed.as_ref().map_or(Value::Null, |c| Value::Bool(*c == engine));
            format!("{spec}: {}\n", paired(closed.as_ref(), &engine))
        }
        FamilyEmit::Coeffs => {
            let poly = char_poly(&g)?;
            json["coefficients"] = report::coeffs_json(&poly);
            let cs: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
            format!("{spec}: c_0..c_{} = {}\n", g.order(), cs.join(" "))
        }
    };
    Ok(Outcome::new(text, json))
}

fn enumerate(query: &ClassQuery, rank: Option<usize>, threads: usize) -> Result<Outcome, CliError> {
    if let Some(k) = rank {
        let eval = move |gs: &[Graph]| threaded_permanents(gs, threads);
        let r = rank_by_permanent_with(query, k, &eval)?;
        let text = format!(
            "{query}: class size {}\n{}",
            r.class_size,
            report::ranked_text(&r.entries)
        );
        let json = json!({
            "query": query.to_string(),
            "class_size": num(r.class_size),
            "ranked": report::ranked_json(&r.entries),
        });
        return Ok(Outcome::new(text, json));
    }
    let graphs = enumerate_all(query)?;
    let index = FamilyIndex::for_kind(query.kind, query.n, query.limit().max(laperm_core::canon::CANON_LIMIT))?;
    let mut text = format!("{query}: {} graphs\n", graphs.len());
    let mut listed = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let family = index.recognize_graph(g)?.map(|f| f.to_string());
        let _ = writeln!(text, "# {} {}", i + 1, family.as_deref().unwrap_or("unrecognized"));
        text.push_str(&write_edge_list(g));
        listed.push(json!({ "family": family, "graph": graph_json(g) }));
    }
    let json = json!({ "query": query.to_string(), "class_size": num(graphs.len()), "graphs": listed });
    Ok(Outcome::new(text, json))
}

fn compare(a: &Graph, b: &Graph, mode: CompareMode) -> Result<Outcome, CliError> {
    match mode {
        CompareMode::Perm => {
            let (x, y) = (laplacian_permanent(a)?, laplacian_permanent(b)?);
            let rel = match x.cmp(&y) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            let text = format!("per L(first) = {x}\nper L(second) = {y}\nfirst {rel} second\n");
            let json = json!({ "mode": "perm", "first": num(&x), "second": num(&y), "relation": rel });
            Ok(Outcome::new(text, json))
        }
        CompareMode::Dominance => {
            let (pa, pb) = (char_poly(a)?, char_poly(b)?);
            let rel = dominance_compare(&pa, &pb)?;
            let text = format!("coefficients: {}\n", rel.as_str());
            let json = json!({
                "mode": "dominance",
                "first": report::coeffs_json(&pa),
                "second": report::coeffs_json(&pb),
                "relation": rel.as_str(),
            });
            Ok(Outcome::new(text, json))
        }
    }
}

fn formula(text: &str) -> Result<Outcome, CliError> {
    let id: FormulaId = text.parse()?;
    let value = id.eval()?;
    let family = id.family()?;
    let engine = match &family {
        Some(spec) => Some(laplacian_permanent(&build(spec)?)?),
        None => None,
    };
    let text = match (&family, &engine) {
        (Some(spec), Some(e)) => format!("{id} = {value}\n{spec}: {}\n", paired(Some(&value), e)),
        _ => format!("{id} = {value}\n"),
    };
    let json = json!({
        "formula": id.to_string(),
        "value": num(&value),
        "family": family.as_ref().map(|f| f.to_string()),
        "engine": report::opt_num(engine.as_ref()),
        "equal": engine.as_ref().map(|e| *e == value),
    });
    Ok(Outcome::new(text, json))
}
