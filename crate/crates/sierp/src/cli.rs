//! The `sierp` command line. Every command prints one JSON payload; the exit
//! code is 0 for a true verdict or success, 1 for a false verdict, and 2 for
//! errors and indeterminate answers.

use std::error::Error;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sierpinski_core::classes::{
    check_b_star, find_a_membership, find_b_membership, verify_a_certificate, verify_b_certificate, AClassCertificate,
    ClassError, ClassSignature, Colouring, SearchBounds, SearchOptions,
};
use sierpinski_core::classification::{
    check_k4b, check_rb, check_siepol, compatible_boundary_order, decompose_regular_planar, scenario_of, table2_case,
    ClassificationError,
};
use sierpinski_core::connectivity::{
    classify_minimal_cut, image_size_bound, kc_hypotheses, separating_vertex_characterization, vertex_connectivity,
    SeparationKind,
};
use sierpinski_core::embedding::{is_outerplanar, is_polyhedron, test_planarity, PlaneGraph};
use sierpinski_core::generators::{
    a22_from_cycles, b5_111_family, delete_two_adjacent_edges, delete_vertex_from_cubic, expand_all, generate,
    glue_a211, glue_two_copies, truncate, A22Spec, AMember, BMember, FamilySpec, GluePattern,
};
use sierpinski_core::oracles::{
    brute_connectivity, brute_planarity, canonical_form, is_isomorphic, OracleError, OracleReport,
};
use sierpinski_core::products::{lex_product, sierpinski, ProductIndex};
use sierpinski_core::{Graph, VertexMap};

use crate::corpus;
use crate::io::{self, graph6, Format, MapJson};
use crate::sweeps::{self, SweepConfig};

/// Overrides the vertex bound of the embedding-aware membership searches.
pub const SEARCH_BOUND_VAR: &str = "SIERP_SEARCH_BOUND";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub code: i32,
    pub payload: Value,
}

type BoxError = Box<dyn Error + Send + Sync>;
type CmdResult = Result<Outcome, BoxError>;

enum Outcome {
    Verdict(bool, Value),
    Done(Value),
    Indeterminate(String),
}

#[derive(Debug, Parser)]
#[command(name = "sierp", version, about = "Sierpinski products: construction, checks, classification, sweeps")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Debug, Args)]
struct Global {
    /// Vertex map as a JSON file or inline JSON
    #[arg(long, global = true)]
    map: Option<String>,
    /// Certificate JSON file
    #[arg(long, global = true)]
    cert: Option<PathBuf>,
    /// Output path for graphs and reports
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output graph format; defaults to the extension of --out, else graph6
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Sweep worker threads (0 = one per core)
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Process only the first N work items of a sweep
    #[arg(long, global = true)]
    limit: Option<usize>,
    /// Accepted for reproducibility; every search here is deterministic
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build products
    #[command(subcommand)]
    Product(ProductCmd),
    /// Connectivity and planarity checks
    #[command(subcommand)]
    Check(CheckCmd),
    /// Colour-class membership
    #[command(subcommand)]
    Class(ClassCmd),
    /// Classification of regular and polyhedral products
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Graph families and class-member constructions
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Exhaustive sweeps
    #[command(subcommand)]
    Sweep(SweepCmd),
    /// Brute-force oracles
    #[command(subcommand)]
    Oracle(OracleCmd),
}

/// Two factors followed by an optional map (when --map is absent) and any
/// command-specific values.
#[derive(Debug, Args)]
struct Factors {
    a: String,
    b: String,
    rest: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum ProductCmd {
    /// A ⊗_f B; indices are a·|V(B)| + b
    Sierpinski(Factors),
    /// Lexicographic product A ∘ B
    Lex { a: String, b: String },
}

#[derive(Debug, Subcommand)]
enum CheckCmd {
    /// Whether (a, b) separates A ⊗_f B: A B [map] a b
    Sep(Factors),
    /// Hypotheses for k-connectivity of A ⊗_f B: A B [map] k
    Kc(Factors),
    /// Classify a minimal cut given as product indices: A B [map] v...
    Cut(Factors),
    /// Image size bound for 3-connectivity: A B [map]
    ImageBound(Factors),
    Planar {
        g: String,
    },
    Outerplanar {
        g: String,
    },
    Polyhedron {
        g: String,
    },
    Connectivity {
        g: String,
    },
}

#[derive(Debug, Subcommand)]
enum ClassCmd {
    #[command(name = "find-a", alias = "find-A")]
    FindA { g: String, sig: String },
    /// Verify the certificate given with --cert
    #[command(name = "check-a", alias = "check-A")]
    CheckA { g: String },
    #[command(name = "find-b", alias = "find-B")]
    FindB { g: String, r: usize, sig: String },
    #[command(name = "check-b-star", alias = "check-Bstar")]
    CheckBStar { g: String, r: usize },
    /// Membership search over a graph6 corpus; true when no member is found
    Scan { corpus: PathBuf, sig: String },
}

#[derive(Debug, Subcommand)]
enum ClassifyCmd {
    Scenario(Factors),
    Table2(Factors),
    Decompose(Factors),
    Siepol(Factors),
    BoundaryOrder {
        a: String,
    },
    /// K4 ⊗_f B: B [map]
    K4b {
        b: String,
        rest: Vec<String>,
    },
    Rb {
        a: String,
    },
}

#[derive(Debug, Subcommand)]
enum GenerateCmd {
    /// Truncation of a polyhedron (embedding is unique)
    Truncate {
        g: String,
    },
    /// Vertex expansion of an A(2,2) member given by --cert
    Expand {
        g: String,
    },
    DeleteVertex {
        g: String,
        v: usize,
    },
    DeleteEdges {
        g: String,
        v: usize,
        u: usize,
        w: usize,
    },
    B5 {
        h: usize,
    },
    /// Two copies of the --cert member glued along red edges "u,v" and "x,y"
    Glue {
        g: String,
        e1: String,
        e2: String,
    },
    /// Two A(2,1,1) members from a JSON description
    Glue211 {
        spec: PathBuf,
    },
    /// A(2,2) member from black, red and blue cycles in a JSON file
    A22 {
        spec: PathBuf,
    },
    /// <family> <param>, e.g. `prism 5` or `platonic icosahedron`
    #[command(external_subcommand)]
    Family(Vec<String>),
}

#[derive(Debug, Args)]
struct FactorBounds {
    #[arg(long = "max-a", alias = "maxA", default_value_t = 4)]
    max_a: usize,
    #[arg(long = "max-b", alias = "maxB", default_value_t = 4)]
    max_b: usize,
}

#[derive(Debug, Subcommand)]
enum SweepCmd {
    ThmSep(FactorBounds),
    ThmKc(FactorBounds),
    PropKc {
        #[command(flatten)]
        bounds: FactorBounds,
        #[arg(long, default_value_t = 3)]
        max_cut: usize,
    },
    Lex {
        #[arg(long = "max-a", alias = "maxA", default_value_t = 6)]
        max_a: usize,
    },
    Aa {
        #[arg(long = "max-a", alias = "maxA", default_value_t = 6)]
        max_a: usize,
    },
    K4b {
        #[arg(long = "max-b", alias = "maxB", default_value_t = 7)]
        max_b: usize,
    },
    Rb {
        corpus: PathBuf,
    },
    Planarity {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    Scan {
        corpus: PathBuf,
        sig: String,
    },
    /// Connected d-regular planar graphs on n vertices as graph6
    Corpus {
        n: usize,
        d: usize,
    },
    /// Structured search for 16-vertex A(2,1,1) members
    A211,
}

#[derive(Debug, Subcommand)]
enum OracleCmd {
    Connectivity { g: String },
    Planarity { g: String },
    Isomorphic { g: String, h: String },
    Canonical { g: String },
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandResult { code: 0, payload: json!({ "help": text }) }
                }
                _ => CommandResult { code: 2, payload: json!({ "error": "usage", "usage": text }) },
            };
        }
    };
    let outcome = dispatch(&cli);
    let mut result = match outcome {
        Ok(Outcome::Verdict(v, payload)) => {
            CommandResult { code: if v { 0 } else { 1 }, payload: with_verdict(payload, Some(v)) }
        }
        Ok(Outcome::Done(payload)) => CommandResult { code: 0, payload },
        Ok(Outcome::Indeterminate(reason)) => {
            CommandResult { code: 2, payload: json!({ "verdict": null, "indeterminate": reason }) }
        }
        Err(e) => CommandResult { code: 2, payload: json!({ "error": e.to_string() }) },
    };
    if let (Some(seed), Value::Object(m)) = (cli.global.seed, &mut result.payload) {
        m.insert("seed".into(), json!(seed));
    }
    result
}

fn with_verdict(payload: Value, v: Option<bool>) -> Value {
    match payload {
        Value::Object(mut m) => {
            m.insert("verdict".into(), json!(v));
            Value::Object(m)
        }
        other => json!({ "verdict": v, "result": other }),
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Product(c) => product(c, g),
        Command::Check(c) => check(c, g),
        Command::Class(c) => class(c, g),
        Command::Classify(c) => classify(c, g),
        Command::Generate(c) => generate_cmd(c, g),
        Command::Sweep(c) => sweep(c, g),
        Command::Oracle(c) => oracle(c),
    }
}

// ---- input helpers ----

fn graph(source: &str) -> Result<Graph, BoxError> {
    Ok(io::read_graph(source)?)
}

fn signature(text: &str) -> Result<ClassSignature, BoxError> {
    let parts = text
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("signature {text:?}: {e}"))?;
    Ok(ClassSignature::new(parts)?)
}

fn map_from(source: &str, codomain: usize) -> Result<VertexMap, BoxError> {
    let text = source.trim();
    let json: MapJson = if text.starts_with('[') || text.starts_with('{') {
        serde_json::from_str(text)?
    } else {
        io::read_json(Path::new(source))?
    };
    Ok(json.into_map(codomain)?)
}

/// Splits `rest` into the map source and `tail` trailing values, taking the
/// map from --map when it is not given positionally.
fn map_and_tail<'r>(
    rest: &'r [String],
    tail: Option<usize>,
    global: &'r Global,
) -> Result<(&'r str, &'r [String]), BoxError> {
    let positional = match tail {
        Some(t) => rest.len() == t + 1,
        None => global.map.is_none() && !rest.is_empty(),
    };
    if positional {
        return Ok((&rest[0], &rest[1..]));
    }
    match &global.map {
        Some(m) if tail.is_none_or(|t| rest.len() == t) => Ok((m, rest)),
        Some(_) => Err(format!("expected {} values after the factors", tail.unwrap_or(0)).into()),
        None => Err("a vertex map is required (positional or --map)".into()),
    }
}

fn factors(
    f: &Factors,
    tail: Option<usize>,
    global: &Global,
) -> Result<(Graph, Graph, VertexMap, Vec<String>), BoxError> {
    let a = graph(&f.a)?;
    let b = graph(&f.b)?;
    let (src, rest) = map_and_tail(&f.rest, tail, global)?;
    let map = map_from(src, b.n())?;
    Ok((a, b, map, rest.to_vec()))
}

fn parse_usize(s: &str) -> Result<usize, BoxError> {
    s.parse::<usize>().map_err(|e| format!("{s:?}: {e}").into())
}

fn parse_edge(s: &str) -> Result<(usize, usize), BoxError> {
    let (u, v) = s.split_once(',').ok_or_else(|| format!("edge {s:?} should be u,v"))?;
    Ok((parse_usize(u.trim())?, parse_usize(v.trim())?))
}

fn search_options() -> Result<SearchOptions, BoxError> {
    let mut opts = SearchOptions::default();
    if let Ok(v) = std::env::var(SEARCH_BOUND_VAR) {
        let bound = v.trim().parse::<usize>().map_err(|e| format!("{SEARCH_BOUND_VAR}={v:?}: {e}"))?;
        opts.bounds = SearchBounds::uniform(bound);
    }
    Ok(opts)
}

fn sweep_config(g: &Global) -> SweepConfig {
    SweepConfig { workers: g.workers, limit: g.limit }
}

// ---- output helpers ----

fn graph_summary(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edge_count(), "graph6": graph6::encode(g) })
}

/// Writes `g` to --out when given and returns its summary.
fn emit_graph(g: &Graph, global: &Global) -> Result<Value, BoxError> {
    let mut summary = graph_summary(g);
    if let Some(path) = &global.out {
        let format = global.format.unwrap_or_else(|| Format::from_path(path));
        io::write_graph(path, g, format)?;
        summary["written"] = json!(path);
    } else if let Some(format) = global.format {
        summary["text"] = json!(io::encode(g, format));
    }
    Ok(summary)
}

fn emit_report<T: Serialize>(report: &T, global: &Global) -> Result<Value, BoxError> {
    let value = serde_json::to_value(report)?;
    if let Some(path) = &global.out {
        fs::write(path, serde_json::to_string_pretty(&value)? + "\n")?;
    }
    Ok(value)
}

fn class_error(e: ClassError) -> CmdResult {
    match e {
        ClassError::SearchRefused { .. } => Ok(Outcome::Indeterminate(e.to_string())),
        e => Err(e.into()),
    }
}

fn classification_error(e: ClassificationError) -> CmdResult {
    match e {
        ClassificationError::Class(c) => class_error(c),
        e => Err(e.into()),
    }
}

fn oracle_error(e: OracleError) -> CmdResult {
    Ok(Outcome::Indeterminate(e.to_string()))
}

// ---- commands ----

#[derive(Serialize)]
struct IndexSidecar {
    convention: &'static str,
    a_vertices: usize,
    b_vertices: usize,
    pairs: Vec<(usize, usize)>,
}

fn product(cmd: &ProductCmd, global: &Global) -> CmdResult {
    match cmd {
        ProductCmd::Sierpinski(f) => {
            let (a, b, map, _) = factors(f, Some(0), global)?;
            let p = sierpinski(&a, &b, &map)?;
            let mut payload = emit_graph(&p, global)?;
            let idx = ProductIndex::new(a.n(), b.n());
            let sidecar = IndexSidecar {
                convention: "a * |V(B)| + b",
                a_vertices: a.n(),
                b_vertices: b.n(),
                pairs: (0..idx.len()).map(|v| idx.pair(v)).collect(),
            };
            if let Some(path) = &global.out {
                let mut side = path.clone().into_os_string();
                side.push(".index.json");
                fs::write(&side, serde_json::to_string(&sidecar)? + "\n")?;
                payload["index"] = json!(PathBuf::from(side));
            }
            payload["convention"] = json!(sidecar.convention);
            Ok(Outcome::Done(payload))
        }
        ProductCmd::Lex { a, b } => {
            let p = lex_product(&graph(a)?, &graph(b)?);
            Ok(Outcome::Done(emit_graph(&p, global)?))
        }
    }
}

fn check(cmd: &CheckCmd, global: &Global) -> CmdResult {
    match cmd {
        CheckCmd::Sep(f) => {
            let (a, b, map, rest) = factors(f, Some(2), global)?;
            let (x, y) = (parse_usize(&rest[0])?, parse_usize(&rest[1])?);
            let cert = separating_vertex_characterization(&a, &b, &map, x, y)?;
            let separating = cert.kind != SeparationKind::NotSeparating;
            Ok(Outcome::Verdict(separating, json!({ "certificate": cert })))
        }
        CheckCmd::Kc(f) => {
            let (a, b, map, rest) = factors(f, Some(1), global)?;
            let k = parse_usize(&rest[0])?;
            Ok(Outcome::Verdict(kc_hypotheses(&a, &b, &map, k), json!({ "k": k })))
        }
        CheckCmd::Cut(f) => {
            let (a, b, map, rest) = factors(f, None, global)?;
            let cut = rest.iter().map(|s| parse_usize(s)).collect::<Result<Vec<_>, _>>()?;
            match classify_minimal_cut(&a, &b, &map, &cut) {
                Ok(class) => Ok(Outcome::Verdict(true, json!({ "class": class }))),
                Err(e) => Ok(Outcome::Verdict(false, json!({ "reason": e.to_string() }))),
            }
        }
        CheckCmd::ImageBound(f) => {
            let (_, b, map, _) = factors(f, Some(0), global)?;
            let bound = image_size_bound(&b, &map);
            Ok(Outcome::Verdict(bound.passes, json!({ "bound": bound })))
        }
        CheckCmd::Planar { g } => {
            let verdict = test_planarity(&graph(g)?);
            Ok(Outcome::Verdict(verdict.planar, json!({ "certificate": verdict })))
        }
        CheckCmd::Outerplanar { g } => {
            let verdict = is_outerplanar(&graph(g)?);
            Ok(Outcome::Verdict(verdict.outerplanar, json!({ "certificate": verdict })))
        }
        CheckCmd::Polyhedron { g } => Ok(Outcome::Verdict(is_polyhedron(&graph(g)?), json!({}))),
        CheckCmd::Connectivity { g } => {
            let k = vertex_connectivity(&graph(g)?)?;
            Ok(Outcome::Done(json!({ "connectivity": k })))
        }
    }
}

fn class(cmd: &ClassCmd, global: &Global) -> CmdResult {
    match cmd {
        ClassCmd::FindA { g, sig } => {
            let g = graph(g)?;
            match find_a_membership(&g, &signature(sig)?, &search_options()?) {
                Ok(Some(cert)) => {
                    if let Some(path) = &global.out {
                        fs::write(path, serde_json::to_string_pretty(&cert)? + "\n")?;
                    }
                    Ok(Outcome::Verdict(true, json!({ "certificate": cert })))
                }
                Ok(None) => Ok(Outcome::Verdict(false, json!({ "certificate": null }))),
                Err(e) => class_error(e),
            }
        }
        ClassCmd::CheckA { g } => {
            let path = global.cert.as_ref().ok_or("check-a needs --cert")?;
            let cert: AClassCertificate = io::read_json(path)?;
            Ok(Outcome::Verdict(verify_a_certificate(&graph(g)?, &cert)?, json!({})))
        }
        ClassCmd::FindB { g, r, sig } => {
            let g = graph(g)?;
            let cert = find_b_membership(&g, *r, &signature(sig)?)?;
            if let (Some(c), Some(path)) = (&cert, &global.out) {
                fs::write(path, serde_json::to_string_pretty(c)? + "\n")?;
            }
            Ok(Outcome::Verdict(cert.is_some(), json!({ "certificate": cert })))
        }
        ClassCmd::CheckBStar { g, r } => {
            let g = graph(g)?;
            let mut payload = json!({ "cut_condition": check_b_star(&g, *r) });
            let verdict = match &global.cert {
                Some(path) => {
                    let cert = io::read_json(path)?;
                    let ok = verify_b_certificate(&g, &cert)?;
                    payload["certificate_valid"] = json!(ok);
                    ok && check_b_star(&g, *r)
                }
                None => check_b_star(&g, *r),
            };
            Ok(Outcome::Verdict(verdict, payload))
        }
        ClassCmd::Scan { corpus, sig } => {
            let graphs = corpus::read_file(corpus)?;
            let report = sweeps::scan(&signature(sig)?, &graphs, &sweep_config(global))?;
            let empty = report.members.is_empty();
            let refused = !report.refusals.is_empty();
            let payload = emit_report(&report, global)?;
            if empty && refused {
                return Ok(Outcome::Indeterminate(format!(
                    "{} graphs refused by the search bound",
                    report.refusals.len()
                )));
            }
            Ok(Outcome::Verdict(empty, json!({ "report": payload })))
        }
    }
}

fn classify(cmd: &ClassifyCmd, global: &Global) -> CmdResult {
    match cmd {
        ClassifyCmd::Scenario(f) => {
            let (a, b, map, _) = factors(f, Some(0), global)?;
            match scenario_of(&a, &b, &map) {
                Ok(v) => Ok(Outcome::Verdict(v.scenario.is_some(), json!({ "scenario": v }))),
                Err(e) => classification_error(e),
            }
        }
        ClassifyCmd::Table2(f) => {
            let (a, b, map, _) = factors(f, Some(0), global)?;
            match table2_case(&a, &b, &map) {
                Ok(v) => Ok(Outcome::Verdict(v.case.is_some(), json!({ "table2": v }))),
                Err(e) => classification_error(e),
            }
        }
        ClassifyCmd::Decompose(f) => {
            let (a, b, map, _) = factors(f, Some(0), global)?;
            match decompose_regular_planar(&a, &b, &map) {
                Ok(d) => Ok(Outcome::Verdict(d.is_some(), json!({ "decomposition": d }))),
                Err(e) => classification_error(e),
            }
        }
        ClassifyCmd::Siepol(f) => {
            let (a, b, map, _) = factors(f, Some(0), global)?;
            match check_siepol(&a, &b, &map) {
                Ok(w) => Ok(Outcome::Verdict(w.is_some(), json!({ "witness": w }))),
                Err(e) => classification_error(e),
            }
        }
        ClassifyCmd::BoundaryOrder { a } => {
            let order = compatible_boundary_order(&graph(a)?);
            Ok(Outcome::Verdict(order.order.is_some(), json!({ "boundary_order": order })))
        }
        ClassifyCmd::K4b { b, rest } => {
            let b = graph(b)?;
            let (src, _) = map_and_tail(rest, Some(0), global)?;
            let map = map_from(src, b.n())?;
            match check_k4b(&b, &map) {
                Ok(r) => Ok(Outcome::Verdict(r.holds(), json!({ "conditions": r }))),
                Err(e) => classification_error(e),
            }
        }
        ClassifyCmd::Rb { a } => {
            let rb = check_rb(&graph(a)?);
            Ok(Outcome::Verdict(rb.is_some(), json!({ "assignment": rb })))
        }
    }
}

#[derive(Deserialize)]
struct GlueSide {
    /// graph6 string or any source accepted for graph arguments
    graph: String,
    colouring: Vec<u8>,
    pattern: GluePattern,
}

#[derive(Deserialize)]
struct GlueSpec {
    first: GlueSide,
    second: GlueSide,
}

fn glue_member(side: GlueSide) -> Result<(AMember, GluePattern), BoxError> {
    let g = if side.graph.starts_with("gen:") || Path::new(&side.graph).exists() {
        graph(&side.graph)?
    } else {
        graph6::decode(&side.graph)?
    };
    let sig = ClassSignature::new(vec![2, 1, 1])?;
    Ok((AMember::from_colouring(g, sig, Colouring::new(side.colouring)?)?, side.pattern))
}

fn a_member_payload(m: &AMember, global: &Global) -> Result<Value, BoxError> {
    let mut v = emit_graph(&m.graph, global)?;
    v["certificate"] = serde_json::to_value(&m.certificate)?;
    Ok(v)
}

fn b_member_payload(m: &BMember, global: &Global) -> Result<Value, BoxError> {
    let mut v = emit_graph(&m.graph, global)?;
    v["certificate"] = serde_json::to_value(&m.certificate)?;
    Ok(v)
}

fn plane_payload(p: &PlaneGraph, global: &Global) -> Result<Value, BoxError> {
    let mut v = emit_graph(p.graph(), global)?;
    v["rotation"] = serde_json::to_value(p.rotation())?;
    Ok(v)
}

fn generate_cmd(cmd: &GenerateCmd, global: &Global) -> CmdResult {
    let payload = match cmd {
        GenerateCmd::Family(words) => {
            let (family, param) = match words.as_slice() {
                [family, param] => (family, param),
                _ => return Err("usage: generate <family> <param>".into()),
            };
            let spec = FamilySpec::parse(family, param)?;
            let mut v = emit_graph(&generate(spec)?, global)?;
            v["family"] = serde_json::to_value(spec)?;
            v
        }
        GenerateCmd::Truncate { g } => plane_payload(&truncate(&PlaneGraph::embed(graph(g)?)?)?, global)?,
        GenerateCmd::Expand { g } => {
            let path = global.cert.as_ref().ok_or("expand needs --cert")?;
            let cert: AClassCertificate = io::read_json(path)?;
            plane_payload(&expand_all(&graph(g)?, &cert)?, global)?
        }
        GenerateCmd::DeleteVertex { g, v } => b_member_payload(&delete_vertex_from_cubic(&graph(g)?, *v)?, global)?,
        GenerateCmd::DeleteEdges { g, v, u, w } => {
            b_member_payload(&delete_two_adjacent_edges(&graph(g)?, *v, *u, *w)?, global)?
        }
        GenerateCmd::B5 { h } => b_member_payload(&b5_111_family(*h)?, global)?,
        GenerateCmd::Glue { g, e1, e2 } => {
            let path = global.cert.as_ref().ok_or("glue needs --cert")?;
            let member = AMember::new(graph(g)?, io::read_json(path)?)?;
            a_member_payload(&glue_two_copies(&member, parse_edge(e1)?, parse_edge(e2)?)?, global)?
        }
        GenerateCmd::Glue211 { spec } => {
            let spec: GlueSpec = io::read_json(spec)?;
            let (a1, p1) = glue_member(spec.first)?;
            let (a2, p2) = glue_member(spec.second)?;
            a_member_payload(&glue_a211(&a1, p1, &a2, p2)?, global)?
        }
        GenerateCmd::A22 { spec } => {
            let spec: A22Spec = io::read_json(spec)?;
            a_member_payload(&a22_from_cycles(&spec)?, global)?
        }
    };
    Ok(Outcome::Done(payload))
}

fn sweep(cmd: &SweepCmd, global: &Global) -> CmdResult {
    let cfg = sweep_config(global);
    macro_rules! verdict {
        ($report:expr) => {{
            let report = $report;
            let passed = report.passed();
            Ok(Outcome::Verdict(passed, json!({ "report": emit_report(&report, global)? })))
        }};
    }
    match cmd {
        SweepCmd::ThmSep(b) => verdict!(sweeps::thm_sep(b.max_a, b.max_b, &cfg)?),
        SweepCmd::ThmKc(b) => verdict!(sweeps::thm_kc(b.max_a, b.max_b, &cfg)?),
        SweepCmd::PropKc { bounds, max_cut } => verdict!(sweeps::prop_kc(bounds.max_a, bounds.max_b, *max_cut, &cfg)?),
        SweepCmd::Lex { max_a } => verdict!(sweeps::lex(*max_a, &cfg)?),
        SweepCmd::Aa { max_a } => verdict!(sweeps::aa(*max_a, &cfg)?),
        SweepCmd::K4b { max_b } => verdict!(sweeps::k4b(*max_b, &cfg)?),
        SweepCmd::Rb { corpus: path } => verdict!(sweeps::rb(&corpus::read_file(path)?, &cfg)?),
        SweepCmd::Planarity { max_n } => verdict!(sweeps::planarity(*max_n, &cfg)?),
        SweepCmd::Scan { corpus: path, sig } => {
            let report = sweeps::scan(&signature(sig)?, &corpus::read_file(path)?, &cfg)?;
            let empty = report.members.is_empty() && report.refusals.is_empty();
            Ok(Outcome::Verdict(empty, json!({ "report": emit_report(&report, global)? })))
        }
        SweepCmd::Corpus { n, d } => {
            let graphs = sweeps::regular_planar_corpus(*n, *d);
            if let Some(path) = &global.out {
                corpus::write_file(path, &graphs)?;
            }
            Ok(Outcome::Done(
                json!({ "count": graphs.len(), "graph6": graphs.iter().map(graph6::encode).collect::<Vec<_>>() }),
            ))
        }
        SweepCmd::A211 => {
            let graphs = sweeps::a211_structured_search(&cfg)?;
            if let Some(path) = &global.out {
                corpus::write_file(path, &graphs)?;
            }
            Ok(Outcome::Done(json!({
                "count": graphs.len(),
                "colouring": sweeps::a211_colouring(),
                "graph6": graphs.iter().map(graph6::encode).collect::<Vec<_>>(),
            })))
        }
    }
}

fn oracle(cmd: &OracleCmd) -> CmdResult {
    match cmd {
        OracleCmd::Connectivity { g } => {
            let g = graph(g)?;
            let brute = match brute_connectivity(&g) {
                Ok(k) => k,
                Err(e) => return oracle_error(e),
            };
            let fast = vertex_connectivity(&g)?;
            let report =
                OracleReport::new("vertex connectivity", graph6::encode(&g), fast.to_string(), brute.to_string());
            Ok(Outcome::Verdict(report.agree, json!({ "report": report })))
        }
        OracleCmd::Planarity { g } => {
            let g = graph(g)?;
            let brute = match brute_planarity(&g) {
                Ok(p) => p,
                Err(e) => return oracle_error(e),
            };
            let fast = test_planarity(&g).planar;
            let report = OracleReport::new("planarity", graph6::encode(&g), fast.to_string(), brute.to_string());
            Ok(Outcome::Verdict(report.agree, json!({ "report": report })))
        }
        OracleCmd::Isomorphic { g, h } => match is_isomorphic(&graph(g)?, &graph(h)?) {
            Ok(phi) => Ok(Outcome::Verdict(phi.is_some(), json!({ "isomorphism": phi }))),
            Err(e) => oracle_error(e),
        },
        OracleCmd::Canonical { g } => Ok(Outcome::Done(graph_summary(&canonical_form(&graph(g)?)))),
    }
}
