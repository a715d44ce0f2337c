//! Command-line interface.
//!
//! Exit codes: 0 when everything checked out, 1 for a mathematical
//! counterexample or a certificate that could not be built or verified, 2 for
//! usage, input and numerical errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hypo_core::catalog::Exceptional;
use hypo_core::certify::{certify_with, CertifyOptions};
use hypo_core::enumerate::EdgeFloor;
use hypo_core::verify::{verify_certificate_with, NodeKind, VerificationReport, VerifyOptions};
use hypo_core::{
    canonical_form, classify, connected_graphs, is_exceptional, to_graph6, CertifyError, EnergyVerdict, EnumSpec,
    Graph, GraphClass, DEFAULT_ORDER_BOUND, HARD_ORDER_LIMIT,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::certfile::{read_certificate, write_certificate};
use crate::formats::{read_graphs, write_graph, GraphFormat};
use crate::report::{CertificateStatus, Record, RunReport};

pub const ORDER_BOUND_VAR: &str = "HYPO_ORDER_BOUND";

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "hypo", version, about = "Energy, enumeration and edge-cut certificates for subcubic graphs")]
pub struct Cli {
    /// Worker threads; 0 uses every core. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print order, size, cyclomatic number, energy and verdict of each input graph.
    Energy(EnergyArgs),
    /// Stream non-isomorphic connected graphs, or per-order counts as CSV.
    Enumerate(EnumerateArgs),
    /// Check that the hypoenergetic graphs found by exhaustive search are exactly the catalog.
    VerifyTheorem(TheoremArgs),
    /// Build and verify edge-cut certificates for cyclic graphs.
    Certify(CertifyArgs),
    /// Re-check a certificate file.
    CheckCert(CheckArgs),
}

#[derive(Args, Debug)]
pub struct FilterArgs {
    /// Largest order to enumerate.
    #[arg(long)]
    pub max_n: usize,
    /// Maximum degree.
    #[arg(long, default_value_t = 3)]
    pub delta: usize,
    /// Trees only.
    #[arg(long, conflicts_with_all = ["cyclic_only", "quadrangle_free", "min_edges_n"])]
    pub trees: bool,
    /// Graphs with m >= n only.
    #[arg(long, conflicts_with = "quadrangle_free")]
    pub cyclic_only: bool,
    /// Graphs without a 4-cycle only.
    #[arg(long)]
    pub quadrangle_free: bool,
    /// Require m >= n (combines with --quadrangle-free).
    #[arg(long)]
    pub min_edges_n: bool,
}

impl FilterArgs {
    fn spec(&self, bound: usize) -> EnumSpec {
        let class = if self.trees {
            GraphClass::Trees
        } else if self.cyclic_only {
            GraphClass::Cyclic
        } else if self.quadrangle_free {
            GraphClass::QuadrangleFree
        } else {
            GraphClass::All
        };
        let mut spec = EnumSpec::new(self.max_n).with_degree(self.delta).with_class(class).with_order_bound(bound);
        if self.min_edges_n {
            spec = spec.with_min_edges(EdgeFloor::Order);
        }
        spec
    }

    fn parameters(&self) -> BTreeMap<String, Value> {
        let class = if self.trees {
            "trees"
        } else if self.cyclic_only {
            "cyclic"
        } else if self.quadrangle_free {
            "quadrangle-free"
        } else {
            "all"
        };
        BTreeMap::from([
            ("max_n".to_owned(), json!(self.max_n)),
            ("delta".to_owned(), json!(self.delta)),
            ("class".to_owned(), json!(class)),
            ("min_edges_n".to_owned(), json!(self.min_edges_n)),
        ])
    }
}

#[derive(Args, Debug)]
pub struct EnergyArgs {
    /// Input file; standard input when absent.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFormat,
    /// Also write a JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub filter: FilterArgs,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFormat,
    /// Print `n,count,hypoenergetic_count` CSV instead of graphs.
    #[arg(long)]
    pub counts: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TheoremArgs {
    #[command(flatten)]
    pub filter: FilterArgs,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include the wall time in the report (makes it non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// Input file; standard input when neither this nor --corpus-max-n is given.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: GraphFormat,
    /// Certify every connected cyclic graph with maximum degree 3 up to this order.
    #[arg(long, conflicts_with = "input")]
    pub corpus_max_n: Option<usize>,
    /// Directory for certificate files, slack reports and report.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = hypo_core::certify::DEFAULT_MAX_CUT_SIZE)]
    pub max_cut_size: usize,
    /// Print the node-by-node slack report for each certificate.
    #[arg(long)]
    pub slack: bool,
    /// Include the wall time in the report (makes it non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub certificate: PathBuf,
    #[arg(long, default_value_t = hypo_core::certify::DEFAULT_MAX_CUT_SIZE)]
    pub max_cut_size: usize,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_ERROR, message: message.into() }
}

type Outcome = Result<u8, Failure>;

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = order_bound().and_then(|bound| {
        let ctx = Context { jobs: cli.jobs, bound };
        match cli.command {
            Command::Energy(args) => energy(&ctx, args, out, err),
            Command::Enumerate(args) => enumerate(&ctx, args, out),
            Command::VerifyTheorem(args) => verify_theorem(&ctx, args, out, err),
            Command::Certify(args) => certify_cmd(&ctx, args, out, err),
            Command::CheckCert(args) => check_cert(&ctx, args, out),
        }
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn order_bound() -> Result<usize, Failure> {
    match std::env::var(ORDER_BOUND_VAR) {
        Err(_) => Ok(DEFAULT_ORDER_BOUND),
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(b) if (1..=HARD_ORDER_LIMIT).contains(&b) => Ok(b),
            _ => Err(usage(format!("{ORDER_BOUND_VAR} must be an integer in 1..={HARD_ORDER_LIMIT}, got `{text}`"))),
        },
    }
}

struct Context {
    jobs: usize,
    bound: usize,
}

impl Context {
    /// Order-preserving map, parallel when more than one job is requested.
    fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        if self.jobs == 1 {
            return items.iter().map(f).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build().expect("thread pool");
        pool.install(|| items.par_iter().map(f).collect())
    }

    fn read_input(&self, input: Option<&Path>, format: GraphFormat) -> Result<Vec<Graph>, Failure> {
        let text = match input {
            Some(path) => fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?,
            None => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
                s
            }
        };
        read_graphs(&text, format, self.bound).map_err(|e| usage(format!("parse error: {e}")))
    }

    fn enumerate(&self, spec: EnumSpec) -> Result<Vec<Graph>, Failure> {
        connected_graphs(spec).map(|s| s.collect()).map_err(|e| usage(e.to_string()))
    }
}

fn io_failure(e: io::Error) -> Failure {
    usage(format!("write failed: {e}"))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn fmt_real(x: f64) -> String {
    format!("{x:.12}")
}

fn energy(ctx: &Context, args: EnergyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let graphs = ctx.read_input(args.input.as_deref(), args.format)?;
    let verdicts = ctx.map(&graphs, classify);
    let mut code = EXIT_OK;
    let mut records = Vec::new();
    for (g, verdict) in graphs.iter().zip(verdicts) {
        let c = match g.cyclomatic_number() {
            Ok(c) => c.to_string(),
            Err(_) => {
                let per: Vec<String> = g
                    .connected_components()
                    .iter()
                    .map(|comp| g.induced_subgraph(comp).cyclomatic_number().unwrap_or(0).to_string())
                    .collect();
                format!("[{}]", per.join(","))
            }
        };
        match verdict {
            Ok(v) => {
                // The verdict is only defined for connected graphs.
                let label = if g.is_connected() { v.classification.as_str() } else { "disconnected" };
                writeln!(
                    out,
                    "n={} m={} c={c} E={} margin={} {label} ({})",
                    g.order(),
                    g.size(),
                    fmt_real(v.energy),
                    fmt_real(v.margin),
                    v.tier.as_str()
                )
                .map_err(io_failure)?;
                records.push(Record::new(g, &v));
            }
            Err(e) => {
                let _ = writeln!(err, "{}: {e}", to_graph6(g));
                code = EXIT_ERROR;
            }
        }
    }
    if let Some(path) = args.out {
        let params = BTreeMap::from([("format".to_owned(), json!(format!("{:?}", args.format).to_lowercase()))]);
        write_file(&path, &RunReport::new("energy", params, records).to_json())?;
    }
    Ok(code)
}

fn enumerate(ctx: &Context, args: EnumerateArgs, out: &mut dyn Write) -> Outcome {
    let spec = args.filter.spec(ctx.bound);
    let graphs = ctx.enumerate(spec)?;
    let mut text = Vec::new();
    if args.counts {
        let verdicts = ctx.map(&graphs, classify);
        let mut rows = vec![(0usize, 0usize); spec.max_order + 1];
        for (g, v) in graphs.iter().zip(verdicts) {
            let v = v.map_err(|e| usage(format!("{}: {e}", to_graph6(g))))?;
            rows[g.order()].0 += 1;
            rows[g.order()].1 += usize::from(v.is_hypoenergetic());
        }
        let mut w = csv::Writer::from_writer(&mut text);
        w.write_record(["n", "count", "hypoenergetic_count"]).map_err(|e| usage(e.to_string()))?;
        for (n, (count, hits)) in rows.iter().enumerate().skip(1) {
            w.serialize((n, count, hits)).map_err(|e| usage(e.to_string()))?;
        }
        w.flush().map_err(io_failure)?;
    } else {
        for g in &graphs {
            text.extend_from_slice(write_graph(g, args.format).as_bytes());
        }
    }
    match args.out {
        Some(path) => fs::write(&path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => out.write_all(&text).map_err(io_failure)?,
    }
    Ok(EXIT_OK)
}

fn catalog_name(g: &Graph) -> String {
    is_exceptional(g).map_or_else(|| to_graph6(g), |e| e.name().to_owned())
}

fn verify_theorem(ctx: &Context, args: TheoremArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    if args.filter.delta > 3 {
        return Err(usage(format!("the statement covers maximum degree at most 3, got --delta {}", args.filter.delta)));
    }
    let spec = args.filter.spec(ctx.bound);
    let graphs = ctx.enumerate(spec)?;
    let verdicts: Vec<Result<EnergyVerdict, _>> = ctx.map(&graphs, classify);
    let mut records = Vec::new();
    let mut hits = Vec::new();
    let mut unresolved = 0;
    let mut closest: Option<(f64, &Graph)> = None;
    for (g, v) in graphs.iter().zip(&verdicts) {
        match v {
            Ok(v) => {
                records.push(Record::new(g, v));
                if v.is_hypoenergetic() {
                    hits.push(g);
                } else if closest.is_none_or(|(m, _)| v.margin < m) {
                    closest = Some((v.margin, g));
                }
            }
            Err(e) => {
                let _ = writeln!(err, "unresolved {}: {e}", to_graph6(g));
                unresolved += 1;
            }
        }
    }

    hits.sort_by_key(|g| is_exceptional(g).and_then(|e| Exceptional::ALL.iter().position(|&x| x == e)).unwrap_or(usize::MAX));
    let expected: Vec<Graph> = Exceptional::ALL.iter().map(|e| e.graph()).filter(|g| spec.accepts(g)).collect();
    let found: Vec<_> = hits.iter().map(|g| canonical_form(g)).collect();
    let unexpected: Vec<&&Graph> = hits.iter().filter(|g| !expected.iter().any(|e| canonical_form(e) == canonical_form(g))).collect();
    let missing: Vec<&Graph> = expected.iter().filter(|e| !found.contains(&canonical_form(e))).collect();

    let w = |out: &mut dyn Write, line: String| writeln!(out, "{line}").map_err(io_failure);
    w(out, format!("scanned {} graphs with n <= {} and max degree <= {}", graphs.len(), spec.max_order, spec.max_degree))?;
    for g in &hits {
        let v = classify(g).expect("classified above");
        w(
            out,
            format!("hit {} {} n={} m={} E={} margin={}", catalog_name(g), to_graph6(g), g.order(), g.size(), fmt_real(v.energy), fmt_real(v.margin)),
        )?;
    }
    let names = |gs: &[&Graph]| gs.iter().map(|g| catalog_name(g)).collect::<Vec<_>>().join(" ");
    w(out, format!("expected [{}] found [{}]", names(&expected.iter().collect::<Vec<_>>()), names(&hits)))?;
    if let Some((m, g)) = closest {
        w(out, format!("smallest margin among the rest {} at {}", fmt_real(m), to_graph6(g)))?;
    }
    for g in &unexpected {
        w(out, format!("unexpected {}", to_graph6(g)))?;
    }
    for g in &missing {
        w(out, format!("missing {}", catalog_name(g)))?;
    }

    let code = if unresolved > 0 {
        EXIT_ERROR
    } else if unexpected.is_empty() && missing.is_empty() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    w(out, format!("result: {}", ["confirmed", "counterexample", "unresolved"][code as usize]))?;

    let elapsed = start.elapsed().as_secs_f64();
    let _ = writeln!(err, "wall time {elapsed:.3}s");
    if let Some(path) = args.out {
        let mut report = RunReport::new("verify-theorem", args.filter.parameters(), records);
        report.wall_time_s = args.timing.then_some(elapsed);
        write_file(&path, &report.to_json())?;
    }
    Ok(code)
}

enum Attempt {
    Exceptional(Exceptional),
    Verified(String, VerificationReport),
    Failed(String, Option<Graph>),
}

fn attempt(g: &Graph, max_cut_size: usize) -> Attempt {
    if let Some(e) = is_exceptional(g) {
        return Attempt::Exceptional(e);
    }
    match certify_with(g, CertifyOptions { max_cut_size }) {
        Ok(cert) => {
            let options = VerifyOptions { max_cut_size, ..VerifyOptions::default() };
            match verify_certificate_with(&cert, options) {
                Ok(report) => Attempt::Verified(write_certificate(&cert), report),
                Err(e) => Attempt::Failed(format!("verification failed: {e}"), None),
            }
        }
        Err(CertifyError::Stuck { graph, max_cut_size }) => {
            Attempt::Failed(format!("no good edge cut of size <= {max_cut_size}"), Some(graph))
        }
        Err(e) => Attempt::Failed(e.to_string(), None),
    }
}

fn slack_report(report: &VerificationReport) -> String {
    let mut s = String::new();
    for node in &report.nodes {
        let kind = match &node.kind {
            NodeKind::Cut { cut_size } => format!("cut size={cut_size}"),
            NodeKind::Leaf(reason) => format!("leaf {reason}"),
        };
        s += &format!(
            "{} {kind} n={} m={} c={} E={} slack={}",
            node.path,
            node.order,
            node.size,
            node.cyclomatic,
            fmt_real(node.energy),
            fmt_real(node.slack)
        );
        if let Some(cs) = node.cut_slack {
            s += &format!(" cut_slack={}", fmt_real(cs));
        }
        s.push('\n');
    }
    s
}

fn certify_cmd(ctx: &Context, args: CertifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let graphs = match args.corpus_max_n {
        Some(n) => ctx.enumerate(EnumSpec::new(n).with_class(GraphClass::Cyclic).with_order_bound(ctx.bound))?,
        None => ctx.read_input(args.input.as_deref(), args.format)?,
    };
    for g in &graphs {
        if !g.is_connected() || g.max_degree() > 3 {
            return Err(usage(format!("{}: certify needs a connected graph with maximum degree at most 3", to_graph6(g))));
        }
    }
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    }
    let attempts = ctx.map(&graphs, |g| attempt(g, args.max_cut_size));
    let verdicts = ctx.map(&graphs, classify);

    let mut code = EXIT_OK;
    let mut records = Vec::new();
    let (mut verified, mut exceptional, mut failed) = (0, 0, 0);
    for (i, ((g, attempt), verdict)) in graphs.iter().zip(attempts).zip(verdicts).enumerate() {
        let g6 = to_graph6(g);
        let status = match attempt {
            Attempt::Exceptional(e) => {
                exceptional += 1;
                writeln!(out, "{g6} exceptional: {e}").map_err(io_failure)?;
                CertificateStatus::Exceptional { name: e.name().to_owned() }
            }
            Attempt::Verified(text, report) => {
                verified += 1;
                let cuts = report.nodes.iter().filter(|n| matches!(n.kind, NodeKind::Cut { .. })).count();
                writeln!(
                    out,
                    "{g6} verified nodes={} cuts={cuts} max_cut={} slack={}",
                    report.nodes.len(),
                    report.max_cut_size,
                    fmt_real(report.root_slack())
                )
                .map_err(io_failure)?;
                let slack = slack_report(&report);
                if args.slack {
                    out.write_all(slack.as_bytes()).map_err(io_failure)?;
                }
                if let Some(dir) = &args.out {
                    write_file(&dir.join(format!("{i:05}.cert")), &text)?;
                    write_file(&dir.join(format!("{i:05}.slack")), &slack)?;
                }
                CertificateStatus::Verified {
                    nodes: report.nodes.len(),
                    cuts,
                    max_cut_size: report.max_cut_size,
                    root_slack: report.root_slack(),
                }
            }
            Attempt::Failed(reason, stuck) => {
                failed += 1;
                code = EXIT_COUNTEREXAMPLE;
                let stuck = stuck.map(|s| to_graph6(&s));
                match &stuck {
                    Some(s) => writeln!(out, "{g6} failed: {reason}; stuck at {s}"),
                    None => writeln!(out, "{g6} failed: {reason}"),
                }
                .map_err(io_failure)?;
                CertificateStatus::Failed { reason, stuck }
            }
        };
        if let Ok(v) = verdict {
            let mut record = Record::new(g, &v);
            record.certificate = Some(status);
            records.push(record);
        }
    }
    writeln!(out, "summary: {verified} verified, {exceptional} exceptional, {failed} failed").map_err(io_failure)?;
    let elapsed = start.elapsed().as_secs_f64();
    let _ = writeln!(err, "wall time {elapsed:.3}s");
    if let Some(dir) = &args.out {
        let mut params = BTreeMap::from([("max_cut_size".to_owned(), json!(args.max_cut_size))]);
        if let Some(n) = args.corpus_max_n {
            params.insert("corpus_max_n".to_owned(), json!(n));
        }
        let mut report = RunReport::new("certify", params, records);
        report.wall_time_s = args.timing.then_some(elapsed);
        write_file(&dir.join("report.json"), &report.to_json())?;
    }
    Ok(code)
}

fn check_cert(ctx: &Context, args: CheckArgs, out: &mut dyn Write) -> Outcome {
    let path = &args.certificate;
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let cert = read_certificate(&text, ctx.bound).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let options = VerifyOptions { max_cut_size: args.max_cut_size, ..VerifyOptions::default() };
    match verify_certificate_with(&cert, options) {
        Ok(report) => {
            out.write_all(slack_report(&report).as_bytes()).map_err(io_failure)?;
            writeln!(
                out,
                "accepted: E={} >= n={}",
                fmt_real(report.root_energy),
                report.root_order
            )
            .map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(out, "rejected: {e}").map_err(io_failure)?;
            Ok(EXIT_COUNTEREXAMPLE)
        }
    }
}
