//! The `kgraph` command line.
//!
//! Exit codes: 0 when every check passes and every decision is positive,
//! 1 on check failures, invalid graphs or inequivalent representations,
//! 2 on input errors. The report goes to standard output, diagnostics to
//! standard error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use kgraph::repr::{
    as_semibranching, cyclic_vector, decompose_slices, describe_path, distinct_paths, is_irreducible, is_monic,
    unitarily_equivalent, verify_atom_limits, verify_ck, verify_encoding, verify_k_partition, verify_pvm_identities,
    verify_purely_atomic, AtomicRepSpec, CheckReport, Intertwiner, Representation,
};
use kgraph::{Degree, GraphProperties, InfinitePath, KGraph, Morphism, Periodicity, ReprError};

use crate::load::{load_graph, load_rep, load_skeleton, LoadError};
use crate::report::Report;
use crate::sample::{sample, DEFAULT_SAMPLE};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "kgraph", version, about = "Check k-graphs and their purely atomic representations")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Window for representation checks, e.g. `3,3`; overrides the file.
    #[arg(long, global = true, value_parser = parse_degree)]
    window: Option<Degree>,
    /// Number of basis points to check; larger windows are subsampled.
    #[arg(long, global = true)]
    sample: Option<usize>,
    /// Check morphisms of every degree up to this bound (default 2 in each color).
    #[arg(long, global = true, value_parser = parse_degree)]
    degrees: Option<Degree>,
    /// Write the report as JSON lines.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a graph file.
    Validate { graph: PathBuf },
    /// List eventually periodic paths.
    Paths {
        graph: PathBuf,
        /// Largest prefix degree (default 0).
        #[arg(long, value_parser = parse_degree)]
        prefix_bound: Option<Degree>,
        /// Largest cycle degree (default 2 in each color).
        #[arg(long, value_parser = parse_degree)]
        cycle_bound: Option<Degree>,
    },
    /// Minimal common extensions of two morphisms.
    Lmin {
        graph: PathBuf,
        /// Edge names, range first, separated by spaces or commas.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Members of the orbit of `prefix · cycle^∞` reached by shifts and
    /// prefixes up to a bound.
    Orbit {
        graph: PathBuf,
        #[arg(long)]
        prefix: Option<String>,
        #[arg(long)]
        cycle: String,
        /// Default 2 in each color.
        #[arg(long, value_parser = parse_degree)]
        bound: Option<Degree>,
    },
    /// Check the relations and identities of a representation.
    RepVerify { rep: PathBuf },
    /// Decide unitary equivalence of two representations.
    RepCompare { a: PathBuf, b: PathBuf },
    /// Split a representation into its permutative slices.
    RepDecompose { rep: PathBuf },
}

fn parse_degree(s: &str) -> Result<Degree, String> {
    let coords: Result<Vec<u32>, _> = s.split(',').map(|c| c.trim().parse::<u32>()).collect();
    match coords {
        Ok(c) if !c.is_empty() => Ok(Degree::from_slice(&c)),
        _ => Err(format!("expected `N1,...,Nk`, found `{s}`")),
    }
}

/// An input problem: reported on standard error with exit code 2.
#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error("{0}")]
    Message(String),
}

fn input(msg: impl Into<String>) -> InputError {
    InputError::Message(msg.into())
}

struct Options {
    window: Option<Degree>,
    sample: usize,
    degrees: Option<Degree>,
}

impl Options {
    fn check_rank(&self, g: &KGraph, extra: &[(&str, &Option<Degree>)]) -> Result<(), InputError> {
        let flags = [("--window", &self.window), ("--degrees", &self.degrees)];
        for (flag, d) in flags.iter().chain(extra) {
            if let Some(d) = d.as_ref().filter(|d| d.rank() != g.rank()) {
                return Err(input(format!("{flag} {d} has rank {}, the graph has rank {}", d.rank(), g.rank())));
            }
        }
        Ok(())
    }

    fn degrees(&self, g: &KGraph) -> Vec<Degree> {
        self.degrees.clone().unwrap_or_else(|| Degree::splat(g.rank(), 2)).graded_box()
    }
}

/// Run the command line with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let opts = Options { window: cli.window, sample: cli.sample.unwrap_or(DEFAULT_SAMPLE), degrees: cli.degrees };
    let result = match &cli.command {
        Command::Validate { graph } => validate(graph),
        Command::Paths { graph, prefix_bound, cycle_bound } => paths(graph, &opts, prefix_bound, cycle_bound),
        Command::Lmin { graph, left, right } => lmin(graph, &opts, left, right),
        Command::Orbit { graph, prefix, cycle, bound } => orbit(graph, &opts, prefix.as_deref(), cycle, bound),
        Command::RepVerify { rep } => rep_verify(rep, &opts),
        Command::RepCompare { a, b } => rep_compare(a, b, &opts),
        Command::RepDecompose { rep } => rep_decompose(rep, &opts),
    };
    match result {
        Ok(report) => {
            let text = if cli.json { report.to_jsonl() } else { report.to_text() };
            let _ = out.write_all(text.as_bytes());
            if report.has_error() {
                EXIT_INPUT
            } else if report.status() == crate::report::Status::Pass {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn show(p: &Path) -> String {
    p.display().to_string()
}

fn graph_of(path: &Path) -> Result<KGraph, InputError> {
    load_graph(path)?.map_err(|(skel, vs)| {
        let msgs: Vec<String> = vs.iter().map(|v| v.describe(&skel)).collect();
        input(format!("{}: not a valid k-graph:\n{}", path.display(), msgs.join("\n")))
    })
}

/// Edge names joined by spaces, or the vertex name for a vertex.
fn plain(g: &KGraph, m: &Morphism) -> String {
    if m.is_vertex() {
        return g.skeleton().vertices()[m.range()].clone();
    }
    m.edges().iter().map(|&e| g.skeleton().edge(e).name.as_str()).collect::<Vec<_>>().join(" ")
}

fn word(g: &KGraph, text: &str, flag: &str) -> Result<Morphism, InputError> {
    let names: Vec<&str> = text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
    if names.is_empty() {
        return Err(input(format!("{flag}: empty word")));
    }
    g.word(&names).map_err(|e| input(format!("{flag}: {e}")))
}

fn validate(path: &Path) -> Result<Report, InputError> {
    let skel = load_skeleton(path)?;
    let mut report = Report::new("validate", &[show(path)]);
    let props = GraphProperties::of(&skel);
    let valid = match KGraph::validate(skel.clone()) {
        Ok(_) => true,
        Err(vs) => {
            for v in &vs {
                report.violation(v.kind(), v.describe(&skel));
            }
            false
        }
    };
    report.decision(
        "graph",
        [
            ("valid", json!(valid)),
            ("rank", json!(skel.rank())),
            ("vertices", json!(skel.vertices().len())),
            ("edges", json!(skel.edges().len())),
            ("squares", json!(skel.squares().len())),
            ("source_free", json!(props.source_free)),
            ("strongly_connected", json!(props.strongly_connected)),
        ],
    );
    Ok(report)
}

fn paths(
    path: &Path,
    opts: &Options,
    prefix_bound: &Option<Degree>,
    cycle_bound: &Option<Degree>,
) -> Result<Report, InputError> {
    let g = graph_of(path)?;
    opts.check_rank(&g, &[("--prefix-bound", prefix_bound), ("--cycle-bound", cycle_bound)])?;
    let p = prefix_bound.clone().unwrap_or_else(|| Degree::zero(g.rank()));
    let c = cycle_bound.clone().unwrap_or_else(|| Degree::splat(g.rank(), 2));
    let mut report = Report::new("paths", &[show(path)]);
    match g.ep_paths(&p, &c) {
        Ok(ps) => {
            for x in &ps {
                report.item("path", describe_path(&g, &InfinitePath::from(x.clone())));
            }
            report.decision("paths", [("count", json!(ps.len())), ("prefix_bound", json!(p.to_string())), ("cycle_bound", json!(c.to_string()))]);
        }
        Err(e) => report.error(e.to_string()),
    }
    Ok(report)
}

fn lmin(path: &Path, opts: &Options, left: &str, right: &str) -> Result<Report, InputError> {
    let g = graph_of(path)?;
    opts.check_rank(&g, &[])?;
    let (l, r) = (word(&g, left, "--left")?, word(&g, right, "--right")?);
    let pairs = g.lambda_min(&l, &r).map_err(|e| input(e.to_string()))?;
    let mut report = Report::new("lmin", &[show(path), plain(&g, &l), plain(&g, &r)]);
    let shown: Vec<String> = pairs.iter().map(|(a, b)| format!("({},{})", plain(&g, a), plain(&g, b))).collect();
    report.item("lambda-min", format!("{{{}}}", shown.join(", ")));
    report.decision("lambda-min", [("count", json!(pairs.len())), ("degree", json!(l.degree().join(r.degree()).to_string()))]);
    Ok(report)
}

fn orbit(
    path: &Path,
    opts: &Options,
    prefix: Option<&str>,
    cycle: &str,
    bound: &Option<Degree>,
) -> Result<Report, InputError> {
    let g = graph_of(path)?;
    opts.check_rank(&g, &[("--bound", bound)])?;
    let c = word(&g, cycle, "--cycle")?;
    let ep = match prefix {
        Some(p) => g.ep_path(&word(&g, p, "--prefix")?, &c),
        None => g.ep_periodic(&c),
    };
    let omega: InfinitePath = ep.map_err(|e| input(format!("--cycle: {e}")))?.into();
    let bound = bound.clone().unwrap_or_else(|| Degree::splat(g.rank(), 2));
    let mut report = Report::new("orbit", &[show(path), describe_path(&g, &omega)]);
    match g.orbit_enumerate(&omega, &bound) {
        Ok(ms) => {
            for m in &ms {
                report.item("member", describe_path(&g, m));
            }
            report.decision("orbit", [("members", json!(ms.len())), ("bound", json!(bound.to_string()))]);
        }
        Err(e) => report.error(e.to_string()),
    }
    Ok(report)
}

fn rep(path: &Path, opts: &Options) -> Result<AtomicRepSpec, InputError> {
    let spec = load_rep(path, opts.window.as_ref())?.spec;
    opts.check_rank(spec.graph(), &[])?;
    Ok(spec)
}

fn spec_decision(report: &mut Report, name: &'static str, spec: &AtomicRepSpec) {
    let mult: Vec<u32> = spec.orbits().iter().map(|o| o.multiplicity).collect();
    report.decision(
        name,
        [
            ("orbits", json!(spec.orbits().len())),
            ("multiplicities", json!(mult)),
            ("window", json!(spec.window().to_string())),
            ("dimension", json!(spec.basis().len())),
        ],
    );
}

/// Record the checks, or the error that stopped them.
fn run_checks(report: &mut Report, checks: Result<CheckReport, ReprError>) {
    match checks {
        Ok(c) => report.checks(&c),
        Err(e) => report.error(e.to_string()),
    }
}

fn rep_verify(path: &Path, opts: &Options) -> Result<Report, InputError> {
    let spec = rep(path, opts)?;
    let g = spec.graph();
    let degrees = opts.degrees(g);
    let pts = sample(spec.basis(), opts.sample);
    let mut report = Report::new("rep-verify", &[show(path)]);
    spec_decision(&mut report, "representation", &spec);
    report.decision("sample", [("points", json!(pts.len())), ("degrees", json!(degrees.last().map(|d| d.to_string())))]);
    let atoms = distinct_paths(&pts);
    let checks = (|| {
        let mut all = verify_ck(&spec, &pts, &degrees)?;
        all.merge(verify_pvm_identities(&spec, &pts, &degrees, &atoms)?);
        all.merge(verify_atom_limits(&spec, &pts, &atoms)?);
        all.merge(verify_k_partition(&spec, &pts, &degrees)?);
        all.merge(verify_purely_atomic(&spec)?);
        all.merge(verify_encoding(&spec, &pts, &degrees)?);
        Ok(all)
    })();
    run_checks(&mut report, checks);
    report.decision("irreducible", [("irreducible", json!(is_irreducible(&spec)))]);
    report.decision("monic", [("monic", json!(is_monic(&spec)))]);
    if spec.basis().len() <= opts.sample {
        match cyclic_vector(&spec) {
            Ok(c) => report.decision(
                "cyclic-vector",
                [("rank", json!(c.rank)), ("dimension", json!(c.dimension)), ("cyclic", json!(c.is_cyclic()))],
            ),
            Err(e) => report.error(e.to_string()),
        }
    } else {
        report.decision(
            "cyclic-vector",
            [("skipped", json!(format!("window dimension {} exceeds the sample size {}", spec.basis().len(), opts.sample)))],
        );
    }
    Ok(report)
}

fn rep_compare(a_path: &Path, b_path: &Path, opts: &Options) -> Result<Report, InputError> {
    let a = rep(a_path, opts)?;
    let b = rep(b_path, opts)?;
    let verdict = unitarily_equivalent(&a, &b).map_err(|e| input(e.to_string()))?;
    let mut report = Report::new("rep-compare", &[show(a_path), show(b_path)]);
    spec_decision(&mut report, "left", &a);
    spec_decision(&mut report, "right", &b);
    let matching: Vec<Value> = verdict.matching.iter().map(|m| m.map_or(Value::Null, |j| json!(j + 1))).collect();
    report.decision(
        "equivalence",
        [
            ("equivalent", json!(verdict.equivalent)),
            ("matched_orbits", json!(verdict.matched_orbits)),
            ("reason", verdict.reason.map_or(Value::Null, |r| json!(r.to_string()))),
            ("matching", json!(matching)),
        ],
    );
    if verdict.equivalent {
        let degrees = opts.degrees(a.graph());
        let checks = Intertwiner::identity(&a, &b).and_then(|u| {
            u.verify(&sample(a.basis(), opts.sample), &sample(b.basis(), opts.sample), &degrees)
        });
        run_checks(&mut report, checks);
    } else {
        report.negative();
    }
    Ok(report)
}

fn periodicity(p: &Periodicity) -> String {
    match p {
        Periodicity::Periodic(q) => format!("periodic with period {q}"),
        Periodicity::AperiodicUpTo(d) => format!("aperiodic up to {d}"),
        Periodicity::PeriodicUpTo { m, n, compared } => {
            format!("shifts {m} and {n} agree up to {compared}")
        }
    }
}

fn rep_decompose(path: &Path, opts: &Options) -> Result<Report, InputError> {
    let spec = rep(path, opts)?;
    let degrees = opts.degrees(spec.graph());
    let pts = sample(spec.basis(), opts.sample);
    let mut report = Report::new("rep-decompose", &[show(path)]);
    spec_decision(&mut report, "representation", &spec);
    match decompose_slices(&spec, &pts, &degrees) {
        Ok(s) => {
            for slice in &s.slices {
                report.item(
                    "slice",
                    format!("orbit {} fiber {}: {} points", slice.orbit + 1, slice.fiber, slice.points.len()),
                );
            }
            report.decision("slices", [("count", json!(s.slices.len()))]);
            for (i, p) in s.periodicity.iter().enumerate() {
                report.decision("periodicity", [("orbit", json!(i + 1)), ("verdict", json!(periodicity(p)))]);
            }
            report.checks(&s.report);
        }
        Err(e) => report.error(e.to_string()),
    }
    run_checks(&mut report, as_semibranching(&spec, &degrees));
    Ok(report)
}
