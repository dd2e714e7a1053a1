//! Command-line front end: single-graph computation, bound-catalog sweeps,
//! and named search tasks.
//!
//! Exit codes: 0 clean, 1 when inequality violations were found (reports are
//! still written in full), 2 for unusable input or configuration, 3 when a
//! size guard refuses the work.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bounds::{BoundRecord, CatalogId, EvalContext, Tolerance};
use crate::canon::connected_graphs;
use crate::graph::{p3_join_hnk, Family, Graph, GraphError};
use crate::graph6::{self, Graph6Error};
use crate::invariants::compute_bundle;
use crate::search::{self, Objective, SearchReport};
use crate::spectra::{self, AlphaValue};
use crate::trees::TreesError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATIONS: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

/// Largest vertex count the CLI will feed to the dense eigensolver.
const CLI_N_GUARD: usize = 4096;
/// Largest n for internal exhaustive connected-graph enumeration.
const ENUMERATION_GUARD: usize = 8;

#[derive(Parser)]
#[command(
    name = "alphaspectra",
    version,
    about = "Eigenvalue sums, bound catalogs, and searches for the pencil a*D + (1-a)*A"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel tasks (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, spectra, k-sums, and the energy-style deviation for one graph.
    Compute(ComputeArgs),
    /// Evaluate the bound catalog over one or many graphs.
    Bounds(BoundsArgs),
    /// Run a named search task: t55 | c13 | c12 | p12min | extremal-table.
    Search(SearchArgs),
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Family spec: path:N, cycle:N, complete:N, star:N, empty:N,
    /// star_plus_edge:N, complete_bipartite:S,T, petersen, hnk:N,K.
    #[arg(long)]
    family: Option<String>,
    /// graph6 file, one graph per line.
    #[arg(long)]
    g6: Option<PathBuf>,
    /// Adjacency text file: a vertex-count line, then one `u v` edge per line.
    #[arg(long)]
    adj: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct AlphaArgs {
    /// Pencil parameter in [0, 1]; repeatable.
    #[arg(long = "alpha")]
    alpha: Vec<f64>,
    /// Grid start:end:step; the end is excluded (0:1:0.1 gives 0, 0.1, ..., 0.9).
    #[arg(long = "alpha-grid")]
    alpha_grid: Option<String>,
}

#[derive(Args, Clone)]
struct KArgs {
    /// Eigenvalue-sum order k >= 1; repeatable.
    #[arg(long = "k")]
    k: Vec<usize>,
    /// Use every k the quantity is defined for.
    #[arg(long = "all-k", conflicts_with = "k")]
    all_k: bool,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    alphas: AlphaArgs,
    #[command(flatten)]
    ks: KArgs,
    /// Emit the report as JSON on stdout instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    alphas: AlphaArgs,
    #[command(flatten)]
    ks: KArgs,
    /// Restrict to these catalog ids (comma-separated, e.g. U-3.2,L-5.1i).
    #[arg(long)]
    catalog: Option<String>,
    /// Also evaluate conjecture-conditional entries.
    #[arg(long)]
    include_conjectural: bool,
    /// Emit the report as JSON on stdout instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write every record (applicable or not) as CSV to this path.
    #[arg(long = "dump-all")]
    dump_all: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Task name: t55 | c13 | c12 | p12min | extremal-table.
    task: String,
    #[command(flatten)]
    input: InputArgs,
    /// Internal exhaustive universe: all connected graphs on N vertices (N <= 8).
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    alphas: AlphaArgs,
    #[command(flatten)]
    ks: KArgs,
    /// Also write the JSON report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write per-graph values as CSV to this path.
    #[arg(long = "dump-all")]
    dump_all: Option<PathBuf>,
}

/// A failure already mapped to its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
    fn guard(message: impl Into<String>) -> Self {
        Failure { code: EXIT_GUARD, message: message.into() }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::input(e.to_string())
    }
}
impl From<Graph6Error> for Failure {
    fn from(e: Graph6Error) -> Self {
        Failure::input(e.to_string())
    }
}
impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}
impl From<TreesError> for Failure {
    fn from(e: TreesError) -> Self {
        Failure::guard(e.to_string())
    }
}
impl From<search::SearchError> for Failure {
    fn from(e: search::SearchError) -> Self {
        match e {
            search::SearchError::Trees(t) => t.into(),
            other => Failure::input(other.to_string()),
        }
    }
}
impl From<crate::bounds::BoundsError> for Failure {
    fn from(e: crate::bounds::BoundsError) -> Self {
        Failure::input(e.to_string())
    }
}
impl From<crate::spectra::SpectraError> for Failure {
    fn from(e: crate::spectra::SpectraError) -> Self {
        Failure::input(e.to_string())
    }
}
impl From<crate::linalg::LinalgError> for Failure {
    fn from(e: crate::linalg::LinalgError) -> Self {
        Failure::input(e.to_string())
    }
}

/// Entry point used by the binary: parses, runs, prints, returns exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut stdout = std::io::stdout();
    run_to_writer(args, &mut stdout)
}

/// `run` against an arbitrary writer, for tests.
pub fn run_to_writer<I, T>(args: I, out: &mut dyn std::io::Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit code 0.
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be at least 1");
            return EXIT_INPUT;
        }
        // A later init (e.g. second call in one process) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    let result = match cli.command {
        Command::Compute(a) => cmd_compute(&a, out),
        Command::Bounds(a) => cmd_bounds(&a, out),
        Command::Search(a) => cmd_search(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn parse_alpha(a: f64) -> Result<AlphaValue, Failure> {
    AlphaValue::new(a).map_err(|e| Failure::input(e.to_string()))
}

/// Parses `start:end:step` into start + i*step for i = 0, 1, ... while the
/// value stays strictly below end. Values are built by multiplication, so
/// decimal grids land exactly on representable points (10 * 0.1 == 1.0).
fn parse_grid(spec: &str) -> Result<Vec<AlphaValue>, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Failure::input(format!(
            "alpha grid must be start:end:step, got {spec:?}"
        )));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::input(format!("alpha grid {spec:?}: {e}")))?;
    let (start, end, step) = (nums[0], nums[1], nums[2]);
    if !(step > 0.0) || !start.is_finite() || !end.is_finite() {
        return Err(Failure::input(format!(
            "alpha grid {spec:?} needs finite bounds and a positive step"
        )));
    }
    let mut values = Vec::new();
    for i in 0..10_000u32 {
        let v = start + f64::from(i) * step;
        if v >= end {
            break;
        }
        values.push(parse_alpha(v)?);
    }
    if values.is_empty() {
        return Err(Failure::input(format!("alpha grid {spec:?} is empty")));
    }
    Ok(values)
}

impl AlphaArgs {
    fn resolve(&self, default: &[f64]) -> Result<Vec<AlphaValue>, Failure> {
        if let Some(spec) = &self.alpha_grid {
            if !self.alpha.is_empty() {
                return Err(Failure::input("use --alpha or --alpha-grid, not both"));
            }
            return parse_grid(spec);
        }
        let raw: &[f64] = if self.alpha.is_empty() { default } else { &self.alpha };
        raw.iter().map(|&a| parse_alpha(a)).collect()
    }
}

impl KArgs {
    /// Explicit k list, or None meaning "every valid k".
    fn resolve(&self) -> Result<Option<Vec<usize>>, Failure> {
        if self.all_k {
            return Ok(None);
        }
        if self.k.is_empty() {
            return Ok(None);
        }
        if self.k.iter().any(|&k| k == 0) {
            return Err(Failure::input("k must be at least 1"));
        }
        Ok(Some(self.k.clone()))
    }
}

fn build_family(spec: &str) -> Result<Graph, Failure> {
    if spec == "petersen" {
        return Ok(Graph::petersen());
    }
    if let Some(params) = spec.strip_prefix("hnk:") {
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::input(format!("cannot parse family spec {spec:?}")))?;
        if nums.len() != 2 {
            return Err(Failure::input("hnk takes two parameters: hnk:N,K"));
        }
        return Ok(p3_join_hnk(nums[0], nums[1])?);
    }
    Ok(Family::parse(spec)?.build()?)
}

impl InputArgs {
    fn source_count(&self) -> usize {
        usize::from(self.family.is_some())
            + usize::from(self.g6.is_some())
            + usize::from(self.adj.is_some())
    }

    /// Loads the graphs and a deterministic universe label.
    fn load(&self) -> Result<(String, Vec<Graph>), Failure> {
        if self.source_count() != 1 {
            return Err(Failure::input(
                "exactly one input source required: --family, --g6, or --adj",
            ));
        }
        let (label, graphs) = if let Some(spec) = &self.family {
            (format!("family:{spec}"), vec![build_family(spec)?])
        } else if let Some(path) = &self.g6 {
            let content = fs::read_to_string(path)?;
            (format!("graph6:{}", path.display()), graph6::decode_file(&content)?)
        } else {
            let path = self.adj.as_ref().expect("one source");
            let content = fs::read_to_string(path)?;
            (format!("adjacency:{}", path.display()), vec![graph6::parse_adjacency_text(&content)?])
        };
        if graphs.is_empty() {
            return Err(Failure::input("input contains no graphs"));
        }
        if let Some(g) = graphs.iter().find(|g| g.vertex_count() > CLI_N_GUARD) {
            return Err(Failure::guard(format!(
                "graph on {} vertices exceeds the size guard ({CLI_N_GUARD})",
                g.vertex_count()
            )));
        }
        Ok((label, graphs))
    }
}

// ---------------------------------------------------------------------------
// compute

#[derive(Serialize)]
struct KSumOut {
    k: usize,
    s_k: f64,
}

#[derive(Serialize)]
struct AlphaBlock {
    alpha: f64,
    spectrum: Vec<f64>,
    epsilon_alpha: f64,
    k_sums: Vec<KSumOut>,
}

#[derive(Serialize)]
struct ComputeReport {
    n: usize,
    m: usize,
    delta_max: usize,
    delta_min: usize,
    z1: u64,
    beta: usize,
    eta: usize,
    bipartition: Option<(Vec<usize>, Vec<usize>)>,
    alpha0: f64,
    per_alpha: Vec<AlphaBlock>,
}

fn cmd_compute(args: &ComputeArgs, out: &mut dyn std::io::Write) -> Result<u8, Failure> {
    let (_, graphs) = args.input.load()?;
    if graphs.len() != 1 {
        return Err(Failure::input(format!(
            "compute needs exactly one graph; input has {}",
            graphs.len()
        )));
    }
    let g = &graphs[0];
    if g.vertex_count() == 0 {
        return Err(Failure::input("compute needs a graph with at least one vertex"));
    }
    let n = g.vertex_count();
    let inv = compute_bundle(g);
    let alpha0 = spectra::alpha0(g, 1e-10)?;
    let alphas = args.alphas.resolve(&[0.5])?;
    let ks = args.ks.resolve()?.unwrap_or_else(|| (1..=n).collect());

    let mut per_alpha = Vec::new();
    for &a in &alphas {
        let spec = spectra::alpha_spectrum(g, a)?;
        let mut k_sums = Vec::new();
        for &k in &ks {
            if k >= 1 && k <= n {
                k_sums.push(KSumOut { k, s_k: spec.s_k(k)? });
            }
        }
        per_alpha.push(AlphaBlock {
            alpha: a.value(),
            spectrum: spec.values().to_vec(),
            epsilon_alpha: spectra::alpha_energy(g, a)?,
            k_sums,
        });
    }
    let report = ComputeReport {
        n,
        m: inv.m,
        delta_max: inv.delta_max,
        delta_min: inv.delta_min,
        z1: inv.z1,
        beta: inv.beta,
        eta: inv.eta,
        bipartition: inv
            .bipartition
            .as_ref()
            .map(|(x, y)| (x.members().to_vec(), y.members().to_vec())),
        alpha0,
        per_alpha,
    };

    let json = serde_json::to_string_pretty(&report).expect("report serialization");
    if let Some(path) = &args.out {
        fs::write(path, format!("{json}\n"))?;
    }
    if args.json {
        writeln!(out, "{json}")?;
    } else {
        writeln!(out, "n = {}", report.n)?;
        writeln!(out, "m = {}", report.m)?;
        writeln!(out, "delta_max = {}", report.delta_max)?;
        writeln!(out, "delta_min = {}", report.delta_min)?;
        writeln!(out, "z1 = {}", report.z1)?;
        writeln!(out, "beta = {}", report.beta)?;
        writeln!(out, "eta = {}", report.eta)?;
        match &report.bipartition {
            Some((x, y)) => writeln!(out, "bipartition = {x:?} | {y:?}")?,
            None => writeln!(out, "bipartition = none")?,
        }
        writeln!(out, "alpha0 = {}", report.alpha0)?;
        for block in &report.per_alpha {
            writeln!(out, "alpha = {}", block.alpha)?;
            let mut line = String::new();
            for (i, v) in block.spectrum.iter().enumerate() {
                if i > 0 {
                    line.push_str(", ");
                }
                let _ = write!(line, "{v:.10}");
            }
            writeln!(out, "  spectrum = [{line}]")?;
            writeln!(out, "  epsilon_alpha = {:.10}", block.epsilon_alpha)?;
            for ks in &block.k_sums {
                writeln!(out, "  S_{} = {:.10}", ks.k, ks.s_k)?;
            }
        }
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// bounds

#[derive(Serialize)]
struct BoundsViolation {
    graph6: String,
    record: BoundRecord,
}

#[derive(Serialize)]
struct BoundsReport {
    task: String,
    universe: String,
    graphs: usize,
    alpha_grid: Vec<f64>,
    catalog: Vec<CatalogId>,
    include_conjectural: bool,
    records: usize,
    evaluated: usize,
    min_slack: Option<f64>,
    violations: Vec<BoundsViolation>,
}

/// The k values an entry is swept over when no explicit list is given.
fn k_domain(id: CatalogId, n: usize, m: usize, explicit: Option<&[usize]>) -> Vec<usize> {
    use CatalogId::*;
    if matches!(id, U34 | UC34 | LC53 | F12) {
        return vec![1];
    }
    let max = match id {
        U62a | U62b | UC61 => m,
        U63 => n.saturating_sub(1),
        U64 => 2 * n,
        _ => n,
    };
    match explicit {
        Some(ks) => ks.iter().copied().filter(|&k| (1..=max).contains(&k)).collect(),
        None => (1..=max).collect(),
    }
}

fn parse_catalog(spec: Option<&str>) -> Result<Vec<CatalogId>, Failure> {
    match spec {
        None => Ok(CatalogId::ALL.to_vec()),
        Some(s) => s
            .split(',')
            .map(|p| p.trim().parse::<CatalogId>().map_err(|e| Failure::input(e.to_string())))
            .collect(),
    }
}

fn cmd_bounds(args: &BoundsArgs, out: &mut dyn std::io::Write) -> Result<u8, Failure> {
    let (universe, graphs) = args.input.load()?;
    let alphas = args.alphas.resolve(&[0.5])?;
    let explicit_ks = args.ks.resolve()?;
    let catalog = parse_catalog(args.catalog.as_deref())?;
    let tol = Tolerance::from_env_or_default();

    use rayon::prelude::*;
    struct PerGraph {
        graph6: String,
        records: Vec<BoundRecord>,
    }
    let per_graph: Vec<PerGraph> = graphs
        .par_iter()
        .map(|g| -> Result<PerGraph, Failure> {
            let ctx = EvalContext::with_tolerance(g, tol);
            let n = g.vertex_count();
            let m = g.edge_count();
            let mut records = Vec::new();
            for &id in &catalog {
                let conjectural_entry = matches!(id, CatalogId::C13);
                if conjectural_entry && !args.include_conjectural {
                    continue;
                }
                for &a in &alphas {
                    for k in k_domain(id, n, m, explicit_ks.as_deref()) {
                        let rec = ctx.evaluate(id, a, k, None)?;
                        if rec.is_conjectural() && !args.include_conjectural {
                            continue;
                        }
                        records.push(rec);
                    }
                }
            }
            Ok(PerGraph { graph6: graph6::encode(g)?, records })
        })
        .collect::<Result<_, _>>()?;

    let mut total_records = 0usize;
    let mut evaluated = 0usize;
    let mut min_slack = f64::INFINITY;
    let mut violations = Vec::new();
    for pg in &per_graph {
        total_records += pg.records.len();
        for rec in &pg.records {
            if rec.applicable && rec.slack.is_some() {
                evaluated += 1;
                let s = rec.slack.expect("checked");
                if s < min_slack {
                    min_slack = s;
                }
                if rec.is_violation(tol) {
                    violations
                        .push(BoundsViolation { graph6: pg.graph6.clone(), record: rec.clone() });
                }
            }
        }
    }
    let report = BoundsReport {
        task: "bounds".to_string(),
        universe,
        graphs: graphs.len(),
        alpha_grid: alphas.iter().map(|a| a.value()).collect(),
        catalog,
        include_conjectural: args.include_conjectural,
        records: total_records,
        evaluated,
        min_slack: min_slack.is_finite().then_some(min_slack),
        violations,
    };

    if let Some(path) = &args.dump_all {
        let mut w = csv::Writer::from_path(path).map_err(|e| Failure::input(e.to_string()))?;
        let mut header = vec!["graph6"];
        header.extend(BoundRecord::csv_header());
        w.write_record(&header).map_err(|e| Failure::input(e.to_string()))?;
        for pg in &per_graph {
            for rec in &pg.records {
                let mut row = vec![pg.graph6.clone()];
                row.extend(rec.csv_record());
                w.write_record(&row).map_err(|e| Failure::input(e.to_string()))?;
            }
        }
        w.flush()?;
    }

    let json = serde_json::to_string_pretty(&report).expect("report serialization");
    if let Some(path) = &args.out {
        fs::write(path, format!("{json}\n"))?;
    }
    if args.json {
        writeln!(out, "{json}")?;
    } else {
        writeln!(
            out,
            "graphs = {}, records = {}, checked = {}, violations = {}",
            report.graphs,
            report.records,
            report.evaluated,
            report.violations.len()
        )?;
        if let Some(s) = report.min_slack {
            writeln!(out, "min_slack = {s}")?;
        }
        for v in &report.violations {
            let r = &v.record;
            writeln!(
                out,
                "violation: {} {} alpha={} k={} slack={}",
                v.graph6,
                r.id,
                r.inputs.alpha,
                r.inputs.k,
                r.slack.unwrap_or(f64::NAN)
            )?;
        }
    }
    Ok(if report.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATIONS })
}

// ---------------------------------------------------------------------------
// search

fn resolve_universe(args: &SearchArgs) -> Result<(String, Vec<Graph>), Failure> {
    if args.input.source_count() > 0 && args.n.is_some() {
        return Err(Failure::input("give either an input source or --n, not both"));
    }
    if args.input.source_count() > 0 {
        return args.input.load();
    }
    if let Some(n) = args.n {
        if n > ENUMERATION_GUARD {
            return Err(Failure::guard(format!(
                "internal enumeration is guarded to n <= {ENUMERATION_GUARD}; supply --g6 for larger universes"
            )));
        }
        return Ok(("connected-graphs".to_string(), connected_graphs(n)));
    }
    Err(Failure::input("this task needs a universe: --g6 FILE, --family SPEC, or --n N"))
}

fn write_search_csv(
    path: &Path,
    rows: &[(String, f64, usize, f64, Option<f64>)],
) -> Result<(), Failure> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Failure::input(e.to_string()))?;
    w.write_record(["graph6", "alpha", "k", "value", "reference"])
        .map_err(|e| Failure::input(e.to_string()))?;
    for (g6, a, k, v, r) in rows {
        w.write_record([
            g6.clone(),
            format!("{a}"),
            k.to_string(),
            format!("{v}"),
            r.map_or(String::new(), |x| format!("{x}")),
        ])
        .map_err(|e| Failure::input(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

fn single_k(args: &SearchArgs) -> Result<usize, Failure> {
    match args.ks.k.as_slice() {
        [k] => Ok(*k),
        _ => Err(Failure::input("this task needs exactly one --k value")),
    }
}

fn cmd_search(args: &SearchArgs, out: &mut dyn std::io::Write) -> Result<u8, Failure> {
    let mut dump_rows: Vec<(String, f64, usize, f64, Option<f64>)> = Vec::new();
    let want_dump = args.dump_all.is_some();

    let report: SearchReport = match args.task.as_str() {
        "t55" => {
            let grid = args.alphas.resolve_grid_or(&[], "0.5:1:0.05")?;
            let report = search::reproduce_theorem_5_5(&grid)?;
            if want_dump {
                let trees = search::generate_trees(12)?;
                let path_ref: Vec<f64> = {
                    let path = trees
                        .iter()
                        .find(|t| t.degrees().iter().all(|&d| d <= 2))
                        .expect("path present");
                    grid.iter().map(|&a| spectra::sk_alpha(path, a, 2)).collect::<Result<_, _>>()?
                };
                for t in &trees {
                    let g6 = graph6::encode(t)?;
                    for (ai, &a) in grid.iter().enumerate() {
                        let v = spectra::sk_alpha(t, a, 2)?;
                        dump_rows.push((g6.clone(), a.value(), 2, v, Some(path_ref[ai])));
                    }
                }
            }
            report
        }
        "c13" => {
            let (family, universe) = resolve_universe(args)?;
            let grid = args.alphas.resolve_grid_or(&[], "0.5:1:0.1")?;
            let ks = args.ks.resolve()?.unwrap_or_default();
            let report = search::check_conjecture_1_3(&family, &universe, &grid, &ks)?;
            if want_dump {
                for g in &universe {
                    let g6 = graph6::encode(g)?;
                    let n = g.vertex_count();
                    let m = g.edge_count() as f64;
                    let kset: Vec<usize> = if ks.is_empty() {
                        (1..=n).collect()
                    } else {
                        ks.iter().copied().filter(|&k| k >= 1 && k <= n).collect()
                    };
                    for &a in &grid {
                        let spec = spectra::alpha_spectrum(g, a)?;
                        for &k in &kset {
                            let lhs = spec.s_k(k)?;
                            let rhs =
                                a.value() * m + a.value() * (k * (k + 1)) as f64 / 2.0;
                            dump_rows.push((g6.clone(), a.value(), k, lhs, Some(rhs)));
                        }
                    }
                }
            }
            report
        }
        "c12" => {
            let n = args
                .n
                .ok_or_else(|| Failure::input("c12 needs --n (universe vertex count)"))?;
            let k = single_k(args)?;
            let report = if args.input.source_count() > 0 {
                let (family, universe) = args.input.load()?;
                search::check_conjecture_1_2_over(&family, &universe, n, k)?
            } else {
                if n > ENUMERATION_GUARD {
                    return Err(Failure::guard(format!(
                        "internal enumeration is guarded to n <= {ENUMERATION_GUARD}; supply --g6 for n = {n}"
                    )));
                }
                search::check_conjecture_1_2(n, k)?
            };
            if want_dump {
                let universe: Vec<Graph> = if args.input.source_count() > 0 {
                    args.input.load()?.1
                } else {
                    connected_graphs(n)
                };
                let h = p3_join_hnk(n, k)?;
                let h_skq = spectra::build_matrix(&h, spectra::MatrixKind::SignlessLaplacian)
                    .eigenvalues()?
                    .s_k(k)?;
                for g in &universe {
                    let skq = spectra::build_matrix(g, spectra::MatrixKind::SignlessLaplacian)
                        .eigenvalues()?
                        .s_k(k)?;
                    dump_rows.push((graph6::encode(g)?, 0.5, k, skq, Some(h_skq)));
                }
            }
            report
        }
        "p12min" => {
            let (family, universe) = resolve_universe(args)?;
            let alphas = args.alphas.resolve(&[0.5])?;
            if alphas.len() != 1 {
                return Err(Failure::input("p12min needs exactly one alpha"));
            }
            let objective = Objective::FProblem12(alphas[0]);
            let report = search::minimize_over_in(&family, &universe, objective)?;
            if want_dump {
                for g in &universe {
                    let v = objective_value_for_dump(g, objective)?;
                    dump_rows.push((graph6::encode(g)?, alphas[0].value(), 2, v, None));
                }
            }
            report
        }
        "extremal-table" => {
            let (family, universe) = resolve_universe(args)?;
            let grid = args.alphas.resolve(&[0.5])?;
            let ks = args.ks.resolve()?.unwrap_or_default();
            let report = search::extremal_table(&family, &universe, &grid, &ks)?;
            if want_dump {
                for g in &universe {
                    let g6 = graph6::encode(g)?;
                    let n = g.vertex_count();
                    let kset: Vec<usize> = if ks.is_empty() {
                        (1..=n).collect()
                    } else {
                        ks.iter().copied().filter(|&k| k >= 1 && k <= n).collect()
                    };
                    for &a in &grid {
                        let spec = spectra::alpha_spectrum(g, a)?;
                        for &k in &kset {
                            dump_rows.push((g6.clone(), a.value(), k, spec.s_k(k)?, None));
                        }
                    }
                }
            }
            report
        }
        other => {
            return Err(Failure::input(format!(
                "unknown task {other:?}; expected t55 | c13 | c12 | p12min | extremal-table"
            )))
        }
    };

    if let Some(path) = &args.dump_all {
        write_search_csv(path, &dump_rows)?;
    }
    let json = serde_json::to_string_pretty(&report).expect("report serialization");
    if let Some(path) = &args.out {
        fs::write(path, format!("{json}\n"))?;
    }
    writeln!(out, "{json}")?;
    Ok(if report.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATIONS })
}

fn objective_value_for_dump(g: &Graph, objective: Objective) -> Result<f64, Failure> {
    match objective {
        Objective::FProblem12(a) => {
            let s2 = spectra::sk_alpha(g, a, 2)?;
            Ok(a.value() * g.edge_count() as f64 + a.value() + 1.0 - s2)
        }
        _ => Err(Failure::input("dump supports the f objective only")),
    }
}

impl AlphaArgs {
    /// Like `resolve`, but the default is a grid spec instead of a list.
    fn resolve_grid_or(&self, default: &[f64], grid_default: &str) -> Result<Vec<AlphaValue>, Failure> {
        if self.alpha_grid.is_none() && self.alpha.is_empty() {
            return parse_grid(grid_default);
        }
        self.resolve(default)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (u8, String) {
        let mut buf = Vec::new();
        let code = run_to_writer(args.iter().copied(), &mut buf);
        (code, String::from_utf8(buf).expect("utf-8 output"))
    }

    #[test]
    fn grid_is_end_exclusive_with_exact_boundaries() {
        let g = parse_grid("0:1:0.1").unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(g[0].value(), 0.0);
        assert_eq!(g[9].value(), 0.9);
        let g = parse_grid("0:1.05:0.1").unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[10].value(), 1.0, "10 * 0.1 is exactly 1");
        let g = parse_grid("0.5:1:0.05").unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(g[9].value(), 0.95);
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("0:1:-0.1").is_err());
        assert!(parse_grid("0.9:0.5:0.1").is_err());
    }

    #[test]
    fn compute_known_two_sums() {
        let (code, text) =
            run_capture(&["alphaspectra", "compute", "--family", "star:12", "--alpha", "0.5", "--k", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("S_2 = 6.5000000000"), "star 2-sum: {text}");
        let (code, text) =
            run_capture(&["alphaspectra", "compute", "--family", "complete:3", "--alpha", "0.5", "--k", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("S_2 = 2.5000000000"), "triangle 2-sum: {text}");

        let (code, json_text) = run_capture(&[
            "alphaspectra", "compute", "--family", "path:12", "--alpha", "0.5", "--k", "2", "--json",
        ]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&json_text).unwrap();
        assert_eq!(v["n"], 12);
        assert_eq!(v["m"], 11);
        let s2 = v["per_alpha"][0]["k_sums"][0]["s_k"].as_f64().unwrap();
        let expected = spectra::path_sk_closed_form(
            12,
            2,
            AlphaValue::new(0.5).unwrap(),
            spectra::PathFormPart::II,
        )
        .unwrap();
        assert!((s2 - expected).abs() <= 1e-9, "matches the one-term closed form");
    }

    #[test]
    fn compute_rejects_bad_input() {
        let (code, _) = run_capture(&["alphaspectra", "compute", "--family", "nosuch:3"]);
        assert_eq!(code, EXIT_INPUT);
        let (code, _) = run_capture(&["alphaspectra", "compute"]);
        assert_eq!(code, EXIT_INPUT);
        let (code, _) = run_capture(&[
            "alphaspectra", "compute", "--family", "path:3", "--g6", "/nonexistent.g6",
        ]);
        assert_eq!(code, EXIT_INPUT);
    }

    #[test]
    fn bounds_clean_and_violating_inputs() {
        let (code, text) = run_capture(&[
            "alphaspectra", "bounds", "--family", "path:12", "--alpha", "0.5", "--all-k",
        ]);
        assert_eq!(code, EXIT_OK, "{text}");
        assert!(text.contains("violations = 0"));

        let dir = tempfile::tempdir().unwrap();
        let paw = dir.path().join("paw.txt");
        fs::write(&paw, "4\n0 1\n0 2\n1 2\n2 3\n").unwrap();
        let out_json = dir.path().join("report.json");
        let out_csv = dir.path().join("records.csv");
        let (code, text) = run_capture(&[
            "alphaspectra",
            "bounds",
            "--adj",
            paw.to_str().unwrap(),
            "--alpha",
            "0",
            "--all-k",
            "--out",
            out_json.to_str().unwrap(),
            "--dump-all",
            out_csv.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_VIOLATIONS);
        assert!(text.contains("L-C5.4"), "violation names the entry: {text}");
        let written: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(&out_json).unwrap()).unwrap();
        assert!(written["violations"].as_array().unwrap().iter().all(|v| v["record"]["id"] == "L-C5.4"));
        let csv_text = fs::read_to_string(&out_csv).unwrap();
        assert!(csv_text.starts_with("graph6,id,n,m,alpha,k,applicable,value,true_sk,slack,flags"));
        assert!(csv_text.lines().count() > 50, "full record dump");
    }

    #[test]
    fn bounds_catalog_subset_and_unknown_id() {
        let (code, text) = run_capture(&[
            "alphaspectra", "bounds", "--family", "cycle:4", "--alpha", "0.5", "--k", "1",
            "--catalog", "U-3.2", "--json",
        ]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["records"], 1);
        assert_eq!(v["catalog"], serde_json::json!(["U-3.2"]));
        let (code, _) = run_capture(&[
            "alphaspectra", "bounds", "--family", "cycle:4", "--catalog", "X-1.1",
        ]);
        assert_eq!(code, EXIT_INPUT);
    }

    #[test]
    fn search_c13_deterministic_and_clean() {
        let (code, text) = run_capture(&["alphaspectra", "search", "c13", "--n", "5"]);
        assert_eq!(code, EXIT_OK);
        let v1: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v1["task"], "check:c13");
        assert_eq!(v1["count"], 21);
        let (code, text2) = run_capture(&["alphaspectra", "search", "c13", "--n", "5"]);
        assert_eq!(code, EXIT_OK);
        let mut a: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut b: serde_json::Value = serde_json::from_str(&text2).unwrap();
        a["runtime_s"] = serde_json::Value::from(0.0);
        b["runtime_s"] = serde_json::Value::from(0.0);
        assert_eq!(a, b, "byte-identical reports modulo runtime");
    }

    #[test]
    fn search_guards_and_argument_errors() {
        let (code, _) = run_capture(&["alphaspectra", "search", "c13", "--n", "9"]);
        assert_eq!(code, EXIT_GUARD);
        let (code, _) = run_capture(&["alphaspectra", "search", "c13"]);
        assert_eq!(code, EXIT_INPUT);
        let (code, _) = run_capture(&["alphaspectra", "search", "nosuch", "--n", "4"]);
        assert_eq!(code, EXIT_INPUT);
        let (code, _) = run_capture(&["alphaspectra", "search", "c12", "--n", "4", "--k", "3"]);
        assert_eq!(code, EXIT_INPUT, "precondition failure");
    }

    #[test]
    fn search_c12_and_dump() {
        let dir = tempfile::tempdir().unwrap();
        let csv_path = dir.path().join("vals.csv");
        // At (5, 3) the dense end of the universe tops the benchmark, so the
        // run must report those graphs and exit through the violation code.
        let (code, text) = run_capture(&[
            "alphaspectra", "search", "c12", "--n", "5", "--k", "3",
            "--dump-all", csv_path.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_VIOLATIONS, "{text}");
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["count"], 21);
        assert!(!v["violations"].as_array().unwrap().is_empty());
        let csv_text = fs::read_to_string(&csv_path).unwrap();
        assert!(csv_text.starts_with("graph6,alpha,k,value,reference"));
        assert_eq!(csv_text.lines().count(), 22, "header plus one row per graph");
    }

    #[test]
    fn search_p12min_on_small_universe() {
        let (code, text) = run_capture(&[
            "alphaspectra", "search", "p12min", "--n", "4", "--alpha", "0.5",
        ]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["count"], 6);
        assert!(v["extremal"].as_array().unwrap().len() >= 1);
    }
}
