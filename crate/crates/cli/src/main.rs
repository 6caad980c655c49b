//! beth: reports, theorem check suites, and corpus generation for the
//! graph characteristics engine.
//!
//! Exit codes: 0 success, 1 at least one suite check failed, 2 bad
//! input or configuration, 3 report completed but with oracle fields
//! omitted (budget or size limits).

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use beth_core::{
    all_connected_graphs, beth1, beth2, beth3, beth_complete, chromatic_number, clique_sum,
    contraction_cycle_census, count_triangles_through, enumerate_induced_cycles,
    enumerate_minimal_closed_surfaces, enumerate_solids, enumerate_solids_bruteforce, hajos_merge,
    hadwiger_number, is_planar_small, longest_cycle_length, parse_edge_list, parse_graph6,
    random_connected_graph, report, to_graph6, vertex_compress, Budget, Error, Graph,
    ReportOptions,
};

#[derive(Parser)]
#[command(
    name = "beth",
    version,
    about = "graph characteristics, contraction checks, and exact small-graph oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the characteristic report for one graph
    Report(ReportArgs),
    /// Run the theorem check suite over a corpus
    Suite(SuiteArgs),
    /// Generate a seeded corpus of connected graphs in graph6 form
    Gen(GenArgs),
}

#[derive(Args)]
struct ReportArgs {
    /// graph6 text for the input graph (reads stdin when neither input
    /// flag is given)
    #[arg(long, value_name = "G6", conflicts_with = "edge_list")]
    graph6: Option<String>,
    /// File with a vertex count line followed by one "u v" edge per line
    #[arg(long, value_name = "PATH")]
    edge_list: Option<PathBuf>,
    /// Run the exact chromatic/minor/planarity oracles (the default)
    #[arg(long, conflicts_with = "no_oracles")]
    oracles: bool,
    /// Skip the exact oracles; counts and bounds only
    #[arg(long)]
    no_oracles: bool,
    /// Oracle node budget; overrides BETH_BUDGET
    #[arg(long, value_name = "NODES")]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this path instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Seeded corpus spec, e.g. n=9,p=0.4,count=300,seed=7
    #[arg(long, value_name = "SPEC", conflicts_with = "file")]
    generator: Option<String>,
    /// graph6 corpus file, one graph per line (# comments allowed)
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Comma-separated check ids (default: every check)
    #[arg(long, value_delimiter = ',', value_name = "IDS")]
    checks: Vec<String>,
    /// Oracle node budget; overrides BETH_BUDGET
    #[arg(long, value_name = "NODES")]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write results to this path instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Corpus spec, e.g. n=6,p=0.5,count=100,seed=7
    #[arg(value_name = "SPEC")]
    spec: String,
    /// Overrides the seed inside SPEC
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,
    /// Write the corpus to this path instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Report(a) => run_report(a),
        Command::Suite(a) => run_suite(a),
        Command::Gen(a) => run_gen(a),
    };
    match run {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("beth: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Flag beats the BETH_BUDGET environment variable beats the default.
fn resolve_budget(flag: Option<u64>) -> Result<Budget, String> {
    if let Some(nodes) = flag {
        return Ok(Budget::new(nodes));
    }
    match std::env::var("BETH_BUDGET") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map(Budget::new)
            .map_err(|_| format!("BETH_BUDGET is not an unsigned integer: {text:?}")),
        Err(_) => Ok(Budget::default()),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------- report

fn load_graph(a: &ReportArgs) -> Result<Graph, String> {
    if let Some(text) = &a.graph6 {
        return parse_graph6(text).map_err(|e| e.to_string());
    }
    if let Some(path) = &a.edge_list {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        return parse_edge_list(&text).map_err(|e| e.to_string());
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| format!("cannot read stdin: {e}"))?;
    let significant: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    match significant.as_slice() {
        [] => Err("empty input".to_string()),
        [line] if !line.contains(char::is_whitespace) => parse_graph6(line)
            .or_else(|g6| parse_edge_list(&text).map_err(|_| g6))
            .map_err(|e| e.to_string()),
        _ => parse_edge_list(&text).map_err(|e| e.to_string()),
    }
}

/// Column order: scalars in declaration order, then the named checks in
/// their report (lexicographic) order. Witnesses stay JSON-only.
fn report_csv(r: &beth_core::CharacteristicReport) -> String {
    fn opt<T: ToString>(v: &Option<T>) -> String {
        v.as_ref().map(|x| x.to_string()).unwrap_or_default()
    }
    let mut header: Vec<String> = [
        "graph6", "n", "m", "c", "s", "beth1", "beth2", "beth3", "bound1", "bound2", "bound3",
        "chi", "hadwiger",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut row = vec![
        csv_field(&r.graph6),
        r.n.to_string(),
        r.m.to_string(),
        opt(&r.c),
        opt(&r.s),
        r.beth1.to_string(),
        opt(&r.beth2),
        opt(&r.beth3),
        r.bound1.to_string(),
        opt(&r.bound2),
        opt(&r.bound3),
        opt(&r.chi),
        opt(&r.hadwiger),
    ];
    for (id, outcome) in &r.checks {
        header.push(id.clone());
        row.push(outcome.status.to_string());
    }
    format!("{}\n{}\n", header.join(","), row.join(","))
}

fn run_report(a: ReportArgs) -> Result<u8, String> {
    let g = load_graph(&a)?;
    let budget = resolve_budget(a.budget)?;
    let opts = ReportOptions {
        budget,
        with_oracles: !a.no_oracles,
        ..Default::default()
    };
    let r = report(&g, opts).map_err(|e| e.to_string())?;
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => report_csv(&r),
    };
    emit(&a.out, &text)?;
    if r.omitted.is_empty() {
        Ok(0)
    } else {
        for line in &r.omitted {
            eprintln!("beth: partial: {line}");
        }
        Ok(3)
    }
}

// ------------------------------------------------------------------ gen

#[derive(Clone, Copy)]
struct GenSpec {
    n: usize,
    p: f64,
    count: usize,
    seed: u64,
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={},p={},count={},seed={}",
            self.n, self.p, self.count, self.seed
        )
    }
}

fn parse_spec(text: &str) -> Result<GenSpec, String> {
    let (mut n, mut p, mut count, mut seed) = (None, None, None, None);
    for part in text.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("spec field {part:?} is not key=value"))?;
        let value = value.trim();
        match key.trim() {
            "n" => n = Some(value.parse::<usize>().map_err(|_| format!("bad n: {value:?}"))?),
            "p" => p = Some(value.parse::<f64>().map_err(|_| format!("bad p: {value:?}"))?),
            "count" => {
                count =
                    Some(value.parse::<usize>().map_err(|_| format!("bad count: {value:?}"))?)
            }
            "seed" => {
                seed = Some(value.parse::<u64>().map_err(|_| format!("bad seed: {value:?}"))?)
            }
            other => return Err(format!("unknown spec field {other:?}")),
        }
    }
    Ok(GenSpec {
        n: n.ok_or("spec is missing n")?,
        p: p.ok_or("spec is missing p")?,
        count: count.ok_or("spec is missing count")?,
        seed: seed.ok_or("spec is missing seed (seeds are mandatory)")?,
    })
}

fn generate(spec: GenSpec) -> Result<Vec<Graph>, String> {
    (0..spec.count)
        .map(|i| {
            random_connected_graph(spec.n, spec.p, spec.seed.wrapping_add(i as u64))
                .map_err(|e| format!("sample {i}: {e}"))
        })
        .collect()
}

fn run_gen(a: GenArgs) -> Result<u8, String> {
    let mut spec = parse_spec(&a.spec)?;
    if let Some(seed) = a.seed {
        spec.seed = seed;
    }
    let graphs = generate(spec)?;
    let mut text = format!("# beth gen {spec}\n");
    for g in &graphs {
        text.push_str(&to_graph6(g));
        text.push('\n');
    }
    emit(&a.out, &text)?;
    Ok(0)
}

// ---------------------------------------------------------------- suite

const CHECK_IDS: [&str; 19] = [
    "edge-monotonicity-b1",
    "edge-monotonicity-b2",
    "edge-monotonicity-b3",
    "compression-monotonicity-b2",
    "compression-monotonicity-b3",
    "census-identity",
    "edge-count-identity",
    "nonedge-count-identity",
    "cone-C",
    "cone-S",
    "solids-equal-surfaces",
    "chi-bounds",
    "h-bounds",
    "thresholds",
    "hadwiger-class-ops",
    "equality-implies-hadwiger",
    "planar-corollaries",
    "longest-cycle-monotonicity",
    "h-le-longest-cycle",
];

/// Circumference search is exponential; cap it independently of the
/// oracle node budget.
const CIRCUMFERENCE_MAX_VERTICES: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum SuiteStatus {
    Pass,
    Fail,
    SkippedBudget,
}

impl fmt::Display for SuiteStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteStatus::Pass => "pass",
            SuiteStatus::Fail => "fail",
            SuiteStatus::SkippedBudget => "skipped-budget",
        })
    }
}

#[derive(Serialize)]
struct CheckResult {
    check: &'static str,
    graph6: String,
    status: SuiteStatus,
    detail: String,
}

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

/// Budget and size ceilings mean "unknown", everything else would be an
/// engine bug and is surfaced as a failure rather than swallowed.
fn soft(e: &Error) -> Option<String> {
    match e {
        Error::BudgetExhausted { .. }
        | Error::TooLarge { .. }
        | Error::CycleCapExceeded { .. }
        | Error::TooManyCycles { .. } => Some(e.to_string()),
        _ => None,
    }
}

macro_rules! try_soft {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(e) => match soft(&e) {
                Some(detail) => return Verdict::Skip(detail),
                None => return Verdict::Fail(format!("unexpected engine error: {e}")),
            },
        }
    };
}

/// Per-graph memo so checks on the same graph share oracle runs.
struct Ctx<'a> {
    g: &'a Graph,
    g6: String,
    budget: Budget,
    counts: Option<Result<(usize, usize), Error>>,
    chi: Option<Result<usize, Error>>,
    hadwiger: Option<Result<usize, Error>>,
    planar: Option<Result<bool, Error>>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, budget: Budget) -> Ctx<'a> {
        Ctx {
            g,
            g6: to_graph6(g),
            budget,
            counts: None,
            chi: None,
            hadwiger: None,
            planar: None,
        }
    }

    fn counts(&mut self) -> Result<(usize, usize), Error> {
        self.counts
            .get_or_insert_with(|| {
                let cycles = enumerate_induced_cycles(self.g)?;
                let solids = enumerate_solids(self.g)?;
                Ok((cycles.len(), solids.len()))
            })
            .clone()
    }

    fn chi(&mut self) -> Result<usize, Error> {
        let g = self.g;
        let budget = self.budget;
        self.chi
            .get_or_insert_with(|| chromatic_number(g, budget).map(|(k, _)| k))
            .clone()
    }

    fn hadwiger(&mut self) -> Result<usize, Error> {
        let g = self.g;
        let budget = self.budget;
        self.hadwiger
            .get_or_insert_with(|| hadwiger_number(g, budget).map(|(h, _)| h))
            .clone()
    }

    fn planar(&mut self) -> Result<bool, Error> {
        let g = self.g;
        let budget = self.budget;
        self.planar
            .get_or_insert_with(|| is_planar_small(g, budget))
            .clone()
    }
}

fn beth_i(i: u8, g: &Graph) -> Result<i64, Error> {
    match i {
        1 => Ok(beth1(g)),
        2 => beth2(g),
        _ => beth3(g),
    }
}

fn check_edge_monotonicity(ctx: &mut Ctx, i: u8) -> Verdict {
    let before = try_soft!(beth_i(i, ctx.g));
    for e in ctx.g.edges() {
        let (h, _) = try_soft!(ctx.g.contract_edge(e));
        let after = try_soft!(beth_i(i, &h));
        if after > before {
            return Verdict::Fail(format!(
                "beth{i} rose from {before} to {after} contracting {e} in {}",
                ctx.g6
            ));
        }
    }
    Verdict::Pass(format!("all {} edges", ctx.g.edge_count()))
}

fn check_compression_monotonicity(ctx: &mut Ctx, i: u8) -> Verdict {
    let before = try_soft!(beth_i(i, ctx.g));
    for w in ctx.g.vertices() {
        let (h, _) = try_soft!(vertex_compress(ctx.g, w, ctx.budget));
        let after = try_soft!(beth_i(i, &h));
        if after > before {
            return Verdict::Fail(format!(
                "beth{i} rose from {before} to {after} compressing at vertex {w} in {}",
                ctx.g6
            ));
        }
    }
    Verdict::Pass(format!("all {} vertices", ctx.g.vertex_count()))
}

fn check_census_identity(ctx: &mut Ctx) -> Verdict {
    for e in ctx.g.edges() {
        let census = try_soft!(contraction_cycle_census(ctx.g, e));
        if !census.identity_holds() {
            return Verdict::Fail(format!(
                "cycle census books unbalanced at {e} in {}: {census:?}",
                ctx.g6
            ));
        }
    }
    Verdict::Pass(format!("all {} edges", ctx.g.edge_count()))
}

fn check_edge_count_identity(ctx: &mut Ctx) -> Verdict {
    for e in ctx.g.edges() {
        let (h, _) = try_soft!(ctx.g.contract_edge(e));
        let triangles = try_soft!(count_triangles_through(ctx.g, e));
        let lost = ctx.g.edge_count() - h.edge_count();
        if lost != triangles + 1 {
            return Verdict::Fail(format!(
                "contracting {e} in {} lost {lost} edges, expected {} (triangles + 1)",
                ctx.g6,
                triangles + 1
            ));
        }
    }
    Verdict::Pass(format!("all {} edges", ctx.g.edge_count()))
}

fn check_nonedge_count_identity(ctx: &mut Ctx) -> Verdict {
    let before = beth1(ctx.g);
    let pairs = ctx.g.non_edges();
    for &(u, v) in &pairs {
        let common = (ctx.g.neighbors_bits(u) & ctx.g.neighbors_bits(v)).count_ones() as i64;
        let (h, _) = try_soft!(ctx.g.contract_nonedge(u, v));
        if beth1(&h) - before != 1 - common {
            return Verdict::Fail(format!(
                "beth1 stepped by {} identifying ({u}, {v}) in {}, expected {}",
                beth1(&h) - before,
                ctx.g6,
                1 - common
            ));
        }
    }
    Verdict::Pass(format!("all {} nonedges", pairs.len()))
}

fn check_cone(ctx: &mut Ctx, solids_side: bool) -> Verdict {
    let (c, s) = try_soft!(ctx.counts());
    let (coned, _) = try_soft!(ctx.g.cone());
    if solids_side {
        let s_cone = try_soft!(enumerate_solids(&coned)).len();
        if s_cone != s + c {
            return Verdict::Fail(format!(
                "cone of {} has {s_cone} solids, expected s + c = {}",
                ctx.g6,
                s + c
            ));
        }
        Verdict::Pass(format!("{s} + {c} solids"))
    } else {
        let c_cone = try_soft!(enumerate_induced_cycles(&coned)).len();
        let m = ctx.g.edge_count();
        if c_cone != c + m {
            return Verdict::Fail(format!(
                "cone of {} has {c_cone} induced cycles, expected c + m = {}",
                ctx.g6,
                c + m
            ));
        }
        Verdict::Pass(format!("{c} + {m} induced cycles"))
    }
}

fn check_solids_equal_surfaces(ctx: &mut Ctx) -> Verdict {
    let fast: BTreeSet<Vec<usize>> = try_soft!(enumerate_solids(ctx.g))
        .iter()
        .map(|s| s.vertices().to_vec())
        .collect();
    let brute: BTreeSet<Vec<usize>> = try_soft!(enumerate_solids_bruteforce(ctx.g))
        .iter()
        .map(|s| s.vertices().to_vec())
        .collect();
    let spans: BTreeSet<Vec<usize>> =
        try_soft!(enumerate_minimal_closed_surfaces(ctx.g, ctx.budget))
            .iter()
            .map(|cs| cs.vertices())
            .collect();
    if fast != brute {
        return Verdict::Fail(format!(
            "cycle-driven and subset-scan solid families differ on {}: {fast:?} vs {brute:?}",
            ctx.g6
        ));
    }
    if fast != spans {
        return Verdict::Fail(format!(
            "solids and minimal closed surfaces differ on {}: {fast:?} vs {spans:?}",
            ctx.g6
        ));
    }
    Verdict::Pass(format!("{} solids by all three enumerations", fast.len()))
}

fn check_value_bounds(ctx: &mut Ctx, name: &str) -> Verdict {
    let value = if name == "chi" {
        try_soft!(ctx.chi())
    } else {
        try_soft!(ctx.hadwiger())
    };
    let bound1 = beth_core::first_upper_bound(ctx.g);
    let (c, s) = try_soft!(ctx.counts());
    let b1 = beth1(ctx.g);
    let bound2 = try_soft!(beth_core::max_complete_order_within(2, c as i64 - b1));
    let bound3 =
        try_soft!(beth_core::max_complete_order_within(3, s as i64 - c as i64 + b1));
    for (which, bound) in [(1, bound1), (2, bound2), (3, bound3)] {
        if value > bound {
            return Verdict::Fail(format!(
                "{name} = {value} exceeds bound{which} = {bound} on {}",
                ctx.g6
            ));
        }
    }
    Verdict::Pass(format!(
        "{name} = {value} within bounds ({bound1}, {bound2}, {bound3})"
    ))
}

/// Least order whose complete-graph cell count strictly exceeds the
/// observed count; the claim is that chi and hadwiger stay below it.
fn threshold(count: usize, cells: u8) -> u64 {
    let mut r = 1u64;
    loop {
        let full = match cells {
            3 => {
                if r < 3 {
                    0
                } else {
                    r * (r - 1) * (r - 2) / 6
                }
            }
            _ => {
                if r < 4 {
                    0
                } else {
                    r * (r - 1) * (r - 2) * (r - 3) / 24
                }
            }
        };
        if (count as u64) < full {
            return r;
        }
        r += 1;
    }
}

fn check_thresholds(ctx: &mut Ctx) -> Verdict {
    let (c, s) = try_soft!(ctx.counts());
    let chi = try_soft!(ctx.chi()) as u64;
    let h = try_soft!(ctx.hadwiger()) as u64;
    let worst = chi.max(h);
    let t_c = threshold(c, 3);
    let t_s = threshold(s, 4);
    if worst >= t_c {
        return Verdict::Fail(format!(
            "c = {c} < C({t_c},3) yet max(chi, hadwiger) = {worst} on {}",
            ctx.g6
        ));
    }
    if worst >= t_s {
        return Verdict::Fail(format!(
            "s = {s} < C({t_s},4) yet max(chi, hadwiger) = {worst} on {}",
            ctx.g6
        ));
    }
    Verdict::Pass(format!("max(chi, hadwiger) = {worst} below {t_c} and {t_s}"))
}

/// chi <= hadwiger on every component, with budget/size ceilings passed
/// through as errors.
fn in_hadwiger_class(g: &Graph, budget: Budget) -> Result<Option<String>, Error> {
    for comp in g.components() {
        let (sub, _) = g.induced_subgraph(&comp)?;
        let (chi, _) = chromatic_number(&sub, budget)?;
        let (h, _) = hadwiger_number(&sub, budget)?;
        if chi > h {
            return Ok(Some(format!(
                "component {comp:?} has chi = {chi} > hadwiger = {h}"
            )));
        }
    }
    Ok(None)
}

fn check_hadwiger_class_ops(ctx: &mut Ctx) -> Verdict {
    if let Some(witness) = try_soft!(in_hadwiger_class(ctx.g, ctx.budget)) {
        return Verdict::Fail(format!("{witness} in {} before any operation", ctx.g6));
    }
    let triangle = Graph::complete(3);
    let mut constructions: Vec<(&str, Graph)> = Vec::new();
    constructions.push((
        "clique-sum with a triangle at vertex 0",
        try_soft!(clique_sum(ctx.g, &triangle, &[(0, 0)])),
    ));
    if let Some(&e) = ctx.g.edges().first() {
        constructions.push((
            "subdivision of the first edge",
            try_soft!(ctx.g.subdivide_edge(e, 2)),
        ));
        constructions.push((
            "hajos merge with a triangle on the first edge",
            try_soft!(hajos_merge(ctx.g, &triangle, e.u, e.v, 0, 1)),
        ));
    }
    if let Some(&e) = ctx.g.cut_edges().first() {
        let mut cut = ctx.g.clone();
        try_soft!(cut.remove_edge(e.u, e.v));
        constructions.push(("deletion of the first cut edge", cut));
    }
    let total = constructions.len();
    for (op, built) in constructions {
        if let Some(witness) = try_soft!(in_hadwiger_class(&built, ctx.budget)) {
            return Verdict::Fail(format!("{op} on {} left the class: {witness}", ctx.g6));
        }
    }
    Verdict::Pass(format!("{total} constructions stayed in class"))
}

fn check_equality_implies_hadwiger(ctx: &mut Ctx) -> Verdict {
    let (c, s) = try_soft!(ctx.counts());
    let chi = try_soft!(ctx.chi());
    let h = try_soft!(ctx.hadwiger());
    let b1 = beth1(ctx.g);
    let values = [b1, c as i64 - b1, s as i64 - c as i64 + b1];
    for (i, value) in (1u8..=3).zip(values) {
        let full = try_soft!(beth_complete(i, h as u64));
        if full == value {
            if chi > h {
                return Verdict::Fail(format!(
                    "beth{i} = {value} matches the complete graph of order {h} yet chi = {chi} > {h} on {}",
                    ctx.g6
                ));
            }
            return Verdict::Pass(format!("beth{i} matches K^{h} and chi = {chi} <= {h}"));
        }
    }
    Verdict::Pass("no characteristic matches its complete-graph value; nothing to assert".into())
}

fn check_planar_corollaries(ctx: &mut Ctx) -> Verdict {
    if !try_soft!(ctx.planar()) {
        return Verdict::Pass("not planar; hypotheses empty".into());
    }
    let (c, s) = try_soft!(ctx.counts());
    let faces = ctx.g.edge_count() as i64 - ctx.g.vertex_count() as i64 + 2;
    let euler = s as i64 - c as i64 + faces;
    if euler < 1 {
        return Verdict::Fail(format!(
            "planar graph {} has s - c + F = {euler} < 1",
            ctx.g6
        ));
    }
    let chi = try_soft!(ctx.chi());
    if c as i64 <= faces + 2 && chi > 4 {
        return Verdict::Fail(format!(
            "planar graph {} has c = {c} <= F + 2 = {} yet chi = {chi} > 4",
            ctx.g6,
            faces + 2
        ));
    }
    if euler == 1 && chi > 4 {
        return Verdict::Fail(format!(
            "planar graph {} has s - c + F = 1 yet chi = {chi} > 4",
            ctx.g6
        ));
    }
    Verdict::Pass(format!("s - c + F = {euler}, chi = {chi}"))
}

fn circumference(g: &Graph) -> Result<usize, Error> {
    if g.vertex_count() > CIRCUMFERENCE_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            value: g.vertex_count(),
            max: CIRCUMFERENCE_MAX_VERTICES,
        });
    }
    Ok(longest_cycle_length(g))
}

fn check_longest_cycle_monotonicity(ctx: &mut Ctx) -> Verdict {
    let before = try_soft!(circumference(ctx.g));
    for e in ctx.g.edges() {
        let (h, _) = try_soft!(ctx.g.contract_edge(e));
        let after = try_soft!(circumference(&h));
        if after > before {
            return Verdict::Fail(format!(
                "circumference rose from {before} to {after} contracting {e} in {}",
                ctx.g6
            ));
        }
    }
    Verdict::Pass(format!("circumference {before} never rose"))
}

fn check_h_le_longest_cycle(ctx: &mut Ctx) -> Verdict {
    let l = try_soft!(circumference(ctx.g));
    let h = try_soft!(ctx.hadwiger());
    // Acyclic graphs still contract onto an edge, so the bound floors
    // at 2.
    if h > l.max(2) {
        return Verdict::Fail(format!(
            "hadwiger = {h} exceeds max(circumference, 2) = {} on {}",
            l.max(2),
            ctx.g6
        ));
    }
    Verdict::Pass(format!("hadwiger = {h} <= max({l}, 2)"))
}

fn evaluate(id: &'static str, ctx: &mut Ctx) -> CheckResult {
    let verdict = match id {
        "edge-monotonicity-b1" => check_edge_monotonicity(ctx, 1),
        "edge-monotonicity-b2" => check_edge_monotonicity(ctx, 2),
        "edge-monotonicity-b3" => check_edge_monotonicity(ctx, 3),
        "compression-monotonicity-b2" => check_compression_monotonicity(ctx, 2),
        "compression-monotonicity-b3" => check_compression_monotonicity(ctx, 3),
        "census-identity" => check_census_identity(ctx),
        "edge-count-identity" => check_edge_count_identity(ctx),
        "nonedge-count-identity" => check_nonedge_count_identity(ctx),
        "cone-C" => check_cone(ctx, false),
        "cone-S" => check_cone(ctx, true),
        "solids-equal-surfaces" => check_solids_equal_surfaces(ctx),
        "chi-bounds" => check_value_bounds(ctx, "chi"),
        "h-bounds" => check_value_bounds(ctx, "hadwiger"),
        "thresholds" => check_thresholds(ctx),
        "hadwiger-class-ops" => check_hadwiger_class_ops(ctx),
        "equality-implies-hadwiger" => check_equality_implies_hadwiger(ctx),
        "planar-corollaries" => check_planar_corollaries(ctx),
        "longest-cycle-monotonicity" => check_longest_cycle_monotonicity(ctx),
        _ => check_h_le_longest_cycle(ctx),
    };
    let (status, detail) = match verdict {
        Verdict::Pass(d) => (SuiteStatus::Pass, d),
        Verdict::Fail(d) => (SuiteStatus::Fail, d),
        Verdict::Skip(d) => (SuiteStatus::SkippedBudget, d),
    };
    CheckResult {
        check: id,
        graph6: ctx.g6.clone(),
        status,
        detail,
    }
}

fn load_corpus(a: &SuiteArgs) -> Result<Vec<Graph>, String> {
    if let Some(spec) = &a.generator {
        return generate(parse_spec(spec)?);
    }
    if let Some(path) = &a.file {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let mut graphs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let g = parse_graph6(line).map_err(|e| format!("corpus line {}: {e}", i + 1))?;
            if !g.is_connected() {
                return Err(format!("corpus line {}: graph is not connected", i + 1));
            }
            graphs.push(g);
        }
        return Ok(graphs);
    }
    // Default corpus: exhaustive connected graphs on up to 7 vertices,
    // the same family a geng run would supply.
    all_connected_graphs(7).map_err(|e| e.to_string())
}

fn suite_csv(results: &[CheckResult]) -> String {
    let mut text = String::from("check,graph6,status,detail\n");
    for r in results {
        text.push_str(&format!(
            "{},{},{},{}\n",
            csv_field(r.check),
            csv_field(&r.graph6),
            r.status,
            csv_field(&r.detail)
        ));
    }
    text
}

fn run_suite(a: SuiteArgs) -> Result<u8, String> {
    let budget = resolve_budget(a.budget)?;
    let enabled: Vec<&'static str> = if a.checks.is_empty() {
        CHECK_IDS.to_vec()
    } else {
        for id in &a.checks {
            if !CHECK_IDS.contains(&id.as_str()) {
                return Err(format!(
                    "unknown check id {id:?}; valid ids: {}",
                    CHECK_IDS.join(", ")
                ));
            }
        }
        CHECK_IDS
            .iter()
            .copied()
            .filter(|id| a.checks.iter().any(|want| want == id))
            .collect()
    };
    let corpus = load_corpus(&a)?;

    // Work splits per graph; the ordered collect keeps output identical
    // to a sequential run no matter how the pool schedules.
    let results: Vec<CheckResult> = corpus
        .par_iter()
        .map(|g| {
            let mut ctx = Ctx::new(g, budget);
            enabled
                .iter()
                .map(|id| evaluate(id, &mut ctx))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&results).expect("results serialize");
            s.push('\n');
            s
        }
        Format::Csv => suite_csv(&results),
    };
    emit(&a.out, &text)?;

    let pass = results.iter().filter(|r| r.status == SuiteStatus::Pass).count();
    let fail = results.iter().filter(|r| r.status == SuiteStatus::Fail).count();
    let skip = results.len() - pass - fail;
    eprintln!(
        "suite: {pass} pass, {fail} fail, {skip} skipped across {} graphs and {} checks",
        corpus.len(),
        enabled.len()
    );
    for r in results.iter().filter(|r| r.status == SuiteStatus::Fail) {
        eprintln!("suite: FAIL {} on {}: {}", r.check, r.graph6, r.detail);
    }
    Ok(if fail > 0 { 1 } else { 0 })
}
