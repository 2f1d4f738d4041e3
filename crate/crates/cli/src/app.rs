//! Command definitions and dispatch for the `pg` binary.
//!
//! Exit codes: 0 on success, 1 when a verification run reports failures or
//! an exact/formula cross-check mismatches, 2 for usage, parse, and input
//! errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pg_core::claims::{run_corpus, run_to_json, ClaimId, ClaimStatus, Corpus, CorpusRun};
use pg_core::error::Error;
use pg_core::graph::{self, Diameter};
use pg_core::group::io::load_group_limited;
use pg_core::group::spec::GroupSpec;
use pg_core::group::{Group, Limits};
use pg_core::powergraph::export::{export_graph, ExportFormat};
use pg_core::powergraph::{PowerGraph, Variant};
use pg_core::weight::{enumerate_mcd_sets, weight};

use crate::parse::parse_spec;

#[derive(Parser)]
#[command(
    name = "pg",
    version,
    about = "Power graphs of finite groups: build, export, measure, verify"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structure flags and graph invariants of one group
    Stats {
        /// Group spec like C12, S3xZ6, Q8 — or a path to a table JSON file
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Export a power graph
    Graph {
        target: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Reduced)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Dot)]
        format: FormatArg,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum totient weight over maximal divisor chains of n
    Weight {
        n: u64,
        /// List every maximal chain with its weight
        #[arg(long)]
        sets: bool,
    },
    /// Check the published claims over a corpus of groups
    Verify {
        /// "default" or a comma-separated list of group specs
        #[arg(long, default_value = "default")]
        corpus: String,
        /// "all" or a comma-separated list of claim ids
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long)]
        json: bool,
        /// Skip corpus groups larger than this order
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Connected components of the reduced power graph
    Components { target: String },
    /// Diameter of the reduced power graph
    Diameter { target: String },
    /// Clique number of the reduced power graph
    Clique {
        target: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Reduced,
    Full,
    Directed,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Reduced => Variant::Reduced,
            VariantArg::Full => Variant::Full,
            VariantArg::Directed => Variant::Directed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Edgelist,
    Json,
}

impl From<FormatArg> for ExportFormat {
    fn from(f: FormatArg) -> ExportFormat {
        match f {
            FormatArg::Dot => ExportFormat::Dot,
            FormatArg::Edgelist => ExportFormat::EdgeList,
            FormatArg::Json => ExportFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Exact,
    Both,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version exit 0; every usage problem exits 2.
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn limits_from_env() -> Result<Limits, Error> {
    let mut limits = Limits::default();
    if let Ok(text) = std::env::var("PG_MAX_ORDER") {
        limits.max_order = text.parse().map_err(|_| {
            Error::Usage(format!(
                "PG_MAX_ORDER must be a positive integer, got '{text}'"
            ))
        })?;
    }
    Ok(limits)
}

/// A target names either a table file on disk or a group spec.
fn resolve_group(target: &str, limits: &Limits) -> Result<Group, Error> {
    if Path::new(target).is_file() {
        return load_group_limited(Path::new(target), limits);
    }
    let spec = parse_spec(target).map_err(|e| {
        Error::Usage(format!(
            "'{target}' is not a file, and parsing it as a group spec failed: {e}"
        ))
    })?;
    spec.build_with(limits)
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    let limits = limits_from_env()?;
    match cli.cmd {
        Cmd::Stats { target, json } => cmd_stats(&target, json, &limits),
        Cmd::Graph {
            target,
            variant,
            format,
            out,
        } => cmd_graph(
            &target,
            variant.into(),
            format.into(),
            out.as_deref(),
            &limits,
        ),
        Cmd::Weight { n, sets } => cmd_weight(n, sets),
        Cmd::Verify {
            corpus,
            claims,
            json,
            max_order,
        } => cmd_verify(&corpus, &claims, json, max_order, limits),
        Cmd::Components { target } => cmd_components(&target, &limits),
        Cmd::Diameter { target } => cmd_diameter(&target, &limits),
        Cmd::Clique { target, method } => cmd_clique(&target, method, &limits),
    }
}

#[derive(Serialize)]
struct StatsDoc {
    group: String,
    order: usize,
    exponent: u64,
    nilpotent: bool,
    p_group: Option<u64>,
    vertices: usize,
    edges: usize,
    components: usize,
    diameter: Option<u32>,
    clique_formula: u64,
    clique_exact: Option<u64>,
}

fn weight_formula(g: &Group) -> u64 {
    g.elements()
        .map(|a| weight(u64::from(g.order_of(a))))
        .max()
        .expect("group is nonempty")
}

fn cmd_stats(target: &str, json: bool, limits: &Limits) -> Result<i32, Error> {
    let g = resolve_group(target, limits)?;
    let pg = PowerGraph::reduced(&g);
    let parts = graph::connected_components(pg.adjacency());
    let diameter = match graph::diameter(pg.adjacency()).diameter {
        Diameter::Finite(d) => Some(d),
        Diameter::Disconnected => None,
    };
    let clique_exact = match graph::clique_number_exact(pg.adjacency()) {
        Ok(w) => Some(w as u64),
        Err(Error::Resource(_)) => None,
        Err(e) => return Err(e),
    };
    let doc = StatsDoc {
        group: g.name().to_string(),
        order: g.order(),
        exponent: g.exponent(),
        nilpotent: g.is_nilpotent(),
        p_group: g.is_p_group(),
        vertices: pg.vertex_count(),
        edges: pg.edge_count(),
        components: parts.count,
        diameter,
        clique_formula: weight_formula(&g),
        clique_exact,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("group: {}", doc.group);
        println!("order: {}", doc.order);
        println!("exponent: {}", doc.exponent);
        println!("nilpotent: {}", doc.nilpotent);
        match doc.p_group {
            Some(p) => println!("p-group: {p}"),
            None => println!("p-group: no"),
        }
        println!("reduced vertices: {}", doc.vertices);
        println!("reduced edges: {}", doc.edges);
        println!("components: {}", doc.components);
        match doc.diameter {
            Some(d) => println!("diameter: {d}"),
            None => println!("diameter: disconnected"),
        }
        println!("clique number (formula): {}", doc.clique_formula);
        match doc.clique_exact {
            Some(w) => println!("clique number (exact): {w}"),
            None => println!("clique number (exact): n/a (over the exact-solver cap)"),
        }
    }
    Ok(0)
}

fn cmd_graph(
    target: &str,
    variant: Variant,
    format: ExportFormat,
    out: Option<&Path>,
    limits: &Limits,
) -> Result<i32, Error> {
    let g = resolve_group(target, limits)?;
    let pg = PowerGraph::build(&g, variant, None)?;
    let text = export_graph(&pg, format);
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_weight(n: u64, sets: bool) -> Result<i32, Error> {
    if n == 0 {
        return Err(Error::Usage("weight is defined for n >= 1".into()));
    }
    if sets {
        let mut all = enumerate_mcd_sets(n)?;
        all.sort_by(|a, b| {
            a.weight()
                .cmp(&b.weight())
                .then_with(|| a.chain().cmp(b.chain()))
        });
        for set in &all {
            let chain: Vec<String> = set.chain().iter().map(u64::to_string).collect();
            println!("{{{}}} weight {}", chain.join(","), set.weight());
        }
    }
    println!("weight({n}) = {}", weight(n));
    Ok(0)
}

fn parse_claim_list(text: &str) -> Result<Vec<ClaimId>, Error> {
    if text.eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in text.split(',') {
        let id = ClaimId::parse(part.trim()).ok_or_else(|| {
            let known: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
            Error::Usage(format!(
                "unknown claim '{part}'; known claims: {}",
                known.join(", ")
            ))
        })?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    if out.is_empty() {
        return Err(Error::Usage("no claims requested".into()));
    }
    Ok(out)
}

fn parse_corpus(text: &str, limits: Limits) -> Result<Corpus, Error> {
    if text.eq_ignore_ascii_case("default") {
        return Ok(Corpus::standard(limits));
    }
    let mut specs: Vec<GroupSpec> = Vec::new();
    for part in text.split(',') {
        let spec = parse_spec(part.trim())
            .map_err(|e| Error::Usage(format!("bad corpus spec '{part}': {e}")))?;
        specs.push(spec);
    }
    Ok(Corpus::new(specs, limits))
}

fn print_verify_table(run: &CorpusRun, claims: &[ClaimId]) {
    for report in &run.reports {
        if report.status == ClaimStatus::Fail {
            let witness = report.witness.as_deref().unwrap_or("no witness");
            println!("FAIL {} on {}: {}", report.claim, report.group, witness);
        }
    }
    let mut tallies: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for report in &run.reports {
        let entry = tallies.entry(report.claim.as_str()).or_default();
        match report.status {
            ClaimStatus::Pass => entry.0 += 1,
            ClaimStatus::Fail => entry.1 += 1,
            ClaimStatus::Skipped(_) => entry.2 += 1,
        }
    }
    println!("{:<16} {:>5} {:>5} {:>5}", "claim", "pass", "fail", "skip");
    for claim in claims {
        let (pass, fail, skip) = tallies.get(claim.as_str()).copied().unwrap_or_default();
        println!("{:<16} {:>5} {:>5} {:>5}", claim.as_str(), pass, fail, skip);
    }
    println!(
        "total: pass {}  fail {}  skipped {}",
        run.summary.pass, run.summary.fail, run.summary.skipped
    );
}

fn cmd_verify(
    corpus_text: &str,
    claims_text: &str,
    json: bool,
    max_order: Option<usize>,
    mut limits: Limits,
) -> Result<i32, Error> {
    if let Some(cap) = max_order {
        limits.max_order = cap;
    }
    let claims = parse_claim_list(claims_text)?;
    let corpus = parse_corpus(corpus_text, limits)?;
    let run = run_corpus(&corpus, &claims)?;
    if json {
        print!("{}", run_to_json(&run));
    } else {
        print_verify_table(&run, &claims);
    }
    Ok(if run.summary.fail > 0 { 1 } else { 0 })
}

fn cmd_components(target: &str, limits: &Limits) -> Result<i32, Error> {
    let g = resolve_group(target, limits)?;
    let pg = PowerGraph::reduced(&g);
    let parts = graph::connected_components(pg.adjacency());
    println!("components: {}", parts.count);
    let sizes: Vec<String> = parts.sizes.iter().map(usize::to_string).collect();
    println!("sizes: {}", sizes.join(" "));
    Ok(0)
}

fn cmd_diameter(target: &str, limits: &Limits) -> Result<i32, Error> {
    let g = resolve_group(target, limits)?;
    let pg = PowerGraph::reduced(&g);
    match graph::diameter(pg.adjacency()).diameter {
        Diameter::Finite(d) => println!("{d}"),
        Diameter::Disconnected => println!("disconnected"),
    }
    Ok(0)
}

fn cmd_clique(target: &str, method: MethodArg, limits: &Limits) -> Result<i32, Error> {
    let g = resolve_group(target, limits)?;
    match method {
        MethodArg::Formula => {
            println!("{}", weight_formula(&g));
            Ok(0)
        }
        MethodArg::Exact => {
            let pg = PowerGraph::reduced(&g);
            println!("{}", graph::clique_number_exact(pg.adjacency())?);
            Ok(0)
        }
        MethodArg::Both => {
            let formula = weight_formula(&g);
            let pg = PowerGraph::reduced(&g);
            let exact = graph::clique_number_exact(pg.adjacency())? as u64;
            println!("formula: {formula}");
            println!("exact: {exact}");
            if formula == exact {
                println!("MATCH");
                Ok(0)
            } else {
                println!("MISMATCH");
                Ok(1)
            }
        }
    }
}
