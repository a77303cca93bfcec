//! Command-line front end: structural analysis, instance solving, catalog
//! sweeps with a JSONL audit trail, and discharging checks.

use clap::{Parser, Subcommand, ValueEnum};
use gecol::choosability::{
    classify_bound, criticality_obstructions, group_edge_chromatic_number_bounded,
    group_edge_choice_number_bounded, is_a_colorable, is_group_k_edge_choosable, SweepOptions,
};
use gecol::cycles::{girth, has_adjacent_short_cycles};
use gecol::discharging::{apply_rules, builtin_ruleset, nonnegativity_report};
use gecol::embedding::EmbeddingJson;
use gecol::graph::Graph;
use gecol::instance::{InstanceJson, WitnessJson};
use gecol::linegraph::line_graph;
use gecol::solver::{peel_and_color, solve_exact, verify_coloring, PeelOutcome, VerifyOutcome};
use gecol::{abelian_groups_of_order, ListAssignment};
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "gecol", version, about = "group edge coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Peel,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    Conjecture1,
    #[value(name = "conjecture2-lite")]
    Conjecture2Lite,
    Critical,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report for a graph (graph6 or JSON): girth, degeneracy,
    /// adjacent short cycles, and the applicable choice-number bounds.
    Analyze {
        /// graph file; graph6 line, or JSON {"n", "edges"}
        input: PathBuf,
        /// assert that the graph is planar (not verified here)
        #[arg(long)]
        planar: bool,
    },
    /// Solve one coloring instance; prints a witness or UNSAT.
    Solve {
        /// instance JSON file
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
        /// surplus over max degree for the peel route (list size = max degree + i)
        #[arg(long)]
        i: Option<usize>,
        /// write the witness JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a catalog of graph6 lines and append verdicts to a JSONL store.
    Search {
        /// file with one graph6 graph per line
        catalog: PathBuf,
        #[arg(long, value_enum)]
        mode: SearchMode,
        /// largest group order to sweep
        #[arg(long, default_value_t = 4)]
        max_order: u64,
        /// criticality surplus for --mode critical
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// worker threads (never affects verdicts)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// JSONL results store, append-only
        #[arg(long, default_value = "results.jsonl")]
        out: PathBuf,
    },
    /// Apply a builtin discharging rule set to a plane embedding.
    Discharge {
        /// embedding JSON file {"n", "edges", "rotation"}
        embedding: PathBuf,
        #[arg(long)]
        case: String,
        /// maximum degree parameter for the T5 rules
        #[arg(long)]
        delta: Option<i64>,
        /// write the charge CSV here
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze { input, planar } => cmd_analyze(&input, planar),
        Command::Solve { instance, method, i, out } => cmd_solve(&instance, method, i, out),
        Command::Search { catalog, mode, max_order, i, jobs, out } => {
            cmd_search(&catalog, mode, max_order, i, jobs, &out)
        }
        Command::Discharge { embedding, case, delta, out } => {
            cmd_discharge(&embedding, &case, delta, out)
        }
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(|e| e.to_string())
    } else {
        let line = trimmed
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or("empty graph file")?;
        gecol::graph6::decode(line).map_err(|e| e.to_string())
    }
}

fn cmd_analyze(input: &PathBuf, planar: bool) -> ExitCode {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let (degeneracy, _) = g.degeneracy();
    let report = json!({
        "n": g.vertex_count(),
        "edges": g.edge_count(),
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
        "connected": g.is_connected(),
        "girth": girth(&g),
        "degeneracy": degeneracy,
        "adjacent_short_cycles": {
            "3-3": has_adjacent_short_cycles(&g, 3, 3),
            "3-4": has_adjacent_short_cycles(&g, 3, 4),
            "4-5": has_adjacent_short_cycles(&g, 4, 5),
            "4-7": has_adjacent_short_cycles(&g, 4, 7),
        },
        "planar_claim": planar,
        "bound": classify_bound(&g, planar),
    });
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    ExitCode::SUCCESS
}

/// Instance file: the base fields describe the graph being colored; for the
/// peel route that graph must be the line graph of `base`, which supplies
/// the peeling structure.
#[derive(Serialize, Deserialize)]
struct SolveFile {
    #[serde(flatten)]
    instance: InstanceJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<Graph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
}

fn emit_witness(w: &WitnessJson, out: Option<PathBuf>) -> ExitCode {
    let text = serde_json::to_string_pretty(w).unwrap();
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, text + "\n") {
                return fail(format!("{}: {e}", path.display()));
            }
            println!("SAT");
        }
        None => println!("{text}"),
    }
    ExitCode::SUCCESS
}

fn cmd_solve(path: &PathBuf, method: Method, i_flag: Option<usize>, out: Option<PathBuf>) -> ExitCode {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", path.display())),
    };
    let file: SolveFile = match serde_json::from_str(&text) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let (graph, fa, la) = match file.instance.build() {
        Ok(parts) => parts,
        Err(e) => return fail(e),
    };
    match method {
        Method::Exact => {
            let la = la.unwrap_or_else(|| {
                ListAssignment::full(fa.group.clone(), graph.vertex_count())
            });
            match solve_exact(&graph, &fa, &la) {
                Some(c) => {
                    // self-check before emission
                    match verify_coloring(&graph, &fa, Some(&la), &c) {
                        Ok(VerifyOutcome::Valid) => {}
                        other => return fail(format!("solver output failed verification: {other:?}")),
                    }
                    emit_witness(&WitnessJson::from_coloring(&fa.group, &c), out)
                }
                None => {
                    println!("UNSAT");
                    ExitCode::from(1)
                }
            }
        }
        Method::Peel => {
            let base = match &file.base {
                Some(b) => b,
                None => return fail("--method peel needs a \"base\" graph in the instance file"),
            };
            let lm = line_graph(base);
            if lm.line_graph.edges() != graph.edges()
                || lm.line_graph.vertex_count() != graph.vertex_count()
            {
                return fail("instance graph is not the line graph of \"base\"");
            }
            let i = match i_flag.or(file.i) {
                Some(i) => i,
                None => return fail("--method peel needs --i (or \"i\" in the file)"),
            };
            let la = match la {
                Some(la) => la,
                None => return fail("--method peel needs explicit lists"),
            };
            match peel_and_color(base, i, &fa, &la) {
                Err(e) => fail(e),
                Ok(PeelOutcome::Stuck { core }) => {
                    println!("UNSAT stuck core edges {core:?}");
                    ExitCode::from(1)
                }
                Ok(PeelOutcome::Colored(c)) => {
                    match verify_coloring(&graph, &fa, Some(&la), &c) {
                        Ok(VerifyOutcome::Valid) => {}
                        other => return fail(format!("solver output failed verification: {other:?}")),
                    }
                    emit_witness(&WitnessJson::from_coloring(&fa.group, &c), out)
                }
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RunRecord {
    command: String,
    mode: String,
    line: usize,
    input: String,
    input_digest: String,
    parameters: serde_json::Value,
    verdict: serde_json::Value,
    wall_ms: u128,
    version: String,
}

fn digest_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn mode_name(mode: SearchMode) -> &'static str {
    match mode {
        SearchMode::Conjecture1 => "conjecture1",
        SearchMode::Conjecture2Lite => "conjecture2-lite",
        SearchMode::Critical => "critical",
    }
}

fn groups_of_orders(lo: u64, hi: u64) -> Vec<gecol::Group> {
    let mut out = Vec::new();
    for o in lo.max(1)..=hi {
        out.extend(abelian_groups_of_order(o as i64).unwrap());
    }
    out
}

/// A machine-checkable failing instance for the line graph of g at list
/// size k, if one exists within the order bound.
fn edge_failure_witness(g: &Graph, k: usize, max_order: u64) -> Option<serde_json::Value> {
    let groups: Vec<_> = groups_of_orders(k as u64, max_order);
    let verdict = is_group_k_edge_choosable(g, k, &groups, &SweepOptions::default()).ok()?;
    verdict.witness.map(|w| {
        let lg = line_graph(g).line_graph;
        serde_json::to_value(InstanceJson::from_parts(&lg, &w.fa, w.lists.as_ref())).unwrap()
    })
}

fn search_verdict(g: &Graph, mode: SearchMode, max_order: u64, i: usize) -> serde_json::Value {
    let opts = SweepOptions::default();
    match mode {
        SearchMode::Conjecture1 => {
            let delta = g.max_degree();
            let chromatic = group_edge_chromatic_number_bounded(g, max_order, &opts).unwrap();
            let consistent = g.edge_count() == 0 || chromatic.value <= delta + 1;
            let witness = if consistent {
                None
            } else {
                // ship the failing (group, f) pair behind the violation
                let lg = line_graph(g).line_graph;
                let mut found = None;
                'orders: for order in 1..=max_order {
                    for group in abelian_groups_of_order(order as i64).unwrap() {
                        let v = is_a_colorable(&lg, &group, &opts);
                        if !v.holds {
                            let w = v.witness.unwrap();
                            found = Some(
                                serde_json::to_value(InstanceJson::from_parts(
                                    &lg,
                                    &w.fa,
                                    None,
                                ))
                                .unwrap(),
                            );
                            if order as usize >= delta + 1 {
                                break 'orders;
                            }
                        }
                    }
                }
                found
            };
            json!({
                "max_degree": delta,
                "edge_chromatic": chromatic,
                "consistent": consistent,
                "witness": witness,
            })
        }
        SearchMode::Conjecture2Lite => {
            let chromatic = group_edge_chromatic_number_bounded(g, max_order, &opts).unwrap();
            let choice = group_edge_choice_number_bounded(g, max_order, &opts).unwrap();
            let conclusive =
                chromatic.value <= max_order as usize && choice.value <= max_order as usize;
            let consistent = !conclusive || chromatic.value == choice.value;
            let witness = if consistent || choice.value < 2 {
                None
            } else {
                edge_failure_witness(g, choice.value - 1, max_order)
            };
            json!({
                "edge_chromatic": chromatic,
                "edge_choice": choice,
                "conclusive": conclusive,
                "consistent": consistent,
                "witness": witness,
            })
        }
        SearchMode::Critical => {
            let obstructions = criticality_obstructions(g, i);
            json!({
                "i": i,
                "candidate": obstructions.is_empty(),
                "obstructions": obstructions,
            })
        }
    }
}

fn cmd_search(
    catalog: &PathBuf,
    mode: SearchMode,
    max_order: u64,
    i: usize,
    jobs: usize,
    out: &PathBuf,
) -> ExitCode {
    let text = match fs::read_to_string(catalog) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", catalog.display())),
    };
    let parameters = json!({"max_order": max_order, "i": i});
    let mode_str = mode_name(mode).to_string();

    // parse up front; failures are logged and skipped, the run continues
    let mut items: Vec<(usize, String, Graph)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match gecol::graph6::decode(line) {
            Ok(g) => items.push((lineno + 1, line.to_string(), g)),
            Err(e) => eprintln!("line {}: {e}", lineno + 1),
        }
    }

    let run = |&(lineno, ref line, ref g): &(usize, String, Graph)| -> RunRecord {
        let started = Instant::now();
        let verdict = search_verdict(g, mode, max_order, i);
        RunRecord {
            command: "search".to_string(),
            mode: mode_str.clone(),
            line: lineno,
            input: line.clone(),
            input_digest: digest_hex(line.as_bytes()),
            parameters: parameters.clone(),
            verdict,
            wall_ms: started.elapsed().as_millis(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    };
    let records: Vec<RunRecord> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        // items processed in parallel, collected back in input order
        pool.install(|| {
            use rayon::prelude::*;
            items.par_iter().map(run).collect()
        })
    } else {
        items.iter().map(run).collect()
    };

    // corruption tripwire: same input + parameters must never change verdict
    let mut known: std::collections::HashMap<(String, String, String), serde_json::Value> =
        std::collections::HashMap::new();
    if let Ok(existing) = fs::read_to_string(out) {
        for line in existing.lines().filter(|l| !l.trim().is_empty()) {
            let old: RunRecord = match serde_json::from_str(line) {
                Ok(r) => r,
                Err(e) => return fail(format!("corrupt results store {}: {e}", out.display())),
            };
            known.insert(
                (old.input_digest.clone(), old.mode.clone(), old.parameters.to_string()),
                old.verdict,
            );
        }
    }
    for rec in &records {
        let key = (rec.input_digest.clone(), rec.mode.clone(), rec.parameters.to_string());
        if let Some(old) = known.get(&key) {
            if *old != rec.verdict {
                return fail(format!(
                    "digest collision with differing verdicts for {} — store corrupt, aborting",
                    rec.input
                ));
            }
        }
    }

    let mut file = match fs::OpenOptions::new().create(true).append(true).open(out) {
        Ok(f) => f,
        Err(e) => return fail(format!("{}: {e}", out.display())),
    };
    let mut inconsistent = 0usize;
    for rec in &records {
        if rec.verdict.get("consistent") == Some(&serde_json::Value::Bool(false)) {
            inconsistent += 1;
        }
        if let Err(e) = writeln!(file, "{}", serde_json::to_string(rec).unwrap()) {
            return fail(e);
        }
    }
    println!(
        "{} graphs, {} inconsistent, results appended to {}",
        records.len(),
        inconsistent,
        out.display()
    );
    if inconsistent > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_discharge(
    embedding: &PathBuf,
    case: &str,
    delta: Option<i64>,
    out: Option<PathBuf>,
) -> ExitCode {
    let text = match fs::read_to_string(embedding) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", embedding.display())),
    };
    let ej: EmbeddingJson = match serde_json::from_str(&text) {
        Ok(e) => e,
        Err(e) => return fail(e),
    };
    let pg = match ej.build() {
        Ok(pg) => pg,
        Err(e) => return fail(e),
    };
    let sys = match builtin_ruleset(case, delta) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let cm = match apply_rules(&pg, &sys, delta) {
        Ok(cm) => cm,
        Err(e) => return fail(e),
    };
    println!("case {case} (m={}, n={})", sys.m, sys.n);
    println!("total before {}", cm.total_before());
    println!("total after  {}", cm.total_after());
    println!(
        "conservation {}",
        if cm.total_before() == cm.total_after() { "OK" } else { "VIOLATED" }
    );
    let negatives = nonnegativity_report(&pg, &cm);
    println!("negative elements: {}", negatives.len());
    for n in &negatives {
        println!("  {} degree {} charge {}", n.id, n.degree, n.value);
    }
    if let Some(path) = out {
        if let Err(e) = fs::write(&path, cm.to_csv(&pg)) {
            return fail(format!("{}: {e}", path.display()));
        }
    }
    ExitCode::SUCCESS
}
