//! Browser bindings. Each exported function takes plain strings and numbers
//! and returns a JSON string; the `*_json` functions hold the logic so that
//! they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use paramkit::bench::{degree_branch_bound, edge_branch_bound};
use paramkit::color_coding::{colorful_path_decide, trials_for_confidence, Coloring};
use paramkit::generate::{generate, GraphKind};
use paramkit::kernel::{nt_half_integral, nt_kernel_vc, KernelOutcome};
use paramkit::rng::Seed;
use paramkit::search_tree::{vc_degree_branch, vc_edge_branch, vc_path_branch};
use paramkit::{Graph, ProblemInstance, Vertex};

/// Largest graph the demo will draw or branch on.
pub const MAX_DEMO_N: usize = 60;
pub const MAX_DEMO_K: usize = 14;
pub const MAX_RUNS: usize = 500;

/// Edge-list text (starting with `p`) or a generator spec such as `cycle:6`.
pub fn parse_graph(input: &str) -> Result<Graph, String> {
    let input = input.trim();
    let is_text = input.contains('\n') || input.split_whitespace().next() == Some("p");
    let g = if is_text {
        Graph::parse_edge_list(input).map_err(|e| e.to_string())?
    } else {
        let kind: GraphKind = input.parse().map_err(|e: paramkit::Error| e.to_string())?;
        generate(&kind).map_err(|e| e.to_string())?
    };
    if g.n() > MAX_DEMO_N {
        return Err(format!("{} vertices; the demo draws at most {MAX_DEMO_N}", g.n()));
    }
    Ok(g)
}

#[derive(Serialize)]
struct NtView {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    zero: Vec<Vertex>,
    half: Vec<Vertex>,
    one: Vec<Vertex>,
    lp_value: f64,
    k: usize,
    kernel: String,
}

/// Half-integral LP partition and the kernel it yields for parameter `k`.
pub fn nt_partition_json(input: &str, k: usize) -> Result<String, String> {
    let g = parse_graph(input)?;
    let p = nt_half_integral(&g);
    let kernel = match nt_kernel_vc(&ProblemInstance::new(g.clone(), k)) {
        KernelOutcome::Decided(true) => "decided YES".to_string(),
        KernelOutcome::Decided(false) => "decided NO".to_string(),
        KernelOutcome::Reduced { instance, .. } => format!(
            "reduced to {} vertices with k' = {} (bound {})",
            instance.graph.n(),
            instance.k,
            2 * k
        ),
    };
    let view = NtView {
        n: g.n(),
        edges: g.edges().collect(),
        lp_value: p.doubled_lp_value() as f64 / 2.0,
        zero: p.zero,
        half: p.half,
        one: p.one,
        k,
        kernel,
    };
    Ok(serde_json::to_string(&view).expect("serializable"))
}

#[derive(Serialize)]
struct GrowthRow {
    k: usize,
    answer: bool,
    edge: u64,
    path: u64,
    degree: u64,
    edge_bound: u64,
    degree_bound: u64,
}

/// Search-tree sizes of the three vertex cover strategies for `k = 0..=k_max`.
pub fn branching_growth_json(input: &str, k_max: usize) -> Result<String, String> {
    let g = parse_graph(input)?;
    if k_max > MAX_DEMO_K {
        return Err(format!("k is capped at {MAX_DEMO_K} in the demo"));
    }
    let rows: Vec<GrowthRow> = (0..=k_max)
        .map(|k| {
            let inst = ProblemInstance::new(g.clone(), k);
            let e = vc_edge_branch(&inst);
            GrowthRow {
                k,
                answer: e.answer,
                edge: e.stats.nodes_expanded,
                path: vc_path_branch(&inst).stats.nodes_expanded,
                degree: vc_degree_branch(&inst).stats.nodes_expanded,
                edge_bound: edge_branch_bound(k),
                degree_bound: degree_branch_bound(k),
            }
        })
        .collect();
    Ok(serde_json::to_string(&rows).expect("serializable"))
}

#[derive(Serialize)]
struct TrialCurve {
    k: usize,
    runs: usize,
    trials_planned: u64,
    /// `success[t]`: fraction of runs that found a colorful path within
    /// `t + 1` trials.
    success: Vec<f64>,
    /// `1 - (1 - k!/k^k)^(t+1)`, the guarantee for a single `k`-path.
    guarantee: Vec<f64>,
}

/// Empirical probability that color-coding has succeeded after `t` random
/// colorings, over `runs` independent runs.
pub fn colorcode_trials_json(input: &str, k: usize, runs: usize, seed: u64) -> Result<String, String> {
    let g = parse_graph(input)?;
    if k == 0 || k > 10 {
        return Err("k must be between 1 and 10 in the demo".into());
    }
    if runs == 0 || runs > MAX_RUNS {
        return Err(format!("runs must be between 1 and {MAX_RUNS}"));
    }
    let planned = trials_for_confidence(k, 0.01).map_err(|e| e.to_string())?;
    let horizon = planned as usize;
    let mut first_hit = Vec::with_capacity(runs);
    for r in 0..runs as u64 {
        let run_seed = Seed(seed).derive(r);
        let mut hit = None;
        for t in 0..horizon {
            let chi = Coloring::random(g.n(), k, run_seed.derive(t as u64));
            if colorful_path_decide(&g, &chi, k).map_err(|e| e.to_string())?.is_some() {
                hit = Some(t);
                break;
            }
        }
        first_hit.push(hit);
    }
    let success = (0..horizon)
        .map(|t| first_hit.iter().filter(|h| h.is_some_and(|x| x <= t)).count() as f64 / runs as f64)
        .collect();
    let p = (1..=k).map(|i| i as f64 / k as f64).product::<f64>();
    let guarantee = (0..horizon).map(|t| 1.0 - (1.0 - p).powi(t as i32 + 1)).collect();
    let curve = TrialCurve {
        k,
        runs,
        trials_planned: planned,
        success,
        guarantee,
    };
    Ok(serde_json::to_string(&curve).expect("serializable"))
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn nt_partition(input: &str, k: usize) -> Result<String, JsError> {
    js(nt_partition_json(input, k))
}

#[wasm_bindgen]
pub fn branching_growth(input: &str, k_max: usize) -> Result<String, JsError> {
    js(branching_growth_json(input, k_max))
}

#[wasm_bindgen]
pub fn colorcode_trials(input: &str, k: usize, runs: usize, seed: u64) -> Result<String, JsError> {
    js(colorcode_trials_json(input, k, runs, seed))
}
