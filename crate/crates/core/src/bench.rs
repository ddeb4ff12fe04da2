//! Deterministic benchmark suites. Each suite yields one [`BenchRecord`] per
//! (instance, algorithm) pair; every field except `wall_ms` is a function of
//! the seed alone.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::color_coding::k_path_randomized;
use crate::decomp::{bw_three_coloring, bw_vc_opt, exact_decomposition_small, heuristic_decomposition, root_augment, BranchDecomposition, EXACT_MAX_EDGES};
use crate::error::{Error, Result};
use crate::generate::{generate, planted_path, random_connected, random_graph, subdivide, GraphKind};
use crate::graph::{Graph, ProblemInstance};
use crate::kernel::{maxleaf_kernel, nonblocker_kernel, nt_kernel_vc, threedm_bound, threedm_kernel, KernelOutcome};
use crate::oracle::{check, Oracle};
use crate::rng::Seed;
use crate::search_tree::{vc_degree_branch, vc_edge_branch, vc_path_branch};
use crate::triples::{MatchingInstance, TripleSystem};

pub const SCHEMA_VERSION: u32 = 1;

/// Failure probability used by the color-coding suite.
pub const COLORCODE_DELTA: f64 = 0.01;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    VcBranching,
    KernelSizes,
    ColorcodeStats,
    DpVsOracle,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::VcBranching,
        Suite::KernelSizes,
        Suite::ColorcodeStats,
        Suite::DpVsOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::VcBranching => "vc-branching",
            Suite::KernelSizes => "kernel-sizes",
            Suite::ColorcodeStats => "colorcode-stats",
            Suite::DpVsOracle => "dp-vs-oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown suite '{s}'")))
    }
}

/// One line of benchmark output. Field order is part of the format.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub schema: u32,
    pub suite: String,
    pub instance: String,
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub answer: Option<bool>,
    pub expected: Option<bool>,
    pub metrics: BTreeMap<String, u64>,
    pub wall_ms: f64,
}

impl BenchRecord {
    fn new(suite: Suite, instance: String, algorithm: &str, size: (usize, usize), k: usize) -> Self {
        BenchRecord {
            schema: SCHEMA_VERSION,
            suite: suite.name().to_string(),
            instance,
            algorithm: algorithm.to_string(),
            n: size.0,
            m: size.1,
            k,
            answer: None,
            expected: None,
            metrics: BTreeMap::new(),
            wall_ms: 0.0,
        }
    }

    fn metric(mut self, key: &str, value: u64) -> Self {
        self.metrics.insert(key.to_string(), value);
        self
    }

    pub fn get(&self, key: &str) -> Option<u64> {
        self.metrics.get(key).copied()
    }

    /// The record with its timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        BenchRecord {
            wall_ms: 0.0,
            ..self.clone()
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1000.0)
}

pub fn run_suite(suite: Suite, seed: Seed) -> Result<Vec<BenchRecord>> {
    match suite {
        Suite::VcBranching => vc_branching(seed),
        Suite::KernelSizes => kernel_sizes(seed),
        Suite::ColorcodeStats => colorcode_stats(seed),
        Suite::DpVsOracle => dp_vs_oracle(seed),
    }
}

/// `2^(k+1)`, the node bound of edge branching.
pub fn edge_branch_bound(k: usize) -> u64 {
    1u64 << (k + 1)
}

/// `8 · 1.4656^k`, the node budget for degree branching.
pub fn degree_branch_bound(k: usize) -> u64 {
    (8.0 * 1.4656f64.powi(k as i32)).floor() as u64
}

pub const VC_BRANCHING_KS: std::ops::RangeInclusive<usize> = 4..=12;
const VC_BRANCHING_PER_K: u64 = 3;

/// Random graphs on `3k` vertices with `5k` edges; their covers are larger
/// than `k`, so every strategy explores its whole tree.
fn vc_branching(seed: Seed) -> Result<Vec<BenchRecord>> {
    let suite = Suite::VcBranching;
    let mut out = Vec::new();
    for k in VC_BRANCHING_KS {
        for j in 0..VC_BRANCHING_PER_K {
            let g = random_graph(3 * k, 5 * k, seed.derive(16 * k as u64 + j))?;
            let inst = ProblemInstance::new(g, k);
            let name = format!("k{k:02}-g{j}");
            for (algo, solver, bound) in [
                ("edge", vc_edge_branch as fn(&ProblemInstance) -> _, Some(edge_branch_bound(k))),
                ("path", vc_path_branch, None),
                ("degree", vc_degree_branch, Some(degree_branch_bound(k))),
            ] {
                let (solved, ms) = timed(|| solver(&inst));
                let mut r = BenchRecord::new(suite, name.clone(), algo, (inst.graph.n(), inst.graph.m()), k)
                    .metric("nodes_expanded", solved.stats.nodes_expanded)
                    .metric("max_depth", solved.stats.max_depth as u64);
                if let Some(b) = bound {
                    r = r
                        .metric("bound", b)
                        .metric("bound_met", (solved.stats.nodes_expanded <= b) as u64);
                }
                r.answer = Some(solved.answer);
                r.wall_ms = ms;
                out.push(r);
            }
        }
    }
    Ok(out)
}

pub const KERNEL_INSTANCES: u64 = 100;

/// Kernel size against its bound; `strict` asks for `reduced < bound`.
struct KernelSize {
    original: usize,
    reduced: Option<(usize, usize)>,
    bound: usize,
    strict: bool,
}

fn kernel_record(name: String, algo: &str, size: (usize, usize), k: usize, ks: KernelSize, answer: Option<bool>) -> BenchRecord {
    let mut r = BenchRecord::new(Suite::KernelSizes, name, algo, size, k)
        .metric("original_size", ks.original as u64)
        .metric("bound", ks.bound as u64)
        .metric("decided", answer.is_some() as u64);
    let met = match ks.reduced {
        Some((sz, _)) if ks.strict => sz < ks.bound,
        Some((sz, _)) => sz <= ks.bound,
        None => true,
    };
    if let Some((sz, k2)) = ks.reduced {
        r = r.metric("reduced_size", sz as u64).metric("reduced_k", k2 as u64);
    }
    r.answer = answer;
    r.metric("bound_met", met as u64)
}

fn graph_kernel(
    name: String,
    algo: &str,
    inst: &ProblemInstance,
    out: Result<KernelOutcome<ProblemInstance>>,
    ms: f64,
) -> Result<BenchRecord> {
    let out = out?;
    let (reduced, answer) = match &out {
        KernelOutcome::Decided(b) => (None, Some(*b)),
        KernelOutcome::Reduced { instance, .. } => (Some((instance.graph.n(), instance.k)), None),
    };
    let (bound, strict) = match (algo, reduced) {
        ("nt", _) => (2 * inst.k, false),
        ("nonblocker", _) => ((2 * inst.k).saturating_sub(2), false),
        (_, Some((_, k2))) => (8 * k2, true),
        (_, None) => (8 * inst.k, true),
    };
    let ks = KernelSize {
        original: inst.graph.n(),
        reduced,
        bound,
        strict,
    };
    let mut r = kernel_record(name, algo, (inst.graph.n(), inst.graph.m()), inst.k, ks, answer);
    r.wall_ms = ms;
    Ok(r)
}

fn kernel_sizes(seed: Seed) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for i in 0..KERNEL_INSTANCES {
        let s = seed.derive(i);
        let iu = i as usize;
        let n = 10 + iu % 30;
        let g = random_graph(n, (n + iu % 25).min(n * (n - 1) / 2), s.derive(0))?;
        let inst = ProblemInstance::new(g, n / 4 + iu % 10);
        let (res, ms) = timed(|| Ok(nt_kernel_vc(&inst)));
        out.push(graph_kernel(format!("nt-{i:03}"), "nt", &inst, res, ms)?);
    }
    for i in 0..KERNEL_INSTANCES {
        let s = seed.derive(1000 + i);
        let iu = i as usize;
        let n = 6 + iu % 30;
        let g = random_graph(n, (n / 2 + iu % 10).min(n * (n - 1) / 2), s)?;
        let inst = ProblemInstance::new(g, iu % 20);
        let (res, ms) = timed(|| Ok(nonblocker_kernel(&inst)));
        out.push(graph_kernel(format!("nonblocker-{i:03}"), "nonblocker", &inst, res, ms)?);
    }
    for i in 0..KERNEL_INSTANCES {
        let s = seed.derive(2000 + i);
        let iu = i as usize;
        let n = 4 + iu % 20;
        let base = random_connected(n, (iu % 5).min(n * (n - 1) / 2 + 1 - n), s)?;
        let g = subdivide(&base, iu % 3);
        let inst = ProblemInstance::new(g, 1 + iu % 8);
        let (res, ms) = timed(|| maxleaf_kernel(&inst));
        out.push(graph_kernel(format!("maxleaf-{i:03}"), "maxleaf", &inst, res, ms)?);
    }
    for i in 0..KERNEL_INSTANCES {
        let s = seed.derive(3000 + i);
        let iu = i as usize;
        let ts = TripleSystem::random_clustered([6, 6, 6], 30 + iu % 40, 2, s)?;
        let inst = MatchingInstance {
            system: ts,
            k: 1 + iu % 5,
        };
        let (res, ms) = timed(|| threedm_kernel(&inst));
        let (reduced, answer) = match &res {
            KernelOutcome::Decided(b) => (None, Some(*b)),
            KernelOutcome::Reduced { instance, .. } => (Some((instance.system.len(), instance.k)), None),
        };
        let ks = KernelSize {
            original: inst.system.len(),
            reduced,
            bound: threedm_bound(inst.k),
            strict: false,
        };
        let mut r = kernel_record(format!("3dm-{i:03}"), "3dm", (18, inst.system.len()), inst.k, ks, answer);
        r.wall_ms = ms;
        out.push(r);
    }
    Ok(out)
}

pub const COLORCODE_PLANTED: u64 = 100;

/// Planted-path YES instances followed by NO controls (stars and short
/// paths), all with `δ = 0.01`.
fn colorcode_stats(seed: Seed) -> Result<Vec<BenchRecord>> {
    let mut cases: Vec<(String, Graph, usize, Option<bool>)> = Vec::new();
    for i in 0..COLORCODE_PLANTED {
        let iu = i as usize;
        let k = 2 + iu % 5;
        let n = 10 + (iu * 7) % 31;
        let m = (n + (iu * 3) % n).min(n * (n - 1) / 2);
        let g = planted_path(n, m, k, seed.derive(i))?;
        cases.push((format!("planted-{i:03}"), g, k, Some(true)));
    }
    for i in 0..10usize {
        let star = generate(&GraphKind::Star(3 + i))?;
        cases.push((format!("star-{i:02}"), star, 4, Some(false)));
        let k = 2 + i % 5;
        cases.push((format!("short-path-{i:02}"), generate(&GraphKind::Path(k - 1))?, k, Some(false)));
    }
    let mut out = Vec::new();
    for (i, (name, g, k, expected)) in cases.into_iter().enumerate() {
        let (res, ms) = timed(|| k_path_randomized(&g, k, COLORCODE_DELTA, seed.derive(10_000 + i as u64)));
        let res = res?;
        let verified = res
            .witness
            .as_ref()
            .is_none_or(|w| w.len() == k && check::is_simple_path(&g, w));
        let mut r = BenchRecord::new(Suite::ColorcodeStats, name, "colorcode", (g.n(), g.m()), k)
            .metric("trials_planned", res.trials_planned)
            .metric("trials_run", res.trials_run)
            .metric("verified", verified as u64);
        r.answer = Some(res.found());
        r.expected = expected;
        r.wall_ms = ms;
        out.push(r);
    }
    Ok(out)
}

pub const DP_GRAPHS: u64 = 100;

fn dp_vs_oracle(seed: Seed) -> Result<Vec<BenchRecord>> {
    let oracle = Oracle::default();
    let mut out = Vec::new();
    for i in 0..DP_GRAPHS {
        let iu = i as usize;
        let n = 2 + iu % 11;
        let m = ((iu * 3) % 31).min(n * (n - 1) / 2);
        let g = random_graph(n, m, seed.derive(i))?;
        let name = format!("g{i:03}");
        let vc = oracle.vc_opt(&g)?.0;
        let col = oracle.is_3_colorable(&g)?;
        let (heur, exact) = if g.m() == 0 {
            let empty = BranchDecomposition::new(0, vec![], [], None)?;
            (empty.clone(), Some(empty))
        } else {
            let h = root_augment(&heuristic_decomposition(&g)?)?;
            let e = if g.m() <= EXACT_MAX_EDGES {
                Some(root_augment(&exact_decomposition_small(&g)?)?)
            } else {
                None
            };
            (h, e)
        };
        let size = (g.n(), g.m());
        let (dp, ms) = timed(|| -> Result<_> { Ok((bw_vc_opt(&g, &heur)?, bw_three_coloring(&g, &heur)?)) });
        let (dp_vc, dp_col) = dp?;
        let mut r = BenchRecord::new(Suite::DpVsOracle, name.clone(), "dp-vc", size, vc)
            .metric("vc_dp", dp_vc.len() as u64)
            .metric("vc_oracle", vc as u64)
            .metric("width_heuristic", heur.width() as u64)
            .metric("cover_valid", check::is_vertex_cover(&g, &dp_vc) as u64);
        r.answer = Some(dp_vc.len() <= vc);
        r.expected = Some(true);
        let mut c = BenchRecord::new(Suite::DpVsOracle, name, "dp-3col", size, 3);
        c.answer = Some(dp_col.is_some());
        c.expected = Some(col);
        c = c.metric(
            "coloring_valid",
            dp_col.as_ref().is_none_or(|x| check::is_proper_coloring(&g, x, 3)) as u64,
        );
        if let Some(e) = &exact {
            let same_vc = bw_vc_opt(&g, e)?.len() == dp_vc.len();
            let same_col = bw_three_coloring(&g, e)?.is_some() == dp_col.is_some();
            r = r
                .metric("width_exact", e.width() as u64)
                .metric("exact_agrees", same_vc as u64);
            c = c.metric("exact_agrees", same_col as u64);
        }
        r.wall_ms = ms;
        c.wall_ms = ms;
        out.push(r);
        out.push(c);
    }
    Ok(out)
}
