use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use paramkit::bench::{run_suite, Suite};
use paramkit::color_coding::k_path_randomized;
use paramkit::compression::vc_by_compression;
use paramkit::decomp::{bw_three_coloring, bw_vertex_cover, heuristic_decomposition, root_augment, BranchDecomposition};
use paramkit::generate::{generate as build, GraphKind};
use paramkit::kernel::{maxleaf_kernel, nonblocker_kernel, nt_kernel_vc, threedm_bound, threedm_kernel, KernelOutcome};
use paramkit::localization::triangle_packing_decide;
use paramkit::oracle::Oracle;
use paramkit::rng::Seed;
use paramkit::search_tree::{ds_degree_branch, vc_degree_branch, vc_edge_branch, vc_path_branch, Solved};
use paramkit::triples::{MatchingInstance, TripleSystem};
use paramkit::{Graph, ProblemInstance, Vertex};

use crate::record::{print_line, yes_no, KernelRecord, OracleRecord, SolveRecord, SCHEMA_VERSION};
use crate::{BenchArgs, GenerateArgs, KernelizeArgs, OracleArgs, SolveArgs};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse_edge_list(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn read_triples(path: &Path) -> Result<TripleSystem> {
    TripleSystem::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).context("cannot write to stdout"),
    }
}

/// Witness vertices are printed 1-based, like the edge-list format.
fn one_based(vs: &[Vertex]) -> Value {
    json!(vs.iter().map(|v| v + 1).collect::<Vec<_>>())
}

fn exit_for(answer: bool) -> ExitCode {
    if answer {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[derive(Default)]
struct Solution {
    answer: bool,
    witness: Option<Value>,
    nodes_expanded: Option<u64>,
    trials: Option<u64>,
    seed: Option<u64>,
}

impl Solution {
    fn decided(answer: bool) -> Self {
        Solution {
            answer,
            ..Default::default()
        }
    }
}

impl From<Solved> for Solution {
    fn from(s: Solved) -> Self {
        Solution {
            answer: s.answer,
            witness: s.witness.as_deref().map(one_based),
            nodes_expanded: Some(s.stats.nodes_expanded),
            ..Default::default()
        }
    }
}

fn default_algorithm(problem: &str) -> Result<&'static str> {
    Ok(match problem {
        "vc" | "ds" => "degree",
        "kpath" => "colorcode",
        "3col" => "decomp-dp",
        "maxleaf" | "3dm" | "nonblocker" => "kernel+oracle",
        "tripack" => "localization",
        _ => bail!("unknown problem '{problem}'"),
    })
}

/// The decomposition from `--bd`, root-augmented if needed, or a heuristic
/// one.
fn load_bd(g: &Graph, path: Option<&Path>) -> Result<BranchDecomposition> {
    let bd = match path {
        Some(p) => BranchDecomposition::parse(&read(p)?).with_context(|| format!("{}", p.display()))?,
        None if g.m() == 0 => return Ok(BranchDecomposition::new(0, vec![], [], None)?),
        None => heuristic_decomposition(g)?,
    };
    Ok(if bd.is_augmented() { bd } else { root_augment(&bd)? })
}

fn solve_graph(a: &SolveArgs, problem: &str, algorithm: &str, g: &Graph) -> Result<Solution> {
    let k = || a.k.ok_or_else(|| anyhow!("--k is required for {problem}"));
    let oracle = Oracle::default();
    Ok(match (problem, algorithm) {
        ("vc", "edge") => vc_edge_branch(&ProblemInstance::new(g.clone(), k()?)).into(),
        ("vc", "path") => vc_path_branch(&ProblemInstance::new(g.clone(), k()?)).into(),
        ("vc", "degree") => vc_degree_branch(&ProblemInstance::new(g.clone(), k()?)).into(),
        ("vc", "compression") => {
            let out = vc_by_compression(&ProblemInstance::new(g.clone(), k()?))?;
            Solution {
                answer: out.solution.is_some(),
                witness: out.solution.as_deref().map(one_based),
                ..Default::default()
            }
        }
        ("vc", "kernel+degree") => match nt_kernel_vc(&ProblemInstance::new(g.clone(), k()?)) {
            KernelOutcome::Decided(b) => Solution::decided(b),
            KernelOutcome::Reduced { instance, lift } => {
                let s = vc_degree_branch(&instance);
                let witness = s.witness.map(|w| lift.map_or(w.clone(), |l| l.apply(&w)));
                Solution {
                    answer: s.answer,
                    witness: witness.as_deref().map(one_based),
                    nodes_expanded: Some(s.stats.nodes_expanded),
                    ..Default::default()
                }
            }
        },
        ("vc", "decomp-dp") => {
            let bd = load_bd(g, a.bd.as_deref())?;
            let cover = bw_vertex_cover(g, &bd, k()?)?;
            Solution {
                answer: cover.is_some(),
                witness: cover.as_deref().map(one_based),
                ..Default::default()
            }
        }
        ("ds", "degree") => {
            let d = a.max_degree.unwrap_or(g.max_degree().max(1));
            ds_degree_branch(&ProblemInstance::new(g.clone(), k()?), d)?.into()
        }
        ("kpath", "colorcode") => {
            let out = k_path_randomized(g, k()?, a.delta, Seed(a.seed))?;
            Solution {
                answer: out.found(),
                witness: out.witness.as_deref().map(one_based),
                trials: Some(out.trials_run),
                seed: Some(a.seed),
                ..Default::default()
            }
        }
        ("3col", "decomp-dp") => {
            let bd = load_bd(g, a.bd.as_deref())?;
            let colors = bw_three_coloring(g, &bd)?;
            Solution {
                answer: colors.is_some(),
                witness: colors.map(|c| json!(c.iter().map(|&x| x + 1).collect::<Vec<_>>())),
                ..Default::default()
            }
        }
        ("maxleaf", "kernel+oracle") => match maxleaf_kernel(&ProblemInstance::new(g.clone(), k()?))? {
            KernelOutcome::Decided(b) => Solution::decided(b),
            KernelOutcome::Reduced { instance, .. } => {
                Solution::decided(oracle.max_leaf(&instance.graph)? >= instance.k)
            }
        },
        ("nonblocker", "kernel+oracle") => match nonblocker_kernel(&ProblemInstance::new(g.clone(), k()?)) {
            KernelOutcome::Decided(b) => Solution::decided(b),
            KernelOutcome::Reduced { instance, .. } => {
                Solution::decided(oracle.max_nonblocker(&instance.graph)? >= instance.k)
            }
        },
        ("tripack", "localization") => {
            let out = triangle_packing_decide(&ProblemInstance::new(g.clone(), k()?));
            Solution {
                answer: out.witness.is_some(),
                witness: out
                    .witness
                    .map(|w| json!(w.iter().map(|t| t.map(|v| v + 1)).collect::<Vec<_>>())),
                nodes_expanded: Some(out.stats.inner_nodes),
                ..Default::default()
            }
        }
        _ => bail!("algorithm '{algorithm}' is not available for {problem}"),
    })
}

fn solve_3dm(ts: &TripleSystem, k: usize) -> Result<Solution> {
    let inst = MatchingInstance { system: ts.clone(), k };
    Ok(match threedm_kernel(&inst) {
        KernelOutcome::Decided(b) => Solution::decided(b),
        KernelOutcome::Reduced { instance, .. } => {
            Solution::decided(Oracle::default().max_3dm(&instance.system)? >= instance.k)
        }
    })
}

pub fn solve(a: &SolveArgs) -> Result<ExitCode> {
    let problem = a.problem.as_str();
    let algorithm = match &a.algorithm {
        Some(alg) => {
            default_algorithm(problem)?;
            alg.clone()
        }
        None => default_algorithm(problem)?.to_string(),
    };
    let start = Instant::now();
    let (n, m, sol) = if problem == "3dm" {
        if algorithm != "kernel+oracle" {
            bail!("algorithm '{algorithm}' is not available for 3dm");
        }
        let ts = read_triples(&a.input)?;
        let k = a.k.ok_or_else(|| anyhow!("--k is required for 3dm"))?;
        (ts.sizes().iter().sum(), ts.len(), solve_3dm(&ts, k)?)
    } else {
        let g = read_graph(&a.input)?;
        let sol = solve_graph(a, problem, &algorithm, &g)?;
        (g.n(), g.m(), sol)
    };
    print_line(&SolveRecord {
        schema: SCHEMA_VERSION,
        problem: problem.to_string(),
        algorithm,
        n,
        m,
        k: a.k,
        answer: yes_no(sol.answer),
        witness: sol.witness,
        nodes_expanded: sol.nodes_expanded,
        trials: sol.trials,
        seed: sol.seed,
        wall_ms: start.elapsed().as_secs_f64() * 1000.0,
    });
    Ok(exit_for(sol.answer))
}

/// `dir/name.gr` becomes `dir/name.kernel.gr`.
fn default_kernel_path(input: &Path, ext: &str) -> PathBuf {
    let stem = input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    input.with_file_name(format!("{stem}.kernel.{ext}"))
}

pub fn kernelize(a: &KernelizeArgs) -> Result<ExitCode> {
    let problem = a.problem.as_str();
    let k = a.k;
    let start = Instant::now();
    // (kernel name, original size, outcome as (size, k', text), bound, strict)
    let (kernel, original, outcome, bound, strict) = match problem {
        "3dm" => {
            let ts = read_triples(&a.input)?;
            let out = threedm_kernel(&MatchingInstance { system: ts.clone(), k });
            let red = match out {
                KernelOutcome::Decided(b) => Err(b),
                KernelOutcome::Reduced { instance, .. } => {
                    Ok((instance.system.len(), instance.k, instance.system.to_text()))
                }
            };
            ("3dm", ts.len(), red, threedm_bound(k), false)
        }
        "vc" | "nonblocker" | "maxleaf" => {
            let g = read_graph(&a.input)?;
            let inst = ProblemInstance::new(g.clone(), k);
            let (name, out) = match problem {
                "vc" => ("nt", nt_kernel_vc(&inst)),
                "nonblocker" => ("nonblocker", nonblocker_kernel(&inst)),
                _ => ("maxleaf", maxleaf_kernel(&inst)?),
            };
            let red = match out {
                KernelOutcome::Decided(b) => Err(b),
                KernelOutcome::Reduced { instance, .. } => {
                    Ok((instance.graph.n(), instance.k, instance.graph.to_edge_list()))
                }
            };
            let (bound, strict) = match (name, &red) {
                ("nt", _) => (2 * k, false),
                ("nonblocker", _) => ((2 * k).saturating_sub(2), false),
                (_, Ok((_, k2, _))) => (8 * k2, true),
                _ => (8 * k, true),
            };
            (name, g.n(), red, bound, strict)
        }
        _ => bail!("no kernelizer for '{problem}'"),
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1000.0;
    let mut rec = KernelRecord {
        schema: SCHEMA_VERSION,
        problem: problem.to_string(),
        kernel,
        k,
        original_size: original,
        reduced_size: None,
        reduced_k: None,
        bound,
        bound_met: true,
        decided: None,
        output: None,
        wall_ms,
    };
    let code = match outcome {
        Err(b) => {
            rec.decided = Some(yes_no(b));
            exit_for(b)
        }
        Ok((size, k2, text)) => {
            let ext = if problem == "3dm" { "3dm" } else { "gr" };
            let path = a.output.clone().unwrap_or_else(|| default_kernel_path(&a.input, ext));
            write_out(Some(&path), &text)?;
            rec.reduced_size = Some(size);
            rec.reduced_k = Some(k2);
            rec.bound_met = if strict { size < bound } else { size <= bound };
            rec.output = Some(path.display().to_string());
            ExitCode::SUCCESS
        }
    };
    print_line(&rec);
    Ok(code)
}

fn parse_triples_kind(spec: &str) -> Result<TripleSystem> {
    let nums: Vec<u64> = spec
        .split(':')
        .skip(1)
        .map(|t| t.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| anyhow!("unrecognized kind '{spec}'"))?;
    let [a, b, c, m, seed] = nums[..] else {
        bail!("expected triples:A:B:C:M:SEED, got '{spec}'");
    };
    Ok(TripleSystem::random([a as usize, b as usize, c as usize], m as usize, Seed(seed))?)
}

pub fn generate(a: &GenerateArgs) -> Result<ExitCode> {
    let text = if a.kind.starts_with("triples:") {
        parse_triples_kind(&a.kind)?.to_text()
    } else {
        let kind: GraphKind = a.kind.parse()?;
        build(&kind)?.to_edge_list()
    };
    write_out(a.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

pub fn bench(a: &BenchArgs) -> Result<ExitCode> {
    let suite: Suite = a.suite.parse()?;
    let records = run_suite(suite, Seed(a.seed))?;
    let mut text = String::new();
    for r in &records {
        text.push_str(&serde_json::to_string(r)?);
        text.push('\n');
    }
    write_out(a.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

pub fn oracle(a: &OracleArgs) -> Result<ExitCode> {
    let o = Oracle::default();
    let problem = a.problem.as_str();
    let (n, m, value) = if problem == "3dm" {
        let ts = read_triples(&a.input)?;
        (ts.sizes().iter().sum(), ts.len(), json!(o.max_3dm(&ts)?))
    } else {
        let g = read_graph(&a.input)?;
        let value = match problem {
            "vc" => json!(o.vc_opt(&g)?.0),
            "ds" => json!(o.dominating_opt(&g)?),
            "kpath" => json!(o.longest_path_vertices(&g)?),
            "3col" => json!(o.is_3_colorable(&g)?),
            "maxleaf" => json!(o.max_leaf(&g)?),
            "tripack" => json!(o.max_triangle_packing(&g)?),
            "nonblocker" => json!(o.max_nonblocker(&g)?),
            _ => bail!("unknown problem '{problem}'"),
        };
        (g.n(), g.m(), value)
    };
    print_line(&OracleRecord {
        schema: SCHEMA_VERSION,
        problem: problem.to_string(),
        n,
        m,
        value,
    });
    Ok(ExitCode::SUCCESS)
}
