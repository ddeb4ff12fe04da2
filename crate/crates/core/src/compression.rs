//! Iterative compression for hereditary vertex-deletion problems: find
//! `S ⊆ V(G)` with `|S| ≤ k` and `G - S ∈ Π`.
//!
//! Vertices are inserted in increasing id order while a solution for the
//! prefix graph is maintained. When the solution grows to `k + 1`, every
//! subset `F` of it that induces a member of `Π` is tried as the part to keep,
//! and the remaining work is handed to the plugin's annotated solver.

use rand::seq::IteratorRandom;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, ProblemInstance, Vertex};
use crate::rng::Seed;

/// A hereditary graph property `Π` with an annotated solver.
pub trait PropertyPlugin {
    fn name(&self) -> &'static str;

    fn contains(&self, g: &Graph) -> bool;

    /// Finds `R ⊆ q` with `|R| ≤ budget` and `h - R ∈ Π`, given that both
    /// `h[q]` and `h - q` are in `Π`.
    fn solve_annotated(&self, h: &Graph, q: &[Vertex], budget: usize) -> Option<Vec<Vertex>>;
}

/// `Π` = edgeless graphs, so the deletion problem is Vertex Cover.
#[derive(Clone, Copy, Debug, Default)]
pub struct EdgelessPlugin;

pub fn edgeless_plugin() -> EdgelessPlugin {
    EdgelessPlugin
}

impl PropertyPlugin for EdgelessPlugin {
    fn name(&self) -> &'static str {
        "edgeless"
    }

    fn contains(&self, g: &Graph) -> bool {
        g.m() == 0
    }

    /// Every edge of `h` joins `q` to the undeletable rest, so the
    /// non-isolated vertices of `q` must all go.
    fn solve_annotated(&self, h: &Graph, q: &[Vertex], budget: usize) -> Option<Vec<Vertex>> {
        let r: Vec<Vertex> = q.iter().copied().filter(|&v| h.degree(v) > 0).collect();
        (r.len() <= budget).then_some(r)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CompressionStats {
    pub insertions: u64,
    /// Insertions that overflowed the budget.
    pub compressions: u64,
    /// `F` subsets inspected, over all compressions.
    pub subsets_examined: u64,
    pub max_subsets_per_step: u64,
    pub annotated_calls: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VddOutcome {
    /// Sorted deletion set. `None` means NO.
    pub solution: Option<Vec<Vertex>>,
    pub stats: CompressionStats,
}

fn minus(g: &Graph, s: &[Vertex]) -> Graph {
    g.remove_vertices(s).expect("vertices in range").graph
}

/// Replaces the oversized solution `s` of `gi` by one of size at most `k`.
fn compress<P: PropertyPlugin + ?Sized>(
    gi: &Graph,
    s: &[Vertex],
    k: usize,
    plugin: &P,
    stats: &mut CompressionStats,
) -> Result<Option<Vec<Vertex>>> {
    let in_s: Vec<bool> = (0..gi.n()).map(|v| s.contains(&v)).collect();
    let q: Vec<Vertex> = gi.vertices().filter(|&v| !in_s[v]).collect();
    let mut examined = 0u64;
    let mut found = None;
    for mask in 0u64..1 << s.len() {
        examined += 1;
        let f: Vec<Vertex> = (0..s.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| s[i])
            .collect();
        let dropped = s.len() - f.len();
        if dropped > k {
            continue;
        }
        let gf = gi.induced_subgraph(&f).expect("in range").graph;
        if !plugin.contains(&gf) {
            continue;
        }
        let mut keep = f.clone();
        keep.extend(&q);
        keep.sort_unstable();
        let h = gi.induced_subgraph(&keep).expect("in range");
        let q_in_h: Vec<Vertex> = q.iter().map(|&v| h.old_to_new[v].unwrap()).collect();
        let f_in_h: Vec<Vertex> = f.iter().map(|&v| h.old_to_new[v].unwrap()).collect();
        debug_assert!(plugin.contains(&h.graph.induced_subgraph(&q_in_h).unwrap().graph));
        debug_assert!(plugin.contains(&h.graph.induced_subgraph(&f_in_h).unwrap().graph));
        let budget = k - dropped;
        stats.annotated_calls += 1;
        let Some(r) = plugin.solve_annotated(&h.graph, &q_in_h, budget) else {
            continue;
        };
        if r.len() > budget || r.iter().any(|v| !q_in_h.contains(v)) {
            return Err(Error::Contract(format!(
                "{} plugin returned {r:?}, expected at most {budget} vertices from Q",
                plugin.name()
            )));
        }
        let mut next: Vec<Vertex> = h.lift(&r);
        next.extend(s.iter().copied().filter(|v| !f.contains(v)));
        next.sort_unstable();
        if !plugin.contains(&minus(gi, &next)) {
            return Err(Error::Contract(format!(
                "{} plugin produced a set that does not reach the property",
                plugin.name()
            )));
        }
        found = Some(next);
        break;
    }
    debug_assert!(examined <= 1 << (k + 1));
    stats.subsets_examined += examined;
    stats.max_subsets_per_step = stats.max_subsets_per_step.max(examined);
    Ok(found)
}

/// Deletion set of size at most `k` that puts `g` into `Π`, if any.
pub fn solve_vdd<P: PropertyPlugin + ?Sized>(g: &Graph, k: usize, plugin: &P) -> Result<VddOutcome> {
    let mut stats = CompressionStats::default();
    let mut s: Vec<Vertex> = Vec::new();
    for v in g.vertices() {
        stats.insertions += 1;
        s.push(v);
        if s.len() <= k {
            continue;
        }
        stats.compressions += 1;
        let prefix: Vec<Vertex> = (0..=v).collect();
        // ids of a prefix are unchanged by the induced subgraph
        let gi = g.induced_subgraph(&prefix).expect("in range").graph;
        match compress(&gi, &s, k, plugin, &mut stats)? {
            Some(next) => s = next,
            None => {
                return Ok(VddOutcome {
                    solution: None,
                    stats,
                })
            }
        }
        debug_assert!(plugin.contains(&minus(&gi, &s)));
    }
    if !plugin.contains(&minus(g, &s)) {
        return Err(Error::Contract("final deletion set fails the property".into()));
    }
    Ok(VddOutcome {
        solution: Some(s),
        stats,
    })
}

pub fn vc_by_compression(inst: &ProblemInstance) -> Result<VddOutcome> {
    solve_vdd(&inst.graph, inst.k, &EdgelessPlugin)
}

/// Spot-checks heredity: if `g ∈ Π`, each of `samples` random induced
/// subgraphs must be in `Π` as well.
pub fn sample_hereditary<P: PropertyPlugin + ?Sized>(plugin: &P, g: &Graph, samples: usize, seed: Seed) -> bool {
    if !plugin.contains(g) {
        return true;
    }
    let mut rng = seed.rng();
    (0..samples).all(|_| {
        let size = (0..=g.n()).choose(&mut rng).unwrap_or(0);
        let mut sub = g.vertices().choose_multiple(&mut rng, size);
        sub.sort_unstable();
        plugin.contains(&g.induced_subgraph(&sub).unwrap().graph)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, random_graph, GraphKind};
    use crate::oracle::{check, Oracle};

    fn g(kind: GraphKind) -> Graph {
        generate(&kind).unwrap()
    }

    #[test]
    fn engine_examples() {
        let out = solve_vdd(&Graph::empty(0), 3, &EdgelessPlugin).unwrap();
        assert_eq!(out.solution, Some(vec![]));
        assert_eq!(solve_vdd(&g(GraphKind::Path(2)), 0, &EdgelessPlugin).unwrap().solution, None);
        let k3 = g(GraphKind::Complete(3));
        let s = solve_vdd(&k3, 2, &EdgelessPlugin).unwrap().solution.unwrap();
        assert_eq!(s.len(), 2);
        assert!(check::is_vertex_cover(&k3, &s));
    }

    #[test]
    fn plugin_examples() {
        let p = edgeless_plugin();
        let k2 = g(GraphKind::Path(2));
        assert_eq!(p.solve_annotated(&k2, &[0, 1], 1), None);
        assert_eq!(p.solve_annotated(&k2, &[0, 1], 2), Some(vec![0, 1]));
        // path end1 - middle - end2 with the middle undeletable
        let path = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(p.solve_annotated(&path, &[0, 1], 2), Some(vec![0, 1]));
        assert_eq!(p.solve_annotated(&Graph::empty(4), &[1, 3], 0), Some(vec![]));
    }

    #[test]
    fn vc_examples() {
        let no = vc_by_compression(&ProblemInstance::new(g(GraphKind::Complete(3)), 1)).unwrap();
        assert!(no.solution.is_none());
        let yes = vc_by_compression(&ProblemInstance::new(g(GraphKind::Path(4)), 2)).unwrap();
        assert!(yes.solution.is_some());
        let e = vc_by_compression(&ProblemInstance::new(Graph::empty(6), 0)).unwrap();
        assert_eq!(e.solution, Some(vec![]));
        assert_eq!(e.stats.compressions, 6);
    }

    struct Liar;

    impl PropertyPlugin for Liar {
        fn name(&self) -> &'static str {
            "liar"
        }
        fn contains(&self, g: &Graph) -> bool {
            g.m() == 0
        }
        fn solve_annotated(&self, h: &Graph, _q: &[Vertex], _budget: usize) -> Option<Vec<Vertex>> {
            Some(h.vertices().collect())
        }
    }

    #[test]
    fn bad_plugin_is_a_contract_error() {
        let err = solve_vdd(&g(GraphKind::Path(3)), 1, &Liar).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn agrees_with_oracle_and_respects_budget() {
        let o = Oracle::default();
        for seed in 0..60u64 {
            let n = 1 + seed as usize % 11;
            let m = (seed as usize * 5) % (n * (n - 1) / 2 + 1);
            let gr = random_graph(n, m, Seed(seed)).unwrap();
            let opt = o.vc_opt(&gr).unwrap().0;
            for k in 0..=n {
                let out = vc_by_compression(&ProblemInstance::new(gr.clone(), k)).unwrap();
                assert_eq!(out.solution.is_some(), opt <= k, "seed {seed} k {k}");
                if let Some(s) = &out.solution {
                    assert!(s.len() <= k && check::is_vertex_cover(&gr, s));
                }
                assert!(out.stats.max_subsets_per_step <= 1 << (k + 1));
            }
        }
    }

    #[test]
    fn edgeless_is_hereditary_on_samples() {
        for seed in 0..20 {
            let gr = random_graph(8, seed as usize % 3, Seed(seed)).unwrap();
            assert!(sample_hereditary(&EdgelessPlugin, &gr, 20, Seed(seed)));
        }
    }
}
