//! Bounded search trees for Vertex Cover and degree-bounded Dominating Set.
//!
//! The graph is never rebuilt during recursion: deletions are recorded in a
//! mask with per-vertex live degrees and undone on backtrack, so vertex ids
//! in witnesses are the caller's ids.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, ProblemInstance, Vertex};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchStats {
    pub nodes_expanded: u64,
    pub max_depth: u32,
}

impl BranchStats {
    fn enter(&mut self, depth: u32) {
        self.nodes_expanded += 1;
        self.max_depth = self.max_depth.max(depth);
    }
}

/// Decision, optional witness, and search-tree statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved {
    pub answer: bool,
    pub witness: Option<Vec<Vertex>>,
    pub stats: BranchStats,
}

impl Solved {
    fn new(witness: Option<Vec<Vertex>>, stats: BranchStats) -> Self {
        let witness = witness.map(|mut w| {
            w.sort_unstable();
            w
        });
        Solved {
            answer: witness.is_some(),
            witness,
            stats,
        }
    }
}

/// A graph with some vertices deleted.
struct Residual<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    edges: usize,
}

impl<'g> Residual<'g> {
    fn new(g: &'g Graph) -> Self {
        Residual {
            g,
            alive: vec![true; g.n()],
            deg: g.vertices().map(|v| g.degree(v)).collect(),
            edges: g.m(),
        }
    }

    fn remove(&mut self, v: Vertex) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        self.edges -= self.deg[v];
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.deg[w] -= 1;
            }
        }
    }

    fn restore(&mut self, v: Vertex) {
        debug_assert!(!self.alive[v]);
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.deg[w] += 1;
            }
        }
        self.alive[v] = true;
        self.edges += self.deg[v];
    }

    fn live_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g.neighbors(v).iter().copied().filter(|&w| self.alive[w])
    }

    /// Lexicographically smallest live edge.
    fn first_edge(&self) -> Option<(Vertex, Vertex)> {
        let u = (0..self.g.n()).find(|&u| self.alive[u] && self.deg[u] > 0)?;
        let v = self.live_neighbors(u).next()?;
        Some((u, v))
    }

    /// Takes `set` into the cover, runs `f`, then undoes the deletions.
    fn with_removed<T>(
        &mut self,
        set: &[Vertex],
        chosen: &mut Vec<Vertex>,
        f: impl FnOnce(&mut Self, &mut Vec<Vertex>) -> T,
    ) -> T {
        for &v in set {
            self.remove(v);
            chosen.push(v);
        }
        let out = f(self, chosen);
        for &v in set.iter().rev() {
            chosen.pop();
            self.restore(v);
        }
        out
    }
}

/// Classic two-way branching on an edge: one endpoint is in every cover.
pub fn vc_edge_branch(inst: &ProblemInstance) -> Solved {
    fn rec(
        r: &mut Residual,
        k: usize,
        depth: u32,
        chosen: &mut Vec<Vertex>,
        stats: &mut BranchStats,
    ) -> Option<Vec<Vertex>> {
        stats.enter(depth);
        if r.edges == 0 {
            return Some(chosen.clone());
        }
        if k == 0 {
            return None;
        }
        let (u, v) = r.first_edge().expect("edges remain");
        for pick in [u, v] {
            let found = r.with_removed(&[pick], chosen, |r, chosen| {
                rec(r, k - 1, depth + 1, chosen, stats)
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }
    let mut stats = BranchStats::default();
    let mut r = Residual::new(&inst.graph);
    let witness = rec(&mut r, inst.k, 0, &mut Vec::new(), &mut stats);
    Solved::new(witness, stats)
}

/// Three-way branching on a path `v1 v2 v3 v4`: every cover contains one of
/// `{v1, v3}`, `{v2, v3}`, `{v2, v4}`. Without such a path each component is a
/// star or a triangle and is covered directly.
pub fn vc_path_branch(inst: &ProblemInstance) -> Solved {
    fn rec(
        r: &mut Residual,
        k: usize,
        depth: u32,
        chosen: &mut Vec<Vertex>,
        stats: &mut BranchStats,
    ) -> Option<Vec<Vertex>> {
        stats.enter(depth);
        if r.edges == 0 {
            return Some(chosen.clone());
        }
        if k == 0 {
            return None;
        }
        let Some([v1, v2, v3, v4]) = first_four_path(r) else {
            let base = cover_stars_and_triangles(r);
            if base.len() > k {
                return None;
            }
            let mut out = chosen.clone();
            out.extend(base);
            return Some(out);
        };
        if k < 2 {
            // a 4-vertex path alone needs two cover vertices
            return None;
        }
        for pair in [[v1, v3], [v2, v3], [v2, v4]] {
            let found = r.with_removed(&pair, chosen, |r, chosen| {
                rec(r, k - 2, depth + 1, chosen, stats)
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }
    let mut stats = BranchStats::default();
    let mut r = Residual::new(&inst.graph);
    let witness = rec(&mut r, inst.k, 0, &mut Vec::new(), &mut stats);
    Solved::new(witness, stats)
}

/// Lexicographically first sequence of four distinct live vertices with
/// consecutive adjacencies (not necessarily induced).
fn first_four_path(r: &Residual) -> Option<[Vertex; 4]> {
    for v1 in 0..r.g.n() {
        if !r.alive[v1] {
            continue;
        }
        for v2 in r.live_neighbors(v1) {
            for v3 in r.live_neighbors(v2).filter(|&x| x != v1) {
                if let Some(v4) = r.live_neighbors(v3).find(|&x| x != v1 && x != v2) {
                    return Some([v1, v2, v3, v4]);
                }
            }
        }
    }
    None
}

/// Optimal cover of a graph with no 4-vertex path: star centers, plus two
/// vertices per triangle component.
fn cover_stars_and_triangles(r: &Residual) -> Vec<Vertex> {
    let n = r.g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if !r.alive[root] || seen[root] || r.deg[root] == 0 {
            continue;
        }
        let mut comp = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for w in r.live_neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        let hubs: Vec<Vertex> = comp.iter().copied().filter(|&v| r.deg[v] >= 2).collect();
        match hubs.len() {
            0 => out.push(comp[0]),
            1 => out.push(hubs[0]),
            _ => {
                debug_assert!(comp.len() == 3, "only a triangle has two vertices of degree 2");
                out.extend_from_slice(&comp[..2]);
            }
        }
    }
    out
}

/// Branching on a maximum-degree vertex `v` of degree at least 3: a cover
/// contains `v` or all of `N(v)`. Graphs of maximum degree 2 are solved
/// directly component by component.
pub fn vc_degree_branch(inst: &ProblemInstance) -> Solved {
    fn rec(
        r: &mut Residual,
        k: usize,
        depth: u32,
        chosen: &mut Vec<Vertex>,
        stats: &mut BranchStats,
    ) -> Option<Vec<Vertex>> {
        stats.enter(depth);
        if r.edges == 0 {
            return Some(chosen.clone());
        }
        if k == 0 {
            return None;
        }
        let (v, d) = (0..r.g.n())
            .filter(|&v| r.alive[v])
            .map(|v| (v, r.deg[v]))
            .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if d <= 2 {
            let base = cover_paths_and_cycles(r);
            if base.len() > k {
                return None;
            }
            let mut out = chosen.clone();
            out.extend(base);
            return Some(out);
        }
        let found = r.with_removed(&[v], chosen, |r, chosen| {
            rec(r, k - 1, depth + 1, chosen, stats)
        });
        if found.is_some() {
            return found;
        }
        if d <= k {
            let nbrs: Vec<Vertex> = r.live_neighbors(v).collect();
            return r.with_removed(&nbrs, chosen, |r, chosen| {
                rec(r, k - d, depth + 1, chosen, stats)
            });
        }
        None
    }
    let mut stats = BranchStats::default();
    let mut r = Residual::new(&inst.graph);
    let witness = rec(&mut r, inst.k, 0, &mut Vec::new(), &mut stats);
    Solved::new(witness, stats)
}

/// Optimal cover when every live degree is at most 2: a path on `p` vertices
/// needs `p/2` (every second vertex), a cycle on `p` needs `ceil(p/2)`.
fn cover_paths_and_cycles(r: &Residual) -> Vec<Vertex> {
    let n = r.g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let walk = |start: Vertex, seen: &mut Vec<bool>| -> Vec<Vertex> {
        let mut order = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(next) = r.live_neighbors(cur).find(|&w| !seen[w]) {
            seen[next] = true;
            order.push(next);
            cur = next;
        }
        order
    };
    // paths first, walked from an endpoint
    for v in 0..n {
        if r.alive[v] && !seen[v] && r.deg[v] == 1 {
            let path = walk(v, &mut seen);
            out.extend(path.iter().skip(1).step_by(2));
        }
    }
    // whatever remains with edges is a cycle
    for v in 0..n {
        if r.alive[v] && !seen[v] && r.deg[v] == 2 {
            let cycle = walk(v, &mut seen);
            out.extend(cycle.iter().step_by(2));
        }
    }
    out
}

/// Dominating Set on graphs of maximum degree `d`: some member of the closed
/// neighborhood of any undominated vertex is in the solution, giving at most
/// `d + 1` branches per level.
pub fn ds_degree_branch(inst: &ProblemInstance, d: usize) -> Result<Solved> {
    let g = &inst.graph;
    if g.max_degree() > d {
        return Err(Error::Contract(format!(
            "maximum degree {} exceeds the declared bound {d}",
            g.max_degree()
        )));
    }
    struct State<'g> {
        g: &'g Graph,
        // number of chosen vertices in the closed neighborhood
        dominated_by: Vec<u32>,
    }
    impl State<'_> {
        fn toggle(&mut self, v: Vertex, add: bool) {
            let g = self.g;
            for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
                if add {
                    self.dominated_by[w] += 1;
                } else {
                    self.dominated_by[w] -= 1;
                }
            }
        }
    }
    fn rec(
        st: &mut State,
        k: usize,
        depth: u32,
        chosen: &mut Vec<Vertex>,
        stats: &mut BranchStats,
    ) -> Option<Vec<Vertex>> {
        stats.enter(depth);
        let Some(v) = (0..st.g.n()).find(|&v| st.dominated_by[v] == 0) else {
            return Some(chosen.clone());
        };
        if k == 0 {
            return None;
        }
        let mut closed: Vec<Vertex> = st.g.neighbors(v).to_vec();
        closed.push(v);
        closed.sort_unstable();
        for u in closed {
            st.toggle(u, true);
            chosen.push(u);
            let found = rec(st, k - 1, depth + 1, chosen, stats);
            chosen.pop();
            st.toggle(u, false);
            if found.is_some() {
                return found;
            }
        }
        None
    }
    let mut st = State {
        g,
        dominated_by: vec![0; g.n()],
    };
    let mut stats = BranchStats::default();
    let witness = rec(&mut st, inst.k, 0, &mut Vec::new(), &mut stats);
    Ok(Solved::new(witness, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, random_graph, GraphKind};
    use crate::oracle::{check, Oracle};
    use crate::rng::Seed;

    fn inst(kind: GraphKind, k: usize) -> ProblemInstance {
        ProblemInstance::new(generate(&kind).unwrap(), k)
    }

    type Solver = fn(&ProblemInstance) -> Solved;
    const VC_SOLVERS: [(&str, Solver); 3] = [
        ("edge", vc_edge_branch),
        ("path", vc_path_branch),
        ("degree", vc_degree_branch),
    ];

    #[test]
    fn edge_branch_examples() {
        assert!(!vc_edge_branch(&inst(GraphKind::Complete(3), 1)).answer);
        let s = vc_edge_branch(&ProblemInstance::new(Graph::empty(4), 0));
        assert_eq!(s.witness, Some(vec![]));
        let s = vc_edge_branch(&inst(GraphKind::Path(4), 2));
        assert!(s.answer);
        assert!(check::is_vertex_cover(&generate(&GraphKind::Path(4)).unwrap(), s.witness.as_ref().unwrap()));
    }

    #[test]
    fn path_branch_examples() {
        assert!(vc_path_branch(&inst(GraphKind::Path(4), 2)).answer);
        assert!(!vc_path_branch(&inst(GraphKind::Complete(4), 2)).answer);

        let star = generate(&GraphKind::Star(2)).unwrap();
        let forest = star.disjoint_union(&star).disjoint_union(&star);
        let s = vc_path_branch(&ProblemInstance::new(forest, 3));
        assert_eq!(s.witness, Some(vec![0, 3, 6]));
        // resolved without branching
        assert_eq!(s.stats.nodes_expanded, 1);
    }

    #[test]
    fn path_branch_triangle_base_case() {
        let k3 = generate(&GraphKind::Complete(3)).unwrap();
        let g = k3.disjoint_union(&generate(&GraphKind::Star(3)).unwrap());
        let s = vc_path_branch(&ProblemInstance::new(g.clone(), 3));
        assert_eq!(s.witness, Some(vec![0, 1, 3]));
        assert!(!vc_path_branch(&ProblemInstance::new(g, 2)).answer);
    }

    #[test]
    fn degree_branch_examples() {
        assert!(!vc_degree_branch(&inst(GraphKind::Cycle(5), 2)).answer);
        assert!(vc_degree_branch(&inst(GraphKind::Cycle(5), 3)).answer);
        let s = vc_degree_branch(&inst(GraphKind::Star(5), 1));
        assert_eq!(s.witness, Some(vec![0]));
        assert!(vc_degree_branch(&inst(GraphKind::Complete(4), 3)).answer);
        assert!(!vc_degree_branch(&inst(GraphKind::Complete(4), 2)).answer);
    }

    #[test]
    fn degree_two_base_case_formulas() {
        for p in 1..9 {
            let path = generate(&GraphKind::Path(p)).unwrap();
            let r = Residual::new(&path);
            assert_eq!(cover_paths_and_cycles(&r).len(), p / 2);
            assert!(check::is_vertex_cover(&path, &cover_paths_and_cycles(&r)));
        }
        for p in 3..9 {
            let cycle = generate(&GraphKind::Cycle(p)).unwrap();
            let r = Residual::new(&cycle);
            assert_eq!(cover_paths_and_cycles(&r).len(), p.div_ceil(2));
            assert!(check::is_vertex_cover(&cycle, &cover_paths_and_cycles(&r)));
        }
    }

    #[test]
    fn dominating_set_examples() {
        assert!(ds_degree_branch(&inst(GraphKind::Star(3), 1), 3).unwrap().answer);
        let c6 = generate(&GraphKind::Cycle(6)).unwrap();
        let s = ds_degree_branch(&ProblemInstance::new(c6.clone(), 2), 2).unwrap();
        assert!(s.answer);
        assert!(check::is_dominating_set(&c6, s.witness.as_ref().unwrap()));
        assert!(!ds_degree_branch(&ProblemInstance::new(c6, 1), 2).unwrap().answer);
        assert!(matches!(
            ds_degree_branch(&inst(GraphKind::Star(3), 1), 2),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn oracle_equivalence_and_bounds() {
        let oracle = Oracle::default();
        for seed in 0..60 {
            let n = 1 + (seed as usize % 11);
            let m = (seed as usize * 7) % (n * (n - 1) / 2 + 1);
            let g = random_graph(n, m, Seed(seed)).unwrap();
            let opt = oracle.vc_opt(&g).unwrap().0;
            let dom = oracle.dominating_opt(&g).unwrap();
            for k in 0..=n {
                let p = ProblemInstance::new(g.clone(), k);
                for (name, solver) in VC_SOLVERS {
                    let s = solver(&p);
                    assert_eq!(s.answer, opt <= k, "{name} seed={seed} k={k}");
                    if let Some(w) = &s.witness {
                        assert!(w.len() <= k && check::is_vertex_cover(&g, w), "{name}");
                    }
                    assert!(s.stats.max_depth as usize <= k, "{name}");
                }
                let edge = vc_edge_branch(&p).stats.nodes_expanded;
                assert!(edge < 1 << (k + 1));
                let path = vc_path_branch(&p).stats.nodes_expanded;
                assert!(path <= (3u64.pow(k as u32 / 2 + 1) - 1) / 2);

                // the declared bound may exceed the true maximum degree
                let d = g.max_degree().max(1);
                let ds = ds_degree_branch(&p, d).unwrap();
                assert_eq!(ds.answer, dom <= k);
                if let Some(w) = &ds.witness {
                    assert!(check::is_dominating_set(&g, w));
                }
                let levels: u64 = (0..=k as u32).map(|i| (g.max_degree() as u64 + 1).pow(i)).sum();
                assert!(ds.stats.nodes_expanded <= levels);
                assert!(ds.stats.nodes_expanded <= ((d + 1) as u64).pow(k as u32 + 1));
            }
        }
    }
}
