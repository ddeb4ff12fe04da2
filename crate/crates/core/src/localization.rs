//! Greedy localization for k-Triangle Packing.
//!
//! A maximal packing `T` is found greedily. If it has fewer than `k`
//! triangles, every triangle of a solution meets `V(T)`, which has at most
//! `3(k - 1)` vertices. The solver guesses how `k` solution triangles meet
//! `V(T)` and then tries to extend those partial triangles with the
//! `branch` procedure, backtracking over the vertices it borrowed too early.

use std::collections::HashSet;

use serde::Serialize;

use crate::graph::{Graph, ProblemInstance, Vertex};
use crate::oracle::check;

pub type Triangle = [Vertex; 3];

/// Search counters, reported with every answer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LocalizationStats {
    pub greedy_size: usize,
    /// Complete guesses handed to `branch`.
    pub outer_guesses: u64,
    pub inner_nodes: u64,
    /// Largest `branch` tree for a single guess.
    pub max_inner_nodes: u64,
    pub max_depth: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingOutcome {
    /// `k` disjoint triangles, or `None` for NO.
    pub witness: Option<Vec<Triangle>>,
    pub stats: LocalizationStats,
}

/// Ceiling on outer guesses: each of at most `3(k - 1)` vertices joins one of
/// `k` groups or none.
pub fn outer_ceiling(k: usize) -> u64 {
    (k as u64 + 1).saturating_pow(3 * k.saturating_sub(1) as u32)
}

/// Ceiling on `branch` nodes per guess: fan-out at most `2k`, depth at most
/// `2k`.
pub fn inner_ceiling(k: usize) -> u64 {
    (2 * k as u64).saturating_pow(2 * k as u32).max(1)
}

/// Triangles `a < b < c` in lexicographic order, taken whenever disjoint
/// from those already chosen.
pub fn greedy_maximal_packing(g: &Graph) -> Vec<Triangle> {
    let mut used = vec![false; g.n()];
    let mut out = Vec::new();
    for a in g.vertices() {
        for &b in g.neighbors(a) {
            if b <= a || used[a] {
                continue;
            }
            for &c in g.neighbors(b) {
                if c > b && !used[a] && !used[b] && !used[c] && g.has_edge(a, c) {
                    used[a] = true;
                    used[b] = true;
                    used[c] = true;
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn is_clique(g: &Graph, vs: &[Vertex]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn sorted3(mut t: Vec<Vertex>) -> Triangle {
    t.sort_unstable();
    [t[0], t[1], t[2]]
}

/// Lexicographically first `B` outside `blocked` that completes `part` to a
/// triangle.
fn completion(g: &Graph, part: &[Vertex], blocked: &[bool]) -> Option<Vec<Vertex>> {
    match *part {
        [u, v] => g
            .neighbors(u)
            .iter()
            .find(|&&w| !blocked[w] && g.has_edge(v, w))
            .map(|&w| vec![w]),
        [u] => {
            let nb = g.neighbors(u);
            nb.iter().filter(|&&a| !blocked[a]).find_map(|&a| {
                nb.iter()
                    .find(|&&b| b > a && !blocked[b] && g.has_edge(a, b))
                    .map(|&b| vec![a, b])
            })
        }
        _ => None,
    }
}

/// Part lists already known to fail, in canonical (sorted) form.
type Failed = HashSet<Vec<Vec<Vertex>>>;

/// The `branch` procedure: extend the parts greedily in order; on the first
/// failure retry with that part enlarged by each borrowed vertex it can take.
/// Parts are processed in sorted order, so a part list that failed once fails
/// again and is skipped.
fn branch(
    g: &Graph,
    parts: &[Vec<Vertex>],
    depth: u32,
    nodes: &mut u64,
    stats: &mut LocalizationStats,
    failed: &mut Failed,
) -> Option<Vec<Triangle>> {
    let mut parts = parts.to_vec();
    parts.sort_unstable();
    if failed.contains(&parts) {
        return None;
    }
    let found = branch_step(g, &parts, depth, nodes, stats, failed);
    if found.is_none() {
        failed.insert(parts);
    }
    found
}

fn branch_step(
    g: &Graph,
    parts: &[Vec<Vertex>],
    depth: u32,
    nodes: &mut u64,
    stats: &mut LocalizationStats,
    failed: &mut Failed,
) -> Option<Vec<Triangle>> {
    *nodes += 1;
    stats.max_depth = stats.max_depth.max(depth);
    let mut blocked = vec![false; g.n()];
    for &v in parts.iter().flatten() {
        blocked[v] = true;
    }
    let mut borrowed: Vec<Vertex> = Vec::new();
    let mut triangles = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        if part.len() == 3 {
            triangles.push(sorted3(part.clone()));
            continue;
        }
        if let Some(b) = completion(g, part, &blocked) {
            for &v in &b {
                blocked[v] = true;
                borrowed.push(v);
            }
            triangles.push(sorted3(part.iter().chain(&b).copied().collect()));
            continue;
        }
        borrowed.sort_unstable();
        for &v in &borrowed {
            let mut grown = part.clone();
            grown.push(v);
            if !is_clique(g, &grown) {
                continue;
            }
            grown.sort_unstable();
            let mut next = parts.to_vec();
            next[i] = grown;
            if let Some(w) = branch(g, &next, depth + 1, nodes, stats, failed) {
                return Some(w);
            }
        }
        return None;
    }
    Some(triangles)
}

/// Enumerates every way to place the packed vertices into exactly `k`
/// unlabeled groups, each a clique of size 1 to 3 (vertices may stay out),
/// and runs `branch` on each.
struct Guesser<'a> {
    g: &'a Graph,
    k: usize,
    pool: Vec<Vertex>,
    groups: Vec<Vec<Vertex>>,
    stats: LocalizationStats,
    failed: Failed,
}

impl Guesser<'_> {
    fn run(&mut self, idx: usize) -> Option<Vec<Triangle>> {
        if self.groups.len() + (self.pool.len() - idx) < self.k {
            return None;
        }
        if idx == self.pool.len() {
            self.stats.outer_guesses += 1;
            let mut nodes = 0;
            let found = branch(self.g, &self.groups, 0, &mut nodes, &mut self.stats, &mut self.failed);
            self.stats.inner_nodes += nodes;
            self.stats.max_inner_nodes = self.stats.max_inner_nodes.max(nodes);
            return found;
        }
        let v = self.pool[idx];
        if let Some(w) = self.run(idx + 1) {
            return Some(w);
        }
        for j in 0..self.groups.len() {
            let grp = &self.groups[j];
            if grp.len() < 3 && grp.iter().all(|&u| self.g.has_edge(u, v)) {
                self.groups[j].push(v);
                let found = self.run(idx + 1);
                self.groups[j].pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        if self.groups.len() < self.k {
            self.groups.push(vec![v]);
            let found = self.run(idx + 1);
            self.groups.pop();
            return found;
        }
        None
    }
}

/// Decides whether `g` has `k` vertex-disjoint triangles.
pub fn triangle_packing_decide(inst: &ProblemInstance) -> PackingOutcome {
    let (g, k) = (&inst.graph, inst.k);
    let greedy = greedy_maximal_packing(g);
    let mut stats = LocalizationStats {
        greedy_size: greedy.len(),
        ..Default::default()
    };
    if greedy.len() >= k {
        return PackingOutcome {
            witness: Some(greedy[..k].to_vec()),
            stats,
        };
    }
    if g.n() < 3 * k {
        return PackingOutcome {
            witness: None,
            stats,
        };
    }
    let mut pool: Vec<Vertex> = greedy.iter().flatten().copied().collect();
    pool.sort_unstable();
    let mut guesser = Guesser {
        g,
        k,
        pool,
        groups: Vec::new(),
        stats,
        failed: Failed::new(),
    };
    let witness = guesser.run(0);
    stats = guesser.stats;
    debug_assert!(stats.outer_guesses <= outer_ceiling(k));
    debug_assert!(stats.max_inner_nodes <= inner_ceiling(k));
    if let Some(w) = &witness {
        assert!(w.len() == k && check::is_triangle_packing(g, w), "invalid packing {w:?}");
    }
    PackingOutcome { witness, stats }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, random_graph, GraphKind};
    use crate::oracle::Oracle;
    use crate::rng::Seed;

    fn two_triangles() -> Graph {
        let k3 = generate(&GraphKind::Complete(3)).unwrap();
        k3.disjoint_union(&k3)
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_maximal_packing(&two_triangles()).len(), 2);
        assert!(greedy_maximal_packing(&generate(&GraphKind::Cycle(6)).unwrap()).is_empty());
        assert_eq!(greedy_maximal_packing(&generate(&GraphKind::Complete(4)).unwrap()), vec![[0, 1, 2]]);
    }

    #[test]
    fn decide_examples() {
        let yes = triangle_packing_decide(&ProblemInstance::new(two_triangles(), 2));
        assert_eq!(yes.witness.map(|w| w.len()), Some(2));
        let k4 = generate(&GraphKind::Complete(4)).unwrap();
        assert!(triangle_packing_decide(&ProblemInstance::new(k4, 2)).witness.is_none());
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(triangle_packing_decide(&ProblemInstance::new(bowtie, 2)).witness.is_none());
        assert_eq!(
            triangle_packing_decide(&ProblemInstance::new(Graph::empty(0), 0)).witness,
            Some(vec![])
        );
    }

    /// Greedy takes {0,1,2}; the optimum uses {0,3,4} and {1,5,6}. Both of
    /// those meet the greedy triangle in adjacent vertices, so grouping by
    /// connected components of the packed vertices cannot express them.
    #[test]
    fn solution_triangles_meeting_one_greedy_triangle() {
        let g = Graph::from_edges(
            7,
            [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (3, 4), (1, 5), (1, 6), (5, 6)],
        )
        .unwrap();
        assert_eq!(greedy_maximal_packing(&g), vec![[0, 1, 2]]);
        assert_eq!(Oracle::default().max_triangle_packing(&g).unwrap(), 2);
        let out = triangle_packing_decide(&ProblemInstance::new(g.clone(), 2));
        let w = out.witness.unwrap();
        assert!(check::is_triangle_packing(&g, &w) && w.len() == 2);
    }

    #[test]
    fn agrees_with_oracle() {
        let o = Oracle::default();
        for seed in 0..80u64 {
            let n = 3 + seed as usize % 11;
            let m = (seed as usize * 11 + 5) % (n * (n - 1) / 2 + 1);
            let g = random_graph(n, m, Seed(seed)).unwrap();
            let best = o.max_triangle_packing(&g).unwrap();
            for k in 0..=4 {
                let out = triangle_packing_decide(&ProblemInstance::new(g.clone(), k));
                assert_eq!(out.witness.is_some(), best >= k, "seed {seed} k {k}");
                assert!(out.stats.outer_guesses <= outer_ceiling(k));
                assert!(out.stats.max_inner_nodes <= inner_ceiling(k));
                assert!(out.stats.max_depth as usize <= 2 * k);
            }
        }
    }
}
