//! Max-Leaf Spanning Tree kernel (rules R1 to R3 plus the linear-size
//! decision).

use std::collections::BTreeSet;

use super::KernelOutcome;
use crate::error::{Error, Result};
use crate::graph::{Graph, ProblemInstance, Vertex};

/// Mutable working copy with deletions.
struct Work {
    adj: Vec<BTreeSet<Vertex>>,
    alive: Vec<bool>,
}

impl Work {
    fn new(g: &Graph) -> Self {
        Work {
            adj: g
                .vertices()
                .map(|v| g.neighbors(v).iter().copied().collect())
                .collect(),
            alive: vec![true; g.n()],
        }
    }

    fn deg(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    fn live(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.adj.len()).filter(|&v| self.alive[v])
    }

    fn remove(&mut self, v: Vertex) {
        for w in std::mem::take(&mut self.adj[v]) {
            self.adj[w].remove(&v);
        }
        self.alive[v] = false;
    }

    /// R1: a degree-1 vertex whose neighbor has degree 2 is removed.
    fn rule1(&mut self) -> bool {
        let hit = self.live().find(|&v| {
            self.deg(v) == 1 && self.deg(*self.adj[v].first().unwrap()) == 2
        });
        hit.map(|v| self.remove(v)).is_some()
    }

    /// R2: of two degree-1 vertices sharing a neighbor, the larger id is
    /// removed and the budget drops by one.
    fn rule2(&mut self) -> bool {
        for u in self.live().collect::<Vec<_>>() {
            let pendants: Vec<Vertex> = self.adj[u]
                .iter()
                .copied()
                .filter(|&w| self.deg(w) == 1)
                .collect();
            if pendants.len() >= 2 {
                self.remove(*pendants.last().unwrap());
                return true;
            }
        }
        false
    }

    /// R3: a chain with at least three internal vertices keeps only its first
    /// and last internal vertex, joined by an edge.
    fn rule3(&mut self) -> bool {
        for u in self.live().collect::<Vec<_>>() {
            if self.deg(u) < 3 {
                continue;
            }
            let starts: Vec<Vertex> = self.adj[u].iter().copied().collect();
            for first in starts {
                if self.deg(first) != 2 {
                    continue;
                }
                let mut internal = vec![first];
                let (mut prev, mut cur) = (u, first);
                let end = loop {
                    let next = *self.adj[cur].iter().find(|&&w| w != prev).unwrap();
                    if self.deg(next) != 2 {
                        break next;
                    }
                    internal.push(next);
                    prev = cur;
                    cur = next;
                };
                if self.deg(end) < 3 || internal.len() < 3 {
                    continue;
                }
                let last = *internal.last().unwrap();
                for &c in &internal[1..internal.len() - 1] {
                    self.remove(c);
                }
                self.adj[first].insert(last);
                self.adj[last].insert(first);
                return true;
            }
        }
        false
    }
}

/// Applies R1, R2 and R3 to a fixpoint (R1 first, then R2, then R3, restarting
/// after every change). Returns the compacted graph and the new budget.
pub fn maxleaf_reduce(g: &Graph, k: usize) -> (Graph, usize) {
    let mut w = Work::new(g);
    let mut k = k;
    loop {
        if w.rule1() {
            continue;
        }
        if k > 0 && w.rule2() {
            k -= 1;
            continue;
        }
        if w.rule3() {
            continue;
        }
        break;
    }
    let ids: Vec<Vertex> = w.live().collect();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in ids.iter().enumerate() {
        new_id[v] = i;
    }
    let edges = ids
        .iter()
        .flat_map(|&v| w.adj[v].iter().map(move |&x| (v, x)))
        .filter(|&(v, x)| v < x)
        .map(|(v, x)| (new_id[v], new_id[x]));
    let reduced = Graph::from_edges(ids.len(), edges).expect("compacted ids are in range");
    (reduced, k)
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.vertices().all(|v| g.degree(v) == 2)
}

/// Kernel for "does `G` have a spanning tree with at least `k` leaves".
///
/// After reduction, a graph with at least `8k'` vertices is a YES instance.
/// The one exception is a plain cycle, which survives all rules at any length
/// and has exactly two leaves in every spanning tree; it is decided directly.
pub fn maxleaf_kernel(inst: &ProblemInstance) -> Result<KernelOutcome<ProblemInstance>> {
    if !inst.graph.is_connected() {
        return Err(Error::Domain(
            "max-leaf kernel needs a non-empty connected graph".into(),
        ));
    }
    let (g, k) = maxleaf_reduce(&inst.graph, inst.k);
    if is_cycle(&g) {
        return Ok(KernelOutcome::Decided(k <= 2));
    }
    if g.n() >= 8 * k {
        return Ok(KernelOutcome::Decided(true));
    }
    Ok(KernelOutcome::Reduced {
        instance: ProblemInstance::new(g, k),
        lift: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, random_connected, subdivide, GraphKind};
    use crate::oracle::Oracle;
    use crate::rng::Seed;

    fn theta(len: usize) -> Graph {
        // hubs 0 and 1, three paths with `len` edges each
        let mut edges = Vec::new();
        let mut next = 2;
        for _ in 0..3 {
            let mut prev = 0;
            for _ in 0..len - 1 {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_edges(next, edges).unwrap()
    }

    fn answer(o: &Oracle, out: &KernelOutcome<ProblemInstance>) -> bool {
        match out {
            KernelOutcome::Decided(b) => *b,
            KernelOutcome::Reduced { instance, .. } => {
                o.max_leaf(&instance.graph).unwrap() >= instance.k
            }
        }
    }

    #[test]
    fn star_and_path() {
        let o = Oracle::default();
        let star = generate(&GraphKind::Star(4)).unwrap();
        let out = maxleaf_kernel(&ProblemInstance::new(star, 4)).unwrap();
        assert!(answer(&o, &out));

        let p5 = generate(&GraphKind::Path(5)).unwrap();
        let out = maxleaf_kernel(&ProblemInstance::new(p5, 3)).unwrap();
        assert!(!answer(&o, &out));
    }

    #[test]
    fn r1_runs_before_r2_on_p3() {
        let p3 = generate(&GraphKind::Path(3)).unwrap();
        let (g, k) = maxleaf_reduce(&p3, 3);
        assert_eq!((g.n(), k), (2, 3));
    }

    #[test]
    fn theta_chains_shrink_to_length_three() {
        let o = Oracle::default();
        let g = theta(4);
        assert_eq!(g.n(), 11);
        let (r, k) = maxleaf_reduce(&g, 5);
        assert_eq!((r.n(), k), (8, 5));
        assert_eq!(theta(3), r);
        assert_eq!(o.max_leaf(&g).unwrap(), o.max_leaf(&r).unwrap());
    }

    #[test]
    fn long_cycles_are_no_for_three_leaves() {
        let c = generate(&GraphKind::Cycle(30)).unwrap();
        let inst = |k| ProblemInstance::new(c.clone(), k);
        assert_eq!(maxleaf_kernel(&inst(3)).unwrap(), KernelOutcome::Decided(false));
        assert_eq!(maxleaf_kernel(&inst(2)).unwrap(), KernelOutcome::Decided(true));
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(maxleaf_kernel(&ProblemInstance::new(Graph::empty(2), 1)).is_err());
        assert!(maxleaf_kernel(&ProblemInstance::new(Graph::empty(0), 1)).is_err());
    }

    #[test]
    fn sound_on_random_connected_graphs() {
        let o = Oracle::default();
        for seed in 0..80u64 {
            let n = 1 + seed as usize % 10;
            let extra = (seed as usize % 4).min(n * (n - 1) / 2 + 1 - n);
            let base = random_connected(n, extra, Seed(seed)).unwrap();
            let g = subdivide(&base, (seed as usize / 3) % 5);
            if g.n() > 14 {
                continue;
            }
            let best = o.max_leaf(&g).unwrap();
            for k in 0..=g.n() + 1 {
                let out = maxleaf_kernel(&ProblemInstance::new(g.clone(), k)).unwrap();
                assert_eq!(answer(&o, &out), best >= k, "seed {seed} k {k}");
                if let KernelOutcome::Reduced { instance, .. } = &out {
                    assert!(instance.graph.n() < 8 * instance.k);
                    let again = maxleaf_kernel(instance).unwrap();
                    assert_eq!(again.reduced(), Some(instance));
                }
            }
        }
    }
}
