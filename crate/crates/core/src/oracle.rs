//! Exhaustive reference solvers.
//!
//! These are deliberately naive: subsets are enumerated in increasing size,
//! and the only pruning is feasibility. They build their own bitmask
//! adjacency from the edge list and share no code with the FPT algorithms,
//! so they can serve as ground truth in cross-checks.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::triples::{Triple, TripleSystem};

/// Instance-size limits. Exceeding one is an error, never a silent cut-off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
    /// Max-Leaf enumerates leaf sets of spanning trees.
    pub spanning_cap: usize,
    pub triple_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: 20,
            spanning_cap: 14,
            triple_cap: 20,
        }
    }
}

struct Bits {
    n: usize,
    rows: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Bits {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut rows = vec![0u64; n];
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
            edges.push((u, v));
        }
        Bits { n, rows, edges }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn covers(&self, mask: u64) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
    }
}

fn to_vec(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// All `r`-subsets of `0..n` as bitmasks, in increasing numeric order.
fn subsets_of_size(n: usize, r: usize) -> impl Iterator<Item = u64> {
    let limit = 1u128 << n;
    let mut next: Option<u64> = if r > n {
        None
    } else if r == 0 {
        Some(0)
    } else {
        Some(((1u128 << r) - 1) as u64)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur as u128;
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let succ = (((ripple ^ c) >> 2) / low) | ripple;
            (succ < limit).then_some(succ as u64)
        };
        Some(cur)
    })
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle {
            cap,
            ..Oracle::default()
        }
    }

    fn check(&self, what: &'static str, size: usize, cap: usize) -> Result<()> {
        if size > cap.min(63) {
            return Err(Error::SizeCap {
                what,
                size,
                cap: cap.min(63),
            });
        }
        Ok(())
    }

    /// Minimum vertex cover size with one witness.
    pub fn vc_opt(&self, g: &Graph) -> Result<(usize, Vec<Vertex>)> {
        self.check("vertex cover oracle", g.n(), self.cap)?;
        let b = Bits::new(g);
        for r in 0..=b.n {
            if let Some(mask) = subsets_of_size(b.n, r).find(|&m| b.covers(m)) {
                return Ok((r, to_vec(mask)));
            }
        }
        unreachable!("the full vertex set is a cover")
    }

    pub fn enumerate_min_vertex_covers(&self, g: &Graph) -> Result<Vec<Vec<Vertex>>> {
        let (opt, _) = self.vc_opt(g)?;
        let b = Bits::new(g);
        Ok(subsets_of_size(b.n, opt)
            .filter(|&m| b.covers(m))
            .map(to_vec)
            .collect())
    }

    /// Maximum number of vertices on a simple path (0 for the empty graph).
    pub fn longest_path_vertices(&self, g: &Graph) -> Result<usize> {
        self.check("longest path oracle", g.n(), self.cap)?;
        let b = Bits::new(g);
        if b.n == 0 {
            return Ok(0);
        }
        // ends[mask] = set of v such that some path visits exactly `mask` and ends at v
        let mut ends = vec![0u32; 1 << b.n];
        for v in 0..b.n {
            ends[1 << v] = 1 << v;
        }
        let mut best = 1;
        for mask in 1usize..(1 << b.n) {
            let e = ends[mask];
            if e == 0 {
                continue;
            }
            best = best.max(mask.count_ones() as usize);
            for v in 0..b.n {
                if e >> v & 1 == 0 {
                    continue;
                }
                let mut ext = b.rows[v] & !(mask as u64);
                while ext != 0 {
                    let w = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
        Ok(best)
    }

    pub fn is_3_colorable(&self, g: &Graph) -> Result<bool> {
        self.check("3-coloring oracle", g.n(), self.cap)?;
        let b = Bits::new(g);
        let mut colors = vec![u8::MAX; b.n];
        fn assign(b: &Bits, colors: &mut [u8], v: usize) -> bool {
            if v == b.n {
                return true;
            }
            for c in 0..3u8 {
                let clash = (0..v).any(|u| b.rows[v] >> u & 1 == 1 && colors[u] == c);
                if !clash {
                    colors[v] = c;
                    if assign(b, colors, v + 1) {
                        return true;
                    }
                }
            }
            false
        }
        Ok(assign(&b, &mut colors, 0))
    }

    /// Maximum number of leaves over spanning trees of a connected graph.
    ///
    /// For `n >= 3`, a leaf set `L` is realizable iff `V - L` is nonempty and
    /// connected and every member of `L` has a neighbor in `V - L`. A single
    /// vertex has no leaves; `K2` has two.
    pub fn max_leaf(&self, g: &Graph) -> Result<usize> {
        self.check("max-leaf oracle", g.n(), self.spanning_cap)?;
        let b = Bits::new(g);
        if b.n == 0 || !connected_within(&b, b.full()) {
            return Err(Error::Domain("max-leaf needs a connected graph".into()));
        }
        match b.n {
            1 => return Ok(0),
            2 => return Ok(2),
            _ => {}
        }
        let mut best = 0;
        for leaves in 0..b.full() {
            let rest = b.full() & !leaves;
            let count = leaves.count_ones() as usize;
            if count <= best || !connected_within(&b, rest) {
                continue;
            }
            if to_vec(leaves).iter().all(|&v| b.rows[v] & rest != 0) {
                best = count;
            }
        }
        Ok(best)
    }

    /// Maximum number of vertex-disjoint triangles.
    pub fn max_triangle_packing(&self, g: &Graph) -> Result<usize> {
        self.check("triangle packing oracle", g.n(), self.cap)?;
        let b = Bits::new(g);
        // triangles indexed by their smallest vertex
        let mut by_min: Vec<Vec<u64>> = vec![Vec::new(); b.n];
        for u in 0..b.n {
            for v in u + 1..b.n {
                if b.rows[u] >> v & 1 == 0 {
                    continue;
                }
                for w in v + 1..b.n {
                    if b.rows[u] >> w & 1 == 1 && b.rows[v] >> w & 1 == 1 {
                        by_min[u].push(1 << u | 1 << v | 1 << w);
                    }
                }
            }
        }
        fn rec(by_min: &[Vec<u64>], v: usize, used: u64) -> usize {
            if v == by_min.len() {
                return 0;
            }
            let mut best = rec(by_min, v + 1, used);
            if used >> v & 1 == 0 {
                for &t in &by_min[v] {
                    if t & used == 0 {
                        best = best.max(1 + rec(by_min, v + 1, used | t));
                    }
                }
            }
            best
        }
        Ok(rec(&by_min, 0, 0))
    }

    /// Maximum 3-dimensional matching.
    pub fn max_3dm(&self, ts: &TripleSystem) -> Result<usize> {
        self.check("3DM oracle", ts.len(), self.triple_cap)?;
        let triples = ts.triples();
        let sizes = ts.sizes();
        let mut used: [Vec<bool>; 3] = [
            vec![false; sizes[0]],
            vec![false; sizes[1]],
            vec![false; sizes[2]],
        ];
        fn rec(triples: &[Triple], i: usize, used: &mut [Vec<bool>; 3]) -> usize {
            if i == triples.len() {
                return 0;
            }
            let mut best = rec(triples, i + 1, used);
            let t = triples[i];
            if (0..3).all(|c| !used[c][t[c]]) {
                for c in 0..3 {
                    used[c][t[c]] = true;
                }
                best = best.max(1 + rec(triples, i + 1, used));
                for c in 0..3 {
                    used[c][t[c]] = false;
                }
            }
            best
        }
        Ok(rec(triples, 0, &mut used))
    }

    /// Largest `S` such that every member of `S` has a neighbor outside `S`.
    pub fn max_nonblocker(&self, g: &Graph) -> Result<usize> {
        self.check("non-blocker oracle", g.n(), self.cap)?;
        let b = Bits::new(g);
        let mut best = 0;
        for mask in 0..=b.full() {
            let size = mask.count_ones() as usize;
            if size > best && to_vec(mask).iter().all(|&v| b.rows[v] & !mask != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// Minimum dominating set size.
    pub fn dominating_opt(&self, g: &Graph) -> Result<usize> {
        self.check("dominating set oracle", g.n(), self.cap)?;
        let b = Bits::new(g);
        for r in 0..=b.n {
            let found = subsets_of_size(b.n, r).any(|mask| {
                let closed = to_vec(mask).iter().fold(mask, |acc, &v| acc | b.rows[v]);
                closed == b.full()
            });
            if found {
                return Ok(r);
            }
        }
        unreachable!("the full vertex set dominates")
    }
}

fn connected_within(b: &Bits, mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut seen = 1u64 << mask.trailing_zeros();
    loop {
        let grown = to_vec(seen).iter().fold(seen, |acc, &v| acc | (b.rows[v] & mask));
        if grown == seen {
            return seen == mask;
        }
        seen = grown;
    }
}

/// Predicate checkers for witnesses. Each builds its own edge set from the
/// graph's edge list.
pub mod check {
    use std::collections::HashSet;

    use crate::graph::{Graph, Vertex};
    use crate::triples::{Triple, TripleSystem};

    fn edge_set(g: &Graph) -> HashSet<(Vertex, Vertex)> {
        g.edges().collect()
    }

    fn adjacent(edges: &HashSet<(Vertex, Vertex)>, u: Vertex, v: Vertex) -> bool {
        edges.contains(&(u.min(v), u.max(v)))
    }

    fn in_range_distinct(g: &Graph, set: &[Vertex]) -> bool {
        let mut seen = HashSet::new();
        set.iter().all(|&v| v < g.n() && seen.insert(v))
    }

    pub fn is_vertex_cover(g: &Graph, set: &[Vertex]) -> bool {
        let s: HashSet<Vertex> = set.iter().copied().collect();
        set.iter().all(|&v| v < g.n()) && g.edges().all(|(u, v)| s.contains(&u) || s.contains(&v))
    }

    pub fn is_dominating_set(g: &Graph, set: &[Vertex]) -> bool {
        if !set.iter().all(|&v| v < g.n()) {
            return false;
        }
        let mut dominated = vec![false; g.n()];
        let s: HashSet<Vertex> = set.iter().copied().collect();
        for &v in set {
            dominated[v] = true;
        }
        for (u, v) in g.edges() {
            if s.contains(&u) {
                dominated[v] = true;
            }
            if s.contains(&v) {
                dominated[u] = true;
            }
        }
        dominated.into_iter().all(|d| d)
    }

    pub fn is_nonblocker(g: &Graph, set: &[Vertex]) -> bool {
        if !in_range_distinct(g, set) {
            return false;
        }
        let s: HashSet<Vertex> = set.iter().copied().collect();
        let mut has_outside = vec![false; g.n()];
        for (u, v) in g.edges() {
            if !s.contains(&v) {
                has_outside[u] = true;
            }
            if !s.contains(&u) {
                has_outside[v] = true;
            }
        }
        set.iter().all(|&v| has_outside[v])
    }

    pub fn is_simple_path(g: &Graph, path: &[Vertex]) -> bool {
        let edges = edge_set(g);
        in_range_distinct(g, path) && path.windows(2).all(|w| adjacent(&edges, w[0], w[1]))
    }

    pub fn is_triangle_packing(g: &Graph, triangles: &[[Vertex; 3]]) -> bool {
        let edges = edge_set(g);
        let flat: Vec<Vertex> = triangles.iter().flatten().copied().collect();
        in_range_distinct(g, &flat)
            && triangles.iter().all(|t| {
                adjacent(&edges, t[0], t[1])
                    && adjacent(&edges, t[1], t[2])
                    && adjacent(&edges, t[0], t[2])
            })
    }

    /// `colors[v]` must lie in `0..q` and differ across every edge.
    pub fn is_proper_coloring(g: &Graph, colors: &[u8], q: u8) -> bool {
        colors.len() == g.n()
            && colors.iter().all(|&c| c < q)
            && g.edges().all(|(u, v)| colors[u] != colors[v])
    }

    pub fn is_3d_matching(ts: &TripleSystem, chosen: &[Triple]) -> bool {
        let all: HashSet<Triple> = ts.triples().iter().copied().collect();
        let mut used: [HashSet<usize>; 3] = Default::default();
        chosen
            .iter()
            .all(|t| all.contains(t) && (0..3).all(|c| used[c].insert(t[c])))
    }
}
