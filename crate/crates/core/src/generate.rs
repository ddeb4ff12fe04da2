//! Deterministic instance generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rng::Seed;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    /// `K_{1,leaves}`, center 0.
    Star(usize),
    Complete(usize),
    Grid(usize, usize),
    Random { n: usize, m: usize, seed: u64 },
    /// Random graph with `m` edges that contains a path on `k` vertices.
    PlantedPath { n: usize, m: usize, k: usize, seed: u64 },
}

pub fn generate(kind: &GraphKind) -> Result<Graph> {
    match *kind {
        GraphKind::Path(n) => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
        GraphKind::Cycle(n) => {
            if n > 0 && n < 3 {
                return Err(Error::Parameter(format!(
                    "a simple cycle needs at least 3 vertices, got {n}"
                )));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        GraphKind::Star(leaves) => Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))),
        GraphKind::Complete(n) => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        GraphKind::Grid(r, c) => {
            let id = |i: usize, j: usize| i * c + j;
            let mut edges = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    if j + 1 < c {
                        edges.push((id(i, j), id(i, j + 1)));
                    }
                    if i + 1 < r {
                        edges.push((id(i, j), id(i + 1, j)));
                    }
                }
            }
            Graph::from_edges(r * c, edges)
        }
        GraphKind::Random { n, m, seed } => random_graph(n, m, Seed(seed)),
        GraphKind::PlantedPath { n, m, k, seed } => planted_path(n, m, k, Seed(seed)),
    }
}

fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pair_from_index(n: usize, mut idx: usize) -> (Vertex, Vertex) {
    // row-major enumeration of pairs u < v
    let mut u = 0;
    loop {
        let row = n - u - 1;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
        u += 1;
    }
}

/// Uniform graph with exactly `m` edges.
pub fn random_graph(n: usize, m: usize, seed: Seed) -> Result<Graph> {
    let total = max_edges(n);
    if m > total {
        return Err(Error::Parameter(format!(
            "{m} edges do not fit in a simple graph on {n} vertices (max {total})"
        )));
    }
    let mut rng = seed.rng();
    let picked = index::sample(&mut rng, total, m);
    Graph::from_edges(n, picked.into_iter().map(|i| pair_from_index(n, i)))
}

/// Random graph with `m` edges, `k - 1` of which form a path through `k`
/// randomly chosen vertices.
pub fn planted_path(n: usize, m: usize, k: usize, seed: Seed) -> Result<Graph> {
    if k > n {
        return Err(Error::Parameter(format!(
            "cannot plant a {k}-vertex path in {n} vertices"
        )));
    }
    let path_edges = k.saturating_sub(1);
    if m < path_edges || m > max_edges(n) {
        return Err(Error::Parameter(format!(
            "edge count {m} must lie in {path_edges}..={}",
            max_edges(n)
        )));
    }
    let mut rng = seed.rng();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = std::collections::BTreeSet::new();
    for w in order[..k].windows(2) {
        present.insert((w[0].min(w[1]), w[0].max(w[1])));
    }
    while present.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            present.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, present)
}

/// Random connected graph: a random spanning tree plus extra random edges.
pub fn random_connected(n: usize, extra: usize, seed: Seed) -> Result<Graph> {
    if n == 0 {
        return Ok(Graph::empty(0));
    }
    let tree_edges = n - 1;
    let m = tree_edges + extra;
    if m > max_edges(n) {
        return Err(Error::Parameter(format!(
            "{extra} extra edges do not fit on {n} vertices"
        )));
    }
    let mut rng = seed.rng();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = std::collections::BTreeSet::new();
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        let v = order[i];
        present.insert((v.min(parent), v.max(parent)));
    }
    while present.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            present.insert((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, present)
}

/// Replaces every edge by a path with `extra` internal vertices.
pub fn subdivide(g: &Graph, extra: usize) -> Graph {
    let mut n = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..extra {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges(n, edges).expect("subdivision of a simple graph is simple")
}

impl FromStr for GraphKind {
    type Err = Error;

    /// `path:5`, `cycle:6`, `star:3`, `complete:4`, `grid:2x3`,
    /// `random:10:20:7`, `planted:30:60:6:1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("unrecognized graph kind '{s}'"));
        let mut parts = s.split(':');
        let name = parts.next().ok_or_else(bad)?;
        let nums: Vec<&str> = parts.collect();
        let num = |i: usize| -> Result<usize> {
            nums.get(i).and_then(|t| t.parse().ok()).ok_or_else(bad)
        };
        let arity = |want: usize| if nums.len() == want { Ok(()) } else { Err(bad()) };
        Ok(match name {
            "path" => {
                arity(1)?;
                GraphKind::Path(num(0)?)
            }
            "cycle" => {
                arity(1)?;
                GraphKind::Cycle(num(0)?)
            }
            "star" => {
                arity(1)?;
                GraphKind::Star(num(0)?)
            }
            "complete" => {
                arity(1)?;
                GraphKind::Complete(num(0)?)
            }
            "grid" => {
                arity(1)?;
                let (r, c) = nums[0].split_once('x').ok_or_else(bad)?;
                GraphKind::Grid(r.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?)
            }
            "random" => {
                arity(3)?;
                GraphKind::Random {
                    n: num(0)?,
                    m: num(1)?,
                    seed: num(2)? as u64,
                }
            }
            "planted" => {
                arity(4)?;
                GraphKind::PlantedPath {
                    n: num(0)?,
                    m: num(1)?,
                    k: num(2)?,
                    seed: num(3)? as u64,
                }
            }
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Path(n) => write!(f, "path:{n}"),
            GraphKind::Cycle(n) => write!(f, "cycle:{n}"),
            GraphKind::Star(n) => write!(f, "star:{n}"),
            GraphKind::Complete(n) => write!(f, "complete:{n}"),
            GraphKind::Grid(r, c) => write!(f, "grid:{r}x{c}"),
            GraphKind::Random { n, m, seed } => write!(f, "random:{n}:{m}:{seed}"),
            GraphKind::PlantedPath { n, m, k, seed } => write!(f, "planted:{n}:{m}:{k}:{seed}"),
        }
    }
}
