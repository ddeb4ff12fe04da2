//! Color-coding for k-Path: an exact dynamic program for colorful paths and
//! the randomized reduction on top of it.
//!
//! Colors are stored 0-based (`0..q`); color sets are `u32` bitmasks, which
//! caps `q` and `k` at 32.

use std::collections::BTreeSet;

use rand::Rng as _;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle::check;
use crate::rng::Seed;

pub const MAX_K: usize = 32;

/// A vertex coloring `χ: V → {0, .., q-1}` with `q = num_colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub num_colors: usize,
    pub colors: Vec<u8>,
}

impl Coloring {
    pub fn new(num_colors: usize, colors: Vec<u8>) -> Self {
        Coloring { num_colors, colors }
    }

    /// Uniform coloring with `q` colors.
    pub fn random(n: usize, q: usize, seed: Seed) -> Self {
        let mut rng = seed.rng();
        Coloring {
            num_colors: q,
            colors: (0..n).map(|_| rng.random_range(0..q) as u8).collect(),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.num_colors > MAX_K {
            return Err(Error::SizeCap {
                what: "number of colors",
                size: self.num_colors,
                cap: MAX_K,
            });
        }
        if self.colors.len() != n {
            return Err(Error::Contract(format!(
                "coloring has {} entries for {n} vertices",
                self.colors.len()
            )));
        }
        match self.colors.iter().position(|&c| c as usize >= self.num_colors) {
            Some(v) => Err(Error::Contract(format!(
                "vertex {v} has color {} outside 0..{}",
                self.colors[v], self.num_colors
            ))),
            None => Ok(()),
        }
    }

    fn bit(&self, v: Vertex) -> u32 {
        1 << self.colors[v]
    }

    /// True when `path` has pairwise distinct colors.
    pub fn is_colorful(&self, path: &[Vertex]) -> bool {
        let mut seen = 0u32;
        path.iter().all(|&v| {
            let b = self.bit(v);
            let fresh = seen & b == 0;
            seen |= b;
            fresh
        })
    }
}

/// `C_s(i, v)` for a fixed start `s`: the color sets of colorful paths on `i`
/// vertices from `s` to `v`.
#[derive(Clone, Debug)]
pub struct ColorSetTable {
    pub start: Vertex,
    // layers[i - 1][v]
    layers: Vec<Vec<BTreeSet<u32>>>,
}

impl ColorSetTable {
    /// Fills layers `1..=k`, stopping early once a layer is empty.
    pub fn build(g: &Graph, chi: &Coloring, s: Vertex, k: usize) -> Self {
        let n = g.n();
        let mut first = vec![BTreeSet::new(); n];
        first[s].insert(chi.bit(s));
        let mut layers = vec![first];
        for _ in 2..=k {
            let prev = layers.last().unwrap();
            let mut next = vec![BTreeSet::new(); n];
            for v in 0..n {
                let b = chi.bit(v);
                for &u in g.neighbors(v) {
                    for &r in &prev[u] {
                        if r & b == 0 {
                            next[v].insert(r | b);
                        }
                    }
                }
            }
            let empty = next.iter().all(BTreeSet::is_empty);
            layers.push(next);
            if empty {
                break;
            }
        }
        ColorSetTable { start: s, layers }
    }

    /// `C_s(i, v)`; empty beyond the filled layers.
    pub fn sets(&self, i: usize, v: Vertex) -> Option<&BTreeSet<u32>> {
        self.layers.get(i.checked_sub(1)?).map(|layer| &layer[v])
    }

    /// A colorful path on `k` vertices from the start, if one exists.
    pub fn witness(&self, g: &Graph, chi: &Coloring, k: usize) -> Option<Vec<Vertex>> {
        let last = self.layers.get(k - 1)?;
        let (mut v, mut r) = last
            .iter()
            .enumerate()
            .find_map(|(v, sets)| sets.first().map(|&r| (v, r)))?;
        let mut path = vec![v];
        for i in (1..k).rev() {
            let rest = r & !chi.bit(v);
            let u = *g
                .neighbors(v)
                .iter()
                .find(|&&u| self.layers[i - 1][u].contains(&rest))
                .expect("every stored set has a predecessor");
            path.push(u);
            v = u;
            r = rest;
        }
        path.reverse();
        Some(path)
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Parameter("k must be at least 1".into()));
    }
    if k > MAX_K {
        return Err(Error::SizeCap {
            what: "color-coding k",
            size: k,
            cap: MAX_K,
        });
    }
    Ok(())
}

/// Finds a path on `k` vertices with pairwise distinct colors, trying start
/// vertices in increasing order.
pub fn colorful_path_decide(g: &Graph, chi: &Coloring, k: usize) -> Result<Option<Vec<Vertex>>> {
    check_k(k)?;
    chi.validate(g.n())?;
    if k > chi.num_colors {
        return Err(Error::Parameter(format!(
            "k = {k} exceeds the {} available colors",
            chi.num_colors
        )));
    }
    for s in g.vertices() {
        let table = ColorSetTable::build(g, chi, s, k);
        if let Some(path) = table.witness(g, chi, k) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// `⌈(k^k / k!) ln(1/δ)⌉`: enough uniform colorings that a fixed `k`-path is
/// missed by all of them with probability at most `δ`.
pub fn trials_for_confidence(k: usize, delta: f64) -> Result<u64> {
    check_k(k)?;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Parameter(format!("delta must lie in (0, 1), got {delta}")));
    }
    let ratio: f64 = (1..=k).map(|j| k as f64 / j as f64).product();
    Ok((ratio * (1.0 / delta).ln()).ceil().max(1.0) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KPathOutcome {
    /// Vertices of the path found, in order. `None` means NO.
    pub witness: Option<Vec<Vertex>>,
    pub trials_planned: u64,
    pub trials_run: u64,
}

impl KPathOutcome {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

/// Randomized k-Path. Trial `i` colors with `Seed(seed).derive(i)`, so the
/// outcome depends only on the inputs. A YES answer is always correct; on a
/// YES instance the answer is NO with probability at most `δ`.
pub fn k_path_randomized(g: &Graph, k: usize, delta: f64, seed: Seed) -> Result<KPathOutcome> {
    let planned = trials_for_confidence(k, delta)?;
    for i in 0..planned {
        let chi = Coloring::random(g.n(), k, seed.derive(i));
        if let Some(path) = colorful_path_decide(g, &chi, k)? {
            if !(path.len() == k && check::is_simple_path(g, &path) && chi.is_colorful(&path)) {
                return Err(Error::Contract(format!("invalid witness {path:?}")));
            }
            return Ok(KPathOutcome {
                witness: Some(path),
                trials_planned: planned,
                trials_run: i + 1,
            });
        }
    }
    Ok(KPathOutcome {
        witness: None,
        trials_planned: planned,
        trials_run: planned,
    })
}
