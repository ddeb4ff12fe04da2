//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Algorithms that shrink a graph either
//! mask vertices locally or go through [`Graph::induced_subgraph`], which
//! returns the id remapping alongside the new graph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

/// A graph paired with the parameter `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    pub graph: Graph,
    pub k: usize,
}

impl ProblemInstance {
    pub fn new(graph: Graph, k: usize) -> Self {
        ProblemInstance { graph, k }
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `old_to_new[v]` is the id of `v` in the subgraph, if kept.
    pub old_to_new: Vec<Option<Vertex>>,
    /// `new_to_old[i]` is the original id of subgraph vertex `i`.
    pub new_to_old: Vec<Vertex>,
}

impl Induced {
    pub fn lift(&self, vertices: &[Vertex]) -> Vec<Vertex> {
        vertices.iter().map(|&v| self.new_to_old[v]).collect()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::Range { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Checks range, symmetry and simplicity of the adjacency lists.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Contract(format!(
                    "neighbors of {u} not strictly sorted"
                )));
            }
            for &v in list {
                if v >= n {
                    return Err(Error::Range { vertex: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::Contract(format!("edge {u}-{v} is not symmetric")));
                }
            }
        }
        Ok(())
    }

    /// `G[S]`, with vertices renumbered in increasing order of their old ids.
    pub fn induced_subgraph(&self, s: &[Vertex]) -> Result<Induced> {
        let n = self.n();
        let mut keep = vec![false; n];
        for &v in s {
            if v >= n {
                return Err(Error::Range { vertex: v, n });
            }
            keep[v] = true;
        }
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::new();
        for v in 0..n {
            if keep[v] {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let adj = new_to_old
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect())
            .collect();
        Ok(Induced {
            graph: Graph { adj },
            old_to_new,
            new_to_old,
        })
    }

    /// `G - S`.
    pub fn remove_vertices(&self, s: &[Vertex]) -> Result<Induced> {
        let mut drop = vec![false; self.n()];
        for &v in s {
            if v >= self.n() {
                return Err(Error::Range {
                    vertex: v,
                    n: self.n(),
                });
            }
            drop[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !drop[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.connected_components().len() == 1
    }

    /// Places `other` after `self`, shifting its ids by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect()),
        );
        Graph { adj }
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("c ") || line == "c" {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "p" => {
                    if header.is_some() {
                        return Err(Error::parse(line_no, "duplicate header"));
                    }
                    // accept both "p n m" and DIMACS-style "p edge n m"
                    let nums = match tokens.len() {
                        3 => &tokens[1..3],
                        4 => &tokens[2..4],
                        _ => return Err(Error::parse(line_no, "expected 'p <n> <m>'")),
                    };
                    let n = parse_count(nums[0], line_no)?;
                    let m = parse_count(nums[1], line_no)?;
                    header = Some((n, m));
                }
                "e" => {
                    let (n, _) =
                        header.ok_or_else(|| Error::parse(line_no, "edge before header"))?;
                    if tokens.len() != 3 {
                        return Err(Error::parse(line_no, "expected 'e <u> <v>'"));
                    }
                    let u = parse_count(tokens[1], line_no)?;
                    let v = parse_count(tokens[2], line_no)?;
                    for x in [u, v] {
                        if x == 0 || x > n {
                            return Err(Error::Range { vertex: x, n });
                        }
                    }
                    if u == v {
                        return Err(Error::SelfLoop(u - 1));
                    }
                    edges.push((u - 1, v - 1));
                }
                other => {
                    return Err(Error::parse(line_no, format!("unknown line type '{other}'")));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::parse(0, "missing 'p' header"))?;
        if edges.len() != m {
            return Err(Error::parse(
                text.lines().count(),
                format!("header announces {m} edges, found {}", edges.len()),
            ));
        }
        Graph::from_edges(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

fn parse_count(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, got '{tok}'")))
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Serializable snapshot used in bench records and the demo.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListRecord {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl From<&Graph> for EdgeListRecord {
    fn from(g: &Graph) -> Self {
        EdgeListRecord {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn parses_triangle() {
        let g: Graph = "p 3 3\ne 1 2\ne 2 3\ne 1 3\n".parse().unwrap();
        assert_eq!(g, k3());
        g.validate().unwrap();
    }

    #[test]
    fn parses_isolated_vertices() {
        let g: Graph = "p 2 0".parse().unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            "p 2 1\ne 1 1".parse::<Graph>(),
            Err(Error::SelfLoop(0))
        );
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        assert!(matches!(
            "p 2 1\ne 1 3".parse::<Graph>(),
            Err(Error::Range { vertex: 3, n: 2 })
        ));
        assert!(matches!(
            "p 2 1\ne 1 x".parse::<Graph>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            "p 3\n".parse::<Graph>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "e 1 2\n".parse::<Graph>(),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn comments_and_duplicates() {
        let g: Graph = "# triangle\np 3 4\ne 1 2\ne 2 1\ne 2 3\ne 3 1\n".parse().unwrap();
        assert_eq!(g, k3());
    }

    #[test]
    fn serializes_empty_and_star() {
        assert_eq!(Graph::empty(0).to_edge_list(), "p 0 0\n");
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let text = star.to_edge_list();
        assert!(text.starts_with("p 4 3\n"));
        assert_eq!(text.parse::<Graph>().unwrap(), star);
        assert_eq!(k3().to_string().parse::<Graph>().unwrap(), k3());
    }

    #[test]
    fn induced_subgraphs() {
        let sub = k3().induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(sub.graph, Graph::from_edges(2, [(0, 1)]).unwrap());

        let empty = k3().induced_subgraph(&[]).unwrap();
        assert_eq!(empty.graph.n(), 0);

        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = p4.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub.graph.n(), 2);
        assert_eq!(sub.graph.m(), 0);
        assert_eq!(sub.new_to_old, vec![0, 2]);
        assert_eq!(sub.old_to_new, vec![Some(0), None, Some(1), None]);

        assert!(matches!(
            p4.induced_subgraph(&[7]),
            Err(Error::Range { vertex: 7, n: 4 })
        ));
    }

    #[test]
    fn components() {
        assert_eq!(k3().connected_components(), vec![vec![0, 1, 2]]);
        assert_eq!(
            Graph::empty(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.connected_components(), vec![vec![0, 1], vec![2, 3]]);
    }
}
