//! Branch decompositions: representation, the `bd` text format, validation,
//! construction helpers, and the dynamic programs in [`dp`].
//!
//! A decomposition is a tree whose nodes have degree 1 or 3. Each leaf except
//! the optional root leaf carries one graph edge. Removing a tree edge splits
//! the graph edges in two; the middle set of the tree edge holds the vertices
//! touched by both halves.
//!
//! Text format (tree nodes and graph vertices 1-based, `#` comments):
//!
//! ```text
//! bd <node-count>
//! te <a> <b>          tree edge
//! leaf <a> <u> <v>    leaf a carries graph edge {u, v}
//! root <a>            optional root leaf
//! ```

pub mod dp;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use dp::{bw_three_coloring, bw_vc_opt, bw_vertex_cover};

/// Largest edge count accepted by [`exact_decomposition_small`].
pub const EXACT_MAX_EDGES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    num_nodes: usize,
    tree_edges: Vec<(usize, usize)>,
    /// `leaf_edge[a]` is the graph edge carried by node `a`, stored as `u < v`.
    leaf_edge: Vec<Option<(Vertex, Vertex)>>,
    root: Option<usize>,
}

/// First structural problem found by [`validate_decomposition`].
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Violation {
    #[error("the tree has no nodes")]
    Empty,
    #[error("tree edge {0}-{1} is a self-loop")]
    SelfLoopTreeEdge(usize, usize),
    #[error("the tree edges do not form a tree")]
    NotATree,
    #[error("node {node} has degree {degree}, expected 1 or 3")]
    Degree { node: usize, degree: usize },
    #[error("node {node} is not a leaf but carries an edge")]
    EdgeOnInternalNode { node: usize },
    #[error("leaf {node} carries no edge and is not the root")]
    UnmappedLeaf { node: usize },
    #[error("leaf {node} carries {u}-{v}, which is not an edge of the graph")]
    NotAGraphEdge { node: usize, u: Vertex, v: Vertex },
    #[error("graph edge {u}-{v} is carried by more than one leaf")]
    DuplicateEdge { u: Vertex, v: Vertex },
    #[error("graph edge {u}-{v} is carried by no leaf")]
    MissingEdge { u: Vertex, v: Vertex },
    #[error("root {node} must be a leaf without an edge")]
    BadRoot { node: usize },
    #[error("middle set of tree edge {a}-{b} disagrees between the two computations")]
    MidMismatch { a: usize, b: usize },
}

/// Tree rooted at the root leaf, or at node 0 for unaugmented trees.
pub(crate) struct Rooted {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// Children before parents.
    pub postorder: Vec<usize>,
}

impl BranchDecomposition {
    /// Range-checks node ids only; structure is checked by
    /// [`validate_decomposition`].
    pub fn new(
        num_nodes: usize,
        tree_edges: Vec<(usize, usize)>,
        leaves: impl IntoIterator<Item = (usize, (Vertex, Vertex))>,
        root: Option<usize>,
    ) -> Result<Self> {
        let range = |a: usize| {
            if a < num_nodes {
                Ok(a)
            } else {
                Err(Error::Range {
                    vertex: a,
                    n: num_nodes,
                })
            }
        };
        for &(a, b) in &tree_edges {
            range(a)?;
            range(b)?;
        }
        if let Some(r) = root {
            range(r)?;
        }
        let mut leaf_edge = vec![None; num_nodes];
        for (a, (u, v)) in leaves {
            range(a)?;
            if leaf_edge[a].is_some() {
                return Err(Error::Domain(format!("node {a} carries two edges")));
            }
            leaf_edge[a] = Some((u.min(v), u.max(v)));
        }
        Ok(BranchDecomposition {
            num_nodes,
            tree_edges,
            leaf_edge,
            root,
        })
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn leaf_edge(&self, node: usize) -> Option<(Vertex, Vertex)> {
        self.leaf_edge[node]
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn is_augmented(&self) -> bool {
        self.root.is_some()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_nodes];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Assumes a tree.
    pub(crate) fn rooted(&self) -> Rooted {
        let adj = self.adjacency();
        let start = self.root.unwrap_or(0);
        let mut parent = vec![None; self.num_nodes];
        let mut children = vec![Vec::new(); self.num_nodes];
        let mut order = vec![start];
        let mut seen = vec![false; self.num_nodes];
        seen[start] = true;
        let mut i = 0;
        while i < order.len() {
            let a = order[i];
            i += 1;
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    parent[b] = Some(a);
                    children[a].push(b);
                    order.push(b);
                }
            }
        }
        order.reverse();
        Rooted {
            parent,
            children,
            postorder: order,
        }
    }

    /// `mid` of the tree edge above each non-root node, indexed by that
    /// node. A vertex is in the middle set when some but not all of its
    /// incident edges lie below.
    pub(crate) fn mids_by_child(&self, rooted: &Rooted) -> Vec<Vec<Vertex>> {
        let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
        for &(u, v) in self.leaf_edge.iter().flatten() {
            *degree.entry(u).or_default() += 1;
            *degree.entry(v).or_default() += 1;
        }
        let mut below: Vec<BTreeMap<Vertex, usize>> = vec![BTreeMap::new(); self.num_nodes];
        let mut mids = vec![Vec::new(); self.num_nodes];
        for &a in &rooted.postorder {
            let mut counts = BTreeMap::new();
            if let Some((u, v)) = self.leaf_edge[a] {
                counts.insert(u, 1);
                counts.insert(v, 1);
            }
            for &c in &rooted.children[a] {
                for (&x, &cnt) in &std::mem::take(&mut below[c]) {
                    *counts.entry(x).or_default() += cnt;
                }
            }
            mids[a] = counts
                .iter()
                .filter(|&(x, &cnt)| cnt < degree[x])
                .map(|(&x, _)| x)
                .collect();
            below[a] = counts;
        }
        mids
    }

    /// Middle sets keyed by tree edge, in the order of [`Self::tree_edges`].
    /// Assumes a tree.
    pub fn mid_sets(&self) -> Vec<((usize, usize), Vec<Vertex>)> {
        if self.num_nodes == 0 {
            return Vec::new();
        }
        let rooted = self.rooted();
        let mids = self.mids_by_child(&rooted);
        self.tree_edges
            .iter()
            .map(|&(a, b)| {
                let child = if rooted.parent[a] == Some(b) { a } else { b };
                ((a, b), mids[child].clone())
            })
            .collect()
    }

    /// Largest middle set; 0 for a tree without edges. Assumes a tree.
    pub fn width(&self) -> usize {
        self.mid_sets()
            .iter()
            .map(|(_, m)| m.len())
            .max()
            .unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut tree_edges = Vec::new();
        let mut leaves = Vec::new();
        let mut root = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let nums = tokens[1..]
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(line_no, format!("expected an integer, got '{t}'")))
                })
                .collect::<Result<Vec<usize>>>()?;
            let arity = |k: usize, shape: &str| {
                if nums.len() == k {
                    Ok(())
                } else {
                    Err(Error::parse(line_no, format!("expected '{shape}'")))
                }
            };
            if tokens[0] != "bd" && n.is_none() {
                return Err(Error::parse(line_no, "line before 'bd' header"));
            }
            let node = |a: usize| {
                let total = n.unwrap_or(0);
                if a == 0 || a > total {
                    Err(Error::Range { vertex: a, n: total })
                } else {
                    Ok(a - 1)
                }
            };
            match tokens[0] {
                "bd" => {
                    arity(1, "bd <nodes>")?;
                    if n.is_some() {
                        return Err(Error::parse(line_no, "duplicate header"));
                    }
                    n = Some(nums[0]);
                }
                "te" => {
                    arity(2, "te <a> <b>")?;
                    tree_edges.push((node(nums[0])?, node(nums[1])?));
                }
                "leaf" => {
                    arity(3, "leaf <a> <u> <v>")?;
                    if nums[1] == 0 || nums[2] == 0 {
                        return Err(Error::parse(line_no, "graph vertices are 1-based"));
                    }
                    leaves.push((node(nums[0])?, (nums[1] - 1, nums[2] - 1)));
                }
                "root" => {
                    arity(1, "root <a>")?;
                    if root.is_some() {
                        return Err(Error::parse(line_no, "duplicate root"));
                    }
                    root = Some(node(nums[0])?);
                }
                other => return Err(Error::parse(line_no, format!("unknown line type '{other}'"))),
            }
        }
        let n = n.ok_or_else(|| Error::parse(0, "missing 'bd' header"))?;
        BranchDecomposition::new(n, tree_edges, leaves, root)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("bd {}\n", self.num_nodes);
        for &(a, b) in &self.tree_edges {
            out.push_str(&format!("te {} {}\n", a + 1, b + 1));
        }
        for (a, e) in self.leaf_edge.iter().enumerate() {
            if let Some((u, v)) = e {
                out.push_str(&format!("leaf {} {} {}\n", a + 1, u + 1, v + 1));
            }
        }
        if let Some(r) = self.root {
            out.push_str(&format!("root {}\n", r + 1));
        }
        out
    }
}

impl FromStr for BranchDecomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BranchDecomposition::parse(s)
    }
}

impl fmt::Display for BranchDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Middle sets computed directly from the definition: split the tree at each
/// edge and intersect the vertex sets of the two sides.
fn mid_by_definition(bd: &BranchDecomposition, adj: &[Vec<usize>], a: usize, b: usize) -> Vec<Vertex> {
    let mut side = vec![false; bd.num_nodes];
    side[a] = true;
    let mut stack = vec![a];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !side[y] && !(x == a && y == b) {
                side[y] = true;
                stack.push(y);
            }
        }
    }
    let mut one = BTreeSet::new();
    let mut two = BTreeSet::new();
    for (node, e) in bd.leaf_edge.iter().enumerate() {
        if let Some((u, v)) = *e {
            let s = if side[node] { &mut one } else { &mut two };
            s.insert(u);
            s.insert(v);
        }
    }
    one.intersection(&two).copied().collect()
}

pub fn validate_decomposition(g: &Graph, bd: &BranchDecomposition) -> std::result::Result<(), Violation> {
    let n = bd.num_nodes;
    if n == 0 {
        return Err(Violation::Empty);
    }
    if let Some(&(a, b)) = bd.tree_edges.iter().find(|(a, b)| a == b) {
        return Err(Violation::SelfLoopTreeEdge(a, b));
    }
    let adj = bd.adjacency();
    if bd.tree_edges.len() != n - 1 {
        return Err(Violation::NotATree);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    if seen.contains(&false) {
        return Err(Violation::NotATree);
    }
    for (node, list) in adj.iter().enumerate() {
        let degree = list.len();
        if !(degree == 1 || degree == 3 || n == 1) {
            return Err(Violation::Degree { node, degree });
        }
    }
    let mut used = HashSet::new();
    for node in 0..n {
        let is_leaf = adj[node].len() <= 1;
        match bd.leaf_edge[node] {
            Some((u, v)) => {
                if !is_leaf {
                    return Err(Violation::EdgeOnInternalNode { node });
                }
                if bd.root == Some(node) {
                    return Err(Violation::BadRoot { node });
                }
                if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                    return Err(Violation::NotAGraphEdge { node, u, v });
                }
                if !used.insert((u, v)) {
                    return Err(Violation::DuplicateEdge { u, v });
                }
            }
            None if is_leaf && bd.root != Some(node) => {
                return Err(Violation::UnmappedLeaf { node })
            }
            None => {}
        }
    }
    if let Some(r) = bd.root {
        if adj[r].len() != 1 {
            return Err(Violation::BadRoot { node: r });
        }
    }
    if let Some((u, v)) = g.edges().find(|e| !used.contains(e)) {
        return Err(Violation::MissingEdge { u, v });
    }
    for ((a, b), mid) in bd.mid_sets() {
        if mid_by_definition(bd, &adj, a, b) != mid {
            return Err(Violation::MidMismatch { a, b });
        }
    }
    Ok(())
}

/// Subdivides the smallest tree edge and hangs a fresh root leaf from the
/// subdivision node. A single-node tree gets the root leaf attached directly.
/// The middle set of the root edge is empty.
pub fn root_augment(bd: &BranchDecomposition) -> Result<BranchDecomposition> {
    if bd.num_nodes == 0 {
        return Err(Error::Domain("cannot augment an empty tree".into()));
    }
    if bd.root.is_some() {
        return Err(Error::Domain("decomposition is already augmented".into()));
    }
    let mut out = bd.clone();
    if bd.tree_edges.is_empty() {
        out.num_nodes += 1;
        out.tree_edges.push((0, bd.num_nodes));
        out.leaf_edge.push(None);
        out.root = Some(bd.num_nodes);
        return Ok(out);
    }
    let (i, &(a, b)) = bd
        .tree_edges
        .iter()
        .enumerate()
        .min_by_key(|(_, &(a, b))| (a.min(b), a.max(b)))
        .unwrap();
    let s = bd.num_nodes;
    let r = s + 1;
    out.num_nodes += 2;
    out.leaf_edge.extend([None, None]);
    out.tree_edges[i] = (a, s);
    out.tree_edges.push((s, b));
    out.tree_edges.push((s, r));
    out.root = Some(r);
    Ok(out)
}

/// Edges in DFS discovery order: vertices in preorder (smallest unvisited
/// root, neighbors ascending), edges sorted by the positions of their
/// endpoints.
fn dfs_edge_order(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut pos = vec![usize::MAX; g.n()];
    let mut next = 0;
    for s in g.vertices() {
        if pos[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            if pos[v] != usize::MAX {
                continue;
            }
            pos[v] = next;
            next += 1;
            for &w in g.neighbors(v).iter().rev() {
                if pos[w] == usize::MAX {
                    stack.push(w);
                }
            }
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    edges.sort_by_key(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])));
    edges
}

/// Caterpillar over `edges`: leaves `0..m` in order, spine nodes after them.
fn caterpillar(edges: &[(Vertex, Vertex)]) -> BranchDecomposition {
    let m = edges.len();
    let leaves = edges.iter().copied().enumerate();
    let tree_edges = match m {
        0 | 1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => {
            // spine node m + i holds leaf i + 1; the ends also take leaves 0 and m - 1
            let spine = |i: usize| m + i;
            let mut t = vec![(0, spine(0))];
            for i in 0..m - 2 {
                t.push((i + 1, spine(i)));
                if i > 0 {
                    t.push((spine(i - 1), spine(i)));
                }
            }
            t.push((m - 1, spine(m - 3)));
            t
        }
    };
    let nodes = if m >= 3 { 2 * m - 2 } else { m };
    BranchDecomposition::new(nodes, tree_edges, leaves, None).expect("ids in range")
}

/// A valid, unaugmented decomposition with no optimality promise.
pub fn heuristic_decomposition(g: &Graph) -> Result<BranchDecomposition> {
    if g.m() == 0 {
        return Err(Error::Domain("graph has no edges".into()));
    }
    Ok(caterpillar(&dfs_edge_order(g)))
}

/// Minimum-width decomposition by enumerating every ternary tree on the
/// edges. There are `(2m - 5)!!` such trees for `m ≥ 3` edges.
pub fn exact_decomposition_small(g: &Graph) -> Result<BranchDecomposition> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let m = edges.len();
    if m == 0 {
        return Err(Error::Domain("graph has no edges".into()));
    }
    if m > EXACT_MAX_EDGES {
        return Err(Error::SizeCap {
            what: "exact decomposition edges",
            size: m,
            cap: EXACT_MAX_EDGES,
        });
    }
    if m <= 2 {
        return Ok(caterpillar(&edges));
    }
    // Leaves are nodes 0..m; internal nodes are numbered from m upward.
    fn grow(
        edges: &[(Vertex, Vertex)],
        tree: &mut Vec<(usize, usize)>,
        next_leaf: usize,
        best: &mut Option<(usize, BranchDecomposition)>,
    ) {
        let m = edges.len();
        if next_leaf == m {
            let bd = BranchDecomposition::new(
                2 * m - 2,
                tree.clone(),
                edges.iter().copied().enumerate(),
                None,
            )
            .expect("ids in range");
            let w = bd.width();
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                *best = Some((w, bd));
            }
            return;
        }
        let inner = m + next_leaf - 2;
        for i in 0..tree.len() {
            let (a, b) = tree[i];
            tree[i] = (a, inner);
            tree.push((inner, b));
            tree.push((inner, next_leaf));
            grow(edges, tree, next_leaf + 1, best);
            tree.truncate(tree.len() - 2);
            tree[i] = (a, b);
        }
    }
    let mut tree = vec![(0, m), (1, m), (2, m)];
    let mut best = None;
    grow(&edges, &mut tree, 3, &mut best);
    Ok(best.expect("at least one tree").1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, random_graph, GraphKind};
    use crate::rng::Seed;

    fn g(kind: GraphKind) -> Graph {
        generate(&kind).unwrap()
    }

    fn k3_star() -> BranchDecomposition {
        BranchDecomposition::new(
            4,
            vec![(0, 3), (1, 3), (2, 3)],
            [(0, (0, 1)), (1, (1, 2)), (2, (0, 2))],
            None,
        )
        .unwrap()
    }

    #[test]
    fn k3_star_is_valid_with_width_two() {
        let k3 = g(GraphKind::Complete(3));
        let bd = k3_star();
        assert_eq!(validate_decomposition(&k3, &bd), Ok(()));
        assert_eq!(bd.width(), 2);
        let aug = root_augment(&bd).unwrap();
        assert_eq!(aug.num_nodes(), 6);
        assert_eq!(validate_decomposition(&k3, &aug), Ok(()));
        assert_eq!(aug.width(), 2);
        let r = aug.root().unwrap();
        let root_mid = aug
            .mid_sets()
            .into_iter()
            .find(|((a, b), _)| *a == r || *b == r)
            .unwrap()
            .1;
        assert!(root_mid.is_empty());
    }

    #[test]
    fn violations() {
        let k3 = g(GraphKind::Complete(3));
        let missing = BranchDecomposition::new(
            4,
            vec![(0, 3), (1, 3), (2, 3)],
            [(0, (0, 1)), (1, (1, 2))],
            Some(2),
        )
        .unwrap();
        assert_eq!(
            validate_decomposition(&k3, &missing),
            Err(Violation::MissingEdge { u: 0, v: 2 })
        );
        // path 0 - 3 - 1 - 2: node 3 has degree 2
        let deg2 = BranchDecomposition::new(
            4,
            vec![(0, 3), (3, 1), (1, 2)],
            [(0, (0, 1)), (2, (0, 2))],
            None,
        )
        .unwrap();
        assert!(matches!(
            validate_decomposition(&k3, &deg2),
            Err(Violation::Degree { .. })
        ));
        let not_tree =
            BranchDecomposition::new(3, vec![(0, 1)], [(0, (0, 1))], None).unwrap();
        assert_eq!(validate_decomposition(&k3, &not_tree), Err(Violation::NotATree));
        let wrong = BranchDecomposition::new(1, vec![], [(0, (0, 5))], None).unwrap();
        assert!(matches!(
            validate_decomposition(&k3, &wrong),
            Err(Violation::NotAGraphEdge { .. })
        ));
    }

    #[test]
    fn k2_and_p3_widths() {
        let k2 = g(GraphKind::Path(2));
        let bd = heuristic_decomposition(&k2).unwrap();
        assert_eq!(bd.num_nodes(), 1);
        assert_eq!(bd.width(), 0);
        let aug = root_augment(&bd).unwrap();
        assert_eq!(aug.num_nodes(), 2);
        assert_eq!(validate_decomposition(&k2, &aug), Ok(()));
        assert_eq!(aug.width(), 0);

        let p3 = g(GraphKind::Path(3));
        let bd = heuristic_decomposition(&p3).unwrap();
        assert_eq!(validate_decomposition(&p3, &bd), Ok(()));
        assert_eq!(bd.width(), 1);
        assert_eq!(exact_decomposition_small(&p3).unwrap().width(), 1);
    }

    #[test]
    fn augment_errors() {
        let aug = root_augment(&k3_star()).unwrap();
        assert!(matches!(root_augment(&aug), Err(Error::Domain(_))));
        let empty = BranchDecomposition::new(0, vec![], [], None).unwrap();
        assert!(matches!(root_augment(&empty), Err(Error::Domain(_))));
    }

    #[test]
    fn small_exact_widths() {
        assert_eq!(exact_decomposition_small(&g(GraphKind::Complete(3))).unwrap().width(), 2);
        assert_eq!(exact_decomposition_small(&g(GraphKind::Path(4))).unwrap().width(), 2);
        assert_eq!(exact_decomposition_small(&g(GraphKind::Cycle(4))).unwrap().width(), 2);
        assert_eq!(exact_decomposition_small(&g(GraphKind::Complete(4))).unwrap().width(), 3);
        assert!(exact_decomposition_small(&g(GraphKind::Complete(5))).is_err());
        assert!(heuristic_decomposition(&Graph::empty(3)).is_err());
    }

    #[test]
    fn heuristic_examples() {
        let p4 = g(GraphKind::Path(4));
        let bd = heuristic_decomposition(&p4).unwrap();
        assert_eq!(validate_decomposition(&p4, &bd), Ok(()));
        assert!(bd.width() <= 2);
        let k4 = g(GraphKind::Complete(4));
        assert_eq!(validate_decomposition(&k4, &heuristic_decomposition(&k4).unwrap()), Ok(()));
        assert_eq!(heuristic_decomposition(&g(GraphKind::Complete(3))).unwrap().width(), 2);
    }

    #[test]
    fn exact_never_beats_heuristic_and_both_validate() {
        for seed in 0..40 {
            let n = 3 + seed as usize % 5;
            let m = 1 + seed as usize % 8;
            let m = m.min(n * (n - 1) / 2);
            let gr = random_graph(n, m, Seed(seed)).unwrap();
            let h = heuristic_decomposition(&gr).unwrap();
            let e = exact_decomposition_small(&gr).unwrap();
            assert_eq!(validate_decomposition(&gr, &h), Ok(()));
            assert_eq!(validate_decomposition(&gr, &e), Ok(()));
            assert!(e.width() <= h.width());
            let ha = root_augment(&h).unwrap();
            assert_eq!(validate_decomposition(&gr, &ha), Ok(()));
            assert_eq!(ha.width(), h.width());
        }
    }

    #[test]
    fn text_round_trip() {
        let aug = root_augment(&k3_star()).unwrap();
        let text = aug.to_text();
        assert!(text.starts_with("bd 6\n"));
        assert_eq!(BranchDecomposition::parse(&text).unwrap(), aug);
        let with_comment = format!("# K3\n{text}");
        assert_eq!(with_comment.parse::<BranchDecomposition>().unwrap(), aug);
        assert!(BranchDecomposition::parse("te 1 2\n").is_err());
        assert!(BranchDecomposition::parse("bd 2\nte 1 3\n").is_err());
        assert!(BranchDecomposition::parse("bd 2\nleaf 1 0 1\n").is_err());
    }
}
