//! Dynamic programs over root-augmented branch decompositions.
//!
//! Tables are indexed by the tree node below each tree edge. For Vertex Cover
//! the table of edge `e` maps each `X ⊆ mid(e)` to the smallest cover of the
//! graph below `e` that contains `X` and avoids `mid(e) \ X`. For 3-Coloring
//! it holds every restriction to `mid(e)` of a proper coloring below `e`.

use std::collections::BTreeMap;

use super::{validate_decomposition, BranchDecomposition, Rooted};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest middle set the programs accept.
pub const MAX_DP_WIDTH: usize = 16;

/// Largest union of two child middle sets a join enumerates.
pub const MAX_JOIN_UNION: usize = 24;

const INF: u32 = u32::MAX / 4;

struct Prepared {
    rooted: Rooted,
    mids: Vec<Vec<Vertex>>,
    /// The node directly below the root leaf.
    top: usize,
}

fn prepare(g: &Graph, bd: &BranchDecomposition) -> Result<Prepared> {
    validate_decomposition(g, bd).map_err(|v| Error::Contract(format!("invalid decomposition: {v}")))?;
    let root = bd
        .root()
        .ok_or_else(|| Error::Contract("decomposition is not root-augmented".into()))?;
    let rooted = bd.rooted();
    let mids = bd.mids_by_child(&rooted);
    let width = mids.iter().map(Vec::len).max().unwrap_or(0);
    if width > MAX_DP_WIDTH {
        return Err(Error::SizeCap {
            what: "decomposition width",
            size: width,
            cap: MAX_DP_WIDTH,
        });
    }
    let top = rooted.children[root][0];
    Ok(Prepared { rooted, mids, top })
}

/// Children ordered by subtree size, then id.
fn ordered_children(rooted: &Rooted, sizes: &[usize], a: usize) -> (usize, usize) {
    let mut ch = rooted.children[a].clone();
    ch.sort_by_key(|&c| (sizes[c], c));
    (ch[0], ch[1])
}

fn subtree_sizes(rooted: &Rooted) -> Vec<usize> {
    let mut sizes = vec![1; rooted.parent.len()];
    for &a in &rooted.postorder {
        if let Some(p) = rooted.parent[a] {
            sizes[p] += sizes[a];
        }
    }
    sizes
}

/// Position map from `sub` into `sup` (both sorted). `sub ⊆ sup` required.
fn positions(sub: &[Vertex], sup: &[Vertex]) -> Vec<usize> {
    sub.iter()
        .map(|v| sup.binary_search(v).expect("subset of the union"))
        .collect()
}

fn union(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut u: Vec<Vertex> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

/// Restricts a bitmask over `from` to the members listed in `pos`, which
/// gives for each member its index in `from`.
fn project(mask: u64, pos: &[usize]) -> usize {
    pos.iter()
        .enumerate()
        .filter(|(_, &p)| mask >> p & 1 == 1)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

struct VcTable {
    cost: Vec<u32>,
    /// For join nodes: the chosen subset of the children's union per entry.
    choice: Vec<u64>,
}

/// Cost of the leaf carrying `(u, v)` for each `X ⊆ mid`. A nonempty `X`
/// already covers the edge; `X = ∅` must use an endpoint outside `mid`.
fn vc_leaf(edge: (Vertex, Vertex), mid: &[Vertex]) -> VcTable {
    let outside = [edge.0, edge.1].iter().any(|x| !mid.contains(x));
    let cost = (0..1u64 << mid.len())
        .map(|x| match x.count_ones() {
            0 if outside => 1,
            0 => INF,
            c => c,
        })
        .collect();
    VcTable {
        cost,
        choice: Vec::new(),
    }
}

/// Combines the two child tables: for every assignment `Y` of the union of
/// the child middle sets, cost is `R1[Y ∩ M1] + R2[Y ∩ M2] - |Y ∩ M1 ∩ M2|`,
/// minimized per `Y ∩ mid`.
fn vc_join(m1: &[Vertex], t1: &VcTable, m2: &[Vertex], t2: &VcTable, mid: &[Vertex]) -> Result<VcTable> {
    let u = union(m1, m2);
    if u.len() > MAX_JOIN_UNION {
        return Err(Error::SizeCap {
            what: "join union",
            size: u.len(),
            cap: MAX_JOIN_UNION,
        });
    }
    let p1 = positions(m1, &u);
    let p2 = positions(m2, &u);
    let pm = positions(mid, &u);
    let shared: u64 = p1
        .iter()
        .filter(|p| p2.contains(p))
        .fold(0, |acc, &p| acc | 1 << p);
    let mut cost = vec![INF; 1 << mid.len()];
    let mut choice = vec![0u64; 1 << mid.len()];
    for y in 0..1u64 << u.len() {
        let c = t1.cost[project(y, &p1)] + t2.cost[project(y, &p2)];
        if c >= INF {
            continue;
        }
        let c = c - (y & shared).count_ones();
        let x = project(y, &pm);
        if c < cost[x] {
            cost[x] = c;
            choice[x] = y;
        }
    }
    Ok(VcTable { cost, choice })
}

fn vc_tables(g: &Graph, bd: &BranchDecomposition, p: &Prepared) -> Result<Vec<Option<VcTable>>> {
    let sizes = subtree_sizes(&p.rooted);
    let mut tables: Vec<Option<VcTable>> = (0..bd.num_nodes()).map(|_| None).collect();
    for &a in &p.rooted.postorder {
        if p.rooted.parent[a].is_none() {
            continue;
        }
        let t = match bd.leaf_edge(a) {
            Some(e) => vc_leaf(e, &p.mids[a]),
            None => {
                let (c1, c2) = ordered_children(&p.rooted, &sizes, a);
                vc_join(
                    &p.mids[c1],
                    tables[c1].as_ref().unwrap(),
                    &p.mids[c2],
                    tables[c2].as_ref().unwrap(),
                    &p.mids[a],
                )?
            }
        };
        tables[a] = Some(t);
    }
    debug_assert!(g.m() == 0 || tables[p.top].is_some());
    Ok(tables)
}

/// Minimum vertex cover of `g` computed over an augmented decomposition.
pub fn bw_vc_opt(g: &Graph, bd: &BranchDecomposition) -> Result<Vec<Vertex>> {
    if g.m() == 0 {
        return Ok(Vec::new());
    }
    let p = prepare(g, bd)?;
    let tables = vc_tables(g, bd, &p)?;
    let sizes = subtree_sizes(&p.rooted);
    let mut cover = Vec::new();
    let mut stack = vec![(p.top, 0usize)];
    while let Some((a, x)) = stack.pop() {
        let mid = &p.mids[a];
        match bd.leaf_edge(a) {
            Some((u, v)) => {
                if x == 0 {
                    cover.push(if mid.contains(&u) { v } else { u });
                } else {
                    cover.extend((0..mid.len()).filter(|i| x >> i & 1 == 1).map(|i| mid[i]));
                }
            }
            None => {
                let (c1, c2) = ordered_children(&p.rooted, &sizes, a);
                let y = tables[a].as_ref().unwrap().choice[x];
                let un = union(&p.mids[c1], &p.mids[c2]);
                cover.extend((0..un.len()).filter(|i| y >> i & 1 == 1).map(|i| un[i]));
                stack.push((c1, project(y, &positions(&p.mids[c1], &un))));
                stack.push((c2, project(y, &positions(&p.mids[c2], &un))));
            }
        }
    }
    cover.sort_unstable();
    cover.dedup();
    debug_assert_eq!(cover.len() as u32, tables[p.top].as_ref().unwrap().cost[0]);
    Ok(cover)
}

/// Decides `vc(g) ≤ l`. A YES answer carries a minimum cover.
pub fn bw_vertex_cover(g: &Graph, bd: &BranchDecomposition, l: usize) -> Result<Option<Vec<Vertex>>> {
    let cover = bw_vc_opt(g, bd)?;
    Ok((cover.len() <= l).then_some(cover))
}

/// Colorings of a middle set packed two bits per position.
type Packed = u64;

fn color_at(c: Packed, i: usize) -> u8 {
    (c >> (2 * i) & 3) as u8
}

fn repack(c: Packed, pos: &[usize]) -> Packed {
    pos.iter()
        .enumerate()
        .fold(0, |acc, (i, &p)| acc | (color_at(c, p) as u64) << (2 * i))
}

fn all_colorings(len: usize) -> impl Iterator<Item = Packed> {
    (0..3u64.pow(len as u32)).map(move |mut idx| {
        let mut c = 0;
        for i in 0..len {
            c |= (idx % 3) << (2 * i);
            idx /= 3;
        }
        c
    })
}

/// Per entry: the child colorings it came from (unused at leaves).
type ColTable = BTreeMap<Packed, (Packed, Packed)>;

/// `mid` is a subset of the edge's endpoints; when both are present they
/// must differ.
fn col_leaf(edge: (Vertex, Vertex), mid: &[Vertex]) -> ColTable {
    debug_assert!(mid.iter().all(|&x| x == edge.0 || x == edge.1));
    let both = mid.len() == 2;
    all_colorings(mid.len())
        .filter(|&c| !both || color_at(c, 0) != color_at(c, 1))
        .map(|c| (c, (0, 0)))
        .collect()
}

fn col_join(m1: &[Vertex], t1: &ColTable, m2: &[Vertex], t2: &ColTable, mid: &[Vertex]) -> ColTable {
    let u = union(m1, m2);
    let shared: Vec<Vertex> = m1.iter().filter(|v| m2.contains(v)).copied().collect();
    let s1 = positions(&shared, m1);
    let s2 = positions(&shared, m2);
    let p1 = positions(m1, &u);
    let p2 = positions(m2, &u);
    let mpos = positions(mid, &u);
    let mut by_key: BTreeMap<Packed, Vec<Packed>> = BTreeMap::new();
    for &c2 in t2.keys() {
        by_key.entry(repack(c2, &s2)).or_default().push(c2);
    }
    let mut out = ColTable::new();
    for &c1 in t1.keys() {
        let Some(matches) = by_key.get(&repack(c1, &s1)) else {
            continue;
        };
        for &c2 in matches {
            let mut full: Packed = 0;
            for (i, &p) in p1.iter().enumerate() {
                full |= (color_at(c1, i) as u64) << (2 * p);
            }
            for (i, &p) in p2.iter().enumerate() {
                full |= (color_at(c2, i) as u64) << (2 * p);
            }
            out.entry(repack(full, &mpos)).or_insert((c1, c2));
        }
    }
    out
}

/// Proper 3-coloring (colors 0, 1, 2) of `g`, if one exists.
pub fn bw_three_coloring(g: &Graph, bd: &BranchDecomposition) -> Result<Option<Vec<u8>>> {
    if g.m() == 0 {
        return Ok(Some(vec![0; g.n()]));
    }
    let p = prepare(g, bd)?;
    let sizes = subtree_sizes(&p.rooted);
    let mut tables: Vec<ColTable> = vec![ColTable::new(); bd.num_nodes()];
    for &a in &p.rooted.postorder {
        if p.rooted.parent[a].is_none() {
            continue;
        }
        tables[a] = match bd.leaf_edge(a) {
            Some(e) => col_leaf(e, &p.mids[a]),
            None => {
                let (c1, c2) = ordered_children(&p.rooted, &sizes, a);
                col_join(&p.mids[c1], &tables[c1], &p.mids[c2], &tables[c2], &p.mids[a])
            }
        };
    }
    if tables[p.top].is_empty() {
        return Ok(None);
    }
    let mut color: Vec<Option<u8>> = vec![None; g.n()];
    let mut stack = vec![(p.top, 0 as Packed)];
    let mut leaves = Vec::new();
    while let Some((a, c)) = stack.pop() {
        for (i, &v) in p.mids[a].iter().enumerate() {
            color[v] = Some(color_at(c, i));
        }
        match bd.leaf_edge(a) {
            Some(e) => leaves.push(e),
            None => {
                let (c1, c2) = ordered_children(&p.rooted, &sizes, a);
                let (x1, x2) = tables[a][&c];
                stack.push((c1, x1));
                stack.push((c2, x2));
            }
        }
    }
    // endpoints outside every middle set have degree 1
    for (u, v) in leaves {
        match (color[u], color[v]) {
            (Some(cu), None) => color[v] = Some((cu + 1) % 3),
            (None, Some(cv)) => color[u] = Some((cv + 1) % 3),
            (None, None) => {
                color[u] = Some(0);
                color[v] = Some(1);
            }
            (Some(_), Some(_)) => {}
        }
    }
    Ok(Some(color.into_iter().map(|c| c.unwrap_or(0)).collect()))
}
