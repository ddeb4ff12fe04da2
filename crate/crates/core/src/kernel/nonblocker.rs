//! Non-Blocker kernel: after dropping isolated vertices, the larger BFS
//! parity class is a non-blocker of size at least `n/2`.

use std::collections::VecDeque;

use super::{KernelOutcome, Lift};
use crate::graph::{Graph, ProblemInstance, Vertex};
use crate::oracle::check;

/// Splits `g` into even and odd BFS layers, rooting each component at its
/// smallest vertex. Returns the larger class first (even class on ties).
pub fn parity_classes(g: &Graph) -> (Vec<Vertex>, Vec<Vertex>) {
    let mut side = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for comp in g.connected_components() {
        side[comp[0]] = Some(false);
        queue.push_back(comp[0]);
        while let Some(u) = queue.pop_front() {
            let s = side[u].expect("queued vertices have a side");
            for &w in g.neighbors(u) {
                if side[w].is_none() {
                    side[w] = Some(!s);
                    queue.push_back(w);
                }
            }
        }
    }
    let (odd, even): (Vec<Vertex>, Vec<Vertex>) =
        g.vertices().partition(|&v| side[v] == Some(true));
    if odd.len() > even.len() {
        (odd, even)
    } else {
        (even, odd)
    }
}

/// Decides YES when the larger parity class reaches `k`. Otherwise the
/// isolated-vertex-free graph has at most `2k - 2` vertices and is returned
/// with its id mapping (isolated vertices never belong to a non-blocker).
pub fn nonblocker_kernel(inst: &ProblemInstance) -> KernelOutcome<ProblemInstance> {
    let g = &inst.graph;
    let keep: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let sub = g
        .induced_subgraph(&keep)
        .expect("kept vertices are in range");
    let (large, _) = parity_classes(&sub.graph);
    // Every vertex has a neighbor in the other class, so the larger class is
    // a non-blocker. The check guards that argument.
    let valid = check::is_nonblocker(&sub.graph, &large);
    debug_assert!(valid);
    if valid && large.len() >= inst.k {
        return KernelOutcome::Decided(true);
    }
    if sub.graph.n() == 0 {
        return KernelOutcome::Decided(false);
    }
    KernelOutcome::Reduced {
        instance: ProblemInstance::new(sub.graph, inst.k),
        lift: Some(Lift {
            new_to_old: sub.new_to_old,
            forced: Vec::new(),
        }),
    }
}
