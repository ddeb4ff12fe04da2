//! Cubic kernel for 3-Dimensional Matching.

use std::collections::HashMap;

use super::KernelOutcome;
use crate::triples::{MatchingInstance, Triple, TripleSystem};

/// Greedy maximal matching, scanning triples in lexicographic order.
pub fn greedy_maximal_matching(ts: &TripleSystem) -> Vec<Triple> {
    let sizes = ts.sizes();
    let mut used: [Vec<bool>; 3] = [
        vec![false; sizes[0]],
        vec![false; sizes[1]],
        vec![false; sizes[2]],
    ];
    let mut out = Vec::new();
    for t in ts.triples() {
        if (0..3).all(|c| !used[c][t[c]]) {
            for c in 0..3 {
                used[c][t[c]] = true;
            }
            out.push(*t);
        }
    }
    out
}

/// Keeps at most `cap` triples per value of `key`, preferring the
/// lexicographically smallest. Returns `None` when nothing is dropped.
fn truncate_groups<K, F>(ts: &TripleSystem, cap: usize, key: F) -> Option<TripleSystem>
where
    K: std::hash::Hash + Eq,
    F: Fn(&Triple) -> K,
{
    let mut seen: HashMap<K, usize> = HashMap::new();
    let keep: Vec<bool> = ts
        .triples()
        .iter()
        .map(|t| {
            let c = seen.entry(key(t)).or_insert(0);
            *c += 1;
            *c <= cap
        })
        .collect();
    if keep.iter().all(|&k| k) {
        None
    } else {
        Some(ts.retain(&keep))
    }
}

/// Rule 1: at most `k` triples share any two coordinates.
/// Rule 2: at most `2(k-1)k + 1` triples share any one coordinate.
///
/// Rule 1 runs to its fixpoint before rule 2 fires, since the counting
/// argument for rule 2 assumes the pair groups are already small.
pub fn threedm_reduce(ts: &TripleSystem, k: usize) -> TripleSystem {
    let single_cap = 2 * k.saturating_sub(1) * k + 1;
    let mut cur = ts.clone();
    loop {
        let step = truncate_groups(&cur, k, |t| (t[0], t[1]))
            .or_else(|| truncate_groups(&cur, k, |t| (t[0], t[2])))
            .or_else(|| truncate_groups(&cur, k, |t| (t[1], t[2])))
            .or_else(|| truncate_groups(&cur, single_cap, |t| t[0]))
            .or_else(|| truncate_groups(&cur, single_cap, |t| t[1]))
            .or_else(|| truncate_groups(&cur, single_cap, |t| t[2]));
        match step {
            Some(next) => cur = next,
            None => return cur,
        }
    }
}

/// `3(k-1)(2(k-1)k + 1)`, the triple bound of a reduced system.
pub fn threedm_bound(k: usize) -> usize {
    let k1 = k.saturating_sub(1);
    3 * k1 * (2 * k1 * k + 1)
}

/// Decides YES when a greedy maximal matching reaches `k`, before or after
/// the reduction rules. Otherwise returns the reduced system. Every matching
/// of the reduced system is a matching of the original, so no lift is needed.
pub fn threedm_kernel(inst: &MatchingInstance) -> KernelOutcome<MatchingInstance> {
    let k = inst.k;
    if greedy_maximal_matching(&inst.system).len() >= k {
        return KernelOutcome::Decided(true);
    }
    let reduced = threedm_reduce(&inst.system, k);
    // A subset can admit a larger greedy matching. Checking again makes the
    // kernel a fixpoint of itself.
    if greedy_maximal_matching(&reduced).len() >= k {
        return KernelOutcome::Decided(true);
    }
    debug_assert!(reduced.len() <= threedm_bound(k));
    KernelOutcome::Reduced {
        instance: MatchingInstance { system: reduced, k },
        lift: None,
    }
}
