//! Nemhauser–Trotter kernel for Vertex Cover via the half-integral LP
//! relaxation.

use serde::{Deserialize, Serialize};

use super::{KernelOutcome, Lift};
use crate::graph::{Graph, ProblemInstance, Vertex};
use crate::matching::Bipartite;

/// Half-integral optimum of the vertex-cover LP, as the vertex classes with
/// value 0, 1/2 and 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NtPartition {
    pub zero: Vec<Vertex>,
    pub half: Vec<Vertex>,
    pub one: Vec<Vertex>,
}

impl NtPartition {
    /// Twice the LP value, `2|V1| + |V_half|`.
    pub fn doubled_lp_value(&self) -> usize {
        2 * self.one.len() + self.half.len()
    }

    /// LP value per vertex, doubled: 0, 1 or 2.
    pub fn doubled_values(&self, n: usize) -> Vec<u8> {
        let mut x = vec![0u8; n];
        for &v in &self.half {
            x[v] = 1;
        }
        for &v in &self.one {
            x[v] = 2;
        }
        x
    }
}

/// Solves the LP through the bipartite double cover: each vertex `v` gets
/// copies `v_L`, `v_R`, each edge `{u, v}` becomes `u_L v_R` and `v_L u_R`, and
/// `x_v` is half the number of copies of `v` in a minimum cover of the double
/// cover. König's construction from the free left vertices is used, which
/// yields the partition with the smallest `V0` and `V1`.
pub fn nt_half_integral(g: &Graph) -> NtPartition {
    let n = g.n();
    let mut b = Bipartite::new(n, n);
    for (u, v) in g.edges() {
        b.add_edge(u, v);
        b.add_edge(v, u);
    }
    let matching = b.maximum_matching();
    let cover = b.konig_cover(&matching);
    let mut p = NtPartition::default();
    for v in 0..n {
        match cover.left[v] as u8 + cover.right[v] as u8 {
            0 => p.zero.push(v),
            1 => p.half.push(v),
            _ => p.one.push(v),
        }
    }
    p
}

/// `(G, k)` becomes `(G[V_half], k - |V1|)`, which has at most `2k` vertices,
/// or NO when `|V1| > k` or `|V_half| > 2(k - |V1|)`. Lifting a reduced cover
/// adds `V1`.
pub fn nt_kernel_vc(inst: &ProblemInstance) -> KernelOutcome<ProblemInstance> {
    let p = nt_half_integral(&inst.graph);
    if p.one.len() > inst.k {
        return KernelOutcome::Decided(false);
    }
    let budget = inst.k - p.one.len();
    if p.half.len() > 2 * budget {
        return KernelOutcome::Decided(false);
    }
    let sub = inst
        .graph
        .induced_subgraph(&p.half)
        .expect("partition vertices are in range");
    KernelOutcome::Reduced {
        instance: ProblemInstance::new(sub.graph, budget),
        lift: Some(Lift {
            new_to_old: sub.new_to_old,
            forced: p.one,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, random_graph, GraphKind};
    use crate::oracle::{check, Oracle};
    use crate::rng::Seed;

    /// All optimal assignments in `{0, 1/2, 1}^n` (values doubled).
    fn half_integral_optima(g: &Graph) -> (usize, Vec<Vec<u8>>) {
        let n = g.n();
        let mut best = usize::MAX;
        let mut sols = Vec::new();
        let mut x = vec![0u8; n];
        loop {
            if g.edges().all(|(u, v)| x[u] + x[v] >= 2) {
                let val: usize = x.iter().map(|&a| a as usize).sum();
                if val < best {
                    best = val;
                    sols.clear();
                }
                if val == best {
                    sols.push(x.clone());
                }
            }
            // odometer in base 3
            let mut i = 0;
            while i < n && x[i] == 2 {
                x[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            x[i] += 1;
        }
        (best, sols)
    }

    #[test]
    fn star_partition() {
        let star = generate(&GraphKind::Star(3)).unwrap();
        let p = nt_half_integral(&star);
        assert_eq!(p.one, vec![0]);
        assert_eq!(p.zero, vec![1, 2, 3]);
        assert!(p.half.is_empty());
        assert_eq!(half_integral_optima(&star).0, p.doubled_lp_value());
    }

    #[test]
    fn c4_is_all_half() {
        let c4 = generate(&GraphKind::Cycle(4)).unwrap();
        let p = nt_half_integral(&c4);
        assert_eq!(p.half, vec![0, 1, 2, 3]);
        assert_eq!(p.doubled_lp_value(), 4);
        assert_eq!(half_integral_optima(&c4).0, 4);
    }

    #[test]
    fn edgeless_is_all_zero() {
        let p = nt_half_integral(&Graph::empty(4));
        assert_eq!(p.zero, vec![0, 1, 2, 3]);
    }

    #[test]
    fn kernel_examples() {
        let star = generate(&GraphKind::Star(3)).unwrap();
        match nt_kernel_vc(&ProblemInstance::new(star.clone(), 1)) {
            KernelOutcome::Reduced { instance, lift } => {
                assert_eq!(instance, ProblemInstance::new(Graph::empty(0), 0));
                let lifted = lift.unwrap().apply(&[]);
                assert_eq!(lifted, vec![0]);
                assert!(check::is_vertex_cover(&star, &lifted));
            }
            other => panic!("unexpected {other:?}"),
        }

        let c4 = generate(&GraphKind::Cycle(4)).unwrap();
        let out = nt_kernel_vc(&ProblemInstance::new(c4.clone(), 2));
        assert_eq!(out.reduced(), Some(&ProblemInstance::new(c4, 2)));

        let k2 = generate(&GraphKind::Path(2)).unwrap();
        assert_eq!(
            nt_kernel_vc(&ProblemInstance::new(k2, 0)),
            KernelOutcome::Decided(false)
        );
    }

    #[test]
    fn optimal_and_extremal_on_small_graphs() {
        for seed in 0..150 {
            let n = 1 + seed as usize % 7;
            let m = (seed as usize * 5) % (n * (n - 1) / 2 + 1);
            let g = random_graph(n, m, Seed(seed)).unwrap();
            let p = nt_half_integral(&g);
            let x = p.doubled_values(n);
            assert!(g.edges().all(|(u, v)| x[u] + x[v] >= 2));
            let (best, optima) = half_integral_optima(&g);
            assert_eq!(p.doubled_lp_value(), best, "seed {seed}");
            // V1 and V0 are exactly the vertices fixed to 1 (resp. 0) in every optimum
            for v in 0..n {
                let always_one = optima.iter().all(|s| s[v] == 2);
                let always_zero = optima.iter().all(|s| s[v] == 0);
                assert_eq!(x[v] == 2, always_one, "seed {seed} v {v}");
                assert_eq!(x[v] == 0, always_zero, "seed {seed} v {v}");
            }
            // no edge inside V0 or between V0 and V_half
            for (u, v) in g.edges() {
                assert!(x[u] + x[v] >= 2);
                assert!(!(x[u] == 0 && x[v] < 2) && !(x[v] == 0 && x[u] < 2));
            }
            let opt = Oracle::default().vc_opt(&g).unwrap().0;
            assert!(p.doubled_lp_value() <= 2 * opt);
        }
    }
}
