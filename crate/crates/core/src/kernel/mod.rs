//! Kernelization: polynomial-time reductions to an equivalent instance whose
//! size is bounded by a function of `k` alone.
//!
//! Every kernelizer returns a [`KernelOutcome`]. Kernelizers never solve the
//! reduced instance; that is left to the caller.

mod maxleaf;
mod nonblocker;
mod nt;
mod threedm;

pub use maxleaf::{maxleaf_kernel, maxleaf_reduce};
pub use nonblocker::{nonblocker_kernel, parity_classes};
pub use nt::{nt_half_integral, nt_kernel_vc, NtPartition};
pub use threedm::{greedy_maximal_matching, threedm_bound, threedm_kernel, threedm_reduce};

use crate::graph::Vertex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome<I> {
    /// The kernelizer settled the instance.
    Decided(bool),
    /// An equivalent, smaller instance.
    Reduced { instance: I, lift: Option<Lift> },
}

impl<I> KernelOutcome<I> {
    pub fn decided(&self) -> Option<bool> {
        match self {
            KernelOutcome::Decided(b) => Some(*b),
            KernelOutcome::Reduced { .. } => None,
        }
    }

    pub fn reduced(&self) -> Option<&I> {
        match self {
            KernelOutcome::Reduced { instance, .. } => Some(instance),
            KernelOutcome::Decided(_) => None,
        }
    }
}

/// Maps a vertex-set witness of the reduced graph back to the original graph:
/// renumber through `new_to_old`, then add the `forced` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub new_to_old: Vec<Vertex>,
    pub forced: Vec<Vertex>,
}

impl Lift {
    pub fn apply(&self, witness: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = witness
            .iter()
            .map(|&v| self.new_to_old[v])
            .chain(self.forced.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}
