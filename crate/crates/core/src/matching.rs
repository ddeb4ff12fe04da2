//! Maximum bipartite matching (Hopcroft–Karp) and König's minimum vertex
//! cover.

use std::collections::VecDeque;

/// Bipartite graph with `left` and `right` vertex classes; `adj[l]` lists the
/// right neighbors of left vertex `l`.
#[derive(Clone, Debug)]
pub struct Bipartite {
    pub left: usize,
    pub right: usize,
    pub adj: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub mate_left: Vec<Option<usize>>,
    pub mate_right: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.mate_left.iter().flatten().count()
    }
}

/// Minimum vertex cover as membership flags for each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub left: Vec<bool>,
    pub right: Vec<bool>,
}

impl Cover {
    pub fn size(&self) -> usize {
        self.left.iter().chain(&self.right).filter(|&&c| c).count()
    }
}

impl Bipartite {
    pub fn new(left: usize, right: usize) -> Self {
        Bipartite {
            left,
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        debug_assert!(l < self.left && r < self.right);
        self.adj[l].push(r);
    }

    pub fn maximum_matching(&self) -> Matching {
        const INF: usize = usize::MAX;
        let mut mate_left = vec![None; self.left];
        let mut mate_right: Vec<Option<usize>> = vec![None; self.right];
        let mut dist = vec![INF; self.left];

        loop {
            // layered BFS from free left vertices
            let mut queue = VecDeque::new();
            for l in 0..self.left {
                if mate_left[l].is_none() {
                    dist[l] = 0;
                    queue.push_back(l);
                } else {
                    dist[l] = INF;
                }
            }
            let mut found = false;
            while let Some(l) = queue.pop_front() {
                for &r in &self.adj[l] {
                    match mate_right[r] {
                        None => found = true,
                        Some(l2) if dist[l2] == INF => {
                            dist[l2] = dist[l] + 1;
                            queue.push_back(l2);
                        }
                        Some(_) => {}
                    }
                }
            }
            if !found {
                break;
            }
            fn augment(
                g: &Bipartite,
                l: usize,
                dist: &mut [usize],
                mate_left: &mut [Option<usize>],
                mate_right: &mut [Option<usize>],
            ) -> bool {
                for &r in &g.adj[l] {
                    let ok = match mate_right[r] {
                        None => true,
                        Some(l2) => {
                            dist[l2] == dist[l].wrapping_add(1)
                                && augment(g, l2, dist, mate_left, mate_right)
                        }
                    };
                    if ok {
                        mate_left[l] = Some(r);
                        mate_right[r] = Some(l);
                        return true;
                    }
                }
                dist[l] = usize::MAX;
                false
            }
            for l in 0..self.left {
                if mate_left[l].is_none() {
                    augment(self, l, &mut dist, &mut mate_left, &mut mate_right);
                }
            }
        }
        Matching {
            mate_left,
            mate_right,
        }
    }

    /// König's construction: with `Z` the vertices reachable from free left
    /// vertices along alternating paths, `(L \ Z) ∪ (R ∩ Z)` is a minimum
    /// vertex cover.
    pub fn konig_cover(&self, m: &Matching) -> Cover {
        let mut z_left = vec![false; self.left];
        let mut z_right = vec![false; self.right];
        let mut stack: Vec<usize> = (0..self.left).filter(|&l| m.mate_left[l].is_none()).collect();
        for &l in &stack {
            z_left[l] = true;
        }
        while let Some(l) = stack.pop() {
            for &r in &self.adj[l] {
                if z_right[r] || m.mate_left[l] == Some(r) {
                    continue;
                }
                z_right[r] = true;
                if let Some(l2) = m.mate_right[r] {
                    if !z_left[l2] {
                        z_left[l2] = true;
                        stack.push(l2);
                    }
                }
            }
        }
        Cover {
            left: z_left.iter().map(|&z| !z).collect(),
            right: z_right,
        }
    }
}
