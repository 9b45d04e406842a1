//! Flags (maximal chains) and the flag graph.

use std::cmp::Ordering;

use crate::error::{PolytopeError, Result};
use crate::lattice::{FaceId, FaceLattice};

/// A maximal chain, indexed by rank `-1..=n` (entry `r + 1` is the `r`-face).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag(pub Vec<FaceId>);

impl Flag {
    pub fn face(&self, rank: i32) -> FaceId {
        self.0[(rank + 1) as usize]
    }
}

/// All flags of a lattice in lexicographic order, with `i`-adjacency.
#[derive(Debug, Clone)]
pub struct FlagGraph {
    rank: i32,
    width: usize,
    faces: Vec<FaceId>,
    adj: Vec<u32>,
}

impl FlagGraph {
    /// Enumerates flags and computes `i`-adjacency through the diamond
    /// condition. Fails if some flag has no unique `i`-neighbour.
    pub fn new(lattice: &FaceLattice) -> Result<Self> {
        let faces = enumerate_flags(lattice);
        let width = (lattice.rank() + 2) as usize;
        let n = lattice.rank().max(0) as usize;
        let count = faces.len() / width;
        let mut graph = FlagGraph { rank: lattice.rank(), width, faces, adj: vec![0; count * n] };
        let mut scratch = vec![FaceId(0); width];
        for t in 0..count {
            for i in 0..n {
                let flag = graph.flag(t);
                let (below, here, above) = (flag[i], flag[i + 1], flag[i + 2]);
                let others: Vec<FaceId> = lattice
                    .sups(below)
                    .iter()
                    .copied()
                    .filter(|&h| h != here && lattice.subs(above).contains(&h))
                    .collect();
                let [other] = others[..] else {
                    return Err(PolytopeError::DiamondViolation { flag: t, rank: i, found: others.len() + 1 });
                };
                scratch.copy_from_slice(flag);
                scratch[i + 1] = other;
                let s = graph.index_of(&scratch).expect("exchanged chain is a flag");
                graph.adj[t * n + i] = s as u32;
            }
        }
        Ok(graph)
    }

    pub fn rank(&self) -> i32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.faces.len() / self.width
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Number of exchange ranks, `max(n, 0)`.
    pub fn exchange_ranks(&self) -> usize {
        self.rank.max(0) as usize
    }

    pub fn flag(&self, t: usize) -> &[FaceId] {
        &self.faces[t * self.width..(t + 1) * self.width]
    }

    pub fn to_flag(&self, t: usize) -> Flag {
        Flag(self.flag(t).to_vec())
    }

    /// The flag that differs from flag `t` exactly in its `i`-face.
    #[inline]
    pub fn adjacent(&self, t: usize, i: usize) -> usize {
        self.adj[t * self.exchange_ranks() + i] as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = &[FaceId]> {
        self.faces.chunks_exact(self.width)
    }

    /// Index of a flag given as its chain of faces.
    pub fn index_of(&self, chain: &[FaceId]) -> Option<usize> {
        if chain.len() != self.width {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.flag(mid).cmp(chain) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Length of the `(i-1, i)` alternating cycle through flag `t`, halved:
    /// the number of `i`-faces in the rank-1 section `G_{i+1}/G_{i-2}`.
    pub fn section_size(&self, t: usize, i: usize) -> usize {
        debug_assert!(i >= 1 && i < self.exchange_ranks());
        let mut cur = t;
        let mut steps = 0;
        loop {
            cur = self.adjacent(cur, i - 1);
            cur = self.adjacent(cur, i);
            steps += 1;
            if cur == t {
                return steps;
            }
        }
    }

    /// Connected components of the flag graph (labels in `0..k`).
    pub fn components(&self) -> (usize, Vec<u32>) {
        let n = self.exchange_ranks();
        let mut label = vec![u32::MAX; self.len()];
        let mut k = 0;
        for start in 0..self.len() {
            if label[start] != u32::MAX {
                continue;
            }
            label[start] = k;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for i in 0..n {
                    let s = self.adjacent(t, i);
                    if label[s] == u32::MAX {
                        label[s] = k;
                        stack.push(s);
                    }
                }
            }
            k += 1;
        }
        (k as usize, label)
    }
}

/// Flags as a flat array, `rank + 2` faces each, lexicographically sorted.
pub fn enumerate_flags(lattice: &FaceLattice) -> Vec<FaceId> {
    let width = (lattice.rank() + 2) as usize;
    let mut out = Vec::new();
    let mut chain = vec![lattice.bottom()];
    fn walk(lattice: &FaceLattice, chain: &mut Vec<FaceId>, width: usize, out: &mut Vec<FaceId>) {
        if chain.len() == width {
            out.extend_from_slice(chain);
            return;
        }
        let last = *chain.last().unwrap();
        for &s in lattice.sups(last) {
            chain.push(s);
            walk(lattice, chain, width, out);
            chain.pop();
        }
    }
    walk(lattice, &mut chain, width, &mut out);
    out
}

/// All flags of `lattice` as owned chains.
pub fn flags(lattice: &FaceLattice) -> Vec<Flag> {
    let width = (lattice.rank() + 2) as usize;
    enumerate_flags(lattice).chunks_exact(width).map(|c| Flag(c.to_vec())).collect()
}

pub fn flag_graph(lattice: &FaceLattice) -> Result<FlagGraph> {
    FlagGraph::new(lattice)
}

/// The lexicographically least flag: follow the smallest upper cover.
pub fn first_flag(lattice: &FaceLattice) -> Vec<FaceId> {
    let mut chain = vec![lattice.bottom()];
    while let Some(&next) = lattice.sups(*chain.last().unwrap()).first() {
        chain.push(next);
    }
    chain
}
