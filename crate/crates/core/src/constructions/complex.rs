use std::collections::{BTreeSet, HashSet};

use crate::error::{PolytopeError, Result};
use crate::lattice::FaceLattice;

/// A vertex-describable polytope given as vertex subsets per rank.
///
/// Vertices are `0..vertex_count`. Rank `-1` holds the empty set, rank `0`
/// the singletons in order, and the top rank the full vertex set. Faces are
/// listed in the order of the ids they receive in [`to_lattice`].
///
/// [`to_lattice`]: VertexSetComplex::to_lattice
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSetComplex {
    rank: i32,
    vertices: usize,
    faces_by_rank: Vec<Vec<Vec<u32>>>,
}

impl VertexSetComplex {
    pub fn new(rank: i32, vertices: usize, faces_by_rank: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let bad = |msg: String| Err(PolytopeError::BadParameter(msg));
        if rank < -1 || faces_by_rank.len() != (rank + 2) as usize {
            return bad(format!("expected {} ranks of faces", rank + 2));
        }
        if faces_by_rank[0] != vec![Vec::<u32>::new()] {
            return bad("rank -1 must hold exactly the empty set".into());
        }
        if rank >= 0 {
            let singletons: Vec<Vec<u32>> = (0..vertices as u32).map(|i| vec![i]).collect();
            if rank > 0 && faces_by_rank[1] != singletons {
                return bad("rank 0 must list the singletons in order".into());
            }
            let all: Vec<u32> = (0..vertices as u32).collect();
            if faces_by_rank[(rank + 1) as usize] != vec![all] {
                return bad("the top rank must hold the full vertex set".into());
            }
        }
        for (r, faces) in faces_by_rank.iter().enumerate() {
            let mut seen = HashSet::new();
            for f in faces {
                if f.windows(2).any(|w| w[0] >= w[1]) || f.iter().any(|&x| x as usize >= vertices) {
                    return bad(format!("face {f:?} is not a sorted subset of the vertices"));
                }
                if !seen.insert(f) {
                    return bad(format!("face {f:?} repeated in rank {}", r as i32 - 1));
                }
            }
        }
        Ok(Self::new_unchecked(rank, vertices, faces_by_rank))
    }

    pub(crate) fn new_unchecked(rank: i32, vertices: usize, faces_by_rank: Vec<Vec<Vec<u32>>>) -> Self {
        VertexSetComplex { rank, vertices, faces_by_rank }
    }

    /// The boundary complex spanned by a list of simplicial facets on
    /// `vertices` vertices: every subset of a facet is a face.
    pub fn simplicial(vertices: usize, facets: &[Vec<u32>]) -> Result<Self> {
        let rank = facets.iter().map(|f| f.len() as i32).max().unwrap_or(0);
        let mut by_rank: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); (rank + 1) as usize];
        for facet in facets {
            let mut facet = facet.clone();
            facet.sort_unstable();
            let k = facet.len();
            for mask in 0u32..(1 << k) {
                let sub: Vec<u32> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
                by_rank[sub.len()].insert(sub);
            }
        }
        let mut faces_by_rank: Vec<Vec<Vec<u32>>> = by_rank.into_iter().map(|s| s.into_iter().collect()).collect();
        faces_by_rank.push(vec![(0..vertices as u32).collect()]);
        Self::new(rank, vertices, faces_by_rank)
    }

    pub fn rank(&self) -> i32 {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Faces of rank `r` as sorted vertex lists.
    pub fn faces(&self, r: i32) -> &[Vec<u32>] {
        &self.faces_by_rank[(r + 1) as usize]
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_rank.iter().map(Vec::len).sum()
    }

    /// All faces, in lattice id order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &Vec<u32>)> {
        self.faces_by_rank.iter().enumerate().flat_map(|(r, fs)| fs.iter().map(move |f| (r as i32 - 1, f)))
    }

    /// The face lattice ordered by inclusion. Face ids follow the listing
    /// order of this complex.
    pub fn to_lattice(&self) -> Result<FaceLattice> {
        let mut ranks = Vec::with_capacity(self.face_count());
        let mut offsets = Vec::with_capacity(self.faces_by_rank.len());
        for (r, faces) in self.faces_by_rank.iter().enumerate() {
            offsets.push(ranks.len());
            ranks.extend(std::iter::repeat_n(r as i32 - 1, faces.len()));
        }
        let mut covers = Vec::new();
        for r in 1..self.faces_by_rank.len() {
            let lower = &self.faces_by_rank[r - 1];
            // Index lower faces by their least vertex.
            let mut by_first: Vec<Vec<usize>> = vec![Vec::new(); self.vertices + 1];
            for (i, f) in lower.iter().enumerate() {
                by_first[f.first().map_or(self.vertices, |&x| x as usize)].push(i);
            }
            for (j, g) in self.faces_by_rank[r].iter().enumerate() {
                let candidates = g.iter().map(|&x| x as usize).chain(std::iter::once(self.vertices));
                for first in candidates {
                    for &i in &by_first[first] {
                        if is_subset(&lower[i], g) {
                            covers.push((offsets[r - 1] + i, offsets[r] + j));
                        }
                    }
                }
            }
        }
        FaceLattice::from_covers(self.rank, &ranks, &covers)
    }
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}
