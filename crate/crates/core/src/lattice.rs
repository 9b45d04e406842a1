//! Ranked face lattices.
//!
//! A [`FaceLattice`] stores a finite ranked poset through its cover (Hasse)
//! relation. Faces are numbered canonically: by rank, then by the order in
//! which they were supplied, so the least face is always `FaceId(0)` and the
//! greatest face is always the last id.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{PolytopeError, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct FaceId(pub u32);

impl FaceId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for FaceId {
    #[inline]
    fn from(i: usize) -> Self {
        FaceId(i as u32)
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Down-sets and up-sets of every face, computed on first use.
#[derive(Debug)]
struct Closure {
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
}

#[derive(Debug)]
pub struct FaceLattice {
    rank: i32,
    ranks: Vec<i32>,
    /// Faces of rank `r` occupy `offsets[r + 1]..offsets[r + 2]`.
    offsets: Vec<usize>,
    subs: Vec<Vec<FaceId>>,
    sups: Vec<Vec<FaceId>>,
    closure: OnceLock<Closure>,
}

impl Clone for FaceLattice {
    fn clone(&self) -> Self {
        FaceLattice {
            rank: self.rank,
            ranks: self.ranks.clone(),
            offsets: self.offsets.clone(),
            subs: self.subs.clone(),
            sups: self.sups.clone(),
            closure: OnceLock::new(),
        }
    }
}

impl PartialEq for FaceLattice {
    /// Equality of labelled lattices (same ids, same covers).
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.ranks == other.ranks && self.subs == other.subs
    }
}

impl Eq for FaceLattice {}

impl FaceLattice {
    /// Builds a lattice of rank `rank` from per-face ranks (indexed by input
    /// id) and cover pairs `(lower, upper)` over those ids.
    ///
    /// Faces are renumbered by `(rank, input id)`. Duplicate covers are
    /// ignored.
    pub fn from_covers(rank: i32, ranks: &[i32], covers: &[(usize, usize)]) -> Result<Self> {
        if rank < -1 {
            return Err(PolytopeError::BadParameter(format!("rank {rank} is below -1")));
        }
        for (face, &r) in ranks.iter().enumerate() {
            if r < -1 || r > rank {
                return Err(PolytopeError::RankOutOfRange { face, rank: r, max: rank });
            }
        }
        for &(lo, hi) in covers {
            let n = ranks.len();
            if lo >= n {
                return Err(PolytopeError::UnknownFace(lo));
            }
            if hi >= n {
                return Err(PolytopeError::UnknownFace(hi));
            }
            if ranks[hi] - ranks[lo] != 1 {
                return Err(PolytopeError::RankSkip { lower: lo, upper: hi });
            }
        }

        let mut order: Vec<usize> = (0..ranks.len()).collect();
        order.sort_by_key(|&i| ranks[i]);
        let mut renumber = vec![0u32; ranks.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new as u32;
        }

        let n = ranks.len();
        let sorted_ranks: Vec<i32> = order.iter().map(|&i| ranks[i]).collect();
        let mut offsets = vec![0usize; (rank + 3) as usize];
        for &r in &sorted_ranks {
            offsets[(r + 2) as usize] += 1;
        }
        for i in 1..offsets.len() {
            offsets[i] += offsets[i - 1];
        }

        let mut subs = vec![Vec::new(); n];
        let mut sups = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            let (lo, hi) = (renumber[lo], renumber[hi]);
            subs[hi as usize].push(FaceId(lo));
            sups[lo as usize].push(FaceId(hi));
        }
        for list in subs.iter_mut().chain(sups.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }

        let lattice = FaceLattice { rank, ranks: sorted_ranks, offsets, subs, sups, closure: OnceLock::new() };
        lattice.check_bounds()?;
        Ok(lattice)
    }

    fn check_bounds(&self) -> Result<()> {
        if self.count(-1) != 1 {
            return Err(PolytopeError::MissingBound("least"));
        }
        if self.count(self.rank) != 1 {
            return Err(PolytopeError::MissingBound("greatest"));
        }
        let (bottom, top) = (self.bottom(), self.top());
        for f in self.faces() {
            if f != bottom && self.subs[f.index()].is_empty() {
                return Err(PolytopeError::MissingBound("least"));
            }
            if f != top && self.sups[f.index()].is_empty() {
                return Err(PolytopeError::MissingBound("greatest"));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> i32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn bottom(&self) -> FaceId {
        FaceId(0)
    }

    pub fn top(&self) -> FaceId {
        FaceId::from(self.len() - 1)
    }

    pub fn face_rank(&self, f: FaceId) -> i32 {
        self.ranks[f.index()]
    }

    /// Number of faces of rank `r` (zero outside `-1..=n`).
    pub fn count(&self, r: i32) -> usize {
        if r < -1 || r > self.rank {
            return 0;
        }
        let r = (r + 1) as usize;
        self.offsets[r + 1] - self.offsets[r]
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.len()).map(FaceId::from)
    }

    pub fn faces_of_rank(&self, r: i32) -> impl Iterator<Item = FaceId> {
        let range = if r < -1 || r > self.rank {
            0..0
        } else {
            let r = (r + 1) as usize;
            self.offsets[r]..self.offsets[r + 1]
        };
        range.map(FaceId::from)
    }

    pub fn vertices(&self) -> impl Iterator<Item = FaceId> {
        self.faces_of_rank(0)
    }

    pub fn facets(&self) -> impl Iterator<Item = FaceId> {
        self.faces_of_rank(self.rank - 1)
    }

    /// Position of a vertex among the rank-0 faces.
    pub fn vertex_ordinal(&self, v: FaceId) -> usize {
        debug_assert_eq!(self.face_rank(v), 0);
        v.index() - self.offsets[1]
    }

    /// Faces covered by `f`.
    pub fn subs(&self, f: FaceId) -> &[FaceId] {
        &self.subs[f.index()]
    }

    /// Faces covering `f`.
    pub fn sups(&self, f: FaceId) -> &[FaceId] {
        &self.sups[f.index()]
    }

    pub fn covers(&self) -> impl Iterator<Item = (FaceId, FaceId)> + '_ {
        self.faces().flat_map(move |hi| self.subs(hi).iter().map(move |&lo| (lo, hi)))
    }

    pub fn cover_count(&self) -> usize {
        self.subs.iter().map(Vec::len).sum()
    }

    fn closure(&self) -> &Closure {
        self.closure.get_or_init(|| {
            let n = self.len();
            let mut down = vec![FixedBitSet::with_capacity(n); n];
            for f in 0..n {
                down[f].insert(f);
                for &s in &self.subs[f] {
                    let (lo, hi) = down.split_at_mut(f);
                    hi[0].union_with(&lo[s.index()]);
                }
            }
            let mut up = vec![FixedBitSet::with_capacity(n); n];
            for f in (0..n).rev() {
                up[f].insert(f);
                for &s in &self.sups[f] {
                    let (lo, hi) = up.split_at_mut(s.index());
                    lo[f].union_with(&hi[0]);
                }
            }
            Closure { down, up }
        })
    }

    /// Order relation `a <= b`.
    pub fn leq(&self, a: FaceId, b: FaceId) -> bool {
        if self.face_rank(a) > self.face_rank(b) {
            return false;
        }
        self.closure().down[b.index()].contains(a.index())
    }

    pub fn down_set(&self, f: FaceId) -> &FixedBitSet {
        &self.closure().down[f.index()]
    }

    pub fn up_set(&self, f: FaceId) -> &FixedBitSet {
        &self.closure().up[f.index()]
    }

    /// Vertices below `f`, in increasing id order.
    pub fn vertices_of(&self, f: FaceId) -> Vec<FaceId> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        let mut stack = vec![f];
        seen[f.index()] = true;
        while let Some(g) = stack.pop() {
            if self.face_rank(g) == 0 {
                out.push(g);
                continue;
            }
            for &s in self.subs(g) {
                if !seen[s.index()] {
                    seen[s.index()] = true;
                    stack.push(s);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Faces reachable from `start` by walking covers in one direction.
    fn reach(&self, start: FaceId, upward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[start.index()] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(g) = queue.pop_front() {
            let next = if upward { self.sups(g) } else { self.subs(g) };
            for &h in next {
                if !seen[h.index()] {
                    seen[h.index()] = true;
                    queue.push_back(h);
                }
            }
        }
        seen
    }

    /// The section `top/bottom`: every face `h` with `bottom <= h <= top`.
    ///
    /// `bottom == top` yields the rank −1 polytope with a single face.
    pub fn section(&self, bottom: FaceId, top: FaceId) -> Result<SectionView> {
        let above = self.reach(bottom, true);
        if !above[top.index()] {
            return Err(PolytopeError::NotComparable { bottom, top });
        }
        let below = self.reach(top, false);
        let parent_ids: Vec<FaceId> = self.faces().filter(|f| above[f.index()] && below[f.index()]).collect();
        let mut local = vec![u32::MAX; self.len()];
        for (i, f) in parent_ids.iter().enumerate() {
            local[f.index()] = i as u32;
        }
        let shift = self.face_rank(bottom) + 1;
        let ranks: Vec<i32> = parent_ids.iter().map(|&f| self.face_rank(f) - shift).collect();
        let mut covers = Vec::new();
        for (i, &f) in parent_ids.iter().enumerate() {
            for &s in self.subs(f) {
                let l = local[s.index()];
                if l != u32::MAX {
                    covers.push((l as usize, i));
                }
            }
        }
        let rank = self.face_rank(top) - shift;
        let lattice = FaceLattice::from_covers(rank, &ranks, &covers)?;
        Ok(SectionView { bottom, top, lattice, parent_ids })
    }

    /// The section above vertex `v`.
    pub fn vertex_figure(&self, v: FaceId) -> Result<SectionView> {
        self.section(v, self.top())
    }

    /// The face `f` viewed as a polytope in its own right.
    pub fn face_polytope(&self, f: FaceId) -> Result<SectionView> {
        self.section(self.bottom(), f)
    }

    /// Relabels faces through a rank-preserving bijection `perm` (old id to
    /// new id). The result is rebuilt canonically.
    pub fn relabel(&self, perm: &[FaceId]) -> Result<FaceLattice> {
        let mut ranks = vec![0; self.len()];
        for f in self.faces() {
            ranks[perm[f.index()].index()] = self.face_rank(f);
        }
        let covers: Vec<(usize, usize)> =
            self.covers().map(|(lo, hi)| (perm[lo.index()].index(), perm[hi.index()].index())).collect();
        FaceLattice::from_covers(self.rank, &ranks, &covers)
    }
}

/// A section `top/bottom` together with the map back into the parent.
#[derive(Debug, Clone)]
pub struct SectionView {
    pub bottom: FaceId,
    pub top: FaceId,
    pub lattice: FaceLattice,
    /// Parent id of every face of `lattice`, indexed by local id.
    pub parent_ids: Vec<FaceId>,
}

impl SectionView {
    /// Local id of a parent face, if it lies in the section.
    pub fn local_id(&self, parent: FaceId) -> Option<FaceId> {
        self.parent_ids.binary_search(&parent).ok().map(FaceId::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> FaceLattice {
        // 0: bottom, 1..=3 vertices, 4..=6 edges, 7 top
        let ranks = [-1, 0, 0, 0, 1, 1, 1, 2];
        let covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (1, 6), (4, 7), (5, 7), (6, 7)];
        FaceLattice::from_covers(2, &ranks, &covers).unwrap()
    }

    #[test]
    fn triangle_has_eight_faces() {
        let t = triangle();
        assert_eq!(t.len(), 8);
        assert_eq!(t.rank(), 2);
        assert_eq!(t.count(0), 3);
        assert_eq!(t.bottom(), FaceId(0));
        assert_eq!(t.top(), FaceId(7));
        assert!(t.leq(FaceId(1), FaceId(7)));
        assert!(!t.leq(FaceId(3), FaceId(4)));
    }

    #[test]
    fn rank_skip_rejected() {
        let ranks = [-1, 0, 1, 2];
        let covers = [(0, 1), (0, 2), (1, 2), (2, 3)];
        assert_eq!(FaceLattice::from_covers(2, &ranks, &covers), Err(PolytopeError::RankSkip { lower: 0, upper: 2 }));
    }

    #[test]
    fn missing_bounds_rejected() {
        let ranks = [0, 0, 1];
        assert_eq!(FaceLattice::from_covers(1, &ranks, &[(0, 2), (1, 2)]), Err(PolytopeError::MissingBound("least")));
        // A second vertex that no edge contains.
        let ranks = [-1, 0, 0, 0, 1];
        let covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4)];
        assert_eq!(FaceLattice::from_covers(1, &ranks, &covers), Err(PolytopeError::MissingBound("greatest")));
    }

    #[test]
    fn canonical_order_is_rank_then_input() {
        // Input lists the top first and the vertices last.
        let ranks = [1, 0, -1, 0];
        let covers = [(2, 1), (2, 3), (1, 0), (3, 0)];
        let l = FaceLattice::from_covers(1, &ranks, &covers).unwrap();
        assert_eq!(l.face_rank(FaceId(0)), -1);
        assert_eq!(l.subs(FaceId(3)), &[FaceId(1), FaceId(2)]);
    }

    #[test]
    fn sections() {
        let t = triangle();
        let edge = t.face_polytope(FaceId(4)).unwrap();
        assert_eq!(edge.lattice.rank(), 1);
        assert_eq!(edge.lattice.len(), 4);
        let vf = t.vertex_figure(FaceId(1)).unwrap();
        assert_eq!(vf.lattice.rank(), 1);
        assert_eq!(vf.lattice.len(), 4);
        assert_eq!(vf.parent_ids, vec![FaceId(1), FaceId(4), FaceId(6), FaceId(7)]);
        let point = t.section(FaceId(5), FaceId(5)).unwrap();
        assert_eq!(point.lattice.rank(), -1);
        assert_eq!(point.lattice.len(), 1);
        assert_eq!(
            t.section(FaceId(3), FaceId(4)).unwrap_err(),
            PolytopeError::NotComparable { bottom: FaceId(3), top: FaceId(4) }
        );
    }
}
