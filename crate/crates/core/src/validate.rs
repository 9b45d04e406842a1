//! Checks of the polytope axioms on a built lattice.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::lattice::{FaceId, FaceLattice};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub unique_bounds: bool,
    pub flags_full_length: bool,
    pub diamond: bool,
    /// `(lower, upper, k)`: rank gap 2, `k != 2` faces strictly between.
    pub diamond_failures: Vec<(FaceId, FaceId, usize)>,
    pub strongly_flag_connected: bool,
    /// Sections `upper/lower` whose flag graph is disconnected.
    pub disconnected_sections: Vec<(FaceId, FaceId)>,
}

impl ValidationReport {
    pub fn is_polytope(&self) -> bool {
        self.unique_bounds && self.flags_full_length && self.diamond && self.strongly_flag_connected
    }

    /// One-line description of the first failing axiom.
    pub fn failure(&self) -> Option<String> {
        if !self.unique_bounds {
            return Some("no unique least and greatest face".into());
        }
        if !self.flags_full_length {
            return Some("some maximal chain is short".into());
        }
        if let Some(&(lo, hi, k)) = self.diamond_failures.first() {
            return Some(format!("diamond condition fails between {lo} and {hi} ({k} faces)"));
        }
        if let Some(&(lo, hi)) = self.disconnected_sections.first() {
            return Some(format!("section {hi}/{lo} is not flag-connected"));
        }
        None
    }
}

pub fn validate_polytope(lattice: &FaceLattice) -> ValidationReport {
    let mut report = ValidationReport {
        unique_bounds: lattice.count(-1) == 1 && lattice.count(lattice.rank()) == 1,
        ..Default::default()
    };

    let (bottom, top) = (lattice.bottom(), lattice.top());
    report.flags_full_length = lattice
        .faces()
        .all(|f| (f == bottom || !lattice.subs(f).is_empty()) && (f == top || !lattice.sups(f).is_empty()));

    // Diamond condition: count two-step paths lower -> h -> upper.
    let mut through: HashMap<FaceId, usize> = HashMap::new();
    for lower in lattice.faces() {
        if lattice.face_rank(lower) > lattice.rank() - 2 {
            continue;
        }
        through.clear();
        for &h in lattice.sups(lower) {
            for &upper in lattice.sups(h) {
                *through.entry(upper).or_default() += 1;
            }
        }
        let mut bad: Vec<_> = through.iter().filter(|(_, &k)| k != 2).map(|(&u, &k)| (lower, u, k)).collect();
        bad.sort_unstable();
        report.diamond_failures.extend(bad);
    }
    report.diamond = report.diamond_failures.is_empty();

    report.disconnected_sections = disconnected_sections(lattice);
    report.strongly_flag_connected = report.disconnected_sections.is_empty();
    report
}

/// Sections of rank at least 2 (rank gap at least 3) whose flags do not form
/// a connected graph. Rank-1 sections need no check: any non-empty set of
/// chains `lower < h < upper` is pairwise adjacent.
fn disconnected_sections(lattice: &FaceLattice) -> Vec<(FaceId, FaceId)> {
    let n = lattice.len();
    let mut stamp = vec![usize::MAX; n];
    let mut out = Vec::new();
    let mut chains: Vec<FaceId> = Vec::new();
    let mut buckets: HashMap<(usize, Vec<FaceId>), usize> = HashMap::new();

    for upper in lattice.faces() {
        // Mark the down-set of `upper`.
        let mut stack = vec![upper];
        let mut below = Vec::new();
        stamp[upper.index()] = upper.index();
        while let Some(g) = stack.pop() {
            below.push(g);
            for &s in lattice.subs(g) {
                if stamp[s.index()] != upper.index() {
                    stamp[s.index()] = upper.index();
                    stack.push(s);
                }
            }
        }
        below.sort_unstable();
        let top_rank = lattice.face_rank(upper);
        for &lower in &below {
            let gap = top_rank - lattice.face_rank(lower);
            if gap < 3 {
                continue;
            }
            let width = gap as usize + 1;
            chains.clear();
            let mut chain = vec![lower];
            collect_chains(lattice, &stamp, upper, width, &mut chain, &mut chains);
            let count = chains.len() / width;
            let mut uf = UnionFind::<u32>::new(count);
            buckets.clear();
            for (t, c) in chains.chunks_exact(width).enumerate() {
                for p in 1..width - 1 {
                    let mut key = c.to_vec();
                    key[p] = FaceId(u32::MAX);
                    match buckets.entry((p, key)) {
                        std::collections::hash_map::Entry::Occupied(e) => {
                            uf.union(*e.get() as u32, t as u32);
                        }
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(t);
                        }
                    }
                }
            }
            let root = uf.find(0);
            if (1..count as u32).any(|t| uf.find(t) != root) {
                out.push((lower, upper));
            }
        }
    }
    out
}

fn collect_chains(
    lattice: &FaceLattice,
    stamp: &[usize],
    upper: FaceId,
    width: usize,
    chain: &mut Vec<FaceId>,
    out: &mut Vec<FaceId>,
) {
    if chain.len() == width {
        if *chain.last().unwrap() == upper {
            out.extend_from_slice(chain);
        }
        return;
    }
    let last = *chain.last().unwrap();
    for &s in lattice.sups(last) {
        if stamp[s.index()] == upper.index() {
            chain.push(s);
            collect_chains(lattice, stamp, upper, width, chain, out);
            chain.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_under_one_top_are_disconnected() {
        // bottom 0, vertices 1..=6, edges 7..=12, top 13
        let mut ranks = vec![-1];
        ranks.extend([0; 6]);
        ranks.extend([1; 6]);
        ranks.push(2);
        let mut covers = Vec::new();
        for v in 1..=6 {
            covers.push((0, v));
        }
        for (tri, base) in [(0, 1), (1, 4)] {
            for k in 0..3 {
                let e = 7 + 3 * tri + k;
                covers.push((base + k, e));
                covers.push((base + (k + 1) % 3, e));
                covers.push((e, 13));
            }
        }
        let l = FaceLattice::from_covers(2, &ranks, &covers).unwrap();
        let r = validate_polytope(&l);
        assert!(r.diamond);
        assert!(!r.strongly_flag_connected);
        assert_eq!(r.disconnected_sections, vec![(FaceId(0), FaceId(13))]);
        assert!(!r.is_polytope());
    }
}
