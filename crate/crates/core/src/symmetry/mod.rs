//! Combinatorial automorphisms, isomorphism testing and orbits.
//!
//! An automorphism of a polytope is determined by the image of a single
//! flag. Both the automorphism search and the isomorphism test fix a base
//! flag, try every candidate image flag, and propagate the assignment along
//! `i`-adjacencies of the flag graph. A candidate is accepted iff the
//! propagation is consistent and induces a well-defined face bijection.

mod orbits;
mod refine;

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::error::Result;
use crate::flags::FlagGraph;
use crate::lattice::{FaceId, FaceLattice, SectionView};
use crate::properties::f_vector;

pub(crate) use orbits::facets_regular;
pub use orbits::{
    face_orbits, flag_orbits, is_regular, is_semi_regular, is_vertex_transitive, stabilizer_image, vertex_stabilizer,
    OrbitKind, OrbitPartition,
};
pub use refine::refine;

/// A rank- and order-preserving bijection of faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub face_perm: Vec<FaceId>,
}

impl Automorphism {
    pub fn identity(faces: usize) -> Self {
        Automorphism { face_perm: (0..faces).map(FaceId::from).collect() }
    }

    #[inline]
    pub fn apply(&self, f: FaceId) -> FaceId {
        self.face_perm[f.index()]
    }

    pub fn apply_chain(&self, chain: &[FaceId]) -> Vec<FaceId> {
        chain.iter().map(|&f| self.apply(f)).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { face_perm: other.face_perm.iter().map(|&f| self.apply(f)).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![FaceId(0); self.face_perm.len()];
        for (i, &f) in self.face_perm.iter().enumerate() {
            inv[f.index()] = FaceId::from(i);
        }
        Automorphism { face_perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.face_perm.iter().enumerate().all(|(i, f)| f.index() == i)
    }

    /// Whether the map sends covers to covers, in both directions.
    pub fn preserves(&self, lattice: &FaceLattice) -> bool {
        let n = lattice.len();
        if self.face_perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &f in &self.face_perm {
            if f.index() >= n || std::mem::replace(&mut seen[f.index()], true) {
                return false;
            }
        }
        lattice.faces().all(|f| {
            let g = self.apply(f);
            lattice.face_rank(f) == lattice.face_rank(g) && {
                let mut image: Vec<FaceId> = lattice.subs(f).iter().map(|&s| self.apply(s)).collect();
                image.sort_unstable();
                image == lattice.subs(g)
            }
        })
    }
}

/// A finite group of automorphisms, listed in full.
///
/// Elements are sorted by the image of `base_flag`; since automorphisms act
/// freely on flags, that image identifies the element.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub base_flag: Vec<FaceId>,
    pub elements: Vec<Automorphism>,
    /// Indices into `elements` of a generating set.
    pub generators: Vec<usize>,
}

impl AutomorphismGroup {
    /// Wraps a complete list of elements (closed under composition).
    pub fn from_elements(base_flag: Vec<FaceId>, mut elements: Vec<Automorphism>) -> Self {
        elements.sort_by_cached_key(|e| e.apply_chain(&base_flag));
        elements.dedup();
        let generators = pick_generators(&base_flag, &elements);
        AutomorphismGroup { base_flag, elements, generators }
    }

    /// The group generated by `gens`, enumerated by breadth-first closure.
    pub fn generate(base_flag: Vec<FaceId>, faces: usize, gens: &[Automorphism]) -> Self {
        let identity = Automorphism::identity(faces);
        let mut seen: HashSet<Vec<FaceId>> = HashSet::from([base_flag.clone()]);
        let mut elements = vec![identity];
        let mut head = 0;
        while head < elements.len() {
            for g in gens {
                let next = g.compose(&elements[head]);
                if seen.insert(next.apply_chain(&base_flag)) {
                    elements.push(next);
                }
            }
            head += 1;
        }
        Self::from_elements(base_flag, elements)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn generator_elements(&self) -> impl Iterator<Item = &Automorphism> {
        self.generators.iter().map(|&i| &self.elements[i])
    }

    /// Whether the element lists agree (both are kept sorted).
    pub fn same_elements(&self, other: &AutomorphismGroup) -> bool {
        self.elements == other.elements
    }

    /// Checks closure of products `a ∘ b` for every `a` in `left` and `b` in
    /// `right` (indices into `elements`).
    pub fn closed_on(&self, left: &[usize], right: &[usize]) -> bool {
        let keys: HashSet<Vec<FaceId>> = self.elements.iter().map(|e| e.apply_chain(&self.base_flag)).collect();
        left.iter().all(|&a| {
            right
                .iter()
                .all(|&b| keys.contains(&self.elements[a].compose(&self.elements[b]).apply_chain(&self.base_flag)))
        })
    }
}

/// Greedy generating set: keep an element iff it lies outside the subgroup
/// generated by the elements kept so far.
fn pick_generators(base_flag: &[FaceId], elements: &[Automorphism]) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span: HashSet<Vec<FaceId>> = HashSet::from([base_flag.to_vec()]);
    for (idx, e) in elements.iter().enumerate() {
        if span.contains(&e.apply_chain(base_flag)) {
            continue;
        }
        gens.push(idx);
        // The subgroup is the orbit of the base flag under the generators.
        span = HashSet::from([base_flag.to_vec()]);
        let mut queue = VecDeque::from([base_flag.to_vec()]);
        while let Some(chain) = queue.pop_front() {
            for &g in &gens {
                let next = elements[g].apply_chain(&chain);
                if span.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    gens
}

/// Extends `base -> image` to a face bijection from `src` to `dst`, or
/// `None` if the assignment is inconsistent somewhere.
fn extend(
    (src_lattice, src, src_colors): (&FaceLattice, &FlagGraph, &[u32]),
    (dst_lattice, dst, dst_colors): (&FaceLattice, &FlagGraph, &[u32]),
    base: usize,
    image: usize,
) -> Option<Vec<FaceId>> {
    let n = src.exchange_ranks();
    let mut map = vec![u32::MAX; src.len()];
    map[base] = image as u32;
    let mut stack = vec![base];
    while let Some(t) = stack.pop() {
        let m = map[t] as usize;
        for i in 0..n {
            let u = src.adjacent(t, i);
            let w = dst.adjacent(m, i);
            if map[u] == u32::MAX {
                if src_colors[u] != dst_colors[w] {
                    return None;
                }
                map[u] = w as u32;
                stack.push(u);
            } else if map[u] as usize != w {
                return None;
            }
        }
    }

    let mut perm = vec![FaceId(u32::MAX); src_lattice.len()];
    for (t, &m) in map.iter().enumerate() {
        if m == u32::MAX {
            return None;
        }
        for (&f, &g) in src.flag(t).iter().zip(dst.flag(m as usize)) {
            let slot = &mut perm[f.index()];
            if slot.0 == u32::MAX {
                *slot = g;
            } else if *slot != g {
                return None;
            }
        }
    }
    let mut hit = vec![false; dst_lattice.len()];
    for &g in &perm {
        if g.0 == u32::MAX || std::mem::replace(&mut hit[g.index()], true) {
            return None;
        }
    }
    Some(perm)
}

/// The full automorphism group, by brute force over candidate image flags.
pub fn automorphisms(lattice: &FaceLattice) -> Result<AutomorphismGroup> {
    let graph = FlagGraph::new(lattice)?;
    Ok(automorphisms_in(lattice, &graph))
}

/// As [`automorphisms`], reusing an already computed flag graph.
pub fn automorphisms_in(lattice: &FaceLattice, graph: &FlagGraph) -> AutomorphismGroup {
    let colors = refine(&[graph]).pop().unwrap();
    let base = 0;
    let candidates: Vec<usize> = (0..graph.len()).filter(|&t| colors[t] == colors[base]).collect();
    let elements: Vec<Automorphism> = candidates
        .par_iter()
        .filter_map(|&c| {
            let perm = extend((lattice, graph, &colors), (lattice, graph, &colors), base, c)?;
            let auto = Automorphism { face_perm: perm };
            // Free action: only the identity fixes the base flag.
            debug_assert!(c != base || auto.is_identity());
            Some(auto)
        })
        .collect();
    AutomorphismGroup::from_elements(graph.flag(base).to_vec(), elements)
}

/// A face bijection `a -> b` preserving the order, if one exists.
pub fn isomorphism(a: &FaceLattice, b: &FaceLattice) -> Result<Option<Vec<FaceId>>> {
    if a.rank() != b.rank() || a.len() != b.len() || f_vector(a) != f_vector(b) {
        return Ok(None);
    }
    let ga = FlagGraph::new(a)?;
    let gb = FlagGraph::new(b)?;
    Ok(isomorphism_in((a, &ga), (b, &gb)))
}

pub fn isomorphism_in((a, ga): (&FaceLattice, &FlagGraph), (b, gb): (&FaceLattice, &FlagGraph)) -> Option<Vec<FaceId>> {
    if a.rank() != b.rank() || ga.len() != gb.len() {
        return None;
    }
    let mut colors = refine(&[ga, gb]);
    let cb = colors.pop().unwrap();
    let ca = colors.pop().unwrap();
    let histogram = |c: &[u32]| {
        let mut h: HashMap<u32, usize> = HashMap::new();
        for &x in c {
            *h.entry(x).or_default() += 1;
        }
        h
    };
    if histogram(&ca) != histogram(&cb) {
        return None;
    }
    (0..gb.len())
        .into_par_iter()
        .filter(|&t| cb[t] == ca[0])
        .find_map_first(|t| extend((a, ga, &ca), (b, gb, &cb), 0, t))
}

pub fn isomorphic(a: &FaceLattice, b: &FaceLattice) -> Result<bool> {
    Ok(isomorphism(a, b)?.is_some())
}

/// Transports automorphisms of the parent that fix a section (setwise) onto
/// the section's own lattice.
pub fn restrict_to_section(elements: &[Automorphism], section: &SectionView) -> Vec<Automorphism> {
    elements
        .iter()
        .filter_map(|e| {
            section
                .parent_ids
                .iter()
                .map(|&p| section.local_id(e.apply(p)))
                .collect::<Option<Vec<_>>>()
                .map(|face_perm| Automorphism { face_perm })
        })
        .collect()
}
