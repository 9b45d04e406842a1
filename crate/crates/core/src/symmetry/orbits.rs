use petgraph::unionfind::UnionFind;

use super::{automorphisms_in, restrict_to_section, AutomorphismGroup};
use crate::error::Result;
use crate::flags::FlagGraph;
use crate::lattice::{FaceId, FaceLattice, SectionView};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    Flags,
    Faces(i32),
}

/// Disjoint classes covering the ground set: flag indices for
/// [`OrbitKind::Flags`], face ids for [`OrbitKind::Faces`]. Classes are
/// sorted internally and ordered by their least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub kind: OrbitKind,
    pub classes: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    fn from_union_find(kind: OrbitKind, members: &[usize], uf: &UnionFind<u32>) -> Self {
        let mut by_root: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
        for (slot, &m) in members.iter().enumerate() {
            by_root.entry(uf.find(slot as u32)).or_default().push(m);
        }
        let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
        classes.sort_unstable_by_key(|c| c[0]);
        OrbitPartition { kind, classes }
    }
}

/// Flag orbits under `group`, by union-find over the generators.
pub fn flag_orbits(graph: &FlagGraph, group: &AutomorphismGroup) -> OrbitPartition {
    let mut uf = UnionFind::<u32>::new(graph.len());
    for g in group.generator_elements() {
        for t in 0..graph.len() {
            let image = graph.index_of(&g.apply_chain(graph.flag(t))).expect("automorphism maps flags to flags");
            uf.union(t as u32, image as u32);
        }
    }
    let members: Vec<usize> = (0..graph.len()).collect();
    OrbitPartition::from_union_find(OrbitKind::Flags, &members, &uf)
}

/// Orbits of the rank-`j` faces under `group`.
pub fn face_orbits(lattice: &FaceLattice, group: &AutomorphismGroup, j: i32) -> OrbitPartition {
    let members: Vec<usize> = lattice.faces_of_rank(j).map(FaceId::index).collect();
    let first = members.first().copied().unwrap_or(0);
    let mut uf = UnionFind::<u32>::new(members.len());
    for g in group.generator_elements() {
        for (slot, &f) in members.iter().enumerate() {
            let image = g.apply(FaceId::from(f)).index() - first;
            uf.union(slot as u32, image as u32);
        }
    }
    OrbitPartition::from_union_find(OrbitKind::Faces(j), &members, &uf)
}

/// The subgroup fixing vertex `v`.
pub fn vertex_stabilizer(group: &AutomorphismGroup, v: FaceId) -> AutomorphismGroup {
    let elements = group.elements.iter().filter(|e| e.apply(v) == v).cloned().collect();
    AutomorphismGroup::from_elements(group.base_flag.clone(), elements)
}

/// The stabilizer of `section.bottom` acting on the section above it
/// (for a vertex, its action on the vertex-figure).
pub fn stabilizer_image(group: &AutomorphismGroup, section: &SectionView) -> AutomorphismGroup {
    let fixing: Vec<_> = group
        .elements
        .iter()
        .filter(|e| e.apply(section.bottom) == section.bottom && e.apply(section.top) == section.top)
        .cloned()
        .collect();
    let local = restrict_to_section(&fixing, section);
    let base = crate::flags::first_flag(&section.lattice);
    AutomorphismGroup::from_elements(base, local)
}

pub fn is_regular(lattice: &FaceLattice) -> Result<bool> {
    let graph = FlagGraph::new(lattice)?;
    Ok(automorphisms_in(lattice, &graph).order() == graph.len())
}

pub fn is_vertex_transitive(lattice: &FaceLattice) -> Result<bool> {
    let graph = FlagGraph::new(lattice)?;
    let group = automorphisms_in(lattice, &graph);
    Ok(face_orbits(lattice, &group, 0).count() <= 1)
}

/// Regular facets and a vertex-transitive group.
pub fn is_semi_regular(lattice: &FaceLattice) -> Result<bool> {
    if !is_vertex_transitive(lattice)? {
        return Ok(false);
    }
    facets_regular(lattice)
}

pub(crate) fn facets_regular(lattice: &FaceLattice) -> Result<bool> {
    for facet in lattice.facets() {
        if !is_regular(&lattice.face_polytope(facet)?.lattice)? {
            return Ok(false);
        }
    }
    Ok(true)
}
