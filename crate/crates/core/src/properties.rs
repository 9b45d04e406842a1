//! Numeric invariants and structural predicates of polytopes.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::constructions::VertexSetComplex;
use crate::error::Result;
use crate::flags::FlagGraph;
use crate::lattice::{FaceId, FaceLattice};
use crate::symmetry::isomorphic;

/// Face counts `f_{-1}, f_0, ..., f_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `f_r`, for `r` in `-1..=n`.
    pub fn get(&self, r: i32) -> usize {
        usize::try_from(r + 1).ok().and_then(|i| self.0.get(i).copied()).unwrap_or(0)
    }

    /// Alternating sum over the proper faces, `f_0 - f_1 + f_2 - ...`.
    pub fn euler_characteristic(&self) -> i64 {
        let n = self.0.len() as i32 - 2;
        (0..n).map(|r| if r % 2 == 0 { self.get(r) as i64 } else { -(self.get(r) as i64) }).sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct SchlafliSymbol(pub Vec<usize>);

impl fmt::Display for SchlafliSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn f_vector(lattice: &FaceLattice) -> FVector {
    FVector((-1..=lattice.rank()).map(|r| lattice.count(r)).collect())
}

/// The type `{p_1, ..., p_{n-1}}` if every flag sees the same rank-1
/// section sizes, `None` otherwise.
pub fn schlafli(lattice: &FaceLattice) -> Result<Option<SchlafliSymbol>> {
    let graph = FlagGraph::new(lattice)?;
    Ok(schlafli_in(&graph))
}

pub fn schlafli_in(graph: &FlagGraph) -> Option<SchlafliSymbol> {
    let n = graph.exchange_ranks();
    let mut entries: Option<Vec<usize>> = None;
    for t in 0..graph.len() {
        let here: Vec<usize> = (1..n).map(|i| graph.section_size(t, i)).collect();
        match &entries {
            None => entries = Some(here),
            Some(e) if *e != here => return None,
            Some(_) => {}
        }
    }
    entries.map(SchlafliSymbol)
}

/// Vertex set of every face, as bitsets over vertex ordinals.
fn vertex_bitsets(lattice: &FaceLattice) -> Vec<FixedBitSet> {
    let v = lattice.count(0);
    let mut sets = vec![FixedBitSet::with_capacity(v); lattice.len()];
    for f in lattice.faces() {
        if lattice.face_rank(f) == 0 {
            sets[f.index()].insert(lattice.vertex_ordinal(f));
        } else {
            for &s in lattice.subs(f) {
                let (lo, hi) = sets.split_at_mut(f.index());
                hi[0].union_with(&lo[s.index()]);
            }
        }
    }
    sets
}

/// The set-family form of `lattice`, if its faces are determined by their
/// vertex sets and inclusion of vertex sets reproduces the order.
pub fn vertex_set_complex(lattice: &FaceLattice) -> Option<VertexSetComplex> {
    let sets = vertex_bitsets(lattice);
    let (bottom, top) = (lattice.bottom(), lattice.top());
    let proper = |f: FaceId| f != bottom && f != top;

    // V_F ⊆ V_G must imply F <= G. Any such G lies above the least vertex
    // of F, so only the up-set of that vertex needs checking.
    for f in lattice.faces().filter(|&f| proper(f)) {
        let first = sets[f.index()].ones().next()?;
        let vertex = lattice.faces_of_rank(0).nth(first)?;
        let mut stack = vec![vertex];
        let mut seen = std::collections::HashSet::from([vertex]);
        let mut above_f = std::collections::HashSet::new();
        let mut stack_f = vec![f];
        while let Some(g) = stack_f.pop() {
            if above_f.insert(g) {
                stack_f.extend_from_slice(lattice.sups(g));
            }
        }
        while let Some(g) = stack.pop() {
            if proper(g) && sets[f.index()].is_subset(&sets[g.index()]) && !above_f.contains(&g) {
                return None;
            }
            for &h in lattice.sups(g) {
                if seen.insert(h) {
                    stack.push(h);
                }
            }
        }
    }

    let mut faces_by_rank = Vec::new();
    for r in -1..=lattice.rank() {
        let mut rank_faces: Vec<Vec<u32>> =
            lattice.faces_of_rank(r).map(|f| sets[f.index()].ones().map(|i| i as u32).collect()).collect();
        if r == lattice.rank() && r >= 0 {
            rank_faces = vec![(0..lattice.count(0) as u32).collect()];
        }
        faces_by_rank.push(rank_faces);
    }
    // Injectivity on proper faces follows from the order embedding.
    Some(VertexSetComplex::new_unchecked(lattice.rank(), lattice.count(0), faces_by_rank))
}

pub fn is_vertex_describable(lattice: &FaceLattice) -> bool {
    vertex_set_complex(lattice).is_some()
}

/// A pair of faces without a unique least upper bound, if there is one.
/// A finite bounded poset with all joins is a lattice.
pub fn lattice_witness(lattice: &FaceLattice) -> Option<(FaceId, FaceId)> {
    let faces: Vec<FaceId> = lattice.faces().collect();
    for (i, &a) in faces.iter().enumerate() {
        for &b in &faces[i + 1..] {
            if lattice.leq(a, b) || lattice.leq(b, a) {
                continue;
            }
            let mut common = lattice.up_set(a).clone();
            common.intersect_with(lattice.up_set(b));
            let least_rank = common.ones().map(|c| lattice.face_rank(FaceId::from(c))).min();
            let minimal: Vec<usize> =
                common.ones().filter(|&c| Some(lattice.face_rank(FaceId::from(c))) == least_rank).collect();
            let unique = match minimal[..] {
                [c] => common.is_subset(lattice.up_set(FaceId::from(c))),
                _ => false,
            };
            if !unique {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_lattice(lattice: &FaceLattice) -> bool {
    lattice_witness(lattice).is_none()
}

/// Whether every facet is isomorphic to the first one.
pub fn is_equifacetted(lattice: &FaceLattice) -> Result<bool> {
    let mut facets = lattice.facets();
    let Some(first) = facets.next() else {
        return Ok(true);
    };
    let reference = lattice.face_polytope(first)?.lattice;
    for f in facets {
        if !isomorphic(&reference, &lattice.face_polytope(f)?.lattice)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of edges at each vertex, indexed by vertex ordinal.
pub fn vertex_valences(lattice: &FaceLattice) -> Vec<usize> {
    lattice.vertices().map(|v| lattice.sups(v).len()).collect()
}
