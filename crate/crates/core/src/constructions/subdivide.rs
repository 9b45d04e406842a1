use crate::error::{PolytopeError, Result};
use crate::lattice::{FaceId, FaceLattice};
use crate::properties::f_vector;
use crate::symmetry::isomorphic;
use crate::validate::validate_polytope;

use super::simplex;

/// Whether every facet of `lattice` is a simplex.
pub fn is_simplicial(lattice: &FaceLattice) -> Result<bool> {
    Ok(first_non_simplex(lattice)?.is_none())
}

fn first_non_simplex(lattice: &FaceLattice) -> Result<Option<FaceId>> {
    let n = lattice.rank();
    if n < 1 {
        return Ok(None);
    }
    let model = simplex((n - 1) as usize)?;
    let model_f = f_vector(&model);
    for facet in lattice.facets() {
        let face = lattice.face_polytope(facet)?.lattice;
        if f_vector(&face) != model_f || !isomorphic(&face, &model)? {
            return Ok(Some(facet));
        }
    }
    Ok(None)
}

/// The facet whose sorted vertex list is lexicographically least.
pub fn min_facet(lattice: &FaceLattice) -> FaceId {
    lattice.facets().min_by_key(|&f| lattice.vertices_of(f)).expect("polytope of rank >= 1 has a facet")
}

/// Stellar subdivision of one simplex facet: the facet is replaced by the
/// cone from a new vertex `z` over its boundary. Every other face is kept.
///
/// The new vertex gets the largest vertex id; the cone faces follow the old
/// faces within each rank.
pub fn stellar_subdivide_facet(lattice: &FaceLattice, facet: FaceId) -> Result<FaceLattice> {
    let n = lattice.rank();
    if n < 1 || facet.index() >= lattice.len() || lattice.face_rank(facet) != n - 1 {
        return Err(PolytopeError::BadParameter(format!("face {facet} is not a facet")));
    }
    if let Some(bad) = first_non_simplex(lattice)? {
        return Err(PolytopeError::NotSimplicial(bad));
    }

    let boundary = lattice.face_polytope(facet)?;
    let (bottom, top) = (lattice.bottom(), lattice.top());
    // Proper faces of the facet, in parent id order.
    let cone_of: Vec<FaceId> = boundary.parent_ids.iter().copied().filter(|&r| r != bottom && r != facet).collect();

    // Input ids: old faces (minus the facet) keep their position, then z,
    // then the cones.
    let old: Vec<FaceId> = lattice.faces().filter(|&f| f != facet).collect();
    let mut input_id = vec![usize::MAX; lattice.len()];
    for (i, &f) in old.iter().enumerate() {
        input_id[f.index()] = i;
    }
    let z = old.len();
    let cone_id = |r: FaceId| z + 1 + cone_of.binary_search(&r).unwrap();

    let mut ranks: Vec<i32> = old.iter().map(|&f| lattice.face_rank(f)).collect();
    ranks.push(0);
    ranks.extend(cone_of.iter().map(|&r| lattice.face_rank(r) + 1));

    let mut covers: Vec<(usize, usize)> = lattice
        .covers()
        .filter(|&(lo, hi)| lo != facet && hi != facet)
        .map(|(lo, hi)| (input_id[lo.index()], input_id[hi.index()]))
        .collect();
    covers.push((input_id[bottom.index()], z));
    for &r in &cone_of {
        let c = cone_id(r);
        covers.push((input_id[r.index()], c));
        if lattice.face_rank(r) == 0 {
            covers.push((z, c));
        }
        for &s in lattice.subs(r) {
            if s != bottom {
                covers.push((cone_id(s), c));
            }
        }
        if lattice.face_rank(r) == n - 2 {
            covers.push((c, input_id[top.index()]));
        }
    }

    let out = FaceLattice::from_covers(n, &ranks, &covers)?;
    match validate_polytope(&out).failure() {
        None => Ok(out),
        Some(why) => Err(PolytopeError::ValidationFailed(why)),
    }
}
