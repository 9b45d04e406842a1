//! Small asymmetric simplicial spheres, found by random stacking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{PolytopeError, Result};
use crate::lattice::FaceLattice;
use crate::properties::vertex_set_complex;
use crate::symmetry::automorphisms;

use super::{simplex, stellar_subdivide_facet, VertexSetComplex};

const MAX_SEARCH_VERTICES: usize = 12;
const MAX_ATTEMPTS: usize = 2000;

/// Stacks random facets of the tetrahedron boundary, restarting whenever
/// `max_vertices` is exceeded, until the automorphism group is trivial.
/// Deterministic in `seed`.
pub fn find_small_asymmetric_fixture(seed: u64, max_vertices: usize) -> Result<VertexSetComplex> {
    if max_vertices > MAX_SEARCH_VERTICES {
        return Err(PolytopeError::BadParameter(format!("max_vertices {max_vertices} exceeds {MAX_SEARCH_VERTICES}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tetrahedron = simplex(3)?;
    for _ in 0..MAX_ATTEMPTS {
        let mut sphere: FaceLattice = tetrahedron.clone();
        while sphere.count(0) < max_vertices {
            let facets: Vec<_> = sphere.facets().collect();
            let pick = facets[rng.gen_range(0..facets.len())];
            sphere = stellar_subdivide_facet(&sphere, pick)?;
            if automorphisms(&sphere)?.is_trivial() {
                return vertex_set_complex(&sphere).ok_or(PolytopeError::NotVertexDescribable);
            }
        }
    }
    Err(PolytopeError::SearchExhausted { attempts: MAX_ATTEMPTS })
}
