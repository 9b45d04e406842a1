//! Seed polytopes and derived constructions: order complex, stellar
//! subdivision of a facet, and the generalized cube `2^K`.

mod complex;
mod fixture;
mod order_complex;
mod power;
mod seeds;
mod subdivide;

pub use complex::VertexSetComplex;
pub use fixture::find_small_asymmetric_fixture;
pub use order_complex::order_complex;
pub use power::{
    power_2k, virtual_counts, ExplicitPower, PowerCounts, PowerFace, PowerMode, PowerPolytope, DEFAULT_THRESHOLD,
};
pub use seeds::{hypercube, polygon, simplex, torus_map, TorusFamily, TorusMapSpec};
pub use subdivide::{is_simplicial, min_facet, stellar_subdivide_facet};

use crate::error::{PolytopeError, Result};
use crate::lattice::FaceLattice;
use crate::properties::schlafli;

/// `{3,6}_(s,0)`, then its order complex, then the stellar subdivision of
/// the lexicographically least facet. Generically the result has a trivial
/// automorphism group.
pub fn symmetry_broken_torus(s: usize) -> Result<FaceLattice> {
    let torus = torus_map(TorusMapSpec { family: TorusFamily::Triangular, s })?;
    let symbol =
        schlafli(&torus)?.ok_or_else(|| PolytopeError::ValidationFailed("torus map is not equivelar".into()))?;
    let mut entries = symbol.0.clone();
    entries.sort_unstable();
    entries.dedup();
    if entries.len() != symbol.0.len() {
        return Err(PolytopeError::BadParameter(format!("Schläfli entries {symbol} are not distinct")));
    }
    let complex = order_complex(&torus)?;
    stellar_subdivide_facet(&complex, min_facet(&complex))
}
