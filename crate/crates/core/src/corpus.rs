//! Named small polytopes, for tests and examples.

use crate::constructions::{
    hypercube, min_facet, order_complex, polygon, simplex, stellar_subdivide_facet, symmetry_broken_torus, torus_map,
    TorusFamily, TorusMapSpec, VertexSetComplex,
};
use crate::error::{PolytopeError, Result};
use crate::lattice::FaceLattice;
use crate::properties::vertex_set_complex;
use crate::verify::{explicit_power, fixture};

pub fn octahedron() -> Result<FaceLattice> {
    let mut facets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    VertexSetComplex::simplicial(6, &facets)?.to_lattice()
}

fn power(l: &FaceLattice) -> Result<FaceLattice> {
    let k = vertex_set_complex(l).ok_or(PolytopeError::NotVertexDescribable)?;
    Ok(explicit_power(&k)?.lattice)
}

/// Small polytopes of every kind the library builds, 28 in all.
pub fn standard() -> Result<Vec<(String, FaceLattice)>> {
    let mut out: Vec<(String, FaceLattice)> = Vec::new();
    for d in 0..=4 {
        out.push((format!("simplex({d})"), simplex(d)?));
    }
    for p in 3..=8 {
        out.push((format!("polygon({p})"), polygon(p)?));
    }
    for d in 1..=4 {
        out.push((format!("hypercube({d})"), hypercube(d)?));
    }
    for s in 2..=4 {
        out.push((format!("torus44({s})"), torus_map(TorusMapSpec { family: TorusFamily::Square, s })?));
    }
    for s in 2..=3 {
        out.push((format!("torus36({s})"), torus_map(TorusMapSpec { family: TorusFamily::Triangular, s })?));
    }
    out.push(("octahedron".into(), octahedron()?));
    let oct = octahedron()?;
    out.push(("stacked octahedron".into(), stellar_subdivide_facet(&oct, min_facet(&oct))?));
    out.push(("order complex of the cube".into(), order_complex(&hypercube(3)?)?));
    out.push(("fixture".into(), fixture()?.0.to_lattice()?));
    out.push(("2^triangle".into(), power(&simplex(2)?)?));
    out.push(("2^square".into(), power(&polygon(4)?)?));
    out.push(("2^pentagon".into(), power(&polygon(5)?)?));
    out.push(("symmetry-broken torus(2)".into(), symmetry_broken_torus(2)?));
    Ok(out)
}
