//! One-shot structural analysis of a polytope, as text or JSON.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PolytopeError, Result};
use crate::flags::FlagGraph;
use crate::lattice::FaceLattice;
use crate::properties::{f_vector, is_equifacetted, is_lattice, is_vertex_describable, schlafli_in};
use crate::symmetry::{automorphisms_in, face_orbits, facets_regular, flag_orbits};
use crate::validate::validate_polytope;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub rank: i32,
    pub f_vector: Vec<usize>,
    pub flag_count: usize,
    pub schlafli: Option<Vec<usize>>,
    pub group_order: usize,
    pub flag_orbit_count: usize,
    /// Orbits on faces of rank 0..rank-1.
    pub face_orbit_counts: Vec<usize>,
    pub regular: bool,
    pub vertex_transitive: bool,
    pub semi_regular: bool,
    pub equifacetted: bool,
    pub vertex_describable: bool,
    pub lattice: bool,
}

pub fn analyze(lattice: &FaceLattice) -> Result<AnalysisReport> {
    if let Some(why) = validate_polytope(lattice).failure() {
        return Err(PolytopeError::ValidationFailed(why));
    }
    let graph = FlagGraph::new(lattice)?;
    let group = automorphisms_in(lattice, &graph);
    let n = lattice.rank();
    let face_orbit_counts: Vec<usize> = (0..n).map(|j| face_orbits(lattice, &group, j).count()).collect();
    let vertex_transitive = face_orbit_counts.first().is_none_or(|&c| c <= 1);
    Ok(AnalysisReport {
        rank: n,
        f_vector: f_vector(lattice).0,
        flag_count: graph.len(),
        schlafli: schlafli_in(&graph).map(|s| s.0),
        group_order: group.order(),
        flag_orbit_count: flag_orbits(&graph, &group).count(),
        face_orbit_counts,
        regular: group.order() == graph.len(),
        vertex_transitive,
        semi_regular: vertex_transitive && facets_regular(lattice)?,
        equifacetted: is_equifacetted(lattice)?,
        vertex_describable: is_vertex_describable(lattice),
        lattice: is_lattice(lattice),
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

fn list(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank:               {}", self.rank)?;
        writeln!(f, "f-vector:           ({})", list(&self.f_vector))?;
        writeln!(f, "flags:              {}", self.flag_count)?;
        match &self.schlafli {
            Some(s) => writeln!(f, "schlafli:           {{{}}}", list(s))?,
            None => writeln!(f, "schlafli:           none")?,
        }
        writeln!(f, "group order:        {}", self.group_order)?;
        writeln!(f, "flag orbits:        {}", self.flag_orbit_count)?;
        writeln!(f, "face orbits:        ({})", list(&self.face_orbit_counts))?;
        writeln!(f, "regular:            {}", self.regular)?;
        writeln!(f, "vertex-transitive:  {}", self.vertex_transitive)?;
        writeln!(f, "semi-regular:       {}", self.semi_regular)?;
        writeln!(f, "equifacetted:       {}", self.equifacetted)?;
        writeln!(f, "vertex-describable: {}", self.vertex_describable)?;
        writeln!(f, "lattice:            {}", self.lattice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::hypercube;

    #[test]
    fn cube_report() {
        let r = analyze(&hypercube(3).unwrap()).unwrap();
        assert_eq!(r.f_vector, vec![1, 8, 12, 6, 1]);
        assert_eq!((r.flag_count, r.group_order, r.flag_orbit_count), (48, 48, 1));
        assert_eq!(r.schlafli, Some(vec![4, 3]));
        assert_eq!(r.face_orbit_counts, vec![1, 1, 1]);
        assert!(r.regular && r.vertex_transitive && r.semi_regular && r.equifacetted);
        assert!(r.vertex_describable && r.lattice);
        assert!(r.to_string().contains("{4, 3}"));
    }
}
