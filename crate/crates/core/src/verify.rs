//! Theorem checks on concrete instances. Every count here comes from brute
//! force on an explicit `2^K`, never from the formulas being checked.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Deserialize;

use crate::constructions::{
    is_simplicial, polygon, power_2k, simplex, symmetry_broken_torus, ExplicitPower, PowerMode, PowerPolytope,
    VertexSetComplex, DEFAULT_THRESHOLD,
};
use crate::error::{PolytopeError, Result};
use crate::flags::FlagGraph;
use crate::io::load_polytope;
use crate::lattice::{FaceId, FaceLattice};
use crate::properties::{f_vector, vertex_set_complex, vertex_valences};
use crate::symmetry::{
    automorphisms_in, face_orbits, flag_orbits, isomorphic, stabilizer_image, vertex_stabilizer, AutomorphismGroup,
};

pub const FIXTURE_DOCUMENT: &str = include_str!("../fixtures/asymmetric_k.poly.json");
pub const FIXTURE_CERTIFICATE: &str = include_str!("../fixtures/asymmetric_k.cert.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    PowerProps,
    FlagOrbits,
    FaceOrbits,
    Pipeline36,
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "power-props" => Ok(Theorem::PowerProps),
            "flag-orbits" => Ok(Theorem::FlagOrbits),
            "face-orbits" => Ok(Theorem::FaceOrbits),
            "pipeline-36" => Ok(Theorem::Pipeline36),
            _ => Err(format!("unknown theorem {s:?} (power-props, flag-orbits, face-orbits, pipeline-36)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub label: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

impl Claim {
    pub fn new(label: impl Into<String>, computed: impl fmt::Display, expected: impl fmt::Display) -> Self {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        Claim { label: label.into(), pass: computed == expected, computed, expected }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: computed {}, expected {}", self.label, self.computed, self.expected)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Certificate {
    pub seed: u64,
    pub max_vertices: usize,
    pub f_vector: Vec<usize>,
    pub flag_count: usize,
    pub group_order: usize,
}

/// The frozen asymmetric `K` and its certificate.
pub fn fixture() -> Result<(VertexSetComplex, Certificate)> {
    let (_, lattice) = load_polytope(FIXTURE_DOCUMENT)?;
    let k = vertex_set_complex(&lattice).ok_or(PolytopeError::NotVertexDescribable)?;
    let cert = serde_json::from_str(FIXTURE_CERTIFICATE).map_err(|e| PolytopeError::InvalidDocument(e.to_string()))?;
    Ok((k, cert))
}

pub fn explicit_power(k: &VertexSetComplex) -> Result<ExplicitPower> {
    match power_2k(k, PowerMode::Explicit { threshold: DEFAULT_THRESHOLD })? {
        PowerPolytope::Explicit(p) => Ok(*p),
        PowerPolytope::Virtual { .. } => unreachable!("explicit mode"),
    }
}

/// `K`, `2^K`, and both automorphism groups by brute force.
pub struct PowerStudy {
    pub name: String,
    pub k_graph: FlagGraph,
    pub k_group: AutomorphismGroup,
    pub power: ExplicitPower,
    pub graph: FlagGraph,
    pub group: AutomorphismGroup,
}

impl PowerStudy {
    pub fn new(name: &str, k: &VertexSetComplex) -> Result<Self> {
        let power = explicit_power(k)?;
        let k_graph = FlagGraph::new(&power.k_lattice)?;
        let k_group = automorphisms_in(&power.k_lattice, &k_graph);
        let graph = FlagGraph::new(&power.lattice)?;
        let group = automorphisms_in(&power.lattice, &graph);
        Ok(PowerStudy { name: name.to_string(), k_graph, k_group, power, graph, group })
    }

    fn label(&self, what: &str) -> String {
        format!("{} {what}", self.name)
    }

    fn k_lattice(&self) -> &FaceLattice {
        &self.power.k_lattice
    }

    fn p(&self) -> &FaceLattice {
        &self.power.lattice
    }

    /// Vertex figures at the all-zero, all-one and alternating points.
    pub fn vertex_figure_claim(&self) -> Result<Claim> {
        let v = self.power.v();
        let all = (1u64 << v) - 1;
        let mut samples = vec![0, all, all & 0x5555_5555_5555_5555];
        samples.dedup();
        let mut good = 0;
        for &eps in &samples {
            let figure = self.p().vertex_figure(self.power.vertex(eps))?;
            good += usize::from(isomorphic(&figure.lattice, self.k_lattice())?);
        }
        Ok(Claim::new(self.label("(a) sampled vertex-figures isomorphic to K"), good, samples.len()))
    }

    /// Every facet `F(ε)` against an explicit `2^F`.
    pub fn facet_claim(&self) -> Result<Claim> {
        let mut models: HashMap<FaceId, FaceLattice> = HashMap::new();
        let (mut good, mut total) = (0, 0);
        for facet in self.p().facets() {
            let base = self.power.faces[facet.index()].as_ref().expect("facets are F(ε)").base;
            if let Entry::Vacant(slot) = models.entry(base) {
                let section = self.k_lattice().face_polytope(base)?;
                let f = vertex_set_complex(&section.lattice).ok_or(PolytopeError::NotVertexDescribable)?;
                slot.insert(explicit_power(&f)?.lattice);
            }
            let here = self.p().face_polytope(facet)?.lattice;
            good += usize::from(isomorphic(&here, &models[&base])?);
            total += 1;
        }
        Ok(Claim::new(self.label("(b) facets isomorphic to 2^F"), good, total))
    }

    pub fn group_claims(&self) -> Result<Vec<Claim>> {
        let v = self.power.v();
        let generated = self.power.power_group()?;
        Ok(vec![
            Claim::new(self.label("(c) |Γ(2^K)|"), self.group.order(), (1usize << v) * self.k_group.order()),
            Claim::new(
                self.label("(c) generated group equals brute-force group"),
                generated.same_elements(&self.group),
                true,
            ),
        ])
    }

    pub fn vertex_claims(&self) -> Result<Vec<Claim>> {
        let vertex = self.power.vertex(0);
        let stabilizer = vertex_stabilizer(&self.group, vertex);
        let image = stabilizer_image(&stabilizer, &self.p().vertex_figure(vertex)?);
        Ok(vec![
            Claim::new(self.label("(d) vertex orbits"), face_orbits(self.p(), &self.group, 0).count(), 1),
            Claim::new(self.label("(d) vertex-stabilizer order"), stabilizer.order(), self.k_group.order()),
            Claim::new(
                self.label("(d) stabilizer acts faithfully on the vertex-figure"),
                image.order(),
                self.k_group.order(),
            ),
        ])
    }

    pub fn regularity_claim(&self) -> Claim {
        if self.k_group.order() == self.k_graph.len() {
            Claim::new(
                self.label("(e) K regular, flag orbits of 2^K"),
                flag_orbits(&self.graph, &self.group).count(),
                1,
            )
        } else {
            Claim::new(self.label("(e) K not regular, nothing to check"), "vacuous", "vacuous")
        }
    }

    pub fn property_claims(&self) -> Result<Vec<Claim>> {
        let mut claims = vec![self.vertex_figure_claim()?, self.facet_claim()?];
        claims.extend(self.group_claims()?);
        claims.extend(self.vertex_claims()?);
        claims.push(self.regularity_claim());
        Ok(claims)
    }

    /// For an asymmetric `K`: `|Γ(2^K)| = 2^v` and one flag orbit per flag of `K`.
    pub fn flag_orbit_claims(&self) -> Vec<Claim> {
        vec![
            Claim::new(self.label("|Γ(2^K)|"), self.group.order(), 1usize << self.power.v()),
            Claim::new(
                self.label("flag orbits of 2^K"),
                flag_orbits(&self.graph, &self.group).count(),
                self.k_graph.len(),
            ),
        ]
    }

    /// For an asymmetric `K`: one vertex orbit and `f_{j-1}(K)` orbits of `j`-faces.
    pub fn face_orbit_claims(&self) -> Vec<Claim> {
        let k_f = f_vector(self.k_lattice());
        (0..self.p().rank())
            .map(|j| {
                let expected = if j == 0 { 1 } else { k_f.get(j - 1) };
                Claim::new(
                    self.label(&format!("{j}-face orbits")),
                    face_orbits(self.p(), &self.group, j).count(),
                    expected,
                )
            })
            .collect()
    }
}

/// Checks the certificate of the frozen fixture against a fresh computation.
pub fn certificate_claims(k: &VertexSetComplex, cert: &Certificate) -> Result<Vec<Claim>> {
    let lattice = k.to_lattice()?;
    let graph = FlagGraph::new(&lattice)?;
    let group = automorphisms_in(&lattice, &graph);
    Ok(vec![
        Claim::new("fixture f-vector", format!("{:?}", f_vector(&lattice).0), format!("{:?}", cert.f_vector)),
        Claim::new("fixture flag count", graph.len(), cert.flag_count),
        Claim::new("fixture group order", group.order(), cert.group_order),
        Claim::new("fixture is asymmetric", group.order(), 1),
        Claim::new("fixture is simplicial", is_simplicial(&lattice)?, true),
        Claim::new("fixture has at most 10 vertices", k.vertex_count() <= 10, true),
    ])
}

pub fn power_props_instances() -> Result<Vec<(String, VertexSetComplex)>> {
    let complex = |l: FaceLattice| vertex_set_complex(&l).ok_or(PolytopeError::NotVertexDescribable);
    Ok(vec![
        ("triangle".into(), complex(simplex(2)?)?),
        ("square".into(), complex(polygon(4)?)?),
        ("tetrahedron".into(), complex(simplex(3)?)?),
        ("fixture".into(), fixture()?.0),
    ])
}

/// `{3,6}_(s,0)` through the symmetry-breaking pipeline.
pub fn pipeline_claims(s: usize) -> Result<Vec<Claim>> {
    let k = symmetry_broken_torus(s)?;
    let graph = FlagGraph::new(&k)?;
    let group = automorphisms_in(&k, &graph);
    let valences = vertex_valences(&k);
    let f = f_vector(&k);
    let label = |what: &str| format!("s={s} {what}");
    let mut claims = vec![
        Claim::new(label("simplicial"), is_simplicial(&k)?, true),
        Claim::new(label("3-valent vertices"), valences.iter().filter(|&&d| d == 3).count(), 1),
        Claim::new(label("new vertex is 3-valent"), valences.last().copied().unwrap_or(0), 3),
        Claim::new(label("Euler characteristic"), f.euler_characteristic(), 0),
        Claim::new(label("|Γ(K)|"), group.order(), 1),
    ];
    if s == 2 {
        claims.push(Claim::new(
            label("(vertices, edges, triangles)"),
            format!("{:?}", (f.get(0), f.get(1), f.get(2))),
            "(25, 75, 50)",
        ));
        claims.push(Claim::new(label("flags"), graph.len(), 300));
    }
    Ok(claims)
}

pub fn verify(theorem: Theorem) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    match theorem {
        Theorem::PowerProps => {
            for (name, k) in power_props_instances()? {
                claims.extend(PowerStudy::new(&name, &k)?.property_claims()?);
            }
        }
        Theorem::FlagOrbits | Theorem::FaceOrbits => {
            let (k, cert) = fixture()?;
            claims.extend(certificate_claims(&k, &cert)?);
            let study = PowerStudy::new("fixture", &k)?;
            claims.extend(match theorem {
                Theorem::FlagOrbits => study.flag_orbit_claims(),
                _ => study.face_orbit_claims(),
            });
        }
        Theorem::Pipeline36 => {
            for s in [2, 3] {
                claims.extend(pipeline_claims(s)?);
            }
        }
    }
    Ok(claims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::find_small_asymmetric_fixture;

    #[test]
    fn frozen_fixture_is_reproducible() {
        let (_, cert) = fixture().unwrap();
        let again = find_small_asymmetric_fixture(cert.seed, cert.max_vertices).unwrap();
        assert_eq!(again.to_lattice().unwrap(), load_polytope(FIXTURE_DOCUMENT).unwrap().1);
    }

    #[test]
    fn claims_compare_rendered_values() {
        let c = Claim::new("x", 3, 4);
        assert!(!c.pass);
        assert_eq!(c.to_string(), "FAIL x: computed 3, expected 4");
    }

    #[test]
    fn triangle_power_properties_hold() {
        let (_, k) = power_props_instances().unwrap().swap_remove(0);
        let study = PowerStudy::new("triangle", &k).unwrap();
        for c in study.property_claims().unwrap() {
            assert!(c.pass, "{c}");
        }
    }
}
