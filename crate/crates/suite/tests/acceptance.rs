//! Acceptance criteria, one test each. Every test prints a PASS/FAIL line per
//! claim and fails if any claim fails.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use polyforge::constructions::{
    find_small_asymmetric_fixture, hypercube, polygon, simplex, torus_map, virtual_counts, TorusFamily, TorusMapSpec,
};
use polyforge::io::{parse_lattice, serialize};
use polyforge::properties::{is_vertex_describable, vertex_set_complex};
use polyforge::symmetry::{automorphisms_in, face_orbits, flag_orbits, stabilizer_image, vertex_stabilizer};
use polyforge::verify::{
    certificate_claims, explicit_power, fixture, pipeline_claims, power_props_instances, Claim, PowerStudy,
    FIXTURE_DOCUMENT,
};
use polyforge::{analyze, f_vector, isomorphic, FaceId, FlagGraph};
use polyforge_suite::{gate, within};

fn fixture_study() -> &'static PowerStudy {
    static CELL: OnceLock<PowerStudy> = OnceLock::new();
    CELL.get_or_init(|| PowerStudy::new("fixture", &fixture().unwrap().0).unwrap())
}

#[test]
fn criterion_1_cube_identity() {
    let start = Instant::now();
    let p = explicit_power(&vertex_set_complex(&simplex(2).unwrap()).unwrap()).unwrap();
    let graph = FlagGraph::new(&p.lattice).unwrap();
    let group = automorphisms_in(&p.lattice, &graph);
    let claims = vec![
        Claim::new(
            "2^triangle isomorphic to hypercube(3)",
            isomorphic(&p.lattice, &hypercube(3).unwrap()).unwrap(),
            true,
        ),
        Claim::new("f-vector", f_vector(&p.lattice), "(1, 8, 12, 6, 1)"),
        Claim::new("flags", graph.len(), 48),
        Claim::new("group order", group.order(), 48),
        Claim::new("flag orbits", flag_orbits(&graph, &group).count(), 1),
        within("runtime", start, Duration::from_secs(1)),
    ];
    gate("1", &claims);
}

// 2^K is the v-cube exactly when K is a simplex; for the square it is the
// rank 3 map {4,4} with 16 vertices, so this criterion cannot hold as stated.
#[test]
fn criterion_2_four_cube_identity() {
    let start = Instant::now();
    let p = explicit_power(&vertex_set_complex(&polygon(4).unwrap()).unwrap()).unwrap();
    let graph = FlagGraph::new(&p.lattice).unwrap();
    let group = automorphisms_in(&p.lattice, &graph);
    let claims = vec![
        Claim::new(
            "2^square isomorphic to hypercube(4)",
            isomorphic(&p.lattice, &hypercube(4).unwrap()).unwrap(),
            true,
        ),
        Claim::new("group order", group.order(), 384),
        within("runtime", start, Duration::from_secs(5)),
    ];
    gate("2", &claims);
}

#[test]
fn criterion_3_vertex_describability_boundary() {
    let start = Instant::now();
    let mut claims: Vec<Claim> = (2..=5)
        .map(|s| {
            let torus = torus_map(TorusMapSpec { family: TorusFamily::Square, s }).unwrap();
            Claim::new(format!("{{4,4}}_({s},0) vertex-describable"), is_vertex_describable(&torus), s >= 3)
        })
        .collect();
    claims.push(within("runtime", start, Duration::from_secs(1)));
    gate("3", &claims);
}

#[test]
fn criterion_4_power_properties() {
    let start = Instant::now();
    let mut claims = Vec::new();
    for (name, k) in power_props_instances().unwrap() {
        let study;
        let study = if name == "fixture" {
            fixture_study()
        } else {
            study = PowerStudy::new(&name, &k).unwrap();
            &study
        };
        claims.extend(study.property_claims().unwrap());
    }
    claims.push(within("runtime", start, Duration::from_secs(120)));
    gate("4", &claims);
}

#[test]
fn criterion_5_flag_orbit_theorem() {
    let start = Instant::now();
    let (k, cert) = fixture().unwrap();
    // The certificate gates the theorem check.
    let mut claims = certificate_claims(&k, &cert).unwrap();
    if claims.iter().all(|c| c.pass) {
        claims.extend(fixture_study().flag_orbit_claims());
    }
    claims.push(within("runtime", start, Duration::from_secs(300)));
    gate("5", &claims);
}

#[test]
fn criterion_6_face_orbit_theorem() {
    let (k, cert) = fixture().unwrap();
    let mut claims = certificate_claims(&k, &cert).unwrap();
    claims.extend(fixture_study().face_orbit_claims());
    gate("6", &claims);
}

#[test]
fn criterion_7_symmetry_breaking_pipeline() {
    let start = Instant::now();
    let mut claims = pipeline_claims(2).unwrap();
    claims.extend(pipeline_claims(3).unwrap());
    claims.push(within("runtime", start, Duration::from_secs(120)));
    gate("7", &claims);
}

#[test]
fn criterion_8_orbit_counting_identities() {
    let mut claims = Vec::new();
    let (mut free, mut stabilizer, mut lemma, mut agree) = (0, 0, 0, 0);
    let (mut free_total, mut stabilizer_total, mut lemma_total, mut agree_total) = (0, 0, 0, 0);
    for (_, lattice) in polyforge::corpus::standard().unwrap() {
        let graph = FlagGraph::new(&lattice).unwrap();
        let group = automorphisms_in(&lattice, &graph);
        free_total += 1;
        free += usize::from(group.order() * flag_orbits(&graph, &group).count() == graph.len());

        if lattice.rank() >= 1 {
            for class in face_orbits(&lattice, &group, 0).classes {
                stabilizer_total += 1;
                let stab = vertex_stabilizer(&group, FaceId::from(class[0]));
                stabilizer += usize::from(class.len() * stab.order() == group.order());
            }
        }

        let n = lattice.rank();
        if n >= 2 && face_orbits(&lattice, &group, 0).count() == 1 {
            let vertex = lattice.vertices().next().unwrap();
            let figure = lattice.vertex_figure(vertex).unwrap();
            let image = stabilizer_image(&vertex_stabilizer(&group, vertex), &figure);
            for j in 1..n {
                lemma_total += 1;
                let here = face_orbits(&lattice, &group, j).count();
                lemma += usize::from(here <= face_orbits(&figure.lattice, &image, j - 1).count());
            }
        }

        if let Some(k) = vertex_set_complex(&lattice).filter(|k| k.vertex_count() <= 8 && n >= 1) {
            agree_total += 1;
            let counts = virtual_counts(&k).unwrap();
            let p = explicit_power(&k).unwrap();
            let pg = FlagGraph::new(&p.lattice).unwrap();
            let pgroup = automorphisms_in(&p.lattice, &pg);
            let explicit = (
                f_vector(&p.lattice).0.iter().map(|&x| x as u128).collect::<Vec<_>>(),
                pg.len() as u128,
                pgroup.order() as u128,
                flag_orbits(&pg, &pgroup).count() as u128,
                (0..p.lattice.rank()).map(|j| face_orbits(&p.lattice, &pgroup, j).count() as u128).collect::<Vec<_>>(),
            );
            let virt = (
                counts.f_vector,
                counts.flag_count,
                counts.group_order,
                counts.flag_orbit_count,
                counts.face_orbit_counts,
            );
            agree += usize::from(explicit == virt);
        }
    }
    claims.push(Claim::new("|Γ| × flag orbits = flags (instances)", free, free_total));
    claims.push(Claim::new("orbit-stabilizer on vertex orbits", stabilizer, stabilizer_total));
    claims.push(Claim::new("j-face orbits <= (j-1)-face orbits of the vertex-figure", lemma, lemma_total));
    claims.push(Claim::new("virtual counts = explicit brute force (v <= 8)", agree, agree_total));
    claims.push(Claim::new("vertex-transitive instances exercise the inequality", lemma_total > 0, true));
    gate("8", &claims);
}

#[test]
fn criterion_9_round_trip_and_determinism() {
    let mut claims = Vec::new();
    let (mut round, mut total) = (0, 0);
    for (_, lattice) in polyforge::corpus::standard().unwrap() {
        let text = serialize(&lattice, BTreeMap::new());
        let back = parse_lattice(&text).unwrap();
        total += 1;
        round += usize::from(isomorphic(&back, &lattice).unwrap() && serialize(&back, BTreeMap::new()) == text);
    }
    claims.push(Claim::new("corpus round trips", round, total));

    let fixture_back = parse_lattice(FIXTURE_DOCUMENT).unwrap();
    let meta = polyforge::io::PolytopeDocument::parse(FIXTURE_DOCUMENT).unwrap().metadata;
    claims.push(Claim::new("fixture document is canonical", serialize(&fixture_back, meta) == FIXTURE_DOCUMENT, true));

    let (_, cert) = fixture().unwrap();
    let once = find_small_asymmetric_fixture(cert.seed, cert.max_vertices).unwrap().to_lattice().unwrap();
    let twice = find_small_asymmetric_fixture(cert.seed, cert.max_vertices).unwrap().to_lattice().unwrap();
    claims.push(Claim::new(
        "fixture search is deterministic",
        serialize(&once, BTreeMap::new()) == serialize(&twice, BTreeMap::new()),
        true,
    ));
    claims.push(Claim::new("fixture search reproduces the frozen fixture", once == fixture_back, true));
    let cube = hypercube(4).unwrap();
    claims.push(Claim::new(
        "analysis is byte-identical across runs",
        analyze(&cube).unwrap().to_json() == analyze(&cube).unwrap().to_json(),
        true,
    ));
    gate("9", &claims);
}
