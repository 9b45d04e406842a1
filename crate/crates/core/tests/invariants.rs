use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;

use polyforge::io::{serialize, PolytopeDocument};
use polyforge::symmetry::{automorphisms_in, face_orbits, flag_orbits, stabilizer_image, vertex_stabilizer};
use polyforge::{isomorphic, validate_polytope, AutomorphismGroup, FaceId, FaceLattice, FlagGraph};

struct Instance {
    name: String,
    lattice: FaceLattice,
    graph: FlagGraph,
    group: AutomorphismGroup,
}

fn instances() -> &'static [Instance] {
    static CELL: OnceLock<Vec<Instance>> = OnceLock::new();
    CELL.get_or_init(|| {
        polyforge::corpus::standard()
            .unwrap()
            .into_iter()
            .map(|(name, lattice)| {
                let graph = FlagGraph::new(&lattice).unwrap();
                let group = automorphisms_in(&lattice, &graph);
                Instance { name, lattice, graph, group }
            })
            .collect()
    })
}

#[test]
fn corpus_instances_are_polytopes() {
    for inst in instances() {
        assert!(validate_polytope(&inst.lattice).is_polytope(), "{}", inst.name);
    }
}

#[test]
fn group_order_times_flag_orbits_is_flag_count() {
    for inst in instances() {
        let orbits = flag_orbits(&inst.graph, &inst.group);
        assert_eq!(inst.group.order() * orbits.count(), inst.graph.len(), "{}", inst.name);
        // Free action: every flag orbit has |Γ| elements.
        assert!(orbits.classes.iter().all(|c| c.len() == inst.group.order()), "{}", inst.name);
    }
}

#[test]
fn orbit_stabilizer_on_vertices() {
    for inst in instances().iter().filter(|i| i.lattice.rank() >= 1) {
        let orbits = face_orbits(&inst.lattice, &inst.group, 0);
        for class in &orbits.classes {
            let stab = vertex_stabilizer(&inst.group, FaceId::from(class[0]));
            assert_eq!(class.len() * stab.order(), inst.group.order(), "{}", inst.name);
        }
    }
}

#[test]
fn face_orbits_bounded_by_vertex_figure_orbits() {
    let mut checked = 0;
    for inst in instances() {
        let n = inst.lattice.rank();
        if n < 2 || face_orbits(&inst.lattice, &inst.group, 0).count() != 1 {
            continue;
        }
        let vertex = inst.lattice.vertices().next().unwrap();
        let figure = inst.lattice.vertex_figure(vertex).unwrap();
        let image = stabilizer_image(&vertex_stabilizer(&inst.group, vertex), &figure);
        for j in 1..n {
            let here = face_orbits(&inst.lattice, &inst.group, j).count();
            let below = face_orbits(&figure.lattice, &image, j - 1).count();
            assert!(here <= below, "{} j={j}: {here} > {below}", inst.name);
        }
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn groups_are_closed_and_preserve_order() {
    for inst in instances().iter().filter(|i| i.group.order() <= 400) {
        let elems = &inst.group.elements;
        let all: Vec<usize> = (0..elems.len()).collect();
        assert!(inst.group.closed_on(&all, &all), "{}", inst.name);
        assert!(elems.iter().all(|e| e.preserves(&inst.lattice)), "{}", inst.name);
    }
}

fn shuffled_document(lattice: &FaceLattice, keys: &[u64]) -> PolytopeDocument {
    let mut doc = PolytopeDocument::parse(&serialize(lattice, BTreeMap::new())).unwrap();
    // Rename every face to a fresh id and scramble the listing order.
    let rename = |id: u64| keys[id as usize] * 1000 + id;
    for face in &mut doc.faces {
        face.id = rename(face.id);
        face.vertex_set = None;
    }
    for cover in &mut doc.covers {
        *cover = [rename(cover[0]), rename(cover[1])];
    }
    doc.faces.sort_by_key(|f| f.id);
    doc.covers.reverse();
    doc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacency_is_a_fixed_point_free_involution(pick in any::<prop::sample::Index>(), t in any::<prop::sample::Index>()) {
        let inst = &instances()[pick.index(instances().len())];
        let g = &inst.graph;
        let t = t.index(g.len());
        for i in 0..g.exchange_ranks() {
            let u = g.adjacent(t, i);
            prop_assert_ne!(u, t);
            prop_assert_eq!(g.adjacent(u, i), t);
            let differ = g.flag(t).iter().zip(g.flag(u)).filter(|(a, b)| a != b).count();
            prop_assert_eq!(differ, 1);
        }
    }

    #[test]
    fn relabelled_documents_parse_to_isomorphic_lattices(pick in any::<prop::sample::Index>(), keys in prop::collection::vec(0u64..1000, 400)) {
        let inst = &instances()[pick.index(instances().len())];
        prop_assume!(inst.lattice.len() <= keys.len());
        let doc = shuffled_document(&inst.lattice, &keys);
        let back = doc.to_lattice().unwrap();
        prop_assert!(isomorphic(&back, &inst.lattice).unwrap());
        // Canonical output does not depend on the input labelling.
        let text = serialize(&inst.lattice, BTreeMap::new());
        let reparsed = PolytopeDocument::parse(&text).unwrap().to_lattice().unwrap();
        prop_assert_eq!(serialize(&reparsed, BTreeMap::new()), text);
    }

    #[test]
    fn products_and_inverses_stay_in_the_group(pick in any::<prop::sample::Index>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let inst = &instances()[pick.index(instances().len())];
        let elems = &inst.group.elements;
        let (x, y) = (&elems[a.index(elems.len())], &elems[b.index(elems.len())]);
        let product = x.compose(y);
        prop_assert!(elems.contains(&product));
        prop_assert!(x.compose(&x.inverse()).is_identity());
    }
}
