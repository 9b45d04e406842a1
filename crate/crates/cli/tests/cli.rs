use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use polyforge::io::{serialize, PolytopeDocument, SummaryDocument};
use serde_json::Value;

fn polyforge(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polyforge"))
        .args(args)
        .env_remove("POLYFORGE_THRESHOLD")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or_default()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&[u8]>) -> Vec<u8> {
    let out = polyforge(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn save(name: &str, bytes: &[u8]) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, bytes).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn proper_faces(doc: &[u8]) -> usize {
    let doc = PolytopeDocument::parse(std::str::from_utf8(doc).unwrap()).unwrap();
    doc.faces.iter().filter(|f| f.rank >= 0 && f.rank < doc.rank).count()
}

#[test]
fn generate_torus_and_simplex() {
    assert_eq!(proper_faces(&ok(&["generate", "torus44", "--s", "3"], None)), 36);
    let triangle = ok(&["generate", "simplex", "--d", "2"], None);
    let doc = PolytopeDocument::parse(std::str::from_utf8(&triangle).unwrap()).unwrap();
    assert_eq!((doc.rank, proper_faces(&triangle)), (2, 6));
}

#[test]
fn bad_parameters_exit_2() {
    let out = polyforge(&["generate", "torus44", "--s", "1"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("s >= 2"));
    assert_eq!(polyforge(&["generate", "hypercube"], None).status.code(), Some(2));
    assert_eq!(polyforge(&["generate", "dodecahedron"], None).status.code(), Some(2));
    assert_eq!(polyforge(&["verify", "nothing"], None).status.code(), Some(2));
}

#[test]
fn generation_is_byte_identical() {
    for args in [&["generate", "torus36", "--s", "3"][..], &["generate", "asymmetric-fixture", "--seed", "1"]] {
        assert_eq!(ok(args, None), ok(args, None));
    }
}

#[test]
fn triangle_power_compares_equal_to_the_cube() {
    let triangle = ok(&["generate", "simplex", "--d", "2"], None);
    let p = save("p_triangle.json", &ok(&["derive", "power2k", "--mode", "explicit"], Some(&triangle)));
    let cube = save("cube3.json", &ok(&["generate", "hypercube", "--d", "3"], None));
    let out = ok(&["compare", arg(&p), arg(&cube), "--witness"], None);
    let text = String::from_utf8(out).unwrap();
    assert!(text.starts_with("isomorphic: yes\n"));
    assert_eq!(text.lines().filter(|l| l.contains(" -> ")).count(), 28);
}

#[test]
fn compare_reports_non_isomorphic_pairs() {
    let square = ok(&["generate", "polygon", "--p", "4"], None);
    let p = save("p_square.json", &ok(&["derive", "power2k", "--mode", "explicit"], Some(&square)));
    let cube4 = save("cube4.json", &ok(&["generate", "hypercube", "--d", "4"], None));
    let out = polyforge(&["compare", arg(&p), arg(&cube4)], None);
    assert_eq!((out.status.code(), out.stdout.as_slice()), (Some(1), &b"isomorphic: no\n"[..]));

    let octahedron = polyforge::corpus::octahedron().unwrap();
    let oct = save("octahedron.json", serialize(&octahedron, BTreeMap::new()).as_bytes());
    let cube = save("cube3b.json", &ok(&["generate", "hypercube", "--d", "3"], None));
    assert_eq!(polyforge(&["compare", arg(&cube), arg(&oct)], None).status.code(), Some(1));
}

#[test]
fn pipeline_composes_and_respects_the_threshold() {
    let torus = ok(&["generate", "torus36", "--s", "2"], None);
    let complex = ok(&["derive", "order-complex"], Some(&torus));
    let k = ok(&["derive", "subdivide", "--facet", "min"], Some(&complex));
    let doc = PolytopeDocument::parse(std::str::from_utf8(&k).unwrap()).unwrap();
    assert_eq!(doc.faces.iter().filter(|f| f.rank == 0).count(), 25);

    assert_eq!(polyforge(&["derive", "power2k", "--mode", "explicit"], Some(&k)).status.code(), Some(4));
    let summary = ok(&["derive", "power2k", "--mode", "virtual"], Some(&k));
    let summary = SummaryDocument::parse(std::str::from_utf8(&summary).unwrap()).unwrap();
    assert_eq!((summary.v, summary.group_order, summary.flag_orbit_count), (25, 1 << 25, 300));
    // A summary is not a polytope document.
    let text = summary.to_text();
    assert_eq!(polyforge(&["analyze"], Some(text.as_bytes())).status.code(), Some(3));
}

#[test]
fn threshold_comes_from_flag_or_environment() {
    let triangle = ok(&["generate", "simplex", "--d", "2"], None);
    let args = ["derive", "power2k", "--mode", "explicit"];
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_polyforge"));
    let out = cmd
        .args(args)
        .env("POLYFORGE_THRESHOLD", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(&triangle)?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(polyforge(&[&args[..], &["--threshold", "2"]].concat(), Some(&triangle)).status.code(), Some(4));
    ok(&[&args[..], &["--threshold", "3"]].concat(), Some(&triangle));
}

#[test]
fn subdivide_by_facet_id() {
    let tetra = ok(&["generate", "simplex", "--d", "3"], None);
    let doc = PolytopeDocument::parse(std::str::from_utf8(&tetra).unwrap()).unwrap();
    let facet = doc.faces.iter().find(|f| f.rank == 2).unwrap().id.to_string();
    let out = ok(&["derive", "subdivide", "--facet", &facet], Some(&tetra));
    assert_eq!(proper_faces(&out), 5 + 9 + 6);
    assert_eq!(polyforge(&["derive", "subdivide", "--facet", "0"], Some(&tetra)).status.code(), Some(2));
    let cube = ok(&["generate", "hypercube", "--d", "3"], None);
    assert_eq!(polyforge(&["derive", "subdivide", "--facet", "min"], Some(&cube)).status.code(), Some(3));
}

#[test]
fn invalid_documents_exit_3() {
    assert_eq!(polyforge(&["analyze"], Some(b"{\"format_version\":")).status.code(), Some(3));
    // An edge cut loose from the rest of the triangle.
    let mut doc =
        PolytopeDocument::parse(std::str::from_utf8(&ok(&["generate", "polygon", "--p", "3"], None)).unwrap()).unwrap();
    doc.faces.iter_mut().for_each(|f| f.vertex_set = None);
    doc.covers.retain(|c| c[0] != 4 && c[1] != 4);
    assert_eq!(polyforge(&["analyze"], Some(doc.to_text().as_bytes())).status.code(), Some(3));
}

fn report(doc: &[u8]) -> Value {
    serde_json::from_slice(&ok(&["analyze", "--json"], Some(doc))).unwrap()
}

#[test]
fn analyze_reports() {
    let cube = report(&ok(&["generate", "hypercube", "--d", "3"], None));
    assert_eq!((cube["group_order"].as_u64(), cube["flag_orbit_count"].as_u64()), (Some(48), Some(1)));
    assert_eq!(cube["regular"], Value::Bool(true));

    let fixture = report(&ok(&["generate", "asymmetric-fixture"], None));
    assert_eq!(fixture["group_order"].as_u64(), Some(1));
    assert_eq!(fixture["flag_orbit_count"], fixture["flag_count"]);

    let torus = report(&ok(&["generate", "torus44", "--s", "2"], None));
    assert_eq!(torus["vertex_describable"], Value::Bool(false));

    let text = String::from_utf8(ok(&["analyze"], Some(&ok(&["generate", "hypercube", "--d", "3"], None)))).unwrap();
    assert!(text.contains("group order:        48"));
}

#[test]
fn verify_pipeline_passes() {
    let out = String::from_utf8(ok(&["verify", "pipeline-36"], None)).unwrap();
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
    assert!(out.contains("s=3 |Γ(K)|: computed 1, expected 1"));
}
