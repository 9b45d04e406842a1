//! The `poly/1` polytope document and the `summary/1` count summary.
//!
//! Documents are UTF-8 JSON with a fixed key order and one face or cover per
//! line, so serializing a canonical lattice is byte-stable.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::constructions::PowerCounts;
use crate::error::{PolytopeError, Result};
use crate::lattice::{FaceId, FaceLattice};
use crate::validate::validate_polytope;

pub const POLY_FORMAT: &str = "poly/1";
pub const SUMMARY_FORMAT: &str = "summary/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FaceEntry {
    pub id: u64,
    pub rank: i32,
    /// Vertex ordinals (positions among the rank-0 faces) below this face.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_set: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolytopeDocument {
    pub format_version: String,
    pub rank: i32,
    #[serde(default)]
    pub implicit_bounds: bool,
    #[serde(default)]
    pub metadata: BTreeMap<String, Value>,
    pub faces: Vec<FaceEntry>,
    pub covers: Vec<[u64; 2]>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct WriteOptions {
    /// Omit the least and greatest face.
    pub implicit_bounds: bool,
    /// Record vertex sets of proper faces.
    pub vertex_sets: bool,
}

impl PolytopeDocument {
    pub fn from_lattice(lattice: &FaceLattice, options: WriteOptions, metadata: BTreeMap<String, Value>) -> Self {
        let (bottom, top) = (lattice.bottom(), lattice.top());
        let n = lattice.rank();
        let keep = |f| !options.implicit_bounds || n < 0 || (f != bottom && f != top);
        let faces = lattice
            .faces()
            .filter(|&f| keep(f))
            .map(|f| {
                let proper = f != bottom && f != top;
                FaceEntry {
                    id: f.0 as u64,
                    rank: lattice.face_rank(f),
                    vertex_set: (options.vertex_sets && proper).then(|| {
                        lattice.vertices_of(f).into_iter().map(|v| lattice.vertex_ordinal(v) as u32).collect()
                    }),
                }
            })
            .collect();
        let covers = lattice
            .covers()
            .filter(|&(lo, hi)| keep(lo) && keep(hi))
            .map(|(lo, hi)| [lo.0 as u64, hi.0 as u64])
            .collect();
        PolytopeDocument {
            format_version: POLY_FORMAT.to_string(),
            rank: n,
            implicit_bounds: options.implicit_bounds && n >= 0,
            metadata,
            faces,
            covers,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| PolytopeError::InvalidDocument(e.to_string()))?;
        match value.get("format_version").and_then(Value::as_str) {
            Some(POLY_FORMAT) => {}
            Some(SUMMARY_FORMAT) => {
                return Err(PolytopeError::InvalidDocument("a summary/1 document carries no faces".into()))
            }
            Some(other) => return Err(PolytopeError::InvalidDocument(format!("unknown format {other:?}"))),
            None => return Err(PolytopeError::InvalidDocument("missing format_version".into())),
        }
        serde_json::from_value(value).map_err(|e| PolytopeError::InvalidDocument(e.to_string()))
    }

    pub fn to_lattice(&self) -> Result<FaceLattice> {
        let n = self.rank;
        let mut index: HashMap<u64, usize> = HashMap::with_capacity(self.faces.len());
        let mut ranks: Vec<i32> = Vec::with_capacity(self.faces.len() + 2);
        for face in &self.faces {
            if index.insert(face.id, ranks.len()).is_some() {
                return Err(PolytopeError::InvalidDocument(format!("face id {} repeated", face.id)));
            }
            if self.implicit_bounds && (face.rank == -1 || face.rank == n) {
                return Err(PolytopeError::InvalidDocument(format!(
                    "face {} has an improper rank but bounds are implicit",
                    face.id
                )));
            }
            ranks.push(face.rank);
        }
        let mut covers = Vec::with_capacity(self.covers.len());
        for &[lo, hi] in &self.covers {
            let lookup = |id: u64| {
                index
                    .get(&id)
                    .copied()
                    .ok_or_else(|| PolytopeError::InvalidDocument(format!("cover names unknown face {id}")))
            };
            covers.push((lookup(lo)?, lookup(hi)?));
        }
        if self.implicit_bounds {
            let bottom = ranks.len();
            ranks.push(-1);
            let top = ranks.len();
            ranks.push(n);
            for (i, &r) in ranks[..bottom].iter().enumerate() {
                if r == 0 {
                    covers.push((bottom, i));
                }
                if r == n - 1 {
                    covers.push((i, top));
                }
            }
            if n == 0 {
                covers.push((bottom, top));
            }
        }
        let lattice = FaceLattice::from_covers(n, &ranks, &covers)?;
        self.check_vertex_sets(&lattice)?;
        Ok(lattice)
    }

    /// Maps document ids to the ids of the parsed lattice. Parsing sorts
    /// faces stably by rank, so the mapping only depends on the face list.
    pub fn canonical_ids(&self) -> HashMap<u64, FaceId> {
        let mut order: Vec<usize> = (0..self.faces.len()).collect();
        order.sort_by_key(|&i| self.faces[i].rank);
        let offset = usize::from(self.implicit_bounds);
        order.iter().enumerate().map(|(pos, &i)| (self.faces[i].id, FaceId::from(pos + offset))).collect()
    }

    fn check_vertex_sets(&self, lattice: &FaceLattice) -> Result<()> {
        let canonical = self.canonical_ids();
        for face in &self.faces {
            let Some(claimed) = &face.vertex_set else { continue };
            let f = canonical[&face.id];
            let actual: Vec<u32> =
                lattice.vertices_of(f).into_iter().map(|v| lattice.vertex_ordinal(v) as u32).collect();
            if *claimed != actual {
                return Err(PolytopeError::InvalidDocument(format!(
                    "face {} lists vertices {claimed:?} but lies above {actual:?}",
                    face.id
                )));
            }
        }
        Ok(())
    }

    /// Canonical text: fixed key order, one face and one cover per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{{").unwrap();
        writeln!(out, "  \"format_version\": {},", json(&self.format_version)).unwrap();
        writeln!(out, "  \"rank\": {},", self.rank).unwrap();
        writeln!(out, "  \"implicit_bounds\": {},", self.implicit_bounds).unwrap();
        writeln!(out, "  \"metadata\": {},", json(&self.metadata)).unwrap();
        write_list(&mut out, "faces", self.faces.iter().map(json), true);
        write_list(&mut out, "covers", self.covers.iter().map(json), false);
        writeln!(out, "}}").unwrap();
        out
    }
}

fn write_list(out: &mut String, key: &str, items: impl Iterator<Item = String>, comma: bool) {
    let items: Vec<String> = items.collect();
    if items.is_empty() {
        writeln!(out, "  \"{key}\": []{}", if comma { "," } else { "" }).unwrap();
        return;
    }
    writeln!(out, "  \"{key}\": [").unwrap();
    let last = items.len() - 1;
    for (i, item) in items.iter().enumerate() {
        writeln!(out, "    {item}{}", if i == last { "" } else { "," }).unwrap();
    }
    writeln!(out, "  ]{}", if comma { "," } else { "" }).unwrap();
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Serializes a lattice with explicit bounds and vertex sets.
pub fn serialize(lattice: &FaceLattice, metadata: BTreeMap<String, Value>) -> String {
    PolytopeDocument::from_lattice(lattice, WriteOptions { implicit_bounds: false, vertex_sets: true }, metadata)
        .to_text()
}

pub fn parse_lattice(text: &str) -> Result<FaceLattice> {
    PolytopeDocument::parse(text)?.to_lattice()
}

/// Parses and checks that the result is an abstract polytope.
pub fn load_polytope(text: &str) -> Result<(PolytopeDocument, FaceLattice)> {
    let doc = PolytopeDocument::parse(text)?;
    let lattice = doc.to_lattice()?;
    match validate_polytope(&lattice).failure() {
        None => Ok((doc, lattice)),
        Some(why) => Err(PolytopeError::ValidationFailed(why)),
    }
}

/// Counts for a `2^K` that is not materialized.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryDocument {
    pub format_version: String,
    pub v: usize,
    pub f_vector: Vec<u128>,
    pub flag_count: u128,
    pub group_order: u128,
    pub flag_orbit_count: u128,
    pub face_orbit_counts: Vec<u128>,
    #[serde(default)]
    pub metadata: BTreeMap<String, Value>,
}

impl SummaryDocument {
    pub fn new(counts: &PowerCounts, metadata: BTreeMap<String, Value>) -> Self {
        SummaryDocument {
            format_version: SUMMARY_FORMAT.to_string(),
            v: counts.v,
            f_vector: counts.f_vector.clone(),
            flag_count: counts.flag_count,
            group_order: counts.group_order,
            flag_orbit_count: counts.flag_orbit_count,
            face_orbit_counts: counts.face_orbit_counts.clone(),
            metadata,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: SummaryDocument =
            serde_json::from_str(text).map_err(|e| PolytopeError::InvalidDocument(e.to_string()))?;
        if doc.format_version != SUMMARY_FORMAT {
            return Err(PolytopeError::InvalidDocument(format!("expected {SUMMARY_FORMAT}")));
        }
        Ok(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{hypercube, polygon, simplex};

    #[test]
    fn canonical_text_is_stable() {
        let cube = hypercube(3).unwrap();
        let text = serialize(&cube, BTreeMap::new());
        let back = parse_lattice(&text).unwrap();
        assert_eq!(back, cube);
        assert_eq!(serialize(&back, BTreeMap::new()), text);
    }

    #[test]
    fn implicit_bounds_round_trip() {
        for l in [polygon(5).unwrap(), simplex(0).unwrap(), simplex(1).unwrap(), hypercube(3).unwrap()] {
            let doc = PolytopeDocument::from_lattice(
                &l,
                WriteOptions { implicit_bounds: true, vertex_sets: false },
                BTreeMap::new(),
            );
            assert!(doc.faces.iter().all(|f| f.rank >= 0 && f.rank < l.rank()));
            let back = PolytopeDocument::parse(&doc.to_text()).unwrap().to_lattice().unwrap();
            assert_eq!(back, l);
        }
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(parse_lattice("not json"), Err(PolytopeError::InvalidDocument(_))));
        assert!(matches!(parse_lattice(r#"{"format_version":"poly/2"}"#), Err(PolytopeError::InvalidDocument(_))));
        let mut doc = PolytopeDocument::from_lattice(
            &polygon(3).unwrap(),
            WriteOptions { implicit_bounds: false, vertex_sets: true },
            BTreeMap::new(),
        );
        doc.faces[4].vertex_set = Some(vec![0, 1, 2]);
        assert!(matches!(doc.to_lattice(), Err(PolytopeError::InvalidDocument(_))));
        doc.faces[4].vertex_set = None;
        doc.covers.push([0, 99]);
        assert!(matches!(doc.to_lattice(), Err(PolytopeError::InvalidDocument(_))));
    }
}
