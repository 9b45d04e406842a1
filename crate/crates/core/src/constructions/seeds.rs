//! Seed polytopes: simplices, polygons, cubes and toroidal maps.

use crate::error::{PolytopeError, Result};
use crate::lattice::FaceLattice;
use crate::validate::validate_polytope;

use super::VertexSetComplex;

const MAX_SIMPLEX: usize = 16;
const MAX_CUBE: usize = 10;

/// The `d`-simplex: every subset of `d + 1` vertices.
pub fn simplex(d: usize) -> Result<FaceLattice> {
    if d > MAX_SIMPLEX {
        return Err(PolytopeError::BadParameter(format!("simplex dimension {d} exceeds {MAX_SIMPLEX}")));
    }
    let v = d + 1;
    let mut by_rank: Vec<Vec<Vec<u32>>> = vec![Vec::new(); v + 1];
    for mask in 0u32..(1 << v) {
        let set: Vec<u32> = (0..v as u32).filter(|&i| mask >> i & 1 == 1).collect();
        by_rank[set.len()].push(set);
    }
    for faces in &mut by_rank {
        faces.sort_unstable();
    }
    VertexSetComplex::new(d as i32, v, by_rank)?.to_lattice()
}

/// The `p`-gon.
pub fn polygon(p: usize) -> Result<FaceLattice> {
    if p < 3 {
        return Err(PolytopeError::BadParameter(format!("polygon needs p >= 3, got {p}")));
    }
    // 0: bottom, 1..=p vertices, p+1..=2p edges, 2p+1 top
    let mut ranks = vec![-1];
    ranks.extend(std::iter::repeat_n(0, p));
    ranks.extend(std::iter::repeat_n(1, p));
    ranks.push(2);
    let mut covers = Vec::with_capacity(4 * p);
    for i in 0..p {
        let edge = p + 1 + i;
        covers.push((0, 1 + i));
        covers.push((1 + i, edge));
        covers.push((1 + (i + 1) % p, edge));
        covers.push((edge, 2 * p + 1));
    }
    FaceLattice::from_covers(2, &ranks, &covers)
}

/// The `d`-cube. Faces are words over `{0, 1, *}`, stored as a star mask
/// and the fixed bits.
pub fn hypercube(d: usize) -> Result<FaceLattice> {
    if d > MAX_CUBE {
        return Err(PolytopeError::BadParameter(format!("cube dimension {d} exceeds {MAX_CUBE}")));
    }
    let full = (1u32 << d) - 1;
    let mut words: Vec<(u32, u32)> = Vec::new();
    for stars in 0..=full {
        let free = full & !stars;
        let mut bits = free;
        loop {
            words.push((stars, bits));
            if bits == 0 {
                break;
            }
            bits = (bits - 1) & free;
        }
    }
    words.sort_unstable_by_key(|&(stars, bits)| (stars.count_ones(), stars, bits));
    let index = |w: (u32, u32)| {
        1 + words.binary_search_by_key(&(w.0.count_ones(), w.0, w.1), |&(s, b)| (s.count_ones(), s, b)).unwrap()
    };

    let mut ranks = vec![-1];
    ranks.extend(words.iter().map(|&(stars, _)| stars.count_ones() as i32));
    let mut covers = Vec::new();
    for (i, &(stars, bits)) in words.iter().enumerate() {
        if stars == 0 {
            covers.push((0, 1 + i));
        }
        for k in 0..d {
            let bit = 1 << k;
            if stars & bit != 0 {
                covers.push((index((stars & !bit, bits)), 1 + i));
                covers.push((index((stars & !bit, bits | bit)), 1 + i));
            }
        }
    }
    FaceLattice::from_covers(d as i32, &ranks, &covers)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorusFamily {
    /// `{4,4}`: square tiling.
    Square,
    /// `{3,6}`: triangular tiling.
    Triangular,
}

/// A toroidal map `{4,4}_(s,0)` or `{3,6}_(s,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusMapSpec {
    pub family: TorusFamily,
    pub s: usize,
}

/// Quotient of the square or triangular tiling by the translations
/// `(s, 0)` and `(0, s)`. Vertices are `Z_s x Z_s`.
pub fn torus_map(spec: TorusMapSpec) -> Result<FaceLattice> {
    let s = spec.s;
    if s < 2 {
        return Err(PolytopeError::BadParameter(format!("torus map needs s >= 2, got {s}")));
    }
    let n = s * s;
    let vertex = |i: usize, j: usize| 1 + (i % s) * s + (j % s);
    let cell = |i: usize, j: usize| (i % s) * s + (j % s);
    // Edge classes: horizontal (i,j)-(i+1,j), vertical (i,j)-(i,j+1),
    // diagonal (i+1,j)-(i,j+1) for the triangular family.
    let edge_kinds = match spec.family {
        TorusFamily::Square => 2,
        TorusFamily::Triangular => 3,
    };
    let horizontal = |i, j| 1 + n + cell(i, j);
    let vertical = |i, j| 1 + 2 * n + cell(i, j);
    let diagonal = |i, j| 1 + 3 * n + cell(i, j);
    let first_tile = 1 + n + edge_kinds * n;

    let mut ranks = vec![-1];
    ranks.extend(std::iter::repeat_n(0, n));
    ranks.extend(std::iter::repeat_n(1, edge_kinds * n));
    let mut covers = Vec::new();
    for i in 0..s {
        for j in 0..s {
            covers.push((0, vertex(i, j)));
            covers.push((vertex(i, j), horizontal(i, j)));
            covers.push((vertex(i + 1, j), horizontal(i, j)));
            covers.push((vertex(i, j), vertical(i, j)));
            covers.push((vertex(i, j + 1), vertical(i, j)));
            if spec.family == TorusFamily::Triangular {
                covers.push((vertex(i + 1, j), diagonal(i, j)));
                covers.push((vertex(i, j + 1), diagonal(i, j)));
            }
        }
    }
    let tiles: Vec<Vec<usize>> = match spec.family {
        TorusFamily::Square => (0..s)
            .flat_map(|i| (0..s).map(move |j| (i, j)))
            .map(|(i, j)| vec![horizontal(i, j), horizontal(i, j + 1), vertical(i, j), vertical(i + 1, j)])
            .collect(),
        TorusFamily::Triangular => (0..s)
            .flat_map(|i| (0..s).map(move |j| (i, j)))
            .flat_map(|(i, j)| {
                [
                    vec![horizontal(i, j), vertical(i, j), diagonal(i, j)],
                    vec![horizontal(i, j + 1), vertical(i + 1, j), diagonal(i, j)],
                ]
            })
            .collect(),
    };
    let top = first_tile + tiles.len();
    for (t, edges) in tiles.iter().enumerate() {
        ranks.push(2);
        for &e in edges {
            covers.push((e, first_tile + t));
        }
        covers.push((first_tile + t, top));
    }
    ranks.push(3);

    let lattice = FaceLattice::from_covers(3, &ranks, &covers)?;
    let report = validate_polytope(&lattice);
    match report.failure() {
        None => Ok(lattice),
        Some(why) => Err(PolytopeError::ValidationFailed(why)),
    }
}
