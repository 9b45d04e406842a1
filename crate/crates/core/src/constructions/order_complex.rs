use std::collections::BTreeSet;

use crate::error::{PolytopeError, Result};
use crate::flags::enumerate_flags;
use crate::lattice::FaceLattice;
use crate::validate::validate_polytope;

use super::VertexSetComplex;

/// The order complex: vertices are the proper faces of `lattice`, simplices
/// the chains of proper faces. The result is completed with a least and a
/// greatest face and has the same rank as the input.
pub fn order_complex(lattice: &FaceLattice) -> Result<FaceLattice> {
    let n = lattice.rank();
    if n < 1 {
        return Err(PolytopeError::BadParameter(format!("order complex needs rank >= 1, got {n}")));
    }
    let width = (n + 2) as usize;
    // Vertex ordinal of a proper face is its id minus one.
    let mut chains: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); n as usize + 1];
    for flag in enumerate_flags(lattice).chunks_exact(width) {
        let proper: Vec<u32> = flag[1..width - 1].iter().map(|f| f.0 - 1).collect();
        for mask in 0u32..(1 << proper.len()) {
            let chain: Vec<u32> = (0..proper.len()).filter(|&i| mask >> i & 1 == 1).map(|i| proper[i]).collect();
            chains[chain.len()].insert(chain);
        }
    }
    let vertices = lattice.len() - 2;
    let mut faces_by_rank: Vec<Vec<Vec<u32>>> = chains.into_iter().map(|c| c.into_iter().collect()).collect();
    faces_by_rank.push(vec![(0..vertices as u32).collect()]);
    let complex = VertexSetComplex::new(n, vertices, faces_by_rank)?;
    let out = complex.to_lattice()?;
    match validate_polytope(&out).failure() {
        None => Ok(out),
        Some(why) => Err(PolytopeError::ValidationFailed(why)),
    }
}
