//! The generalized cube `2^K`.
//!
//! For a vertex-describable `K` with vertex set `V = {0, ..., v-1}`, the
//! faces of `2^K` are the sets `F(ε)` of points of `{0,1}^V` that agree with
//! `ε` outside the vertex set of a face `F` of `K`, ordered by inclusion and
//! completed by an empty least face. `F(ε) ⊆ F'(ε')` iff `F <= F'` and `ε`,
//! `ε'` agree outside `F'`.
//!
//! Points are stored as integers whose most significant bit is coordinate
//! `0`, so integer order is lexicographic order of bit strings.

use crate::error::{PolytopeError, Result};
use crate::flags::{first_flag, FlagGraph};
use crate::lattice::{FaceId, FaceLattice};
use crate::properties::f_vector;
use crate::symmetry::{automorphisms_in, face_orbits, flag_orbits, Automorphism, AutomorphismGroup};
use crate::validate::validate_polytope;

use super::VertexSetComplex;

pub const DEFAULT_THRESHOLD: usize = 16;
/// Hard limit of the bit-mask representation.
const MAX_EXPLICIT: usize = 30;

/// The face `F(ε)`: a face of `K` and the coordinates of `ε` outside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerFace {
    pub base: FaceId,
    /// Bits of `ε` outside the base face; bits inside it are zero.
    pub restriction: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerMode {
    Explicit { threshold: usize },
    Virtual,
}

/// Counts of `2^K` obtained from `K` alone.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PowerCounts {
    pub v: usize,
    pub f_vector: Vec<u128>,
    pub flag_count: u128,
    pub group_order: u128,
    pub flag_orbit_count: u128,
    /// Orbits of `j`-faces, `j = 0..n-1`.
    pub face_orbit_counts: Vec<u128>,
}

#[derive(Clone, Debug)]
pub struct ExplicitPower {
    pub k: VertexSetComplex,
    pub k_lattice: FaceLattice,
    pub lattice: FaceLattice,
    /// `None` for the least face, which is not of the form `F(ε)`.
    pub faces: Vec<Option<PowerFace>>,
    masks: Vec<u64>,
    offsets: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum PowerPolytope {
    Explicit(Box<ExplicitPower>),
    Virtual { k: VertexSetComplex, counts: PowerCounts },
}

impl PowerPolytope {
    pub fn explicit(&self) -> Option<&ExplicitPower> {
        match self {
            PowerPolytope::Explicit(e) => Some(e),
            PowerPolytope::Virtual { .. } => None,
        }
    }
}

pub fn power_2k(k: &VertexSetComplex, mode: PowerMode) -> Result<PowerPolytope> {
    match mode {
        PowerMode::Explicit { threshold } => Ok(PowerPolytope::Explicit(Box::new(ExplicitPower::new(k, threshold)?))),
        PowerMode::Virtual => Ok(PowerPolytope::Virtual { k: k.clone(), counts: virtual_counts(k)? }),
    }
}

/// Index of `r` among the submasks of `free` in increasing order.
fn compress(r: u64, free: u64) -> usize {
    let (mut out, mut bit, mut f) = (0usize, 0, free);
    while f != 0 {
        let low = f & f.wrapping_neg();
        if r & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        f &= f - 1;
    }
    out
}

/// Submasks of `free` in increasing order.
fn submasks(free: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << free.count_ones());
    let mut s = 0u64;
    loop {
        out.push(s);
        if s == free {
            return out;
        }
        s = (s.wrapping_sub(free)) & free;
    }
}

impl ExplicitPower {
    fn new(k: &VertexSetComplex, threshold: usize) -> Result<Self> {
        let v = k.vertex_count();
        if v > threshold.min(MAX_EXPLICIT) {
            return Err(PolytopeError::TooLargeForExplicit { vertices: v, threshold: threshold.min(MAX_EXPLICIT) });
        }
        let k_lattice = k.to_lattice()?;
        if !validate_polytope(&k_lattice).is_polytope() {
            return Err(PolytopeError::ValidationFailed("K is not a polytope".into()));
        }
        let all = if v == 0 { 0 } else { (1u64 << v) - 1 };
        let coord = |i: u32| 1u64 << (v - 1 - i as usize);
        let masks: Vec<u64> = k.iter().map(|(_, f)| f.iter().map(|&i| coord(i)).fold(0, |a, b| a | b)).collect();

        // Face 0 is the new least face; then K's faces in id order, each
        // expanded over its restrictions.
        let mut offsets = Vec::with_capacity(masks.len());
        let mut faces = vec![None];
        let mut ranks = vec![-1];
        for (base, (r, _)) in k.iter().enumerate() {
            offsets.push(faces.len());
            for restriction in submasks(all & !masks[base]) {
                faces.push(Some(PowerFace { base: FaceId::from(base), restriction }));
                ranks.push(r + 1);
            }
        }
        let mut this = ExplicitPower {
            k: k.clone(),
            k_lattice,
            lattice: FaceLattice::from_covers(-1, &[-1], &[])?,
            faces,
            masks,
            offsets,
        };

        let mut covers = Vec::new();
        for (id, face) in this.faces.iter().enumerate() {
            let Some(face) = face else { continue };
            if face.base == this.k_lattice.bottom() {
                covers.push((0, id));
                continue;
            }
            for &sub in this.k_lattice.subs(face.base) {
                let gained = this.masks[face.base.index()] & !this.masks[sub.index()];
                for extra in submasks(gained) {
                    covers.push((this.index_of(sub, face.restriction | extra).index(), id));
                }
            }
        }
        this.lattice = FaceLattice::from_covers(k.rank() + 1, &ranks, &covers)?;
        match validate_polytope(&this.lattice).failure() {
            None => Ok(this),
            Some(why) => Err(PolytopeError::ValidationFailed(why)),
        }
    }

    pub fn v(&self) -> usize {
        self.k.vertex_count()
    }

    fn coord(&self, i: usize) -> u64 {
        1u64 << (self.v() - 1 - i)
    }

    /// Id of `F(ε)` for a face `base` of `K` and any `ε` (bits inside the
    /// face are ignored).
    pub fn index_of(&self, base: FaceId, epsilon: u64) -> FaceId {
        let all = (1u64 << self.v()) - 1;
        let free = all & !self.masks[base.index()];
        FaceId::from(self.offsets[base.index()] + compress(epsilon & free, free))
    }

    /// Vertex `ε` of `2^K`.
    pub fn vertex(&self, epsilon: u64) -> FaceId {
        self.index_of(self.k_lattice.bottom(), epsilon)
    }

    /// The bit flip of coordinate `k`.
    pub fn flip(&self, k: usize) -> Automorphism {
        let bit = self.coord(k);
        let face_perm = self
            .faces
            .iter()
            .enumerate()
            .map(|(id, f)| match f {
                None => FaceId::from(id),
                Some(f) => self.index_of(f.base, f.restriction ^ bit),
            })
            .collect();
        Automorphism { face_perm }
    }

    /// The lift `F(η) -> φ(F)(η_φ)` of an automorphism `φ` of `K`, where
    /// `η_φ` moves coordinate `i` to `φ(i)`.
    pub fn lift(&self, phi: &Automorphism) -> Automorphism {
        let v = self.v();
        let vertex_image: Vec<usize> =
            self.k_lattice.vertices().map(|u| self.k_lattice.vertex_ordinal(phi.apply(u))).collect();
        let permute = |eps: u64| {
            (0..v).filter(|&i| eps & self.coord(i) != 0).map(|i| self.coord(vertex_image[i])).fold(0, |a, b| a | b)
        };
        let face_perm = self
            .faces
            .iter()
            .enumerate()
            .map(|(id, f)| match f {
                None => FaceId::from(id),
                Some(f) => self.index_of(phi.apply(f.base), permute(f.restriction)),
            })
            .collect();
        Automorphism { face_perm }
    }

    /// The group generated by all bit flips and the lifts of generators of
    /// `Γ(K)`.
    pub fn power_group(&self) -> Result<AutomorphismGroup> {
        let k_graph = FlagGraph::new(&self.k_lattice)?;
        let k_group = automorphisms_in(&self.k_lattice, &k_graph);
        let mut gens: Vec<Automorphism> = (0..self.v()).map(|i| self.flip(i)).collect();
        gens.extend(k_group.generator_elements().map(|phi| self.lift(phi)));
        Ok(AutomorphismGroup::generate(first_flag(&self.lattice), self.lattice.len(), &gens))
    }
}

fn checked_pow2(e: usize) -> Result<u128> {
    if e >= 128 {
        Err(PolytopeError::CountOverflow)
    } else {
        Ok(1u128 << e)
    }
}

/// Face, flag, group and orbit counts of `2^K`, from `K` and `Γ(K)`:
/// `f_j = Σ_{(j-1)-faces F} 2^{v - |F|}`, `flags = 2^v · flags(K)`,
/// `|Γ| = 2^v · |Γ(K)|`, flag orbits equal those of `K`, and `j`-face
/// orbits (`j >= 1`) equal the `Γ(K)`-orbits on `(j-1)`-faces of `K`.
pub fn virtual_counts(k: &VertexSetComplex) -> Result<PowerCounts> {
    let v = k.vertex_count();
    let lattice = k.to_lattice()?;
    let graph = FlagGraph::new(&lattice)?;
    let group = automorphisms_in(&lattice, &graph);
    let cube = checked_pow2(v)?;
    let mul = |a: u128, b: u128| a.checked_mul(b).ok_or(PolytopeError::CountOverflow);

    let mut f = vec![1u128];
    for j in 0..=k.rank() + 1 {
        let mut total = 0u128;
        for face in k.faces(j - 1) {
            total = total.checked_add(checked_pow2(v - face.len())?).ok_or(PolytopeError::CountOverflow)?;
        }
        f.push(total);
    }
    let mut face_orbit_counts = vec![1u128];
    for j in 1..=k.rank() {
        face_orbit_counts.push(face_orbits(&lattice, &group, j - 1).count() as u128);
    }
    debug_assert_eq!(f_vector(&lattice).0.len() + 1, f.len());
    Ok(PowerCounts {
        v,
        f_vector: f,
        flag_count: mul(cube, graph.len() as u128)?,
        group_order: mul(cube, group.order() as u128)?,
        flag_orbit_count: flag_orbits(&graph, &group).count() as u128,
        face_orbit_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{hypercube, polygon, simplex};
    use crate::properties::vertex_set_complex;
    use crate::symmetry::{automorphisms, isomorphic};

    fn explicit(k: &FaceLattice) -> ExplicitPower {
        let k = vertex_set_complex(k).unwrap();
        match power_2k(&k, PowerMode::Explicit { threshold: DEFAULT_THRESHOLD }).unwrap() {
            PowerPolytope::Explicit(e) => *e,
            PowerPolytope::Virtual { .. } => unreachable!(),
        }
    }

    #[test]
    fn submask_helpers() {
        assert_eq!(submasks(0b1010), vec![0, 0b10, 0b1000, 0b1010]);
        for (i, s) in submasks(0b1101).into_iter().enumerate() {
            assert_eq!(compress(s, 0b1101), i);
        }
    }

    #[test]
    fn triangle_gives_the_cube() {
        let p = explicit(&simplex(2).unwrap());
        assert_eq!(f_vector(&p.lattice).0, vec![1, 8, 12, 6, 1]);
        assert!(isomorphic(&p.lattice, &hypercube(3).unwrap()).unwrap());
        // The all-zero point is the first vertex.
        assert_eq!(p.vertex(0), FaceId(1));
    }

    #[test]
    fn flips_are_involutions() {
        let p = explicit(&polygon(4).unwrap());
        for k in 0..4 {
            let s = p.flip(k);
            assert!(s.compose(&s).is_identity());
            assert!(s.preserves(&p.lattice));
        }
        let g = p.power_group().unwrap();
        assert_eq!(g.order(), 16 * 8);
        assert!(g.same_elements(&automorphisms(&p.lattice).unwrap()));
    }

    #[test]
    fn threshold_is_enforced() {
        let k = vertex_set_complex(&simplex(4).unwrap()).unwrap();
        assert_eq!(
            power_2k(&k, PowerMode::Explicit { threshold: 4 }).unwrap_err(),
            PolytopeError::TooLargeForExplicit { vertices: 5, threshold: 4 }
        );
    }
}
