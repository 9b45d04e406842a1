//! Abstract polytopes as ranked face lattices: validation, flags,
//! automorphism groups and orbits, and constructions including the
//! generalized cube `2^K`.

pub mod constructions;
pub mod corpus;
pub mod error;
pub mod flags;
pub mod io;
pub mod lattice;
pub mod properties;
pub mod report;
pub mod symmetry;
pub mod validate;
pub mod verify;

pub use error::{PolytopeError, Result};
pub use flags::{flag_graph, flags, Flag, FlagGraph};
pub use lattice::{FaceId, FaceLattice, SectionView};
pub use properties::{f_vector, schlafli, FVector, SchlafliSymbol};
pub use report::{analyze, AnalysisReport};
pub use symmetry::{automorphisms, isomorphic, isomorphism, Automorphism, AutomorphismGroup};
pub use validate::{validate_polytope, ValidationReport};
