pub mod anyon;
pub mod condense;
pub mod degeneracy;
pub mod error;
pub mod fold;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod model;
pub mod pants;
pub mod pauli;
pub mod scenarios;
pub mod smith;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use group::{GeneratorSet, StabilizerGroup, Tag};
pub use pauli::{Orient, PauliOp, Qudit};
