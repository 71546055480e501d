//! Surjections, overlapping partitions, composition diagrams and the sign
//! functions `τ`, `ε`, `ζ` and `η` that every structure formula is built from.
//!
//! Sequences are 1-indexed; ground sets of partitions are intervals of
//! integers, usually `{0..p}` to match simplex vertices.

mod diagram;
mod partition;
mod permutation;
mod surjection;

pub use diagram::{enumerate_diagrams, CompositionDiagram};
pub use partition::{enumerate_partitions, OverlappingPartition};
pub use permutation::{zeta_parity, zeta_sign, Permutation};
pub use surjection::{
    basis_is_nonempty, complexity, enumerate_basis, is_nondegenerate, tau, Surjection, Validated, MAX_ARITY,
};

pub(crate) use partition::{epsilon_parity, for_each_overlap_tuple, parity_sign};
