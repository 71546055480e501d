//! The surjection (sequence) operad with exact integer coefficients.
//!
//! * [`combinatorics`]: surjections, overlapping partitions and sign rules.
//! * [`operad`]: elements of the operad, its differential, symmetric action,
//!   composition, the Benson contraction and the complexity filtration.
//! * [`simplicial`]: finite ordered simplicial complexes, the coaction on
//!   chains, evaluation on cochains, cup-i products and Steenrod squares, and
//!   the cochain oracle used to cross-check the structure formulas.
//! * [`homology`]: Smith normal form and integral homology of graded complexes.
//! * [`berger`]: the poset operad of pairs `(b, T)` and the subcomplexes it cuts out.
//! * [`hochschild`]: normalized Hochschild cochains of a finite-rank ring and
//!   the action of the complexity-2 suboperad on them.
//! * [`acceptance`]: the end-to-end checks behind `surj verify`.

pub mod acceptance;
pub mod berger;
pub mod combinatorics;
mod error;
pub mod hochschild;
pub mod homology;
pub mod json;
pub mod operad;
pub mod simplicial;

pub use error::{Error, Result};
