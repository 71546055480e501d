//! Finite ordered simplicial complexes and the action of the operad on their
//! normalized cochains.
//!
//! Conventions: the coboundary is `d(x) = -(-1)^{|x|} x ∘ ∂`, and a tensor of
//! cochains acts on a tensor of chains with the sign `(-1)^{Σ_{i<j}|x_j||c_i|}`.

mod coaction;
mod cochain;
mod complex;
pub mod oracle;
mod steenrod;

pub use coaction::{coaction, coaction_element, evaluate};
pub use cochain::{Chain, Cochain, TensorChain};
pub use complex::{Simplex, SimplicialComplex};
pub use steenrod::{
    cohomologous_mod2, cohomology_basis_mod2, cup_i, is_coboundary_mod2, is_cocycle_mod2,
    steenrod_sq,
};
