//! The brute-force matrix oracle.
//!
//! Everything the symbolic layers claim is re-derivable here by explicit
//! linear algebra on concrete modules: supermatrix realizations of
//! `sl(m|n)`, Kac-like and evaluation modules over truncated algebras,
//! submodule search, duals via the anti-involution τ, highest-weight
//! vectors with respect to reflected Borel subalgebras, Hom spaces, and
//! first cohomology of the Koszul cochain complex.  Scalars stay rational
//! throughout; a "residual" is an exact matrix that must vanish
//! identically.

pub mod g0rep;
pub mod hom;
pub mod hw;
pub mod koszul;
pub mod module;
pub mod submodule;
pub mod superalgebra;

pub use hom::{adjoint_tensor_module, g0_tensor_module, hom_space, l_module};
pub use hw::{
    highest_weight_vector, multi_highest_weight_vector, tensor_product, MultiModule,
    WeightFunctional,
};
pub use koszul::ext1_koszul;
pub use module::{
    build_kac_like, build_kac_like_carrier, ActingOn, ExplicitModule, KacCarrier,
};
pub use submodule::{
    irreducibility_certificate, irreducible_quotient, submodule_search, SubmoduleReport,
};
pub use superalgebra::{BasisLabel, MatrixSuperalgebra};

use crate::error::Result;
use crate::rootdata::AlgebraId;
use std::sync::Arc;

/// Shared handle to the supermatrix realization.
pub fn build_superalgebra(id: &AlgebraId) -> Result<Arc<MatrixSuperalgebra>> {
    Ok(Arc::new(MatrixSuperalgebra::new(id)?))
}

pub mod comm;
pub use comm::verify_comm_rels;
