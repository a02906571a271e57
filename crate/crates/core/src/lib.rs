//! Effective homology of homotopy pushouts of finite simplicial sets.
//!
//! Given simplicial morphisms `f: X → Y` and `g: X → Z`, [`pipeline::pushout_efhm`]
//! builds the pushout space `P = (Y ⊔ X×Δ[1] ⊔ Z)/∼` together with a homotopy
//! equivalence between its normalized chain complex and an effective complex,
//! through the cone of the connecting morphism of the short exact sequence
//! `0 → C(Y) ⊕ C(Z) → C(P) → C(X×Δ[1], X×∂Δ[1]) → 0`.
//! Wedges, joins, suspensions and mapping cones are instances.

pub mod chain_core;
pub mod cli;
pub mod error;
pub mod homology;
pub mod pipeline;
pub mod simplicial;

pub use error::{Error, Result};
