//! Finite simplicial sets, their normalized chain complexes, products,
//! cylinders and pushouts.

pub mod builders;
mod product;
mod pushout;
mod set;
mod word;

pub use product::{cartesian_product, Product};
pub use pushout::{cylinder, pushout_space, remove_covers, CoverQuotient, Cylinder, PushoutSpace};
pub use set::{IdentityViolation, SimplexLevel, SimplicialMorphism, SimplicialReport, SimplicialSet};
pub use word::{normalize_degeneracies, Simplex, SimplexWord};
