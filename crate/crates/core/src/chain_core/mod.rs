//! Integer chain complexes, graded morphisms, reductions and homotopy
//! equivalences, with the direct sum, suspension and cone constructors.

mod chain;
mod complex;
mod constructors;
mod morphism;
mod reduction;

pub use chain::{Chain, Generator};
pub use complex::{same_complex, ChainComplex, LevelSpec};
pub use constructors::{
    cone, cone2, cone_efhm, cone_equivalence, cone_reduction, desuspension_shift, direct_sum,
    direct_sum_equivalence, direct_sum_reduction, identity_cone_contraction, pad_equivalence,
    pad_reduction, suspension, suspension_equivalence, suspension_reduction, suspension_shift, Cone,
    ConeKind, DirectSum, Part,
};
pub use morphism::GradedMorphism;
pub use reduction::{Equation, HomotopyEquivalence, Reduction, ReductionReport, VerifyConfig, Violation, VERIFY_LIMIT_VAR};

/// `C ⇐ C ⇒ C` with identity maps and zero homotopies.
pub fn trivial_equivalence(c: &std::sync::Arc<ChainComplex>) -> HomotopyEquivalence {
    HomotopyEquivalence::trivial(c)
}
