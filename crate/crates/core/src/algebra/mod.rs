//! Generators, linear combinations and the bracket calculus for the twisted
//! algebra and the untwisted algebra in each of their bases.

mod checks;
mod combo;
mod generator;
mod maps;
mod presentation;

pub use checks::{
    antisymmetry_violations, degree_violations, jacobi_check, jacobi_residual, JacobiReport, JacobiViolation,
};
pub(crate) use combo::write_sum;
pub use combo::LinearCombo;
pub(crate) use generator::{fmt_index2, parse_index2};
pub use generator::{super_sign, Algebra, Basis, GeneratorId, Kind};
pub use maps::{
    psi, substitute_basis, verify_morphism, Direction, GeneratorMap, Identity, MorphismReport, MorphismViolation, Psi,
    PsiWrongSign,
};
pub use presentation::{
    bracket_combo, infer_basis, preset, DropVirasoroCentral, Presentation, PresentationRegistry, TwistedPmPresentation,
    TwistedPresentation, Untwisted12Presentation, UntwistedPmPresentation,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("index {index} is not admissible for {kind}")]
    BadIndex { kind: &'static str, index: String },
    #[error("generator {gen} is not in the {basis} basis")]
    NotInBasis { gen: String, basis: &'static str },
    #[error("generators from different bases: {0}")]
    Mixed(String),
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("{0}")]
    Parse(String),
}
