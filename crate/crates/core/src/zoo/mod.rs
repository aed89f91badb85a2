//! Constructors and validators for the finite and truncated modules the checks
//! run on: Whittaker characters, generalized and high-order Whittaker modules,
//! induction to `b + T_0`, explicit tables and the untwisted Verma module.

mod character;
mod checks;
mod selector;
mod spec;
mod table;
mod verma;
mod zero_modes;

pub use character::{
    character_from_pairs, highorder_letters, validate_character, Character, CharacterBase, CharacterInduced,
};
pub(crate) use character::reject_trivial;
pub use checks::{check_conditions, vanishing_check, module_axiom_violations, VanishingReport, Verdict};
pub use selector::{window_generators, SubalgebraSelector};
pub use spec::{
    b_plus_t0_induce, generalized_spec, highorder_spec, parse_short_generator, whittaker_from_character,
    whittaker_spec, BModuleSpec, Built, Config, FamilyRegistry, Induction, ModuleFamily, VALIDATION_WINDOW,
};
pub use table::TableModule;
pub use verma::{verma_singular_failures, VermaModule};
pub use zero_modes::ZeroModeInduced;

use crate::parse::ParseError;
use crate::pbw::ModuleError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZooError {
    #[error("invalid module data: {0}")]
    Invalid(String),
    #[error("config line {line}: {reason}")]
    Config { line: usize, reason: String },
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
