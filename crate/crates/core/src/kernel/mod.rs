//! The proof kernel: axiom schemes, constant specifications, the derivation
//! checker and derived rules.
//!
//! The primitive rules are axiom instances, hypotheses, modus ponens and
//! (graded) iterated axiom necessitation. Derived rules such as graded modus
//! ponens live in [`derived`] and expand into primitive steps.

pub mod axioms;
pub mod builder;
pub mod cs;
pub mod derivation;
pub mod derived;
pub mod golden;

pub use axioms::{axiom_instance_of, instance as axiom_instance, AxiomMatch};
pub use builder::{BuildError, Line, ProofBuilder};
pub use cs::{check_cs, necessitate, ConstantSpecification, CsMode, CsReport, CsViolation};
pub use derivation::{
    check_derivation, parse_derivation, CheckFailure, CheckReport, Derivation, Rule, Step, StepError,
};
pub use derived::SumSide;
