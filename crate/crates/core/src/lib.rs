//! Fuzzy justification logic workbench.
//!
//! The crate covers the Hilbert systems BL, Ł, G, Π and rational Pavelka
//! logic (RPL), their justification extensions (BLJ, ŁJ, GJ, ΠJ, RPLJ) and
//! the crisp logic J:
//!
//! * [`syntax`]: terms, formulas, the ASCII grammar, sugar expansion and
//!   axiom-scheme matching.
//! * [`algebra`]: the Łukasiewicz, Gödel and product t-norms with residua.
//! * [`models`]: finite fuzzy Fitting and Mkrtychev models, evidence
//!   validation, evaluation and countermodel search.
//! * [`kernel`]: axiom registry, constant specifications, the derivation
//!   checker and derived-rule constructors.
//! * [`lifting`]: internalization of derivations into justification terms.
//! * [`degrees`]: certified lower and upper bounds on provability and truth
//!   degrees.
//! * [`harness`]: random model generation and the property suites.
//!
//! Every semantic value is an exact rational; no floating point is involved.

pub mod algebra;
pub mod degrees;
pub mod harness;
pub mod kernel;
pub mod lifting;
pub mod logic;
pub mod models;
pub mod syntax;
pub mod truth;

pub use algebra::TNormKind;
pub use logic::{Base, LogicConfig};
pub use syntax::{Formula, Grade, GradeBound, Term};
pub use truth::{Rational, TruthValue};
