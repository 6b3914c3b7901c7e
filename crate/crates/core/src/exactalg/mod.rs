//! Graded commutative polynomial arithmetic over `Z[n]`, rewrite-rule normal
//! forms, confluence checking and integration against a fundamental class.
//!
//! Degrees are complex codimensions. Every ring handled here is a
//! finite-dimensional truncation, so confluence is checked by exhausting all
//! monomials up to the largest critical-pair degree rather than by running a
//! completion procedure.

mod coefficient;
mod confluence;
mod monomial;
mod polynomial;
mod presentation;

use alloc::string::String;

pub use coefficient::Coefficient;
pub use confluence::{check_confluence, ConfluenceReport};
pub use monomial::{Monomial, MonomialDisplay, Universe};
pub use polynomial::Polynomial;
pub use presentation::{FundamentalClass, Presentation, Rule, DEFAULT_STEP_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("polynomials live over different generator sets")]
    UniverseMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("rule with left side {lhs} is not homogeneous")]
    InhomogeneousRule { lhs: String },
    #[error("rule with left side {lhs} does not decrease the term order")]
    RuleNotDecreasing { lhs: String },
    #[error("fundamental class monomial must have top degree and sign +1 or -1")]
    BadFundamentalClass,
    #[error("presentation has no fundamental class to integrate against")]
    NoFundamentalClass,
    #[error("rewrite budget of {budget} steps exceeded; the rule set does not terminate")]
    StepBudgetExceeded { budget: usize },
}
