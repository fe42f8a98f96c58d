//! Invariant potential structures on Minkowski space.
//!
//! This crate builds every catalogued class of covector fields (four-potentials)
//! and field tensors that admit a subgroup of the Poincaré group, and certifies
//! the defining properties numerically:
//!
//! * the Lie-derivative invariance conditions `L_ξ A = 0` for every generator
//!   of the class algebra,
//! * closedness of the field tensor `F = dA`,
//! * the dimension of the full annihilating symmetry algebra (via a stacked
//!   nullspace computation),
//! * emptiness certificates for the classes that admit no nonzero field.
//!
//! All derivatives are exact to machine precision: fields are evaluated in
//! order-2 forward-mode jets, so no truncation error enters the residuals.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod charts;
pub mod geometry;
pub mod jet;
pub mod scalar;
pub mod verify;

use thiserror::Error as ThisError;

/// Errors surfaced by the numeric kernel, the catalog and the verifier.
#[derive(Debug, Clone, PartialEq, ThisError)]
pub enum Error {
    #[error("division by zero jet")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("point outside the field's domain")]
    OutOfDomain,
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("class `{0}` is empty; it has no constructor")]
    EmptyClass(String),
    #[error("parameter constraint violated: {0}")]
    ParamConstraint(String),
    #[error("slot arity mismatch for `{label}`: expected {expected}, got {got}")]
    ArityMismatch {
        label: String,
        expected: usize,
        got: usize,
    },
    #[error("slot relation violated: {0}")]
    SlotRelationViolation(String),
    #[error("domain too thin: acceptance rate below 1% after {0} proposals")]
    DomainTooThin(usize),
    #[error("insufficient points: need at least {need}, got {got}")]
    InsufficientPoints { need: usize, got: usize },
    #[error("class `{0}` is not marked empty")]
    NotMarkedEmpty(String),
    #[error("bad configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
