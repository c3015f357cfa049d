//! Words in Dehn twists on explicit page models, their action on first
//! homology, and checking of rewrite derivations.

pub mod action;
pub mod rewrite;
pub mod script;
pub mod stabilize;
pub mod surface;
mod word;

use thiserror::Error;

pub use action::{compare_on_homology, homology_action, verify_relation, HomologyVerdict};
pub use rewrite::{check_step, search, Move, StepCheck, DEFAULT_REWRITE_DEPTH};
pub use script::{
    check_square_identity, parse_script, verify_derivation, Derivation, DerivationVerdict,
    SquareVerdict, StepReport, VerifyOptions,
};
pub use stabilize::{positive_stabilization, AbstractOpenBook, HandleAttachment, StabilizingCurve};
pub use surface::{Curve, Relation, SurfaceModel};
pub use word::{Letter, TwistWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum McgError {
    #[error("malformed word: {0}")]
    Word(String),
    #[error("surface model: {0}")]
    Model(String),
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("unknown move `{0}`")]
    UnknownMove(String),
    #[error("line {line}: {message}")]
    Script { line: usize, message: String },
    #[error("stabilization: {0}")]
    Stabilization(String),
}
