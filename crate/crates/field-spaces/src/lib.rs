//! Backgrounds `M_A x X_B` with their dimension bookkeeping, the BCOV-type
//! field complexes over the B-factor, and the decompositions used by the
//! duality maps.

mod background;
mod spaces;

pub use background::{BackgroundDescriptor, Factor, Theory};
pub use spaces::{decompose, decompose_c5, is_member, reconstruct_top_degree, split_top_degree, FieldSpaceSpec, Membership, Variant};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("background dimensions rejected: {0}")]
    Dimension(String),
    #[error("cannot parse background `{text}`: {reason}")]
    Syntax { text: String, reason: String },
    #[error("duplicate generator name {0}")]
    DuplicateName(String),
    #[error("expected top polyvector degree {expected}")]
    NotTopDegree { expected: usize },
    #[error("coefficient is not polynomial in the Calabi-Yau coordinates")]
    NotPolynomial,
    #[error("unknown coordinate {0}")]
    UnknownCoordinate(String),
    #[error(transparent)]
    Calculus(#[from] polyvector_calculus::CalculusError),
}
