//! Flat D-branes in twisted backgrounds: the fields they source, the closed-open
//! map onto superdifferential operators of the world-volume, and the algebraic
//! checks on the resulting deformations.

mod brane;
mod clifford;
mod closed_open;
mod contraction;
mod sourced;
mod superdiff;

pub use brane::BraneSpec;
pub use clifford::{clifford_deformation_check, representation, star, star_basis, CliffordReport, Element, BASIS_LABELS};
pub use closed_open::closed_open;
pub use contraction::{complex_contraction_check, truncated_cohomology, ContractionReport, TruncatedCohomology};
pub use sourced::{bm_candidate, bochner_martinelli, d3_leg_structure, sdual_fixes_d3, SourcedField};
pub use superdiff::{super_commutator, Letter, SuperDiffOp};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraneError {
    #[error("brane has codimension 0 in the B-directions")]
    Codimension,
    #[error("brane count must be positive")]
    Count,
    #[error("unknown coordinate {0}")]
    UnknownCoordinate(String),
    #[error("no odd world-volume parameter left for {0}")]
    NoOddParameter(String),
    #[error("closed-open map needs a holomorphic polynomial polyvector: {0}")]
    NotHolomorphic(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Field(#[from] field_spaces::FieldError),
    #[error(transparent)]
    Calculus(#[from] polyvector_calculus::CalculusError),
}
