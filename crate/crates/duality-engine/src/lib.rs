//! T-duality on a circle factor, the M-theory reduction and its inverse, the
//! modular generator on the pair of circle directions, and the S-duality map
//! both as a five-stage composite and in closed form.

mod closed;
mod composite;
mod frame;
mod reduction;
mod signs;
mod strategy;
mod tdual;

pub use closed::{sdual_closed_form, CaseTrace, ClosedMode, SdualOutcome};
pub use composite::{circle_negation, s_squared_target, sdual_composite};
pub use frame::{by_spectators, DualityFrame};
pub use reduction::{bracket_defect, ell1, ell2, reduce_m, reduce_m_inverse, reduced_bracket, s_generator};
pub use signs::{calibrate, SignConventionFile};
pub use strategy::{SdualRegistry, SdualStrategy};
pub use tdual::{t_dual, CircleFactorRep, Direction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DualityError {
    #[error("not representable on the circle factor: {0}")]
    NotRepresentable(String),
    #[error("outside the domain of the map: {0}")]
    OutOfDomain(String),
    #[error("registry is missing generator {0}")]
    MissingGenerator(String),
    #[error("unknown S-duality mode {0}")]
    UnknownMode(String),
    #[error("sign convention file: {0}")]
    SignFile(String),
    #[error("closed form disagrees with the composite: {0}")]
    OracleMismatch(String),
    #[error(transparent)]
    Calculus(#[from] polyvector_calculus::CalculusError),
    #[error(transparent)]
    Field(#[from] field_spaces::FieldError),
}
