//! Differential operators on polyvector fields: the Dolbeault operator, the
//! divergence with respect to a Calabi-Yau form, the Schouten-Nijenhuis bracket
//! built from it, contractions with the volume form and with a constant Poisson
//! bivector, and the twisted differential `dbar + [pi, -]`.

mod cy;
mod ops;
mod primitive;

pub use cy::CalabiYauOrdering;
pub use ops::{
    contract_with_cy, de_rham_holomorphic, divergence, dolbeault, iota_pi, omega_flat, omega_sharp, poisson_bracket, schouten_oracle,
    sn_bracket, twisted_differential, uncontract_with_cy,
};
pub use primitive::top_primitive;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalculusError {
    #[error("polyvector leg {0} does not belong to the Calabi-Yau coordinates")]
    ForeignPolyvectorLeg(String),
    #[error("first bracket argument is not homogeneous in total degree")]
    Inhomogeneous,
    #[error("expected a constant-coefficient bivector")]
    NotConstantBivector,
    #[error("bivector does not square to zero under the bracket")]
    NotSquareZero,
    #[error("no primitive: divergence of the input is nonzero ({0})")]
    NotClosed(String),
    #[error("expected polynomial coefficients in the Calabi-Yau coordinates")]
    NotPolynomial,
    #[error("expected polyvector degree {expected} in the Calabi-Yau directions")]
    WrongDegree { expected: usize },
    #[error("{0}")]
    Unsupported(String),
}
