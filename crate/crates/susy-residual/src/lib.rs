//! The ten-dimensional (2,0) supersymmetry algebra built from the spin module
//! of `so(10)` on `/\W`, its cohomology with respect to an `SU(5)`-invariant
//! supercharge, and the residual map into polyvector fields on `C^5`.

mod algebra;
mod clifford;
mod cohomology;
mod gamma;
mod res;
mod siso;

pub use algebra::SuperLieAlgebra;
pub use clifford::{Op, SpinorModule, RANK};
pub use cohomology::{q_cohomology, QCohomology};
pub use gamma::{build_gamma_plus, gamma_top_wedge, GammaPlus};
pub use res::{ResEntry, ResMap, Summand};
pub use siso::{build_siso, Siso, SO_DIM, SPINOR_DIM, VEC_DIM};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SusyError {
    #[error("equivariant pairing solve returned a solution space of dimension {0}")]
    GammaSolve(usize),
    #[error("structure constants: {0}")]
    Table(String),
    #[error("Jacobi identity fails on ({0}, {1}, {2})")]
    Jacobi(String, String, String),
    #[error("supercharge is not an odd element")]
    NotOdd,
    #[error("supercharge does not square to zero")]
    NotSquareZero,
    #[error("{0} is not a cocycle")]
    NotCocycle(String),
    #[error("class is not expressible in the summand basis")]
    NotExpressible,
}
