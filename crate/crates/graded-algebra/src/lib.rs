//! Exact arithmetic for multivectors: Gaussian-rational scalars, rational-function
//! coefficients in even variables, and odd monomials under the Koszul sign rule.

pub mod linalg;
pub mod multivector;
pub mod poly;
pub mod ratfunc;
pub mod registry;
pub mod scalar;
pub mod text;

pub use multivector::{Bidegree, Multivector, OddMonomial};
pub use poly::{Monomial, Poly, VarId};
pub use ratfunc::RatFunc;
pub use registry::{EvenKind, GeneratorRegistry, OddId, OddKind, Symbol};
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("operands live over different generator registries")]
    RegistryMismatch,
}
