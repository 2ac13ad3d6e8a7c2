pub mod cli;
pub mod error;
pub mod linalg;
pub mod matrixrep;
pub mod phasepoly;
pub mod quantize;
pub mod reduction;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result};
pub use matrixrep::{ActionMatrix, Convention, IsomorphismReport};
pub use phasepoly::{BasePolynomial, Monomial, PhasePolynomial, Variable};
pub use quantize::{ConstantsMatrix, QuotientAlgebra, StructureConstants, TruncatedQuotient};
pub use reduction::{IdealSlice, NormalForm};
pub use scalar::RationalFunction;
