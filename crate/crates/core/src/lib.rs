//! Exact-arithmetic construction and verification of admissible Poisson
//! algebras and the structures built on them: representations, matched
//! pairs, Manin triples, bialgebras, Yang-Baxter equations, O-operators and
//! pre-adm-Poisson algebras.

pub mod algebra;
pub mod bialgebra;
pub mod cli;
pub mod error;
pub mod format;
pub mod linalg;
pub mod matched;
pub mod o_operator;
pub mod report;
pub mod representation;
pub mod scalar;
pub mod search;
pub mod tensor;
pub mod yang_baxter;

pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use report::{AxiomReport, Witness};
pub use scalar::{Field, Scalar};
pub use tensor::{MulTensor, SlotPattern, Tensor3};
