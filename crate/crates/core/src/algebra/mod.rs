//! Dictionary-order products, invariant-level composition and connect
//! sums, and the matching diagram-level gluing.

mod dictionary;
mod formulas;
mod gluing;

pub use dictionary::{probe_equal, probe_set, xi, xi_bracket, IndexTuple, ProbeVector};
pub use formulas::{compose_invariants, connect_h_inv, connect_v_inv, eta, j_family_invariant};
pub use gluing::{connect_h_diagram, connect_v_diagram, fill_all, fill_hole};

use crate::matrix::MatrixError;
use crate::scalar::Overflow;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("hole index {index} out of range for {holes} holes")]
    HoleIndex { index: usize, holes: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

impl From<Overflow> for AlgebraError {
    fn from(e: Overflow) -> Self {
        AlgebraError::Matrix(MatrixError::Overflow(e))
    }
}
