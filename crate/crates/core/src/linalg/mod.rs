//! Dense complex matrix kernel: arithmetic, Kronecker products, Hermitian
//! eigendecomposition, positivity tests, and the row-major vec/reshape
//! identity used by the subspace-compression bridge.

mod eigen;
mod matrix;

pub use eigen::{hermitian_eigen, EigenResult, MAX_JACOBI_SWEEPS};
pub use matrix::{reshape_vec_to_matrix, ComplexMatrix};

/// Errors of the dense kernel.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not hermitian: defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("matrix is numerically singular")]
    Singular,
}
