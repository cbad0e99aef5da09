//! A numerical workbench for finite frame theory.
//!
//! The crate implements, at finite dimension, frames in Hilbert C*-modules
//! and their tensor products, frame-operator factorization, fusion frames,
//! ℓ²-resolutions of the identity, and frame representations of finite
//! abelian groups — together with the machinery needed to verify the
//! structural identities these constructions satisfy (bound products under
//! tensoring, operator factorizations, intertwining relations).
//!
//! Everything is generic over the real scalar type through [`Scalar`];
//! `f64` is the working default and the aliases below pin it.

pub mod cstar;
pub mod fusion;
pub mod groupframe;
pub mod linalg;
pub mod modframe;
pub mod random;
pub mod scalar;

pub use num_complex::Complex;

pub use cstar::{AlgebraElement, CStarAlgebra, CStarError};
pub use fusion::{FusionError, FusionFrame, OperatorFamily, WeightedSubspace};
pub use groupframe::{
    characters, translation_matrix, AnalysisMatrix, Character, DecompositionOperator,
    FiniteAbelianGroup, GroupError, GroupRepresentation, SpectralData,
};
pub use linalg::{
    hermitian_eigen, reshape_vec_to_matrix, ComplexMatrix, EigenResult, LinalgError,
};
pub use modframe::{
    is_orthonormal_basis, AdjointableOperator, FrameBounds, FrameError, HilbertModule,
    ModuleFrame, ModuleVector,
};
pub use scalar::Scalar;

/// Double-precision complex scalar.
pub type C64 = Complex<f64>;

/// Double-precision aliases for the main types.
pub type Matrix = ComplexMatrix<f64>;
pub type Eigen = EigenResult<f64>;
pub type Element = AlgebraElement<f64>;
pub type Vector = ModuleVector<f64>;
pub type Operator = AdjointableOperator<f64>;
pub type Frame = ModuleFrame<f64>;
pub type Bounds = FrameBounds<f64>;
pub type Subspace = WeightedSubspace<f64>;
pub type Fusion = FusionFrame<f64>;
pub type Resolution = OperatorFamily<f64>;
pub type Representation = GroupRepresentation<f64>;
