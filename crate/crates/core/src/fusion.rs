//! Fusion frames (frames of weighted subspaces) of a finite-dimensional
//! Hilbert space, their frame operator, tensor products, and weighted
//! operator families resolving the identity with two-sided ℓ² bounds.

use num_traits::Zero;

use crate::linalg::{hermitian_eigen, ComplexMatrix, LinalgError};
use crate::modframe::FrameBounds;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FusionError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("weights must be positive, got {0}")]
    NonpositiveWeight(f64),
    #[error("subspace basis has no independent columns")]
    RankDeficient,
    #[error("not a fusion frame: lower spectral bound {lower:.3e}")]
    NotAFrame { lower: f64 },
    #[error("not a resolution of the identity: {0}")]
    NotAResolution(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A closed subspace with a positive weight, stored as a matrix with
/// orthonormal columns spanning it. Inputs are orthonormalized on ingestion
/// by modified Gram-Schmidt with re-orthogonalization; dependent columns are
/// dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSubspace<T: Scalar = f64> {
    basis: ComplexMatrix<T>,
    weight: T,
}

impl<T: Scalar> WeightedSubspace<T> {
    pub fn new(raw_basis: ComplexMatrix<T>, weight: T) -> Result<Self, FusionError> {
        if weight <= T::zero() {
            return Err(FusionError::NonpositiveWeight(
                weight.to_f64().unwrap_or(f64::NAN),
            ));
        }
        if raw_basis.rows() == 0 || raw_basis.cols() == 0 {
            return Err(FusionError::RankDeficient);
        }
        let basis = orthonormalize(&raw_basis)?;
        Ok(Self { basis, weight })
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Dimension of the subspace (columns kept after orthonormalization).
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn weight(&self) -> T {
        self.weight
    }

    pub fn basis(&self) -> &ComplexMatrix<T> {
        &self.basis
    }

    /// Orthogonal projection onto the subspace, `B B*`.
    pub fn projection(&self) -> ComplexMatrix<T> {
        self.basis.matmul(&self.basis.adjoint())
    }
}

/// Modified Gram-Schmidt with one re-orthogonalization pass; columns whose
/// residual drops below `Scalar::ORTHO_TOL` (relative) are dropped.
fn orthonormalize<T: Scalar>(m: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>, FusionError> {
    let d = m.rows();
    let mut kept: Vec<Vec<num_complex::Complex<T>>> = Vec::new();
    let scale = m.max_abs().max(T::one());
    for j in 0..m.cols() {
        let mut v: Vec<num_complex::Complex<T>> = (0..d).map(|i| m.get(i, j)).collect();
        for _ in 0..2 {
            for u in &kept {
                // coefficient <v, u> = sum v_i conj(u_i)
                let mut coeff: num_complex::Complex<T> = num_complex::Complex::zero();
                for i in 0..d {
                    coeff = coeff + v[i] * u[i].conj();
                }
                for i in 0..d {
                    v[i] = v[i] - coeff * u[i];
                }
            }
        }
        let norm = v
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt();
        if norm <= T::ORTHO_TOL * scale {
            continue;
        }
        for z in &mut v {
            *z = *z / num_complex::Complex::new(norm, T::zero());
        }
        kept.push(v);
    }
    if kept.is_empty() {
        return Err(FusionError::RankDeficient);
    }
    let k = kept.len();
    Ok(ComplexMatrix::from_fn(d, k, |i, j| kept[j][i]))
}

/// A finite family of weighted subspaces of `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionFrame<T: Scalar = f64> {
    ambient_dim: usize,
    members: Vec<WeightedSubspace<T>>,
}

impl<T: Scalar> FusionFrame<T> {
    pub fn new(ambient_dim: usize, members: Vec<WeightedSubspace<T>>) -> Result<Self, FusionError> {
        if let Some(m) = members.iter().find(|m| m.ambient_dim() != ambient_dim) {
            return Err(FusionError::ShapeMismatch(format!(
                "subspace lives in dimension {}, ambient is {}",
                m.ambient_dim(),
                ambient_dim
            )));
        }
        Ok(Self { ambient_dim, members })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn members(&self) -> &[WeightedSubspace<T>] {
        &self.members
    }

    /// The fusion frame operator `S = Σ v_i² π_{W_i}`; Hermitian PSD, and
    /// invertible exactly when the family is a fusion frame.
    pub fn frame_operator(&self) -> ComplexMatrix<T> {
        let mut s = ComplexMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for m in &self.members {
            let w2 = m.weight() * m.weight();
            s = &s + &m.projection().scale_re(w2);
        }
        s
    }

    /// Optimal fusion frame bounds: extremal eigenvalues of the frame
    /// operator. `NotAFrame` when the smallest eigenvalue is at most `tol`.
    pub fn bounds(&self, tol: T) -> Result<FrameBounds<T>, FusionError> {
        let eig = hermitian_eigen(&self.frame_operator())?;
        if eig.min() <= tol {
            return Err(FusionError::NotAFrame {
                lower: eig.min().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(FrameBounds::new(eig.min(), eig.max()))
    }

    /// Tensor product fusion frame `{(W_i ⊗ Z_j, u_i v_j)}`; subspace bases
    /// are Kronecker products, so the projections satisfy
    /// `π_{W⊗Z} = π_W ⊗ π_Z` and the frame operators factorize.
    pub fn tensor(&self, other: &Self) -> Self {
        let members = self
            .members
            .iter()
            .flat_map(|a| {
                other.members.iter().map(move |b| WeightedSubspace {
                    basis: a.basis.kron(&b.basis),
                    weight: a.weight * b.weight,
                })
            })
            .collect();
        Self {
            ambient_dim: self.ambient_dim * other.ambient_dim,
            members,
        }
    }

    /// The induced resolution of the identity with members
    /// `(v_i² π_{W_i} S⁻¹, v_i)`; the operators sum to the identity exactly.
    pub fn to_resolution(&self) -> Result<OperatorFamily<T>, FusionError> {
        self.bounds(T::DEFAULT_TOL)?;
        let s = self.frame_operator();
        let s_inv = s.inverse()?;
        let members = self
            .members
            .iter()
            .map(|m| {
                let w2 = m.weight() * m.weight();
                (m.projection().matmul(&s_inv).scale_re(w2), m.weight())
            })
            .collect();
        OperatorFamily::new(self.ambient_dim, members)
    }
}

/// A finite family of bounded operators with positive weights, the candidate
/// data of an ℓ²-resolution of the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorFamily<T: Scalar = f64> {
    ambient_dim: usize,
    members: Vec<(ComplexMatrix<T>, T)>,
}

impl<T: Scalar> OperatorFamily<T> {
    pub fn new(ambient_dim: usize, members: Vec<(ComplexMatrix<T>, T)>) -> Result<Self, FusionError> {
        for (op, w) in &members {
            if op.rows() != ambient_dim || op.cols() != ambient_dim {
                return Err(FusionError::ShapeMismatch(format!(
                    "operator is {}x{}, ambient dimension is {}",
                    op.rows(),
                    op.cols(),
                    ambient_dim
                )));
            }
            if *w <= T::zero() {
                return Err(FusionError::NonpositiveWeight(w.to_f64().unwrap_or(f64::NAN)));
            }
        }
        Ok(Self { ambient_dim, members })
    }

    /// Weight 1 for every operator.
    pub fn unweighted(ambient_dim: usize, operators: Vec<ComplexMatrix<T>>) -> Result<Self, FusionError> {
        Self::new(
            ambient_dim,
            operators.into_iter().map(|op| (op, T::one())).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn members(&self) -> &[(ComplexMatrix<T>, T)] {
        &self.members
    }

    /// Frobenius residual of `Σ T_i − I`.
    pub fn identity_defect(&self) -> T {
        let mut sum = ComplexMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for (op, _) in &self.members {
            sum = &sum + op;
        }
        sum.distance(&ComplexMatrix::identity(self.ambient_dim))
    }

    /// The bound operator `Σ v_i⁻² T_i* T_i`, whose extremal eigenvalues are
    /// the optimal resolution bounds.
    pub fn bound_operator(&self) -> ComplexMatrix<T> {
        let mut sum = ComplexMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for (op, w) in &self.members {
            let inv_w2 = T::one() / (*w * *w);
            sum = &sum + &op.adjoint().matmul(op).scale_re(inv_w2);
        }
        sum
    }

    /// Checks both resolution conditions and returns the optimal bounds:
    /// `Σ T_i = I` within `tol`, and `Σ v_i⁻² ‖T_i f‖²` bounded between
    /// `C‖f‖²` and `D‖f‖²` with `C > tol`.
    pub fn check(&self, tol: T) -> Result<FrameBounds<T>, FusionError> {
        let defect = self.identity_defect();
        if defect > tol * crate::scalar::count::<T>(self.ambient_dim.max(1)).sqrt() {
            return Err(FusionError::NotAResolution(format!(
                "operators sum to identity with residual {:.3e}",
                defect.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let eig = hermitian_eigen(&self.bound_operator())?;
        if eig.min() <= tol {
            return Err(FusionError::NotAResolution(format!(
                "lower resolution bound {:.3e} is not positive",
                eig.min().to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(FrameBounds::new(eig.min(), eig.max()))
    }

    /// Tensor product family `{(T_i ⊗ S_j, v_i u_j)}`. Both factors must
    /// pass [`check`](Self::check); the result resolves the identity on the
    /// tensor product space with bounds between the products of the factor
    /// bounds.
    pub fn tensor(&self, other: &Self) -> Result<Self, FusionError> {
        self.check(T::DEFAULT_TOL)
            .map_err(|e| FusionError::InvalidInput(format!("left factor: {e}")))?;
        other
            .check(T::DEFAULT_TOL)
            .map_err(|e| FusionError::InvalidInput(format!("right factor: {e}")))?;
        let members = self
            .members
            .iter()
            .flat_map(|(t, v)| {
                other
                    .members
                    .iter()
                    .map(move |(s, u)| (t.kron(s), *v * *u))
            })
            .collect();
        Self::new(self.ambient_dim * other.ambient_dim, members)
    }
}
