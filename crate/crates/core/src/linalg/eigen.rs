use num_complex::Complex;
use num_traits::Zero;

use super::{ComplexMatrix, LinalgError};
use crate::scalar::{count, Scalar};

/// Sweep budget of the cyclic Jacobi eigensolver.
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix: `M = V diag(λ) V*` with real
/// eigenvalues sorted ascending and unitary `V` whose columns are the
/// eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenResult<T: Scalar = f64> {
    eigenvalues: Vec<T>,
    eigenvectors: ComplexMatrix<T>,
}

impl<T: Scalar> EigenResult<T> {
    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix<T> {
        &self.eigenvectors
    }

    pub fn min(&self) -> T {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> T {
        *self.eigenvalues.last().unwrap()
    }

    /// Largest eigenvalue magnitude, i.e. the operator norm of the input.
    pub fn spectral_radius(&self) -> T {
        self.min().abs().max(self.max().abs())
    }

    /// `V f(Λ) V*` for a real spectral function `f`.
    pub fn map_spectrum(&self, f: impl Fn(T) -> T) -> ComplexMatrix<T> {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for j in 0..n {
            let s = Complex::new(f(self.eigenvalues[j]), T::zero());
            for i in 0..n {
                let x = scaled.get(i, j) * s;
                scaled.set(i, j, x);
            }
        }
        scaled.matmul(&v.adjoint())
    }

    /// `V Λ V*`, for accuracy checks.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        self.map_spectrum(|x| x)
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps with
/// complex plane rotations.
///
/// The input must be Hermitian within `Scalar::DEFAULT_TOL` relative to its
/// Frobenius norm; it is symmetrized before iteration. Convergence is reached
/// when the off-diagonal Frobenius mass drops below `Scalar::JACOBI_TOL`
/// relative to the input norm. Deterministic and foolproof at the dense sizes
/// this crate targets (dimension up to a few hundred).
pub fn hermitian_eigen<T: Scalar>(m: &ComplexMatrix<T>) -> Result<EigenResult<T>, LinalgError> {
    hermitian_eigen_with_tol(m, T::DEFAULT_TOL)
}

/// Same as [`hermitian_eigen`] with an explicit hermiticity tolerance.
pub fn hermitian_eigen_with_tol<T: Scalar>(
    m: &ComplexMatrix<T>,
    tol: T,
) -> Result<EigenResult<T>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let norm = m.frobenius_norm();
    let defect = m.hermitian_defect();
    if defect > tol * norm {
        return Err(LinalgError::NotHermitian {
            defect: defect.to_f64().unwrap_or(f64::NAN),
            tol: (tol * norm).to_f64().unwrap_or(f64::NAN),
        });
    }

    let n = m.rows();
    // Symmetrize to kill the (tolerated) defect exactly.
    let mut a = m.adjoint();
    a = &a + m;
    let half = T::from_f64(0.5).unwrap();
    a = a.scale_re(half);

    let mut v = ComplexMatrix::<T>::identity(n);
    if n <= 1 {
        let eigenvalues = (0..n).map(|i| a.get(i, i).re).collect();
        return Ok(EigenResult { eigenvalues, eigenvectors: v });
    }

    let target = T::JACOBI_TOL * norm;
    let skip = if norm > T::zero() {
        target / count::<T>(n * n)
    } else {
        T::zero()
    };

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let off = off_diagonal_mass(&a);
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r <= skip {
                    continue;
                }
                // Phase that makes the pivot real, then a standard real
                // rotation on the 2x2 block.
                let u = apq / Complex::new(r, T::zero());
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let theta = (aqq - app) / (r + r);
                let t = if theta.is_zero() {
                    T::one()
                } else {
                    let sign = if theta < T::zero() { -T::one() } else { T::one() };
                    sign / (theta.abs() + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                let cs = Complex::new(c, T::zero());
                let ss = Complex::new(s, T::zero());
                let su = ss * u.conj();

                a.set(p, p, Complex::new(app - t * r, T::zero()));
                a.set(q, q, Complex::new(aqq + t * r, T::zero()));
                a.set(p, q, Complex::zero());
                a.set(q, p, Complex::zero());
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a.get(j, p);
                    let ajq = a.get(j, q);
                    let new_p = ajp * cs - ajq * su;
                    let new_q = ajp * ss + ajq * cs * u.conj();
                    a.set(j, p, new_p);
                    a.set(j, q, new_q);
                    a.set(p, j, new_p.conj());
                    a.set(q, j, new_q.conj());
                }
                for j in 0..n {
                    let vjp = v.get(j, p);
                    let vjq = v.get(j, q);
                    v.set(j, p, vjp * cs - vjq * su);
                    v.set(j, q, vjp * ss + vjq * cs * u.conj());
                }
            }
        }
    }
    if !converged && off_diagonal_mass(&a) > target {
        return Err(LinalgError::NoConvergence { sweeps: MAX_JACOBI_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
    let eigenvalues: Vec<T> = order.iter().map(|&i| a.get(i, i).re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    Ok(EigenResult { eigenvalues, eigenvectors })
}

fn off_diagonal_mass<T: Scalar>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut sum = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum = sum + a.get(i, j).norm_sqr();
            }
        }
    }
    sum.sqrt()
}

impl<T: Scalar> ComplexMatrix<T> {
    /// Operator norm (largest singular value), via the spectrum of `M* M`.
    pub fn operator_norm(&self) -> T {
        if self.rows() == 0 || self.cols() == 0 {
            return T::zero();
        }
        let gram = self.adjoint().matmul(self);
        let eig = hermitian_eigen_with_tol(&gram, crate::scalar::real(1e-6))
            .expect("Gram matrix eigendecomposition");
        eig.max().max(T::zero()).sqrt()
    }

    /// Smallest singular value, via the spectrum of `M* M`.
    pub fn min_singular_value(&self) -> T {
        let gram = self.adjoint().matmul(self);
        let eig = hermitian_eigen_with_tol(&gram, crate::scalar::real(1e-6))
            .expect("Gram matrix eigendecomposition");
        eig.min().max(T::zero()).sqrt()
    }

    /// Positive semidefiniteness at tolerance `tol`: true iff the smallest
    /// eigenvalue is at least `-tol * max(1, ‖M‖)` with `‖M‖` the operator
    /// norm. The matrix must be Hermitian within the same tolerance.
    pub fn is_psd(&self, tol: T) -> Result<bool, LinalgError> {
        let eig = hermitian_eigen_with_tol(self, tol)?;
        let scale = T::one().max(eig.spectral_radius());
        Ok(eig.min() >= -tol * scale)
    }
}
