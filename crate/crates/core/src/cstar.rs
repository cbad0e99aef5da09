//! Finite-dimensional C*-algebras realized as direct sums of full complex
//! matrix blocks, with positivity, the Loewner order, the modulus, minimal
//! projections and the spatial tensor product.
//!
//! Every finite-dimensional C*-algebra is *-isomorphic to such a direct sum,
//! which makes positivity, minimality and tensor products exactly computable.

use num_complex::Complex;
use num_traits::Zero;

use crate::linalg::{hermitian_eigen, ComplexMatrix, LinalgError};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CStarError {
    #[error("algebra must have at least one block, each of positive dimension")]
    EmptyAlgebra,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("block {block} has shape {rows}x{cols}, algebra expects {dim}x{dim}")]
    BlockShape { block: usize, rows: usize, cols: usize, dim: usize },
    #[error("wrong number of blocks: algebra has {expected}, element has {actual}")]
    BlockCount { expected: usize, actual: usize },
    #[error("element is not hermitian: defect {defect:.3e}")]
    NotHermitian { defect: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite-dimensional C*-algebra `M_{k_1} ⊕ … ⊕ M_{k_r}`, described by its
/// block dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CStarAlgebra {
    block_dims: Vec<usize>,
}

impl CStarAlgebra {
    pub fn new(block_dims: Vec<usize>) -> Result<Self, CStarError> {
        if block_dims.is_empty() || block_dims.contains(&0) {
            return Err(CStarError::EmptyAlgebra);
        }
        Ok(Self { block_dims })
    }

    /// The scalars, `C`, as the one-block algebra of size 1.
    pub fn scalars() -> Self {
        Self { block_dims: vec![1] }
    }

    /// Full matrix algebra `M_k`.
    pub fn full(k: usize) -> Self {
        Self::new(vec![k]).expect("positive block size")
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.block_dims
    }

    pub fn num_blocks(&self) -> usize {
        self.block_dims.len()
    }

    pub fn is_scalars(&self) -> bool {
        self.block_dims == [1]
    }

    /// Complex dimension, `Σ k_b²`.
    pub fn dim(&self) -> usize {
        self.block_dims.iter().map(|k| k * k).sum()
    }

    /// Spatial tensor product: block dimensions are all products `k_a · k_b`
    /// in lexicographic order (left factor outer).
    pub fn tensor(&self, other: &Self) -> Self {
        let dims = self
            .block_dims
            .iter()
            .flat_map(|&ka| other.block_dims.iter().map(move |&kb| ka * kb))
            .collect();
        Self { block_dims: dims }
    }
}

/// An element of a [`CStarAlgebra`]: one complex matrix per block.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<T: Scalar = f64> {
    algebra: CStarAlgebra,
    blocks: Vec<ComplexMatrix<T>>,
}

impl<T: Scalar> AlgebraElement<T> {
    pub fn new(algebra: CStarAlgebra, blocks: Vec<ComplexMatrix<T>>) -> Result<Self, CStarError> {
        if blocks.len() != algebra.num_blocks() {
            return Err(CStarError::BlockCount {
                expected: algebra.num_blocks(),
                actual: blocks.len(),
            });
        }
        for (b, (mat, &dim)) in blocks.iter().zip(algebra.block_dims()).enumerate() {
            if mat.rows() != dim || mat.cols() != dim {
                return Err(CStarError::BlockShape {
                    block: b,
                    rows: mat.rows(),
                    cols: mat.cols(),
                    dim,
                });
            }
        }
        Ok(Self { algebra, blocks })
    }

    pub fn zero(algebra: &CStarAlgebra) -> Self {
        let blocks = algebra.block_dims().iter().map(|&k| ComplexMatrix::zeros(k, k)).collect();
        Self { algebra: algebra.clone(), blocks }
    }

    /// The unit: identity in every block.
    pub fn unit(algebra: &CStarAlgebra) -> Self {
        let blocks = algebra.block_dims().iter().map(|&k| ComplexMatrix::identity(k)).collect();
        Self { algebra: algebra.clone(), blocks }
    }

    /// A scalar, as an element of the one-dimensional algebra `C`.
    pub fn scalar(z: Complex<T>) -> Self {
        Self {
            algebra: CStarAlgebra::scalars(),
            blocks: vec![ComplexMatrix::new(1, 1, vec![z]).unwrap()],
        }
    }

    pub fn algebra(&self) -> &CStarAlgebra {
        &self.algebra
    }

    pub fn blocks(&self) -> &[ComplexMatrix<T>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &ComplexMatrix<T> {
        &self.blocks[b]
    }

    /// The scalar value of an element of `C`.
    pub fn as_scalar(&self) -> Complex<T> {
        assert!(self.algebra.is_scalars(), "not a scalar element");
        self.blocks[0].get(0, 0)
    }

    fn zip_blocks(&self, other: &Self, f: impl Fn(&ComplexMatrix<T>, &ComplexMatrix<T>) -> ComplexMatrix<T>) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        Self {
            algebra: self.algebra.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_blocks(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_blocks(other, |a, b| a - b)
    }

    /// Algebra product, blockwise matrix multiplication.
    pub fn mul(&self, other: &Self) -> Self {
        self.zip_blocks(other, |a, b| a.matmul(b))
    }

    pub fn neg(&self) -> Self {
        self.map_blocks(|a| -a)
    }

    /// Involution, blockwise conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.map_blocks(|a| a.adjoint())
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        self.map_blocks(|a| a.scale(s))
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    fn map_blocks(&self, f: impl Fn(&ComplexMatrix<T>) -> ComplexMatrix<T>) -> Self {
        Self {
            algebra: self.algebra.clone(),
            blocks: self.blocks.iter().map(f).collect(),
        }
    }

    /// C*-norm: the largest block operator norm.
    pub fn norm(&self) -> T {
        self.blocks
            .iter()
            .map(|b| b.operator_norm())
            .fold(T::zero(), |a, b| a.max(b))
    }

    /// Frobenius norm of the whole block tuple; induced by the trace inner
    /// product used for flattening.
    pub fn frobenius_norm(&self) -> T {
        self.blocks
            .iter()
            .map(|b| {
                let n = b.frobenius_norm();
                n * n
            })
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn distance(&self, other: &Self) -> T {
        self.sub(other).frobenius_norm()
    }

    pub fn hermitian_defect(&self) -> T {
        self.distance(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermitian_defect() <= tol * T::one().max(self.frobenius_norm())
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.algebra == other.algebra && self.distance(other) <= tol
    }

    /// Sum of block traces; the flattened standard inner product of two
    /// elements `a`, `b` is `trace(a b*)`.
    pub fn trace(&self) -> Complex<T> {
        self.blocks.iter().map(|b| b.trace()).fold(Complex::zero(), |a, b| a + b)
    }

    /// Flattened coefficients: blocks concatenated row-major.
    pub fn flatten_into(&self, out: &mut Vec<Complex<T>>) {
        for b in &self.blocks {
            out.extend_from_slice(b.entries());
        }
    }

    pub fn unflatten(algebra: &CStarAlgebra, coeffs: &[Complex<T>]) -> Self {
        assert_eq!(coeffs.len(), algebra.dim(), "flattened length mismatch");
        let mut blocks = Vec::with_capacity(algebra.num_blocks());
        let mut offset = 0;
        for &k in algebra.block_dims() {
            blocks.push(ComplexMatrix::new(k, k, coeffs[offset..offset + k * k].to_vec()).unwrap());
            offset += k * k;
        }
        Self { algebra: algebra.clone(), blocks }
    }

    /// Positivity at tolerance `tol`: hermitian and every block PSD.
    pub fn is_positive(&self, tol: T) -> Result<bool, CStarError> {
        let defect = self.hermitian_defect();
        if defect > tol * T::one().max(self.frobenius_norm()) {
            return Err(CStarError::NotHermitian {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        for b in &self.blocks {
            if !b.is_psd(tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Loewner order: `self ≤ other` iff `other - self` is positive.
    pub fn loewner_leq(&self, other: &Self, tol: T) -> Result<bool, CStarError> {
        if self.algebra != other.algebra {
            return Err(CStarError::AlgebraMismatch);
        }
        other.sub(self).is_positive(tol)
    }

    /// The modulus `|a| = (a* a)^{1/2}`, via blockwise eigendecomposition.
    pub fn modulus(&self) -> Result<Self, CStarError> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let gram = b.adjoint().matmul(b);
            let eig = hermitian_eigen(&gram)?;
            blocks.push(eig.map_spectrum(|x| x.max(T::zero()).sqrt()));
        }
        Ok(Self { algebra: self.algebra.clone(), blocks })
    }

    /// True iff the element is a projection of total rank one across blocks,
    /// equivalently `e A e = C e`. Non-projections return false.
    pub fn is_minimal_projection(&self, tol: T) -> bool {
        let scale = T::one().max(self.frobenius_norm());
        if self.hermitian_defect() > tol * scale {
            return false;
        }
        if self.mul(self).distance(self) > tol * scale {
            return false;
        }
        let mut rank = 0usize;
        for b in &self.blocks {
            match hermitian_eigen(b) {
                // Projections have spectrum {0, 1}; 0.5 splits it robustly.
                Ok(eig) => rank += eig.eigenvalues().iter().filter(|&&x| x > T::from_f64(0.5).unwrap()).count(),
                Err(_) => return false,
            }
        }
        rank == 1
    }

    /// Elementary tensor in the spatial tensor product: block `(i, j)` is the
    /// Kronecker product of block `i` of `self` with block `j` of `other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let algebra = self.algebra.tensor(&other.algebra);
        let blocks = self
            .blocks
            .iter()
            .flat_map(|a| other.blocks.iter().map(move |b| a.kron(b)))
            .collect();
        Self { algebra, blocks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_element(rng: &mut ChaCha8Rng, algebra: &CStarAlgebra) -> AlgebraElement<f64> {
        let blocks = algebra
            .block_dims()
            .iter()
            .map(|&k| {
                ComplexMatrix::from_fn(k, k, |_, _| {
                    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                })
            })
            .collect();
        AlgebraElement::new(algebra.clone(), blocks).unwrap()
    }

    fn diag_m2(a: f64, b: f64) -> AlgebraElement<f64> {
        AlgebraElement::new(
            CStarAlgebra::full(2),
            vec![ComplexMatrix::from_real_rows(&[&[a, 0.0], &[0.0, b]])],
        )
        .unwrap()
    }

    #[test]
    fn unit_is_positive() {
        let a = CStarAlgebra::new(vec![2, 1]).unwrap();
        assert!(AlgebraElement::<f64>::unit(&a).is_positive(1e-9).unwrap());
    }

    #[test]
    fn explicit_negative_eigenvalue_is_not_positive() {
        assert!(!diag_m2(1.0, -0.5).is_positive(1e-9).unwrap());
    }

    #[test]
    fn squares_are_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let algebra = CStarAlgebra::new(vec![2, 3]).unwrap();
        for _ in 0..10 {
            let a = random_element(&mut rng, &algebra);
            let sq = a.adjoint().mul(&a);
            assert!(sq.is_positive(1e-9).unwrap());
        }
    }

    #[test]
    fn loewner_reflexive_and_projection_dominates_zero() {
        let a = diag_m2(1.0, 2.0);
        assert!(a.loewner_leq(&a, 1e-9).unwrap());

        let p = diag_m2(1.0, 0.0); // projection
        let zero = AlgebraElement::zero(&CStarAlgebra::full(2));
        assert!(zero.loewner_leq(&p, 1e-9).unwrap());
    }

    #[test]
    fn loewner_diagonal_cases() {
        assert!(diag_m2(1.0, 2.0).loewner_leq(&diag_m2(2.0, 2.0), 1e-9).unwrap());
        assert!(!diag_m2(1.0, 3.0).loewner_leq(&diag_m2(2.0, 2.0), 1e-9).unwrap());
    }

    #[test]
    fn loewner_rejects_mixed_algebras() {
        let a = AlgebraElement::<f64>::unit(&CStarAlgebra::full(2));
        let b = AlgebraElement::<f64>::unit(&CStarAlgebra::full(3));
        assert!(matches!(a.loewner_leq(&b, 1e-9), Err(CStarError::AlgebraMismatch)));
    }

    #[test]
    fn modulus_of_unit_and_diagonal() {
        let a = CStarAlgebra::full(2);
        let unit = AlgebraElement::<f64>::unit(&a);
        assert!(unit.modulus().unwrap().approx_eq(&unit, 1e-12));

        let m = diag_m2(-3.0, 2.0);
        assert!(m.modulus().unwrap().approx_eq(&diag_m2(3.0, 2.0), 1e-12));
    }

    #[test]
    fn modulus_squares_to_a_star_a() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let algebra = CStarAlgebra::new(vec![3, 2]).unwrap();
        for _ in 0..10 {
            let a = random_element(&mut rng, &algebra);
            let m = a.modulus().unwrap();
            assert!(m.mul(&m).distance(&a.adjoint().mul(&a)) <= 1e-9);
            // Idempotence on positives: |p| = p for positive p.
            let p = a.adjoint().mul(&a);
            assert!(p.modulus().unwrap().approx_eq(&p, 1e-9));
        }
    }

    #[test]
    fn minimal_projection_examples() {
        assert!(diag_m2(1.0, 0.0).is_minimal_projection(1e-9));
        assert!(!AlgebraElement::<f64>::unit(&CStarAlgebra::full(2)).is_minimal_projection(1e-9));

        let sum = CStarAlgebra::new(vec![2, 1]).unwrap();
        let e11_zero = AlgebraElement::new(
            sum.clone(),
            vec![
                ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]),
                ComplexMatrix::zeros(1, 1),
            ],
        )
        .unwrap();
        assert!(e11_zero.is_minimal_projection(1e-9));

        let e11_one = AlgebraElement::new(
            sum,
            vec![
                ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]),
                ComplexMatrix::identity(1),
            ],
        )
        .unwrap();
        assert!(!e11_one.is_minimal_projection(1e-9)); // total rank 2
        assert!(!diag_m2(1.0, 0.5).is_minimal_projection(1e-9)); // not idempotent
    }

    #[test]
    fn tensor_of_algebras_multiplies_blocks_lexicographically() {
        let m2 = CStarAlgebra::full(2);
        let m3 = CStarAlgebra::full(3);
        assert_eq!(m2.tensor(&m3).block_dims(), &[6]);

        let sum = CStarAlgebra::new(vec![2, 1]).unwrap();
        assert_eq!(sum.tensor(&m2).block_dims(), &[4, 2]);

        let b = CStarAlgebra::new(vec![3, 2]).unwrap();
        assert_eq!(CStarAlgebra::scalars().tensor(&b), b);
    }

    #[test]
    fn tensor_of_units_is_unit() {
        let a = CStarAlgebra::new(vec![2, 1]).unwrap();
        let b = CStarAlgebra::full(2);
        let lhs = AlgebraElement::<f64>::unit(&a).tensor(&AlgebraElement::unit(&b));
        assert!(lhs.approx_eq(&AlgebraElement::unit(&a.tensor(&b)), 1e-15));
    }

    #[test]
    fn tensor_preserves_positivity_and_norm_multiplies() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let alg_a = CStarAlgebra::new(vec![2, 1]).unwrap();
        let alg_b = CStarAlgebra::full(2);
        for _ in 0..10 {
            let a = random_element(&mut rng, &alg_a);
            let b = random_element(&mut rng, &alg_b);
            let pa = a.adjoint().mul(&a);
            let pb = b.adjoint().mul(&b);
            assert!(pa.tensor(&pb).is_positive(1e-9).unwrap());
            let prod = a.tensor(&b);
            assert!((prod.norm() - a.norm() * b.norm()).abs() <= 1e-10 * (1.0 + prod.norm()));
        }
    }

    #[test]
    fn loewner_order_is_tensor_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let alg_a = CStarAlgebra::full(2);
        let alg_b = CStarAlgebra::new(vec![2, 1]).unwrap();
        for _ in 0..10 {
            let h = random_element(&mut rng, &alg_a);
            let b = random_element(&mut rng, &alg_a);
            // a = b*b + h*h >= b*b, both hermitian.
            let lower = b.adjoint().mul(&b);
            let upper = lower.add(&h.adjoint().mul(&h));
            assert!(lower.loewner_leq(&upper, 1e-9).unwrap());
            let x = random_element(&mut rng, &alg_b);
            let x = x.adjoint().mul(&x); // positive
            assert!(lower.tensor(&x).loewner_leq(&upper.tensor(&x), 1e-8).unwrap());
        }
    }

    #[test]
    fn cstar_identity_norm_of_a_star_a() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let algebra = CStarAlgebra::new(vec![2, 3]).unwrap();
        for _ in 0..10 {
            let a = random_element(&mut rng, &algebra);
            let lhs = a.adjoint().mul(&a).norm();
            let rhs = a.norm() * a.norm();
            assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs));
        }
    }
}
