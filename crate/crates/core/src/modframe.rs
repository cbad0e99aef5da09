//! Hilbert A-modules `A^n` with their A-valued inner product, module frames
//! and optimal bounds, frame operators, orthonormal bases, transformed
//! frames, and tensor products of modules, frames and operators.
//!
//! Adjointable operators act by right multiplication with an `n x n`
//! coefficient matrix over the algebra; these are exactly the maps commuting
//! with the left module action. Spectral questions are decided in the
//! faithful representation that flattens `A^n` to a complex vector space with
//! the trace inner product; the operator then splits into one dense block per
//! algebra block, and bounds reduce to Hermitian eigenproblems.

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cstar::{AlgebraElement, CStarAlgebra, CStarError};
use crate::linalg::{hermitian_eigen, ComplexMatrix, LinalgError};
use crate::scalar::{real, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FrameError {
    #[error("vectors belong to different modules")]
    ModuleMismatch,
    #[error("a frame needs at least one vector")]
    EmptyFrame,
    #[error("not a frame: lower spectral bound {lower:.3e}")]
    NotAFrame { lower: f64 },
    #[error("operator is numerically singular")]
    SingularOperator,
    #[error(transparent)]
    CStar(#[from] CStarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The standard left Hilbert module `A^n` over a finite-dimensional
/// C*-algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertModule {
    algebra: CStarAlgebra,
    rank: usize,
}

impl HilbertModule {
    pub fn new(algebra: CStarAlgebra, rank: usize) -> Self {
        assert!(rank >= 1, "module rank must be positive");
        Self { algebra, rank }
    }

    /// A plain Hilbert space `C^dim`, i.e. the module over the scalars.
    pub fn hilbert_space(dim: usize) -> Self {
        Self::new(CStarAlgebra::scalars(), dim)
    }

    pub fn algebra(&self) -> &CStarAlgebra {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Complex dimension of the flattened module.
    pub fn flat_dim(&self) -> usize {
        self.rank * self.algebra.dim()
    }

    /// Tensor product module over the tensor product algebra, with rank
    /// `n * m` and lexicographic coordinate order (left factor outer).
    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(self.algebra.tensor(&other.algebra), self.rank * other.rank)
    }

    /// A complex-linear spanning set: the flattened standard basis, one
    /// vector per (coordinate, block, entry) slot.
    pub fn spanning_set<T: Scalar>(&self) -> Vec<ModuleVector<T>> {
        let dim = self.flat_dim();
        let mut out = Vec::with_capacity(dim);
        for slot in 0..dim {
            let mut coeffs = vec![Complex::zero(); dim];
            coeffs[slot] = Complex::new(T::one(), T::zero());
            out.push(ModuleVector::unflatten(self, &coeffs));
        }
        out
    }
}

/// A vector in `A^n`: one algebra element per coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleVector<T: Scalar = f64> {
    module: HilbertModule,
    coords: Vec<AlgebraElement<T>>,
}

impl<T: Scalar> ModuleVector<T> {
    pub fn new(module: HilbertModule, coords: Vec<AlgebraElement<T>>) -> Result<Self, FrameError> {
        if coords.len() != module.rank() || coords.iter().any(|c| c.algebra() != module.algebra()) {
            return Err(FrameError::ModuleMismatch);
        }
        Ok(Self { module, coords })
    }

    pub fn zero(module: &HilbertModule) -> Self {
        let coords = (0..module.rank())
            .map(|_| AlgebraElement::zero(module.algebra()))
            .collect();
        Self { module: module.clone(), coords }
    }

    /// Vector of a plain Hilbert space from scalar coordinates.
    pub fn from_scalar_coords(coords: Vec<Complex<T>>) -> Self {
        let module = HilbertModule::hilbert_space(coords.len());
        let coords = coords.into_iter().map(AlgebraElement::scalar).collect();
        Self { module, coords }
    }

    /// Scalar coordinates of a vector over `C`, as a column matrix.
    pub fn to_scalar_column(&self) -> ComplexMatrix<T> {
        assert!(self.module.algebra().is_scalars(), "not a Hilbert-space vector");
        ComplexMatrix::column(self.coords.iter().map(|c| c.as_scalar()).collect())
    }

    pub fn module(&self) -> &HilbertModule {
        &self.module
    }

    pub fn coords(&self) -> &[AlgebraElement<T>] {
        &self.coords
    }

    /// A-valued inner product `⟨x, y⟩ = Σ_i x_i y_i*`, linear in the first
    /// slot, with `⟨x, y⟩ = ⟨y, x⟩*`.
    pub fn inner(&self, other: &Self) -> Result<AlgebraElement<T>, FrameError> {
        if self.module != other.module {
            return Err(FrameError::ModuleMismatch);
        }
        let mut acc = AlgebraElement::zero(self.module.algebra());
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc = acc.add(&a.mul(&b.adjoint()));
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.module, other.module, "module mismatch");
        Self {
            module: self.module.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.module, other.module, "module mismatch");
        Self {
            module: self.module.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    /// Left module action `a · x`.
    pub fn left_mul(&self, a: &AlgebraElement<T>) -> Self {
        Self {
            module: self.module.clone(),
            coords: self.coords.iter().map(|c| a.mul(c)).collect(),
        }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            module: self.module.clone(),
            coords: self.coords.iter().map(|c| c.scale(s)).collect(),
        }
    }

    /// Flattened complex coefficients (coordinates outer, blocks inner,
    /// entries row-major).
    pub fn flatten(&self) -> Vec<Complex<T>> {
        let mut out = Vec::with_capacity(self.module.flat_dim());
        for c in &self.coords {
            c.flatten_into(&mut out);
        }
        out
    }

    pub fn unflatten(module: &HilbertModule, coeffs: &[Complex<T>]) -> Self {
        assert_eq!(coeffs.len(), module.flat_dim(), "flattened length mismatch");
        let per = module.algebra().dim();
        let coords = (0..module.rank())
            .map(|i| AlgebraElement::unflatten(module.algebra(), &coeffs[i * per..(i + 1) * per]))
            .collect();
        Self { module: module.clone(), coords }
    }

    /// Euclidean norm of the flattened coefficients.
    pub fn norm(&self) -> T {
        self.coords
            .iter()
            .map(|c| {
                let f = c.frobenius_norm();
                f * f
            })
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Module norm `‖⟨x, x⟩‖^{1/2}` in the C*-norm.
    pub fn cstar_norm(&self) -> T {
        self.inner(self).expect("same module").norm().sqrt()
    }

    pub fn distance(&self, other: &Self) -> T {
        self.sub(other).norm()
    }

    /// Elementary tensor `x ⊗ y` with coordinates `(x_i ⊗ y_j)` in
    /// lexicographic order.
    pub fn tensor(&self, other: &Self) -> Self {
        let module = self.module.tensor(&other.module);
        let coords = self
            .coords
            .iter()
            .flat_map(|a| other.coords.iter().map(move |b| a.tensor(b)))
            .collect();
        Self { module, coords }
    }
}

/// An adjointable (A-linear) operator on `A^n`, acting by right
/// multiplication: `(Tx)_j = Σ_i x_i t_{ij}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjointableOperator<T: Scalar = f64> {
    module: HilbertModule,
    coeffs: Vec<AlgebraElement<T>>, // n*n, row-major
}

impl<T: Scalar> AdjointableOperator<T> {
    pub fn new(module: HilbertModule, coeffs: Vec<AlgebraElement<T>>) -> Result<Self, FrameError> {
        let n = module.rank();
        if coeffs.len() != n * n || coeffs.iter().any(|c| c.algebra() != module.algebra()) {
            return Err(FrameError::ModuleMismatch);
        }
        Ok(Self { module, coeffs })
    }

    pub fn identity(module: &HilbertModule) -> Self {
        let n = module.rank();
        let mut coeffs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                coeffs.push(if i == j {
                    AlgebraElement::unit(module.algebra())
                } else {
                    AlgebraElement::zero(module.algebra())
                });
            }
        }
        Self { module: module.clone(), coeffs }
    }

    pub fn module(&self) -> &HilbertModule {
        &self.module
    }

    pub fn coeff(&self, i: usize, j: usize) -> &AlgebraElement<T> {
        &self.coeffs[i * self.module.rank() + j]
    }

    pub fn apply(&self, x: &ModuleVector<T>) -> ModuleVector<T> {
        assert_eq!(x.module(), &self.module, "module mismatch");
        let n = self.module.rank();
        let coords = (0..n)
            .map(|j| {
                let mut acc = AlgebraElement::zero(self.module.algebra());
                for i in 0..n {
                    acc = acc.add(&x.coords[i].mul(self.coeff(i, j)));
                }
                acc
            })
            .collect();
        ModuleVector { module: self.module.clone(), coords }
    }

    /// Adjoint for the A-valued inner product: `⟨Tx, y⟩ = ⟨x, T*y⟩`.
    pub fn adjoint(&self) -> Self {
        let n = self.module.rank();
        let mut coeffs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                coeffs.push(self.coeff(j, i).adjoint());
            }
        }
        Self { module: self.module.clone(), coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.module, other.module);
        Self {
            module: self.module.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.module, other.module);
        Self {
            module: self.module.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale_re(&self, s: T) -> Self {
        Self {
            module: self.module.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scale_re(s)).collect(),
        }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.module, other.module);
        let blocks_self = self.block_matrices();
        let blocks_other = other.block_matrices();
        let composed: Vec<_> = blocks_other
            .iter()
            .zip(&blocks_self)
            .map(|(bo, bs)| bo.matmul(bs))
            .collect();
        Self::from_block_matrices(&self.module, &composed).expect("shape preserved")
    }

    /// One dense complex matrix per algebra block: block `b` has size
    /// `rank * k_b` and entry `[(i,r), (j,c)] = t_{ij}[r, c]`. This is a
    /// *-isomorphism onto the direct sum of full matrix algebras, so
    /// adjoints, positivity and spectra can be read off blockwise.
    pub fn block_matrices(&self) -> Vec<ComplexMatrix<T>> {
        let n = self.module.rank();
        self.module
            .algebra()
            .block_dims()
            .iter()
            .enumerate()
            .map(|(b, &k)| {
                ComplexMatrix::from_fn(n * k, n * k, |row, col| {
                    let (i, r) = (row / k, row % k);
                    let (j, c) = (col / k, col % k);
                    self.coeff(i, j).block(b).get(r, c)
                })
            })
            .collect()
    }

    pub fn from_block_matrices(
        module: &HilbertModule,
        blocks: &[ComplexMatrix<T>],
    ) -> Result<Self, FrameError> {
        let n = module.rank();
        let dims = module.algebra().block_dims();
        if blocks.len() != dims.len()
            || blocks.iter().zip(dims).any(|(m, &k)| m.rows() != n * k || m.cols() != n * k)
        {
            return Err(FrameError::ModuleMismatch);
        }
        let mut coeffs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let element_blocks = dims
                    .iter()
                    .enumerate()
                    .map(|(b, &k)| {
                        ComplexMatrix::from_fn(k, k, |r, c| blocks[b].get(i * k + r, j * k + c))
                    })
                    .collect();
                coeffs.push(AlgebraElement::new(module.algebra().clone(), element_blocks)?);
            }
        }
        Ok(Self { module: module.clone(), coeffs })
    }

    /// Inverse in `End*_A(A^n)`, computed blockwise.
    pub fn inverse(&self) -> Result<Self, FrameError> {
        let mut inverted = Vec::new();
        for b in self.block_matrices() {
            inverted.push(b.inverse().map_err(|_| FrameError::SingularOperator)?);
        }
        Self::from_block_matrices(&self.module, &inverted)
    }

    pub fn operator_norm(&self) -> T {
        self.block_matrices()
            .iter()
            .map(|b| b.operator_norm())
            .fold(T::zero(), |a, b| a.max(b))
    }

    pub fn min_singular_value(&self) -> T {
        self.block_matrices()
            .iter()
            .map(|b| b.min_singular_value())
            .fold(T::infinity(), |a, b| a.min(b))
    }

    /// Operator-norm distance, blockwise.
    pub fn operator_distance(&self, other: &Self) -> T {
        self.sub(other).operator_norm()
    }

    /// Self-adjointness defect in Frobenius norm over the blocks.
    pub fn self_adjoint_defect(&self) -> T {
        let d = self.sub(&self.adjoint());
        d.block_matrices()
            .iter()
            .map(|b| {
                let f = b.frobenius_norm();
                f * f
            })
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Extremal eigenvalues over all blocks of the flattened representation.
    pub fn spectral_range(&self) -> Result<(T, T), FrameError> {
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for b in self.block_matrices() {
            let eig = hermitian_eigen(&b)?;
            lo = lo.min(eig.min());
            hi = hi.max(eig.max());
        }
        Ok((lo, hi))
    }

    /// Full flattened matrix of the operator on the complex vector space
    /// underlying the module (columns are images of the flattened standard
    /// basis). Intended for small sizes and cross-checks.
    pub fn trace_matrix(&self) -> ComplexMatrix<T> {
        let dim = self.module.flat_dim();
        let mut out = ComplexMatrix::zeros(dim, dim);
        for (j, basis) in self.module.spanning_set::<T>().iter().enumerate() {
            let image = self.apply(basis).flatten();
            for (i, v) in image.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }

    /// Kronecker-style tensor of operators: `(Q ⊗ R)(x ⊗ y) = Qx ⊗ Ry`.
    pub fn tensor(&self, other: &Self) -> Self {
        let module = self.module.tensor(&other.module);
        let (n, m) = (self.module.rank(), other.module.rank());
        let mut coeffs = Vec::with_capacity(n * m * n * m);
        for i in 0..n {
            for k in 0..m {
                for j in 0..n {
                    for l in 0..m {
                        coeffs.push(self.coeff(i, j).tensor(other.coeff(k, l)));
                    }
                }
            }
        }
        Self { module, coeffs }
    }
}

/// Optimal two-sided frame bounds `0 < lower ≤ upper`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBounds<T: Scalar = f64> {
    lower: T,
    upper: T,
}

impl<T: Scalar> FrameBounds<T> {
    pub fn new(lower: T, upper: T) -> Self {
        assert!(
            lower > T::zero() && lower <= upper,
            "frame bounds must satisfy 0 < lower <= upper"
        );
        Self { lower, upper }
    }

    pub fn lower(&self) -> T {
        self.lower
    }

    pub fn upper(&self) -> T {
        self.upper
    }

    pub fn is_tight(&self, tol: T) -> bool {
        self.upper - self.lower <= tol * T::one().max(self.upper)
    }
}

/// A finite indexed family of module vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleFrame<T: Scalar = f64> {
    module: HilbertModule,
    vectors: Vec<ModuleVector<T>>,
    labels: Vec<String>,
}

impl<T: Scalar> ModuleFrame<T> {
    pub fn new(module: HilbertModule, vectors: Vec<ModuleVector<T>>) -> Result<Self, FrameError> {
        if vectors.is_empty() {
            return Err(FrameError::EmptyFrame);
        }
        if vectors.iter().any(|v| v.module() != &module) {
            return Err(FrameError::ModuleMismatch);
        }
        let labels = (0..vectors.len()).map(|i| i.to_string()).collect();
        Ok(Self { module, vectors, labels })
    }

    /// Frame of a plain Hilbert space from scalar coordinate vectors.
    pub fn from_scalar_vectors(vectors: Vec<Vec<Complex<T>>>) -> Result<Self, FrameError> {
        if vectors.is_empty() {
            return Err(FrameError::EmptyFrame);
        }
        let dim = vectors[0].len();
        let module = HilbertModule::hilbert_space(dim);
        let vectors = vectors
            .into_iter()
            .map(|coords| {
                if coords.len() != dim {
                    Err(FrameError::ModuleMismatch)
                } else {
                    Ok(ModuleVector::from_scalar_coords(coords))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(module, vectors)
    }

    pub fn module(&self) -> &HilbertModule {
        &self.module
    }

    pub fn vectors(&self) -> &[ModuleVector<T>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vectors.len());
        self.labels = labels;
        self
    }

    /// The frame operator `Ŝx = Σ_i ⟨x, x_i⟩ x_i`, as coefficients
    /// `t_{kj} = Σ_i (x_i)_k* (x_i)_j`. Always defined, self-adjoint and
    /// positive; invertible exactly when the family is a frame.
    pub fn frame_operator(&self) -> AdjointableOperator<T> {
        let n = self.module.rank();
        let mut coeffs = Vec::with_capacity(n * n);
        for k in 0..n {
            for j in 0..n {
                let mut acc = AlgebraElement::zero(self.module.algebra());
                for x in &self.vectors {
                    acc = acc.add(&x.coords()[k].adjoint().mul(&x.coords()[j]));
                }
                coeffs.push(acc);
            }
        }
        AdjointableOperator { module: self.module.clone(), coeffs }
    }

    /// Inverse of the frame operator; satisfies the reconstruction identity
    /// `x = Σ_i ⟨x, Ŝ⁻¹x_i⟩ x_i`.
    pub fn frame_operator_inverse(&self) -> Result<AdjointableOperator<T>, FrameError> {
        self.frame_bounds(T::DEFAULT_TOL)?;
        self.frame_operator().inverse()
    }

    /// Optimal frame bounds: the extremal eigenvalues of the frame operator
    /// in the flattened representation. Fails with `NotAFrame` when the
    /// smallest eigenvalue is at most `tol * max(1, λ_max)`.
    pub fn frame_bounds(&self, tol: T) -> Result<FrameBounds<T>, FrameError> {
        let (lo, hi) = self.frame_operator().spectral_range()?;
        if lo <= tol * T::one().max(hi) {
            return Err(FrameError::NotAFrame {
                lower: lo.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(FrameBounds::new(lo, hi))
    }

    /// Independent pointwise check of the two-sided frame inequality in the
    /// Loewner order of the algebra, on `samples` pseudo-random vectors. This
    /// deliberately avoids the frame-operator machinery: the middle term is
    /// accumulated directly as `Σ_i ⟨x, x_i⟩⟨x_i, x⟩`.
    pub fn verify_pointwise(&self, bounds: &FrameBounds<T>, samples: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let slack = real::<T>(1e-7).max(T::DEFAULT_TOL);
        for _ in 0..samples {
            let x = random_vector(&mut rng, &self.module);
            let gram = match x.inner(&x) {
                Ok(g) => g,
                Err(_) => return false,
            };
            let mut mid = AlgebraElement::zero(self.module.algebra());
            for v in &self.vectors {
                let p = match x.inner(v) {
                    Ok(p) => p,
                    Err(_) => return false,
                };
                mid = mid.add(&p.mul(&p.adjoint()));
            }
            let lower_ok = gram
                .scale_re(bounds.lower())
                .loewner_leq(&mid, slack)
                .unwrap_or(false);
            let upper_ok = mid
                .loewner_leq(&gram.scale_re(bounds.upper()), slack)
                .unwrap_or(false);
            if !lower_ok || !upper_ok {
                return false;
            }
        }
        true
    }

    /// Frame reconstruction `Σ_i ⟨x, Ŝ⁻¹x_i⟩ x_i`; equals `x` within
    /// tolerance for every frame.
    pub fn reconstruct(&self, x: &ModuleVector<T>) -> Result<ModuleVector<T>, FrameError> {
        let inv = self.frame_operator_inverse()?;
        let mut acc = ModuleVector::zero(&self.module);
        for v in &self.vectors {
            let dual = inv.apply(v);
            let coeff = x.inner(&dual)?;
            acc = acc.add(&v.left_mul(&coeff));
        }
        Ok(acc)
    }

    /// Tensor product frame `{u_i ⊗ v_j}` in lexicographic order (left index
    /// outer). Optimal bounds multiply.
    pub fn tensor(&self, other: &Self) -> Self {
        let module = self.module.tensor(&other.module);
        let mut vectors = Vec::with_capacity(self.len() * other.len());
        let mut labels = Vec::with_capacity(self.len() * other.len());
        for (u, lu) in self.vectors.iter().zip(&self.labels) {
            for (v, lv) in other.vectors.iter().zip(&other.labels) {
                vectors.push(u.tensor(v));
                labels.push(format!("({lu},{lv})"));
            }
        }
        Self { module, vectors, labels }
    }

    /// The transformed family `{Q x_i}` for invertible `Q`; its frame
    /// operator is `Q Ŝ Q*`.
    pub fn transform(&self, q: &AdjointableOperator<T>) -> Result<Self, FrameError> {
        assert_eq!(q.module(), &self.module, "module mismatch");
        let sigma_min = q.min_singular_value();
        if sigma_min <= T::DEFAULT_TOL * T::one().max(q.operator_norm()) {
            return Err(FrameError::SingularOperator);
        }
        let vectors = self.vectors.iter().map(|x| q.apply(x)).collect();
        Ok(Self {
            module: self.module.clone(),
            vectors,
            labels: self.labels.clone(),
        })
    }
}

/// Orthonormal-basis test: every `⟨v, v⟩` is a minimal projection, distinct
/// vectors are orthogonal, and reconstruction `x = Σ ⟨x, v⟩ v` holds on a
/// complex-linear spanning set of the module.
pub fn is_orthonormal_basis<T: Scalar>(vectors: &[ModuleVector<T>], tol: T) -> bool {
    let module = match vectors.first() {
        Some(v) => v.module().clone(),
        None => return false,
    };
    if vectors.iter().any(|v| v.module() != &module) {
        return false;
    }
    for (i, v) in vectors.iter().enumerate() {
        let gram = match v.inner(v) {
            Ok(g) => g,
            Err(_) => return false,
        };
        if !gram.is_minimal_projection(tol.max(T::DEFAULT_TOL)) {
            return false;
        }
        for w in &vectors[i + 1..] {
            match v.inner(w) {
                Ok(g) if g.frobenius_norm() <= tol.max(T::DEFAULT_TOL) => {}
                _ => return false,
            }
        }
    }
    for x in module.spanning_set::<T>() {
        let mut acc = ModuleVector::zero(&module);
        for v in vectors {
            let coeff = match x.inner(v) {
                Ok(c) => c,
                Err(_) => return false,
            };
            acc = acc.add(&v.left_mul(&coeff));
        }
        if acc.distance(&x) > tol.max(T::DEFAULT_TOL) * (T::one() + x.norm()) {
            return false;
        }
    }
    true
}

fn random_vector<T: Scalar>(rng: &mut ChaCha8Rng, module: &HilbertModule) -> ModuleVector<T> {
    let coeffs: Vec<Complex<T>> = (0..module.flat_dim())
        .map(|_| {
            Complex::new(
                real::<T>(rng.gen_range(-1.0..1.0)),
                real::<T>(rng.gen_range(-1.0..1.0)),
            )
        })
        .collect();
    ModuleVector::unflatten(module, &coeffs)
}
