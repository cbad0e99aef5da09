//! Frame representations of finite abelian groups: characters, spectral
//! projections, frame-vector orbits, analysis operators and their shift
//! intertwining, decomposition operators onto the weighted character space,
//! tensor products of representations, and Bessel bounds.
//!
//! Groups are given as products of cyclic groups with a stable lexicographic
//! element enumeration (first factor outermost), which matches Kronecker row
//! order so that all tensor identities hold index-exactly.

use num_complex::Complex;

use crate::linalg::{hermitian_eigen, ComplexMatrix, LinalgError};
use crate::modframe::{FrameError, ModuleFrame, ModuleVector};
use crate::scalar::{count, real, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("spectral projection has rank {rank}: representation admits no frame vector")]
    MultiplicityTooHigh { rank: usize },
    #[error("not a frame vector: {0}")]
    NotAFrameVector(String),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite abelian group as a product of cyclic groups; elements are tuples
/// `(k_1, …, k_r)` with `0 ≤ k_l < n_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    cyclic_orders: Vec<usize>,
}

impl FiniteAbelianGroup {
    pub fn new(cyclic_orders: Vec<usize>) -> Result<Self, GroupError> {
        if cyclic_orders.is_empty() || cyclic_orders.contains(&0) {
            return Err(GroupError::ShapeMismatch(
                "cyclic orders must be a nonempty list of positive counts".into(),
            ));
        }
        Ok(Self { cyclic_orders })
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(vec![n]).expect("positive order")
    }

    pub fn cyclic_orders(&self) -> &[usize] {
        &self.cyclic_orders
    }

    pub fn order(&self) -> usize {
        self.cyclic_orders.iter().product()
    }

    /// Stable lexicographic enumeration, first coordinate outermost.
    pub fn elements(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    pub fn element(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.cyclic_orders.len()];
        for (slot, &n) in self.cyclic_orders.iter().enumerate().rev() {
            out[slot] = index % n;
            index /= n;
        }
        out
    }

    pub fn index_of(&self, element: &[usize]) -> usize {
        assert_eq!(element.len(), self.cyclic_orders.len());
        let mut idx = 0;
        for (&k, &n) in element.iter().zip(&self.cyclic_orders) {
            debug_assert!(k < n);
            idx = idx * n + k;
        }
        idx
    }

    pub fn zero(&self) -> Vec<usize> {
        vec![0; self.cyclic_orders.len()]
    }

    pub fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .zip(&self.cyclic_orders)
            .map(|((&x, &y), &n)| (x + y) % n)
            .collect()
    }

    pub fn neg(&self, a: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(&self.cyclic_orders)
            .map(|(&x, &n)| (n - x) % n)
            .collect()
    }

    /// Direct sum, by concatenating cyclic orders. Element enumeration pairs
    /// the left factor outer, matching Kronecker row order.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.cyclic_orders.clone();
        orders.extend_from_slice(&other.cyclic_orders);
        Self { cyclic_orders: orders }
    }
}

/// A character `χ(k) = exp(2πi Σ_l j_l k_l / n_l)` of a finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    group: FiniteAbelianGroup,
    exponents: Vec<usize>,
}

impl Character {
    pub fn new(group: FiniteAbelianGroup, exponents: Vec<usize>) -> Self {
        assert_eq!(exponents.len(), group.cyclic_orders().len());
        Self { group, exponents }
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn eval<T: Scalar>(&self, element: &[usize]) -> Complex<T> {
        let mut angle = T::zero();
        let two_pi = T::PI() + T::PI();
        for ((&j, &k), &n) in self.exponents.iter().zip(element).zip(self.group.cyclic_orders()) {
            let frac = count::<T>((j * k) % n) / count::<T>(n);
            angle = angle + two_pi * frac;
        }
        Complex::cis(angle)
    }

    /// Pointwise product of characters: exponents add componentwise.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .zip(self.group.cyclic_orders())
            .map(|((&a, &b), &n)| (a + b) % n)
            .collect();
        Self { group: self.group.clone(), exponents }
    }

    /// Character of a direct sum with concatenated exponents.
    pub fn tensor(&self, other: &Self) -> Self {
        let group = self.group.direct_sum(&other.group);
        let mut exponents = self.exponents.clone();
        exponents.extend_from_slice(&other.exponents);
        Self { group, exponents }
    }
}

/// All `|G|` characters of the dual group, enumerated like the elements.
pub fn characters(group: &FiniteAbelianGroup) -> Vec<Character> {
    (0..group.order())
        .map(|i| Character::new(group.clone(), group.element(i)))
        .collect()
}

/// A unitary representation of a finite abelian group on `C^d`, stored as one
/// matrix per group element in enumeration order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupRepresentation<T: Scalar = f64> {
    group: FiniteAbelianGroup,
    dim: usize,
    matrices: Vec<ComplexMatrix<T>>,
}

impl<T: Scalar> GroupRepresentation<T> {
    pub fn new(
        group: FiniteAbelianGroup,
        matrices: Vec<ComplexMatrix<T>>,
    ) -> Result<Self, GroupError> {
        if matrices.len() != group.order() {
            return Err(GroupError::ShapeMismatch(format!(
                "group has {} elements, got {} matrices",
                group.order(),
                matrices.len()
            )));
        }
        let dim = matrices[0].rows();
        if dim == 0 || matrices.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(GroupError::ShapeMismatch(
                "representation matrices must be square of a common positive dimension".into(),
            ));
        }
        Ok(Self { group, dim, matrices })
    }

    /// Builds the representation from one matrix per cyclic generator:
    /// `π(k_1, …, k_r) = g_1^{k_1} ⋯ g_r^{k_r}`.
    pub fn from_generators(
        group: FiniteAbelianGroup,
        generators: &[ComplexMatrix<T>],
    ) -> Result<Self, GroupError> {
        if generators.len() != group.cyclic_orders().len() {
            return Err(GroupError::ShapeMismatch(format!(
                "group has {} cyclic factors, got {} generators",
                group.cyclic_orders().len(),
                generators.len()
            )));
        }
        let dim = generators.first().map_or(1, |g| g.rows());
        let matrices = group
            .elements()
            .iter()
            .map(|element| {
                let mut m = ComplexMatrix::identity(dim);
                for (gen, &k) in generators.iter().zip(element) {
                    for _ in 0..k {
                        m = m.matmul(gen);
                    }
                }
                m
            })
            .collect();
        Self::new(group, matrices)
    }

    pub fn trivial(group: FiniteAbelianGroup) -> Self {
        let matrices = (0..group.order()).map(|_| ComplexMatrix::identity(1)).collect();
        Self { group, dim: 1, matrices }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, index: usize) -> &ComplexMatrix<T> {
        &self.matrices[index]
    }

    pub fn matrix_of(&self, element: &[usize]) -> &ComplexMatrix<T> {
        &self.matrices[self.group.index_of(element)]
    }

    /// Checks unitarity of every matrix, the homomorphism property over all
    /// `|G|²` pairs, and the identity at 0.
    pub fn verify(&self, tol: T) -> bool {
        let scale = T::one().max(count::<T>(self.dim).sqrt());
        let id = ComplexMatrix::identity(self.dim);
        if self.matrices[0].distance(&id) > tol * scale {
            return false;
        }
        for m in &self.matrices {
            if m.adjoint().matmul(m).distance(&id) > tol * scale {
                return false;
            }
        }
        let elements = self.group.elements();
        for (i, g) in elements.iter().enumerate() {
            for (j, h) in elements.iter().enumerate() {
                let sum_idx = self.group.index_of(&self.group.add(g, h));
                let prod = self.matrices[i].matmul(&self.matrices[j]);
                if prod.distance(&self.matrices[sum_idx]) > tol * scale {
                    return false;
                }
            }
        }
        true
    }

    /// The orbit `{π(g) v}` in enumeration order, as a frame candidate of the
    /// underlying Hilbert space.
    pub fn orbit(&self, v: &ComplexMatrix<T>) -> Result<ModuleFrame<T>, GroupError> {
        if v.rows() != self.dim || v.cols() != 1 {
            return Err(GroupError::ShapeMismatch(format!(
                "frame vector must be a {}x1 column, got {}x{}",
                self.dim,
                v.rows(),
                v.cols()
            )));
        }
        let vectors = self
            .matrices
            .iter()
            .map(|m| ModuleVector::from_scalar_coords(m.matmul(v).column_entries().to_vec()))
            .collect();
        let module = crate::modframe::HilbertModule::hilbert_space(self.dim);
        Ok(ModuleFrame::new(module, vectors)?)
    }

    /// Analysis operator of the orbit: row `g` maps `x` to `⟨x, π(g)v⟩`.
    pub fn analysis(&self, v: &ComplexMatrix<T>) -> Result<AnalysisMatrix<T>, GroupError> {
        if v.rows() != self.dim || v.cols() != 1 {
            return Err(GroupError::ShapeMismatch("frame vector shape".into()));
        }
        let theta = ComplexMatrix::from_fn(self.group.order(), self.dim, |g, k| {
            self.matrices[g].matmul(v).get(k, 0).conj()
        });
        Ok(AnalysisMatrix { group: self.group.clone(), theta })
    }

    /// Spectral data of the representation at a frame vector: the support of
    /// the spectral measure, its rank-one projections
    /// `P_χ = (1/|G|) Σ_g conj(χ(g)) π(g)`, and the induced orthonormal basis
    /// vectors `b_χ = P_χ v / ‖P_χ v‖` (the phase convention `⟨v, b_χ⟩ > 0`
    /// holds automatically for this choice).
    pub fn spectral(&self, v: &ComplexMatrix<T>, tol: T) -> Result<SpectralData<T>, GroupError> {
        let order = self.group.order();
        let weight = T::one() / count::<T>(order);
        let chars = characters(&self.group);
        let tol = tol.max(T::DEFAULT_TOL);

        let mut support = Vec::new();
        let mut projections = Vec::new();
        for chi in &chars {
            let mut p = ComplexMatrix::zeros(self.dim, self.dim);
            for (g, element) in self.group.elements().iter().enumerate() {
                let c = chi.eval::<T>(element).conj() * Complex::new(weight, T::zero());
                p = &p + &self.matrices[g].scale(c);
            }
            if p.frobenius_norm() <= tol {
                continue;
            }
            let eig = hermitian_eigen(&p)?;
            let half = real::<T>(0.5);
            let rank = eig.eigenvalues().iter().filter(|&&x| x > half).count();
            if rank >= 2 {
                return Err(GroupError::MultiplicityTooHigh { rank });
            }
            support.push(chi.clone());
            projections.push(p);
        }

        // The candidate must actually generate a frame.
        let orbit = self.orbit(v)?;
        if let Err(e) = orbit.frame_bounds(T::DEFAULT_TOL) {
            return Err(GroupError::NotAFrameVector(e.to_string()));
        }

        let mut basis_vectors = Vec::with_capacity(support.len());
        for p in &projections {
            let pv = p.matmul(v);
            let norm = pv.frobenius_norm();
            if norm <= tol {
                return Err(GroupError::NotAFrameVector(
                    "frame vector has no component in a support projection".into(),
                ));
            }
            basis_vectors.push(pv.scale_re(T::one() / norm));
        }
        Ok(SpectralData {
            group: self.group.clone(),
            dim: self.dim,
            support,
            projections,
            basis_vectors,
        })
    }

    /// Tensor representation of the direct sum group:
    /// `(π ⊗ σ)(g, h) = π(g) ⊗ σ(h)` with the pair `(g outer, h inner)`.
    pub fn tensor(&self, other: &Self) -> Self {
        let group = self.group.direct_sum(&other.group);
        let matrices = self
            .matrices
            .iter()
            .flat_map(|a| other.matrices.iter().map(move |b| a.kron(b)))
            .collect();
        Self { group, dim: self.dim * other.dim, matrices }
    }

    /// Optimal Bessel bound of a vector: the largest eigenvalue of
    /// `Σ_g (π(g)v')(π(g)v')*`. Always finite in finite dimension.
    pub fn bessel_bound(&self, v: &ComplexMatrix<T>) -> Result<T, GroupError> {
        if v.rows() != self.dim || v.cols() != 1 {
            return Err(GroupError::ShapeMismatch("vector shape".into()));
        }
        let mut s = ComplexMatrix::zeros(self.dim, self.dim);
        for m in &self.matrices {
            let w = m.matmul(v);
            s = &s + &w.matmul(&w.adjoint());
        }
        let eig = hermitian_eigen(&s)?;
        Ok(eig.max().max(T::zero()))
    }
}

/// The translation permutation `L_g` on functions over the group:
/// `(L_g x)(h) = x(h - g)`.
pub fn translation_matrix<T: Scalar>(
    group: &FiniteAbelianGroup,
    g: &[usize],
) -> ComplexMatrix<T> {
    let order = group.order();
    let mut m = ComplexMatrix::zeros(order, order);
    for (h_idx, h) in group.elements().iter().enumerate() {
        let src = group.index_of(&group.add(h, &group.neg(g)));
        m.set(h_idx, src, Complex::new(T::one(), T::zero()));
    }
    m
}

/// The analysis operator of a frame-vector orbit as a `|G| x d` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisMatrix<T: Scalar = f64> {
    group: FiniteAbelianGroup,
    theta: ComplexMatrix<T>,
}

impl<T: Scalar> AnalysisMatrix<T> {
    pub fn theta(&self) -> &ComplexMatrix<T> {
        &self.theta
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// `Θ* Θ`, the frame operator of the orbit on the underlying space.
    pub fn frame_operator_matrix(&self) -> ComplexMatrix<T> {
        self.theta.adjoint().matmul(&self.theta)
    }

    /// Largest deviation `‖Θ π(g) − L_g Θ‖` over all group elements.
    pub fn intertwining_defect(&self, rep: &GroupRepresentation<T>) -> T {
        assert_eq!(&self.group, rep.group());
        let mut worst = T::zero();
        for (g_idx, g) in self.group.elements().iter().enumerate() {
            let lhs = self.theta.matmul(rep.matrix(g_idx));
            let rhs = translation_matrix::<T>(&self.group, g).matmul(&self.theta);
            worst = worst.max(lhs.distance(&rhs));
        }
        worst
    }
}

/// Support, projections and induced orthonormal vectors of the spectral
/// measure of a multiplicity-free representation.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData<T: Scalar = f64> {
    group: FiniteAbelianGroup,
    dim: usize,
    support: Vec<Character>,
    projections: Vec<ComplexMatrix<T>>,
    basis_vectors: Vec<ComplexMatrix<T>>,
}

impl<T: Scalar> SpectralData<T> {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &[Character] {
        &self.support
    }

    pub fn projections(&self) -> &[ComplexMatrix<T>] {
        &self.projections
    }

    pub fn basis_vectors(&self) -> &[ComplexMatrix<T>] {
        &self.basis_vectors
    }

    /// `‖Σ P_χ − I‖`.
    pub fn completeness_defect(&self) -> T {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for p in &self.projections {
            sum = &sum + p;
        }
        sum.distance(&ComplexMatrix::identity(self.dim))
    }

    /// Largest deviation `‖π(g) − Σ_χ χ(g) P_χ‖` over all group elements.
    pub fn resolution_defect(&self, rep: &GroupRepresentation<T>) -> T {
        assert_eq!(&self.group, rep.group());
        let mut worst = T::zero();
        for (g_idx, g) in self.group.elements().iter().enumerate() {
            let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
            for (chi, p) in self.support.iter().zip(&self.projections) {
                sum = &sum + &p.scale(chi.eval::<T>(g));
            }
            worst = worst.max(sum.distance(rep.matrix(g_idx)));
        }
        worst
    }

    /// The decomposition operator `(Ux)(χ) = √|G| ⟨x, b_χ⟩`, unitary onto the
    /// support characters under the normalized counting measure `1/|G|`.
    pub fn decomposition(&self) -> DecompositionOperator<T> {
        let order = self.group.order();
        let scale = count::<T>(order).sqrt();
        let matrix = ComplexMatrix::from_fn(self.support.len(), self.dim, |row, k| {
            self.basis_vectors[row].get(k, 0).conj() * Complex::new(scale, T::zero())
        });
        DecompositionOperator {
            matrix,
            measure_weight: T::one() / count::<T>(order),
        }
    }

    /// Spectral data of the tensor representation: support pairs, Kronecker
    /// projections, and tensor basis vectors.
    pub fn tensor(&self, other: &Self) -> Self {
        let group = self.group.direct_sum(&other.group);
        let mut support = Vec::new();
        let mut projections = Vec::new();
        let mut basis_vectors = Vec::new();
        for (chi, (p, b)) in self
            .support
            .iter()
            .zip(self.projections.iter().zip(&self.basis_vectors))
        {
            for (psi, (q, c)) in other
                .support
                .iter()
                .zip(other.projections.iter().zip(&other.basis_vectors))
            {
                support.push(chi.tensor(psi));
                projections.push(p.kron(q));
                basis_vectors.push(b.kron(c));
            }
        }
        Self {
            group,
            dim: self.dim * other.dim,
            support,
            projections,
            basis_vectors,
        }
    }
}

/// The decomposition operator together with the measure weight of the
/// normalized counting measure on the dual group.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionOperator<T: Scalar = f64> {
    matrix: ComplexMatrix<T>,
    measure_weight: T,
}

impl<T: Scalar> DecompositionOperator<T> {
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn measure_weight(&self) -> T {
        self.measure_weight
    }

    pub fn apply(&self, x: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.matrix.matmul(x)
    }

    /// Norm in the weighted target space, `(w Σ_χ |f(χ)|²)^{1/2}`.
    pub fn weighted_norm(&self, f: &ComplexMatrix<T>) -> T {
        f.frobenius_norm() * self.measure_weight.sqrt()
    }

    /// `‖w U* U − I‖`: zero exactly when `U` is unitary for the weighted
    /// inner product.
    pub fn unitarity_defect(&self) -> T {
        let gram = self.matrix.adjoint().matmul(&self.matrix).scale_re(self.measure_weight);
        gram.distance(&ComplexMatrix::identity(self.matrix.cols()))
    }

    /// Largest deviation `‖U π(g) − M_g U‖` over all group elements, where
    /// `M_g` multiplies coordinate `χ` by `χ(g)`.
    pub fn intertwining_defect(&self, rep: &GroupRepresentation<T>, sd: &SpectralData<T>) -> T {
        let mut worst = T::zero();
        for (g_idx, g) in sd.group().elements().iter().enumerate() {
            let lhs = self.matrix.matmul(rep.matrix(g_idx));
            let mut rhs = self.matrix.clone();
            for (row, chi) in sd.support().iter().enumerate() {
                let c = chi.eval::<T>(g);
                for k in 0..rhs.cols() {
                    let v = rhs.get(row, k) * c;
                    rhs.set(row, k, v);
                }
            }
            worst = worst.max(lhs.distance(&rhs));
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    /// The Z4 workhorse: π(k) = diag(1, i^k) on C².
    fn z4_rep() -> GroupRepresentation<f64> {
        let gen = ComplexMatrix::from_rows(vec![
            vec![re(1.0), re(0.0)],
            vec![re(0.0), c(0.0, 1.0)],
        ]);
        GroupRepresentation::from_generators(FiniteAbelianGroup::cyclic(4), &[gen]).unwrap()
    }

    fn column(entries: Vec<Complex64>) -> ComplexMatrix<f64> {
        ComplexMatrix::column(entries)
    }

    #[test]
    fn characters_of_z2() {
        let g = FiniteAbelianGroup::cyclic(2);
        let chars = characters(&g);
        assert_eq!(chars.len(), 2);
        assert!((chars[0].eval::<f64>(&[1]) - re(1.0)).norm() <= 1e-15);
        assert!((chars[1].eval::<f64>(&[1]) - re(-1.0)).norm() <= 1e-15);
    }

    #[test]
    fn characters_of_z4_are_power_of_i_table() {
        let g = FiniteAbelianGroup::cyclic(4);
        let chars = characters(&g);
        let i = c(0.0, 1.0);
        for (j, chi) in chars.iter().enumerate() {
            for k in 0..4 {
                let mut expected = re(1.0);
                for _ in 0..(j * k) % 4 {
                    expected *= i;
                }
                assert!((chi.eval::<f64>(&[k]) - expected).norm() <= 1e-14);
            }
        }
    }

    #[test]
    fn character_orthogonality_relations() {
        for orders in [vec![4], vec![2, 3], vec![2, 2, 2]] {
            let g = FiniteAbelianGroup::new(orders).unwrap();
            let chars = characters(&g);
            let order = g.order();
            for (a, chi) in chars.iter().enumerate() {
                for (b, psi) in chars.iter().enumerate() {
                    let mut sum = Complex64::new(0.0, 0.0);
                    for element in g.elements() {
                        sum += chi.eval::<f64>(&element) * psi.eval::<f64>(&element).conj();
                    }
                    sum /= order as f64;
                    let expected = if a == b { re(1.0) } else { re(0.0) };
                    assert!((sum - expected).norm() <= 1e-12);
                }
            }
            // Closure under multiplication, the homomorphism property, and
            // unimodularity.
            let prod = chars[1].mul(chars.last().unwrap());
            assert!(chars.iter().any(|c| c == &prod));
            for chi in &chars {
                for a in g.elements() {
                    assert!((chi.eval::<f64>(&a).norm() - 1.0).abs() <= 1e-14);
                    for b in g.elements() {
                        let lhs = chi.eval::<f64>(&g.add(&a, &b));
                        let rhs = chi.eval::<f64>(&a) * chi.eval::<f64>(&b);
                        assert!((lhs - rhs).norm() <= 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn representation_verification() {
        let trivial = GroupRepresentation::<f64>::trivial(FiniteAbelianGroup::cyclic(3));
        assert!(trivial.verify(1e-12));

        assert!(z4_rep().verify(1e-12));

        let bad_gen = ComplexMatrix::from_real_rows(&[&[2.0, 0.0], &[0.0, 1.0]]);
        let bad =
            GroupRepresentation::from_generators(FiniteAbelianGroup::cyclic(4), &[bad_gen]).unwrap();
        assert!(!bad.verify(1e-9));
    }

    #[test]
    fn orbit_examples() {
        let rep = z4_rep();
        let v = column(vec![re(1.0), re(1.0)]);
        let orbit = rep.orbit(&v).unwrap();
        assert_eq!(orbit.len(), 4);
        let b = orbit.frame_bounds(1e-9).unwrap();
        assert!((b.lower() - 4.0).abs() <= 1e-10 && (b.upper() - 4.0).abs() <= 1e-10);

        // Rank-deficient orbit: NotAFrame, but Bessel bound 4.
        let v = column(vec![re(1.0), re(0.0)]);
        let orbit = rep.orbit(&v).unwrap();
        assert!(orbit.frame_bounds(1e-9).is_err());
        let bessel = rep.bessel_bound(&v).unwrap();
        assert!((bessel - 4.0).abs() <= 1e-10);

        let trivial = GroupRepresentation::<f64>::trivial(FiniteAbelianGroup::cyclic(3));
        let orbit = trivial.orbit(&column(vec![re(1.0)])).unwrap();
        let b = orbit.frame_bounds(1e-9).unwrap();
        assert!((b.lower() - 3.0).abs() <= 1e-12 && (b.upper() - 3.0).abs() <= 1e-12);
    }

    #[test]
    fn analysis_operator_examples() {
        let rep = z4_rep();
        let zero = column(vec![re(0.0), re(0.0)]);
        assert!(rep.analysis(&zero).unwrap().theta().frobenius_norm() <= 1e-15);

        let v = column(vec![re(1.0), re(1.0)]);
        let analysis = rep.analysis(&v).unwrap();
        // Row k is (1, (-i)^k).
        let minus_i = c(0.0, -1.0);
        for k in 0..4 {
            let mut expected = re(1.0);
            for _ in 0..k {
                expected *= minus_i;
            }
            assert!((analysis.theta().get(k, 0) - re(1.0)).norm() <= 1e-14);
            assert!((analysis.theta().get(k, 1) - expected).norm() <= 1e-14);
        }
        assert!(analysis.intertwining_defect(&rep) <= 1e-12);

        // Θ*Θ equals the orbit frame operator.
        let orbit = rep.orbit(&v).unwrap();
        let lhs = analysis.frame_operator_matrix();
        let rhs = orbit.frame_operator().trace_matrix();
        assert!(lhs.distance(&rhs) <= 1e-10);
    }

    #[test]
    fn spectral_data_examples() {
        let rep = z4_rep();
        let v = column(vec![re(1.0), re(1.0)]);
        let sd = rep.spectral(&v, 1e-9).unwrap();
        assert_eq!(sd.support().len(), 2);
        assert_eq!(sd.support()[0].exponents(), &[0]);
        assert_eq!(sd.support()[1].exponents(), &[1]);
        let p0 = ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let p1 = ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[0.0, 1.0]]);
        assert!(sd.projections()[0].distance(&p0) <= 1e-12);
        assert!(sd.projections()[1].distance(&p1) <= 1e-12);
        assert!(sd.completeness_defect() <= 1e-12);
        assert!(sd.resolution_defect(&rep) <= 1e-12);
        // Distinct support projections are mutually orthogonal.
        for (i, p) in sd.projections().iter().enumerate() {
            for (j, q) in sd.projections().iter().enumerate() {
                if i != j {
                    assert!(p.matmul(q).frobenius_norm() <= 1e-12);
                }
            }
        }

        let trivial = GroupRepresentation::<f64>::trivial(FiniteAbelianGroup::cyclic(5));
        let sd = trivial.spectral(&column(vec![re(1.0)]), 1e-9).unwrap();
        assert_eq!(sd.support().len(), 1);
        assert!((sd.projections()[0].get(0, 0) - re(1.0)).norm() <= 1e-14);

        // Multiplicity two: identity representation of Z2 on C².
        let id2 = ComplexMatrix::<f64>::identity(2);
        let rep = GroupRepresentation::from_generators(FiniteAbelianGroup::cyclic(2), &[id2])
            .unwrap();
        let v = column(vec![re(1.0), re(1.0)]);
        assert!(matches!(
            rep.spectral(&v, 1e-9),
            Err(GroupError::MultiplicityTooHigh { rank: 2 })
        ));
    }

    #[test]
    fn decomposition_operator_examples() {
        let trivial = GroupRepresentation::<f64>::trivial(FiniteAbelianGroup::cyclic(4));
        let sd = trivial.spectral(&column(vec![re(1.0)]), 1e-9).unwrap();
        let u = sd.decomposition();
        assert!((u.matrix().get(0, 0) - re(2.0)).norm() <= 1e-14);
        assert!(u.unitarity_defect() <= 1e-13);

        let rep = z4_rep();
        let v = column(vec![re(1.0), re(1.0)]);
        let sd = rep.spectral(&v, 1e-9).unwrap();
        let u = sd.decomposition();
        assert!(u.matrix().distance(&ComplexMatrix::identity(2).scale_re(2.0)) <= 1e-12);
        assert!(u.unitarity_defect() <= 1e-13);
        assert!(u.intertwining_defect(&rep, &sd) <= 1e-12);

        // Weighted norm preserves the vector norm.
        let x = column(vec![c(0.3, 0.1), c(-0.4, 0.9)]);
        let fx = u.apply(&x);
        assert!((u.weighted_norm(&fx) - x.frobenius_norm()).abs() <= 1e-12);
    }

    #[test]
    fn tensor_representation_examples() {
        let t1 = GroupRepresentation::<f64>::trivial(FiniteAbelianGroup::cyclic(2));
        let t2 = GroupRepresentation::<f64>::trivial(FiniteAbelianGroup::cyclic(3));
        let t = t1.tensor(&t2);
        assert!(t.verify(1e-12));
        let orbit = t.orbit(&column(vec![re(1.0)])).unwrap();
        let b = orbit.frame_bounds(1e-9).unwrap();
        assert!((b.lower() - 6.0).abs() <= 1e-12);

        let rep = z4_rep();
        let tt = rep.tensor(&rep);
        assert!(tt.verify(1e-12));
        let v = column(vec![re(1.0), re(1.0)]);
        let vv = v.kron(&v);
        let b = tt.orbit(&vv).unwrap().frame_bounds(1e-9).unwrap();
        assert!((b.lower() - 16.0).abs() <= 1e-9 && (b.upper() - 16.0).abs() <= 1e-9);

        // Analysis operators tensor along the index bijection.
        let lhs = tt.analysis(&vv).unwrap();
        let rhs = rep.analysis(&v).unwrap().theta().kron(rep.analysis(&v).unwrap().theta());
        assert!(lhs.theta().distance(&rhs) <= 1e-12);
    }

    #[test]
    fn tensor_decomposition_two_paths_agree() {
        let rep = z4_rep();
        let v = column(vec![re(1.0), re(1.0)]);
        let sd = rep.spectral(&v, 1e-9).unwrap();

        let tensor_sd = sd.tensor(&sd);
        let u_tensor = tensor_sd.decomposition();
        assert!(u_tensor
            .matrix()
            .distance(&ComplexMatrix::identity(4).scale_re(4.0)) <= 1e-12);
        assert!((u_tensor.measure_weight() - 1.0 / 16.0).abs() <= 1e-15);

        // Direct construction on the tensor representation.
        let tt = rep.tensor(&rep);
        let direct = tt.spectral(&v.kron(&v), 1e-9).unwrap();
        assert_eq!(direct.support().len(), tensor_sd.support().len());
        for (a, b) in direct.support().iter().zip(tensor_sd.support()) {
            assert_eq!(a.exponents(), b.exponents());
        }
        let u_direct = direct.decomposition();
        assert!(u_direct.matrix().distance(u_tensor.matrix()) <= 1e-12);
    }

    #[test]
    fn bessel_bound_examples() {
        let rep = z4_rep();
        let zero = column(vec![re(0.0), re(0.0)]);
        assert!(rep.bessel_bound(&zero).unwrap() <= 1e-15);

        let v = column(vec![re(1.0), re(0.0)]);
        assert!((rep.bessel_bound(&v).unwrap() - 4.0).abs() <= 1e-12);

        // Product law under tensoring.
        let w = column(vec![c(0.3, 0.2), c(-0.7, 0.4)]);
        let lhs = rep.tensor(&rep).bessel_bound(&v.kron(&w)).unwrap();
        let rhs = rep.bessel_bound(&v).unwrap() * rep.bessel_bound(&w).unwrap();
        assert!((lhs - rhs).abs() <= 1e-8 * (1.0 + rhs));
    }
}
