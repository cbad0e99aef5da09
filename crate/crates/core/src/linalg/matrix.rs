use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use super::LinalgError;
use crate::scalar::Scalar;

/// Dense complex matrix with row-major storage.
///
/// This is the universal carrier for operators, vectors (as single columns)
/// and projections throughout the crate. All operations are pure; a matrix is
/// never mutated after construction except through `set`.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T: Scalar = f64> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex<T>>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_real_rows(rows: &[&[T]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| Complex::new(x, T::zero())).collect())
                .collect(),
        )
    }

    /// Column vector from its entries.
    pub fn column(entries: Vec<Complex<T>>) -> Self {
        let rows = entries.len();
        Self { rows, cols: 1, entries }
    }

    pub fn from_real_column(entries: &[T]) -> Self {
        Self::column(entries.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.entries[i * self.cols + j] = v;
    }

    /// Column `j` as a column vector.
    pub fn col(&self, j: usize) -> Self {
        Self::column((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex<T> {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).fold(Complex::zero(), |a, b| a + b)
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), |a, b| a.max(b))
    }

    /// Frobenius distance to another matrix of the same shape.
    pub fn distance(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (self - other).frobenius_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.distance(other) <= tol
    }

    /// Frobenius norm of `M - M*`.
    pub fn hermitian_defect(&self) -> T {
        assert!(self.is_square());
        (self - &self.adjoint()).frobenius_norm()
    }

    /// Hermitian within a relative tolerance: `‖M − M*‖ ≤ tol·‖M‖`.
    pub fn is_hermitian(&self, tol: T) -> bool {
        self.is_square() && self.hermitian_defect() <= tol * self.frobenius_norm()
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i,j] * other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for r in 0..other.rows {
                    for c in 0..other.cols {
                        out.set(i * other.rows + r, j * other.cols + c, a * other.get(r, c));
                    }
                }
            }
        }
        out
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        let pivot_floor = self.max_abs() * T::epsilon() * crate::scalar::count::<T>(n.max(1));
        for col in 0..n {
            let (pivot_row, pivot_mag) = (col..n)
                .map(|r| (r, a.get(r, col).norm()))
                .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
                .unwrap();
            if pivot_mag <= pivot_floor {
                return Err(LinalgError::Singular);
            }
            if pivot_row != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot_row, j));
                    a.set(col, j, y);
                    a.set(pivot_row, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(pivot_row, j));
                    inv.set(col, j, y);
                    inv.set(pivot_row, j, x);
                }
            }
            let p = a.get(col, col);
            for j in 0..n {
                a.set(col, j, a.get(col, j) / p);
                inv.set(col, j, inv.get(col, j) / p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col);
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(r, j) - f * a.get(col, j);
                    a.set(r, j, v);
                    let v = inv.get(r, j) - f * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }

    /// Entries of a single-column matrix.
    pub fn column_entries(&self) -> &[Complex<T>] {
        assert_eq!(self.cols, 1, "not a column vector");
        &self.entries
    }
}

/// Reinterprets a length `n*m` coefficient vector as an `n x m` matrix with
/// `M[i,j] = z[i*m + j]` (row-major).
///
/// Under this layout `kron(P, Q) * z`, reshaped, equals `P * M * Q^T` for all
/// `P` (n x n) and `Q` (m x m).
pub fn reshape_vec_to_matrix<T: Scalar>(
    z: &[Complex<T>],
    n: usize,
    m: usize,
) -> Result<ComplexMatrix<T>, LinalgError> {
    if z.len() != n * m {
        return Err(LinalgError::ShapeMismatch(format!(
            "vector of length {} cannot reshape to {}x{}",
            z.len(),
            n,
            m
        )));
    }
    ComplexMatrix::new(n, m, z.to_vec())
}

impl<T: Scalar> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn neg(self) -> ComplexMatrix<T> {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&z| -z).collect(),
        }
    }
}

impl<T: Scalar> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Scalar> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigen;
    use num_complex::Complex64;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_matrix(rng: &mut ChaCha8Rng, r: usize, cm: usize) -> ComplexMatrix<f64> {
        ComplexMatrix::from_fn(r, cm, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
    }

    #[test]
    fn kron_identity_left_is_block_diagonal() {
        let n = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let k = ComplexMatrix::<f64>::identity(2).kron(&n);
        assert_eq!(k.rows(), 4);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(k.get(i, j), n.get(i, j));
                assert_eq!(k.get(2 + i, 2 + j), n.get(i, j));
                assert_eq!(k.get(i, 2 + j), c(0.0, 0.0));
                assert_eq!(k.get(2 + i, j), c(0.0, 0.0));
            }
        }
    }

    #[test]
    fn kron_with_one_by_one_factor_scales() {
        let m = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let n = ComplexMatrix::from_real_rows(&[&[2.0]]);
        let k = m.kron(&n);
        let expected = ComplexMatrix::from_real_rows(&[&[0.0, 2.0], &[2.0, 0.0]]);
        assert!(k.approx_eq(&expected, 0.0));
    }

    #[test]
    fn kron_block_rule_hand_expansion() {
        let m = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let n = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        // Expanding block (i,j) = m[i,j]*n by hand.
        let expected = ComplexMatrix::from_real_rows(&[
            &[0.0, 1.0, 0.0, 2.0],
            &[1.0, 0.0, 2.0, 0.0],
            &[0.0, 3.0, 0.0, 4.0],
            &[3.0, 0.0, 4.0, 0.0],
        ]);
        assert!(m.kron(&n).approx_eq(&expected, 0.0));
    }

    #[test]
    fn kron_mixed_product_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 2, 3);
            let b = random_matrix(&mut rng, 3, 2);
            let cmat = random_matrix(&mut rng, 4, 2);
            let d = random_matrix(&mut rng, 2, 3);
            let lhs = a.matmul(&b).kron(&cmat.matmul(&d));
            let rhs = a.kron(&cmat).matmul(&b.kron(&d));
            assert!(lhs.distance(&rhs) <= 1e-10, "mixed product law violated");
        }
    }

    #[test]
    fn reshape_elementary_tensor() {
        let mut z = vec![c(0.0, 0.0); 4];
        z[0] = c(1.0, 0.0); // e1 (x) e1 in C^2 (x) C^2
        let m = reshape_vec_to_matrix(&z, 2, 2).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, 0.0]]);
        assert!(m.approx_eq(&expected, 0.0));
    }

    #[test]
    fn reshape_row_major_layout() {
        let z: Vec<_> = [1.0, 2.0, 3.0, 4.0].iter().map(|&x| c(x, 0.0)).collect();
        let m = reshape_vec_to_matrix(&z, 2, 2).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        assert!(m.approx_eq(&expected, 0.0));
    }

    #[test]
    fn reshape_rejects_bad_length() {
        let z = vec![c(1.0, 0.0); 5];
        assert!(matches!(
            reshape_vec_to_matrix(&z, 2, 3),
            Err(LinalgError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn reshape_intertwines_kron_with_two_sided_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let (n, m) = (rng.gen_range(2..4usize), rng.gen_range(2..4usize));
            let p = random_matrix(&mut rng, n, n);
            let q = random_matrix(&mut rng, m, m);
            let z: Vec<_> = (0..n * m)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let zmat = reshape_vec_to_matrix(&z, n, m).unwrap();
            let lhs = {
                let kz = p.kron(&q).matmul(&ComplexMatrix::column(z.clone()));
                reshape_vec_to_matrix(kz.column_entries(), n, m).unwrap()
            };
            let rhs = p.matmul(&zmat).matmul(&q.transpose());
            assert!(lhs.distance(&rhs) <= 1e-10, "reshape identity violated");
        }
    }

    #[test]
    fn adjoint_is_involutive() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 3, 5);
        assert!(a.adjoint().adjoint().approx_eq(&a, 0.0));
    }

    #[test]
    fn inverse_round_trip_and_singular_detection() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_matrix(&mut rng, 4, 4);
        let inv = a.inverse().unwrap();
        assert!(a.matmul(&inv).distance(&ComplexMatrix::identity(4)) <= 1e-12);

        let mut s = ComplexMatrix::<f64>::zeros(2, 2);
        s.set(0, 0, c(1.0, 0.0)); // rank one
        assert!(matches!(s.inverse(), Err(LinalgError::Singular)));
    }

    #[test]
    fn gram_matrix_is_psd() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let x = random_matrix(&mut rng, 5, 3);
        let gram = x.adjoint().matmul(&x);
        let eig = hermitian_eigen(&gram).unwrap();
        assert!(eig.eigenvalues()[0] >= -1e-12);
    }
}
