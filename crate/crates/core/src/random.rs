//! Seeded random generators for frames, fusion frames, resolutions and group
//! representations. Everything is driven by a `ChaCha8Rng` so that identical
//! seeds reproduce identical objects across platforms.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use crate::cstar::{AlgebraElement, CStarAlgebra};
use crate::fusion::{FusionFrame, OperatorFamily, WeightedSubspace};
use crate::groupframe::{FiniteAbelianGroup, GroupRepresentation};
use crate::linalg::ComplexMatrix;
use crate::modframe::{HilbertModule, ModuleFrame, ModuleVector};
use crate::scalar::{real, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex<T: Scalar>(rng: &mut ChaCha8Rng) -> Complex<T> {
    Complex::new(real(rng.gen_range(-1.0..1.0)), real(rng.gen_range(-1.0..1.0)))
}

pub fn matrix<T: Scalar>(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, complex(rng));
        }
    }
    m
}

pub fn algebra_element<T: Scalar>(rng: &mut ChaCha8Rng, algebra: &CStarAlgebra) -> AlgebraElement<T> {
    let coeffs: Vec<Complex<T>> = (0..algebra.dim()).map(|_| complex(rng)).collect();
    AlgebraElement::unflatten(algebra, &coeffs)
}

pub fn module_vector<T: Scalar>(rng: &mut ChaCha8Rng, module: &HilbertModule) -> ModuleVector<T> {
    let coeffs: Vec<Complex<T>> = (0..module.flat_dim()).map(|_| complex(rng)).collect();
    ModuleVector::unflatten(module, &coeffs)
}

/// A random module frame with `count >= rank` vectors; resamples until the
/// lower bound is safely positive (full-rank synthesis).
pub fn module_frame<T: Scalar>(
    rng: &mut ChaCha8Rng,
    module: &HilbertModule,
    count: usize,
) -> ModuleFrame<T> {
    assert!(count >= module.rank(), "need at least rank-many vectors");
    loop {
        let vectors = (0..count).map(|_| module_vector(rng, module)).collect();
        let frame = ModuleFrame::new(module.clone(), vectors).expect("nonempty, same module");
        if let Ok(bounds) = frame.frame_bounds(real(1e-3)) {
            if bounds.lower() >= real::<T>(1e-2) * bounds.upper() {
                return frame;
            }
        }
    }
}

/// A random `d x d` unitary via Gram-Schmidt on a random matrix.
pub fn unitary<T: Scalar>(rng: &mut ChaCha8Rng, d: usize) -> ComplexMatrix<T> {
    loop {
        let raw = matrix(rng, d, d);
        if let Ok(w) = WeightedSubspace::new(raw, T::one()) {
            if w.dim() == d {
                return w.basis().clone();
            }
        }
    }
}

/// A random invertible operator on the module, kept well conditioned by
/// shifting with a multiple of the identity.
pub fn invertible_operator<T: Scalar>(
    rng: &mut ChaCha8Rng,
    module: &HilbertModule,
) -> crate::modframe::AdjointableOperator<T> {
    use crate::modframe::AdjointableOperator;
    loop {
        let n = module.rank();
        let coeffs: Vec<AlgebraElement<T>> = (0..n * n)
            .map(|_| algebra_element(rng, module.algebra()))
            .collect();
        let op = AdjointableOperator::new(module.clone(), coeffs).expect("shapes match");
        let shift = AdjointableOperator::identity(module).scale_re(real(2.0));
        let candidate = op.scale_re(real(0.5)).add(&shift);
        if candidate.min_singular_value() > real(0.2) {
            return candidate;
        }
    }
}

/// A random fusion frame of `C^d` with `count` members of dimension at most
/// `max_dim`; resamples until the family spans.
pub fn fusion_frame<T: Scalar>(
    rng: &mut ChaCha8Rng,
    d: usize,
    count: usize,
    max_dim: usize,
) -> FusionFrame<T> {
    assert!(count >= d, "need at least d members to be safe");
    loop {
        let members: Vec<WeightedSubspace<T>> = (0..count)
            .map(|_| {
                let k = rng.gen_range(1..=max_dim.max(1).min(d));
                let weight = real(rng.gen_range(0.5..2.0));
                WeightedSubspace::new(matrix(rng, d, k), weight).expect("random basis")
            })
            .collect();
        let frame = FusionFrame::new(d, members).expect("consistent ambient dimension");
        if let Ok(bounds) = frame.bounds(real(1e-6)) {
            if bounds.lower() >= real::<T>(1e-2) * bounds.upper() {
                return frame;
            }
        }
    }
}

/// A Parseval fusion frame: a coordinate partition of `C^d` rotated by a
/// random unitary, all weights 1.
pub fn parseval_fusion_frame<T: Scalar>(rng: &mut ChaCha8Rng, d: usize) -> FusionFrame<T> {
    let u = unitary::<T>(rng, d);
    let mut members = Vec::new();
    let mut start = 0;
    while start < d {
        let k = rng.gen_range(1..=(d - start).min(2));
        let basis = ComplexMatrix::from_fn(d, k, |i, j| u.get(i, start + j));
        members.push(WeightedSubspace::new(basis, T::one()).expect("unitary columns"));
        start += k;
    }
    FusionFrame::new(d, members).expect("consistent ambient dimension")
}

/// A random resolution of the identity: random PSD pieces normalized by
/// their sum, with random weights.
pub fn resolution<T: Scalar>(rng: &mut ChaCha8Rng, d: usize, count: usize) -> OperatorFamily<T> {
    loop {
        let pieces: Vec<ComplexMatrix<T>> = (0..count)
            .map(|_| {
                let x = matrix(rng, d, d);
                x.adjoint().matmul(&x)
            })
            .collect();
        let mut total = ComplexMatrix::zeros(d, d);
        for p in &pieces {
            total = &total + p;
        }
        let inv = match total.inverse() {
            Ok(inv) => inv,
            Err(_) => continue,
        };
        let members: Vec<(ComplexMatrix<T>, T)> = pieces
            .into_iter()
            .map(|p| (p.matmul(&inv), real(rng.gen_range(0.5..2.0))))
            .collect();
        let family = OperatorFamily::new(d, members).expect("square operators");
        if family.check(real(1e-6)).is_ok() {
            return family;
        }
    }
}

/// A random multiplicity-free representation of the group on `C^d` together
/// with a frame vector: a random unitary change of basis applied to `d`
/// distinct characters, and a vector with components bounded away from zero
/// in that eigenbasis. Requires `d <= |G|`.
pub fn frame_representation<T: Scalar>(
    rng: &mut ChaCha8Rng,
    group: &FiniteAbelianGroup,
    d: usize,
) -> (GroupRepresentation<T>, ComplexMatrix<T>) {
    let order = group.order();
    assert!(d >= 1 && d <= order, "need 1 <= d <= |G| for a frame vector");
    // Choose d distinct characters.
    let mut picks: Vec<usize> = (0..order).collect();
    for i in 0..d {
        let j = rng.gen_range(i..order);
        picks.swap(i, j);
    }
    picks.truncate(d);
    let chars = crate::groupframe::characters(group);
    let basis = unitary::<T>(rng, d);

    let matrices = group
        .elements()
        .iter()
        .map(|element| {
            let mut diag = ComplexMatrix::zeros(d, d);
            for (slot, &pick) in picks.iter().enumerate() {
                diag.set(slot, slot, chars[pick].eval::<T>(element));
            }
            basis.matmul(&diag).matmul(&basis.adjoint())
        })
        .collect();
    let rep = GroupRepresentation::new(group.clone(), matrices).expect("consistent shapes");

    // Eigenbasis coefficients with moduli in [0.4, 1.2]: every spectral
    // component is present, so the orbit is a frame.
    let coeffs = ComplexMatrix::column(
        (0..d)
            .map(|_| {
                let r = real::<T>(rng.gen_range(0.4..1.2));
                let phase = real::<T>(rng.gen_range(0.0..std::f64::consts::TAU));
                Complex::cis(phase) * Complex::new(r, T::zero())
            })
            .collect(),
    );
    let v = basis.matmul(&coeffs);
    (rep, v)
}
