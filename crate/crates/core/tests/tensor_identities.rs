//! Cross-module identities for module frames under tensoring and operator
//! transforms: bound products, frame-operator factorization (in both the
//! direct and the inverse convention), conjugation under invertible
//! transforms, and agreement of the spectral and pointwise bound oracles.

use tensorframe_core::cstar::CStarAlgebra;
use tensorframe_core::linalg::hermitian_eigen;
use tensorframe_core::modframe::{is_orthonormal_basis, AdjointableOperator, HilbertModule};
use tensorframe_core::random::{invertible_operator, module_frame, module_vector, rng};
use tensorframe_core::{AlgebraElement, ModuleVector};

fn algebras() -> Vec<CStarAlgebra> {
    vec![
        CStarAlgebra::scalars(),
        CStarAlgebra::new(vec![2, 1]).unwrap(),
    ]
}

#[test]
fn tensor_frame_bounds_are_products_of_optimal_bounds() {
    let mut r = rng(101);
    for algebra_a in algebras() {
        for algebra_b in algebras() {
            let ea = HilbertModule::new(algebra_a.clone(), 2);
            let eb = HilbertModule::new(algebra_b.clone(), 3);
            for _ in 0..4 {
                let fa = module_frame::<f64>(&mut r, &ea, 3);
                let fb = module_frame::<f64>(&mut r, &eb, 4);
                let ba = fa.frame_bounds(1e-9).unwrap();
                let bb = fb.frame_bounds(1e-9).unwrap();
                let bt = fa.tensor(&fb).frame_bounds(1e-9).unwrap();
                let lower = ba.lower() * bb.lower();
                let upper = ba.upper() * bb.upper();
                assert!((bt.lower() - lower).abs() <= 1e-8 * lower.max(1.0));
                assert!((bt.upper() - upper).abs() <= 1e-8 * upper.max(1.0));
            }
        }
    }
}

#[test]
fn tensor_of_module_onbs_is_an_onb() {
    // {e11, e22} in E = A over A = M2, tensored with itself and with a
    // scalar orthonormal basis.
    let m2 = CStarAlgebra::full(2);
    let module = HilbertModule::new(m2.clone(), 1);
    let unit = |r: usize| {
        let mut m = tensorframe_core::Matrix::zeros(2, 2);
        m.set(r, r, tensorframe_core::C64::new(1.0, 0.0));
        ModuleVector::new(
            module.clone(),
            vec![AlgebraElement::new(m2.clone(), vec![m]).unwrap()],
        )
        .unwrap()
    };
    let onb_m2 = vec![unit(0), unit(1)];
    assert!(is_orthonormal_basis(&onb_m2, 1e-9));

    let tensored: Vec<ModuleVector<f64>> = onb_m2
        .iter()
        .flat_map(|u| onb_m2.iter().map(move |v| u.tensor(v)))
        .collect();
    assert!(is_orthonormal_basis(&tensored, 1e-9));

    let std2: Vec<ModuleVector<f64>> = (0..2)
        .map(|i| {
            let mut coords = vec![tensorframe_core::C64::new(0.0, 0.0); 2];
            coords[i] = tensorframe_core::C64::new(1.0, 0.0);
            ModuleVector::from_scalar_coords(coords)
        })
        .collect();
    assert!(is_orthonormal_basis(&std2, 1e-9));
    let mixed: Vec<ModuleVector<f64>> = std2
        .iter()
        .flat_map(|u| onb_m2.iter().map(move |v| u.tensor(v)))
        .collect();
    assert!(is_orthonormal_basis(&mixed, 1e-9));
}

#[test]
fn frame_operator_of_tensor_factorizes_in_both_conventions() {
    let mut r = rng(202);
    for algebra in algebras() {
        let ea = HilbertModule::new(algebra.clone(), 2);
        let eb = HilbertModule::hilbert_space(2);
        for _ in 0..5 {
            let fa = module_frame::<f64>(&mut r, &ea, 3);
            let fb = module_frame::<f64>(&mut r, &eb, 3);
            let s_tensor = fa.tensor(&fb).frame_operator();
            let s_product = fa.frame_operator().tensor(&fb.frame_operator());
            let scale = s_tensor.operator_norm();
            assert!(s_tensor.operator_distance(&s_product) <= 1e-9 * scale);

            // Inverse convention: inversion commutes with the tensor.
            let inv_tensor = fa.tensor(&fb).frame_operator_inverse().unwrap();
            let inv_product = fa
                .frame_operator_inverse()
                .unwrap()
                .tensor(&fb.frame_operator_inverse().unwrap());
            let scale = inv_tensor.operator_norm();
            assert!(inv_tensor.operator_distance(&inv_product) <= 1e-8 * scale);
        }
    }
}

#[test]
fn transformed_frame_operator_is_conjugated() {
    let mut r = rng(303);
    for algebra in algebras() {
        let module = HilbertModule::new(algebra.clone(), 2);
        for _ in 0..5 {
            let frame = module_frame::<f64>(&mut r, &module, 3);
            let q = invertible_operator::<f64>(&mut r, &module);
            let transformed = frame.transform(&q).unwrap();

            // Direct convention: S' = Q S Q*.
            let lhs = transformed.frame_operator();
            let rhs = q.compose(&frame.frame_operator()).compose(&q.adjoint());
            assert!(lhs.operator_distance(&rhs) <= 1e-9 * lhs.operator_norm().max(1.0));

            // Inverse convention: (S')^{-1} = Q^{*-1} S^{-1} Q^{-1}.
            let lhs_inv = transformed.frame_operator_inverse().unwrap();
            let q_inv = q.inverse().unwrap();
            let rhs_inv = q_inv
                .adjoint()
                .compose(&frame.frame_operator_inverse().unwrap())
                .compose(&q_inv);
            assert!(
                lhs_inv.operator_distance(&rhs_inv) <= 1e-8 * lhs_inv.operator_norm().max(1.0)
            );
        }
    }
}

#[test]
fn tensor_with_identity_transform_conjugates_the_tensor_operator() {
    let mut r = rng(404);
    let e = HilbertModule::new(CStarAlgebra::new(vec![2, 1]).unwrap(), 2);
    let f = HilbertModule::hilbert_space(2);
    for _ in 0..3 {
        let fa = module_frame::<f64>(&mut r, &e, 3);
        let fb = module_frame::<f64>(&mut r, &f, 3);
        let tensor_frame = fa.tensor(&fb);
        let q = invertible_operator::<f64>(&mut r, &e);
        let q_star_tensor_id = q.adjoint().tensor(&AdjointableOperator::identity(&f));

        let transformed = tensor_frame.transform(&q_star_tensor_id).unwrap();
        let lhs = transformed.frame_operator();
        let rhs = q_star_tensor_id
            .compose(&tensor_frame.frame_operator())
            .compose(&q_star_tensor_id.adjoint());
        assert!(lhs.operator_distance(&rhs) <= 1e-9 * lhs.operator_norm().max(1.0));
    }
}

#[test]
fn block_spectral_range_matches_flattened_oracle() {
    // The blockwise eigenvalue path must agree with a brute-force
    // eigendecomposition of the full flattened operator matrix.
    let mut r = rng(505);
    let module = HilbertModule::new(CStarAlgebra::new(vec![2, 1]).unwrap(), 2);
    for _ in 0..5 {
        let frame = module_frame::<f64>(&mut r, &module, 3);
        let op = frame.frame_operator();
        let (lo, hi) = op.spectral_range().unwrap();
        let eig = hermitian_eigen(&op.trace_matrix()).unwrap();
        assert!((lo - eig.min()).abs() <= 1e-9 * (1.0 + hi));
        assert!((hi - eig.max()).abs() <= 1e-9 * (1.0 + hi));
    }
}

#[test]
fn spectral_and_pointwise_bound_oracles_agree() {
    let mut r = rng(606);
    for algebra in algebras() {
        let module = HilbertModule::new(algebra.clone(), 2);
        for trial in 0..10 {
            let frame = module_frame::<f64>(&mut r, &module, 3);
            let bounds = frame.frame_bounds(1e-9).unwrap();
            assert!(frame.verify_pointwise(&bounds, 40, 1000 + trial));
        }
    }
}

#[test]
fn reconstruction_residual_is_small_for_random_frames() {
    let mut r = rng(707);
    for algebra in algebras() {
        let module = HilbertModule::new(algebra, 3);
        for _ in 0..5 {
            let frame = module_frame::<f64>(&mut r, &module, 4);
            let x = module_vector::<f64>(&mut r, &module);
            let rebuilt = frame.reconstruct(&x).unwrap();
            assert!(rebuilt.distance(&x) <= 1e-8 * x.norm().max(1.0));
        }
    }
}
