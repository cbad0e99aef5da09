//! Randomized invariants for fusion frames, resolutions of identity, and
//! group frame representations, including the subspace-compression bridge
//! between Kronecker projections and two-sided matrix compression.

use rand::Rng;

use tensorframe_core::groupframe::FiniteAbelianGroup;
use tensorframe_core::linalg::reshape_vec_to_matrix;
use tensorframe_core::random::{
    frame_representation, fusion_frame, matrix, parseval_fusion_frame, resolution, rng,
};
use tensorframe_core::Matrix;

#[test]
fn tensor_fusion_bounds_are_products_and_operators_factorize() {
    let mut r = rng(11);
    for _ in 0..6 {
        let f = fusion_frame::<f64>(&mut r, 3, 4, 2);
        let g = fusion_frame::<f64>(&mut r, 2, 3, 2);
        let bf = f.bounds(1e-9).unwrap();
        let bg = g.bounds(1e-9).unwrap();
        let t = f.tensor(&g);
        let bt = t.bounds(1e-9).unwrap();
        let lower = bf.lower() * bg.lower();
        let upper = bf.upper() * bg.upper();
        assert!((bt.lower() - lower).abs() <= 1e-8 * lower.max(1.0));
        assert!((bt.upper() - upper).abs() <= 1e-8 * upper.max(1.0));

        let lhs = t.frame_operator();
        let rhs = f.frame_operator().kron(&g.frame_operator());
        assert!(lhs.distance(&rhs) <= 1e-10 * lhs.frobenius_norm().max(1.0));
    }
}

#[test]
fn projection_identities_hold_for_random_subspaces() {
    let mut r = rng(13);
    for _ in 0..6 {
        let f = fusion_frame::<f64>(&mut r, 4, 4, 3);
        for m in f.members() {
            let p = m.projection();
            assert!(p.distance(&p.adjoint()) <= 1e-10);
            assert!(p.matmul(&p).distance(&p) <= 1e-10);
        }
        // Bounds are by definition the spectral range of the frame operator.
        let b = f.bounds(1e-9).unwrap();
        let eig = tensorframe_core::hermitian_eigen(&f.frame_operator()).unwrap();
        assert!((b.lower() - eig.min()).abs() <= 1e-12);
        assert!((b.upper() - eig.max()).abs() <= 1e-12);
    }
}

#[test]
fn tensor_resolution_is_a_resolution_with_bounded_spectrum() {
    let mut r = rng(17);
    for _ in 0..5 {
        let f = resolution::<f64>(&mut r, 3, 4);
        let g = resolution::<f64>(&mut r, 2, 3);
        let bf = f.check(1e-9).unwrap();
        let bg = g.check(1e-9).unwrap();
        let t = f.tensor(&g).unwrap();
        assert!(t.identity_defect() <= 1e-9);
        let bt = t.check(1e-9).unwrap();
        let slack = 1e-8 * (1.0 + bf.upper() * bg.upper());
        assert!(bt.lower() >= bf.lower() * bg.lower() - slack);
        assert!(bt.upper() <= bf.upper() * bg.upper() + slack);
    }
}

#[test]
fn fusion_derived_resolutions_satisfy_the_two_sided_inequality() {
    let mut r = rng(19);
    for _ in 0..5 {
        let f = fusion_frame::<f64>(&mut r, 3, 4, 2);
        let g = fusion_frame::<f64>(&mut r, 2, 3, 1);
        let bf = f.bounds(1e-9).unwrap();
        let bg = g.bounds(1e-9).unwrap();

        let rf = f.to_resolution().unwrap();
        let rg = g.to_resolution().unwrap();
        assert!(rf.identity_defect() <= 1e-10);
        assert!(rg.identity_defect() <= 1e-10);

        // The derived resolution has bound operator S^{-1}, so its optimal
        // bounds are the reciprocals of the fusion bounds.
        let bb = rf.check(1e-9).unwrap();
        assert!((bb.lower() - 1.0 / bf.upper()).abs() <= 1e-8);
        assert!((bb.upper() - 1.0 / bf.lower()).abs() <= 1e-8);

        let t = rf.tensor(&rg).unwrap();
        let bt = t.check(1e-9).unwrap();
        let lower_window = (bf.lower() / (bf.upper() * bf.upper()))
            * (bg.lower() / (bg.upper() * bg.upper()));
        let upper_window = (bf.upper() / (bf.lower() * bf.lower()))
            * (bg.upper() / (bg.lower() * bg.lower()));
        assert!(bt.lower() >= lower_window - 1e-8);
        assert!(bt.upper() <= upper_window + 1e-8);
    }
}

#[test]
fn parseval_fusion_frames_give_tight_unit_resolutions() {
    let mut r = rng(23);
    for _ in 0..5 {
        let f = parseval_fusion_frame::<f64>(&mut r, 4);
        let b = f.bounds(1e-9).unwrap();
        assert!((b.lower() - 1.0).abs() <= 1e-10 && (b.upper() - 1.0).abs() <= 1e-10);
        let res = f.to_resolution().unwrap();
        let bb = res.check(1e-9).unwrap();
        assert!((bb.lower() - 1.0).abs() <= 1e-10 && (bb.upper() - 1.0).abs() <= 1e-10);
    }
}

#[test]
fn compression_bridge_between_kron_and_reshape() {
    // For z in the tensor space, compressing the reshaped coefficient matrix
    // on both sides equals reshaping kron(p, q~) z, with q~ the transpose
    // convention partner of q.
    let mut r = rng(29);
    for _ in 0..6 {
        let (n, m) = (r.gen_range(2..4usize), r.gen_range(2..4usize));
        let fw = fusion_frame::<f64>(&mut r, n, n, 2);
        let fz = fusion_frame::<f64>(&mut r, m, m, 2);
        let pw = fw.members()[0].projection();
        let pz = fz.members()[0].projection();
        let z: Matrix = matrix(&mut r, n * m, 1);

        let lhs = {
            let compressed = pw.kron(&pz).matmul(&z);
            reshape_vec_to_matrix(compressed.column_entries(), n, m).unwrap()
        };
        let zmat = reshape_vec_to_matrix(z.column_entries(), n, m).unwrap();
        let rhs = pw.matmul(&zmat).matmul(&pz.transpose());
        assert!(lhs.distance(&rhs) <= 1e-10);
    }
}

#[test]
fn random_frame_representations_satisfy_all_intertwinings() {
    let mut r = rng(31);
    let groups = [vec![4], vec![2, 3], vec![8]];
    for orders in &groups {
        let group = FiniteAbelianGroup::new(orders.clone()).unwrap();
        let d = r.gen_range(2..=3.min(group.order()));
        let (rep, v) = frame_representation::<f64>(&mut r, &group, d);
        assert!(rep.verify(1e-10));

        let orbit = rep.orbit(&v).unwrap();
        let bounds = orbit.frame_bounds(1e-9).unwrap();
        assert!(bounds.lower() > 0.0);

        let analysis = rep.analysis(&v).unwrap();
        assert!(analysis.intertwining_defect(&rep) <= 1e-10);
        let gram = analysis.frame_operator_matrix();
        let oracle = orbit.frame_operator().trace_matrix();
        assert!(gram.distance(&oracle) <= 1e-10 * gram.frobenius_norm().max(1.0));

        let sd = rep.spectral(&v, 1e-9).unwrap();
        assert!(sd.completeness_defect() <= 1e-9);
        assert!(sd.resolution_defect(&rep) <= 1e-9);
        let u = sd.decomposition();
        assert!(u.unitarity_defect() <= 1e-10);
        assert!(u.intertwining_defect(&rep, &sd) <= 1e-10);

        // Positive-phase convention is realized.
        for b in sd.basis_vectors() {
            let overlap = {
                let mut acc = tensorframe_core::C64::new(0.0, 0.0);
                for k in 0..v.rows() {
                    acc += v.get(k, 0) * b.get(k, 0).conj();
                }
                acc
            };
            assert!(overlap.im.abs() <= 1e-10 && overlap.re > 0.0);
        }
    }
}

#[test]
fn tensor_of_frame_representations_multiplies_bounds_and_factors_operators() {
    let mut r = rng(37);
    for _ in 0..4 {
        let g1 = FiniteAbelianGroup::cyclic(4);
        let g2 = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let (rep1, v1) = frame_representation::<f64>(&mut r, &g1, 2);
        let (rep2, v2) = frame_representation::<f64>(&mut r, &g2, 2);
        let b1 = rep1.orbit(&v1).unwrap().frame_bounds(1e-9).unwrap();
        let b2 = rep2.orbit(&v2).unwrap().frame_bounds(1e-9).unwrap();

        let tensor = rep1.tensor(&rep2);
        let vt = v1.kron(&v2);
        let bt = tensor.orbit(&vt).unwrap().frame_bounds(1e-9).unwrap();
        let lower = b1.lower() * b2.lower();
        let upper = b1.upper() * b2.upper();
        assert!((bt.lower() - lower).abs() <= 1e-8 * lower.max(1.0));
        assert!((bt.upper() - upper).abs() <= 1e-8 * upper.max(1.0));

        // Analysis operators tensor exactly.
        let lhs = tensor.analysis(&vt).unwrap();
        let rhs = rep1
            .analysis(&v1)
            .unwrap()
            .theta()
            .kron(rep2.analysis(&v2).unwrap().theta());
        assert!(lhs.theta().distance(&rhs) <= 1e-10);

        // Bessel bounds multiply.
        let w1: Matrix = matrix(&mut r, 2, 1);
        let w2: Matrix = matrix(&mut r, 2, 1);
        let lhs = tensor.bessel_bound(&w1.kron(&w2)).unwrap();
        let rhs = rep1.bessel_bound(&w1).unwrap() * rep2.bessel_bound(&w2).unwrap();
        assert!((lhs - rhs).abs() <= 1e-8 * rhs.max(1.0));

        // Decomposition two-path equality.
        let sd1 = rep1.spectral(&v1, 1e-9).unwrap();
        let sd2 = rep2.spectral(&v2, 1e-9).unwrap();
        let via_tensor = sd1.tensor(&sd2).decomposition();
        let direct = tensor.spectral(&vt, 1e-9).unwrap().decomposition();
        assert!(via_tensor.matrix().distance(direct.matrix()) <= 1e-10);
        assert!((via_tensor.measure_weight() - direct.measure_weight()).abs() <= 1e-15);
    }
}
