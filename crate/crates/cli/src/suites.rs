//! Randomized verification suites behind `tensorframe verify`: each check
//! executes one structural identity of the library over seeded random
//! instances (and over user-supplied documents where applicable) and reports
//! the worst residual observed.

use std::path::PathBuf;

use serde_json::json;

use tensorframe_core::cstar::CStarAlgebra;
use tensorframe_core::linalg::reshape_vec_to_matrix;
use tensorframe_core::modframe::{is_orthonormal_basis, AdjointableOperator, HilbertModule};
use tensorframe_core::random as coregen;
use tensorframe_core::random::ChaCha8Rng;
use tensorframe_core::{AlgebraElement, FiniteAbelianGroup, Matrix, ModuleVector};

use crate::commands::{load_document, CliError, CommandOutput, EXIT_MATH, EXIT_OK};
use crate::document::DocumentKind;
use crate::report::{CheckResult, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Tensor,
    Fusion,
    Resolution,
    Group,
    All,
}

impl Suite {
    fn includes(&self, other: Suite) -> bool {
        *self == Suite::All || *self == other
    }
}

pub fn verify(
    paths: &[PathBuf],
    suite: Suite,
    seed: u64,
    trials: usize,
    tol: f64,
) -> Result<CommandOutput, CliError> {
    let mut report = Report::new("verify");
    report.push_result("suite", json!(format!("{suite:?}").to_lowercase()));
    report.push_result("seed", json!(seed));
    report.push_result("trials", json!(trials));

    let mut rng = coregen::rng(seed);
    if trials > 0 {
        if suite.includes(Suite::Tensor) {
            tensor_suite(&mut rng, trials, tol, &mut report);
        }
        if suite.includes(Suite::Fusion) {
            fusion_suite(&mut rng, trials, tol, &mut report);
        }
        if suite.includes(Suite::Resolution) {
            resolution_suite(&mut rng, trials, tol, &mut report);
        }
        if suite.includes(Suite::Group) {
            group_suite(&mut rng, trials, tol, &mut report);
        }
    }
    document_checks(paths, suite, tol, &mut report)?;

    let exit = if report.all_passed() { EXIT_OK } else { EXIT_MATH };
    Ok(CommandOutput { report, exit })
}

fn random_algebra(rng: &mut ChaCha8Rng) -> CStarAlgebra {
    use rand::Rng;
    if rng.gen_bool(0.5) {
        CStarAlgebra::scalars()
    } else {
        CStarAlgebra::new(vec![2, 1]).unwrap()
    }
}

fn relative_gap(actual: f64, expected: f64) -> f64 {
    (actual - expected).abs() / expected.abs().max(1.0)
}

fn tensor_suite(rng: &mut ChaCha8Rng, trials: usize, tol: f64, report: &mut Report) {
    use rand::Rng;

    let mut bounds_product: f64 = 0.0;
    let mut operator_factorization: f64 = 0.0;
    let mut inverse_factorization: f64 = 0.0;
    let mut transform_conjugation: f64 = 0.0;
    let mut transform_inverse_convention: f64 = 0.0;
    let mut tensor_transform: f64 = 0.0;
    let mut pointwise_agreement = true;

    for trial in 0..trials {
        let ea = HilbertModule::new(random_algebra(rng), rng.gen_range(2..=3));
        let eb = HilbertModule::new(random_algebra(rng), rng.gen_range(2..=3));
        let fa = coregen::module_frame::<f64>(rng, &ea, ea.rank() + 1);
        let fb = coregen::module_frame::<f64>(rng, &eb, eb.rank() + 1);
        let ba = fa.frame_bounds(1e-9).unwrap();
        let bb = fb.frame_bounds(1e-9).unwrap();
        let tensored = fa.tensor(&fb);
        let bt = tensored.frame_bounds(1e-9).unwrap();
        bounds_product = bounds_product
            .max(relative_gap(bt.lower(), ba.lower() * bb.lower()))
            .max(relative_gap(bt.upper(), ba.upper() * bb.upper()));

        let st = tensored.frame_operator();
        let sp = fa.frame_operator().tensor(&fb.frame_operator());
        operator_factorization = operator_factorization
            .max(st.operator_distance(&sp) / st.operator_norm().max(1.0));

        let it = tensored.frame_operator_inverse().unwrap();
        let ip = fa
            .frame_operator_inverse()
            .unwrap()
            .tensor(&fb.frame_operator_inverse().unwrap());
        inverse_factorization =
            inverse_factorization.max(it.operator_distance(&ip) / it.operator_norm().max(1.0));

        let q = coregen::invertible_operator::<f64>(rng, &ea);
        let transformed = fa.transform(&q).unwrap();
        let lhs = transformed.frame_operator();
        let rhs = q.compose(&fa.frame_operator()).compose(&q.adjoint());
        transform_conjugation = transform_conjugation
            .max(lhs.operator_distance(&rhs) / lhs.operator_norm().max(1.0));

        let lhs_inv = transformed.frame_operator_inverse().unwrap();
        let q_inv = q.inverse().unwrap();
        let rhs_inv = q_inv
            .adjoint()
            .compose(&fa.frame_operator_inverse().unwrap())
            .compose(&q_inv);
        transform_inverse_convention = transform_inverse_convention
            .max(lhs_inv.operator_distance(&rhs_inv) / lhs_inv.operator_norm().max(1.0));

        let q_tensor = q.adjoint().tensor(&AdjointableOperator::identity(&eb));
        let moved = tensored.transform(&q_tensor).unwrap();
        let lhs = moved.frame_operator();
        let rhs = q_tensor.compose(&st).compose(&q_tensor.adjoint());
        tensor_transform =
            tensor_transform.max(lhs.operator_distance(&rhs) / lhs.operator_norm().max(1.0));

        pointwise_agreement &= fa.verify_pointwise(&ba, 20, 0x5eed + trial as u64);
    }

    report.push_check(CheckResult::from_residual(
        "tensor_frame_bounds_product",
        bounds_product,
        tol,
    ));
    report.push_check(onb_tensor_check(tol));
    report.push_check(CheckResult::from_residual(
        "tensor_frame_operator_factorization",
        operator_factorization,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "tensor_frame_operator_inverse_factorization",
        inverse_factorization,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "transform_frame_operator_conjugation",
        transform_conjugation,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "transform_inverse_convention",
        transform_inverse_convention,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "tensor_transform_with_identity",
        tensor_transform,
        tol,
    ));
    report.push_check(CheckResult::from_flag(
        "pointwise_spectral_agreement",
        pointwise_agreement,
        tol,
    ));
}

fn onb_tensor_check(tol: f64) -> CheckResult {
    // Standard basis of C^2 and the diagonal matrix-unit basis of M2 as a
    // module over itself; all tensor combinations must stay orthonormal
    // bases.
    let std2: Vec<ModuleVector<f64>> = (0..2)
        .map(|i| {
            let mut coords = vec![num_complex::Complex64::new(0.0, 0.0); 2];
            coords[i] = num_complex::Complex64::new(1.0, 0.0);
            ModuleVector::from_scalar_coords(coords)
        })
        .collect();
    let m2 = CStarAlgebra::full(2);
    let module = HilbertModule::new(m2.clone(), 1);
    let unit = |r: usize| {
        let mut m = Matrix::zeros(2, 2);
        m.set(r, r, num_complex::Complex64::new(1.0, 0.0));
        ModuleVector::new(
            module.clone(),
            vec![AlgebraElement::new(m2.clone(), vec![m]).unwrap()],
        )
        .unwrap()
    };
    let onb_m2 = vec![unit(0), unit(1)];

    let mut ok = is_orthonormal_basis(&std2, 1e-9) && is_orthonormal_basis(&onb_m2, 1e-9);
    let pairs: Vec<Vec<ModuleVector<f64>>> = vec![
        std2.iter().flat_map(|u| std2.iter().map(move |v| u.tensor(v))).collect(),
        onb_m2.iter().flat_map(|u| onb_m2.iter().map(move |v| u.tensor(v))).collect(),
        std2.iter().flat_map(|u| onb_m2.iter().map(move |v| u.tensor(v))).collect(),
    ];
    for basis in &pairs {
        ok &= is_orthonormal_basis(basis, 1e-9);
    }
    CheckResult::from_flag("tensor_of_orthonormal_bases_is_orthonormal", ok, tol)
}

fn fusion_suite(rng: &mut ChaCha8Rng, trials: usize, tol: f64, report: &mut Report) {
    use rand::Rng;

    let mut bounds_product: f64 = 0.0;
    let mut kron_factorization: f64 = 0.0;
    let mut projection_defect: f64 = 0.0;
    let mut bridge: f64 = 0.0;

    for _ in 0..trials {
        let da = rng.gen_range(2..=3);
        let db = rng.gen_range(2..=3);
        let fa = coregen::fusion_frame::<f64>(rng, da, da + 1, 2);
        let fb = coregen::fusion_frame::<f64>(rng, db, db + 1, 2);
        let ba = fa.bounds(1e-9).unwrap();
        let bb = fb.bounds(1e-9).unwrap();
        let t = fa.tensor(&fb);
        let bt = t.bounds(1e-9).unwrap();
        bounds_product = bounds_product
            .max(relative_gap(bt.lower(), ba.lower() * bb.lower()))
            .max(relative_gap(bt.upper(), ba.upper() * bb.upper()));

        let lhs = t.frame_operator();
        let rhs = fa.frame_operator().kron(&fb.frame_operator());
        kron_factorization =
            kron_factorization.max(lhs.distance(&rhs) / lhs.frobenius_norm().max(1.0));

        for m in fa.members().iter().chain(fb.members()) {
            let p = m.projection();
            projection_defect = projection_defect
                .max(p.distance(&p.adjoint()))
                .max(p.matmul(&p).distance(&p));
        }

        // Row-major reshape turns kron-projection compression into two-sided
        // matrix compression.
        let pw = fa.members()[0].projection();
        let pz = fb.members()[0].projection();
        let z: Matrix = coregen::matrix(rng, da * db, 1);
        let lhs = {
            let compressed = pw.kron(&pz).matmul(&z);
            reshape_vec_to_matrix(compressed.column_entries(), da, db).unwrap()
        };
        let zmat = reshape_vec_to_matrix(z.column_entries(), da, db).unwrap();
        let rhs = pw.matmul(&zmat).matmul(&pz.transpose());
        bridge = bridge.max(lhs.distance(&rhs));
    }

    report.push_check(CheckResult::from_residual(
        "fusion_tensor_bounds_product",
        bounds_product,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "fusion_operator_kron_factorization",
        kron_factorization,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "subspace_projection_identities",
        projection_defect,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "reshape_compression_bridge",
        bridge,
        tol,
    ));
}

fn resolution_suite(rng: &mut ChaCha8Rng, trials: usize, tol: f64, report: &mut Report) {
    use rand::Rng;

    let mut identity_sum: f64 = 0.0;
    let mut bounds_window: f64 = 0.0;
    let mut reciprocal_bounds: f64 = 0.0;
    let mut parseval_tightness: f64 = 0.0;

    for _ in 0..trials {
        let da = rng.gen_range(2..=3);
        let db = rng.gen_range(2..=3);
        let ra = coregen::resolution::<f64>(rng, da, da + 1);
        let rb = coregen::resolution::<f64>(rng, db, db + 1);
        let ba = ra.check(1e-9).unwrap();
        let bb = rb.check(1e-9).unwrap();
        let t = ra.tensor(&rb).unwrap();
        identity_sum = identity_sum.max(t.identity_defect());
        let bt = t.check(1e-9).unwrap();
        let lower = ba.lower() * bb.lower();
        let upper = ba.upper() * bb.upper();
        bounds_window = bounds_window
            .max((lower - bt.lower()).max(0.0) / lower.max(1.0))
            .max((bt.upper() - upper).max(0.0) / upper.max(1.0));

        // Fusion-derived resolutions have bound operator S^{-1}.
        let fusion = coregen::fusion_frame::<f64>(rng, da, da + 1, 2);
        let fb = fusion.bounds(1e-9).unwrap();
        let derived = fusion.to_resolution().unwrap();
        identity_sum = identity_sum.max(derived.identity_defect());
        let bd = derived.check(1e-9).unwrap();
        reciprocal_bounds = reciprocal_bounds
            .max(relative_gap(bd.lower(), 1.0 / fb.upper()))
            .max(relative_gap(bd.upper(), 1.0 / fb.lower()));

        let parseval = coregen::parseval_fusion_frame::<f64>(rng, da + 1);
        let bp = parseval.to_resolution().unwrap().check(1e-9).unwrap();
        parseval_tightness = parseval_tightness
            .max((bp.lower() - 1.0).abs())
            .max((bp.upper() - 1.0).abs());
    }

    report.push_check(CheckResult::from_residual(
        "resolution_tensor_identity_sum",
        identity_sum,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "resolution_tensor_bounds_window",
        bounds_window,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "fusion_resolution_reciprocal_bounds",
        reciprocal_bounds,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "parseval_fusion_tight_resolution",
        parseval_tightness,
        tol,
    ));
}

fn group_suite(rng: &mut ChaCha8Rng, trials: usize, tol: f64, report: &mut Report) {
    use rand::Rng;

    let mut representation_ok = true;
    let mut analysis_intertwining: f64 = 0.0;
    let mut analysis_gram: f64 = 0.0;
    let mut decomposition_unitary: f64 = 0.0;
    let mut decomposition_intertwining: f64 = 0.0;
    let mut orbit_bounds_product: f64 = 0.0;
    let mut analysis_tensor: f64 = 0.0;
    let mut bessel_product: f64 = 0.0;
    let mut two_path: f64 = 0.0;

    for _ in 0..trials {
        let group_a = match rng.gen_range(0..3) {
            0 => FiniteAbelianGroup::cyclic(4),
            1 => FiniteAbelianGroup::new(vec![2, 2]).unwrap(),
            _ => FiniteAbelianGroup::new(vec![2, 3]).unwrap(),
        };
        let group_b = FiniteAbelianGroup::cyclic(rng.gen_range(3..=4));
        let da = rng.gen_range(2..=3.min(group_a.order()));
        let db = rng.gen_range(2..=group_b.order().min(3));
        let (rep_a, va) = coregen::frame_representation::<f64>(rng, &group_a, da);
        let (rep_b, vb) = coregen::frame_representation::<f64>(rng, &group_b, db);
        representation_ok &= rep_a.verify(1e-10) && rep_b.verify(1e-10);

        let analysis_a = rep_a.analysis(&va).unwrap();
        analysis_intertwining = analysis_intertwining.max(analysis_a.intertwining_defect(&rep_a));
        let orbit_a = rep_a.orbit(&va).unwrap();
        analysis_gram = analysis_gram.max(
            analysis_a
                .frame_operator_matrix()
                .distance(&orbit_a.frame_operator().trace_matrix()),
        );

        let sd_a = rep_a.spectral(&va, 1e-9).unwrap();
        let u_a = sd_a.decomposition();
        decomposition_unitary = decomposition_unitary.max(u_a.unitarity_defect());
        decomposition_intertwining =
            decomposition_intertwining.max(u_a.intertwining_defect(&rep_a, &sd_a));

        let ba = orbit_a.frame_bounds(1e-9).unwrap();
        let bb = rep_b.orbit(&vb).unwrap().frame_bounds(1e-9).unwrap();
        let tensor_rep = rep_a.tensor(&rep_b);
        let vt = va.kron(&vb);
        let bt = tensor_rep.orbit(&vt).unwrap().frame_bounds(1e-9).unwrap();
        orbit_bounds_product = orbit_bounds_product
            .max(relative_gap(bt.lower(), ba.lower() * bb.lower()))
            .max(relative_gap(bt.upper(), ba.upper() * bb.upper()));

        let lhs = tensor_rep.analysis(&vt).unwrap();
        let rhs = rep_a
            .analysis(&va)
            .unwrap()
            .theta()
            .kron(rep_b.analysis(&vb).unwrap().theta());
        analysis_tensor = analysis_tensor.max(lhs.theta().distance(&rhs));

        let wa: Matrix = coregen::matrix(rng, da, 1);
        let wb: Matrix = coregen::matrix(rng, db, 1);
        let lhs = tensor_rep.bessel_bound(&wa.kron(&wb)).unwrap();
        let rhs = rep_a.bessel_bound(&wa).unwrap() * rep_b.bessel_bound(&wb).unwrap();
        bessel_product = bessel_product.max(relative_gap(lhs, rhs));

        let sd_b = rep_b.spectral(&vb, 1e-9).unwrap();
        let via_tensor = sd_a.tensor(&sd_b).decomposition();
        let direct = tensor_rep.spectral(&vt, 1e-9).unwrap().decomposition();
        two_path = two_path.max(via_tensor.matrix().distance(direct.matrix()));
    }

    report.push_check(CheckResult::from_flag(
        "representation_axioms",
        representation_ok,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "analysis_shift_intertwining",
        analysis_intertwining,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "analysis_gram_is_frame_operator",
        analysis_gram,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "decomposition_weighted_unitarity",
        decomposition_unitary,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "decomposition_multiplication_intertwining",
        decomposition_intertwining,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "orbit_bounds_product",
        orbit_bounds_product,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "analysis_tensor_factorization",
        analysis_tensor,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "bessel_bound_product",
        bessel_product,
        tol,
    ));
    report.push_check(CheckResult::from_residual(
        "decomposition_two_path_equality",
        two_path,
        tol,
    ));
}

fn document_checks(
    paths: &[PathBuf],
    suite: Suite,
    tol: f64,
    report: &mut Report,
) -> Result<(), CliError> {
    for path in paths {
        let doc = load_document(path, report)?;
        let kind = doc.kind().map_err(|e| CliError::Document {
            path: path.display().to_string(),
            detail: e.to_string(),
        })?;
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_else(|| path.display().to_string());
        match kind {
            DocumentKind::Frame if suite.includes(Suite::Tensor) => {
                let frame = doc.to_module_frame().map_err(|e| CliError::Document {
                    path: path.display().to_string(),
                    detail: e.to_string(),
                })?;
                let check = match frame.frame_bounds(1e-9) {
                    Ok(bounds) => {
                        // Self-tensor bound product on given data.
                        let bt = frame.tensor(&frame).frame_bounds(1e-9).unwrap();
                        let residual = relative_gap(bt.lower(), bounds.lower() * bounds.lower())
                            .max(relative_gap(bt.upper(), bounds.upper() * bounds.upper()));
                        CheckResult::from_residual(
                            &format!("document_{name}_self_tensor_bounds"),
                            residual,
                            tol,
                        )
                    }
                    Err(_) => CheckResult::from_flag(
                        &format!("document_{name}_self_tensor_bounds"),
                        false,
                        tol,
                    ),
                };
                report.push_check(check);
            }
            DocumentKind::Fusion if suite.includes(Suite::Fusion) => {
                let fusion = doc.to_fusion_frame().map_err(|e| CliError::Document {
                    path: path.display().to_string(),
                    detail: e.to_string(),
                })?;
                let check = match fusion.bounds(1e-9) {
                    Ok(bounds) => {
                        let bt = fusion.tensor(&fusion).bounds(1e-9).unwrap();
                        let residual = relative_gap(bt.lower(), bounds.lower() * bounds.lower())
                            .max(relative_gap(bt.upper(), bounds.upper() * bounds.upper()));
                        CheckResult::from_residual(
                            &format!("document_{name}_self_tensor_bounds"),
                            residual,
                            tol,
                        )
                    }
                    Err(_) => CheckResult::from_flag(
                        &format!("document_{name}_self_tensor_bounds"),
                        false,
                        tol,
                    ),
                };
                report.push_check(check);
            }
            DocumentKind::Resolution if suite.includes(Suite::Resolution) => {
                let family = doc.to_resolution().map_err(|e| CliError::Document {
                    path: path.display().to_string(),
                    detail: e.to_string(),
                })?;
                report.push_check(CheckResult::from_residual(
                    &format!("document_{name}_identity_sum"),
                    family.identity_defect(),
                    tol,
                ));
            }
            DocumentKind::Group if suite.includes(Suite::Group) => {
                let (rep, candidates) = doc.to_group().map_err(|e| CliError::Document {
                    path: path.display().to_string(),
                    detail: e.to_string(),
                })?;
                let mut worst: f64 = 0.0;
                let mut ok = rep.verify(1e-10);
                for v in &candidates {
                    match rep.analysis(v) {
                        Ok(analysis) => {
                            worst = worst.max(analysis.intertwining_defect(&rep));
                        }
                        Err(_) => ok = false,
                    }
                }
                let mut check = CheckResult::from_residual(
                    &format!("document_{name}_intertwining"),
                    worst,
                    tol,
                );
                check.passed &= ok;
                report.push_check(check);
            }
            _ => {}
        }
    }
    Ok(())
}
