//! Implementations of the CLI commands. Each returns a report plus the exit
//! code: 0 for success, 2 for a mathematical failure (not a frame, residual
//! over tolerance), while input errors surface as `CliError` (exit 1).

use std::path::{Path, PathBuf};

use serde_json::json;

use tensorframe_core::cstar::CStarAlgebra;
use tensorframe_core::modframe::{FrameError, HilbertModule};
use tensorframe_core::random as coregen;
use tensorframe_core::FusionError;

use crate::document::{DocumentKind, FrameDocument};
use crate::report::{number, CheckResult, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MATH: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{path}: {detail}")]
    Document { path: String, detail: String },
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub struct CommandOutput {
    pub report: Report,
    pub exit: i32,
}

pub fn load_document(path: &Path, report: &mut Report) -> Result<FrameDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    report.push_input(&path.display().to_string(), text.as_bytes());
    FrameDocument::from_json(&text).map_err(|e| CliError::Document {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

fn document_error(path: &Path, detail: impl std::fmt::Display) -> CliError {
    CliError::Document {
        path: path.display().to_string(),
        detail: detail.to_string(),
    }
}

pub fn check_frame(
    path: &Path,
    tol: f64,
    force_module: bool,
    force_hilbert: bool,
) -> Result<CommandOutput, CliError> {
    let mut report = Report::new("check-frame");
    if force_module && force_hilbert {
        return Err(CliError::InvalidParams(
            "--module and --hilbert are mutually exclusive".into(),
        ));
    }
    let doc = load_document(path, &mut report)?;
    if doc.kind().map_err(|e| document_error(path, e))? != DocumentKind::Frame {
        return Err(CliError::KindMismatch(format!(
            "{} is not a frame document",
            path.display()
        )));
    }
    let algebra = doc.algebra().map_err(|e| document_error(path, e))?;
    if force_hilbert && !algebra.is_scalars() {
        return Err(CliError::InvalidParams(
            "--hilbert requires a document over the scalars".into(),
        ));
    }
    if force_module && doc.algebra.is_none() {
        return Err(CliError::InvalidParams(
            "--module requires an algebra section".into(),
        ));
    }
    let frame = doc.to_module_frame().map_err(|e| document_error(path, e))?;
    report.push_result("kind", json!("frame"));
    report.push_result("vectors", json!(frame.len()));
    match frame.frame_bounds(tol) {
        Ok(bounds) => {
            report.push_result("bounds", json!([bounds.lower(), bounds.upper()]));
            let pointwise = frame.verify_pointwise(&bounds, 20, 0x7f);
            report.push_check(CheckResult::from_flag("pointwise_bound_agreement", pointwise, tol));
            let exit = if pointwise { EXIT_OK } else { EXIT_MATH };
            Ok(CommandOutput { report, exit })
        }
        Err(FrameError::NotAFrame { lower }) => {
            report.push_result("NotAFrame", json!(format!("lower spectral bound {lower:.3e}")));
            Ok(CommandOutput { report, exit: EXIT_MATH })
        }
        Err(e) => Err(document_error(path, e)),
    }
}

pub fn fusion_check(path: &Path, tol: f64) -> Result<CommandOutput, CliError> {
    let mut report = Report::new("fusion-check");
    let doc = load_document(path, &mut report)?;
    if doc.kind().map_err(|e| document_error(path, e))? != DocumentKind::Fusion {
        return Err(CliError::KindMismatch(format!(
            "{} is not a fusion document",
            path.display()
        )));
    }
    let fusion = doc.to_fusion_frame().map_err(|e| document_error(path, e))?;
    report.push_result("kind", json!("fusion"));
    report.push_result("members", json!(fusion.members().len()));
    match fusion.bounds(tol) {
        Ok(bounds) => {
            report.push_result("bounds", json!([bounds.lower(), bounds.upper()]));
            // Definition-level identity: bounds are the spectral range of the
            // fusion frame operator.
            let eig = tensorframe_core::hermitian_eigen(&fusion.frame_operator())
                .map_err(|e| document_error(path, e))?;
            let residual = (bounds.lower() - eig.min())
                .abs()
                .max((bounds.upper() - eig.max()).abs());
            report.push_check(CheckResult::from_residual(
                "bounds_match_operator_spectrum",
                residual,
                tol,
            ));
            let exit = if report.all_passed() { EXIT_OK } else { EXIT_MATH };
            Ok(CommandOutput { report, exit })
        }
        Err(FusionError::NotAFrame { lower }) => {
            report.push_result("NotAFrame", json!(format!("lower spectral bound {lower:.3e}")));
            Ok(CommandOutput { report, exit: EXIT_MATH })
        }
        Err(e) => Err(document_error(path, e)),
    }
}

pub fn resolution_check(path: &Path, tol: f64) -> Result<CommandOutput, CliError> {
    let mut report = Report::new("resolution-check");
    let doc = load_document(path, &mut report)?;
    if doc.kind().map_err(|e| document_error(path, e))? != DocumentKind::Resolution {
        return Err(CliError::KindMismatch(format!(
            "{} is not a resolution document",
            path.display()
        )));
    }
    let family = doc.to_resolution().map_err(|e| document_error(path, e))?;
    report.push_result("kind", json!("resolution"));
    report.push_result("operators", json!(family.members().len()));
    report.push_check(CheckResult::from_residual(
        "identity_sum",
        family.identity_defect(),
        tol,
    ));
    match family.check(tol) {
        Ok(bounds) => {
            report.push_result("bounds", json!([bounds.lower(), bounds.upper()]));
            let exit = if report.all_passed() { EXIT_OK } else { EXIT_MATH };
            Ok(CommandOutput { report, exit })
        }
        Err(FusionError::NotAResolution(detail)) => {
            report.push_result("NotAResolution", json!(detail));
            Ok(CommandOutput { report, exit: EXIT_MATH })
        }
        Err(e) => Err(document_error(path, e)),
    }
}

pub fn group_frame(path: &Path, tol: f64) -> Result<CommandOutput, CliError> {
    let mut report = Report::new("group-frame");
    let doc = load_document(path, &mut report)?;
    if doc.kind().map_err(|e| document_error(path, e))? != DocumentKind::Group {
        return Err(CliError::KindMismatch(format!(
            "{} is not a group document",
            path.display()
        )));
    }
    let (rep, candidates) = doc.to_group().map_err(|e| document_error(path, e))?;
    report.push_result("kind", json!("group"));
    report.push_result("group_order", json!(rep.group().order()));
    report.push_result("dimension", json!(rep.dim()));

    let rep_ok = rep.verify(tol);
    report.push_check(CheckResult::from_flag("representation_axioms", rep_ok, tol));
    if !rep_ok {
        return Ok(CommandOutput { report, exit: EXIT_MATH });
    }

    let mut exit = EXIT_OK;
    for (idx, v) in candidates.iter().enumerate() {
        let orbit = rep.orbit(v).map_err(|e| document_error(path, e))?;
        match orbit.frame_bounds(tol) {
            Ok(bounds) => {
                report.push_result(
                    &format!("candidate_{idx}_bounds"),
                    json!([bounds.lower(), bounds.upper()]),
                );
                let analysis = rep.analysis(v).map_err(|e| document_error(path, e))?;
                report.push_check(CheckResult::from_residual(
                    &format!("candidate_{idx}_analysis_intertwining"),
                    analysis.intertwining_defect(&rep),
                    tol,
                ));
                match rep.spectral(v, tol) {
                    Ok(sd) => {
                        let u = sd.decomposition();
                        report.push_check(CheckResult::from_residual(
                            &format!("candidate_{idx}_decomposition_unitary"),
                            u.unitarity_defect(),
                            tol,
                        ));
                        report.push_check(CheckResult::from_residual(
                            &format!("candidate_{idx}_decomposition_intertwining"),
                            u.intertwining_defect(&rep, &sd),
                            tol,
                        ));
                        report.push_check(CheckResult::from_residual(
                            &format!("candidate_{idx}_spectral_resolution"),
                            sd.resolution_defect(&rep),
                            tol,
                        ));
                    }
                    Err(e) => {
                        report.push_result(&format!("candidate_{idx}_spectral_error"), json!(e.to_string()));
                        exit = EXIT_MATH;
                    }
                }
            }
            Err(FrameError::NotAFrame { lower }) => {
                report.push_result(
                    &format!("candidate_{idx}_NotAFrame"),
                    json!(format!("lower spectral bound {lower:.3e}")),
                );
                let bessel = rep.bessel_bound(v).map_err(|e| document_error(path, e))?;
                report.push_result(&format!("candidate_{idx}_bessel_bound"), number(bessel));
                exit = EXIT_MATH;
            }
            Err(e) => return Err(document_error(path, e)),
        }
    }
    if !report.all_passed() {
        exit = EXIT_MATH;
    }
    Ok(CommandOutput { report, exit })
}

pub fn tensor(
    path_a: &Path,
    path_b: &Path,
    out: &Path,
    tol: f64,
) -> Result<CommandOutput, CliError> {
    let mut report = Report::new("tensor");
    let doc_a = load_document(path_a, &mut report)?;
    let doc_b = load_document(path_b, &mut report)?;
    let kind_a = doc_a.kind().map_err(|e| document_error(path_a, e))?;
    let kind_b = doc_b.kind().map_err(|e| document_error(path_b, e))?;
    let (out_doc, product_check) = match (kind_a, kind_b) {
        (DocumentKind::Frame, DocumentKind::Frame) => {
            let fa = doc_a.to_module_frame().map_err(|e| document_error(path_a, e))?;
            let fb = doc_b.to_module_frame().map_err(|e| document_error(path_b, e))?;
            let (ba, bb) = match (fa.frame_bounds(tol), fb.frame_bounds(tol)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => {
                    report.push_result("NotAFrame", json!("an input factor is not a frame"));
                    return Ok(CommandOutput { report, exit: EXIT_MATH });
                }
            };
            let product = fa.tensor(&fb);
            let bt = product.frame_bounds(tol).map_err(|e| document_error(path_a, e))?;
            report.push_result("bounds", json!([bt.lower(), bt.upper()]));
            let expected = (ba.lower() * bb.lower(), ba.upper() * bb.upper());
            let residual = relative_gap(bt.lower(), expected.0).max(relative_gap(bt.upper(), expected.1));
            (FrameDocument::from_module_frame(&product), residual)
        }
        (DocumentKind::Fusion, DocumentKind::Fusion) => {
            let fa = doc_a.to_fusion_frame().map_err(|e| document_error(path_a, e))?;
            let fb = doc_b.to_fusion_frame().map_err(|e| document_error(path_b, e))?;
            let (ba, bb) = match (fa.bounds(tol), fb.bounds(tol)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => {
                    report.push_result("NotAFrame", json!("an input factor is not a fusion frame"));
                    return Ok(CommandOutput { report, exit: EXIT_MATH });
                }
            };
            let product = fa.tensor(&fb);
            let bt = product.bounds(tol).map_err(|e| document_error(path_a, e))?;
            report.push_result("bounds", json!([bt.lower(), bt.upper()]));
            let expected = (ba.lower() * bb.lower(), ba.upper() * bb.upper());
            let residual = relative_gap(bt.lower(), expected.0).max(relative_gap(bt.upper(), expected.1));
            (FrameDocument::from_fusion_frame(&product), residual)
        }
        (a, b) => {
            return Err(CliError::KindMismatch(format!(
                "cannot tensor a {a} document with a {b} document"
            )))
        }
    };
    let text = out_doc.to_json();
    std::fs::write(out, &text).map_err(|source| CliError::Write {
        path: out.display().to_string(),
        source,
    })?;
    report.push_result("out", json!(out.display().to_string()));
    report.push_check(CheckResult::from_residual("bounds_product", product_check, tol));
    let exit = if report.all_passed() { EXIT_OK } else { EXIT_MATH };
    Ok(CommandOutput { report, exit })
}

fn relative_gap(actual: f64, expected: f64) -> f64 {
    (actual - expected).abs() / expected.abs().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    Frame,
    Fusion,
    Group,
}

pub struct GenParams {
    pub kind: GenKind,
    pub dim: usize,
    pub count: usize,
    pub algebra: Option<String>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

pub fn gen(params: &GenParams) -> Result<(FrameDocument, Option<PathBuf>), CliError> {
    if params.dim < 1 {
        return Err(CliError::InvalidParams("--dim must be at least 1".into()));
    }
    let mut rng = coregen::rng(params.seed);
    let doc = match params.kind {
        GenKind::Frame => {
            if params.count < params.dim {
                return Err(CliError::InvalidParams(
                    "--count must be at least --dim for frame generation".into(),
                ));
            }
            let algebra = parse_algebra(params.algebra.as_deref())?;
            let module = HilbertModule::new(algebra, params.dim);
            let frame = coregen::module_frame::<f64>(&mut rng, &module, params.count);
            FrameDocument::from_module_frame(&frame)
        }
        GenKind::Fusion => {
            if params.algebra.is_some() {
                return Err(CliError::InvalidParams(
                    "--algebra does not apply to fusion generation".into(),
                ));
            }
            if params.count < params.dim {
                return Err(CliError::InvalidParams(
                    "--count must be at least --dim for fusion generation".into(),
                ));
            }
            let fusion = coregen::fusion_frame::<f64>(&mut rng, params.dim, params.count, 2);
            FrameDocument::from_fusion_frame(&fusion)
        }
        GenKind::Group => {
            if params.algebra.is_some() {
                return Err(CliError::InvalidParams(
                    "--algebra does not apply to group generation".into(),
                ));
            }
            if params.count < params.dim {
                return Err(CliError::InvalidParams(
                    "--count (the cyclic order) must be at least --dim".into(),
                ));
            }
            let group = tensorframe_core::FiniteAbelianGroup::cyclic(params.count);
            let (rep, v) = coregen::frame_representation::<f64>(&mut rng, &group, params.dim);
            FrameDocument::from_group(&rep, &[v])
        }
    };
    if let Some(out) = &params.out {
        std::fs::write(out, doc.to_json()).map_err(|source| CliError::Write {
            path: out.display().to_string(),
            source,
        })?;
    }
    Ok((doc, params.out.clone()))
}

fn parse_algebra(blocks: Option<&str>) -> Result<CStarAlgebra, CliError> {
    match blocks {
        None => Ok(CStarAlgebra::scalars()),
        Some(text) => {
            let dims = text
                .split(',')
                .map(|part| part.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    CliError::InvalidParams(format!(
                        "--algebra expects comma-separated block sizes, got `{text}`"
                    ))
                })?;
            CStarAlgebra::new(dims)
                .map_err(|e| CliError::InvalidParams(format!("--algebra: {e}")))
        }
    }
}
