//! The on-disk document format: a single JSON text file describing frames,
//! fusion frames, resolutions of the identity, or group representations.
//!
//! Complex numbers are 2-arrays `[re, im]`; matrices are row-major nested
//! arrays. A module vector is a list of per-coordinate elements, each a list
//! of block matrices. Which sections are present determines the document
//! kind: `group` > `operators` > `subspaces`/`weights` > plain `vectors`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use tensorframe_core::cstar::CStarAlgebra;
use tensorframe_core::fusion::WeightedSubspace;
use tensorframe_core::groupframe::FiniteAbelianGroup;
use tensorframe_core::modframe::HilbertModule;
use tensorframe_core::{
    AlgebraElement, Frame, Fusion, Matrix, ModuleVector, Representation, Resolution,
};

pub const SCHEMA_VERSION: u32 = 1;

pub type ComplexDesc = [f64; 2];
/// Row-major matrix of complex entries.
pub type MatrixDesc = Vec<Vec<ComplexDesc>>;
/// One block matrix per algebra block.
pub type ElementDesc = Vec<MatrixDesc>;
/// One element per module coordinate.
pub type VectorDesc = Vec<ElementDesc>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DocError {
    #[error("unrecognized schema version {0}")]
    Version(u32),
    #[error("document is missing the `{0}` section")]
    Missing(&'static str),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Frame,
    Fusion,
    Resolution,
    Group,
}

impl std::fmt::Display for DocumentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            DocumentKind::Frame => "frame",
            DocumentKind::Fusion => "fusion",
            DocumentKind::Resolution => "resolution",
            DocumentKind::Group => "group",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDesc {
    pub block_dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubspaceDesc {
    pub weight: f64,
    /// Spanning vectors in `C^rank` (orthonormalized on ingestion).
    pub basis: Vec<Vec<ComplexDesc>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorDesc {
    pub weight: f64,
    pub matrix: MatrixDesc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupDesc {
    pub cyclic_orders: Vec<usize>,
    /// One unitary per group element, in enumeration order.
    pub matrices: Vec<MatrixDesc>,
    /// Candidate frame vectors in `C^rank`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<Vec<ComplexDesc>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<VectorDesc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subspaces: Option<Vec<SubspaceDesc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operators: Option<Vec<OperatorDesc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDesc>,
}

fn complex_of(desc: &ComplexDesc) -> Complex64 {
    Complex64::new(desc[0], desc[1])
}

fn desc_of(z: Complex64) -> ComplexDesc {
    [z.re, z.im]
}

pub fn parse_matrix(desc: &MatrixDesc) -> Result<Matrix, DocError> {
    let rows = desc.len();
    let cols = desc.first().map_or(0, |r| r.len());
    if rows == 0 || cols == 0 || desc.iter().any(|r| r.len() != cols) {
        return Err(DocError::Shape("matrix must be a nonempty rectangle".into()));
    }
    let entries = desc.iter().flatten().map(complex_of).collect();
    Matrix::new(rows, cols, entries).map_err(|e| DocError::Shape(e.to_string()))
}

pub fn matrix_desc(m: &Matrix) -> MatrixDesc {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| desc_of(m.get(i, j))).collect())
        .collect()
}

fn parse_column(desc: &[ComplexDesc]) -> Vec<Complex64> {
    desc.iter().map(complex_of).collect()
}

fn column_desc(entries: &[Complex64]) -> Vec<ComplexDesc> {
    entries.iter().map(|&z| desc_of(z)).collect()
}

impl FrameDocument {
    pub fn from_json(text: &str) -> Result<Self, DocError> {
        let doc: FrameDocument =
            serde_json::from_str(text).map_err(|e| DocError::Invalid(e.to_string()))?;
        if doc.version != SCHEMA_VERSION {
            return Err(DocError::Version(doc.version));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn kind(&self) -> Result<DocumentKind, DocError> {
        if self.group.is_some() {
            Ok(DocumentKind::Group)
        } else if self.operators.is_some() {
            Ok(DocumentKind::Resolution)
        } else if self.subspaces.is_some() || (self.weights.is_some() && self.vectors.is_some()) {
            Ok(DocumentKind::Fusion)
        } else if self.vectors.is_some() {
            Ok(DocumentKind::Frame)
        } else {
            Err(DocError::Missing("vectors|subspaces|operators|group"))
        }
    }

    pub fn algebra(&self) -> Result<CStarAlgebra, DocError> {
        match &self.algebra {
            None => Ok(CStarAlgebra::scalars()),
            Some(desc) => CStarAlgebra::new(desc.block_dims.clone())
                .map_err(|e| DocError::Invalid(e.to_string())),
        }
    }

    pub fn rank(&self) -> Result<usize, DocError> {
        match self.rank {
            Some(r) if r >= 1 => Ok(r),
            Some(_) => Err(DocError::Invalid("rank must be positive".into())),
            None => Err(DocError::Missing("rank")),
        }
    }

    pub fn to_module_frame(&self) -> Result<Frame, DocError> {
        let algebra = self.algebra()?;
        let rank = self.rank()?;
        let module = HilbertModule::new(algebra.clone(), rank);
        let vector_descs = self.vectors.as_ref().ok_or(DocError::Missing("vectors"))?;
        let mut vectors = Vec::with_capacity(vector_descs.len());
        for vdesc in vector_descs {
            if vdesc.len() != rank {
                return Err(DocError::Shape(format!(
                    "vector has {} coordinates, module rank is {}",
                    vdesc.len(),
                    rank
                )));
            }
            let mut coords = Vec::with_capacity(rank);
            for edesc in vdesc {
                let blocks = edesc
                    .iter()
                    .map(parse_matrix)
                    .collect::<Result<Vec<_>, _>>()?;
                coords.push(
                    AlgebraElement::new(algebra.clone(), blocks)
                        .map_err(|e| DocError::Shape(e.to_string()))?,
                );
            }
            vectors.push(
                ModuleVector::new(module.clone(), coords)
                    .map_err(|e| DocError::Shape(e.to_string()))?,
            );
        }
        Frame::new(module, vectors).map_err(|e| DocError::Shape(e.to_string()))
    }

    pub fn from_module_frame(frame: &Frame) -> Self {
        let algebra = frame.module().algebra();
        let vectors = frame
            .vectors()
            .iter()
            .map(|v| {
                v.coords()
                    .iter()
                    .map(|e| e.blocks().iter().map(matrix_desc).collect())
                    .collect()
            })
            .collect();
        Self {
            version: SCHEMA_VERSION,
            algebra: if algebra.is_scalars() {
                None
            } else {
                Some(AlgebraDesc { block_dims: algebra.block_dims().to_vec() })
            },
            rank: Some(frame.module().rank()),
            vectors: Some(vectors),
            weights: None,
            subspaces: None,
            operators: None,
            group: None,
        }
    }

    pub fn to_fusion_frame(&self) -> Result<Fusion, DocError> {
        let algebra = self.algebra()?;
        if !algebra.is_scalars() {
            return Err(DocError::Invalid(
                "fusion documents live over the scalars".into(),
            ));
        }
        let dim = self.rank()?;
        let mut members = Vec::new();
        if let Some(subspaces) = &self.subspaces {
            for s in subspaces {
                let cols = s.basis.len();
                if cols == 0 || s.basis.iter().any(|v| v.len() != dim) {
                    return Err(DocError::Shape(format!(
                        "subspace basis vectors must have length {dim}"
                    )));
                }
                let basis = Matrix::from_fn(dim, cols, |i, j| complex_of(&s.basis[j][i]));
                members.push(
                    WeightedSubspace::new(basis, s.weight)
                        .map_err(|e| DocError::Invalid(e.to_string()))?,
                );
            }
        } else {
            // The vectors + weights form: each vector spans a 1-dimensional
            // subspace, with weight 1 when omitted.
            let frame = self.to_module_frame()?;
            let count = frame.len();
            let weights = match &self.weights {
                Some(w) if w.len() == count => w.clone(),
                Some(_) => {
                    return Err(DocError::Shape(
                        "weights must align with the vector list".into(),
                    ))
                }
                None => vec![1.0; count],
            };
            for (v, w) in frame.vectors().iter().zip(weights) {
                members.push(
                    WeightedSubspace::new(v.to_scalar_column(), w)
                        .map_err(|e| DocError::Invalid(e.to_string()))?,
                );
            }
        }
        Fusion::new(dim, members).map_err(|e| DocError::Shape(e.to_string()))
    }

    pub fn from_fusion_frame(fusion: &Fusion) -> Self {
        let subspaces = fusion
            .members()
            .iter()
            .map(|m| SubspaceDesc {
                weight: m.weight(),
                basis: (0..m.dim())
                    .map(|j| column_desc(m.basis().col(j).column_entries()))
                    .collect(),
            })
            .collect();
        Self {
            version: SCHEMA_VERSION,
            algebra: None,
            rank: Some(fusion.ambient_dim()),
            vectors: None,
            weights: None,
            subspaces: Some(subspaces),
            operators: None,
            group: None,
        }
    }

    pub fn to_resolution(&self) -> Result<Resolution, DocError> {
        let dim = self.rank()?;
        let descs = self.operators.as_ref().ok_or(DocError::Missing("operators"))?;
        let mut members = Vec::with_capacity(descs.len());
        for d in descs {
            members.push((parse_matrix(&d.matrix)?, d.weight));
        }
        Resolution::new(dim, members).map_err(|e| DocError::Invalid(e.to_string()))
    }

    pub fn to_group(&self) -> Result<(Representation, Vec<Matrix>), DocError> {
        let desc = self.group.as_ref().ok_or(DocError::Missing("group"))?;
        let group = FiniteAbelianGroup::new(desc.cyclic_orders.clone())
            .map_err(|e| DocError::Invalid(e.to_string()))?;
        let matrices = desc
            .matrices
            .iter()
            .map(parse_matrix)
            .collect::<Result<Vec<_>, _>>()?;
        let rep = Representation::new(group, matrices)
            .map_err(|e| DocError::Shape(e.to_string()))?;
        if let Some(rank) = self.rank {
            if rank != rep.dim() {
                return Err(DocError::Shape(format!(
                    "rank {} disagrees with representation dimension {}",
                    rank,
                    rep.dim()
                )));
            }
        }
        let candidates = desc
            .candidates
            .iter()
            .map(|v| {
                if v.len() != rep.dim() {
                    Err(DocError::Shape(format!(
                        "candidate vector must have length {}",
                        rep.dim()
                    )))
                } else {
                    Ok(Matrix::column(parse_column(v)))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((rep, candidates))
    }

    pub fn from_group(rep: &Representation, candidates: &[Matrix]) -> Self {
        let matrices = (0..rep.group().order())
            .map(|i| matrix_desc(rep.matrix(i)))
            .collect();
        let candidates = candidates
            .iter()
            .map(|v| column_desc(v.column_entries()))
            .collect();
        Self {
            version: SCHEMA_VERSION,
            algebra: None,
            rank: Some(rep.dim()),
            vectors: None,
            weights: None,
            subspaces: None,
            operators: None,
            group: Some(GroupDesc {
                cyclic_orders: rep.group().cyclic_orders().to_vec(),
                matrices,
                candidates,
            }),
        }
    }
}
