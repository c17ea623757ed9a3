//! JSON interchange formats.
//!
//! A matrix is `{"rows": r, "cols": c, "entries": [[re, im], ...]}` with the
//! entries row-major and each part an exact rational string `p/q` (the `/q`
//! omitted when q = 1). Serialization is deterministic, so emit/parse/emit
//! is byte-stable.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lie::StructureConstants;
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Rational, Scalar};
use crate::solver::SolutionBasis;

use num_traits::One;

fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[String; 2]>,
}

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .entries()
                .iter()
                .map(|s| [rational_string(s.re()), rational_string(s.im())])
                .collect(),
        }
    }
}

impl TryFrom<&MatrixJson> for Matrix {
    type Error = Error;

    fn try_from(j: &MatrixJson) -> Result<Matrix, Error> {
        if j.entries.len() != j.rows * j.cols {
            return Err(Error::Parse(format!(
                "matrix {}x{} needs {} entries, got {}",
                j.rows,
                j.cols,
                j.rows * j.cols,
                j.entries.len()
            )));
        }
        let mut parsed = Vec::with_capacity(j.entries.len());
        for [re, im] in &j.entries {
            parsed.push(Scalar::new(parse_rational(re)?, parse_rational(im)?));
        }
        let rows = (0..j.rows)
            .map(|r| parsed[r * j.cols..(r + 1) * j.cols].to_vec())
            .collect();
        Ok(Matrix::from_rows(rows))
    }
}

pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string(&MatrixJson::from(m)).expect("matrix serialization cannot fail")
}

pub fn matrix_from_json(s: &str) -> Result<Matrix, Error> {
    let j: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Matrix::try_from(&j)
}

/// Basis export: parallel role and element arrays plus the dimension.
#[derive(Serialize, Deserialize)]
pub struct BasisJson {
    pub n: usize,
    pub mu: String,
    pub dimension: usize,
    pub roles: Vec<String>,
    pub elements: Vec<MatrixJson>,
}

impl From<&SolutionBasis> for BasisJson {
    fn from(b: &SolutionBasis) -> Self {
        BasisJson {
            n: b.spec().n(),
            mu: b.spec().mu().to_string(),
            dimension: b.dimension(),
            roles: b.roles().iter().map(ToString::to_string).collect(),
            elements: b.elements().iter().map(MatrixJson::from).collect(),
        }
    }
}

pub fn basis_to_json(b: &SolutionBasis) -> String {
    serde_json::to_string(&BasisJson::from(b)).expect("basis serialization cannot fail")
}

/// Oracle kernel export: the dimension and the devectorized basis elements.
#[derive(Serialize, Deserialize)]
pub struct KernelJson {
    pub dimension: usize,
    pub elements: Vec<MatrixJson>,
}

impl From<&crate::oracle::KernelBasis> for KernelJson {
    fn from(k: &crate::oracle::KernelBasis) -> Self {
        KernelJson {
            dimension: k.dimension(),
            elements: k.elements().iter().map(MatrixJson::from).collect(),
        }
    }
}

pub fn kernel_to_json(k: &crate::oracle::KernelBasis) -> String {
    serde_json::to_string(&KernelJson::from(k)).expect("kernel serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
pub struct StructureConstantEntryJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

/// Structure-constant export: only nonzero entries with i < j are listed;
/// the rest follow from antisymmetry.
#[derive(Serialize, Deserialize)]
pub struct StructureConstantsJson {
    pub dim: usize,
    pub entries: Vec<StructureConstantEntryJson>,
}

impl From<&StructureConstants> for StructureConstantsJson {
    fn from(sc: &StructureConstants) -> Self {
        StructureConstantsJson {
            dim: sc.dim(),
            entries: sc
                .nonzero_entries()
                .into_iter()
                .map(|(i, j, k, c)| StructureConstantEntryJson {
                    i,
                    j,
                    k,
                    c: c.to_string(),
                })
                .collect(),
        }
    }
}

pub fn structure_constants_to_json(sc: &StructureConstants) -> String {
    serde_json::to_string(&StructureConstantsJson::from(sc))
        .expect("structure constant serialization cannot fail")
}
