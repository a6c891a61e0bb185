//! Machine-readable report shapes for the `--json` output mode. Field order
//! in these structs is the serialisation order, so output is deterministic.

use serde::Serialize;
use shs_core::graded::GradedVectorSpace;

use crate::model_file::graded_to_dense;
use crate::CliError;

pub fn dense(space: &GradedVectorSpace) -> Result<Vec<u64>, CliError> {
    graded_to_dense(space)
}

#[derive(Serialize)]
pub struct EnumerateReport {
    pub n: u32,
    pub actions: Vec<EnumeratedAction>,
}

#[derive(Serialize)]
pub struct EnumeratedAction {
    pub lambda: (i64, i64),
    pub minimal: String,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub n: u32,
    pub lambda: (i64, i64),
    pub conical: bool,
    pub symplectic_weight: i64,
    pub character_weights: (i64, i64, i64),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_components: Option<Vec<FixedReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal: Option<MinimalReport>,
}

#[derive(Serialize)]
pub struct FixedReport {
    pub id: String,
    pub kind: String,
    pub betti: Vec<u64>,
    pub complex_dim: u32,
    pub tangent_weights: Vec<i64>,
    pub mu: u32,
    pub owner: String,
}

#[derive(Serialize)]
pub struct MinimalReport {
    pub id: String,
    pub lagrangian: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub model: String,
    pub pure_dimension_ok: bool,
    pub actions: Vec<ActionCheck>,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct ActionCheck {
    pub action: String,
    pub betti_relation_ok: bool,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
    pub minimal_unique: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub owner_bijection: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub issues: Vec<String>,
}

#[derive(Serialize)]
pub struct FloerReport {
    pub model: String,
    pub components: Vec<String>,
    pub shk_certified: bool,
    pub entries: Vec<FloerEntry>,
    pub grading_shifts: Vec<GradingShiftReport>,
}

#[derive(Serialize)]
pub struct FloerEntry {
    pub pair: (String, String),
    pub ranks: Vec<u64>,
    pub poincare: String,
}

#[derive(Serialize)]
pub struct GradingShiftReport {
    pub pair: (String, String),
    pub d_codim: i64,
    pub d_index: String,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct ShReport {
    pub model: String,
    pub bounds: Vec<u64>,
    pub top_degree: i64,
    pub top_bound: u64,
    pub all_minimal: bool,
    pub vanishing: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub diagnostics: Vec<String>,
}

#[derive(Serialize)]
pub struct ConeCheckReport {
    pub homogeneous: bool,
    pub relation_weights: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct ConeEnumerateReport {
    pub bound: u64,
    pub characters: Vec<Vec<i64>>,
    pub bounded: bool,
}

#[derive(Serialize)]
pub struct PhiReport {
    pub lambda: Vec<i64>,
    pub generator_weights: Vec<i64>,
    pub w: i64,
    pub exponents: Vec<i64>,
}

#[derive(Serialize)]
pub struct QuiverReport {
    pub vertices: usize,
    pub edges: usize,
    pub admissible: bool,
    pub subcritical: bool,
}
