//! On-disk format for graded cone presentations and quiver documents.
//!
//! Shape: `{variables:[{name, weights:[...]}], relations:[[{coeff,
//! exps:[...]}]], sympl_covector:[...]}`. Coefficients are exact rationals,
//! written as integers or as strings like `"-3/2"`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};
use shs_core::cone::{ConePresentation, Monomial, QuiverData, Variable};

use crate::model_file::QuiverEntry;
use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub variables: Vec<VariableEntry>,
    pub relations: Vec<Vec<MonomialEntry>>,
    pub sympl_covector: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableEntry {
    pub name: String,
    pub weights: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialEntry {
    #[serde(deserialize_with = "deserialize_rational")]
    pub coeff: (i64, i64),
    pub exps: Vec<u64>,
}

fn deserialize_rational<'de, D: Deserializer<'de>>(d: D) -> Result<(i64, i64), D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Integer(i64),
        Text(String),
    }
    match Raw::deserialize(d)? {
        Raw::Integer(n) => Ok((n, 1)),
        Raw::Text(text) => {
            let mut parts = text.splitn(2, '/');
            let numer = parts
                .next()
                .unwrap()
                .trim()
                .parse::<i64>()
                .map_err(|_| D::Error::custom(format!("bad rational {text:?}")))?;
            let denom = match parts.next() {
                None => 1,
                Some(raw) => raw
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| D::Error::custom(format!("bad rational {text:?}")))?,
            };
            if denom == 0 {
                return Err(D::Error::custom(format!("zero denominator in {text:?}")));
            }
            Ok((numer, denom))
        }
    }
}

impl PresentationFile {
    pub fn into_presentation(self) -> Result<(ConePresentation, Option<QuiverEntry>), CliError> {
        let variables = self
            .variables
            .into_iter()
            .map(|v| Variable { name: v.name, weights: v.weights })
            .collect();
        let relations = self
            .relations
            .into_iter()
            .map(|relation| {
                relation
                    .into_iter()
                    .map(|m| Monomial { coeff: num_rational(m.coeff), exponents: m.exps })
                    .collect()
            })
            .collect();
        let presentation = ConePresentation::new(variables, relations, self.sympl_covector)
            .map_err(CliError::input)?;
        Ok((presentation, self.quiver))
    }
}

fn num_rational((numer, denom): (i64, i64)) -> num_rational::Ratio<i64> {
    num_rational::Ratio::new(numer, denom)
}

pub fn load_presentation(
    path: &std::path::Path,
) -> Result<(ConePresentation, Option<QuiverEntry>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let file: PresentationFile = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    file.into_presentation()
}

/// Loads quiver data from any supported document: a bare
/// `{vertices, edges}` object, a presentation file with a `quiver` key, or
/// a model file with a `quiver` key.
pub fn load_quiver(path: &std::path::Path) -> Result<QuiverData, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    if let Ok(entry) = serde_json::from_str::<QuiverEntry>(&text) {
        return QuiverData::new(entry.vertices, entry.edges).map_err(CliError::input);
    }
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let Some(quiver) = value.get("quiver") else {
        return Err(CliError::input(format!(
            "{} carries no quiver data (expected a {{vertices, edges}} document or a file with a \"quiver\" key)",
            path.display()
        )));
    };
    let entry: QuiverEntry = serde_json::from_value(quiver.clone())
        .map_err(|e| CliError::input(format!("{}: bad quiver data: {e}", path.display())))?;
    QuiverData::new(entry.vertices, entry.edges).map_err(CliError::input)
}
