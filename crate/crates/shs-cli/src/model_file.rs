//! The on-disk model format (schema version 1) and its conversion to the
//! in-memory core model.
//!
//! Betti vectors are serialised as dense arrays of ranks by ascending degree
//! starting at degree 0; negative degrees never occur in shipped models.

use serde::{Deserialize, Serialize};
use shs_core::decomposition::{ActionFixedData, CoreComponent, CoreModel, Intersection};
use shs_core::graded::GradedVectorSpace;
use shs_core::toric::{FixedComponentDatum, FixedComponentKind};

use crate::CliError;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub schema_version: u64,
    pub name: String,
    #[serde(rename = "complex_dim_M")]
    pub complex_dim_m: u32,
    pub components: Vec<ComponentEntry>,
    pub intersections: Vec<IntersectionEntry>,
    pub actions: Vec<ActionEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core_betti_override: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subcritical: Option<bool>,
    /// Optional quiver attached to the model, so subcritical fixtures carry
    /// the loop-edge evidence alongside the marker.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentEntry {
    pub id: String,
    pub complex_dim: u32,
    pub betti: Vec<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionEntry {
    pub pair: (String, String),
    pub betti: Vec<u64>,
    pub complex_dim: u32,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub id: String,
    pub weight1: bool,
    pub shk: bool,
    pub fixed_components: Vec<FixedEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedEntry {
    pub id: String,
    pub betti: Vec<u64>,
    pub complex_dim: u32,
    pub mu: u32,
    pub owner: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverEntry {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

pub fn dense_to_graded(ranks: &[u64]) -> GradedVectorSpace {
    GradedVectorSpace::from_pairs(ranks.iter().enumerate().map(|(deg, &r)| (deg as i64, r)))
}

pub fn graded_to_dense(space: &GradedVectorSpace) -> Result<Vec<u64>, CliError> {
    if space.min_degree().unwrap_or(0) < 0 {
        return Err(CliError::input(
            "graded data with negative degrees cannot be serialised in the dense model format",
        ));
    }
    let top = space.max_degree().unwrap_or(0).max(0) as usize;
    let mut dense = vec![0u64; top + 1];
    for (deg, rank) in space.iter() {
        dense[deg as usize] = rank;
    }
    // The zero space still prints one entry so the array shape is stable.
    if space.is_zero() {
        dense = vec![0];
    }
    Ok(dense)
}

impl ModelFile {
    pub fn from_model(model: &CoreModel) -> Result<Self, CliError> {
        let components = model
            .components
            .iter()
            .map(|c| {
                Ok(ComponentEntry {
                    id: c.id.clone(),
                    complex_dim: c.complex_dim,
                    betti: graded_to_dense(&c.betti)?,
                })
            })
            .collect::<Result<_, CliError>>()?;
        let intersections = model
            .intersections
            .iter()
            .map(|s| {
                Ok(IntersectionEntry {
                    pair: s.pair.clone(),
                    betti: graded_to_dense(&s.betti)?,
                    complex_dim: s.complex_dim,
                })
            })
            .collect::<Result<_, CliError>>()?;
        let actions = model
            .actions
            .iter()
            .map(|a| {
                Ok(ActionEntry {
                    id: a.id.clone(),
                    weight1: a.weight1,
                    shk: a.shk,
                    fixed_components: a
                        .fixed_components
                        .iter()
                        .map(|f| {
                            Ok(FixedEntry {
                                id: f.id.clone(),
                                betti: graded_to_dense(&f.betti)?,
                                complex_dim: f.complex_dim,
                                mu: f.mu,
                                owner: f.owner.clone(),
                            })
                        })
                        .collect::<Result<_, CliError>>()?,
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(ModelFile {
            schema_version: SCHEMA_VERSION,
            name: model.name.clone(),
            complex_dim_m: model.complex_dim_m,
            components,
            intersections,
            actions,
            core_betti_override: model
                .core_betti_override
                .as_ref()
                .map(graded_to_dense)
                .transpose()?,
            subcritical: if model.subcritical { Some(true) } else { None },
            quiver: None,
        })
    }

    /// Validates the document and converts it to a core model. All id
    /// references are checked here; failures are input errors.
    pub fn into_model(self) -> Result<CoreModel, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::input(format!(
                "unsupported schema_version {} (expected {})",
                self.schema_version, SCHEMA_VERSION
            )));
        }
        if self.complex_dim_m == 0 || !self.complex_dim_m.is_multiple_of(2) {
            return Err(CliError::input(format!(
                "complex_dim_M must be a positive even integer, got {}",
                self.complex_dim_m
            )));
        }
        let mut ids: Vec<&str> = Vec::new();
        for c in &self.components {
            if ids.contains(&c.id.as_str()) {
                return Err(CliError::input(format!("duplicate component id {:?}", c.id)));
            }
            ids.push(&c.id);
        }
        let check_id = |id: &str, context: &str| -> Result<(), CliError> {
            if ids.contains(&id) {
                Ok(())
            } else {
                Err(CliError::input(format!("{context} references undeclared component {id:?}")))
            }
        };
        let mut seen_pairs: Vec<(String, String)> = Vec::new();
        for s in &self.intersections {
            check_id(&s.pair.0, "intersection")?;
            check_id(&s.pair.1, "intersection")?;
            if s.pair.0 == s.pair.1 {
                return Err(CliError::input(format!(
                    "intersection pair [{:?}, {:?}] must name two distinct components",
                    s.pair.0, s.pair.1
                )));
            }
            let normalized = if s.pair.0 <= s.pair.1 {
                (s.pair.0.clone(), s.pair.1.clone())
            } else {
                (s.pair.1.clone(), s.pair.0.clone())
            };
            if seen_pairs.contains(&normalized) {
                return Err(CliError::input(format!(
                    "duplicate intersection pair [{:?}, {:?}]",
                    s.pair.0, s.pair.1
                )));
            }
            seen_pairs.push(normalized);
        }
        let mut action_ids: Vec<&str> = Vec::new();
        for a in &self.actions {
            if action_ids.contains(&a.id.as_str()) {
                return Err(CliError::input(format!("duplicate action id {:?}", a.id)));
            }
            action_ids.push(&a.id);
            for f in &a.fixed_components {
                check_id(&f.owner, &format!("fixed component {:?} of action {:?}", f.id, a.id))?;
                if !f.mu.is_multiple_of(2) {
                    return Err(CliError::input(format!(
                        "fixed component {:?} of action {:?} has odd mu = {}; attracting fibres have even real dimension",
                        f.id, a.id, f.mu
                    )));
                }
            }
        }
        if let Some(q) = &self.quiver {
            for (tail, head) in &q.edges {
                if !q.vertices.contains(tail) || !q.vertices.contains(head) {
                    return Err(CliError::input(format!(
                        "quiver edge [{tail:?}, {head:?}] references an undeclared vertex"
                    )));
                }
            }
        }

        let components = self
            .components
            .into_iter()
            .map(|c| CoreComponent {
                id: c.id,
                complex_dim: c.complex_dim,
                betti: dense_to_graded(&c.betti),
            })
            .collect();
        let intersections = self
            .intersections
            .into_iter()
            .map(|s| Intersection {
                pair: s.pair,
                betti: dense_to_graded(&s.betti),
                complex_dim: s.complex_dim,
            })
            .collect();
        let actions = self
            .actions
            .into_iter()
            .map(|a| ActionFixedData {
                id: a.id,
                weight1: a.weight1,
                shk: a.shk,
                fixed_components: a
                    .fixed_components
                    .into_iter()
                    .map(|f| FixedComponentDatum {
                        id: f.id,
                        kind: if f.complex_dim == 0 {
                            FixedComponentKind::IsolatedPoint
                        } else {
                            FixedComponentKind::FixedSphere
                        },
                        betti: dense_to_graded(&f.betti),
                        complex_dim: f.complex_dim,
                        tangent_weights: Vec::new(),
                        mu: f.mu,
                        owner: f.owner,
                    })
                    .collect(),
            })
            .collect();
        Ok(CoreModel {
            name: self.name,
            complex_dim_m: self.complex_dim_m,
            components,
            intersections,
            actions,
            core_betti_override: self.core_betti_override.map(|b| dense_to_graded(&b)),
            subcritical: self.subcritical.unwrap_or(false),
        })
    }
}

pub fn load_model(path: &std::path::Path) -> Result<(CoreModel, Option<QuiverEntry>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let file: ModelFile = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let quiver = file.quiver.clone();
    Ok((file.into_model()?, quiver))
}

pub fn model_to_json(model: &CoreModel) -> Result<String, CliError> {
    let file = ModelFile::from_model(model)?;
    let mut out = serde_json::to_string_pretty(&file)
        .map_err(|e| CliError::input(format!("serialisation failed: {e}")))?;
    out.push('\n');
    Ok(out)
}
