//! Degree-wise lower bounds on symplectic cohomology from minimal
//! components: per-action bounds, the all-minimal bound, the top-degree
//! count, and the subcritical vanishing flag.

use thiserror::Error;

use crate::decomposition::{CoreModel, DecompositionError};
use crate::graded::GradedVectorSpace;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShBoundsError {
    #[error("model declares no action with id {0:?}")]
    UnknownAction(String),
    #[error("action {0:?} is not weight-1; the bound only applies to weight-1 conical actions")]
    NotWeightOne(String),
    #[error("components {missing:?} are not certified minimal by any declared action; the cohomology embedding needs all components minimal")]
    NotAllMinimal { missing: Vec<String> },
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
}

/// The assembled bound report for one model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShBoundReport {
    /// Strongest per-degree lower bound over the declared weight-1 actions.
    pub bounds: GradedVectorSpace,
    /// Top degree dim_C M, where the count of minimal components bounds the
    /// rank from below.
    pub top_degree: i64,
    pub top_bound: u64,
    pub all_minimal: bool,
    /// Subcritical models have vanishing symplectic cohomology; all bounds
    /// are zero.
    pub vanishing: bool,
    pub diagnostics: Vec<String>,
}

/// The per-degree bound from one weight-1 action: the shifted Betti vectors
/// of the fixed components lying in minimal core components.
pub fn sh_lower_bounds(
    model: &CoreModel,
    action_id: &str,
) -> Result<GradedVectorSpace, ShBoundsError> {
    let action = model
        .action(action_id)
        .ok_or_else(|| ShBoundsError::UnknownAction(action_id.to_string()))?;
    if !action.weight1 {
        return Err(ShBoundsError::NotWeightOne(action_id.to_string()));
    }
    let minimal = model.minimal_components()?;
    let contributions: Vec<GradedVectorSpace> = action
        .fixed_components
        .iter()
        .filter(|fixed| minimal.contains(&fixed.owner))
        .map(|fixed| fixed.betti.shift(fixed.mu as i64))
        .collect();
    Ok(GradedVectorSpace::direct_sum(&contributions))
}

/// When every core component is minimal the whole cohomology of the model
/// embeds, so the bound is the core Betti vector itself.
pub fn all_minimal_bound(model: &CoreModel) -> Result<GradedVectorSpace, ShBoundsError> {
    let minimal = model.minimal_components()?;
    let missing: Vec<String> = model
        .components
        .iter()
        .filter(|c| !minimal.contains(&c.id))
        .map(|c| c.id.clone())
        .collect();
    if !missing.is_empty() {
        return Err(ShBoundsError::NotAllMinimal { missing });
    }
    Ok(model.core_betti()?)
}

/// Assembles the report: degree-wise maxima over the declared weight-1
/// actions (each is a valid bound for the same ranks, so they combine by
/// max, not sum), the top-degree count, and the vanishing flag.
pub fn report(model: &CoreModel) -> Result<ShBoundReport, ShBoundsError> {
    let minimal = model.minimal_components()?;
    let mut bounds = GradedVectorSpace::zero();
    for action in model.weight1_actions() {
        bounds = bounds.pointwise_max(&sh_lower_bounds(model, &action.id)?);
    }
    let all_minimal = !model.components.is_empty() && minimal.len() == model.components.len();
    let mut diagnostics = Vec::new();
    let vanishing = model.subcritical;
    if vanishing && !bounds.is_zero() {
        diagnostics.push(format!(
            "InconsistentModel: subcritical marker with positive bounds {}; a subcritical Stein manifold has vanishing symplectic cohomology and admits no weight-1 conical action",
            bounds.poincare_string()
        ));
        bounds = GradedVectorSpace::zero();
    }
    if vanishing {
        bounds = GradedVectorSpace::zero();
    }
    Ok(ShBoundReport {
        bounds,
        top_degree: model.complex_dim_m as i64,
        top_bound: if vanishing { 0 } else { minimal.len() as u64 },
        all_minimal,
        vanishing,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::{AnFan, Cocharacter};

    #[test]
    fn full_an_model_bound_per_action() {
        // Every fixed component of λ_1 is owned by a minimal sphere, so the
        // single-action bound already reaches the core Betti vector.
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        assert_eq!(
            sh_lower_bounds(&model, "(1,1)").unwrap(),
            GradedVectorSpace::from_pairs([(0, 1), (2, 4)])
        );
    }

    #[test]
    fn single_action_restricts_to_its_minimal_sphere() {
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&[Cocharacter::new(2, 1)]).unwrap();
        assert_eq!(
            sh_lower_bounds(&model, "(2,1)").unwrap(),
            GradedVectorSpace::from_pairs([(0, 1), (2, 1)])
        );
    }

    #[test]
    fn single_sphere_model() {
        let fan = AnFan::new(1).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        assert_eq!(
            sh_lower_bounds(&model, "(1,1)").unwrap(),
            GradedVectorSpace::from_pairs([(0, 1), (2, 1)])
        );
    }

    #[test]
    fn non_weight1_action_is_rejected() {
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&[Cocharacter::new(5, 2)]).unwrap();
        assert_eq!(
            sh_lower_bounds(&model, "(5,2)"),
            Err(ShBoundsError::NotWeightOne("(5,2)".into()))
        );
    }

    #[test]
    fn all_minimal_bound_on_full_models() {
        for n in 1..=8 {
            let fan = AnFan::new(n).unwrap();
            let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
            assert_eq!(
                all_minimal_bound(&model).unwrap(),
                GradedVectorSpace::from_pairs([(0, 1), (2, n as u64)])
            );
        }
    }

    #[test]
    fn all_minimal_bound_needs_every_component_certified() {
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&[Cocharacter::new(2, 1)]).unwrap();
        assert_eq!(
            all_minimal_bound(&model),
            Err(ShBoundsError::NotAllMinimal {
                missing: vec!["S1".into(), "S3".into(), "S4".into()]
            })
        );
    }

    #[test]
    fn report_on_full_a4() {
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        let report = report(&model).unwrap();
        assert_eq!(report.bounds, GradedVectorSpace::from_pairs([(0, 1), (2, 4)]));
        assert_eq!(report.top_degree, 2);
        assert_eq!(report.top_bound, 4);
        assert!(report.all_minimal);
        assert!(!report.vanishing);
        assert!(report.diagnostics.is_empty());
    }

    #[test]
    fn report_on_empty_action_list() {
        let fan = AnFan::new(3).unwrap();
        let model = fan.to_core_model(&[]).unwrap();
        let rep = report(&model).unwrap();
        assert!(rep.bounds.is_zero());
        assert_eq!(rep.top_bound, 0);
        assert!(!rep.all_minimal);
    }

    #[test]
    fn subcritical_model_vanishes() {
        let mut model = AnFan::new(1).unwrap().to_core_model(&[]).unwrap();
        model.subcritical = true;
        let rep = report(&model).unwrap();
        assert!(rep.vanishing);
        assert!(rep.bounds.is_zero());
        assert_eq!(rep.top_bound, 0);
        assert!(rep.diagnostics.is_empty());
    }

    #[test]
    fn subcritical_with_positive_bounds_is_flagged() {
        let fan = AnFan::new(2).unwrap();
        let mut model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        model.subcritical = true;
        let rep = report(&model).unwrap();
        assert!(rep.vanishing);
        assert!(rep.bounds.is_zero());
        assert_eq!(rep.diagnostics.len(), 1);
        assert!(rep.diagnostics[0].starts_with("InconsistentModel"));
    }

    #[test]
    fn adding_actions_is_monotone() {
        let fan = AnFan::new(5).unwrap();
        let all = fan.enumerate_weight1();
        let mut previous = GradedVectorSpace::zero();
        for upto in 1..=all.len() {
            let model = fan.to_core_model(&all[..upto]).unwrap();
            let rep = report(&model).unwrap();
            assert!(previous.le(&rep.bounds));
            previous = rep.bounds;
        }
    }

    #[test]
    fn any_single_action_reaches_core_betti_when_all_minimal() {
        // On the chain models every fixed component of every weight-1
        // action is owned by a minimal sphere, so nothing is dropped.
        for n in 1..=6 {
            let fan = AnFan::new(n).unwrap();
            let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
            let core = model.core_betti().unwrap();
            for action in model.weight1_actions() {
                assert_eq!(sh_lower_bounds(&model, &action.id).unwrap(), core, "n={n}");
            }
        }
    }

    #[test]
    fn per_action_bound_is_dominated_by_assemble() {
        let fan = AnFan::new(6).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        for action in model.weight1_actions() {
            let bound = sh_lower_bounds(&model, &action.id).unwrap();
            let assembled = crate::decomposition::assemble(action);
            assert!(bound.le(&assembled));
        }
    }
}
