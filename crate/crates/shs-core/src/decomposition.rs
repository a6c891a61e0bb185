//! Homology-decomposition bookkeeping for cores of contracting C*-actions:
//! assembling the shifted fixed-locus homology, computing core Betti vectors
//! over the intersection graph, and locating minimal components.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graded::GradedVectorSpace;
use crate::toric::FixedComponentDatum;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("model declares no action with id {0:?}")]
    UnknownAction(String),
    #[error("intersection references undeclared component {0:?}")]
    UnknownComponent(String),
    #[error("component {0:?} has Betti rank {1} in degree 0; the intersection-graph core Betti computation needs connected components")]
    DisconnectedComponent(String, u64),
    #[error(
        "positive-dimensional intersections present and no explicit core Betti override given"
    )]
    MissingOverride,
    #[error("action {action:?} has {count} fixed components with mu = 0; expected exactly one")]
    MinimalNotUnique { action: String, count: usize },
    #[error("fixed component {fixed:?} of action {action:?} has undeclared owner {owner:?}")]
    UnknownOwner { action: String, fixed: String, owner: String },
    #[error("weight-1 actions {first:?} and {second:?} share the minimal component {owner:?}; distinct commuting weight-1 actions must yield distinct minima")]
    DuplicateMinimum { first: String, second: String, owner: String },
}

/// One irreducible core component: a smooth closed subvariety with its
/// Betti vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreComponent {
    pub id: String,
    pub complex_dim: u32,
    pub betti: GradedVectorSpace,
}

/// Clean pairwise intersection data for two core components. Pairs that are
/// absent from the model intersect emptily.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    pub pair: (String, String),
    pub betti: GradedVectorSpace,
    pub complex_dim: u32,
}

/// The fixed-locus data of one declared C*-action on the model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionFixedData {
    pub id: String,
    /// Whether the action scales the symplectic form with weight 1.
    pub weight1: bool,
    /// Whether the S^1-part is isometric for a compatible hyperkähler
    /// metric; the graded Floer shift formula is only certified in that case.
    pub shk: bool,
    pub fixed_components: Vec<FixedComponentDatum>,
}

impl ActionFixedData {
    /// The unique fixed component with mu = 0, if unique.
    pub fn minimal(&self) -> Result<&FixedComponentDatum, DecompositionError> {
        let minima: Vec<_> = self.fixed_components.iter().filter(|c| c.mu == 0).collect();
        if minima.len() != 1 {
            return Err(DecompositionError::MinimalNotUnique {
                action: self.id.clone(),
                count: minima.len(),
            });
        }
        Ok(minima[0])
    }
}

/// A core presented combinatorially: components, pairwise clean
/// intersections, and per-action fixed-locus data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreModel {
    pub name: String,
    /// Complex dimension of the ambient manifold (always even).
    pub complex_dim_m: u32,
    pub components: Vec<CoreComponent>,
    pub intersections: Vec<Intersection>,
    pub actions: Vec<ActionFixedData>,
    /// Explicit core Betti vector, required when intersections are
    /// positive-dimensional.
    pub core_betti_override: Option<GradedVectorSpace>,
    /// Marks models known to carry a subcritical Stein structure (no
    /// weight-1 conical action exists; symplectic cohomology vanishes).
    pub subcritical: bool,
}

/// Outcome of checking the Betti relation for one action: both sides are
/// reported so failures are printable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVerification {
    pub action_id: String,
    pub ok: bool,
    pub lhs: GradedVectorSpace,
    pub rhs: GradedVectorSpace,
}

/// Degree-wise sum of the fixed-component Betti vectors, each shifted up by
/// its mu. When the decomposition hypotheses hold this equals the core
/// Betti vector.
pub fn assemble(data: &ActionFixedData) -> GradedVectorSpace {
    let shifted: Vec<GradedVectorSpace> =
        data.fixed_components.iter().map(|c| c.betti.shift(c.mu as i64)).collect();
    GradedVectorSpace::direct_sum(&shifted)
}

impl CoreModel {
    pub fn component(&self, id: &str) -> Option<&CoreComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn action(&self, id: &str) -> Option<&ActionFixedData> {
        self.actions.iter().find(|a| a.id == id)
    }

    /// Looks up the clean intersection of two components, in either order.
    pub fn intersection(&self, a: &str, b: &str) -> Option<&Intersection> {
        self.intersections
            .iter()
            .find(|s| (s.pair.0 == a && s.pair.1 == b) || (s.pair.0 == b && s.pair.1 == a))
    }

    pub fn half_dim(&self) -> u32 {
        self.complex_dim_m / 2
    }

    /// A model is weight-1 when it declares at least one weight-1 action.
    pub fn is_weight1(&self) -> bool {
        self.actions.iter().any(|a| a.weight1)
    }

    pub fn weight1_actions(&self) -> impl Iterator<Item = &ActionFixedData> {
        self.actions.iter().filter(|a| a.weight1)
    }

    /// Betti vector of the core. Point intersections are handled by the
    /// intersection-graph formula: degree 0 counts graph components, degree 1
    /// adds one rank per independent graph cycle, higher degrees are additive
    /// over components. Positive-dimensional intersections require the
    /// explicit override.
    pub fn core_betti(&self) -> Result<GradedVectorSpace, DecompositionError> {
        if let Some(betti) = &self.core_betti_override {
            return Ok(betti.clone());
        }
        let positive_dimensional = self
            .intersections
            .iter()
            .any(|s| s.complex_dim > 0 || s.betti.max_degree().unwrap_or(0) > 0);
        if positive_dimensional {
            return Err(DecompositionError::MissingOverride);
        }

        let index: BTreeMap<&str, usize> =
            self.components.iter().enumerate().map(|(i, c)| (c.id.as_str(), i)).collect();
        for c in &self.components {
            let b0 = c.betti.rank(0);
            if b0 != 1 {
                return Err(DecompositionError::DisconnectedComponent(c.id.clone(), b0));
            }
        }

        // Union-find over the multigraph whose vertices are components and
        // whose edges are the intersection points.
        let mut parent: Vec<usize> = (0..self.components.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut edges: u64 = 0;
        for s in &self.intersections {
            let &i = index
                .get(s.pair.0.as_str())
                .ok_or_else(|| DecompositionError::UnknownComponent(s.pair.0.clone()))?;
            let &j = index
                .get(s.pair.1.as_str())
                .ok_or_else(|| DecompositionError::UnknownComponent(s.pair.1.clone()))?;
            edges += s.betti.rank(0);
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
        let vertices = self.components.len() as u64;
        let graph_components =
            (0..self.components.len()).map(|i| find(&mut parent, i)).collect::<BTreeSet<_>>().len()
                as u64;
        // Independent cycles of the multigraph.
        let cycles = edges + graph_components - vertices;

        let mut betti = GradedVectorSpace::from_pairs([(0, graph_components), (1, cycles)]);
        for c in &self.components {
            let above: GradedVectorSpace = c.betti.iter().filter(|&(deg, _)| deg >= 1).collect();
            betti.add_assign(&above);
        }
        Ok(betti)
    }

    /// Checks the Betti relation for one declared action: the assembled
    /// shifted fixed-locus ranks against the core Betti vector.
    pub fn verify_betti_relation(
        &self,
        action_id: &str,
    ) -> Result<BettiVerification, DecompositionError> {
        let action = self
            .action(action_id)
            .ok_or_else(|| DecompositionError::UnknownAction(action_id.to_string()))?;
        let lhs = assemble(action);
        let rhs = self.core_betti()?;
        Ok(BettiVerification { action_id: action_id.to_string(), ok: lhs == rhs, lhs, rhs })
    }

    /// The set of core components certified minimal by the declared weight-1
    /// actions: each contributes the owner of its unique mu = 0 fixed
    /// component. Two distinct actions claiming the same minimum is a model
    /// inconsistency and reported as such.
    pub fn minimal_components(&self) -> Result<BTreeSet<String>, DecompositionError> {
        let mut owner_to_action: BTreeMap<String, String> = BTreeMap::new();
        for action in self.weight1_actions() {
            let minimum = action.minimal()?;
            if self.component(&minimum.owner).is_none() {
                return Err(DecompositionError::UnknownOwner {
                    action: action.id.clone(),
                    fixed: minimum.id.clone(),
                    owner: minimum.owner.clone(),
                });
            }
            if let Some(first) = owner_to_action.get(&minimum.owner) {
                if *first != action.id {
                    return Err(DecompositionError::DuplicateMinimum {
                        first: first.clone(),
                        second: action.id.clone(),
                        owner: minimum.owner.clone(),
                    });
                }
            } else {
                owner_to_action.insert(minimum.owner.clone(), action.id.clone());
            }
        }
        Ok(owner_to_action.into_keys().collect())
    }

    /// Whether every component has complex dimension exactly half the
    /// ambient one; forced for weight-1 models by pure-dimensionality of the
    /// core.
    pub fn pure_dimension_ok(&self) -> bool {
        let half = self.half_dim();
        self.components.iter().all(|c| c.complex_dim == half)
    }

    /// For a weight-1 action the fixed components must be bijectively
    /// distributed among the core components via the owner map. Returns the
    /// offending description on failure.
    pub fn owner_bijection_ok(&self, action: &ActionFixedData) -> Result<(), String> {
        let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
        for fixed in &action.fixed_components {
            if self.component(&fixed.owner).is_none() {
                return Err(format!(
                    "fixed component {:?} has undeclared owner {:?}",
                    fixed.id, fixed.owner
                ));
            }
            if let Some(prev) = seen.insert(fixed.owner.as_str(), fixed.id.as_str()) {
                return Err(format!(
                    "owner {:?} is claimed by both {:?} and {:?}",
                    fixed.owner, prev, fixed.id
                ));
            }
        }
        if seen.len() != self.components.len() {
            return Err(format!(
                "owner map covers {} of {} core components",
                seen.len(),
                self.components.len()
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::{AnFan, Cocharacter, FixedComponentDatum, FixedComponentKind};

    fn sphere() -> GradedVectorSpace {
        GradedVectorSpace::from_pairs([(0, 1), (2, 1)])
    }

    fn point_component(id: &str, mu: u32, owner: &str) -> FixedComponentDatum {
        FixedComponentDatum {
            id: id.to_string(),
            kind: FixedComponentKind::IsolatedPoint,
            betti: GradedVectorSpace::generator(0),
            complex_dim: 0,
            tangent_weights: vec![],
            mu,
            owner: owner.to_string(),
        }
    }

    /// Union of three projective lines in the plane, with the fixed points
    /// of the weight-(0,1,2) projective action. The attracting sets in the
    /// union differ from the ambient ones, so the decomposition fails: this
    /// is the negative control.
    fn triangle_model() -> CoreModel {
        let line = |id: &str| CoreComponent { id: id.into(), complex_dim: 1, betti: sphere() };
        let meet = |a: &str, b: &str| Intersection {
            pair: (a.into(), b.into()),
            betti: GradedVectorSpace::generator(0),
            complex_dim: 0,
        };
        CoreModel {
            name: "p2-triangle".into(),
            complex_dim_m: 2,
            components: vec![line("L0"), line("L1"), line("L2")],
            intersections: vec![meet("L0", "L1"), meet("L1", "L2"), meet("L0", "L2")],
            actions: vec![ActionFixedData {
                id: "projective".into(),
                weight1: false,
                shk: false,
                fixed_components: vec![
                    point_component("F0", 0, "L1"),
                    point_component("F1", 2, "L2"),
                    point_component("F2", 4, "L0"),
                ],
            }],
            core_betti_override: None,
            subcritical: false,
        }
    }

    #[test]
    fn assemble_point_core() {
        let data = ActionFixedData {
            id: "only".into(),
            weight1: false,
            shk: false,
            fixed_components: vec![point_component("F", 0, "C")],
        };
        assert_eq!(assemble(&data), GradedVectorSpace::generator(0));
    }

    #[test]
    fn assemble_a4_weight1() {
        // Frozen from the cellular oracle: the chain of four spheres has
        // Betti ranks (1, 0, 4).
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&[Cocharacter::new(2, 1)]).unwrap();
        assert_eq!(assemble(&model.actions[0]), GradedVectorSpace::from_pairs([(0, 1), (2, 4)]));
    }

    #[test]
    fn assemble_a4_standard_action() {
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&[Cocharacter::new(5, 2)]).unwrap();
        assert_eq!(assemble(&model.actions[0]), GradedVectorSpace::from_pairs([(0, 1), (2, 4)]));
    }

    #[test]
    fn core_betti_of_chains() {
        for n in 1..=8 {
            let fan = AnFan::new(n).unwrap();
            let model = fan.to_core_model(&[]).unwrap();
            assert_eq!(
                model.core_betti().unwrap(),
                GradedVectorSpace::from_pairs([(0, 1), (2, n as u64)])
            );
        }
    }

    #[test]
    fn core_betti_of_triangle_has_a_cycle_class() {
        let model = triangle_model();
        assert_eq!(
            model.core_betti().unwrap(),
            GradedVectorSpace::from_pairs([(0, 1), (1, 1), (2, 3)])
        );
    }

    #[test]
    fn triangle_betti_relation_fails_with_reported_sides() {
        let model = triangle_model();
        let check = model.verify_betti_relation("projective").unwrap();
        assert!(!check.ok);
        assert_eq!(check.lhs, GradedVectorSpace::from_pairs([(0, 1), (2, 1), (4, 1)]));
        assert_eq!(check.rhs, GradedVectorSpace::from_pairs([(0, 1), (1, 1), (2, 3)]));
        assert_eq!(check.lhs.total_rank(), 3);
        assert_eq!(check.rhs.total_rank(), 5);
    }

    #[test]
    fn betti_relation_holds_for_toric_models() {
        for n in 1..=6 {
            let fan = AnFan::new(n).unwrap();
            for p in 1..=12 {
                for q in 1..=4 {
                    let lam = Cocharacter::new(p, q);
                    if !fan.is_conical(lam) {
                        continue;
                    }
                    let model = fan.to_core_model(&[lam]).unwrap();
                    let check = model.verify_betti_relation(&lam.id()).unwrap();
                    assert!(check.ok, "n={n} lambda={lam}");
                    assert_eq!(check.lhs.euler_characteristic(), check.rhs.euler_characteristic());
                }
            }
        }
    }

    #[test]
    fn unknown_action_is_rejected() {
        let fan = AnFan::new(2).unwrap();
        let model = fan.to_core_model(&[]).unwrap();
        assert_eq!(
            model.verify_betti_relation("(9,9)"),
            Err(DecompositionError::UnknownAction("(9,9)".into()))
        );
    }

    #[test]
    fn positive_dimensional_intersection_needs_override() {
        let mut model = triangle_model();
        model.intersections[0].complex_dim = 1;
        model.intersections[0].betti = sphere();
        assert_eq!(model.core_betti(), Err(DecompositionError::MissingOverride));
        model.core_betti_override = Some(GradedVectorSpace::generator(0));
        assert_eq!(model.core_betti().unwrap(), GradedVectorSpace::generator(0));
    }

    #[test]
    fn minimal_components_of_full_an_model() {
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        let minima = model.minimal_components().unwrap();
        let expected: BTreeSet<String> =
            ["S1", "S2", "S3", "S4"].iter().map(|s| s.to_string()).collect();
        assert_eq!(minima, expected);
    }

    #[test]
    fn minimal_components_single_action() {
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&[Cocharacter::new(2, 1)]).unwrap();
        let minima = model.minimal_components().unwrap();
        assert_eq!(minima.into_iter().collect::<Vec<_>>(), vec!["S2".to_string()]);
    }

    #[test]
    fn duplicate_minimum_is_diagnosed() {
        let fan = AnFan::new(4).unwrap();
        let mut model = fan.to_core_model(&[Cocharacter::new(2, 1)]).unwrap();
        let mut clone = model.actions[0].clone();
        clone.id = "copy".into();
        model.actions.push(clone);
        assert!(matches!(
            model.minimal_components(),
            Err(DecompositionError::DuplicateMinimum { .. })
        ));
    }

    #[test]
    fn minimal_betti_matches_owner_betti_for_weight1() {
        for n in 1..=6 {
            let fan = AnFan::new(n).unwrap();
            let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
            for action in model.weight1_actions() {
                let minimum = action.minimal().unwrap();
                let owner = model.component(&minimum.owner).unwrap();
                assert_eq!(minimum.betti, owner.betti);
            }
        }
    }

    #[test]
    fn owner_bijection_for_weight1_actions() {
        for n in 1..=6 {
            let fan = AnFan::new(n).unwrap();
            let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
            for action in &model.actions {
                assert!(model.owner_bijection_ok(action).is_ok());
            }
        }
    }

    #[test]
    fn assemble_preserves_total_rank() {
        let fan = AnFan::new(5).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        for action in &model.actions {
            let total: u64 = action.fixed_components.iter().map(|c| c.betti.total_rank()).sum();
            assert_eq!(assemble(action).total_rank(), total);
        }
    }
}
