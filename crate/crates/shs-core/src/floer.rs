//! Graded Lagrangian Floer cohomology tables via the clean-intersection
//! formula, and a Robbin–Salamon index engine for phase-diagonal paths of
//! Lagrangian subspaces that reproduces the grading shift independently.
//!
//! All holomorphic strips with boundary on core components are constant, so
//! the tables carry no differential: every entry is the shifted cohomology
//! of the clean intersection.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::decomposition::CoreModel;
use crate::graded::GradedVectorSpace;
use crate::half::HalfInt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FloerError {
    #[error("model declares no component {0:?}")]
    UnknownComponent(String),
    #[error("component {id:?} has complex dimension {complex_dim}, not half-dimensional ({half_dim}); only smooth Lagrangian core components carry Floer data")]
    NotHalfDimensional { id: String, complex_dim: u32, half_dim: u32 },
    #[error("model {0:?} declares no weight-1 action")]
    NotWeightOneModel(String),
    #[error("components {0:?} and {1:?} have empty intersection; no grading shift is defined")]
    EmptyIntersection(String, String),
    #[error("phase path declares {phases} phases but {references} reference angles")]
    MismatchedReference { phases: usize, references: usize },
    #[error("balanced path needs even n and even k with 0 <= k <= n, got n = {n}, k = {k}")]
    ParityViolation { n: usize, k: usize },
    #[error("ambient complex dimension {0} is odd; holomorphic symplectic manifolds have even complex dimension")]
    OddAmbientDimension(u32),
}

/// An affine phase function θ(t) = (start + slope·t)·π on t ∈ [0, 1].
/// Angles are exact rational multiples of π, so crossing times are rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffinePhase {
    pub start: Ratio<i64>,
    pub slope: Ratio<i64>,
}

impl AffinePhase {
    pub fn new(start: Ratio<i64>, slope: Ratio<i64>) -> Self {
        AffinePhase { start, slope }
    }

    pub fn constant(angle: Ratio<i64>) -> Self {
        AffinePhase { start: angle, slope: Ratio::zero() }
    }

    fn at(&self, t: Ratio<i64>) -> Ratio<i64> {
        self.start + self.slope * t
    }
}

/// A path of Lagrangian subspaces of C^n that is diagonal in phase
/// coordinates: the j-th coordinate line rotates by the affine phase θ_j(t),
/// measured against the fixed reference line at angle φ_j. Exactly the class
/// of paths the shift computation decomposes into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePath {
    phases: Vec<AffinePhase>,
    reference: Vec<Ratio<i64>>,
}

impl PhasePath {
    pub fn new(phases: Vec<AffinePhase>, reference: Vec<Ratio<i64>>) -> Result<Self, FloerError> {
        if phases.len() != reference.len() {
            return Err(FloerError::MismatchedReference {
                phases: phases.len(),
                references: reference.len(),
            });
        }
        Ok(PhasePath { phases, reference })
    }

    pub fn dimension(&self) -> usize {
        self.phases.len()
    }

    pub fn phases(&self) -> &[AffinePhase] {
        &self.phases
    }

    pub fn reference(&self) -> &[Ratio<i64>] {
        &self.reference
    }

    /// Robbin–Salamon index of the path relative to its reference.
    ///
    /// Per coordinate (product axiom): a crossing is a time t ∈ [0, 1] with
    /// θ_j(t) ≡ φ_j mod π. Interior crossings contribute sign(slope),
    /// endpoint crossings half that; coordinates crossing identically
    /// contribute nothing (zero axiom).
    pub fn rs_index(&self) -> HalfInt {
        let mut index = HalfInt::ZERO;
        for (phase, &reference) in self.phases.iter().zip(&self.reference) {
            index += coordinate_index(phase, reference);
        }
        index
    }

    /// The restriction of the path to [a, b] ⊆ [0, 1], reparametrised to
    /// [0, 1]. Used by the catenation property.
    pub fn restrict(&self, a: Ratio<i64>, b: Ratio<i64>) -> PhasePath {
        let phases = self
            .phases
            .iter()
            .map(|p| AffinePhase { start: p.at(a), slope: p.slope * (b - a) })
            .collect();
        PhasePath { phases, reference: self.reference.clone() }
    }

    /// The time-reversed path t ↦ θ(1 − t).
    pub fn reversed(&self) -> PhasePath {
        let phases = self
            .phases
            .iter()
            .map(|p| AffinePhase { start: p.at(Ratio::from_integer(1)), slope: -p.slope })
            .collect();
        PhasePath { phases, reference: self.reference.clone() }
    }

    /// Whether some coordinate crosses its reference at t = 0 or t = 1
    /// without being identically crossing.
    pub fn has_endpoint_crossing(&self) -> bool {
        self.phases.iter().zip(&self.reference).any(|(phase, &reference)| {
            !phase.slope.is_zero()
                && ((phase.at(Ratio::zero()) - reference).is_integer()
                    || (phase.at(Ratio::from_integer(1)) - reference).is_integer())
        })
    }
}

fn coordinate_index(phase: &AffinePhase, reference: Ratio<i64>) -> HalfInt {
    if phase.slope.is_zero() {
        // Identically crossing or never crossing; zero either way.
        return HalfInt::ZERO;
    }
    // Crossings: start + slope·t ≡ reference (mod 1), i.e.
    // t = (reference - start + m) / slope for integers m with t ∈ [0, 1].
    let offset = reference - phase.start;
    let end_m = phase.slope - offset; // m at t = 1 (times sign bookkeeping below)
    let start_m = -offset; // m at t = 0
    let (lo, hi) = if phase.slope.is_positive() { (start_m, end_m) } else { (end_m, start_m) };
    let sign: i64 = if phase.slope.is_positive() { 1 } else { -1 };
    let mut doubled = 0i64;
    let mut m = lo.ceil().to_integer();
    while Ratio::from_integer(m) <= hi {
        let t = (offset + Ratio::from_integer(m)) / phase.slope;
        debug_assert!(t >= Ratio::zero() && t <= Ratio::from_integer(1));
        if t.is_zero() || t == Ratio::from_integer(1) {
            doubled += sign;
        } else {
            doubled += 2 * sign;
        }
        m += 1;
    }
    HalfInt::from_doubled(doubled)
}

/// The balanced path used in the grading-shift computation: k coordinates
/// frozen at the reference, half of the rest rotating by +π/2 and half by
/// −π/2. Its index vanishes; the grading shift comes entirely from the
/// dimension term of the clean-intersection formula.
pub fn balanced_path(n: usize, k: usize) -> Result<PhasePath, FloerError> {
    if n == 0 || !n.is_multiple_of(2) || !k.is_multiple_of(2) || k > n {
        return Err(FloerError::ParityViolation { n, k });
    }
    let zero = Ratio::zero();
    let half = Ratio::new(1, 2);
    let mut phases = Vec::with_capacity(n);
    for _ in 0..k {
        phases.push(AffinePhase::constant(zero));
    }
    for _ in 0..(n - k) / 2 {
        phases.push(AffinePhase::new(zero, half));
    }
    for _ in 0..(n - k) / 2 {
        phases.push(AffinePhase::new(zero, -half));
    }
    Ok(PhasePath { phases, reference: vec![zero; n] })
}

/// A table of graded Floer cohomologies between the smooth core components
/// of a weight-1 model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloerTable {
    pub component_ids: Vec<String>,
    pub entries: BTreeMap<(String, String), GradedVectorSpace>,
    /// Whether every declared weight-1 action is marked isometric (SHK);
    /// the symmetric grading is only certified in that case.
    pub shk_certified: bool,
}

impl FloerTable {
    pub fn entry(&self, a: &str, b: &str) -> Option<&GradedVectorSpace> {
        self.entries.get(&(a.to_string(), b.to_string()))
    }

    /// Renders the table as aligned text with degree-ascending Poincaré
    /// strings.
    pub fn render_text(&self) -> String {
        let names: Vec<&str> = self.component_ids.iter().map(|s| s.as_str()).collect();
        let cell = |a: &str, b: &str| {
            self.entry(a, b).map(|v| v.poincare_string()).unwrap_or_else(|| "0".into())
        };
        let mut widths: Vec<usize> = names.iter().map(|n| n.len()).collect();
        for (j, b) in names.iter().enumerate() {
            for a in &names {
                widths[j] = widths[j].max(cell(a, b).len());
            }
        }
        let head_width = names.iter().map(|n| n.len()).max().unwrap_or(0);
        let mut out = String::new();
        let _ = write!(out, "{:>head_width$}", "");
        for (j, name) in names.iter().enumerate() {
            let _ = write!(out, "  {:>width$}", name, width = widths[j]);
        }
        out.push('\n');
        for a in &names {
            let _ = write!(out, "{:>head_width$}", a);
            for (j, b) in names.iter().enumerate() {
                let _ = write!(out, "  {:>width$}", cell(a, b), width = widths[j]);
            }
            out.push('\n');
        }
        out
    }
}

/// Grading shift of an ordered pair computed along two independent routes:
/// directly as the complex codimension of the intersection, and through the
/// Robbin–Salamon index of the balanced path plus the dimension term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradingShift {
    pub d_codim: i64,
    pub d_index: HalfInt,
    pub agree: bool,
}

fn half_dimensional<'a>(
    model: &'a CoreModel,
    id: &str,
) -> Result<&'a crate::decomposition::CoreComponent, FloerError> {
    let component =
        model.component(id).ok_or_else(|| FloerError::UnknownComponent(id.to_string()))?;
    if component.complex_dim != model.half_dim() {
        return Err(FloerError::NotHalfDimensional {
            id: id.to_string(),
            complex_dim: component.complex_dim,
            half_dim: model.half_dim(),
        });
    }
    Ok(component)
}

/// HF of a smooth core component with itself: its ordinary cohomology.
pub fn hf_self(model: &CoreModel, id: &str) -> Result<GradedVectorSpace, FloerError> {
    Ok(half_dimensional(model, id)?.betti.clone())
}

/// HF of an ordered pair: zero for empty intersections, otherwise the
/// cohomology of the clean intersection shifted by its complex codimension.
pub fn hf_pair(model: &CoreModel, li: &str, lj: &str) -> Result<GradedVectorSpace, FloerError> {
    if li == lj {
        return hf_self(model, li);
    }
    let first = half_dimensional(model, li)?;
    half_dimensional(model, lj)?;
    match model.intersection(li, lj) {
        None => Ok(GradedVectorSpace::zero()),
        Some(intersection) => {
            let d = first.complex_dim as i64 - intersection.complex_dim as i64;
            Ok(intersection.betti.shift(d))
        }
    }
}

/// The full table over all ordered pairs of declared components.
pub fn floer_table(model: &CoreModel) -> Result<FloerTable, FloerError> {
    if !model.is_weight1() {
        return Err(FloerError::NotWeightOneModel(model.name.clone()));
    }
    let component_ids: Vec<String> = model.components.iter().map(|c| c.id.clone()).collect();
    let mut entries = BTreeMap::new();
    for a in &component_ids {
        for b in &component_ids {
            entries.insert((a.clone(), b.clone()), hf_pair(model, a, b)?);
        }
    }
    let shk_certified = model.weight1_actions().all(|action| action.shk);
    Ok(FloerTable { component_ids, entries, shk_certified })
}

/// Computes the grading shift of a pair along both routes and compares.
pub fn grading_shift(model: &CoreModel, li: &str, lj: &str) -> Result<GradingShift, FloerError> {
    let first = half_dimensional(model, li)?;
    half_dimensional(model, lj)?;
    if !model.complex_dim_m.is_multiple_of(2) {
        return Err(FloerError::OddAmbientDimension(model.complex_dim_m));
    }
    let intersection_dim = if li == lj {
        first.complex_dim
    } else {
        model
            .intersection(li, lj)
            .ok_or_else(|| FloerError::EmptyIntersection(li.to_string(), lj.to_string()))?
            .complex_dim
    };
    let d_codim = first.complex_dim as i64 - intersection_dim as i64;
    let dim_r_s = 2 * intersection_dim as usize;
    let path = balanced_path(model.complex_dim_m as usize, dim_r_s)?;
    let d_index =
        path.rs_index() + HalfInt::from_doubled(model.complex_dim_m as i64 - dim_r_s as i64);
    Ok(GradingShift { d_codim, d_index, agree: HalfInt::from_int(d_codim) == d_index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::AnFan;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn single(start: Ratio<i64>, slope: Ratio<i64>, reference: Ratio<i64>) -> PhasePath {
        PhasePath::new(vec![AffinePhase::new(start, slope)], vec![reference]).unwrap()
    }

    #[test]
    fn rotations_starting_at_the_reference() {
        // θ(t) = π/2 ± (π/2)t against the reference π/2: one endpoint
        // crossing at t = 0, signed by the rotation sense.
        let up = single(r(1, 2), r(1, 2), r(1, 2));
        assert_eq!(up.rs_index(), HalfInt::HALF);
        let down = single(r(1, 2), r(-1, 2), r(1, 2));
        assert_eq!(down.rs_index(), -HalfInt::HALF);
    }

    #[test]
    fn constant_paths_have_zero_index() {
        let frozen = single(r(1, 3), Ratio::zero(), r(1, 3));
        assert_eq!(frozen.rs_index(), HalfInt::ZERO);
        let away = single(r(1, 3), Ratio::zero(), r(2, 3));
        assert_eq!(away.rs_index(), HalfInt::ZERO);
    }

    #[test]
    fn interior_crossing_counts_fully() {
        // θ(t) = -π/4 + (π/2)t crosses 0 at t = 1/2.
        let path = single(r(-1, 4), r(1, 2), Ratio::zero());
        assert_eq!(path.rs_index(), HalfInt::from_int(1));
    }

    #[test]
    fn full_rotation_counts_both_endpoints_and_interior() {
        // θ(t) = 2πt against 0: crossings at t = 0, 1/2, 1.
        let path = single(Ratio::zero(), Ratio::from_integer(2), Ratio::zero());
        assert_eq!(path.rs_index(), HalfInt::from_doubled(1 + 2 + 1));
    }

    #[test]
    fn balanced_paths_have_zero_index() {
        assert_eq!(balanced_path(2, 0).unwrap().rs_index(), HalfInt::ZERO);
        assert_eq!(balanced_path(4, 2).unwrap().rs_index(), HalfInt::ZERO);
        // k = n is the constant path.
        assert_eq!(balanced_path(2, 2).unwrap().rs_index(), HalfInt::ZERO);
        assert!(matches!(balanced_path(3, 0), Err(FloerError::ParityViolation { .. })));
        assert!(matches!(balanced_path(4, 1), Err(FloerError::ParityViolation { .. })));
        assert!(matches!(balanced_path(2, 4), Err(FloerError::ParityViolation { .. })));
    }

    #[test]
    fn catenation_on_the_quarter_rotation() {
        let path = single(r(1, 2), r(1, 2), r(1, 2));
        let first = path.restrict(Ratio::zero(), r(1, 2));
        let second = path.restrict(r(1, 2), Ratio::from_integer(1));
        assert_eq!(first.rs_index() + second.rs_index(), path.rs_index());
    }

    #[test]
    fn hf_self_of_components() {
        let fan = AnFan::new(2).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        assert_eq!(hf_self(&model, "S1").unwrap(), GradedVectorSpace::from_pairs([(0, 1), (2, 1)]));
        assert!(matches!(hf_self(&model, "S9"), Err(FloerError::UnknownComponent(_))));

        // A point component is not half-dimensional.
        let mut bad = model.clone();
        bad.components[0].complex_dim = 0;
        assert!(matches!(hf_self(&bad, "S1"), Err(FloerError::NotHalfDimensional { .. })));

        // A product-of-spheres component passes through unchanged.
        let mut fourfold = model.clone();
        fourfold.complex_dim_m = 4;
        fourfold.components[0].complex_dim = 2;
        fourfold.components[0].betti = GradedVectorSpace::from_pairs([(0, 1), (2, 2), (4, 1)]);
        assert_eq!(hf_self(&fourfold, "S1").unwrap(), fourfold.components[0].betti);
    }

    #[test]
    fn hf_pair_on_the_chain() {
        let fan = AnFan::new(3).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        // Adjacent spheres meet in a point; the shift is the codimension 1.
        assert_eq!(hf_pair(&model, "S1", "S2").unwrap(), GradedVectorSpace::generator(1));
        assert_eq!(hf_pair(&model, "S1", "S3").unwrap(), GradedVectorSpace::zero());
        assert_eq!(hf_pair(&model, "S2", "S2").unwrap(), hf_self(&model, "S2").unwrap());
    }

    #[test]
    fn floer_table_on_a2() {
        let fan = AnFan::new(2).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        let table = floer_table(&model).unwrap();
        let sphere = GradedVectorSpace::from_pairs([(0, 1), (2, 1)]);
        let t = GradedVectorSpace::generator(1);
        assert_eq!(table.entry("S1", "S1").unwrap(), &sphere);
        assert_eq!(table.entry("S2", "S2").unwrap(), &sphere);
        assert_eq!(table.entry("S1", "S2").unwrap(), &t);
        assert_eq!(table.entry("S2", "S1").unwrap(), &t);
        assert!(table.shk_certified);
    }

    #[test]
    fn floer_table_requires_weight1() {
        let fan = AnFan::new(2).unwrap();
        let model = fan.to_core_model(&[]).unwrap();
        assert!(matches!(floer_table(&model), Err(FloerError::NotWeightOneModel(_))));
    }

    #[test]
    fn floer_table_is_tridiagonal_symmetric_palindromic() {
        let fan = AnFan::new(4).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        let table = floer_table(&model).unwrap();
        let center = HalfInt::from_int(model.half_dim() as i64);
        for i in 1..=4i64 {
            for j in 1..=4i64 {
                let a = format!("S{i}");
                let b = format!("S{j}");
                let entry = table.entry(&a, &b).unwrap();
                assert_eq!(entry, table.entry(&b, &a).unwrap());
                assert!(entry.is_palindromic(center));
                if (i - j).abs() == 1 {
                    assert_eq!(entry, &GradedVectorSpace::generator(1));
                } else if i != j {
                    assert!(entry.is_zero());
                }
            }
        }
    }

    #[test]
    fn grading_shift_agreement() {
        let fan = AnFan::new(3).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        let shift = grading_shift(&model, "S1", "S2").unwrap();
        assert_eq!(shift.d_codim, 1);
        assert_eq!(shift.d_index, HalfInt::from_int(1));
        assert!(shift.agree);

        let diag = grading_shift(&model, "S2", "S2").unwrap();
        assert_eq!(diag.d_codim, 0);
        assert!(diag.agree);

        assert!(matches!(
            grading_shift(&model, "S1", "S3"),
            Err(FloerError::EmptyIntersection(_, _))
        ));
    }

    #[test]
    fn grading_shift_in_complex_dimension_four() {
        // Two fourfold components meeting along a curve: d = 1 both ways.
        let fan = AnFan::new(2).unwrap();
        let mut model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        model.complex_dim_m = 4;
        for c in &mut model.components {
            c.complex_dim = 2;
        }
        model.intersections[0].complex_dim = 1;
        model.intersections[0].betti = GradedVectorSpace::from_pairs([(0, 1), (2, 1)]);
        let shift = grading_shift(&model, "S1", "S2").unwrap();
        assert_eq!(shift.d_codim, 1);
        assert_eq!(shift.d_index, HalfInt::from_int(1));
        assert!(shift.agree);
    }

    #[test]
    fn table_text_rendering() {
        let fan = AnFan::new(2).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        let text = floer_table(&model).unwrap().render_text();
        assert!(text.contains("1 + t^2"));
        assert!(text.contains('t'));
        let fan = AnFan::new(1).unwrap();
        let model = fan.to_core_model(&fan.enumerate_weight1()).unwrap();
        let text = floer_table(&model).unwrap().render_text();
        assert!(text.contains("1 + t^2"));
    }
}
