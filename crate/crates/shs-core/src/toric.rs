//! Exact toric engine for the minimal resolution of the type-A_n Du Val
//! surface singularity.
//!
//! The fan convention is pinned: rays v_i = (i, 1) for i = 0..n+1, maximal
//! cones σ_i = cone(v_i, v_{i+1}). The Calabi–Yau covector is then (0, 1),
//! so a cocharacter (p, q) scales the holomorphic symplectic form by t^q.
//! The exceptional spheres S_1..S_n are the divisors of the interior rays.

use thiserror::Error;

use crate::decomposition::{ActionFixedData, CoreComponent, CoreModel, Intersection};
use crate::graded::GradedVectorSpace;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToricError {
    #[error("A_n type requires n >= 1 (A_0 = C^2 carries no weight-1 conical action with compact fixed locus), got n = {0}")]
    BadType(u32),
    #[error("chart index {index} out of range 0..={max}")]
    ChartOutOfRange { index: usize, max: usize },
    #[error("cocharacter {0} is not conical on this fan")]
    NonConical(Cocharacter),
    #[error("cocharacter {0} does not have symplectic weight 1")]
    NotWeightOne(Cocharacter),
}

/// A cocharacter (p, q) of the 2-torus, i.e. a one-parameter subgroup acting
/// on the resolution. The character weights of the invariant coordinates
/// X, Y, Z are its pairings with (1,0), (-1,n+1), (0,1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cocharacter {
    pub p: i64,
    pub q: i64,
}

impl Cocharacter {
    pub fn new(p: i64, q: i64) -> Self {
        Cocharacter { p, q }
    }

    /// The weight by which this action scales the holomorphic symplectic
    /// form: the pairing with the height covector (0, 1).
    pub fn symplectic_weight(self) -> i64 {
        self.q
    }

    /// Componentwise sum, the composition of the two commuting actions.
    pub fn compose(self, other: Cocharacter) -> Cocharacter {
        Cocharacter::new(self.p + other.p, self.q + other.q)
    }

    /// An even action is the square of another lattice action.
    pub fn is_even(self) -> bool {
        self.p % 2 == 0 && self.q % 2 == 0
    }

    pub fn id(self) -> String {
        format!("({},{})", self.p, self.q)
    }
}

impl std::fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Weights of the linearised action on one maximal chart, i.e. the pairings
/// of the dual basis of (v_i, v_{i+1}) with the cocharacter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChartWeights {
    pub chart: usize,
    pub a: i64,
    pub b: i64,
}

/// Whether a fixed component is a chart origin or a pointwise-fixed
/// exceptional sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedComponentKind {
    IsolatedPoint,
    FixedSphere,
}

/// One connected component of the fixed locus of a conical action, with the
/// data feeding the homology decomposition: Betti ranks, tangent weights,
/// the shift mu (real dimension of the t→∞ attracting fibre) and the core
/// component owning its attracting set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedComponentDatum {
    pub id: String,
    pub kind: FixedComponentKind,
    pub betti: GradedVectorSpace,
    pub complex_dim: u32,
    pub tangent_weights: Vec<i64>,
    pub mu: u32,
    pub owner: String,
}

impl FixedComponentDatum {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti.euler_characteristic()
    }
}

/// The minimum of the moment map of a conical action: either an exceptional
/// sphere (a Lagrangian core component) or an isolated fixed point, which is
/// not half-dimensional and hence not a core component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalComponent {
    pub id: String,
    pub lagrangian: bool,
}

/// A lattice ray of the fan.
pub type Ray = (i64, i64);

/// The fan of the minimal resolution of the A_n singularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnFan {
    n: u32,
}

impl AnFan {
    /// Builds the fan with rays v_i = (i, 1), i = 0..n+1.
    pub fn new(n: u32) -> Result<Self, ToricError> {
        if n == 0 {
            return Err(ToricError::BadType(0));
        }
        Ok(AnFan { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The rays (i, 1) in order, boundary rays included.
    pub fn rays(&self) -> Vec<Ray> {
        (0..=self.n as i64 + 1).map(|i| (i, 1)).collect()
    }

    /// Number of maximal cones σ_0..σ_n.
    pub fn chart_count(&self) -> usize {
        self.n as usize + 1
    }

    /// The ray pair spanning chart σ_i.
    pub fn chart_rays(&self, i: usize) -> Result<(Ray, Ray), ToricError> {
        if i > self.n as usize {
            return Err(ToricError::ChartOutOfRange { index: i, max: self.n as usize });
        }
        let i = i as i64;
        Ok(((i, 1), (i + 1, 1)))
    }

    /// Determinant of the ray matrix [v_i | v_{i+1}]; ±1 on every chart of a
    /// smooth resolution.
    pub fn chart_determinant(&self, i: usize) -> Result<i64, ToricError> {
        let ((a, b), (c, d)) = self.chart_rays(i)?;
        Ok(a * d - b * c)
    }

    /// |det [v_0 | v_{n+1}]| of the unresolved cone: the order of the cyclic
    /// quotient group.
    pub fn singular_cone_determinant(&self) -> i64 {
        self.n as i64 + 1
    }

    /// Pairings of the cocharacter with the Hilbert-basis characters of the
    /// singular cone, i.e. the weights of X, Y, Z. These always satisfy
    /// wX + wY = (n+1)·wZ.
    pub fn character_weights(&self, action: Cocharacter) -> (i64, i64, i64) {
        let Cocharacter { p, q } = action;
        (p, -p + (self.n as i64 + 1) * q, q)
    }

    /// A conical action must contract everything to the fixed locus as
    /// t → 0, which happens exactly when the cocharacter lies in the strict
    /// interior of the singular cone: all three character weights positive.
    /// Multiples of the boundary rays v_0, v_{n+1} fix a noncompact curve
    /// and are classified non-conical.
    pub fn is_conical(&self, action: Cocharacter) -> bool {
        let (wx, wy, wz) = self.character_weights(action);
        wx > 0 && wy > 0 && wz > 0
    }

    /// The linearised weights on chart σ_i: the dual basis to (v_i, v_{i+1})
    /// is m1 = (-1, i+1), m2 = (1, -i), so a = -p + (i+1)q, b = p - iq.
    pub fn chart_weights(&self, i: usize, action: Cocharacter) -> Result<ChartWeights, ToricError> {
        if i > self.n as usize {
            return Err(ToricError::ChartOutOfRange { index: i, max: self.n as usize });
        }
        let Cocharacter { p, q } = action;
        let i_ = i as i64;
        Ok(ChartWeights { chart: i, a: -p + (i_ + 1) * q, b: p - i_ * q })
    }

    /// If the cocharacter is a positive multiple of an interior ray v_k,
    /// returns k. These are exactly the actions fixing the sphere S_k
    /// pointwise.
    pub fn interior_ray_multiple(&self, action: Cocharacter) -> Option<u32> {
        let Cocharacter { p, q } = action;
        if q <= 0 || p % q != 0 {
            return None;
        }
        let k = p / q;
        if (1..=self.n as i64).contains(&k) {
            Some(k as u32)
        } else {
            None
        }
    }

    /// The fixed locus of a conical action, one datum per connected
    /// component, in chart order.
    ///
    /// Owners of isolated points follow the attracting-set geometry: the
    /// negative-weight coordinate axis of the chart is the attracting curve
    /// and its closure is the owning sphere. The unique component with no
    /// negative weight is the moment-map minimum.
    pub fn fixed_locus(&self, action: Cocharacter) -> Result<Vec<FixedComponentDatum>, ToricError> {
        if !self.is_conical(action) {
            return Err(ToricError::NonConical(action));
        }
        let n = self.n as usize;
        let q = action.q;
        let mut components = Vec::new();

        if let Some(k) = self.interior_ray_multiple(action) {
            let k = k as usize;
            // S_k is fixed pointwise; its normal bundle has constant weight q.
            for i in 0..=n {
                if i == k - 1 {
                    components.push(FixedComponentDatum {
                        id: format!("S{k}"),
                        kind: FixedComponentKind::FixedSphere,
                        betti: GradedVectorSpace::from_pairs([(0, 1), (2, 1)]),
                        complex_dim: 1,
                        tangent_weights: vec![0, q],
                        mu: 0,
                        owner: format!("S{k}"),
                    });
                    continue;
                }
                if i == k {
                    continue; // covered by the sphere
                }
                let w = self.chart_weights(i, action)?;
                debug_assert!(w.a != 0 && w.b != 0);
                let owner = if (i as i64) <= k as i64 - 2 {
                    format!("S{}", i + 1)
                } else {
                    format!("S{i}")
                };
                components.push(isolated_point(i, w, owner));
            }
        } else {
            // Every chart origin is an isolated fixed point.
            for i in 0..=n {
                let w = self.chart_weights(i, action)?;
                debug_assert!(w.a != 0 && w.b != 0);
                let owner = if w.a < 0 {
                    format!("S{}", i + 1)
                } else if w.b < 0 {
                    format!("S{i}")
                } else {
                    // Moment-map minimum sitting on S_i ∩ S_{i+1}; report the
                    // sphere it lies on, lower index first (S_1 for i = 0).
                    format!("S{}", i.max(1))
                };
                components.push(isolated_point(i, w, owner));
            }
        }
        Ok(components)
    }

    /// All weight-1 conical cocharacters: (k, 1) for k = 1..n, in increasing
    /// k order.
    pub fn enumerate_weight1(&self) -> Vec<Cocharacter> {
        let height = self.n as i64 + 1;
        (1..height).map(|k| Cocharacter::new(k, 1)).collect()
    }

    /// The unique fixed component with mu = 0. For weight-1 actions this is
    /// an exceptional sphere, hence a Lagrangian core component; otherwise
    /// it can be an intersection point, which is flagged as non-Lagrangian.
    pub fn minimal_component(&self, action: Cocharacter) -> Result<MinimalComponent, ToricError> {
        let fixed = self.fixed_locus(action)?;
        let minimum = fixed
            .into_iter()
            .find(|c| c.mu == 0)
            .expect("every conical action has exactly one mu = 0 component");
        Ok(MinimalComponent {
            lagrangian: minimum.kind == FixedComponentKind::FixedSphere,
            id: minimum.id,
        })
    }

    /// Whether the minimal spheres of two weight-1 conical actions are
    /// distinct and non-adjacent in the Dynkin chain.
    pub fn disjoint_minima(&self, a1: Cocharacter, a2: Cocharacter) -> Result<bool, ToricError> {
        for a in [a1, a2] {
            if !self.is_conical(a) {
                return Err(ToricError::NonConical(a));
            }
            if a.symplectic_weight() != 1 {
                return Err(ToricError::NotWeightOne(a));
            }
        }
        // Weight-1 conical actions are (k, 1), so the minima are S_{k1}, S_{k2}.
        let (k1, k2) = (a1.p, a2.p);
        Ok((k1 - k2).abs() >= 2)
    }

    /// Exports the core as a model: spheres S_1..S_n with adjacent point
    /// intersections, plus per-action fixed data.
    pub fn to_core_model(&self, actions: &[Cocharacter]) -> Result<CoreModel, ToricError> {
        let n = self.n as usize;
        let sphere = GradedVectorSpace::from_pairs([(0, 1), (2, 1)]);
        let point = GradedVectorSpace::from_pairs([(0, 1)]);

        let components = (1..=n)
            .map(|k| CoreComponent { id: format!("S{k}"), complex_dim: 1, betti: sphere.clone() })
            .collect();
        let intersections = (1..n)
            .map(|k| Intersection {
                pair: (format!("S{k}"), format!("S{}", k + 1)),
                betti: point.clone(),
                complex_dim: 0,
            })
            .collect();
        let mut action_data = Vec::new();
        for &action in actions {
            action_data.push(ActionFixedData {
                id: action.id(),
                weight1: action.symplectic_weight() == 1,
                shk: true,
                fixed_components: self.fixed_locus(action)?,
            });
        }
        Ok(CoreModel {
            name: format!("A{n}"),
            complex_dim_m: 2,
            components,
            intersections,
            actions: action_data,
            core_betti_override: None,
            subcritical: false,
        })
    }
}

fn isolated_point(chart: usize, w: ChartWeights, owner: String) -> FixedComponentDatum {
    let mut tangent_weights = vec![w.a, w.b];
    tangent_weights.sort_unstable();
    let negatives = tangent_weights.iter().filter(|&&x| x < 0).count() as u32;
    FixedComponentDatum {
        id: format!("P{chart}"),
        kind: FixedComponentKind::IsolatedPoint,
        betti: GradedVectorSpace::generator(0),
        complex_dim: 0,
        tangent_weights,
        mu: 2 * negatives,
        owner,
    }
}
