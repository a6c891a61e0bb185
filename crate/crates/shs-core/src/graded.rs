//! Exact arithmetic on graded vector spaces, tracked as degree → rank maps.
//!
//! Only ranks are stored — no coefficient field is ever materialised. Every
//! space handled here (points, spheres and products thereof) has torsion-free
//! homology, so the ranks agree over any field.

use std::collections::BTreeMap;
use std::fmt;

use crate::half::HalfInt;

/// A finite-rank graded vector space, stored as a map from integer degree to
/// positive rank. Degrees with rank zero are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct GradedVectorSpace {
    ranks: BTreeMap<i64, u64>,
}

impl GradedVectorSpace {
    /// The zero space.
    pub fn zero() -> Self {
        GradedVectorSpace { ranks: BTreeMap::new() }
    }

    /// Builds a space from (degree, rank) pairs. Ranks at repeated degrees
    /// add up; zero ranks are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (i64, u64)>>(pairs: I) -> Self {
        let mut ranks = BTreeMap::new();
        for (deg, rank) in pairs {
            if rank > 0 {
                *ranks.entry(deg).or_insert(0) += rank;
            }
        }
        GradedVectorSpace { ranks }
    }

    /// A single generator in degree `deg`.
    pub fn generator(deg: i64) -> Self {
        Self::from_pairs([(deg, 1)])
    }

    pub fn rank(&self, degree: i64) -> u64 {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> u64 {
        self.ranks.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Iterates over (degree, rank) pairs in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.ranks.iter().map(|(&d, &r)| (d, r))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.ranks.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.ranks.keys().next_back().copied()
    }

    /// Shifts all degrees up by `d` (cohomological convention: a generator in
    /// degree 0 moves to degree `d`), so `rank(k)` of the result equals
    /// `rank(k - d)` of the input.
    pub fn shift(&self, d: i64) -> Self {
        GradedVectorSpace { ranks: self.ranks.iter().map(|(&deg, &r)| (deg + d, r)).collect() }
    }

    /// Degree-wise sum of a family of spaces. The empty family sums to zero.
    pub fn direct_sum<'a, I: IntoIterator<Item = &'a GradedVectorSpace>>(spaces: I) -> Self {
        let mut ranks: BTreeMap<i64, u64> = BTreeMap::new();
        for space in spaces {
            for (&deg, &r) in &space.ranks {
                *ranks.entry(deg).or_insert(0) += r;
            }
        }
        GradedVectorSpace { ranks }
    }

    /// Adds `other` degree-wise into `self`.
    pub fn add_assign(&mut self, other: &GradedVectorSpace) {
        for (&deg, &r) in &other.ranks {
            *self.ranks.entry(deg).or_insert(0) += r;
        }
    }

    /// Degree-wise maximum, the combination rule for lower bounds coming from
    /// several independent sources.
    pub fn pointwise_max(&self, other: &GradedVectorSpace) -> Self {
        let mut ranks = self.ranks.clone();
        for (&deg, &r) in &other.ranks {
            let entry = ranks.entry(deg).or_insert(0);
            *entry = (*entry).max(r);
        }
        GradedVectorSpace { ranks }
    }

    /// Degree-wise `self ≤ other`.
    pub fn le(&self, other: &GradedVectorSpace) -> bool {
        self.ranks.iter().all(|(&deg, &r)| r <= other.rank(deg))
    }

    /// Alternating sum Σ (−1)^k rank(k).
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&deg, &r)| if deg.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Whether rank(k) = rank(2·center − k) for all k.
    pub fn is_palindromic(&self, center: HalfInt) -> bool {
        // 2·center is an integer for any half-integer center.
        let two_center = center.doubled();
        self.ranks.iter().all(|(&deg, &r)| self.rank(two_center - deg) == r)
    }

    /// Renders the Poincaré polynomial, degree-ascending, e.g. `1 + 4*t^2`.
    pub fn poincare_string(&self) -> String {
        if self.ranks.is_empty() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .ranks
            .iter()
            .map(|(&deg, &r)| match (deg, r) {
                (0, r) => format!("{r}"),
                (1, 1) => "t".to_string(),
                (1, r) => format!("{r}*t"),
                (d, 1) => format!("t^{d}"),
                (d, r) => format!("{r}*t^{d}"),
            })
            .collect();
        terms.join(" + ")
    }
}

impl fmt::Display for GradedVectorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poincare_string())
    }
}

impl FromIterator<(i64, u64)> for GradedVectorSpace {
    fn from_iter<I: IntoIterator<Item = (i64, u64)>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}
