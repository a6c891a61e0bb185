//! Exact combinatorics of contracting C*-actions on semiprojective
//! holomorphic symplectic manifolds.
//!
//! The crate computes, for combinatorially presented models — chiefly the
//! toric minimal resolutions of type-A Du Val singularities and hand-written
//! core models — the inventory of weight-1 conical actions, fixed-locus and
//! attracting-set combinatorics, homology decompositions of the core, graded
//! Lagrangian Floer cohomology tables with a Robbin–Salamon index
//! cross-check, and degree-wise lower bounds on symplectic cohomology.
//!
//! Everything is exact: ranks are integers, Maslov indices are doubled
//! integers, angles are rational multiples of π. No floating point is used
//! anywhere.

pub mod cone;
pub mod decomposition;
pub mod floer;
pub mod graded;
pub mod half;
pub mod shbounds;
pub mod toric;

pub use cone::{ConePresentation, QuiverData};
pub use decomposition::{ActionFixedData, CoreComponent, CoreModel, Intersection};
pub use floer::{FloerTable, PhasePath};
pub use graded::GradedVectorSpace;
pub use half::HalfInt;
pub use shbounds::ShBoundReport;
pub use toric::{AnFan, Cocharacter, FixedComponentDatum};
