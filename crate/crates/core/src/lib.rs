//! Exact combinatorics of affine Weyl groups and affine Grassmannian
//! Schubert classes for every simple Lie type.
//!
//! Node labels follow Bourbaki: finite nodes are `1..=rank`, the affine node
//! is `0`. Roots are written in the simple-root basis, coroots in the
//! simple-coroot basis, weights in the fundamental-weight basis.

pub mod affine;
pub mod cache;
pub mod cartan;
pub mod classify;
pub mod cohomology;
pub mod error;
pub mod graded;
pub mod schubert;
pub mod verify;
pub mod weyl;

pub use affine::{AffineElem, AffineGroup, Bounds, MinRepLevels};
pub use cartan::{parse_type, CorootVec, Family, LieType, RootDatum, RootVec, WeightVec};
pub use cohomology::{ChainCoeffs, CohomClass, PDStatus};
pub use error::{Error, Result};
pub use graded::GradedPoly;
pub use schubert::{SchubertClass, StarResult};
pub use weyl::{ParabolicQuotient, WeylElem, WeylGroup};
