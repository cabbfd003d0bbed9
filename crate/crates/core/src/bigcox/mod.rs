//! Generic finite Coxeter engine for the exceptional and dihedral types.
//!
//! Groups are realized through the reflection representation on the root
//! space, with matrices over the golden-ratio integers so that every
//! supported bond order (2 through 6, covering the E, F, H and small
//! dihedral presets) stays exact. Enumeration is a breadth-first closure
//! whose depth is the Coxeter length; all post-enumeration sweeps are
//! parallel folds over the index range.

mod element;
mod embedding;
mod group;
mod matrix;
mod scalar;

pub use element::GenericElement;
pub use embedding::{ParabolicModel, SubgroupEmbedding};
pub use group::{enumerate_group, EnumeratedGroup, GenericStatistic, DEFAULT_ENUM_CAP};
pub use matrix::CoxeterMatrix;
pub use scalar::ExactScalar;
