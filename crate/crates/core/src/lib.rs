//! Exact enumeration and analysis of length-equidistributed statistics on
//! Coxeter groups and graded posets.
//!
//! The crate provides:
//!
//! - window-notation elements of the classical groups (types A, B, D) with
//!   length, descents and parabolic coset factorization ([`groups`]);
//! - the named major-index statistics and a parabolic induction operator
//!   that builds new statistics equidistributed with the length
//!   ([`statistics`]);
//! - finite graded posets, good decompositions and the rank-subtraction
//!   operator behind the induction ([`posets`]);
//! - exact distributions, image/deficiency analysis, symmetric-pair tests,
//!   involution synthesis and descent-class partitions ([`analysis`]);
//! - a generic finite Coxeter engine over the golden-ratio integers for the
//!   exceptional and dihedral types ([`bigcox`]);
//! - splittable, deterministic enumeration with data-parallel folds
//!   ([`enumerate`]).
//!
//! All arithmetic is exact; sweeps produce bit-identical results at any
//! worker count.

pub mod analysis;
pub mod bigcox;
pub mod enumerate;
mod error;
pub mod groups;
pub mod posets;
pub mod statistics;

pub use error::{Error, Result};
