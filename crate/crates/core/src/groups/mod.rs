//! Signed-permutation models of the classical Coxeter groups.
//!
//! Elements of types A, B and D are stored in window notation: the sequence
//! `(w(1),...,w(n))` of values on `[n]`, with `w(-a) = -w(a)` implicit. Type A
//! windows are plain permutations of `[n]`; type B windows carry arbitrary
//! signs; type D windows carry an even number of negative entries.
//!
//! All operations here are pure functions on immutable values.

mod coset;
mod descriptor;
mod element;
mod oracle;

pub use coset::{embed_from_model, parabolic_decompose, parabolic_model, CosetFactorization};
pub use descriptor::{Family, GenSet, GroupDescriptor};
pub use element::SignedPermutation;
pub use oracle::{reflection_length_oracle, BruteForceTable};
