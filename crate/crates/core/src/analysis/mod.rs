//! Exact distribution and image analysis for pairs of integer statistics.
//!
//! Every operation here is a pure fold over an element stream; accumulators
//! are commutative-monoid merges (map-sum, set-union, rational-sum), so the
//! parallel sweeps produce bit-identical results at any worker count.

mod descent;
mod images;
mod involution;
pub mod poly;
mod witness;

pub use descent::{
    descent_class_partition, descent_classes_equidistributed, DescentClass, DescentClassMode,
};
pub use images::{diff_image, image_analysis, sum_image, ImageAnalysis};
pub use involution::{
    build_involution, build_involution_from_values, lift_involution_classical, InvolutionMap,
};
pub use poly::{parse_rational, rational_string, BivariatePoly, LaurentPoly};
pub use witness::{witness_families, WitnessFamilies, WitnessReport};

use std::collections::BTreeMap;

use num::BigRational;
use num::Zero;

use crate::enumerate::{parallel_fold, Monoid, Splittable};

pub(crate) struct CountsAcc(pub BTreeMap<i64, u64>);

impl Monoid for CountsAcc {
    fn empty() -> Self {
        CountsAcc(BTreeMap::new())
    }
    fn merge(&mut self, other: Self) {
        for (e, c) in other.0 {
            *self.0.entry(e).or_insert(0) += c;
        }
    }
}

pub(crate) struct PairCountsAcc(pub BTreeMap<(i64, i64), u64>);

impl Monoid for PairCountsAcc {
    fn empty() -> Self {
        PairCountsAcc(BTreeMap::new())
    }
    fn merge(&mut self, other: Self) {
        for (e, c) in other.0 {
            *self.0.entry(e).or_insert(0) += c;
        }
    }
}

pub(crate) struct SetAcc(pub std::collections::BTreeSet<i64>);

impl Monoid for SetAcc {
    fn empty() -> Self {
        SetAcc(std::collections::BTreeSet::new())
    }
    fn merge(&mut self, other: Self) {
        self.0.extend(other.0);
    }
}

pub(crate) struct RationalAcc(pub BigRational);

impl Monoid for RationalAcc {
    fn empty() -> Self {
        RationalAcc(BigRational::zero())
    }
    fn merge(&mut self, other: Self) {
        self.0 += other.0;
    }
}

/// The generating polynomial `sum_x q^{f(x)}` over the whole source.
pub fn distribution<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
) -> LaurentPoly {
    let counts: CountsAcc = parallel_fold(source, |acc: &mut CountsAcc, x| {
        *acc.0.entry(f(x)).or_insert(0) += 1;
    });
    LaurentPoly::from_counts(counts.0)
}

/// The joint generating polynomial `sum_x q^{f(x)} t^{g(x)}`.
pub fn joint_distribution<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
    g: impl Fn(&S::Elem) -> i64 + Sync,
) -> BivariatePoly {
    let counts: PairCountsAcc = parallel_fold(source, |acc: &mut PairCountsAcc, x| {
        *acc.0.entry((f(x), g(x))).or_insert(0) += 1;
    });
    BivariatePoly::from_counts(counts.0)
}

/// Whether the joint distribution of `(f, g)` equals its transpose.
pub fn is_symmetric_pair<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
    g: impl Fn(&S::Elem) -> i64 + Sync,
) -> bool {
    joint_distribution(source, f, g).is_swap_symmetric()
}

/// Whether `f` and `g` have the same distribution.
pub fn equidistributed<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
    g: impl Fn(&S::Elem) -> i64 + Sync,
) -> bool {
    let joint = joint_distribution(source, f, g);
    joint.marginal_q() == joint.marginal_t()
}

/// Both exact ratio sums of a statistic pair and their equality:
/// `sum_{g(x) != 0} f(x)/g(x)` and `sum_{f(x) != 0} g(x)/f(x)`, skipping
/// exactly the zero-denominator terms. Equality is necessary for the
/// existence of an involution `iota` with `f = g o iota`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioCheck {
    /// `sum f/g` over `g != 0`.
    pub forward: BigRational,
    /// `sum g/f` over `f != 0`.
    pub backward: BigRational,
    pub equal: bool,
}

pub fn ratio_sum_check<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
    g: impl Fn(&S::Elem) -> i64 + Sync,
) -> RatioCheck {
    let (RationalAcc(forward), RationalAcc(backward)) =
        parallel_fold(source, |acc: &mut (RationalAcc, RationalAcc), x| {
            let (fx, gx) = (f(x), g(x));
            if gx != 0 {
                acc.0 .0 += BigRational::new(fx.into(), gx.into());
            }
            if fx != 0 {
                acc.1 .0 += BigRational::new(gx.into(), fx.into());
            }
        });
    let equal = forward == backward;
    RatioCheck {
        forward,
        backward,
        equal,
    }
}
