use std::collections::BTreeSet;

use crate::analysis::SetAcc;
use crate::enumerate::{parallel_fold, Splittable};

/// Images of `f`, `g`, `f+g` and `f-g` over a common universe, gathered in
/// one sweep. The two-variable sumset and difference-set needed by the
/// deficiency counts come pointwise from `image_f` and `image_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageAnalysis {
    pub image_f: BTreeSet<i64>,
    pub image_g: BTreeSet<i64>,
    pub image_sum: BTreeSet<i64>,
    pub image_diff: BTreeSet<i64>,
}

impl ImageAnalysis {
    /// `|{f(x)+g(y)}| - |Im(f+g)| - 1`.
    pub fn k_plus(&self) -> i64 {
        self.two_variable_sumset().len() as i64 - self.image_sum.len() as i64 - 1
    }

    /// `|{f(x)-g(y)}| - |Im(f-g)| - 1`.
    pub fn k_minus(&self) -> i64 {
        self.two_variable_diffset().len() as i64 - self.image_diff.len() as i64 - 1
    }

    pub fn two_variable_sumset(&self) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for &a in &self.image_f {
            for &b in &self.image_g {
                out.insert(a + b);
            }
        }
        out
    }

    pub fn two_variable_diffset(&self) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for &a in &self.image_f {
            for &b in &self.image_g {
                out.insert(a - b);
            }
        }
        out
    }
}

pub fn image_analysis<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
    g: impl Fn(&S::Elem) -> i64 + Sync,
) -> ImageAnalysis {
    let (SetAcc(image_f), SetAcc(image_g), SetAcc(image_sum), SetAcc(image_diff)) =
        parallel_fold(source, |acc: &mut (SetAcc, SetAcc, SetAcc, SetAcc), x| {
            let (fx, gx) = (f(x), g(x));
            acc.0 .0.insert(fx);
            acc.1 .0.insert(gx);
            acc.2 .0.insert(fx + gx);
            acc.3 .0.insert(fx - gx);
        });
    ImageAnalysis {
        image_f,
        image_g,
        image_sum,
        image_diff,
    }
}

/// The exact set `{f(x)+g(x)}`.
pub fn sum_image<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
    g: impl Fn(&S::Elem) -> i64 + Sync,
) -> BTreeSet<i64> {
    let SetAcc(set) = parallel_fold(source, |acc: &mut SetAcc, x| {
        acc.0.insert(f(x) + g(x));
    });
    set
}

/// The exact set `{f(x)-g(x)}`.
pub fn diff_image<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
    g: impl Fn(&S::Elem) -> i64 + Sync,
) -> BTreeSet<i64> {
    let SetAcc(set) = parallel_fold(source, |acc: &mut SetAcc, x| {
        acc.0.insert(f(x) - g(x));
    });
    set
}
