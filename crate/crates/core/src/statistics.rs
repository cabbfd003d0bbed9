//! The named integer statistics and the parabolic induction operator.
//!
//! A [`Statistic`] is a named total function on a classical group, safe to
//! evaluate concurrently. The registry names are `len`, `inv`, `maj`,
//! `majstar`, `nmaj`, `nmajstar`, `fmaj`, `dmaj`, `Dmaj` and
//! `induced:<base>:<J>:<side>`.

use std::fmt;
use std::sync::Arc;

use crate::analysis;
use crate::enumerate::GroupUniverse;
use crate::error::{Error, Result};
use crate::groups::{
    parabolic_decompose, parabolic_model, Family, GenSet, GroupDescriptor, SignedPermutation,
};

fn seq_maj(window: &[i32]) -> u64 {
    (1..window.len())
        .filter(|&i| window[i - 1] > window[i])
        .map(|i| i as u64)
        .sum()
}

/// Major index: the sum of the descent positions of the window, comparing
/// signed values directly.
pub fn maj(w: &SignedPermutation) -> u64 {
    seq_maj(w.window())
}

/// Negative major index `maj(w) - sum(negative entries)` (type B).
pub fn neg_major_index(w: &SignedPermutation) -> u64 {
    (maj(w) as i64 - w.neg_sum()) as u64
}

/// Flag major index `2 maj(w) + #neg(w)` (type B).
pub fn flag_major_index(w: &SignedPermutation) -> u64 {
    2 * maj(w) + w.neg_count()
}

/// D-negative major index `maj(w) - sum(negative entries) - #neg(w)`
/// (type D).
pub fn d_negative_major_index(w: &SignedPermutation) -> u64 {
    (maj(w) as i64 - w.neg_sum() - w.neg_count() as i64) as u64
}

/// D-major index: the flag major index of the window with the last entry
/// replaced by its absolute value (type D).
pub fn d_major_index(w: &SignedPermutation) -> u64 {
    let mut window = w.window().to_vec();
    let last = window.len() - 1;
    window[last] = window[last].abs();
    let negs = window.iter().filter(|&&v| v < 0).count() as u64;
    2 * seq_maj(&window) + negs
}

/// Which side the quotient is taken on when inducing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Right => write!(f, "right"),
            Side::Left => write!(f, "left"),
        }
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            other => Err(Error::Parse(format!("unknown side `{other}`"))),
        }
    }
}

type Evaluator = Arc<dyn Fn(&SignedPermutation) -> i64 + Send + Sync>;

/// A named integer-valued function on the elements of one group.
#[derive(Clone)]
pub struct Statistic {
    name: String,
    descriptor: GroupDescriptor,
    eval: Evaluator,
}

impl fmt::Debug for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Statistic")
            .field("name", &self.name)
            .field("descriptor", &self.descriptor)
            .finish()
    }
}

impl Statistic {
    fn make(
        name: impl Into<String>,
        descriptor: GroupDescriptor,
        eval: impl Fn(&SignedPermutation) -> i64 + Send + Sync + 'static,
    ) -> Self {
        Statistic {
            name: name.into(),
            descriptor,
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn eval(&self, w: &SignedPermutation) -> i64 {
        debug_assert_eq!(w.descriptor(), self.descriptor);
        (self.eval)(w)
    }

    pub fn length(descriptor: GroupDescriptor) -> Self {
        Statistic::make("len", descriptor, |w| w.length() as i64)
    }

    pub fn inv(descriptor: GroupDescriptor) -> Self {
        Statistic::make("inv", descriptor, |w| w.inv_count() as i64)
    }

    pub fn maj(descriptor: GroupDescriptor) -> Self {
        Statistic::make("maj", descriptor, |w| maj(w) as i64)
    }

    pub fn nmaj(descriptor: GroupDescriptor) -> Result<Self> {
        require_family(descriptor, Family::B, "nmaj")?;
        Ok(Statistic::make("nmaj", descriptor, |w| {
            neg_major_index(w) as i64
        }))
    }

    pub fn fmaj(descriptor: GroupDescriptor) -> Result<Self> {
        require_family(descriptor, Family::B, "fmaj")?;
        Ok(Statistic::make("fmaj", descriptor, |w| {
            flag_major_index(w) as i64
        }))
    }

    pub fn dmaj(descriptor: GroupDescriptor) -> Result<Self> {
        require_family(descriptor, Family::D, "dmaj")?;
        Ok(Statistic::make("dmaj", descriptor, |w| {
            d_negative_major_index(w) as i64
        }))
    }

    /// The `Dmaj` registry statistic.
    pub fn upper_dmaj(descriptor: GroupDescriptor) -> Result<Self> {
        require_family(descriptor, Family::D, "Dmaj")?;
        Ok(Statistic::make("Dmaj", descriptor, |w| {
            d_major_index(w) as i64
        }))
    }

    /// The starred statistic `f*(w) = f(w^{-1})`; an involution on
    /// statistics (the name toggles a `star` suffix).
    pub fn star(&self) -> Statistic {
        let name = match self.name.strip_suffix("star") {
            Some(base) => base.to_string(),
            None => format!("{}star", self.name),
        };
        let inner = self.eval.clone();
        Statistic::make(name, self.descriptor, move |w| inner(&w.inverse()))
    }

    /// Looks a statistic up by registry name.
    pub fn resolve(descriptor: GroupDescriptor, name: &str) -> Result<Self> {
        if let Some(rest) = name.strip_prefix("induced:") {
            let (rest, side_text) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::UnknownStatistic(name.to_string()))?;
            let (base_name, j_text) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::UnknownStatistic(name.to_string()))?;
            let side: Side = side_text.parse()?;
            let subset = GenSet::parse(j_text)?;
            let model = parabolic_model(descriptor, subset).ok_or_else(|| {
                Error::Unsupported(format!(
                    "subset {subset} of {descriptor} has no prefix model group"
                ))
            })?;
            let base = Statistic::resolve(model, base_name)?;
            let induced = InducedStatistic::new(descriptor, base, subset, side)?;
            return Ok(induced.into_statistic());
        }
        match name {
            "len" => Ok(Statistic::length(descriptor)),
            "inv" => Ok(Statistic::inv(descriptor)),
            "maj" => Ok(Statistic::maj(descriptor)),
            "majstar" => Ok(Statistic::maj(descriptor).star()),
            "nmaj" => Statistic::nmaj(descriptor),
            "nmajstar" => Ok(Statistic::nmaj(descriptor)?.star()),
            "fmaj" => Statistic::fmaj(descriptor),
            "dmaj" => Statistic::dmaj(descriptor),
            "Dmaj" => Statistic::upper_dmaj(descriptor),
            other => Err(Error::UnknownStatistic(other.to_string())),
        }
    }
}

fn require_family(descriptor: GroupDescriptor, family: Family, stat: &str) -> Result<()> {
    if descriptor.family() == family {
        Ok(())
    } else {
        Err(Error::WrongFamily {
            stat: stat.to_string(),
            descriptor,
        })
    }
}

/// Full enumeration budget for validating that a base statistic lies in the
/// length class of its model group.
const VALIDATION_CAP: u64 = 1 << 24;

/// Checks `g` against the class of the length on its own group: same
/// distribution and agreement at the identity and the longest element.
pub fn in_length_class(g: &Statistic) -> Result<bool> {
    let descriptor = g.descriptor();
    let universe = GroupUniverse::with_cap(descriptor, VALIDATION_CAP)?;
    let joint = analysis::joint_distribution(&universe, |w| g.eval(w), |w| w.length() as i64);
    if joint.marginal_q() != joint.marginal_t() {
        return Ok(false);
    }
    let e = SignedPermutation::identity(descriptor);
    let w0 = SignedPermutation::longest(descriptor);
    Ok(g.eval(&e) == 0 && g.eval(&w0) == descriptor.longest_length() as i64)
}

/// A statistic obtained by inducing a base statistic from a prefix
/// parabolic subgroup: on the right, `f(w) = len(w^J) + g(w_J)`; the left
/// version is the right induction of `g*` followed by star.
#[derive(Debug)]
pub struct InducedStatistic {
    base: Statistic,
    subset: GenSet,
    side: Side,
    statistic: Statistic,
}

impl InducedStatistic {
    /// Builds the induced statistic, first validating that the base lies in
    /// the length class of its model group by full enumeration.
    pub fn new(
        parent: GroupDescriptor,
        base: Statistic,
        subset: GenSet,
        side: Side,
    ) -> Result<Self> {
        if !in_length_class(&base)? {
            return Err(Error::NotInClass(format!(
                "`{}` is not in the length class of {}",
                base.name(),
                base.descriptor()
            )));
        }
        Self::new_unvalidated(parent, base, subset, side)
    }

    /// Skips the class validation; the result is only guaranteed to be
    /// length-equidistributed when the base really lies in the class.
    pub fn new_unvalidated(
        parent: GroupDescriptor,
        base: Statistic,
        subset: GenSet,
        side: Side,
    ) -> Result<Self> {
        subset.validate_for(parent)?;
        let model = parabolic_model(parent, subset).ok_or_else(|| {
            Error::Unsupported(format!(
                "subset {subset} of {parent} has no prefix model group"
            ))
        })?;
        if base.descriptor() != model {
            return Err(Error::DescriptorMismatch(base.descriptor(), model));
        }
        let name = format!("induced:{}:{}:{}", base.name(), subset, side);
        let right_base = match side {
            Side::Right => base.clone(),
            Side::Left => base.star(),
        };
        let right_eval = move |w: &SignedPermutation| {
            let f = parabolic_decompose(w, subset).expect("subset validated at construction");
            let restricted = f
                .parabolic_restricted()
                .expect("prefix model checked at construction");
            f.quotient().length() as i64 + right_base.eval(&restricted)
        };
        let statistic = match side {
            Side::Right => Statistic::make(name, parent, right_eval),
            Side::Left => Statistic::make(name, parent, move |w| right_eval(&w.inverse())),
        };
        Ok(InducedStatistic {
            base,
            subset,
            side,
            statistic,
        })
    }

    pub fn base(&self) -> &Statistic {
        &self.base
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn statistic(&self) -> &Statistic {
        &self.statistic
    }

    pub fn into_statistic(self) -> Statistic {
        self.statistic
    }
}
