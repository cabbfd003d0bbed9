use crate::error::{Error, Result};
use crate::groups::{Family, GenSet, GroupDescriptor, SignedPermutation};

/// The unique factorization `w = w^J w_J` with additive length, where `w^J`
/// has no right descent in `J` and `w_J` lies in the subgroup generated by `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetFactorization {
    quotient: SignedPermutation,
    parabolic: SignedPermutation,
    subset: GenSet,
}

impl CosetFactorization {
    /// The minimal coset representative `w^J`.
    pub fn quotient(&self) -> &SignedPermutation {
        &self.quotient
    }

    /// The parabolic part `w_J`, as a full window fixing the complement.
    pub fn parabolic(&self) -> &SignedPermutation {
        &self.parabolic
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    /// The parabolic part as an element of the prefix model group, when `J`
    /// is a prefix subset (see [`parabolic_model`]). Statistics of the
    /// smaller group are evaluated on this window.
    pub fn parabolic_restricted(&self) -> Option<SignedPermutation> {
        let model = parabolic_model(self.quotient.descriptor(), self.subset)?;
        let k = model.window();
        let window = self.parabolic.window()[..k].to_vec();
        Some(SignedPermutation::new(model, window).expect("prefix restriction is always valid"))
    }
}

/// The model group of a parabolic subgroup `W_J` for prefix subsets, the
/// only ones whose elements restrict to a window of the smaller group:
/// `{s_1..s_k}` models `A:(k+1)` in every family, and `{s_0..s_k}` models
/// `B:(k+1)` resp. `D:(k+1)` in types B and D. `J = {}` models the trivial
/// group `A:1`. Returns `None` for any other shape.
pub fn parabolic_model(descriptor: GroupDescriptor, subset: GenSet) -> Option<GroupDescriptor> {
    if subset.is_empty() {
        return GroupDescriptor::new(Family::A, 1).ok();
    }
    if !subset.is_subset_of(descriptor.full_generator_set()) {
        return None;
    }
    let k = subset.iter().max().unwrap();
    let from_one: GenSet = (1..=k).collect();
    let from_zero: GenSet = (0..=k).collect();
    if subset == from_one {
        return GroupDescriptor::new(Family::A, k + 1).ok();
    }
    if subset == from_zero {
        match descriptor.family() {
            Family::A => None,
            Family::B => GroupDescriptor::new(Family::B, k + 1).ok(),
            Family::D => GroupDescriptor::new(Family::D, k + 1).ok(),
        }
    } else {
        None
    }
}

/// Embeds an element of the prefix model group back into `descriptor`,
/// fixing the trailing positions.
pub fn embed_from_model(
    descriptor: GroupDescriptor,
    element: &SignedPermutation,
) -> Result<SignedPermutation> {
    let k = element.descriptor().window();
    if k > descriptor.window() {
        return Err(Error::DescriptorMismatch(element.descriptor(), descriptor));
    }
    let mut window = element.window().to_vec();
    window.extend(k as i32 + 1..=descriptor.window() as i32);
    SignedPermutation::new(descriptor, window)
}

/// Factors `w = w^J w_J` by repeatedly stripping right descents lying in `J`.
pub fn parabolic_decompose(w: &SignedPermutation, subset: GenSet) -> Result<CosetFactorization> {
    subset.validate_for(w.descriptor())?;
    let mut quotient = w.clone();
    let mut parabolic = SignedPermutation::identity(w.descriptor());
    loop {
        let descents = quotient.right_descent_set().intersect(subset);
        match descents.iter().next() {
            None => break,
            Some(s) => {
                quotient.right_mul_gen(s);
                // stripping s turns w = q' (s * tail) into q' with tail s*tail
                parabolic.left_mul_gen(s);
            }
        }
    }
    Ok(CosetFactorization {
        quotient,
        parabolic,
        subset,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(text: &str) -> GroupDescriptor {
        text.parse().unwrap()
    }

    fn el(d: &str, w: &str) -> SignedPermutation {
        SignedPermutation::parse(desc(d), w).unwrap()
    }

    #[test]
    fn element_of_parabolic_stays_put() {
        let w = el("A:4", "2,3,1,4");
        let f = parabolic_decompose(&w, GenSet::from_iter([1usize, 2])).unwrap();
        assert!(f.quotient().is_identity());
        assert_eq!(f.parabolic(), &w);
    }

    #[test]
    fn worked_s4_factorization() {
        let w = el("A:4", "4,1,2,3");
        let f = parabolic_decompose(&w, GenSet::from_iter([1usize, 2])).unwrap();
        assert_eq!(f.quotient().length(), 1);
        assert_eq!(
            f.parabolic_restricted().unwrap(),
            el("A:3", "3,1,2"),
            "w_J restricted to the model window"
        );
        // recomposition
        let product = f.quotient().compose(f.parabolic()).unwrap();
        assert_eq!(product, w);
    }

    #[test]
    fn type_b_quotient_length_is_negative_entry_sum() {
        let w = el("B:3", "2,-1,3");
        let f = parabolic_decompose(&w, GenSet::from_iter([1usize, 2])).unwrap();
        assert_eq!(f.quotient().length(), 1);
        assert_eq!(f.quotient().length() as i64, -w.neg_sum());
    }

    #[test]
    fn length_additivity_and_descent_restriction_exhaustive_s4() {
        // l(w) = l(w^J) + l(w_J) and D_R(w_J) = D_R(w) n J over all of S_4,
        // for every subset J
        let d = desc("A:4");
        let universe = crate::enumerate::GroupUniverse::new(d).unwrap();
        for j_mask in 0u32..8 {
            let subset = GenSet::from_mask(j_mask << 1);
            for k in 0..universe.order() {
                let w = crate::enumerate::unrank(d, k).unwrap();
                let f = parabolic_decompose(&w, subset).unwrap();
                assert_eq!(
                    w.length(),
                    f.quotient().length() + f.parabolic().length(),
                    "additivity at {w}"
                );
                assert_eq!(
                    f.parabolic().right_descent_set(),
                    w.right_descent_set().intersect(subset),
                    "descent restriction at {w}"
                );
                assert!(f
                    .quotient()
                    .right_descent_set()
                    .intersect(subset)
                    .is_empty());
                assert_eq!(f.quotient().compose(f.parabolic()).unwrap(), w);
            }
        }
    }

    #[test]
    fn prefix_models() {
        let b5 = desc("B:5");
        assert_eq!(
            parabolic_model(b5, GenSet::from_iter([1usize, 2, 3])),
            Some(desc("A:4"))
        );
        assert_eq!(
            parabolic_model(b5, GenSet::from_iter([0usize, 1, 2])),
            Some(desc("B:3"))
        );
        assert_eq!(parabolic_model(b5, GenSet::from_iter([2usize, 3])), None);
        assert_eq!(parabolic_model(b5, GenSet::EMPTY), Some(desc("A:1")));
        let d5 = desc("D:5");
        assert_eq!(
            parabolic_model(d5, GenSet::from_iter([0usize, 1, 2])),
            Some(desc("D:3"))
        );
        assert_eq!(parabolic_model(d5, GenSet::from_iter([0usize])), None);
    }

    #[test]
    fn embed_round_trip() {
        let w = el("B:3", "2,-3,1");
        let big = embed_from_model(desc("B:5"), &w).unwrap();
        assert_eq!(big, el("B:5", "2,-3,1,4,5"));
        let f = parabolic_decompose(&big, GenSet::from_iter([0usize, 1, 2])).unwrap();
        assert!(f.quotient().is_identity());
        assert_eq!(f.parabolic_restricted().unwrap(), w);
    }
}
