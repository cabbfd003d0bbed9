use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::groups::{Family, GroupDescriptor, SignedPermutation};
use crate::statistics;

/// The witness families certifying `|Im(len+maj)| = n(n+1)-1` on the group
/// of `(n+1)`-windows.
///
/// `U` is a chain of elements on which `len+maj` takes all even values
/// `2, 4, ..., n(n+1)`; `phi` steps down the chain dropping both statistics
/// by one. `J` is the image of `psi`, which raises the length by one while
/// preserving `maj`, so `len+maj` is odd on `J`. Together with the identity
/// these account for `n(n+1)-1` distinct values, meeting the general upper
/// bound.
#[derive(Debug, Clone)]
pub struct WitnessFamilies {
    n: usize,
    descriptor: GroupDescriptor,
    /// `u_family[t]` is `sigma_{i,j}` with `(i,j) = labels[t]`.
    u_family: Vec<SignedPermutation>,
    labels: Vec<(usize, usize)>,
    /// `phi[t]` is the index in `u_family` of the image of element `t`.
    phi: Vec<Option<usize>>,
    /// `psi[t]` is the image element (it lies outside the `U` family).
    psi: Vec<Option<SignedPermutation>>,
}

/// Outcome of checking every construction claim; one named flag per claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub claims: Vec<(&'static str, bool)>,
    pub u_size: usize,
    pub j_size: usize,
    /// `|values(U) u values(J) u {0}|`, the certified lower bound.
    pub certified_image_size: u64,
}

impl WitnessReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|(_, ok)| *ok)
    }
}

fn window_formula(n: usize, i: usize, j: usize) -> Vec<i32> {
    (1..=n + 1)
        .map(|k| {
            if k > n + 1 - j {
                k as i32
            } else if k == i {
                (n + 1 - j) as i32
            } else if k > i {
                (n + 2 - j - k) as i32
            } else {
                (n + 1 - j - k) as i32
            }
        })
        .collect()
}

/// Constructs the witness families for `n >= 2` (windows of size `n+1`).
pub fn witness_families(n: usize) -> Result<WitnessFamilies> {
    if n < 2 {
        return Err(Error::Unsupported(
            "witness families need n >= 2".to_string(),
        ));
    }
    let descriptor = GroupDescriptor::new(Family::A, n + 1)?;
    let mut u_family = Vec::new();
    let mut labels = Vec::new();
    for j in 0..n {
        for i in 1..=n - j {
            let w = SignedPermutation::new(descriptor, window_formula(n, i, j))?;
            labels.push((i, j));
            u_family.push(w);
        }
    }

    let by_element: HashMap<&SignedPermutation, usize> = u_family.iter().zip(0..).collect();
    let mut phi = vec![None; u_family.len()];
    let mut psi = vec![None; u_family.len()];
    for (t, &(i, j)) in labels.iter().enumerate() {
        if (i, j) != (1, n - 1) {
            let mut image = u_family[t].clone();
            image.right_mul_gen(i);
            phi[t] = by_element.get(&image).copied();
        }
        if (i, j) != (1, 0) && (i, j) != (2, 0) {
            let mut image = u_family[t].clone();
            image.left_mul_gen(if j == 0 { n } else { n + 1 - j });
            psi[t] = Some(image);
        }
    }

    Ok(WitnessFamilies {
        n,
        descriptor,
        u_family,
        labels,
        phi,
        psi,
    })
}

impl WitnessFamilies {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn u_family(&self) -> &[SignedPermutation] {
        &self.u_family
    }

    pub fn j_family(&self) -> Vec<&SignedPermutation> {
        self.psi.iter().flatten().collect()
    }

    pub fn element(&self, i: usize, j: usize) -> Option<&SignedPermutation> {
        self.labels
            .iter()
            .position(|&l| l == (i, j))
            .map(|t| &self.u_family[t])
    }

    /// Verifies every claim of the construction and records each outcome.
    pub fn verify(&self) -> WitnessReport {
        let n = self.n as u64;
        let value = |w: &SignedPermutation| (w.length() + statistics::maj(w)) as i64;

        let mut claims = Vec::new();
        let distinct: HashSet<_> = self.u_family.iter().collect();
        claims.push((
            "u_has_n_choose_2_plus_n_distinct_members",
            distinct.len() == self.u_family.len() && self.u_family.len() as u64 == n * (n + 1) / 2,
        ));
        claims.push((
            "first_member_is_longest_element",
            self.element(1, 0) == Some(&SignedPermutation::longest(self.descriptor)),
        ));

        // phi is a bijection U \ {sigma_{1,n-1}} -> U \ {w_0}
        let phi_images: HashSet<_> = self.phi.iter().flatten().collect();
        claims.push((
            "phi_bijects_onto_u_minus_longest",
            self.phi.iter().flatten().count() == self.u_family.len() - 1
                && phi_images.len() == self.u_family.len() - 1
                && !phi_images.contains(&0),
        ));
        claims.push((
            "phi_steps_along_the_family",
            self.labels.iter().enumerate().all(|(t, &(i, j))| {
                if (i, j) == (1, self.n - 1) {
                    self.phi[t].is_none()
                } else {
                    let target = if i < self.n - j {
                        (i + 1, j)
                    } else {
                        (1, j + 1)
                    };
                    self.phi[t].is_some_and(|u| self.labels[u] == target)
                }
            }),
        ));
        claims.push((
            "phi_drops_length_by_one",
            self.phi.iter().enumerate().all(|(t, img)| match *img {
                Some(u) => self.u_family[u].length() + 1 == self.u_family[t].length(),
                None => true,
            }),
        ));
        claims.push((
            "phi_drops_maj_by_one",
            self.phi.iter().enumerate().all(|(t, img)| match *img {
                Some(u) => {
                    statistics::maj(&self.u_family[u]) + 1 == statistics::maj(&self.u_family[t])
                }
                None => true,
            }),
        ));

        let psi_images: Vec<_> = self.psi.iter().flatten().collect();
        let psi_distinct: HashSet<_> = psi_images.iter().collect();
        claims.push((
            "psi_is_injective_off_two_members",
            psi_images.len() == self.u_family.len() - 2 && psi_distinct.len() == psi_images.len(),
        ));
        claims.push((
            "psi_raises_length_by_one",
            self.psi.iter().enumerate().all(|(t, img)| match img {
                Some(w) => w.length() == self.u_family[t].length() + 1,
                None => true,
            }),
        ));
        claims.push((
            "psi_preserves_maj",
            self.psi.iter().enumerate().all(|(t, img)| match img {
                Some(w) => statistics::maj(w) == statistics::maj(&self.u_family[t]),
                None => true,
            }),
        ));
        claims.push((
            "families_are_disjoint",
            psi_images.iter().all(|w| !distinct.contains(*w)),
        ));

        claims.push((
            "sum_even_on_u",
            self.u_family.iter().all(|w| value(w) % 2 == 0),
        ));
        claims.push(("sum_odd_on_j", psi_images.iter().all(|w| value(w) % 2 == 1)));

        let u_values: BTreeSet<_> = self.u_family.iter().map(&value).collect();
        claims.push(("sum_injective_on_u", u_values.len() == self.u_family.len()));

        let mut all_values = u_values;
        all_values.extend(psi_images.iter().map(|w| value(w)));
        all_values.insert(0);
        let certified = all_values.len() as u64;
        claims.push(("certified_value_count", certified == n * (n + 1) - 1));

        WitnessReport {
            claims,
            u_size: self.u_family.len(),
            j_size: psi_images.len(),
            certified_image_size: certified,
        }
    }
}
