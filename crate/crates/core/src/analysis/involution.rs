use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::enumerate::{self, GroupUniverse, Splittable};
use crate::error::{Error, Result};
use crate::groups::{
    embed_from_model, parabolic_decompose, parabolic_model, GenSet, GroupDescriptor,
};

/// A self-inverse permutation of an indexed element universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InvolutionMap {
    map: Vec<u64>,
}

impl InvolutionMap {
    pub fn new(map: Vec<u64>) -> Result<Self> {
        let n = map.len() as u64;
        for (i, &j) in map.iter().enumerate() {
            if j >= n || map[j as usize] != i as u64 {
                return Err(Error::NotInvolution(i as u64));
            }
        }
        Ok(InvolutionMap { map })
    }

    pub fn identity(n: u64) -> Self {
        InvolutionMap {
            map: (0..n).collect(),
        }
    }

    pub fn len(&self) -> u64 {
        self.map.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, index: u64) -> u64 {
        self.map[index as usize]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i as u64 == j)
    }

    pub fn fixed_point_count(&self) -> u64 {
        self.map
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u64 == j)
            .count() as u64
    }

    /// Pointwise check of `f = g o iota` over value tables.
    pub fn exchanges(&self, f: &[i64], g: &[i64]) -> bool {
        f.len() == self.map.len()
            && g.len() == self.map.len()
            && self
                .map
                .iter()
                .enumerate()
                .all(|(i, &j)| f[i] == g[j as usize])
    }
}

/// Builds the canonical involution `iota` with `f = g o iota` from value
/// tables indexed by enumeration order.
///
/// Elements with `f(x) = g(x)` are fixed; within each value class the i-th
/// smallest element (by index) of the `(h,k)` class is matched with the i-th
/// smallest of the `(k,h)` class. Fails with [`Error::NotSymmetric`] when
/// the class sizes do not match, which is exactly the non-symmetric case.
pub fn build_involution_from_values(f: &[i64], g: &[i64]) -> Result<InvolutionMap> {
    if f.len() != g.len() {
        return Err(Error::UniverseMismatch(f.len() as u64, g.len() as u64));
    }
    let mut classes: BTreeMap<(i64, i64), Vec<u64>> = BTreeMap::new();
    let mut map: Vec<u64> = (0..f.len() as u64).collect();
    for i in 0..f.len() {
        let (h, k) = (f[i], g[i]);
        if h != k {
            classes.entry((h, k)).or_default().push(i as u64);
        }
    }
    for (&(h, k), members) in &classes {
        if h > k {
            // handled from the mirrored key, which must exist
            if !classes.contains_key(&(k, h)) {
                return Err(Error::NotSymmetric);
            }
            continue;
        }
        let partners = classes.get(&(k, h)).map(Vec::as_slice).unwrap_or(&[]);
        if members.len() != partners.len() {
            return Err(Error::NotSymmetric);
        }
        for (&a, &b) in members.iter().zip(partners) {
            map[a as usize] = b;
            map[b as usize] = a;
        }
    }
    let iota = InvolutionMap { map };
    debug_assert!(iota.exchanges(f, g));
    Ok(iota)
}

/// [`build_involution_from_values`] over a splittable source.
pub fn build_involution<S: Splittable + ?Sized>(
    source: &S,
    f: impl Fn(&S::Elem) -> i64 + Sync,
    g: impl Fn(&S::Elem) -> i64 + Sync,
) -> Result<InvolutionMap> {
    let mut fv = Vec::with_capacity(source.len() as usize);
    let mut gv = Vec::with_capacity(source.len() as usize);
    source.scan(0, source.len(), &mut |x| {
        fv.push(f(x));
        gv.push(g(x));
    });
    build_involution_from_values(&fv, &gv)
}

/// Lifts an involution of the prefix parabolic model group to the whole
/// group: the image of `w = w^J w_J` is `w^J * iota(w_J)`, indexed by
/// enumeration rank.
pub fn lift_involution_classical(
    descriptor: GroupDescriptor,
    subset: GenSet,
    iota: &InvolutionMap,
    cap: u64,
) -> Result<InvolutionMap> {
    let model = parabolic_model(descriptor, subset).ok_or_else(|| {
        Error::Unsupported(format!(
            "subset {subset} of {descriptor} has no prefix model group"
        ))
    })?;
    if iota.len() != model.order_u64()? {
        return Err(Error::UniverseMismatch(iota.len(), model.order_u64()?));
    }
    let universe = GroupUniverse::with_cap(descriptor, cap)?;
    let mut map = Vec::with_capacity(universe.order() as usize);
    universe.scan(0, universe.order(), &mut |w| {
        let f = parabolic_decompose(w, subset).expect("subset validated");
        let restricted = f.parabolic_restricted().expect("prefix model exists");
        let swapped = enumerate::unrank(model, iota.apply(enumerate::rank(&restricted)))
            .expect("involution stays in range");
        let lifted = f
            .quotient()
            .compose(&embed_from_model(descriptor, &swapped).expect("model embeds"))
            .expect("same descriptor");
        map.push(enumerate::rank(&lifted));
    });
    InvolutionMap::new(map)
}
