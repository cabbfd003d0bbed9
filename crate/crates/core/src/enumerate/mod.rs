//! Splittable, deterministic enumeration of the classical groups.
//!
//! Elements are indexed `0..order` by `index = signbits * n! + lehmer(perm)`:
//! the underlying permutation in lexicographic (Lehmer, most significant
//! digit first) order, and the sign bits little-endian over window positions.
//! Type D uses `n-1` free sign bits with the last sign fixed by parity, so
//! ranges stay dense. Workers iterate sub-ranges by successor stepping
//! (next-permutation plus a sign odometer), not per-element unranking.

mod fold;
mod rank;
mod walker;

pub use fold::{parallel_fold, run_with_threads, thread_count, Monoid, Splittable};
pub use rank::{rank, unrank};
pub use walker::RangeWalker;

use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, SignedPermutation};

/// A whole classical group as a splittable element source.
#[derive(Debug, Clone, Copy)]
pub struct GroupUniverse {
    descriptor: GroupDescriptor,
    order: u64,
}

impl GroupUniverse {
    pub fn new(descriptor: GroupDescriptor) -> Result<Self> {
        Ok(GroupUniverse {
            descriptor,
            order: descriptor.order_u64()?,
        })
    }

    /// Like [`GroupUniverse::new`] but refusing orders above `cap`.
    pub fn with_cap(descriptor: GroupDescriptor, cap: u64) -> Result<Self> {
        let u = Self::new(descriptor)?;
        if u.order > cap {
            return Err(Error::CapExceeded {
                what: descriptor.to_string(),
                needed: u.order.to_string(),
                cap,
            });
        }
        Ok(u)
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn order(&self) -> u64 {
        self.order
    }
}

impl Splittable for GroupUniverse {
    type Elem = SignedPermutation;

    fn len(&self) -> u64 {
        self.order
    }

    fn scan(&self, start: u64, end: u64, visit: &mut dyn FnMut(&SignedPermutation)) {
        let mut walker = RangeWalker::new(self.descriptor, start, end)
            .expect("range within order by construction");
        while let Some(w) = walker.next_element() {
            visit(w);
        }
    }
}

/// Materializes `f` over the whole group in index order.
pub fn materialize(
    descriptor: GroupDescriptor,
    cap: u64,
    f: impl Fn(&SignedPermutation) -> i64,
) -> Result<Vec<i64>> {
    let universe = GroupUniverse::with_cap(descriptor, cap)?;
    let mut values = Vec::with_capacity(universe.order() as usize);
    universe.scan(0, universe.order(), &mut |w| values.push(f(w)));
    Ok(values)
}
