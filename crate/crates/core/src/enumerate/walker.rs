use crate::enumerate::rank::{effective_sign_mask, factorial, lehmer_unrank, sign_block_count};
use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, SignedPermutation};

/// Streams the elements of a half-open index range in order, stepping by
/// next-permutation plus a sign odometer instead of unranking each index.
pub struct RangeWalker {
    descriptor: GroupDescriptor,
    perm: Vec<i32>,
    sign_index: u64,
    mask: u64,
    remaining: u64,
    started: bool,
    scratch: SignedPermutation,
}

impl RangeWalker {
    pub fn new(descriptor: GroupDescriptor, start: u64, end: u64) -> Result<Self> {
        let order = descriptor.order_u64()?;
        if start > end || end > order {
            return Err(Error::IndexOutOfRange { index: end, order });
        }
        let n = descriptor.window();
        let nfact = factorial(n);
        let sign_index = start / nfact;
        let mut perm = Vec::with_capacity(n);
        lehmer_unrank(n, start % nfact, &mut perm);
        Ok(RangeWalker {
            descriptor,
            perm,
            sign_index,
            mask: effective_sign_mask(descriptor, sign_index),
            remaining: end - start,
            started: false,
            scratch: SignedPermutation::identity(descriptor),
        })
    }

    /// The element under the cursor, then advances. Returns `None` once the
    /// range is exhausted. The reference is only valid until the next call.
    pub fn next_element(&mut self) -> Option<&SignedPermutation> {
        if self.remaining == 0 {
            return None;
        }
        if self.started {
            self.step();
        }
        self.started = true;
        self.remaining -= 1;
        let window = self.scratch.window_mut();
        for (i, &p) in self.perm.iter().enumerate() {
            window[i] = if self.mask >> i & 1 == 1 { -p } else { p };
        }
        Some(&self.scratch)
    }

    fn step(&mut self) {
        if !next_permutation(&mut self.perm) {
            self.perm.sort_unstable();
            self.sign_index += 1;
            debug_assert!(self.sign_index < sign_block_count(self.descriptor));
            self.mask = effective_sign_mask(self.descriptor, self.sign_index);
        }
    }
}

/// Advances to the lexicographic successor; returns `false` (leaving the
/// slice rearranged) when the input was the final, descending arrangement.
fn next_permutation(perm: &mut [i32]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
