use crate::error::{Error, Result};
use crate::groups::{Family, GroupDescriptor, SignedPermutation};

pub(crate) fn factorial(n: usize) -> u64 {
    (2..=n as u64).product()
}

/// Sign mask actually applied to window positions: for type D the free bits
/// cover positions `1..n-1` and the last position's sign restores even parity.
pub(crate) fn effective_sign_mask(descriptor: GroupDescriptor, sign_index: u64) -> u64 {
    match descriptor.family() {
        Family::A => 0,
        Family::B => sign_index,
        Family::D => {
            let n = descriptor.window();
            if sign_index.count_ones() % 2 == 1 {
                sign_index | 1 << (n - 1)
            } else {
                sign_index
            }
        }
    }
}

pub(crate) fn sign_block_count(descriptor: GroupDescriptor) -> u64 {
    match descriptor.family() {
        Family::A => 1,
        Family::B => 1 << descriptor.window(),
        Family::D => 1 << (descriptor.window() - 1),
    }
}

/// Writes the permutation with Lehmer rank `m` (most significant digit
/// first, i.e. lexicographic order) into `out`.
pub(crate) fn lehmer_unrank(n: usize, mut m: u64, out: &mut Vec<i32>) {
    out.clear();
    let mut available: Vec<i32> = (1..=n as i32).collect();
    for i in 0..n {
        let base = factorial(n - 1 - i);
        let digit = (m / base) as usize;
        m %= base;
        out.push(available.remove(digit));
    }
}

fn lehmer_rank(window: &[i32]) -> u64 {
    let n = window.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_right = window[i + 1..]
            .iter()
            .filter(|&&v| v.abs() < window[i].abs())
            .count() as u64;
        rank += smaller_right * factorial(n - 1 - i);
    }
    rank
}

/// Element with index `k` under the sign-odometer ordering.
pub fn unrank(descriptor: GroupDescriptor, k: u64) -> Result<SignedPermutation> {
    let order = descriptor.order_u64()?;
    if k >= order {
        return Err(Error::IndexOutOfRange { index: k, order });
    }
    let n = descriptor.window();
    let nfact = factorial(n);
    let mask = effective_sign_mask(descriptor, k / nfact);
    let mut window = Vec::with_capacity(n);
    lehmer_unrank(n, k % nfact, &mut window);
    for (i, v) in window.iter_mut().enumerate() {
        if mask >> i & 1 == 1 {
            *v = -*v;
        }
    }
    Ok(SignedPermutation::from_raw(descriptor, window))
}

/// Index of `w`; inverse of [`unrank`].
pub fn rank(w: &SignedPermutation) -> u64 {
    let descriptor = w.descriptor();
    let n = descriptor.window();
    let mut sign_index: u64 = 0;
    let free_bits = match descriptor.family() {
        Family::A => 0,
        Family::B => n,
        Family::D => n - 1,
    };
    for i in 0..free_bits {
        if w.window()[i] < 0 {
            sign_index |= 1 << i;
        }
    }
    sign_index * factorial(n) + lehmer_rank(w.window())
}
