use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{Family, GenSet, GroupDescriptor};

/// A group element in window notation: the values `(w(1),...,w(n))`.
///
/// Entries are nonzero integers in `[-n, n]` whose absolute values form a
/// permutation of `[n]`; `w(-a) = -w(a)` is implicit. Type A windows are all
/// positive and type D windows have an even number of negative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    descriptor: GroupDescriptor,
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(descriptor: GroupDescriptor, window: Vec<i32>) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidWindow {
            descriptor,
            window: format!("{window:?}"),
            reason: reason.to_string(),
        };
        let n = descriptor.window();
        if window.len() != n {
            return Err(invalid("wrong number of entries"));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(invalid("entry out of range"));
            }
            if seen[a - 1] {
                return Err(invalid("repeated absolute value"));
            }
            seen[a - 1] = true;
        }
        match descriptor.family() {
            Family::A => {
                if window.iter().any(|&v| v < 0) {
                    return Err(invalid("type A admits no negative entries"));
                }
            }
            Family::B => {}
            Family::D => {
                if window.iter().filter(|&&v| v < 0).count() % 2 != 0 {
                    return Err(invalid("type D needs an even number of negative entries"));
                }
            }
        }
        Ok(SignedPermutation { descriptor, window })
    }

    /// Used by the enumeration walker, which maintains validity itself.
    pub(crate) fn from_raw(descriptor: GroupDescriptor, window: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(descriptor, window.clone()).is_ok());
        SignedPermutation { descriptor, window }
    }

    pub(crate) fn window_mut(&mut self) -> &mut [i32] {
        &mut self.window
    }

    pub fn identity(descriptor: GroupDescriptor) -> Self {
        let window = (1..=descriptor.window() as i32).collect();
        SignedPermutation { descriptor, window }
    }

    /// The simple generator `s_i` as a window.
    pub fn generator(descriptor: GroupDescriptor, index: usize) -> Result<Self> {
        if !descriptor.has_generator(index) {
            return Err(Error::InvalidGenerator { descriptor, index });
        }
        let mut w = SignedPermutation::identity(descriptor);
        match (descriptor.family(), index) {
            (Family::B, 0) => w.window[0] = -1,
            (Family::D, 0) => {
                w.window[0] = -2;
                w.window[1] = -1;
            }
            (_, i) => w.window.swap(i - 1, i),
        }
        Ok(w)
    }

    /// The maximal-length element `w_0`.
    pub fn longest(descriptor: GroupDescriptor) -> Self {
        let n = descriptor.window() as i32;
        let window = match descriptor.family() {
            Family::A => (1..=n).rev().collect(),
            Family::B => (1..=n).map(|v| -v).collect(),
            Family::D => {
                // (-1,...,-n) for n even, (1,-2,...,-n) for n odd.
                (1..=n)
                    .map(|v| if v == 1 && n % 2 == 1 { v } else { -v })
                    .collect()
            }
        };
        SignedPermutation { descriptor, window }
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Value at position `i` (1-based).
    pub fn value(&self, i: usize) -> i32 {
        self.window[i - 1]
    }

    /// Image of any point `a` in `[-n, n] \ {0}`, using `w(-a) = -w(a)`.
    pub fn image(&self, a: i32) -> i32 {
        if a < 0 {
            -self.window[(-a - 1) as usize]
        } else {
            self.window[(a - 1) as usize]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// Group product under the convention `(uv)(i) = u(v(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.descriptor != other.descriptor {
            return Err(Error::DescriptorMismatch(self.descriptor, other.descriptor));
        }
        let window = other.window.iter().map(|&v| self.image(v)).collect();
        Ok(SignedPermutation {
            descriptor: self.descriptor,
            window,
        })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            if v > 0 {
                window[(v - 1) as usize] = pos;
            } else {
                window[(-v - 1) as usize] = -pos;
            }
        }
        SignedPermutation {
            descriptor: self.descriptor,
            window,
        }
    }

    /// Right multiplication by `s_i`, in place.
    pub(crate) fn right_mul_gen(&mut self, index: usize) {
        match (self.descriptor.family(), index) {
            (Family::B, 0) => self.window[0] = -self.window[0],
            (Family::D, 0) => {
                let (a, b) = (self.window[0], self.window[1]);
                self.window[0] = -b;
                self.window[1] = -a;
            }
            (_, i) => self.window.swap(i - 1, i),
        }
    }

    /// Left multiplication by `s_i`, in place.
    pub(crate) fn left_mul_gen(&mut self, index: usize) {
        match (self.descriptor.family(), index) {
            (Family::B, 0) => {
                for v in &mut self.window {
                    if v.unsigned_abs() == 1 {
                        *v = -*v;
                    }
                }
            }
            (Family::D, 0) => {
                // exchanges 1 <-> -2 and 2 <-> -1
                for v in &mut self.window {
                    match v.unsigned_abs() {
                        1 => *v = if *v > 0 { -2 } else { 2 },
                        2 => *v = if *v > 0 { -1 } else { 1 },
                        _ => {}
                    }
                }
            }
            (_, i) => {
                let (lo, hi) = (i as i32, i as i32 + 1);
                for v in &mut self.window {
                    let a = v.abs();
                    if a == lo {
                        *v = if *v > 0 { hi } else { -hi };
                    } else if a == hi {
                        *v = if *v > 0 { lo } else { -lo };
                    }
                }
            }
        }
    }

    /// Number of pairs `i < j` with `w(i) > w(j)`.
    pub fn inv_count(&self) -> u64 {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions (1-based) carrying negative entries.
    pub fn neg_set(&self) -> Vec<usize> {
        self.window
            .iter()
            .enumerate()
            .filter(|(_, &v)| v < 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn neg_count(&self) -> u64 {
        self.window.iter().filter(|&&v| v < 0).count() as u64
    }

    /// Sum of the negative entries (a nonpositive number).
    pub fn neg_sum(&self) -> i64 {
        self.window
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| v as i64)
            .sum()
    }

    /// Coxeter length for the presentation fixed by the family:
    /// `inv` (A), `inv - sum(neg entries)` (B), `inv - sum(neg) - #neg` (D).
    pub fn length(&self) -> u64 {
        let inv = self.inv_count() as i64;
        let len = match self.descriptor.family() {
            Family::A => inv,
            Family::B => inv - self.neg_sum(),
            Family::D => inv - self.neg_sum() - self.neg_count() as i64,
        };
        debug_assert!(len >= 0);
        len as u64
    }

    /// Right descent set, from the window criteria:
    /// `s_i` for `i >= 1` iff `w(i) > w(i+1)`; `s_0` iff `w(1) < 0` (B)
    /// resp. `w(1) + w(2) < 0` (D).
    pub fn right_descent_set(&self) -> GenSet {
        let mut set = GenSet::EMPTY;
        let w = &self.window;
        match self.descriptor.family() {
            Family::A => {}
            Family::B => {
                if w[0] < 0 {
                    set.insert(0);
                }
            }
            Family::D => {
                if w[0] + w[1] < 0 {
                    set.insert(0);
                }
            }
        }
        for i in 1..w.len() {
            if w[i - 1] > w[i] {
                set.insert(i);
            }
        }
        set
    }

    /// Descent positions of the window as an integer sequence
    /// (ignores the `s_0` sign conditions).
    pub fn sequence_descents(&self) -> Vec<usize> {
        (1..self.window.len())
            .filter(|&i| self.window[i - 1] > self.window[i])
            .collect()
    }

    /// Parses the comma-separated window text, e.g. `-1,2,3`.
    pub fn parse(descriptor: GroupDescriptor, text: &str) -> Result<Self> {
        let window = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(descriptor, window)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
