use std::fmt;
use std::str::FromStr;

use num::BigUint;

use crate::error::{Error, Result};

/// Classical Weyl group family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::D => write!(f, "D"),
        }
    }
}

/// A classical group given by family and window size `n`.
///
/// The window size is the number of entries in an element's window, so `A:n`
/// is the symmetric group on `n` letters (the Coxeter system of rank `n-1`),
/// while `B:n` and `D:n` have Coxeter rank `n`. Generators are indexed
/// `s_1..s_{n-1}` in type A and `s_0..s_{n-1}` in types B and D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupDescriptor {
    family: Family,
    window: usize,
}

impl GroupDescriptor {
    pub fn new(family: Family, window: usize) -> Result<Self> {
        let min = match family {
            Family::A | Family::B => 1,
            // D needs two positions for the sign-pair generator. D:2 and D:3
            // are accepted as groups although they are not irreducible.
            Family::D => 2,
        };
        if window < min {
            return Err(Error::Parse(format!(
                "window size {window} is too small for family {family}"
            )));
        }
        Ok(GroupDescriptor { family, window })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of entries in a window.
    pub fn window(&self) -> usize {
        self.window
    }

    /// Rank of the Coxeter system: `n-1` for `A:n`, `n` for `B:n` and `D:n`.
    pub fn coxeter_rank(&self) -> usize {
        match self.family {
            Family::A => self.window - 1,
            Family::B | Family::D => self.window,
        }
    }

    /// Valid generator indices: `1..n` for type A, `0..n` for types B and D.
    pub fn generator_indices(&self) -> std::ops::Range<usize> {
        match self.family {
            Family::A => 1..self.window,
            Family::B | Family::D => 0..self.window,
        }
    }

    pub fn has_generator(&self, index: usize) -> bool {
        self.generator_indices().contains(&index)
    }

    /// All generators as a set.
    pub fn full_generator_set(&self) -> GenSet {
        self.generator_indices().collect()
    }

    /// Exact group order: `n!`, `2^n n!`, `2^{n-1} n!`.
    pub fn order(&self) -> BigUint {
        let mut ord = BigUint::from(1u32);
        for k in 2..=self.window {
            ord *= BigUint::from(k);
        }
        let sign_bits = match self.family {
            Family::A => 0,
            Family::B => self.window,
            Family::D => self.window - 1,
        };
        ord << sign_bits
    }

    /// Group order when it fits in an enumeration index.
    pub fn order_u64(&self) -> Result<u64> {
        let mut ord: u64 = 1;
        for k in 2..=self.window as u64 {
            ord = ord.checked_mul(k).ok_or(Error::OrderOverflow)?;
        }
        let sign_bits = match self.family {
            Family::A => 0,
            Family::B => self.window as u32,
            Family::D => self.window as u32 - 1,
        };
        ord.checked_shl(sign_bits)
            .filter(|_| sign_bits < 64)
            .ok_or(Error::OrderOverflow)
    }

    /// Length of the longest element: `n(n-1)/2`, `n^2`, `n(n-1)`.
    pub fn longest_length(&self) -> u64 {
        let n = self.window as u64;
        match self.family {
            Family::A => n * (n - 1) / 2,
            Family::B => n * n,
            Family::D => n * (n - 1),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.window)
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Parses the `A:n` / `B:n` / `D:n` descriptor text.
    fn from_str(s: &str) -> Result<Self> {
        let (fam, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("descriptor `{s}` is not of the form F:n")))?;
        let family = match fam.trim() {
            "A" | "a" => Family::A,
            "B" | "b" => Family::B,
            "D" | "d" => Family::D,
            other => return Err(Error::Parse(format!("unknown family `{other}`"))),
        };
        let window: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad window size `{n}`")))?;
        GroupDescriptor::new(family, window)
    }
}

/// A subset of generator indices, stored as a bitmask (index `i` = bit `i`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_mask(mask: u32) -> Self {
        GenSet(mask)
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < 32);
        self.0 |= 1 << index;
    }

    pub fn contains(&self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.contains(*i))
    }

    pub fn intersect(&self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn is_subset_of(&self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Checks that every member is a generator index of `descriptor`.
    pub fn validate_for(&self, descriptor: GroupDescriptor) -> Result<()> {
        if self.is_subset_of(descriptor.full_generator_set()) {
            Ok(())
        } else {
            Err(Error::InvalidGeneratorSet {
                descriptor,
                subset: self.to_string(),
            })
        }
    }

    /// Parses `{s1,s2}` (or `{}` for the empty set).
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("generator set `{text}` must be braced")))?;
        let mut set = GenSet::EMPTY;
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let idx: usize = part
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad generator `{part}` in `{text}`")))?;
            if idx >= 32 {
                return Err(Error::Parse(format!("generator index {idx} too large")));
            }
            set.insert(idx);
        }
        Ok(set)
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = GenSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "s{i}")?;
        }
        write!(f, "}}")
    }
}
