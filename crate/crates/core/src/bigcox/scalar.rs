use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element `a + b*phi` of the golden-ratio integers, where
/// `phi = (1+sqrt(5))/2` satisfies `phi^2 = phi + 1`. This is the ring of
/// integers of the field generated by `sqrt(5)`; the rational (`b = 0`)
/// part suffices for the crystallographic types, while `phi` enters for
/// the pentagonal ones.
///
/// Components are machine integers with checked arithmetic: entries of
/// reflection matrices of a finite group permute the finite root set, so
/// their coordinates stay far below the overflow bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    a: i64,
    b: i64,
}

impl ExactScalar {
    pub const ZERO: ExactScalar = ExactScalar { a: 0, b: 0 };
    pub const ONE: ExactScalar = ExactScalar { a: 1, b: 0 };
    pub const PHI: ExactScalar = ExactScalar { a: 0, b: 1 };

    pub fn from_int(a: i64) -> Self {
        ExactScalar { a, b: 0 }
    }

    pub fn new(a: i64, b: i64) -> Self {
        ExactScalar { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar {
            a: self.a.checked_add(rhs.a).expect("scalar overflow"),
            b: self.b.checked_add(rhs.b).expect("scalar overflow"),
        }
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        ExactScalar {
            a: self.a.checked_sub(rhs.a).expect("scalar overflow"),
            b: self.b.checked_sub(rhs.b).expect("scalar overflow"),
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    /// `(a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi`.
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        let prod = |x: i64, y: i64| x.checked_mul(y).expect("scalar overflow");
        let bd = prod(self.b, rhs.b);
        ExactScalar {
            a: prod(self.a, rhs.a)
                .checked_add(bd)
                .expect("scalar overflow"),
            b: prod(self.a, rhs.b)
                .checked_add(prod(self.b, rhs.a))
                .and_then(|s| s.checked_add(bd))
                .expect("scalar overflow"),
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}p"),
            (a, b) if b > 0 => write!(f, "{a}+{b}p"),
            (a, b) => write!(f, "{a}{b}p"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_relation() {
        // phi^2 = phi + 1
        assert_eq!(
            ExactScalar::PHI * ExactScalar::PHI,
            ExactScalar::PHI + ExactScalar::ONE
        );
    }

    #[test]
    fn ring_laws_spot_check() {
        let x = ExactScalar::new(2, -1);
        let y = ExactScalar::new(-3, 4);
        let z = ExactScalar::new(1, 1);
        assert_eq!(x * (y + z), x * y + x * z);
        assert_eq!(x * y, y * x);
        assert_eq!((x * y) * z, x * (y * z));
        assert_eq!(x + (-x), ExactScalar::ZERO);
        assert_eq!(x * ExactScalar::ONE, x);
    }

    #[test]
    fn rational_part_is_closed() {
        let x = ExactScalar::from_int(3);
        let y = ExactScalar::from_int(-7);
        assert!((x * y).is_rational());
        assert!((x + y).is_rational());
    }
}
