use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Sparse Laurent polynomial over the integers: exponent -> coefficient,
/// zero coefficients never stored. Distributions are the special case with
/// nonnegative coefficients summing to the universe size.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn from_counts(counts: BTreeMap<i64, u64>) -> Self {
        LaurentPoly {
            coeffs: counts
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(e, c)| (e, BigInt::from(c)))
                .collect(),
        }
    }

    pub fn set(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            self.coeffs.remove(&exponent);
        } else {
            self.coeffs.insert(exponent, coefficient);
        }
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Sum of all coefficients (the universe size, for a distribution).
    pub fn total_mass(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Palindromy about `degree/2` for a polynomial with nonnegative
    /// exponents: `coeff(e) == coeff(degree - e)` for all `e`.
    pub fn is_reciprocal(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.min_exponent().unwrap() < 0 {
            return false;
        }
        let degree = self.max_exponent().unwrap();
        (0..=degree).all(|e| self.coeff(e) == self.coeff(degree - e))
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders like `1+2q+2q^2+q^3`; negative exponents as `q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            if *e == 0 {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    var: String,
    terms: BTreeMap<String, String>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LaurentJson {
            var: "q".to_string(),
            terms: self
                .coeffs
                .iter()
                .map(|(e, c)| (e.to_string(), c.to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = LaurentJson::deserialize(deserializer)?;
        let mut poly = LaurentPoly::zero();
        for (e, c) in raw.terms {
            let exponent: i64 = e
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{e}`")))?;
            let coefficient: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            poly.set(exponent, coefficient);
        }
        Ok(poly)
    }
}

/// Sparse bivariate Laurent polynomial; exponent pairs `(e_q, e_t)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn from_counts(counts: BTreeMap<(i64, i64), u64>) -> Self {
        BivariatePoly {
            coeffs: counts
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(e, c)| (e, BigInt::from(c)))
                .collect(),
        }
    }

    pub fn set(&mut self, exponents: (i64, i64), coefficient: BigInt) {
        if coefficient.is_zero() {
            self.coeffs.remove(&exponents);
        } else {
            self.coeffs.insert(exponents, coefficient);
        }
    }

    pub fn coeff(&self, exponents: (i64, i64)) -> BigInt {
        self.coeffs.get(&exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// The distribution with the two variables swapped.
    pub fn transpose(&self) -> BivariatePoly {
        BivariatePoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    pub fn is_swap_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&(a, b), c)| self.coeff((b, a)) == *c)
    }

    /// Marginal in the first variable.
    pub fn marginal_q(&self) -> LaurentPoly {
        let mut poly = LaurentPoly::zero();
        for (&(a, _), c) in &self.coeffs {
            let cur = poly.coeff(a);
            poly.set(a, cur + c);
        }
        poly
    }

    /// Marginal in the second variable.
    pub fn marginal_t(&self) -> LaurentPoly {
        let mut poly = LaurentPoly::zero();
        for (&(_, b), c) in &self.coeffs {
            let cur = poly.coeff(b);
            poly.set(b, cur + c);
        }
        poly
    }

    pub fn total_mass(&self) -> BigInt {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(a, b), c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            if !c.is_one() || (a, b) == (0, 0) {
                write!(f, "{c}")?;
            }
            if a != 0 {
                if a == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{a}")?;
                }
            }
            if b != 0 {
                if b == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{b}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct BivariateJson {
    vars: [String; 2],
    terms: BTreeMap<String, String>,
}

impl Serialize for BivariatePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BivariateJson {
            vars: ["q".to_string(), "t".to_string()],
            terms: self
                .coeffs
                .iter()
                .map(|(&(a, b), c)| (format!("{a},{b}"), c.to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariatePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BivariateJson::deserialize(deserializer)?;
        let mut poly = BivariatePoly::zero();
        for (e, c) in raw.terms {
            let (a, b) = e
                .split_once(',')
                .ok_or_else(|| D::Error::custom(format!("bad exponent pair `{e}`")))?;
            let ea: i64 = a
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{a}`")))?;
            let eb: i64 = b
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{b}`")))?;
            let coefficient: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            poly.set((ea, eb), coefficient);
        }
        Ok(poly)
    }
}

/// Formats an exact rational as `p/q` (denominator always written).
pub fn rational_string(r: &num::BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the `p/q` form; a bare integer is read as `p/1`.
pub fn parse_rational(text: &str) -> crate::Result<num::BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let numer: BigInt = num
        .parse()
        .map_err(|_| crate::Error::Parse(format!("bad numerator `{num}`")))?;
    let denom: BigInt = den
        .parse()
        .map_err(|_| crate::Error::Parse(format!("bad denominator `{den}`")))?;
    if denom.is_zero() {
        return Err(crate::Error::Parse("zero denominator".to_string()));
    }
    Ok(num::BigRational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(e, c) in terms {
            p.set(e, BigInt::from(c));
        }
        p
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            poly(&[(0, 1), (1, 2), (2, 2), (3, 1)]).to_string(),
            "1+2q+2q^2+q^3"
        );
        assert_eq!(poly(&[(-1, 1), (0, 3)]).to_string(), "q^-1+3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn reciprocal_detection() {
        assert!(poly(&[(0, 1), (1, 2), (2, 2), (3, 1)]).is_reciprocal());
        assert!(!poly(&[(0, 1), (1, 1), (3, 1)]).is_reciprocal());
        assert!(!poly(&[(-1, 1), (0, 1), (1, 1)]).is_reciprocal());
        assert!(!poly(&[(1, 1), (2, 1)]).is_reciprocal());
    }

    #[test]
    fn json_round_trip() {
        let p = poly(&[(-2, 3), (0, 1), (5, 7)]);
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains("\"var\":\"q\""));
        let back: LaurentPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn bivariate_transpose_and_marginals() {
        let mut b = BivariatePoly::zero();
        b.set((0, 0), BigInt::from(1));
        b.set((1, 2), BigInt::from(2));
        b.set((2, 1), BigInt::from(2));
        assert!(b.is_swap_symmetric());
        assert_eq!(b.transpose(), b);
        b.set((3, 0), BigInt::from(1));
        assert!(!b.is_swap_symmetric());
        assert_eq!(b.marginal_q(), poly(&[(0, 1), (1, 2), (2, 2), (3, 1)]));
        assert_eq!(b.marginal_t(), poly(&[(0, 2), (1, 2), (2, 2)]));

        let text = serde_json::to_string(&b).unwrap();
        let back: BivariatePoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn rational_text() {
        let r = num::BigRational::new(BigInt::from(22303), BigInt::from(420));
        assert_eq!(rational_string(&r), "22303/420");
        assert_eq!(parse_rational("22303/420").unwrap(), r);
        assert_eq!(
            parse_rational("5").unwrap(),
            num::BigRational::new(BigInt::from(5), BigInt::from(1))
        );
        assert!(parse_rational("1/0").is_err());
    }
}
