//! Monomials `x^a` over a fixed number of variables.
//!
//! Exponents are `u32`; every operation that can grow an exponent uses checked
//! arithmetic and panics with a diagnostic on overflow instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{check_dim, Error, Result};

pub type Exponents = SmallVec<[u32; 8]>;

/// An exponent vector. Ordered graded-lexicographically with `x1 < x2 < ... < xd`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Exponents,
}

fn overflow(op: &str) -> ! {
    panic!("exponent overflow in monomial {op}")
}

impl Monomial {
    pub fn new<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    /// The monomial `1` in `vars` variables.
    pub fn one(vars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; vars],
        }
    }

    /// The variable `x_{index+1}` (0-based index).
    pub fn var(index: usize, vars: usize) -> Self {
        let mut m = Self::one(vars);
        m.exps[index] = 1;
        m
    }

    /// `x1 x2 ... xd`.
    pub fn all_ones(vars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![1; vars],
        }
    }

    /// The square-free monomial on the variables set in `mask`.
    pub fn from_support(mask: u64, vars: usize) -> Self {
        Self::new((0..vars).map(|i| ((mask >> i) & 1) as u32))
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Degree restricted to the variables in `mask`.
    pub fn degree_on(&self, mask: u64) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i) & 1 == 1)
            .map(|(_, &e)| e as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Bit set of variables with positive exponent. Requires at most 64 variables.
    pub fn support(&self) -> u64 {
        assert!(self.vars() <= 64, "support mask needs at most 64 variables");
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    /// Entrywise `self <= other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.vars(), other.vars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn checked_divides(&self, other: &Monomial) -> Result<bool> {
        check_dim(self.vars(), other.vars())?;
        Ok(self.divides(other))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).unwrap_or_else(|| overflow("product"))),
        )
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    /// `x^{m a}`.
    pub fn scale(&self, m: u32) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .map(|a| a.checked_mul(m).unwrap_or_else(|| overflow("scaling"))),
        )
    }

    /// `x^{ceil(a / m)}` entrywise.
    pub fn ceil_div(&self, m: u32) -> Monomial {
        assert!(m > 0, "ceiling division by zero");
        Monomial::new(self.exps.iter().map(|a| a.div_ceil(m)))
    }

    /// Parses `x1^2*x3` style text; `1` is the unit monomial.
    pub fn parse(text: &str, vars: usize) -> Result<Monomial> {
        let mut m = Monomial::one(vars);
        let text = text.trim();
        if text == "1" {
            return Ok(m);
        }
        if text.is_empty() {
            return Err(Error::Malformed("empty monomial".into()));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Malformed(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let index = var
                .strip_prefix('x')
                .and_then(|i| i.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::Malformed(format!("bad variable `{var}`")))?;
            if index > vars {
                return Err(Error::Malformed(format!(
                    "variable x{index} out of range for {vars} variables"
                )));
            }
            m.exps[index - 1] = m.exps[index - 1]
                .checked_add(exp)
                .unwrap_or_else(|| overflow("parsing"));
        }
        Ok(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses with the smallest variable count that fits the text.
    fn from_str(s: &str) -> Result<Self> {
        let vars = s
            .split('*')
            .filter_map(|f| f.trim().split('^').next())
            .filter_map(|v| v.strip_prefix('x').and_then(|i| i.parse::<usize>().ok()))
            .max()
            .unwrap_or(0);
        Monomial::parse(s, vars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m = Monomial::parse("x1^2*x3", 3).unwrap();
        assert_eq!(m.exponents(), &[2, 0, 1]);
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(Monomial::parse("1", 2).unwrap(), Monomial::one(2));
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("y1", 3).is_err());
        assert!(Monomial::parse("x0", 3).is_err());
        assert!(Monomial::parse("", 3).is_err());
        assert_eq!("x2*x5".parse::<Monomial>().unwrap().vars(), 5);
    }

    #[test]
    fn grlex_order() {
        let x = |s: &str| Monomial::parse(s, 3).unwrap();
        assert!(x("x1") < x("x2"));
        assert!(x("x3") < x("x1*x2"));
        assert!(x("x1*x2") < x("x2*x3"));
        assert!(x("x1^2") < x("x1*x2"));
    }

    #[test]
    fn ceil_div_rounds_up() {
        let m = Monomial::new([2, 3, 0]);
        assert_eq!(m.ceil_div(2), Monomial::new([1, 2, 0]));
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_panics() {
        Monomial::new([u32::MAX]).mul(&Monomial::new([1]));
    }
}
