//! Monomial ideals stored by their canonical minimal generating set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal in `vars` variables.
///
/// `generators` is always the minimal generating set, sorted ascending in
/// graded-lexicographic order, so two ideals are equal iff their values are.
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    vars: usize,
    generators: Vec<Monomial>,
}

/// On-disk form: `{"vars": d, "generators": [[e1, ..., ed], ...]}`.
#[derive(Serialize, Deserialize)]
struct IdealJson {
    vars: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(raw: IdealJson) -> Result<Self> {
        MonomialIdeal::normalize(
            raw.generators.into_iter().map(Monomial::new).collect(),
            raw.vars,
        )
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealJson {
            vars: ideal.vars,
            generators: ideal
                .generators
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }
}

/// Sorts, deduplicates and drops every monomial divisible by another one.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // kept[..lower] holds the generators of strictly smaller degree than the candidate;
    // an equal-degree divisor would be the candidate itself.
    let mut lower = 0;
    let mut current_degree = None;
    for g in gens {
        let deg = g.degree();
        if current_degree != Some(deg) {
            current_degree = Some(deg);
            lower = kept.len();
        }
        if !kept[..lower].iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Canonical minimal sorted generating set of the ideal generated by `gens`.
    pub fn normalize(gens: Vec<Monomial>, vars: usize) -> Result<Self> {
        for g in &gens {
            check_dim(vars, g.vars())?;
        }
        Ok(MonomialIdeal {
            vars,
            generators: minimalize(gens),
        })
    }

    /// Parses comma-separated `x1*x2, x2^3*x4` text; an empty string is the zero ideal.
    pub fn parse(text: &str, vars: usize) -> Result<Self> {
        let gens = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Monomial::parse(s, vars))
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(gens, vars)
    }

    pub fn zero(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            generators: Vec::new(),
        }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal {
            vars,
            generators: vec![Monomial::one(vars)],
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// `μ(I)`, the minimal number of generators.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn contains_monomial(&self, a: &Monomial) -> Result<bool> {
        check_dim(self.vars, a.vars())?;
        Ok(self.contains_unchecked(a))
    }

    pub(crate) fn contains_unchecked(&self, a: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(a))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.vars, other.vars)?;
        Ok(self.generators.iter().all(|g| other.contains_unchecked(g)))
    }

    /// First generator of `self` (in canonical order) outside `other`.
    pub fn first_outside(&self, other: &MonomialIdeal) -> Result<Option<Monomial>> {
        check_dim(self.vars, other.vars)?;
        Ok(self
            .generators
            .iter()
            .find(|g| !other.contains_unchecked(g))
            .cloned())
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.vars, other.vars)?;
        let mut gens = Vec::with_capacity(self.mu() * other.mu());
        for g in &self.generators {
            for h in &other.generators {
                gens.push(g.mul(h));
            }
        }
        Ok(MonomialIdeal {
            vars: self.vars,
            generators: minimalize(gens),
        })
    }

    /// `I^n` by binary exponentiation; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut result = MonomialIdeal::unit(self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.multiply(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.multiply(&base).expect("same ring");
            }
        }
        result
    }

    /// `I^[m]`, generated by the m-th powers of the minimal generators.
    pub fn bracket_power(&self, m: u32) -> Result<MonomialIdeal> {
        if m == 0 {
            return Err(Error::Domain("bracket power needs m >= 1".into()));
        }
        // Scaling preserves both minimality and the grlex order.
        Ok(MonomialIdeal {
            vars: self.vars,
            generators: self.generators.iter().map(|g| g.scale(m)).collect(),
        })
    }

    /// `I ∩ J` from pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.vars, other.vars)?;
        let mut gens = Vec::with_capacity(self.mu() * other.mu());
        for g in &self.generators {
            for h in &other.generators {
                gens.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal {
            vars: self.vars,
            generators: minimalize(gens),
        })
    }

    /// `I ∩ Q^n` where `Q` is the prime generated by the variables in `support`.
    ///
    /// The multiples of `g` lying in `Q^n` are generated by `g · x^c` with `c`
    /// supported on `support` of degree `n - deg_Q(g)`, so no lcm table is needed.
    pub fn intersect_prime_power(&self, support: u64, n: u32) -> MonomialIdeal {
        let support_vars: Vec<usize> = (0..self.vars).filter(|i| (support >> i) & 1 == 1).collect();
        let mut gens = Vec::new();
        for g in &self.generators {
            let have = g.degree_on(support);
            if have >= n as u64 {
                gens.push(g.clone());
                continue;
            }
            let missing = (n as u64 - have) as u32;
            for_each_composition(missing, support_vars.len(), &mut |parts| {
                let mut exps = g.exponents().to_vec();
                for (&v, &p) in support_vars.iter().zip(parts) {
                    exps[v] = exps[v]
                        .checked_add(p)
                        .expect("exponent overflow in symbolic power");
                }
                gens.push(Monomial::new(exps));
            });
        }
        MonomialIdeal {
            vars: self.vars,
            generators: minimalize(gens),
        }
    }

    /// `α(I)`: the least degree of a generator.
    pub fn alpha(&self) -> Result<u64> {
        self.generators
            .iter()
            .map(Monomial::degree)
            .min()
            .ok_or_else(|| Error::Domain("initial degree of the zero ideal".into()))
    }

    /// The radical, generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| Monomial::new(g.exponents().iter().map(|&e| e.min(1))))
            .collect();
        MonomialIdeal {
            vars: self.vars,
            generators: minimalize(gens),
        }
    }

    /// Least common multiple of all generators, or `None` for the zero ideal.
    pub fn lcm_of_generators(&self) -> Option<Monomial> {
        let mut it = self.generators.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.lcm(g)))
    }

    pub(crate) fn require_squarefree_proper(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::Domain("the zero ideal is not admitted here".into()));
        }
        if self.is_unit() {
            return Err(Error::Domain("the unit ideal is not admitted here".into()));
        }
        if !self.is_squarefree() {
            return Err(Error::Domain("the ideal is not square-free".into()));
        }
        Ok(())
    }
}

/// Calls `f` on every vector of `len` non-negative parts summing to `total`.
fn for_each_composition(total: u32, len: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(rest: u32, idx: usize, parts: &mut [u32], f: &mut dyn FnMut(&[u32])) {
        if idx + 1 == parts.len() {
            parts[idx] = rest;
            f(parts);
            return;
        }
        for p in (0..=rest).rev() {
            parts[idx] = p;
            rec(rest - p, idx + 1, parts, f);
        }
    }
    if len == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut parts = vec![0; len];
    rec(total, 0, &mut parts, f);
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
