//! Multigraded Betti numbers of monomial ideals from upper Koszul complexes.
//!
//! `β_{i,b}(J) = dim H̃_{i-1}(K^b(J))` where `K^b(J)` is the complex of
//! square-free `σ <= b` with `x^{b-σ} ∈ J`. Only multidegrees in the lcm
//! lattice of the generators can carry nonzero Betti numbers.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::field::FieldChar;
use super::simplicial::{reduced_homology_ranks, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Multidegrees `lcm(S)` for all nonempty subsets `S` of the generators, sorted.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let gens = ideal.generators();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let l = a.lcm(g);
                if seen.insert(l.clone()) {
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Monomial> = seen.into_iter().collect();
    all.sort();
    all
}

/// The upper Koszul simplicial complex `K^b(J)`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    let d = ideal.vars();
    let support = b.support();
    let mut faces = Vec::new();
    let mut s = support;
    loop {
        let shifted = Monomial::new((0..d).map(|i| b.exponents()[i] - ((s >> i) & 1) as u32));
        if ideal.contains_unchecked(&shifted) {
            faces.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & support;
    }
    if faces.is_empty() {
        SimplicialComplex::void(d)
    } else {
        SimplicialComplex::from_faces(d, faces)
    }
}

/// Betti numbers `β_{i,b}(J)` of the ideal `J` (not of `R/J`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    vars: usize,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Nonzero `β_{i,b}(J)`.
    pub fn ideal_entries(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.entries
    }

    /// Nonzero `β_{i,b}(R/J)`: `β_{i+1,b}(R/J) = β_{i,b}(J)` and `β_{0,0}(R/J) = 1`.
    pub fn quotient_entries(&self) -> BTreeMap<(usize, Monomial), usize> {
        let mut out = BTreeMap::new();
        out.insert((0, Monomial::one(self.vars)), 1);
        for ((i, b), &r) in &self.entries {
            out.insert((i + 1, b.clone()), r);
        }
        out
    }

    /// Graded `β_{i,j}(R/J)`, summing over `|b| = j`.
    pub fn quotient_graded(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for ((i, b), r) in self.quotient_entries() {
            *out.entry((i, b.degree())).or_insert(0) += r;
        }
        out
    }

    /// Projective dimension of `R/J`.
    pub fn pd_quotient(&self) -> usize {
        self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0)
    }

    /// `reg(R/J) = max { j - i : β_{i,j}(R/J) != 0 }`.
    pub fn reg_quotient(&self) -> i64 {
        self.quotient_graded()
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .expect("β_{0,0}(R/J) = 1")
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// JSON export of the `R/J` table keyed by `"i,(b1,...,bd)"`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export {
            vars: usize,
            module: &'static str,
            entries: BTreeMap<String, usize>,
        }
        let entries = self
            .quotient_entries()
            .into_iter()
            .map(|((i, b), r)| {
                let exps: Vec<String> = b.exponents().iter().map(u32::to_string).collect();
                (format!("{i},({})", exps.join(",")), r)
            })
            .collect();
        serde_json::to_value(Export {
            vars: self.vars,
            module: "R/J",
            entries,
        })
        .expect("plain data serializes")
    }
}

pub(crate) fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Domain("homological invariants need a nonzero proper ideal".into()));
    }
    if ideal.vars() > 64 {
        return Err(Error::Domain("at most 64 variables are supported".into()));
    }
    Ok(())
}

/// Betti numbers of `J` via Hochster-type upper Koszul complexes.
pub fn betti_numbers(ideal: &MonomialIdeal, ch: FieldChar) -> Result<BettiTable> {
    require_proper_nonzero(ideal)?;
    let ch = FieldChar::new(ch.value())?;
    let lattice = lcm_lattice(ideal);
    let per_degree = lattice
        .par_iter()
        .map(|b| -> Result<Vec<((usize, Monomial), usize)>> {
            let complex = upper_koszul_complex(ideal, b);
            let ranks = reduced_homology_ranks(&complex, ch)?;
            Ok(ranks
                .into_iter()
                .filter(|&(_, r)| r > 0)
                .map(|(k, r)| (((k + 1) as usize, b.clone()), r))
                .collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiTable {
        vars: ideal.vars(),
        entries: per_degree.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str, vars: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, vars).unwrap()
    }

    fn binomial(n: u64, k: u64) -> usize {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as usize
    }

    #[test]
    fn koszul_tables() {
        for d in 2..=4 {
            let m = MonomialIdeal::normalize((0..d).map(|i| Monomial::var(i, d)).collect(), d).unwrap();
            let table = betti_numbers(&m, FieldChar::RATIONALS).unwrap();
            let graded = table.quotient_graded();
            let expected: BTreeMap<(usize, u64), usize> =
                (0..=d).map(|i| ((i, i as u64), binomial(d as u64, i as u64))).collect();
            assert_eq!(graded, expected);
            assert_eq!(table.pd_quotient(), d);
            assert_eq!(table.reg_quotient(), 0);
        }
    }

    #[test]
    fn path_syzygy() {
        let table = betti_numbers(&ideal("x1*x2, x2*x3", 3), FieldChar::RATIONALS).unwrap();
        let q = table.quotient_entries();
        assert_eq!(q.get(&(2, Monomial::new([1, 1, 1]))), Some(&1));
        assert_eq!(table.total(), 3);
    }

    #[test]
    fn generators_are_degree_zero_betti() {
        let i = ideal("x1^2*x2, x2*x3^3, x1*x3", 3);
        let table = betti_numbers(&i, FieldChar::RATIONALS).unwrap();
        let zero: Vec<Monomial> = table
            .ideal_entries()
            .iter()
            .filter(|((k, _), _)| *k == 0)
            .map(|((_, b), &r)| {
                assert_eq!(r, 1);
                b.clone()
            })
            .collect();
        assert_eq!(zero, i.generators());
        assert!(table.total() <= 1 << i.mu());
    }

    #[test]
    fn principal_ideal() {
        let table = betti_numbers(&ideal("x1*x2*x3", 4), FieldChar::RATIONALS).unwrap();
        assert_eq!(table.pd_quotient(), 1);
        assert_eq!(table.reg_quotient(), 2);
    }

    #[test]
    fn rejects_trivial_ideals() {
        assert!(betti_numbers(&MonomialIdeal::zero(2), FieldChar::RATIONALS).is_err());
        assert!(betti_numbers(&MonomialIdeal::unit(2), FieldChar::RATIONALS).is_err());
    }

    #[test]
    fn json_keys() {
        let table = betti_numbers(&ideal("x1, x2", 2), FieldChar::RATIONALS).unwrap();
        let json = table.to_json();
        assert_eq!(json["entries"]["0,(0,0)"], 1);
        assert_eq!(json["entries"]["2,(1,1)"], 1);
    }
}
