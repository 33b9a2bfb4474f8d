//! Regularity, depth and a-invariants of `R/J`.

use std::fmt;

use serde::{Serialize, Serializer};

use super::betti::{betti_numbers, require_proper_nonzero, BettiTable};
use super::field::{Field, FieldChar, PrimeField, Rationals};
use super::resolution::Resolution;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::symbolic::height;

/// An integer degree or `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(v) => Some(v),
            Degree::NegInfinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(v) => write!(f, "{v}"),
            Degree::NegInfinity => f.write_str("-inf"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Degree::Finite(v) => s.serialize_i64(*v),
            Degree::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

/// Homological data of `R/J` over a field of the given characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalSummary {
    pub vars: usize,
    pub field_char: FieldChar,
    /// Krull dimension of `R/J`.
    pub dim: usize,
    /// `reg(R/J)` from the Betti table.
    pub reg: i64,
    pub pd: usize,
    /// `d - pd`.
    pub depth: usize,
    /// `a_i(R/J)` for `0 <= i <= dim`.
    pub a_invariants: Vec<Degree>,
    /// `α(J)`.
    pub alpha: u64,
}

impl HomologicalSummary {
    /// `max { a_i + i }` over the finite a-invariants.
    pub fn reg_from_a_invariants(&self) -> i64 {
        self.a_invariants
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.finite().map(|v| v + i as i64))
            .max()
            .expect("H^dim(R/J) never vanishes")
    }

    /// Least `i` with `a_i != -∞`.
    pub fn depth_from_a_invariants(&self) -> usize {
        self.a_invariants
            .iter()
            .position(|a| a.is_finite())
            .expect("H^dim(R/J) never vanishes")
    }

    /// Both regularity and depth agree between the two computations.
    pub fn is_consistent(&self) -> bool {
        self.reg == self.reg_from_a_invariants() && self.depth == self.depth_from_a_invariants()
    }
}

fn a_invariants_over<F: Field>(field: &F, ideal: &MonomialIdeal, table: &BettiTable, dim: usize) -> Vec<Degree> {
    let d = ideal.vars();
    let resolution = Resolution::build(field, ideal, Some(table));
    let tops = resolution.ext_top_degrees();
    // Local duality: H^i_m(R/J)_a is dual to Ext^{d-i}(R/J, R)_{-a-1}.
    (0..=dim)
        .map(|i| match tops[d - i] {
            Some(top) => Degree::Finite(top as i64 - d as i64),
            None => Degree::NegInfinity,
        })
        .collect()
}

/// Betti-based `reg`, `pd`, `depth`, duality-based a-invariants, and `α`.
pub fn summary(ideal: &MonomialIdeal, ch: FieldChar) -> Result<HomologicalSummary> {
    let table = betti_numbers(ideal, ch)?;
    summary_with_table(ideal, ch, &table)
}

/// As [`summary`], reusing an already computed Betti table of `J`.
pub fn summary_with_table(ideal: &MonomialIdeal, ch: FieldChar, table: &BettiTable) -> Result<HomologicalSummary> {
    require_proper_nonzero(ideal)?;
    let d = ideal.vars();
    let dim = d - height(ideal)?;
    let a_invariants = if ch.is_zero() {
        a_invariants_over(&Rationals, ideal, table, dim)
    } else {
        a_invariants_over(&PrimeField::new(ch.value())?, ideal, table, dim)
    };
    let pd = table.pd_quotient();
    Ok(HomologicalSummary {
        vars: d,
        field_char: ch,
        dim,
        reg: table.reg_quotient(),
        pd,
        depth: d - pd,
        a_invariants,
        alpha: ideal.alpha()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::simplicial::{reduced_homology_ranks, SimplicialComplex};
    use crate::symbolic::symbolic_power;
    use crate::fixtures;

    fn ideal(text: &str, vars: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, vars).unwrap()
    }

    /// `a_i(R/J)` from the simplicial description of `H^i_m(R/J)_a`: with
    /// `G = {j : a_j < 0}`, the complex of `F ⊆ [d] \ G` such that every
    /// generator `u` has some `j ∉ F ∪ G` with `u_j > a_j` computes the degree
    /// `a` piece as its `(i - |G| - 1)`-th reduced homology. Negative
    /// coordinates only matter through their sign, and coordinates at or above
    /// the largest exponent of `x_j` give zero.
    fn a_invariants_oracle(j: &MonomialIdeal, dim: usize) -> Vec<Degree> {
        let d = j.vars();
        let rho: Vec<i64> = (0..d)
            .map(|v| j.generators().iter().map(|g| g.exponents()[v] as i64).max().unwrap())
            .collect();
        let mut best = vec![Degree::NegInfinity; d + 1];
        let mut a: Vec<i64> = vec![-1; d];
        loop {
            let g_mask: u64 = (0..d).filter(|&v| a[v] < 0).fold(0, |m, v| m | (1 << v));
            let free: u64 = ((1u64 << d) - 1) & !g_mask;
            let mut faces = Vec::new();
            let mut f = free;
            loop {
                let outside = free & !f;
                let ok = j
                    .generators()
                    .iter()
                    .all(|u| (0..d).any(|v| (outside >> v) & 1 == 1 && u.exponents()[v] as i64 > a[v]));
                if ok {
                    faces.push(f);
                }
                if f == 0 {
                    break;
                }
                f = (f - 1) & free;
            }
            if !faces.is_empty() {
                let complex = SimplicialComplex::from_faces(d, faces);
                let ranks = reduced_homology_ranks(&complex, FieldChar::RATIONALS).unwrap();
                let shift = g_mask.count_ones() as i64 + 1;
                let deg = Degree::Finite(a.iter().sum());
                for (k, r) in ranks {
                    let i = k + shift;
                    if r > 0 && (0..=d as i64).contains(&i) && deg > best[i as usize] {
                        best[i as usize] = deg;
                    }
                }
            }
            // Next a in the box {-1..rho_j - 1}.
            let mut v = 0;
            while v < d && a[v] == rho[v] - 1 {
                a[v] = -1;
                v += 1;
            }
            if v == d {
                break;
            }
            a[v] += 1;
        }
        best.truncate(dim + 1);
        best
    }

    #[test]
    fn residue_field() {
        let s = summary(&ideal("x1, x2", 2), FieldChar::RATIONALS).unwrap();
        assert_eq!((s.depth, s.reg, s.dim), (0, 0, 0));
        assert_eq!(s.a_invariants, vec![Degree::Finite(0)]);
        assert!(s.is_consistent());
    }

    #[test]
    fn principal_ideals() {
        for k in 1..=3usize {
            let text: Vec<String> = (1..=k).map(|v| format!("x{v}")).collect();
            let s = summary(&ideal(&text.join("*"), 4), FieldChar::RATIONALS).unwrap();
            assert_eq!((s.pd, s.depth, s.reg), (1, 3, k as i64 - 1));
            assert!(s.is_consistent());
        }
    }

    #[test]
    fn matches_local_cohomology_oracle() {
        let cases = [
            ideal("x1*x2, x2*x3, x3*x4, x1*x4", 4),
            ideal("x1^2*x2, x2^2*x3, x1*x3^2", 3),
            ideal("x1*x2, x1*x3, x2*x3", 3),
            ideal("x1*x2, x3*x4", 4),
            ideal("x1^2, x1*x2, x2^3", 3),
        ];
        for j in cases {
            let s = summary(&j, FieldChar::RATIONALS).unwrap();
            assert_eq!(s.a_invariants, a_invariants_oracle(&j, s.dim), "{j}");
            assert!(s.is_consistent(), "{j}");
        }
    }

    #[test]
    fn c5_symbolic_powers() {
        let c5 = fixtures::cycle(5);
        for n in 1..=3 {
            let j = symbolic_power(&c5, n).unwrap();
            let s = summary(&j, FieldChar::RATIONALS).unwrap();
            assert_eq!(s.dim, 2);
            assert!(s.is_consistent(), "n = {n}");
            assert_eq!(s.a_invariants, a_invariants_oracle(&j, s.dim), "n = {n}");
        }
    }

    #[test]
    fn prime_characteristic_summary() {
        let j = fixtures::cycle(5);
        let q = summary(&j, FieldChar::RATIONALS).unwrap();
        let f2 = summary(&j, FieldChar::new(2).unwrap()).unwrap();
        assert_eq!(q.a_invariants, f2.a_invariants);
        assert_eq!(q.reg, f2.reg);
    }

    #[test]
    fn degree_rendering() {
        assert_eq!(Degree::NegInfinity.to_string(), "-inf");
        assert_eq!(serde_json::to_string(&vec![Degree::Finite(-2), Degree::NegInfinity]).unwrap(), r#"[-2,"-inf"]"#);
        assert!(Degree::NegInfinity < Degree::Finite(-100));
    }
}
