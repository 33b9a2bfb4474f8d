//! Clutters, their minors, and the König and packed properties.

mod mfmc;
mod program;

pub use mfmc::{
    automorphisms, mfmc_check, sweep_rows, FailingWeight, MfmcOptions, MfmcReport, SweepRow, DEFAULT_SWEEP_BUDGET,
};
pub use program::{
    cover_number, gamma, gamma_brute_force, matching_number, membership_via_lp, packs_for, sigma,
    sigma_brute_force, CoverPackingResult, Optimum,
};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub const MAX_VERTICES: usize = 64;

fn edge_key(mask: u64) -> (u32, Vec<u32>) {
    (mask.count_ones(), (0..64).filter(|i| (mask >> i) & 1 == 1).collect())
}

/// A family of pairwise inclusion-incomparable subsets of `{0, .., vertices-1}`.
///
/// Edges are bit masks sorted by size and then by their index lists. The only
/// clutter containing the empty edge is the unit clutter `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ClutterJson", into = "ClutterJson")]
pub struct Clutter {
    vertices: usize,
    edges: Vec<u64>,
}

/// On-disk form with 1-based vertices: `{"vertices": n, "edges": [[1,2],[2,3]]}`.
#[derive(Serialize, Deserialize)]
struct ClutterJson {
    vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<ClutterJson> for Clutter {
    type Error = Error;

    fn try_from(raw: ClutterJson) -> Result<Self> {
        let mut edges = Vec::with_capacity(raw.edges.len());
        for e in raw.edges {
            let mut mask = 0u64;
            for v in e {
                if v == 0 || v > raw.vertices {
                    return Err(Error::Malformed(format!(
                        "vertex {v} outside 1..={}",
                        raw.vertices
                    )));
                }
                mask |= 1 << (v - 1);
            }
            edges.push(mask);
        }
        Clutter::new(raw.vertices, edges)
    }
}

impl From<Clutter> for ClutterJson {
    fn from(c: Clutter) -> Self {
        ClutterJson {
            vertices: c.vertices,
            edges: c
                .edges
                .iter()
                .map(|&e| (0..c.vertices).filter(|i| (e >> i) & 1 == 1).map(|i| i + 1).collect())
                .collect(),
        }
    }
}

/// Drops duplicates and every edge containing another edge.
fn minimal_edges(mut edges: Vec<u64>) -> Vec<u64> {
    edges.sort_by_key(|&e| edge_key(e));
    edges.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(edges.len());
    for e in edges {
        if !kept.iter().any(|&k| k & e == k) {
            kept.push(e);
        }
    }
    kept
}

/// An assignment of vertices to 0 (deletion) or 1 (contraction).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MinorSpec {
    pub zeros: u64,
    pub ones: u64,
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |mask: u64| {
            (0..64)
                .filter(|i| (mask >> i) & 1 == 1)
                .map(|i| format!("{}", i + 1))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "zeros={{{}}} ones={{{}}}", list(self.zeros), list(self.ones))
    }
}

impl Clutter {
    /// Builds a clutter, rejecting comparable or repeated edges.
    pub fn new(vertices: usize, edges: Vec<u64>) -> Result<Self> {
        if vertices > MAX_VERTICES {
            return Err(Error::Domain(format!("at most {MAX_VERTICES} vertices")));
        }
        let universe = if vertices == 64 { u64::MAX } else { (1u64 << vertices) - 1 };
        if edges.iter().any(|&e| e & !universe != 0) {
            return Err(Error::Malformed("edge outside the vertex set".into()));
        }
        let len = edges.len();
        let minimal = minimal_edges(edges);
        if minimal.len() != len {
            return Err(Error::Malformed(
                "edges must be distinct and pairwise incomparable".into(),
            ));
        }
        Ok(Clutter {
            vertices,
            edges: minimal,
        })
    }

    /// Keeps the inclusion-minimal members of an arbitrary family.
    pub fn from_family(vertices: usize, edges: Vec<u64>) -> Result<Self> {
        Clutter::new(vertices, minimal_edges(edges))
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The clutter `{∅}` of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.edges == [0]
    }

    /// Column `e` of the incidence matrix `M` is the indicator of edge `e`.
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.vertices)
            .map(|v| self.edges.iter().map(|&e| ((e >> v) & 1) as u8).collect())
            .collect()
    }

    /// Clutter of generator supports of a square-free ideal.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::Domain("clutters come from square-free ideals".into()));
        }
        if ideal.vars() > MAX_VERTICES {
            return Err(Error::Domain(format!("at most {MAX_VERTICES} vertices")));
        }
        Clutter::new(
            ideal.vars(),
            ideal.generators().iter().map(Monomial::support).collect(),
        )
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::normalize(
            self.edges
                .iter()
                .map(|&e| Monomial::from_support(e, self.vertices))
                .collect(),
            self.vertices,
        )
        .expect("edges fit the vertex count")
    }

    /// Sets the `zeros` vertices to 0 and the `ones` vertices to 1.
    ///
    /// Remaining vertices are renumbered in increasing order. A contraction
    /// that empties an edge yields the unit clutter.
    pub fn minor(&self, spec: MinorSpec) -> Result<Clutter> {
        if spec.zeros & spec.ones != 0 {
            return Err(Error::Domain("a vertex cannot be set to both 0 and 1".into()));
        }
        let removed = spec.zeros | spec.ones;
        let kept: Vec<usize> = (0..self.vertices).filter(|i| (removed >> i) & 1 == 0).collect();
        let relabel = |e: u64| {
            kept.iter()
                .enumerate()
                .filter(|(_, &old)| (e >> old) & 1 == 1)
                .fold(0u64, |acc, (new, _)| acc | (1 << new))
        };
        let edges: Vec<u64> = self
            .edges
            .iter()
            .filter(|&&e| e & spec.zeros == 0)
            .map(|&e| relabel(e & !spec.ones))
            .collect();
        Clutter::from_family(kept.len(), edges)
    }

    /// Matching number equals cover number. The unit clutter counts as König.
    pub fn is_konig(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        cover_number(self) == matching_number(self)
    }

    /// Tests every minor for the König property, `3^n` assignments in order of
    /// their base-3 codes (digit `i` for vertex `i`: free, 0, 1).
    pub fn is_packed(&self, max_vertices: usize) -> Result<Option<MinorSpec>> {
        if self.vertices > max_vertices {
            return Err(Error::Budget {
                what: "packing check vertices".into(),
                needed: self.vertices as u128,
                budget: max_vertices as u128,
            });
        }
        let mut memo: HashMap<Clutter, bool> = HashMap::new();
        let total = 3u64.pow(self.vertices as u32);
        for code in 0..total {
            let mut spec = MinorSpec { zeros: 0, ones: 0 };
            let mut c = code;
            for v in 0..self.vertices {
                match c % 3 {
                    1 => spec.zeros |= 1 << v,
                    2 => spec.ones |= 1 << v,
                    _ => {}
                }
                c /= 3;
            }
            let minor = self.minor(spec)?;
            let konig = *memo.entry(minor).or_insert_with_key(|m| m.is_konig());
            if !konig {
                return Ok(Some(spec));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, edges [", self.vertices)?;
        for (i, &e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let names: Vec<String> = (0..self.vertices)
                .filter(|v| (e >> v) & 1 == 1)
                .map(|v| (v + 1).to_string())
                .collect();
            write!(f, "{{{}}}", names.join(","))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |acc, v| acc | (1 << (v - 1)))
    }

    #[test]
    fn ideal_round_trip() {
        let i = MonomialIdeal::parse("x1*x2, x2*x3", 3).unwrap();
        let c = Clutter::from_ideal(&i).unwrap();
        assert_eq!(c.edges(), &[set(&[1, 2]), set(&[2, 3])]);
        assert_eq!(c.to_ideal(), i);
        assert_eq!(Clutter::from_ideal(&fixtures::cycle(5)).unwrap(), fixtures::cycle_clutter(5));
        assert!(Clutter::from_ideal(&MonomialIdeal::parse("x1^2", 1).unwrap()).is_err());
    }

    #[test]
    fn rejects_comparable_edges() {
        assert!(Clutter::new(3, vec![set(&[1]), set(&[1, 2])]).is_err());
        assert!(Clutter::new(2, vec![set(&[3])]).is_err());
    }

    #[test]
    fn json_format() {
        let c: Clutter = serde_json::from_str(r#"{"vertices":3,"edges":[[2,3],[1,2]]}"#).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"vertices":3,"edges":[[1,2],[2,3]]}"#);
        assert!(serde_json::from_str::<Clutter>(r#"{"vertices":2,"edges":[[0,1]]}"#).is_err());
    }

    #[test]
    fn incidence_matrix_columns_are_edges() {
        let c = fixtures::path_clutter(3);
        assert_eq!(c.incidence_matrix(), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn minor_examples() {
        let triangle = fixtures::cycle_clutter(3);
        let deleted = triangle.minor(MinorSpec { zeros: set(&[3]), ones: 0 }).unwrap();
        assert_eq!(deleted, Clutter::new(2, vec![set(&[1, 2])]).unwrap());
        let contracted = triangle.minor(MinorSpec { zeros: 0, ones: set(&[3]) }).unwrap();
        assert_eq!(contracted, Clutter::new(2, vec![set(&[1]), set(&[2])]).unwrap());
        assert_eq!(triangle.minor(MinorSpec { zeros: 0, ones: 0 }).unwrap(), triangle);
        assert!(triangle.minor(MinorSpec { zeros: 1, ones: 1 }).is_err());
        let single = Clutter::new(2, vec![set(&[1, 2])]).unwrap();
        let unit = single.minor(MinorSpec { zeros: 0, ones: set(&[1, 2]) }).unwrap();
        assert!(unit.is_unit());
        assert!(unit.is_konig());
    }

    #[test]
    fn konig_examples() {
        assert!(!fixtures::cycle_clutter(3).is_konig());
        assert!(fixtures::path_clutter(3).is_konig());
        assert!(Clutter::new(4, vec![]).unwrap().is_konig());
        assert!(!fixtures::cycle_clutter(5).is_konig());
    }

    #[test]
    fn packed_examples() {
        assert_eq!(
            fixtures::cycle_clutter(3).is_packed(12).unwrap(),
            Some(MinorSpec { zeros: 0, ones: 0 })
        );
        assert_eq!(fixtures::path_clutter(3).is_packed(12).unwrap(), None);
        // The identity minor of C5 has cover number 3 and matching number 2.
        assert_eq!(
            fixtures::cycle_clutter(5).is_packed(12).unwrap(),
            Some(MinorSpec { zeros: 0, ones: 0 })
        );
        assert_eq!(Clutter::new(2, vec![set(&[1, 2])]).unwrap().is_packed(12).unwrap(), None);
        assert!(fixtures::cycle_clutter(5).is_packed(4).is_err());
    }
}
