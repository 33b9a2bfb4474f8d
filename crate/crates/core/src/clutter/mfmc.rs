//! Finite Max-Flow-Min-Cut verification.
//!
//! A clutter with `m` edges has the MFMC property iff it packs for every weight
//! vector `c <= ceil(m/2)·1`, so a sweep over that box decides it.

use rayon::prelude::*;
use serde::Serialize;

use super::program::{gamma, sigma};
use super::Clutter;
use crate::error::{Error, Result};

pub const DEFAULT_SWEEP_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, Debug)]
pub struct MfmcOptions {
    /// Largest number of weight vectors the sweep may visit.
    pub budget: u128,
    /// Only test vectors that are lexicographically least in their orbit under
    /// the clutter's automorphisms (at most 8 vertices).
    pub symmetry: bool,
}

impl Default for MfmcOptions {
    fn default() -> Self {
        MfmcOptions {
            budget: DEFAULT_SWEEP_BUDGET,
            symmetry: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingWeight {
    pub c: Vec<u64>,
    pub gamma: u64,
    pub sigma: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MfmcReport {
    pub holds: bool,
    /// `ceil(m/2)`, the per-coordinate bound of the sweep.
    pub bound: u64,
    pub box_size: u128,
    pub failing: Option<FailingWeight>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub c: Vec<u64>,
    pub gamma: u64,
    pub sigma: u64,
}

fn box_size(clutter: &Clutter) -> (u64, u128) {
    let bound = clutter.edge_count().div_ceil(2) as u64;
    let size = (bound as u128 + 1)
        .checked_pow(clutter.vertices() as u32)
        .unwrap_or(u128::MAX);
    (bound, size)
}

/// Weight vector number `index` in lexicographic order of `{0..=bound}^n`.
fn decode(index: u128, bound: u64, n: usize) -> Vec<u64> {
    let base = bound as u128 + 1;
    let mut c = vec![0u64; n];
    let mut rest = index;
    for slot in c.iter_mut().rev() {
        *slot = (rest % base) as u64;
        rest /= base;
    }
    c
}

fn guard(clutter: &Clutter, budget: u128) -> Result<(u64, u128)> {
    if clutter.is_unit() {
        return Err(Error::Domain("the unit clutter has no covering program".into()));
    }
    let (bound, size) = box_size(clutter);
    if size > budget {
        return Err(Error::Budget {
            what: "MFMC weight sweep (decide equality of powers instead)".into(),
            needed: size,
            budget,
        });
    }
    Ok((bound, size))
}

/// Vertex permutations preserving the edge set, by brute force over all `n!`.
pub fn automorphisms(clutter: &Clutter) -> Result<Vec<Vec<usize>>> {
    let n = clutter.vertices();
    if n > 8 {
        return Err(Error::Budget {
            what: "automorphism search vertices".into(),
            needed: n as u128,
            budget: 8,
        });
    }
    let mut edges: Vec<u64> = clutter.edges().to_vec();
    edges.sort_unstable();
    let mut found = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut image: Vec<u64> = edges
            .iter()
            .map(|&e| (0..n).filter(|v| (e >> v) & 1 == 1).fold(0u64, |acc, v| acc | (1 << p[v])))
            .collect();
        image.sort_unstable();
        if image == edges {
            found.push(p.to_vec());
        }
    });
    found.sort();
    Ok(found)
}

fn permutations(perm: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permutations(perm, k + 1, f);
        perm.swap(k, i);
    }
}

fn is_orbit_minimum(c: &[u64], group: &[Vec<usize>]) -> bool {
    group.iter().all(|p| {
        // Vertex v of c moves to p[v].
        let mut image = vec![0u64; c.len()];
        for (v, &w) in p.iter().enumerate() {
            image[w] = c[v];
        }
        image.as_slice() >= c
    })
}

/// Sweeps `c ∈ {0..=ceil(m/2)}^n`; reports the lexicographically first `c`
/// with `γ(c) != σ(c)`, independent of thread scheduling.
pub fn mfmc_check(clutter: &Clutter, options: MfmcOptions) -> Result<MfmcReport> {
    let (bound, size) = guard(clutter, options.budget)?;
    let n = clutter.vertices();
    let group = if options.symmetry {
        automorphisms(clutter)?
    } else {
        Vec::new()
    };
    let failing = (0..size as u64)
        .into_par_iter()
        .map(|idx| decode(idx as u128, bound, n))
        .filter(|c| group.is_empty() || is_orbit_minimum(c, &group))
        .map(|c| -> Result<Option<FailingWeight>> {
            let g = gamma(clutter, &c)?.value;
            let s = sigma(clutter, &c)?.value;
            Ok((g != s).then_some(FailingWeight { c, gamma: g, sigma: s }))
        })
        .find_first(|r| !matches!(r, Ok(None)))
        .transpose()?
        .flatten();
    Ok(MfmcReport {
        holds: failing.is_none(),
        bound,
        box_size: size,
        failing,
    })
}

/// Every `(c, γ(c), σ(c))` of the sweep box, in lexicographic order of `c`.
pub fn sweep_rows(clutter: &Clutter, budget: u128) -> Result<Vec<SweepRow>> {
    let (bound, size) = guard(clutter, budget)?;
    let n = clutter.vertices();
    (0..size as u64)
        .into_par_iter()
        .map(|idx| {
            let c = decode(idx as u128, bound, n);
            Ok(SweepRow {
                gamma: gamma(clutter, &c)?.value,
                sigma: sigma(clutter, &c)?.value,
                c,
            })
        })
        .collect()
}
