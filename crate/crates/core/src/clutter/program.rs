//! Exact integer covering and packing programs of a clutter.
//!
//! For weights `c >= 0`:
//!
//! * `γ(c) = min { c·x : x ∈ Z^n_{>=0}, M^T x >= 1 }`
//! * `σ(c) = max { 1·y : y ∈ Z^m_{>=0}, M y <= c }`
//!
//! `x^c ∈ I^(t)` iff `t <= γ(c)` and `x^c ∈ I^t` iff `t <= σ(c)`.

use serde::Serialize;

use super::Clutter;
use crate::error::{check_dim, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub value: u64,
    pub witness: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverPackingResult {
    pub gamma: u64,
    pub sigma: u64,
    pub cover_witness: Vec<u64>,
    pub packing_witness: Vec<u64>,
    pub packs: bool,
}

impl CoverPackingResult {
    pub fn compute(clutter: &Clutter, c: &[u64]) -> Result<Self> {
        let g = gamma(clutter, c)?;
        let s = sigma(clutter, c)?;
        Ok(CoverPackingResult {
            packs: g.value == s.value,
            gamma: g.value,
            sigma: s.value,
            cover_witness: g.witness,
            packing_witness: s.witness,
        })
    }
}

fn check_weights(clutter: &Clutter, c: &[u64]) -> Result<()> {
    check_dim(clutter.vertices(), c.len())?;
    if clutter.is_unit() {
        return Err(Error::Domain(
            "the unit clutter has an empty edge; covering is infeasible and packing unbounded".into(),
        ));
    }
    Ok(())
}

struct CoverSearch<'a> {
    edges: &'a [u64],
    /// Edges whose largest vertex is `v`, indexed by `v`.
    closing: Vec<Vec<u64>>,
    c: &'a [u64],
    best: u64,
    best_x: u64,
}

impl CoverSearch<'_> {
    /// Cost lower bound for the undecided vertices `>= from`: pairwise disjoint
    /// uncovered edges each need one of their own vertices.
    fn lower_bound(&self, chosen: u64, from: usize) -> u64 {
        let undecided = if from >= 64 { 0 } else { u64::MAX << from };
        let mut used = 0u64;
        let mut bound = 0;
        for &e in self.edges {
            if e & chosen != 0 || e & used != 0 {
                continue;
            }
            let open = e & undecided;
            bound += (0..64)
                .filter(|v| (open >> v) & 1 == 1)
                .map(|v| self.c[v])
                .min()
                .unwrap_or(0);
            used |= e;
        }
        bound
    }

    fn run(&mut self, v: usize, chosen: u64, cost: u64) {
        if v == self.c.len() {
            // Every edge was checked when its last vertex was decided.
            if cost < self.best {
                self.best = cost;
                self.best_x = chosen;
            }
            return;
        }
        // x_v = 0 first so the first optimum found is lexicographically least.
        for take in [false, true] {
            let chosen = if take { chosen | (1 << v) } else { chosen };
            let cost = if take { cost + self.c[v] } else { cost };
            if self.closing[v].iter().any(|&e| e & chosen == 0) {
                continue;
            }
            if cost + self.lower_bound(chosen, v + 1) >= self.best {
                continue;
            }
            self.run(v + 1, chosen, cost);
        }
    }
}

/// `γ(c)` with the lexicographically least optimal 0/1 cover.
///
/// Restricting to `x ∈ {0,1}^n` loses nothing: `M` is 0/1 and every
/// constraint asks for at least 1, so capping a coordinate at 1 keeps
/// feasibility and never raises the cost.
pub fn gamma(clutter: &Clutter, c: &[u64]) -> Result<Optimum> {
    check_weights(clutter, c)?;
    let n = clutter.vertices();
    let mut closing = vec![Vec::new(); n];
    for &e in clutter.edges() {
        closing[63 - e.leading_zeros() as usize].push(e);
    }
    let mut search = CoverSearch {
        edges: clutter.edges(),
        closing,
        c,
        best: c.iter().sum::<u64>() + 1,
        best_x: 0,
    };
    search.run(0, 0, 0);
    Ok(Optimum {
        value: search.best,
        witness: (0..n).map(|v| (search.best_x >> v) & 1).collect(),
    })
}

struct PackingSearch<'a> {
    edges: &'a [u64],
    residual: Vec<u64>,
    y: Vec<u64>,
    best: Option<u64>,
    best_y: Vec<u64>,
}

impl PackingSearch<'_> {
    fn capacity(&self, e: u64) -> u64 {
        (0..64)
            .filter(|v| (e >> v) & 1 == 1)
            .map(|v| self.residual[v])
            .min()
            .expect("edges are nonempty")
    }

    /// Upper bound for edges `from..`: the smaller of the summed capacities and
    /// the residual weight of a greedy vertex cover of those edges.
    fn upper_bound(&self, from: usize) -> u64 {
        let rest = &self.edges[from..];
        let caps: u64 = rest.iter().map(|&e| self.capacity(e)).sum();
        let mut cover = 0u64;
        let mut weight = 0;
        for &e in rest {
            if e & cover != 0 {
                continue;
            }
            let v = (0..64)
                .filter(|v| (e >> v) & 1 == 1)
                .min_by_key(|&v| self.residual[v])
                .expect("edges are nonempty");
            cover |= 1 << v;
            weight += self.residual[v];
        }
        caps.min(weight)
    }

    fn run(&mut self, idx: usize, total: u64) {
        if idx == self.edges.len() {
            if self.best.is_none_or(|b| total > b) {
                self.best = Some(total);
                self.best_y.clone_from(&self.y);
            }
            return;
        }
        if let Some(b) = self.best {
            if total + self.upper_bound(idx) <= b {
                return;
            }
        }
        let e = self.edges[idx];
        let cap = self.capacity(e);
        // Ascending values so the first optimum found is lexicographically least.
        for k in 0..=cap {
            self.y[idx] = k;
            for v in (0..64).filter(|v| (e >> v) & 1 == 1) {
                self.residual[v] -= k;
            }
            self.run(idx + 1, total + k);
            for v in (0..64).filter(|v| (e >> v) & 1 == 1) {
                self.residual[v] += k;
            }
        }
        self.y[idx] = 0;
    }
}

/// `σ(c)` with the lexicographically least optimal packing.
pub fn sigma(clutter: &Clutter, c: &[u64]) -> Result<Optimum> {
    check_weights(clutter, c)?;
    let m = clutter.edge_count();
    let mut search = PackingSearch {
        edges: clutter.edges(),
        residual: c.to_vec(),
        y: vec![0; m],
        best: None,
        best_y: vec![0; m],
    };
    search.run(0, 0);
    Ok(Optimum {
        value: search.best.expect("y = 0 is feasible"),
        witness: search.best_y,
    })
}

/// `γ(c) = σ(c)`.
pub fn packs_for(clutter: &Clutter, c: &[u64]) -> Result<bool> {
    Ok(gamma(clutter, c)?.value == sigma(clutter, c)?.value)
}

/// `γ(1_n)`, the height of the edge ideal; 0 for the unit clutter.
pub fn cover_number(clutter: &Clutter) -> u64 {
    if clutter.is_unit() {
        return 0;
    }
    gamma(clutter, &vec![1; clutter.vertices()]).expect("weights fit").value
}

/// `σ(1_n)`, the largest number of pairwise disjoint edges; 0 for the unit clutter.
pub fn matching_number(clutter: &Clutter) -> u64 {
    if clutter.is_unit() {
        return 0;
    }
    sigma(clutter, &vec![1; clutter.vertices()]).expect("weights fit").value
}

/// `(x^c ∈ I^(t), x^c ∈ I^t)` read off from `γ(c)` and `σ(c)`.
pub fn membership_via_lp(clutter: &Clutter, c: &[u64], t: u64) -> Result<(bool, bool)> {
    if t == 0 {
        return Err(Error::Domain("membership needs t >= 1".into()));
    }
    Ok((t <= gamma(clutter, c)?.value, t <= sigma(clutter, c)?.value))
}

fn for_each_in_box(bounds: &[u64], f: &mut dyn FnMut(&[u64])) {
    let mut point = vec![0u64; bounds.len()];
    loop {
        f(&point);
        let mut i = bounds.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if point[i] < bounds[i] {
                point[i] += 1;
                break;
            }
            point[i] = 0;
        }
    }
}

/// Oracle for `γ`: every `x ∈ {0..=cap}^n` in lexicographic order.
pub fn gamma_brute_force(clutter: &Clutter, c: &[u64], cap: u64) -> Option<Optimum> {
    let mut best: Option<Optimum> = None;
    for_each_in_box(&vec![cap; clutter.vertices()], &mut |x| {
        let feasible = clutter
            .edges()
            .iter()
            .all(|&e| (0..x.len()).filter(|v| (e >> v) & 1 == 1).map(|v| x[v]).sum::<u64>() >= 1);
        if !feasible {
            return;
        }
        let cost: u64 = x.iter().zip(c).map(|(a, b)| a * b).sum();
        if best.as_ref().is_none_or(|b| cost < b.value) {
            best = Some(Optimum {
                value: cost,
                witness: x.to_vec(),
            });
        }
    });
    best
}

/// Oracle for `σ`: every `y` in the box `y_e <= min_{v∈e} c_v`, lexicographically.
pub fn sigma_brute_force(clutter: &Clutter, c: &[u64]) -> Optimum {
    let bounds: Vec<u64> = clutter
        .edges()
        .iter()
        .map(|&e| (0..c.len()).filter(|v| (e >> v) & 1 == 1).map(|v| c[v]).min().unwrap_or(0))
        .collect();
    let mut best: Option<Optimum> = None;
    for_each_in_box(&bounds, &mut |y| {
        let fits = (0..c.len()).all(|v| {
            clutter
                .edges()
                .iter()
                .zip(y)
                .filter(|(&e, _)| (e >> v) & 1 == 1)
                .map(|(_, &k)| k)
                .sum::<u64>()
                <= c[v]
        });
        let value: u64 = y.iter().sum();
        if fits && best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(Optimum {
                value,
                witness: y.to_vec(),
            });
        }
    });
    best.expect("y = 0 is feasible")
}
