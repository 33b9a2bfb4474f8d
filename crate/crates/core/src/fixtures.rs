//! Named edge ideals used by the CLI and the tests.

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

fn edge_ideal(vars: usize, edges: &[(usize, usize)]) -> MonomialIdeal {
    Clutter::new(vars, edges.iter().map(|&(a, b)| (1 << a) | (1 << b)).collect())
        .expect("graph edges form a clutter")
        .to_ideal()
}

/// Edge ideal of the cycle `C_n` on `x1..xn`, `n >= 3`.
pub fn cycle(n: usize) -> MonomialIdeal {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edge_ideal(n, &edges)
}

/// Edge ideal of the path `x1 - x2 - ... - xn`, `n >= 2`.
pub fn path(n: usize) -> MonomialIdeal {
    assert!(n >= 2, "paths need at least 2 vertices");
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edge_ideal(n, &edges)
}

/// Edge ideal of `K_{a,b}` with parts `x1..xa` and `x{a+1}..x{a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> MonomialIdeal {
    let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    edge_ideal(a + b, &edges)
}

pub fn cycle_clutter(n: usize) -> Clutter {
    Clutter::from_ideal(&cycle(n)).expect("square-free")
}

pub fn path_clutter(n: usize) -> Clutter {
    Clutter::from_ideal(&path(n)).expect("square-free")
}

pub fn complete_bipartite_clutter(a: usize, b: usize) -> Clutter {
    Clutter::from_ideal(&complete_bipartite(a, b)).expect("square-free")
}

pub const NAMES: &[&str] = &["c3", "c4", "c5", "c7", "path3", "path4", "k23"];

/// Looks up a named fixture: `c3`, `c4`, `c5`, `c7`, `path3`, `path4`, `k23`.
pub fn named(name: &str) -> Result<MonomialIdeal> {
    Ok(match name {
        "c3" => cycle(3),
        "c4" => cycle(4),
        "c5" => cycle(5),
        "c7" => cycle(7),
        "path3" => path(3),
        "path4" => path(4),
        "k23" => complete_bipartite(2, 3),
        other => {
            return Err(Error::Malformed(format!(
                "unknown fixture `{other}` (known: {})",
                NAMES.join(", ")
            )))
        }
    })
}
