//! Deciding `I^n = I^(n)` for one `n` and for all `n`.
//!
//! `I^n ⊆ I^(n)` always holds, so equality reduces to membership of the
//! generators of `I^(n)` in `I^n`. For all `n` it is enough to check
//! `n <= ceil(μ(I)/2)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::symbolic::symbolic_power;

/// `Ok(None)` when `I^n = I^(n)`, otherwise the first generator of `I^(n)` outside `I^n`.
pub fn powers_equal(ideal: &MonomialIdeal, n: u32) -> Result<Option<Monomial>> {
    let symbolic = symbolic_power(ideal, n)?;
    symbolic.first_outside(&ideal.power(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerCheck {
    pub n: u32,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: u32,
    pub witness: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub mu: usize,
    /// `ceil(μ/2)`, the last `n` the criterion needs.
    pub checked_up_to: u32,
    /// Checks for `n = 1..=checked_up_to`.
    pub per_n: Vec<PowerCheck>,
    pub first_failure: Option<Failure>,
    pub verdict_all_n: bool,
    /// Direct checks past the criterion range, only when requested.
    pub extended: Vec<PowerCheck>,
}

impl EqualityReport {
    pub fn criterion_bound(mu: usize) -> u32 {
        mu.div_ceil(2) as u32
    }
}

fn check_range(ideal: &MonomialIdeal, range: std::ops::RangeInclusive<u32>) -> Result<Vec<PowerCheck>> {
    let range: Vec<u32> = range.collect();
    range
        .into_par_iter()
        .map(|n| {
            let witness = powers_equal(ideal, n)?;
            Ok(PowerCheck {
                n,
                equal: witness.is_none(),
                witness,
            })
        })
        .collect()
}

/// Runs the finite criterion, and optionally direct checks up to `extended_to`.
pub fn equal_all_powers(ideal: &MonomialIdeal, extended_to: Option<u32>) -> Result<EqualityReport> {
    ideal.require_squarefree_proper()?;
    let mu = ideal.mu();
    let bound = EqualityReport::criterion_bound(mu);
    let per_n = check_range(ideal, 1..=bound)?;
    let first_failure = per_n.iter().find(|c| !c.equal).map(|c| Failure {
        n: c.n,
        witness: c.witness.clone().expect("failed checks carry a witness"),
    });
    let extended = match extended_to {
        Some(top) if top > bound => check_range(ideal, bound + 1..=top)?,
        _ => Vec::new(),
    };
    Ok(EqualityReport {
        mu,
        checked_up_to: bound,
        verdict_all_n: first_failure.is_none(),
        per_n,
        first_failure,
        extended,
    })
}
