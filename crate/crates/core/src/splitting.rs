//! The splitting `Φ_m : R^{1/m} → R` at the level of monomial ideals.
//!
//! An ideal of `R^{1/m}` is passed as the ideal `J ⊆ R` with `J^{1/m}` the object
//! being mapped, so exponents are stored multiplied by `m`. A monomial
//! `x^{a/m}` survives `Φ_m` iff `m | a`, and the multiples of a generator `g`
//! with all exponents divisible by `m` are exactly the multiples of
//! `x^{m·ceil(g/m)}`. Hence `Φ_m(J^{1/m})` is generated by `x^{ceil(g/m)}`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::symbolic::symbolic_power;

/// `Φ_m(J^{1/m})` as an ideal of `R`.
pub fn phi_image(j: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    if m == 0 {
        return Err(Error::Domain("Φ_m needs m >= 1".into()));
    }
    MonomialIdeal::normalize(
        j.generators().iter().map(|g| g.ceil_div(m)).collect(),
        j.vars(),
    )
}

/// A generator found on one side of an ideal comparison but not the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableImageFailure {
    pub j: u32,
    pub witness: Monomial,
}

/// Checks `Φ_m((I^(nm+j))^{1/m}) = I^(n+1)` for every `1 <= j <= m`.
///
/// Returns the smallest failing `j` with a generator of one side missing from
/// the other. Any failure is an implementation defect.
pub fn verify_stable_image(
    ideal: &MonomialIdeal,
    n: u32,
    m: u32,
) -> Result<std::result::Result<(), StableImageFailure>> {
    if m == 0 {
        return Err(Error::Domain("Φ_m needs m >= 1".into()));
    }
    let target = symbolic_power(ideal, n + 1)?;
    let failures = (1..=m)
        .into_par_iter()
        .map(|j| -> Result<Option<StableImageFailure>> {
            let image = phi_image(&symbolic_power(ideal, n * m + j)?, m)?;
            if image == target {
                return Ok(None);
            }
            let witness = match image.first_outside(&target)? {
                Some(w) => w,
                None => target
                    .first_outside(&image)?
                    .expect("unequal canonical ideals differ in a generator"),
            };
            Ok(Some(StableImageFailure { j, witness }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(match failures.into_iter().flatten().next() {
        Some(f) => Err(f),
        None => Ok(()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentFailure {
    pub n: u32,
    pub witness: Monomial,
}

/// Checks `Φ_m((I^{nm+1})^{1/m}) ⊆ I^{n+1}` for `0 <= n <= n_max`.
///
/// On failure reports the smallest such `n` and the first generator of the
/// image outside `I^{n+1}`.
pub fn mainsqfree_condition(
    ideal: &MonomialIdeal,
    m: u32,
    n_max: u32,
) -> Result<std::result::Result<(), ContainmentFailure>> {
    ideal.require_squarefree_proper()?;
    if m < 2 {
        return Err(Error::Domain("the splitting criterion needs m >= 2".into()));
    }
    let failures = (0..=n_max)
        .into_par_iter()
        .map(|n| -> Result<Option<ContainmentFailure>> {
            let image = phi_image(&ideal.power(n * m + 1), m)?;
            let target = ideal.power(n + 1);
            Ok(image
                .first_outside(&target)?
                .map(|witness| ContainmentFailure { n, witness }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(match failures.into_iter().flatten().next() {
        Some(f) => Err(f),
        None => Ok(()),
    })
}

/// Checks `x_1⋯x_d · I^{2n+1} ⊆ (I^{n+1})^{[2]}`.
pub fn frobenius_containment(ideal: &MonomialIdeal, n: u32) -> Result<bool> {
    ideal.require_squarefree_proper()?;
    let ones = Monomial::all_ones(ideal.vars());
    let target = ideal.power(n + 1).bracket_power(2)?;
    Ok(ideal
        .power(2 * n + 1)
        .generators()
        .iter()
        .all(|g| target.contains_unchecked(&g.mul(&ones))))
}
