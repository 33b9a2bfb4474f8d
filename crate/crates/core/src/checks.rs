//! Cross-checks between the independent computations, run over a corpus.
//!
//! Every check compares statements that are known to be equivalent or known to
//! imply each other, so a violation points at a bug.

use rayon::prelude::*;
use serde::Serialize;

use crate::clutter::{gamma, mfmc_check, sigma, Clutter, MfmcOptions, DEFAULT_SWEEP_BUDGET};
use crate::corpus::CorpusEntry;
use crate::equality::{equal_all_powers, powers_equal, EqualityReport};
use crate::error::{Error, Result};
use crate::homology::{betti_numbers, summary_with_table, Degree, FieldChar, HomologicalSummary};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::splitting::{frobenius_containment, mainsqfree_condition, verify_stable_image};
use crate::symbolic::symbolic_power;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOptions {
    /// `n` and `m` range of the stable-image identity for `Φ_m`.
    pub stable_n_max: u32,
    pub stable_m_max: u32,
    /// Weight box `{0..=w}^n` and exponent range `t <= t_max` of the membership
    /// translation, applied to clutters with at most 5 vertices and 6 edges.
    pub lp_weight_max: u64,
    pub lp_t_max: u32,
    pub mfmc_budget: u128,
    /// Symbolic powers whose homology is computed, `0` to skip homology.
    pub homology_n_max: u32,
    pub field_char: FieldChar,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            stable_n_max: 3,
            stable_m_max: 3,
            lp_weight_max: 4,
            lp_t_max: 5,
            mfmc_budget: DEFAULT_SWEEP_BUDGET,
            homology_n_max: 4,
            field_char: FieldChar::RATIONALS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusRow {
    pub label: String,
    pub ideal: MonomialIdeal,
    pub mu: usize,
    pub verdict_all_n: bool,
    /// First `n` with `I^n != I^(n)`.
    pub first_failure: Option<u32>,
    pub splitting_condition: bool,
    pub packed: bool,
    /// `None` when the sweep exceeded its budget.
    pub mfmc: Option<bool>,
    /// Whether the membership translation applied to this clutter.
    pub lp_translation_checked: bool,
    /// `reg(R/I^(n))` for `n = 1..`.
    pub reg: Vec<i64>,
    /// `a_i(R/I^(n))` for `n = 1..`.
    pub a_invariants: Vec<Vec<Degree>>,
    pub violations: Vec<Violation>,
    /// Informational diagnostics that are not failures.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub options: CheckOptions,
    pub rows: Vec<CorpusRow>,
    pub violation_count: usize,
}

impl CorpusReport {
    pub fn violations(&self) -> impl Iterator<Item = (&CorpusRow, &Violation)> {
        self.rows.iter().flat_map(|r| r.violations.iter().map(move |v| (r, v)))
    }

    pub fn violations_of<'a>(&'a self, check: &'a str) -> impl Iterator<Item = (&'a CorpusRow, &'a Violation)> {
        self.violations().filter(move |(_, v)| v.check == check)
    }
}

pub const SPLITTING_EQUIVALENCE: &str = "splitting-equivalence";
pub const CRITERION_EXTRAPOLATION: &str = "criterion-extrapolation";
pub const STABLE_IMAGE: &str = "stable-image";
pub const LP_TRANSLATION: &str = "lp-translation";
pub const MFMC_EQUALITY: &str = "mfmc-equality";
pub const EQUALITY_IMPLIES_PACKED: &str = "equality-implies-packed";
pub const HOMOLOGY_TWO_PATH: &str = "homology-two-path";
pub const DEPTH_INEQUALITY: &str = "depth-inequality";
pub const A_INVARIANT_INEQUALITY: &str = "a-invariant-inequality";

struct Row {
    violations: Vec<Violation>,
    notes: Vec<String>,
}

impl Row {
    fn fail(&mut self, check: &'static str, detail: String) {
        self.violations.push(Violation { check, detail });
    }
}

fn all_equal_up_to(ideal: &MonomialIdeal, range: std::ops::RangeInclusive<u32>) -> Result<Option<(u32, Monomial)>> {
    for n in range {
        if let Some(w) = powers_equal(ideal, n)? {
            return Ok(Some((n, w)));
        }
    }
    Ok(None)
}

fn splitting_checks(ideal: &MonomialIdeal, report: &EqualityReport, row: &mut Row) -> Result<bool> {
    let mu = ideal.mu() as u32;
    // Equality for all n agrees with the splitting condition, the Frobenius
    // containment and direct equality, each checked up to N.
    let big_n = mu.div_ceil(2) + 2;
    let splitting = mainsqfree_condition(ideal, 2, big_n)?;
    let mut frobenius = Ok(());
    for n in 0..=big_n {
        if !frobenius_containment(ideal, n)? {
            frobenius = Err(n);
            break;
        }
    }
    let direct = all_equal_up_to(ideal, 1..=big_n)?;
    let verdicts = [splitting.is_ok(), frobenius.is_ok(), direct.is_none()];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        row.fail(
            SPLITTING_EQUIVALENCE,
            format!(
                "up to N={big_n}: splitting condition {:?}, Frobenius containment {:?}, direct equality {:?}",
                splitting.as_ref().err().map(|f| f.n),
                frobenius.err(),
                direct.as_ref().map(|(n, _)| *n)
            ),
        );
    }
    if report.verdict_all_n {
        if let Some((n, w)) = all_equal_up_to(ideal, 1..=mu + 2)? {
            row.fail(
                CRITERION_EXTRAPOLATION,
                format!("criterion says equal for all n, but I^{n} != I^({n}) (witness {w})"),
            );
        }
    }
    Ok(splitting.is_ok())
}

fn stable_image_checks(ideal: &MonomialIdeal, options: &CheckOptions, row: &mut Row) -> Result<()> {
    for n in 1..=options.stable_n_max {
        for m in 1..=options.stable_m_max {
            if let Err(f) = verify_stable_image(ideal, n, m)? {
                row.fail(
                    STABLE_IMAGE,
                    format!("n={n} m={m} j={}: images differ at {}", f.j, f.witness),
                );
            }
        }
    }
    Ok(())
}

fn lp_translation_checks(ideal: &MonomialIdeal, clutter: &Clutter, options: &CheckOptions, row: &mut Row) -> Result<bool> {
    if clutter.vertices() > 5 || clutter.edge_count() > 6 {
        return Ok(false);
    }
    let d = clutter.vertices();
    let t_max = options.lp_t_max;
    let symbolic: Vec<MonomialIdeal> = (1..=t_max).map(|t| symbolic_power(ideal, t)).collect::<Result<_>>()?;
    let ordinary: Vec<MonomialIdeal> = (1..=t_max).map(|t| ideal.power(t)).collect();
    let base = options.lp_weight_max + 1;
    for code in 0..base.pow(d as u32) {
        let mut c = vec![0u64; d];
        let mut rest = code;
        for slot in c.iter_mut().rev() {
            *slot = rest % base;
            rest /= base;
        }
        let g = gamma(clutter, &c)?.value;
        let s = sigma(clutter, &c)?.value;
        let x = Monomial::new(c.iter().map(|&v| v as u32));
        for t in 1..=t_max {
            let in_sym = symbolic[t as usize - 1].contains_unchecked(&x);
            let in_pow = ordinary[t as usize - 1].contains_unchecked(&x);
            if in_sym != (t as u64 <= g) || in_pow != (t as u64 <= s) {
                row.fail(
                    LP_TRANSLATION,
                    format!("c={c:?} t={t}: γ={g} σ={s}, in I^(t)={in_sym}, in I^t={in_pow}"),
                );
                return Ok(true);
            }
        }
    }
    Ok(true)
}

fn homology_checks(
    ideal: &MonomialIdeal,
    options: &CheckOptions,
    row: &mut Row,
) -> Result<Vec<HomologicalSummary>> {
    let mut summaries = Vec::new();
    for n in 1..=options.homology_n_max {
        let power = symbolic_power(ideal, n)?;
        let table = betti_numbers(&power, options.field_char)?;
        let s = summary_with_table(&power, options.field_char, &table)?;
        if !s.is_consistent() {
            row.fail(
                HOMOLOGY_TWO_PATH,
                format!(
                    "n={n}: Betti reg {} vs a-invariant reg {}, depth {} vs {}",
                    s.reg,
                    s.reg_from_a_invariants(),
                    s.depth,
                    s.depth_from_a_invariants()
                ),
            );
        }
        if n == 1 && ideal.vars() <= 5 && options.field_char.is_zero() {
            let f2 = betti_numbers(&power, FieldChar::new(2)?)?;
            if f2 != table {
                row.notes.push("Betti numbers over Q and F_2 differ".into());
            }
        }
        summaries.push(s);
    }
    for (idx, s) in summaries.iter().enumerate() {
        let n = idx as u32 + 1;
        for m in 1..=2u32 {
            let t = &summaries[n.div_ceil(m) as usize - 1];
            if s.depth > t.depth {
                row.fail(
                    DEPTH_INEQUALITY,
                    format!("n={n} m={m}: depth {} > {}", s.depth, t.depth),
                );
            }
            for (i, (&lhs, &rhs)) in s.a_invariants.iter().zip(&t.a_invariants).enumerate() {
                if let Some(r) = rhs.finite() {
                    if lhs < Degree::Finite(m as i64 * r) {
                        row.fail(
                            A_INVARIANT_INEQUALITY,
                            format!("n={n} m={m} i={i}: a_i = {lhs} < {m}·{r}"),
                        );
                    }
                }
            }
        }
    }
    Ok(summaries)
}

/// Runs every cross-check on one ideal.
pub fn check_ideal(entry: &CorpusEntry, options: &CheckOptions) -> Result<CorpusRow> {
    let ideal = &entry.ideal;
    ideal.require_squarefree_proper()?;
    let mut row = Row {
        violations: Vec::new(),
        notes: Vec::new(),
    };
    let report = equal_all_powers(ideal, None)?;
    let splitting_condition = splitting_checks(ideal, &report, &mut row)?;
    stable_image_checks(ideal, options, &mut row)?;

    let clutter = Clutter::from_ideal(ideal)?;
    let lp_checked = lp_translation_checks(ideal, &clutter, options, &mut row)?;
    let mfmc = match mfmc_check(
        &clutter,
        MfmcOptions {
            budget: options.mfmc_budget,
            symmetry: false,
        },
    ) {
        Ok(r) => Some(r.holds),
        Err(Error::Budget { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(holds) = mfmc {
        if holds != report.verdict_all_n {
            row.fail(
                MFMC_EQUALITY,
                format!("MFMC {holds}, equality of all powers {}", report.verdict_all_n),
            );
        }
    }
    let packed = clutter.is_packed(crate::clutter::MAX_VERTICES)?.is_none();
    if report.verdict_all_n && !packed {
        row.fail(
            EQUALITY_IMPLIES_PACKED,
            "all powers equal but the clutter is not packed".into(),
        );
    }

    let summaries = homology_checks(ideal, options, &mut row)?;
    Ok(CorpusRow {
        label: entry.label.clone(),
        ideal: ideal.clone(),
        mu: ideal.mu(),
        verdict_all_n: report.verdict_all_n,
        first_failure: report.first_failure.map(|f| f.n),
        splitting_condition,
        packed,
        mfmc,
        lp_translation_checked: lp_checked,
        reg: summaries.iter().map(|s| s.reg).collect(),
        a_invariants: summaries.into_iter().map(|s| s.a_invariants).collect(),
        violations: row.violations,
        notes: row.notes,
    })
}

/// Checks every entry in parallel; rows keep the corpus order.
pub fn check_corpus(entries: &[CorpusEntry], options: CheckOptions) -> Result<CorpusReport> {
    let rows = entries
        .par_iter()
        .map(|e| check_ideal(e, &options))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusReport {
        options,
        violation_count: rows.iter().map(|r| r.violations.len()).sum(),
        rows,
    })
}
