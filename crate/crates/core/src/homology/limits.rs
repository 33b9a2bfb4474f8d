//! Homological invariants along the symbolic powers `I^(1), ..., I^(n_max)`.

use std::collections::BTreeMap;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::field::FieldChar;
use super::summary::{summary, Degree, HomologicalSummary};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::symbolic::symbolic_power;

/// Default bound on `μ(I^(n))` above which a row is skipped.
pub const DEFAULT_GENERATOR_BUDGET: usize = 40;

/// A reduced fraction rendered as `p/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fraction(pub Ratio<i64>);

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitRow {
    pub n: u32,
    /// Number of minimal generators of `I^(n)`.
    pub mu: usize,
    /// `None` when `mu` exceeded the generator budget.
    pub summary: Option<HomologicalSummary>,
}

impl LimitRow {
    pub fn reg_over_n(&self) -> Option<Fraction> {
        self.summary
            .as_ref()
            .map(|s| Fraction(Ratio::new(s.reg, self.n as i64)))
    }

    pub fn alpha_over_n(&self) -> Option<Fraction> {
        self.summary
            .as_ref()
            .map(|s| Fraction(Ratio::new(s.alpha as i64, self.n as i64)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// `depth(R/I^(n)) <= depth(R/I^(ceil(n/m)))`.
    Depth,
    /// `a_i(R/I^(n)) >= m·a_i(R/I^(ceil(n/m)))`.
    AInvariant,
    /// `α(I^(n)) <= reg(I^(n)) = reg(R/I^(n)) + 1`.
    Alpha,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub kind: CheckKind,
    pub n: u32,
    pub m: u32,
    /// Index of the a-invariant, for [`CheckKind::AInvariant`].
    pub i: Option<usize>,
    pub lhs: Degree,
    pub rhs: Degree,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitReport {
    pub field_char: FieldChar,
    pub generator_budget: usize,
    pub rows: Vec<LimitRow>,
    pub checks: Vec<InequalityCheck>,
}

impl LimitReport {
    pub fn all_checks_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn skipped(&self) -> Vec<u32> {
        self.rows.iter().filter(|r| r.summary.is_none()).map(|r| r.n).collect()
    }

    /// Number of a-invariant columns, `dim(R/I) + 1`.
    fn a_columns(&self) -> usize {
        self.rows
            .iter()
            .find_map(|r| r.summary.as_ref().map(|s| s.a_invariants.len()))
            .unwrap_or(0)
    }

    /// `n,reg,depth,a_0,...,a_dim,alpha,reg_over_n,alpha_over_n`; skipped rows
    /// carry `skipped` in every field after `n`.
    pub fn to_csv(&self) -> String {
        let k = self.a_columns();
        let mut header = vec!["n".to_string(), "reg".into(), "depth".into()];
        header.extend((0..k).map(|i| format!("a_{i}")));
        header.extend(["alpha".into(), "reg_over_n".into(), "alpha_over_n".into()]);
        let mut out = header.join(",");
        out.push('\n');
        for row in &self.rows {
            let mut fields = vec![row.n.to_string()];
            match &row.summary {
                Some(s) => {
                    fields.push(s.reg.to_string());
                    fields.push(s.depth.to_string());
                    fields.extend(s.a_invariants.iter().map(Degree::to_string));
                    fields.push(s.alpha.to_string());
                    fields.push(row.reg_over_n().expect("computed row").to_string());
                    fields.push(row.alpha_over_n().expect("computed row").to_string());
                }
                None => fields.extend(std::iter::repeat_n("skipped".to_string(), k + 5)),
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }
}

fn degree_of(v: i64) -> Degree {
    Degree::Finite(v)
}

fn inequality_checks(by_n: &BTreeMap<u32, &HomologicalSummary>, n_max: u32) -> Vec<InequalityCheck> {
    let mut checks = Vec::new();
    for (&n, s) in by_n {
        checks.push(InequalityCheck {
            kind: CheckKind::Alpha,
            n,
            m: 1,
            i: None,
            lhs: degree_of(s.alpha as i64),
            rhs: degree_of(s.reg + 1),
            holds: s.alpha as i64 <= s.reg + 1,
        });
        for m in 1..=n_max {
            let Some(t) = by_n.get(&n.div_ceil(m)) else {
                continue;
            };
            checks.push(InequalityCheck {
                kind: CheckKind::Depth,
                n,
                m,
                i: None,
                lhs: degree_of(s.depth as i64),
                rhs: degree_of(t.depth as i64),
                holds: s.depth <= t.depth,
            });
            for (i, (&lhs, &right)) in s.a_invariants.iter().zip(&t.a_invariants).enumerate() {
                let Some(r) = right.finite() else {
                    continue;
                };
                let rhs = degree_of(m as i64 * r);
                checks.push(InequalityCheck {
                    kind: CheckKind::AInvariant,
                    n,
                    m,
                    i: Some(i),
                    lhs,
                    rhs,
                    holds: lhs >= rhs,
                });
            }
        }
    }
    checks
}

/// Summaries of `R/I^(n)` for `1 <= n <= n_max` together with the finite
/// inequalities between them, for all `1 <= m <= n_max`.
pub fn limit_experiment(
    ideal: &MonomialIdeal,
    n_max: u32,
    ch: FieldChar,
    generator_budget: usize,
) -> Result<LimitReport> {
    ideal.require_squarefree_proper()?;
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let ch = FieldChar::new(ch.value())?;
    let rows = (1..=n_max)
        .into_par_iter()
        .map(|n| -> Result<LimitRow> {
            let power = symbolic_power(ideal, n)?;
            let mu = power.mu();
            let summary = if mu <= generator_budget {
                Some(summary(&power, ch)?)
            } else {
                None
            };
            Ok(LimitRow { n, mu, summary })
        })
        .collect::<Result<Vec<_>>>()?;
    let by_n: BTreeMap<u32, &HomologicalSummary> =
        rows.iter().filter_map(|r| r.summary.as_ref().map(|s| (r.n, s))).collect();
    let checks = inequality_checks(&by_n, n_max);
    Ok(LimitReport {
        field_char: ch,
        generator_budget,
        rows,
        checks,
    })
}
