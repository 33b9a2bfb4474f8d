//! Minimal multigraded free resolutions of `R/J` and graded pieces of
//! `Ext(R/J, R)`.
//!
//! A summand `e` of `F_i` is a copy of `R(-deg e)`. Its boundary is a sparse
//! vector over the summands of `F_{i-1}`; entry `λ` at `e'` stands for
//! `λ·x^{deg e - deg e'}·e'`.

use std::collections::{BTreeMap, BTreeSet};

use super::betti::BettiTable;
use super::field::{kernel_basis, rank_of, Echelon, Field, SparseVec};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Debug)]
pub struct Summand<E> {
    pub degree: Monomial,
    pub boundary: SparseVec<E>,
}

/// Levels `F_0 = R, F_1, ..., F_p` of a minimal free resolution of `R/J`.
pub struct Resolution<'f, F: Field> {
    field: &'f F,
    vars: usize,
    levels: Vec<Vec<Summand<F::Elem>>>,
}

impl<'f, F: Field> Resolution<'f, F> {
    /// Builds the resolution degree by degree.
    ///
    /// With a `guide`, only the multidegrees carrying a Betti number are
    /// visited, and the number of summands created at each `(i, b)` is checked
    /// against the table. Without one, every point of the lcm lattice is
    /// visited.
    pub fn build(field: &'f F, ideal: &MonomialIdeal, guide: Option<&BettiTable>) -> Self {
        let d = ideal.vars();
        let mut levels: Vec<Vec<Summand<F::Elem>>> = vec![vec![Summand {
            degree: Monomial::one(d),
            boundary: Vec::new(),
        }]];
        levels.push(
            ideal
                .generators()
                .iter()
                .map(|g| Summand {
                    degree: g.clone(),
                    boundary: vec![(0, field.one())],
                })
                .collect(),
        );
        let points: Vec<Monomial> = match guide {
            Some(table) => {
                let set: BTreeSet<Monomial> = table.ideal_entries().keys().map(|(_, b)| b.clone()).collect();
                set.into_iter().collect()
            }
            None => super::betti::lcm_lattice(ideal),
        };
        for b in &points {
            let mut i = 2;
            loop {
                let domain: Vec<usize> = (0..levels[i - 1].len())
                    .filter(|&k| levels[i - 1][k].degree.divides(b))
                    .collect();
                if domain.is_empty() {
                    break;
                }
                let columns: Vec<SparseVec<F::Elem>> =
                    domain.iter().map(|&k| levels[i - 1][k].boundary.clone()).collect();
                let kernel = kernel_basis(field, &columns);
                if levels.len() == i {
                    levels.push(Vec::new());
                }
                let mut image = Echelon::new(field);
                for s in levels[i].iter().filter(|s| s.degree.divides(b)) {
                    image.insert(&s.boundary);
                }
                let mut created = 0;
                for v in kernel {
                    let global: SparseVec<F::Elem> = v.into_iter().map(|(k, x)| (domain[k], x)).collect();
                    if image.insert(&global) {
                        levels[i].push(Summand {
                            degree: b.clone(),
                            boundary: global,
                        });
                        created += 1;
                    }
                }
                if let Some(table) = guide {
                    let expected = table.ideal_entries().get(&(i - 1, b.clone())).copied().unwrap_or(0);
                    assert_eq!(
                        created, expected,
                        "resolution and Betti table disagree at homological degree {i}, multidegree {b}"
                    );
                }
                i += 1;
            }
        }
        while levels.last().is_some_and(Vec::is_empty) {
            levels.pop();
        }
        Resolution { field, vars: d, levels }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn levels(&self) -> &[Vec<Summand<F::Elem>>] {
        &self.levels
    }

    /// Length of the resolution, i.e. `pd(R/J)`.
    pub fn length(&self) -> usize {
        self.levels.len() - 1
    }

    /// `β_{i,b}(R/J)` read off the summands.
    pub fn betti_counts(&self) -> BTreeMap<(usize, Monomial), usize> {
        let mut out = BTreeMap::new();
        for (i, level) in self.levels.iter().enumerate() {
            for s in level {
                *out.entry((i, s.degree.clone())).or_insert(0) += 1;
            }
        }
        out
    }

    /// Whether `d_{i-1} ∘ d_i = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        (2..self.levels.len()).all(|i| {
            self.levels[i].iter().all(|s| {
                let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
                for (k, x) in &s.boundary {
                    for (t, y) in &self.levels[i - 1][*k].boundary {
                        let slot = acc.entry(*t).or_insert_with(|| self.field.zero());
                        *slot = self.field.add(slot, &self.field.mul(x, y));
                    }
                }
                acc.values().all(|v| self.field.is_zero(v))
            })
        })
    }

    /// No boundary entry is a nonzero scalar between summands of equal degree.
    pub fn is_minimal(&self) -> bool {
        (1..self.levels.len()).all(|i| {
            self.levels[i]
                .iter()
                .all(|s| s.boundary.iter().all(|(k, _)| self.levels[i - 1][*k].degree != s.degree))
        })
    }

    /// Rank of `d_k` restricted to summands of degree `>= u` on both sides.
    fn restricted_rank(&self, k: usize, u: &Monomial) -> usize {
        if k == 0 || k >= self.levels.len() {
            return 0;
        }
        let targets: Vec<bool> = self.levels[k - 1].iter().map(|s| u.divides(&s.degree)).collect();
        let columns: Vec<SparseVec<F::Elem>> = self.levels[k]
            .iter()
            .filter(|s| u.divides(&s.degree))
            .map(|s| s.boundary.iter().filter(|(t, _)| targets[*t]).cloned().collect())
            .collect();
        rank_of(self.field, &columns)
    }

    /// `dim Ext^k(R/J, R)_{-u}`.
    ///
    /// The degree `-u` strand of `Hom(F_k, R)` has one basis vector per summand
    /// with `deg e >= u`, and the dual maps are transposes of the restricted
    /// boundary matrices.
    pub fn ext_dimension(&self, k: usize, u: &Monomial) -> usize {
        if k >= self.levels.len() {
            return 0;
        }
        let n = self.levels[k].iter().filter(|s| u.divides(&s.degree)).count();
        n - self.restricted_rank(k + 1, u) - self.restricted_rank(k, u)
    }

    /// Every entrywise minimum of a nonempty set of summand degrees.
    ///
    /// `Ext^k_{-u}` depends only on which summands satisfy `deg e >= u`, and the
    /// largest `u` selecting a given set is the meet of its degrees.
    pub fn meet_closure(&self) -> Vec<Monomial> {
        let degrees: BTreeSet<Monomial> = self.levels.iter().flatten().map(|s| s.degree.clone()).collect();
        let mut seen = degrees.clone();
        let mut frontier: Vec<Monomial> = degrees.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for g in &degrees {
                    let m = a.gcd(g);
                    if seen.insert(m.clone()) {
                        next.push(m);
                    }
                }
            }
            frontier = next;
        }
        seen.into_iter().collect()
    }

    /// `max { |u| : Ext^k(R/J, R)_{-u} != 0 }` for each `k`, or `None` when
    /// `Ext^k` vanishes.
    pub fn ext_top_degrees(&self) -> Vec<Option<u64>> {
        let mut candidates = self.meet_closure();
        candidates.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        (0..=self.vars)
            .map(|k| {
                candidates
                    .iter()
                    .find(|u| self.ext_dimension(k, u) > 0)
                    .map(Monomial::degree)
            })
            .collect()
    }
}
