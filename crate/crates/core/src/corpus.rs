//! Seeded random square-free monomial ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    /// Largest number of variables.
    pub vars: usize,
    /// Largest number of generators drawn before minimalization.
    pub max_gens: usize,
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    /// `random-<k>` or the name of a planted fixture.
    pub label: String,
    pub ideal: MonomialIdeal,
}

const ATTEMPTS: usize = 64;

/// `count` ideals in `2 <= d <= vars` variables, each minimally generated by at
/// most `max_gens` random nonempty square-free monomials.
pub fn generate(spec: CorpusSpec) -> Result<Vec<CorpusEntry>> {
    if !(2..=16).contains(&spec.vars) {
        return Err(Error::Domain(format!("corpus vars must be in 2..=16, got {}", spec.vars)));
    }
    if spec.max_gens == 0 {
        return Err(Error::Domain("corpus max-gens must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|k| {
            let d = rng.gen_range(2..=spec.vars);
            let target = rng.gen_range(1..=spec.max_gens);
            // Pairwise incomparable supports, so that the target is usually met.
            let mut supports: Vec<u64> = Vec::with_capacity(target);
            for _ in 0..ATTEMPTS {
                if supports.len() == target {
                    break;
                }
                let s = rng.gen_range(1..1u64 << d);
                if supports.iter().all(|&t| s & t != s && s & t != t) {
                    supports.push(s);
                }
            }
            let gens = supports.into_iter().map(|s| Monomial::from_support(s, d)).collect();
            Ok(CorpusEntry {
                label: format!("random-{k}"),
                ideal: MonomialIdeal::normalize(gens, d)?,
            })
        })
        .collect()
}

/// Prepends named fixtures to a corpus.
pub fn with_planted(names: &[String], rest: Vec<CorpusEntry>) -> Result<Vec<CorpusEntry>> {
    let mut out = names
        .iter()
        .map(|name| {
            Ok(CorpusEntry {
                label: name.clone(),
                ideal: fixtures::named(name)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.extend(rest);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(seed: u64) -> CorpusSpec {
        CorpusSpec {
            vars: 5,
            max_gens: 5,
            count: 50,
            seed,
        }
    }

    #[test]
    fn bounds_and_determinism() {
        let a = generate(spec(7)).unwrap();
        assert_eq!(a, generate(spec(7)).unwrap());
        assert_ne!(a, generate(spec(8)).unwrap());
        for e in &a {
            let i = &e.ideal;
            assert!(i.vars() >= 2 && i.vars() <= 5);
            assert!(i.mu() >= 1 && i.mu() <= 5);
            assert!(i.is_squarefree() && !i.is_zero() && !i.is_unit());
        }
    }

    #[test]
    fn planted_fixture_comes_first() {
        let all = with_planted(&["c5".into()], generate(spec(1)).unwrap()).unwrap();
        assert_eq!(all[0].label, "c5");
        assert_eq!(all[0].ideal, fixtures::cycle(5));
        assert_eq!(all.len(), 51);
        assert!(with_planted(&["nope".into()], Vec::new()).is_err());
    }

    #[test]
    fn rejects_bad_spec() {
        assert!(generate(CorpusSpec { vars: 1, ..spec(0) }).is_err());
        assert!(generate(CorpusSpec { max_gens: 0, ..spec(0) }).is_err());
    }
}
