//! Minimal primes and symbolic powers of square-free monomial ideals.
//!
//! A square-free ideal is the intersection of its minimal primes, each generated
//! by a set of variables. Those sets are the minimal transversals (vertex covers)
//! of the clutter formed by the generator supports, and
//! `I^(n) = Q_1^n ∩ ... ∩ Q_s^n`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Sort key for variable sets: size first, then the sorted index list.
fn set_key(mask: u64) -> (u32, Vec<u32>) {
    let idx = (0..64).filter(|i| (mask >> i) & 1 == 1).collect();
    (mask.count_ones(), idx)
}

fn keep_minimal(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|&s| set_key(s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == k) {
            kept.push(s);
        }
    }
    kept
}

/// Minimal transversals of a family of sets, by processing one edge at a time.
///
/// An empty family has the empty set as its only transversal; a family
/// containing the empty set has none.
pub fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut covers = vec![0u64];
    for &edge in edges {
        let mut next = Vec::with_capacity(covers.len());
        for &t in &covers {
            if t & edge != 0 {
                next.push(t);
            } else {
                let mut rest = edge;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    next.push(t | bit);
                    rest ^= bit;
                }
            }
        }
        covers = keep_minimal(next);
    }
    keep_minimal(covers)
}

/// Exhaustive `2^vars` oracle for [`minimal_transversals`].
pub fn minimal_transversals_brute_force(edges: &[u64], vars: usize) -> Vec<u64> {
    assert!(vars <= 24, "brute-force transversal oracle is limited to 24 vertices");
    let covers = (0u64..1 << vars)
        .filter(|&s| edges.iter().all(|&e| e & s != 0))
        .collect();
    keep_minimal(covers)
}

/// Supports of the minimal primes as variable bit masks (bit `i` is `x_{i+1}`).
pub fn minimal_prime_supports(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    ideal.require_squarefree_proper()?;
    if ideal.vars() > 64 {
        return Err(Error::Domain("at most 64 variables are supported".into()));
    }
    let edges: Vec<u64> = ideal.generators().iter().map(Monomial::support).collect();
    Ok(minimal_transversals(&edges))
}

/// Minimal primes of `R/I`, each as the sorted 0-based indices of its variables.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    Ok(minimal_prime_supports(ideal)?
        .into_iter()
        .map(|s| (0..64).filter(|i| (s >> i) & 1 == 1).collect())
        .collect())
}

/// `I^(n)` as the iterated intersection of the `Q_i^n`.
pub fn symbolic_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::Domain("symbolic power needs n >= 1".into()));
    }
    let primes = minimal_prime_supports(ideal)?;
    Ok(primes.iter().fold(MonomialIdeal::unit(ideal.vars()), |acc, &q| {
        acc.intersect_prime_power(q, n)
    }))
}

/// `x^a ∈ I^(n)` iff every minimal prime support carries degree at least `n`.
pub fn in_symbolic_power(primes: &[u64], a: &Monomial, n: u32) -> bool {
    primes.iter().all(|&q| a.degree_on(q) >= n as u64)
}

/// Height of a nonzero proper monomial ideal: the least size of a minimal prime
/// of its radical.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    let primes = minimal_prime_supports(&ideal.radical())?;
    Ok(primes
        .iter()
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("a proper nonzero ideal has a minimal prime"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str, vars: usize) -> MonomialIdeal {
        MonomialIdeal::parse(text, vars).unwrap()
    }

    fn c5() -> MonomialIdeal {
        ideal("x1*x2, x2*x3, x3*x4, x4*x5, x1*x5", 5)
    }

    #[test]
    fn minimal_primes_examples() {
        assert_eq!(minimal_primes(&ideal("x1*x2", 2)).unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(
            minimal_primes(&ideal("x1*x2, x2*x3, x1*x3", 3)).unwrap(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        let p = minimal_primes(&c5()).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn minimal_primes_domain_errors() {
        assert!(minimal_primes(&ideal("x1^2", 2)).is_err());
        assert!(minimal_primes(&MonomialIdeal::zero(2)).is_err());
        assert!(minimal_primes(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn transversal_edge_cases() {
        assert_eq!(minimal_transversals(&[]), vec![0]);
        assert_eq!(minimal_transversals(&[0b11, 0]), Vec::<u64>::new());
    }

    #[test]
    fn symbolic_power_examples() {
        let i = ideal("x2, x1*x3", 3);
        assert_eq!(
            symbolic_power(&i, 2).unwrap(),
            ideal("x2^2, x1*x2*x3, x1^2*x3^2", 3)
        );
        assert_eq!(symbolic_power(&i, 1).unwrap(), i);
        let full = Monomial::all_ones(5);
        assert!(symbolic_power(&c5(), 3).unwrap().contains_monomial(&full).unwrap());
        assert!(symbolic_power(&i, 0).is_err());
    }

    #[test]
    fn alpha_of_c5_third_symbolic_power() {
        assert_eq!(symbolic_power(&c5(), 3).unwrap().alpha().unwrap(), 5);
    }

    #[test]
    fn height_of_powers() {
        assert_eq!(height(&c5().power(2)).unwrap(), 3);
        assert_eq!(height(&ideal("x1, x2", 2)).unwrap(), 2);
    }
}
