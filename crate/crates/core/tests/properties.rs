use proptest::prelude::*;
use sqfree_core::clutter::{gamma, gamma_brute_force, sigma, sigma_brute_force, Clutter};
use sqfree_core::homology::{
    betti_numbers, rank_bareiss, rank_of, summary, FieldChar, Rationals, Resolution, SparseVec,
};
use sqfree_core::splitting::phi_image;
use sqfree_core::symbolic::{
    minimal_transversals, minimal_transversals_brute_force, symbolic_power,
};
use sqfree_core::{Monomial, MonomialIdeal};

fn monomial(vars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, vars).prop_map(Monomial::new)
}

fn ideal_in(vars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(vars, max_exp), 1..=max_gens)
        .prop_map(move |gens| MonomialIdeal::normalize(gens, vars).unwrap())
}

fn ideal(max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(move |d| ideal_in(d, max_exp, 4))
}

fn pair(max_exp: u32) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=4).prop_flat_map(move |d| (ideal_in(d, max_exp, 4), ideal_in(d, max_exp, 4)))
}

fn triple() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(|d| (ideal_in(d, 2, 3), ideal_in(d, 2, 3), ideal_in(d, 2, 3)))
}

/// Nonzero proper square-free ideals in up to 5 variables.
fn squarefree(max_vars: usize) -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=max_vars).prop_flat_map(|d| {
        prop::collection::vec(1u64..(1 << d), 1..=5).prop_map(move |supports| {
            MonomialIdeal::normalize(supports.into_iter().map(|s| Monomial::from_support(s, d)).collect(), d)
                .unwrap()
        })
    })
}

fn with_probe(max_vars: usize) -> impl Strategy<Value = (MonomialIdeal, Monomial)> {
    squarefree(max_vars).prop_flat_map(|i| {
        let d = i.vars();
        (Just(i), monomial(d, 4))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_is_idempotent_and_order_free(i in ideal(3), seed in any::<u64>()) {
        let again = MonomialIdeal::normalize(i.generators().to_vec(), i.vars()).unwrap();
        prop_assert_eq!(&again, &i);
        let mut shuffled = i.generators().to_vec();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        shuffled.push(i.generators()[0].clone());
        prop_assert_eq!(MonomialIdeal::normalize(shuffled, i.vars()).unwrap(), i);
    }

    #[test]
    fn generators_are_an_antichain_in_canonical_order(i in ideal(3)) {
        let g = i.generators();
        for a in 0..g.len() {
            for b in 0..g.len() {
                prop_assert!(a == b || !g[a].divides(&g[b]));
            }
        }
        prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn multiplication_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        prop_assert_eq!(
            a.multiply(&b).unwrap().multiply(&c).unwrap(),
            a.multiply(&b.multiply(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn powers_add(i in ideal(2), p in 0u32..3, q in 0u32..3) {
        prop_assert_eq!(i.power(p).multiply(&i.power(q)).unwrap(), i.power(p + q));
    }

    #[test]
    fn intersection_membership((a, b) in pair(3), probe in monomial(4, 4)) {
        let probe = Monomial::new(probe.exponents()[..a.vars()].iter().copied());
        let both = a.intersect(&b).unwrap();
        prop_assert_eq!(
            both.contains_monomial(&probe).unwrap(),
            a.contains_monomial(&probe).unwrap() && b.contains_monomial(&probe).unwrap()
        );
        prop_assert!(a.multiply(&b).unwrap().is_subset_of(&both).unwrap());
        prop_assert!(both.is_subset_of(&a).unwrap() && both.is_subset_of(&b).unwrap());
    }

    #[test]
    fn prime_power_intersection_matches_lcm_route(i in ideal(3), mask in 1u64..16, n in 1u32..4) {
        let d = i.vars();
        let support = mask & ((1 << d) - 1);
        prop_assume!(support != 0);
        let q = MonomialIdeal::normalize(
            (0..d).filter(|v| (support >> v) & 1 == 1).map(|v| Monomial::var(v, d)).collect(),
            d,
        )
        .unwrap();
        prop_assert_eq!(i.intersect_prime_power(support, n), i.intersect(&q.power(n)).unwrap());
    }

    #[test]
    fn bracket_power_is_multiplicative((a, b) in pair(2), m in 1u32..4) {
        prop_assert_eq!(
            a.multiply(&b).unwrap().bracket_power(m).unwrap(),
            a.bracket_power(m).unwrap().multiply(&b.bracket_power(m).unwrap()).unwrap()
        );
    }

    #[test]
    fn phi_undoes_bracket_power(k in ideal(3), m in 1u32..5) {
        prop_assert_eq!(phi_image(&k.bracket_power(m).unwrap(), m).unwrap(), k);
    }

    #[test]
    fn phi_is_monotone((a, b) in pair(4), m in 1u32..4) {
        let small = a.intersect(&b).unwrap();
        prop_assert!(phi_image(&small, m).unwrap().is_subset_of(&phi_image(&a, m).unwrap()).unwrap());
    }

    #[test]
    fn transversals_match_brute_force(i in squarefree(6)) {
        let edges: Vec<u64> = i.generators().iter().map(Monomial::support).collect();
        let mut fast = minimal_transversals(&edges);
        let mut slow = minimal_transversals_brute_force(&edges, i.vars());
        fast.sort_unstable();
        slow.sort_unstable();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn symbolic_membership_oracle((i, probe) in with_probe(5), n in 1u32..4) {
        let edges: Vec<u64> = i.generators().iter().map(Monomial::support).collect();
        let primes = minimal_transversals_brute_force(&edges, i.vars());
        let expected = primes.iter().all(|&q| probe.degree_on(q) >= n as u64);
        let power = symbolic_power(&i, n).unwrap();
        prop_assert_eq!(power.contains_monomial(&probe).unwrap(), expected);
        prop_assert!(i.power(n).is_subset_of(&power).unwrap());
    }

    #[test]
    fn monomial_text_round_trip(m in monomial(5, 4)) {
        prop_assert_eq!(Monomial::parse(&m.to_string(), 5).unwrap(), m);
    }

    #[test]
    fn ideal_json_round_trip(i in ideal(3)) {
        let text = serde_json::to_string(&i).unwrap();
        prop_assert_eq!(serde_json::from_str::<MonomialIdeal>(&text).unwrap(), i);
    }
}

fn clutter_and_weights() -> impl Strategy<Value = (Clutter, Vec<u64>, Vec<u64>)> {
    squarefree(5).prop_flat_map(|i| {
        let d = i.vars();
        let clutter = Clutter::from_ideal(&i).unwrap();
        (Just(clutter), prop::collection::vec(0u64..4, d), prop::collection::vec(0u64..2, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn programs_match_brute_force((clutter, c, _) in clutter_and_weights()) {
        let g = gamma(&clutter, &c).unwrap();
        let s = sigma(&clutter, &c).unwrap();
        prop_assert_eq!(g.value, gamma_brute_force(&clutter, &c, 2).unwrap().value);
        prop_assert_eq!(s.value, sigma_brute_force(&clutter, &c).value);
        prop_assert!(s.value <= g.value);
    }

    #[test]
    fn programs_are_monotone((clutter, c, bump) in clutter_and_weights()) {
        let bigger: Vec<u64> = c.iter().zip(&bump).map(|(a, b)| a + b).collect();
        prop_assert!(gamma(&clutter, &c).unwrap().value <= gamma(&clutter, &bigger).unwrap().value);
        prop_assert!(sigma(&clutter, &c).unwrap().value <= sigma(&clutter, &bigger).unwrap().value);
    }

    #[test]
    fn clutter_json_round_trip((clutter, _, _) in clutter_and_weights()) {
        let text = serde_json::to_string(&clutter).unwrap();
        prop_assert_eq!(serde_json::from_str::<Clutter>(&text).unwrap(), clutter);
    }

    #[test]
    fn bareiss_matches_rational_elimination(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)
    ) {
        let columns: Vec<SparseVec<_>> = (0..5)
            .map(|c| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, r)| r[c] != 0)
                    .map(|(i, r)| (i, num_rational::BigRational::from_integer(r[c].into())))
                    .collect()
            })
            .collect();
        prop_assert_eq!(rank_bareiss(&rows), rank_of(&Rationals, &columns));
    }

    #[test]
    fn betti_table_respects_taylor_bound(i in ideal(2)) {
        prop_assume!(!i.is_unit());
        let table = betti_numbers(&i, FieldChar::RATIONALS).unwrap();
        prop_assert!(table.total() <= 1 << i.mu());
        let resolution = Resolution::build(&Rationals, &i, None);
        prop_assert_eq!(resolution.betti_counts(), table.quotient_entries());
        prop_assert!(resolution.is_complex() && resolution.is_minimal());
    }

    #[test]
    fn regularity_two_paths_agree(i in ideal(2)) {
        prop_assume!(!i.is_unit());
        let s = summary(&i, FieldChar::RATIONALS).unwrap();
        prop_assert_eq!(s.reg, s.reg_from_a_invariants());
        prop_assert_eq!(s.depth, s.depth_from_a_invariants());
    }
}
