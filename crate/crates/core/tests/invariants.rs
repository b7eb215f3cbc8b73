mod common;

use itertools::Itertools;
use keisler_lab::coloring::{greedy_coloring_traced, weight_of, WeightedHypergraph};
use keisler_lab::logic::{parse_formula, to_dnf, Formula, PhiPartition, RelSymbol, Term};
use keisler_lab::measures::FiniteMeasure;
use keisler_lab::rational::{from_json, ratio, to_json, Rational};
use keisler_lab::structures::{alpha_s, random_maximal_free, Hypergraph, DEFAULT_ALPHA_BUDGET};
use keisler_lab::witnesses::{adversary_witness, order_witness, WitnessReport};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn term() -> impl Strategy<Value = Term> {
    prop_oneof![Just(Term::Obj(1)), Just(Term::Param(1)), Just(Term::Param(2))]
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        (term(), term()).prop_map(|(a, b)| Formula::rel(RelSymbol::E, vec![a, b])),
        (term(), term()).prop_map(|(a, b)| Formula::Eq(a, b)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.or(b)),
        ]
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            Hypergraph::graph(
                n,
                &pairs
                    .iter()
                    .zip(keep)
                    .filter(|(_, k)| *k)
                    .map(|(p, _)| *p)
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        })
    })
}

fn weighted(max_n: usize) -> impl Strategy<Value = WeightedHypergraph> {
    (2usize..=3, 3..=max_n).prop_flat_map(|(r, n)| {
        let edges: Vec<Vec<usize>> = (0..n).combinations(r).collect();
        proptest::collection::vec(0i64..6, edges.len()).prop_map(move |ws| {
            WeightedHypergraph::new(n, r, edges.iter().cloned().zip(ws.into_iter().map(|w| ratio(w, 3)))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_trace_never_drops(h in weighted(8)) {
        let (chi, trace) = greedy_coloring_traced(&h);
        let total: Rational = h.weights().values().sum();
        prop_assert_eq!(&trace[0], &(common::maxcut_ratio(h.arity()) * total));
        prop_assert!(trace.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(trace.last().unwrap(), &weight_of(&h, &chi).unwrap());
    }

    #[test]
    fn formulas_print_and_parse_back(f in formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn dnf_preserves_truth(f in formula(), g in graph(5)) {
        let dnf = to_dnf(&f).unwrap();
        let n = g.vertex_count();
        for t in (0..3).map(|_| 0..n).multi_cartesian_product() {
            let clause_true = dnf.clauses().iter().any(|c| {
                c.iter().all(|l| common::eval_graph(&g, &l.to_formula(), &t[..1], &t[1..]))
            });
            prop_assert_eq!(clause_true, common::eval_graph(&g, &f, &t[..1], &t[1..]));
        }
    }

    #[test]
    fn rational_json_roundtrips(num in -1_000_000i64..1_000_000, den in 1i64..100_000) {
        let q = ratio(num, den);
        prop_assert_eq!(from_json(&to_json(&q)).unwrap(), q);
    }

    #[test]
    fn measures_stay_normalized(g in graph(5), ws in proptest::collection::vec(0i64..5, 1..8)) {
        prop_assume!(ws.iter().any(|&w| w > 0));
        let n = g.vertex_count();
        let total: i64 = ws.iter().sum();
        let mu = FiniteMeasure::from_weights(&g, 1, ws.iter().enumerate().map(|(i, &w)| (vec![i % n], ratio(w, total)))).unwrap();
        prop_assert!(mu.total_mass().is_one());
        let sq = mu.product(&mu).unwrap();
        prop_assert!(sq.total_mass().is_one());
        // Marginals of a product recover the factor.
        for v in 0..n {
            let first = sq.mass_of(|t| t[0] == v);
            prop_assert_eq!(first, mu.mass_of(|t| t[0] == v));
        }
        let phi = PhiPartition::new(Formula::rel(RelSymbol::E, vec![Term::Obj(1), Term::Obj(2)]), 2, 0).unwrap();
        let value = sq.eval(&phi, &[]).unwrap();
        prop_assert!(value >= Rational::zero() && value <= Rational::one());
    }

    #[test]
    fn alpha_matches_subset_scan(g in graph(11), s in 3usize..=4) {
        let a = alpha_s(&g, s, DEFAULT_ALPHA_BUDGET).unwrap().exact();
        prop_assert_eq!(a, Some(common::brute_alpha(&g, s)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn adversary_keeps_freeness_and_bound(seed in any::<u64>(), tuple_seed in any::<u64>(), m in 1usize..20) {
        let g = random_maximal_free(24, 3, 4, seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(tuple_seed);
        let tuples: Vec<Vec<usize>> = (0..m)
            .map(|_| (0..2).map(|_| rand::Rng::gen_range(&mut rng, 0..24)).collect())
            .collect();
        let report = adversary_witness(&tuples, &g, 4).unwrap();
        prop_assert!(report.all_hold(), "{:?}", report.certified);
    }

    #[test]
    fn order_alternates(seed in any::<u64>(), q in 0usize..5) {
        let g = random_maximal_free(25, 2, 3, seed).unwrap();
        let report = order_witness(&g, 3, q).unwrap();
        prop_assert!(report.all_hold());
        let back = WitnessReport::from_json_str(&report.to_json_string()).unwrap();
        prop_assert_eq!(back, report);
    }
}
