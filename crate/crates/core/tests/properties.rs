mod common;

use common::*;
use hypergraph_kcut::oracle::{
    accounting, aggregate_parts, edge_classes, min_kcut_bruteforce, uncross_family, uncrossing_case, AccountedPartition,
};
use hypergraph_kcut::{
    cut_divide_conquer, cut_recursive, min_terminal_cut, parse_instance, solve, write_instance, Algorithm, Hypergraph,
    SolveOptions, VertexSet,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn hypergraph(n: std::ops::RangeInclusive<usize>, m_max: usize) -> impl Strategy<Value = Hypergraph> {
    n.prop_flat_map(move |n| {
        let edge = (prop::collection::vec(0..n, n.min(2)..=n.min(5)), 1..=5u64);
        prop::collection::vec(edge, 0..=m_max).prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

fn with_seed(n: std::ops::RangeInclusive<usize>, m_max: usize) -> impl Strategy<Value = (Hypergraph, u64)> {
    (hypergraph(n, m_max), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cut_function_is_symmetric_and_submodular((h, seed) in with_seed(2..=9, 10)) {
        let n = h.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = VertexSet::new((0..n).filter(|_| rng.gen_bool(0.5)));
        let b = VertexSet::new((0..n).filter(|_| rng.gen_bool(0.5)));
        prop_assert_eq!(h.boundary_cost(&a), h.boundary_cost(&a.complement(n)));
        prop_assert_eq!(h.boundary_cost(&a), cut_bits(&h, a.to_bits()));
        prop_assert!(
            h.boundary_cost(&a) + h.boundary_cost(&b)
                >= h.boundary_cost(&a.intersection(&b)) + h.boundary_cost(&a.union(&b))
        );
    }

    #[test]
    fn terminal_cut_matches_enumeration((h, seed) in with_seed(2..=10, 12)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (s, t) = random_terminals(&mut rng, h.n());
        let tc = min_terminal_cut(&h, &s, &t).unwrap();
        let (value, lo, hi) = brute_terminal_cut(&h, &s, &t);
        prop_assert_eq!(tc.value, value);
        prop_assert_eq!(&tc.src_minimal, &lo);
        prop_assert_eq!(&tc.src_maximal, &hi);
    }

    #[test]
    fn swapping_terminals_complements_sides((h, seed) in with_seed(2..=9, 10)) {
        let n = h.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (s, t) = random_terminals(&mut rng, n);
        let st = min_terminal_cut(&h, &s, &t).unwrap();
        let ts = min_terminal_cut(&h, &t, &s).unwrap();
        prop_assert_eq!(st.value, ts.value);
        prop_assert_eq!(ts.src_minimal, st.src_maximal.complement(n));
        prop_assert_eq!(ts.src_maximal, st.src_minimal.complement(n));
    }

    #[test]
    fn two_part_sigma_is_sum_of_cuts((h, seed) in with_seed(4..=9, 12)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ap = random_accounted(&mut rng, h.n(), 2);
        let sigma = accounting(&h, &ap).unwrap().sigma;
        let a1 = ap.y()[0].union(ap.w());
        let a2 = ap.y()[1].union(ap.w());
        prop_assert_eq!(h.cut_value(&a1).unwrap() + h.cut_value(&a2).unwrap(), sigma);
    }

    #[test]
    fn refinement_step_bound((h, seed) in with_seed(5..=9, 12), p in 1usize..=3) {
        prop_assume!(h.n() >= p + 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let before = random_accounted(&mut rng, h.n(), p);
        if let Some(q) = random_refiner(&mut rng, &before, h.n()) {
            let after = before.refine_with(&q).unwrap();
            let lhs = accounting(&h, &after).unwrap().sigma;
            let rhs = accounting(&h, &before).unwrap().sigma + h.boundary_cost(&q);
            prop_assert!(lhs + h.boundary_cost(&before.w().intersection(&q)) <= rhs);
        }
    }

    #[test]
    fn sigma_counts_crossing_edges_once_or_twice((h, seed) in with_seed(4..=9, 12), p in 1usize..=4) {
        prop_assume!(h.n() >= p + 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ap = random_accounted(&mut rng, h.n(), p);
        let labels = ap.partition().labels();
        for (e, class) in h.edges().iter().zip(edge_classes(&h, &ap).unwrap()) {
            let hit: std::collections::BTreeSet<usize> = e.vertices().iter().map(|&v| labels[v]).collect();
            let ys = hit.iter().filter(|&&l| l < p).count();
            let expected = match hit.len() {
                0 | 1 => 0,
                2 if ys == 1 => 1,
                _ => 2,
            };
            prop_assert_eq!(class.sigma_count(), expected, "edge {:?} labels {:?}", e.vertices(), hit);
        }
    }

    #[test]
    fn aggregation_always_succeeds((h, seed) in with_seed(6..=10, 12), k in 2usize..=3) {
        let p = 2 * k - 2;
        prop_assume!(h.n() >= p + 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ap = random_accounted(&mut rng, h.n(), p);
        let agg = aggregate_parts(&h, &ap, k).unwrap();
        let acc = accounting(&h, &ap).unwrap();
        prop_assert_eq!(agg.partition.k(), k);
        prop_assert!(2 * h.partition_cost(&agg.partition).unwrap() <= acc.cross_cost + acc.alpha + acc.beta);
        let last = &agg.partition.parts()[k - 1];
        prop_assert!(ap.w().union(ap.z()).is_subset(last) && last.len() > ap.w().len() + ap.z().len());
    }

    #[test]
    fn uncrossing_bound_with_enough_terminals((h, seed) in with_seed(6..=8, 12), smallest in any::<bool>()) {
        let k = 2;
        let n = h.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let labels = random_labels(&mut rng, n, 3);
        let sets = sets_from_labels(&labels, 3);
        // U = S ∪ R ∪ extra, with |S| = 2k-2
        let outside = &sets[2];
        let u = outside.complement(n);
        prop_assume!(u.len() >= 3);
        let members: Vec<usize> = u.iter().collect();
        let r = VertexSet::from([members[0]]);
        let s = members[1..3].to_vec();
        if let Some(case) = uncrossing_case(&h, k, &u, &r, &s, smallest) {
            let ap = uncross_family(&h, &u, &r, &s, &case.family).unwrap();
            prop_assert!(accounting(&h, &ap).unwrap().sigma <= case.pair_sum);
            prop_assert!(case.holds(), "best {} vs pair sum {}", case.best, case.pair_sum);
        }
    }

    #[test]
    fn solvers_agree_with_enumeration(h in hypergraph(3..=7, 9), k in 2usize..=4) {
        prop_assume!(k <= h.n());
        let bf = min_kcut_bruteforce(&h, k).unwrap();
        for sol in [cut_recursive(&h, k).unwrap(), cut_divide_conquer(&h, k).unwrap()] {
            prop_assert_eq!(sol.value, bf.value);
            prop_assert!(sol.partition.is_canonical());
            prop_assert_eq!(sol.partition.k(), k);
            prop_assert_eq!(h.partition_cost(&sol.partition).unwrap(), sol.value);
            prop_assert!(bf.optima.contains(&sol.partition));
        }
    }

    #[test]
    fn solutions_ignore_thread_count(h in hypergraph(4..=7, 9), k in 2usize..=3) {
        let one = SolveOptions { threads: Some(1), ..SolveOptions::default() };
        let two = SolveOptions { threads: Some(2), ..SolveOptions::default() };
        for algo in [Algorithm::Recursive, Algorithm::DivideConquer] {
            let a = solve(&h, k, algo, &one).unwrap();
            let b = solve(&h, k, algo, &two).unwrap();
            prop_assert_eq!(&a.partition, &b.partition);
            prop_assert_eq!(a.value, b.value);
            prop_assert_eq!(a.stats.terminal_cut_calls, b.stats.terminal_cut_calls);
        }
    }

    #[test]
    fn instance_text_round_trips(h in hypergraph(1..=12, 15)) {
        let text = write_instance(&h);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(write_instance(&back), text);
    }

    #[test]
    fn unit_text_normalizes(h in hypergraph(2..=8, 8)) {
        let unit = Hypergraph::unit(h.n(), h.edges().iter().map(|e| e.vertices().to_vec())).unwrap();
        let mut text = format!("% generated\n{} {}\n", unit.m(), unit.n());
        for e in unit.edges() {
            let ids: Vec<String> = e.vertices().iter().rev().map(|v| (v + 1).to_string()).collect();
            text.push_str(&ids.join(" "));
            text.push('\n');
        }
        prop_assert_eq!(parse_instance(&text).unwrap(), unit.clone());
        prop_assert_eq!(write_instance(&parse_instance(&text).unwrap()), write_instance(&unit));
    }
}

#[test]
fn accounting_rejects_foreign_partition() {
    let ap = AccountedPartition::new(3, vec![[0].into()], [1].into(), [2].into()).unwrap();
    assert!(accounting(&h3(), &ap).is_err());
}
