use num_bigint::BigInt;
use proptest::prelude::*;
use schubert_core::coincidence::curve_class;
use schubert_core::multipoint::{
    expand_coincidence, factorial, tangency, tangency_count, tangency_from_expansion, Count, MultipointExpression,
};

fn line(name: &str) -> MultipointExpression {
    MultipointExpression::line_symbol(0, name).unwrap()
}

fn problem() -> impl Strategy<Value = (usize, MultipointExpression)> {
    prop::sample::select(vec![(1, "g_s"), (2, "g_e"), (2, "g_p"), (4, "")]).prop_map(|(k, extra)| {
        let e = if extra.is_empty() { MultipointExpression::one(0) } else { line(extra) };
        (k, e)
    })
}

fn permuted_problem() -> impl Strategy<Value = (usize, MultipointExpression, Vec<usize>)> {
    problem().prop_flat_map(|(k, extra)| {
        let perm = Just((0..2 * k).collect::<Vec<_>>()).prop_shuffle();
        (Just(k), Just(extra), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn marker_permutation_invariance((k, extra, perm) in permuted_problem()) {
        let base = tangency(k, &extra).unwrap();
        let permuted = tangency_from_expansion(k, base.expanded.permute_markers(&perm)).unwrap();
        prop_assert_eq!(&permuted.count, &base.count);
        prop_assert_eq!(permuted.reduced.symmetrize(), base.reduced.symmetrize());
    }

    #[test]
    fn integer_valued_at_every_n((k, extra) in problem(), n in -50i64..50) {
        let t = tangency(k, &extra).unwrap();
        let raw = t.valuation.eval_i64(n);
        prop_assert_eq!(&raw % factorial(k), BigInt::from(0));
        prop_assert_eq!(t.count.eval_i64(n), raw / factorial(k));
    }
}

#[test]
fn exact_factorial_divisibility() {
    for (k, extra) in [(1, line("g_s")), (2, line("g_e")), (4, MultipointExpression::one(0))] {
        let t = tangency(k, &extra).unwrap();
        assert!(t.valuation.values_divisible_by(&factorial(k)), "k = {k}");
    }
}

#[test]
fn one_pair_matches_curve_class() {
    let count = tangency_count(1, &line("g_s")).unwrap();
    assert_eq!(count, Count::new(curve_class(), BigInt::from(1)).unwrap());
}

#[test]
fn reduction_keeps_codimension() {
    for (k, extra) in [(1, line("g_s")), (2, line("g_e")), (4, MultipointExpression::one(0))] {
        let t = tangency(k, &extra).unwrap();
        assert_eq!(t.expanded.codims(), vec![4]);
        assert_eq!(t.reduced.codims(), vec![4]);
        assert_eq!(expand_coincidence(k, &extra).unwrap(), t.expanded);
    }
}
