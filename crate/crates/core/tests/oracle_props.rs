use num_traits::Zero;
use proptest::prelude::*;
use schubert_core::coincidence::chasles_count;
use schubert_core::oracle::{
    chasles_diagonal_count, count_transversals, four_lines_instance, meets, random_chasles_instance, random_line,
    ChaslesOutcome, Transversals,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_lines_satisfy_the_quadric(seed in any::<u64>()) {
        let l = random_line(seed);
        prop_assert!(l.quadric().is_zero());
        prop_assert_eq!(random_line(seed), l);
    }

    #[test]
    fn transversals_meet_every_input(seed in any::<u64>()) {
        let lines = four_lines_instance(seed);
        let result = count_transversals(&lines);
        prop_assert_eq!(&count_transversals(&four_lines_instance(seed)), &result);
        if let Transversals::Finite { lines: found, .. } = &result {
            for t in found {
                prop_assert!(t.quadric().is_zero());
                for l in &lines {
                    prop_assert!(meets(t, l));
                }
            }
        }
    }

    #[test]
    fn chasles_agrees_with_ring(p in 0usize..=4, q in 0usize..=4, seed in any::<u64>()) {
        let instance = random_chasles_instance(p, q, seed);
        match chasles_diagonal_count(&instance) {
            ChaslesOutcome::Finite(n) => prop_assert_eq!(n, chasles_count(p as u64, q as u64)),
            ChaslesOutcome::Infinite => {}
        }
    }
}
