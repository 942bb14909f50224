mod common;

use amoeba_core::matrix::linear_rank_field;
use amoeba_core::matroid::{direct_sum, make_uniform_oracle, truncate};
use amoeba_core::{linear_rank, SubsetMask};
use common::{matrix_from_seed, oracle_from_seed};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pivot_order_does_not_change_rank(seed in any::<u64>()) {
        let a = matrix_from_seed(seed, 4, 8);
        for s in SubsetMask::full(a.cols()).subsets() {
            prop_assert_eq!(linear_rank(&a, s), linear_rank_field(&a, s));
        }
    }

    #[test]
    fn linear_rank_is_monotone_and_submodular(seed in any::<u64>()) {
        let m = oracle_from_seed(seed, 4, 7);
        let ground = m.ground();
        prop_assert_eq!(m.rank(SubsetMask::EMPTY), 0);
        for s in ground.subsets() {
            prop_assert!(m.rank(s) <= s.len());
            for t in ground.subsets() {
                if s.is_subset(t) {
                    prop_assert!(m.rank(s) <= m.rank(t));
                }
                prop_assert!(
                    m.rank(s) + m.rank(t) >= m.rank(s.union(t)) + m.rank(s.intersection(t))
                );
            }
        }
    }

    #[test]
    fn memoised_rank_matches_uncached(seed in any::<u64>()) {
        let m = oracle_from_seed(seed, 4, 8);
        for s in m.ground().subsets() {
            let first = m.rank(s);
            prop_assert_eq!(first, m.rank_uncached(s));
            prop_assert_eq!(first, m.rank(s));
        }
        prop_assert_eq!(m.calls(), 1 << m.ground_size());
    }

    #[test]
    fn direct_sum_is_additive(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = oracle_from_seed(s1, 3, 5);
        let b = oracle_from_seed(s2, 3, 5);
        let sum = direct_sum(&[a.clone(), b.clone()]).unwrap();
        let na = a.ground_size();
        for s in sum.ground().subsets() {
            let left = SubsetMask(s.bits() & a.ground().bits());
            let right = SubsetMask(s.bits() >> na);
            prop_assert_eq!(sum.rank(s), a.rank(left) + b.rank(right));
        }
    }

    #[test]
    fn truncation_lowers_full_rank_by_one(seed in any::<u64>()) {
        let m = oracle_from_seed(seed, 4, 8);
        prop_assume!(m.full_rank() > 1);
        let t = truncate(&m).unwrap();
        prop_assert_eq!(t.full_rank(), m.full_rank() - 1);
        for s in m.ground().subsets() {
            prop_assert_eq!(t.rank(s), m.rank(s).min(m.full_rank() - 1));
        }
    }
}

#[test]
fn uniform_oracles_satisfy_axioms_up_to_twelve() {
    for (d, n) in [(1, 12), (3, 12), (6, 12), (12, 12)] {
        let m = make_uniform_oracle(d, n).unwrap();
        let sets: Vec<_> = m.ground().subsets().step_by(7).collect();
        for &s in &sets {
            for &t in &sets {
                assert!(m.rank(s) + m.rank(t) >= m.rank(s.union(t)) + m.rank(s.intersection(t)));
                if s.is_subset(t) {
                    assert!(m.rank(s) <= m.rank(t));
                }
            }
        }
    }
}
