//! Workloads shared by the criterion benchmarks.

use amoeba_core::instances::{nisse_matrix, trunc_sum_oracle};
use amoeba_core::matroid::make_linear_oracle;
use amoeba_core::sfm::ScaledCunninghamFn;
use amoeba_core::{coarsest_optimal_partition, RankOracle, SubsetMask};

/// Named oracles for whole-run benchmarks of the coarsest optimal partition.
pub fn algorithm_workloads() -> Vec<(String, RankOracle)> {
    let mut out = vec![(
        "nisse".to_string(),
        make_linear_oracle(&nisse_matrix(0).expect("generic stars")).expect("no zero column"),
    )];
    for (c, k) in [(1, 8), (2, 4), (2, 6), (2, 8)] {
        out.push((
            format!("trunc-sum-{c}-{k}"),
            trunc_sum_oracle(c, k).expect("valid family"),
        ));
    }
    out
}

/// A minimisation instance `(M, B, e)` with `B + e` independent in the derived
/// matroid and `|B| = k - 1`, taken from the truncated sum of `k` copies of `U_{1,2}`.
pub fn sfm_instance(k: usize) -> (RankOracle, SubsetMask, usize) {
    let m = trunc_sum_oracle(1, k).expect("valid family");
    let basis = coarsest_optimal_partition(&m, m.ground())
        .expect("loopless")
        .basis;
    let e = basis.iter().next_back().expect("nonempty basis");
    (m, basis.without(e), e)
}

/// Builds the scaled function for an instance from [`sfm_instance`].
pub fn sfm_function(instance: &(RankOracle, SubsetMask, usize)) -> ScaledCunninghamFn<'_> {
    ScaledCunninghamFn::new(&instance.0, instance.1, instance.2).expect("e outside B")
}
