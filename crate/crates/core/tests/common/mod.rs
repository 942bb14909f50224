#![allow(dead_code)]

use amoeba_core::instances::random_linear_matrix;
use amoeba_core::matroid::make_linear_oracle;
use amoeba_core::{GRMatrix, RankOracle, SubsetMask};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn matrix_from_seed(seed: u64, max_rows: usize, max_cols: usize) -> GRMatrix {
    random_linear_matrix(&mut ChaCha8Rng::seed_from_u64(seed), max_rows, max_cols)
}

pub fn oracle_from_seed(seed: u64, max_rows: usize, max_cols: usize) -> RankOracle {
    make_linear_oracle(&matrix_from_seed(seed, max_rows, max_cols)).unwrap()
}

pub fn random_subset(rng: &mut impl Rng, ground: SubsetMask) -> SubsetMask {
    SubsetMask(rng.gen::<u64>() & ground.bits())
}
