//! Named instances: the 4x7 connected example with generic stars, the
//! truncated direct sums of `U_{c,2c}`, and seeded random linear matroids.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::matrix::GRMatrix;
use crate::matroid::{
    connected_components, direct_sum, free_matroid, make_linear_oracle, make_uniform_oracle,
    truncate, RankOracle,
};
use crate::partition::Partition;
use crate::subset::{SubsetMask, MAX_GROUND};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

/// Stars are drawn uniformly from `[-STAR_BOUND, STAR_BOUND]`.
pub const STAR_BOUND: i64 = 1_000_000;

const MAX_RESAMPLES: usize = 64;

/// ```text
/// 1 0 0 0 a c e
/// 0 1 0 0 b d f
/// 0 0 1 0 0 0 g
/// 0 0 0 1 0 0 h
/// ```
/// with `stars = [a, b, c, d, e, f, g, h]`.
pub fn nisse_with_stars(stars: [i64; 8]) -> Result<GRMatrix> {
    let [a, b, c, d, e, f, g, h] = stars;
    GRMatrix::from_integers(&[
        [1, 0, 0, 0, a, c, e],
        [0, 1, 0, 0, b, d, f],
        [0, 0, 1, 0, 0, 0, g],
        [0, 0, 0, 1, 0, 0, h],
    ])
}

/// `true` when the stars are general enough: columns `{1,2,5,6}` have rank
/// 2, the matrix has rank 4 and its matroid is connected.
pub fn nisse_is_generic(a: &GRMatrix) -> bool {
    let Ok(m) = make_linear_oracle(a) else {
        return false;
    };
    m.rank(SubsetMask::from_elements([0, 1, 4, 5])) == 2
        && m.full_rank() == 4
        && connected_components(&m).is_ok_and(|p| p.len() == 1)
}

/// The 4x7 example with seeded integer stars, resampled until generic.
pub fn nisse_matrix(seed: u64) -> Result<GRMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RESAMPLES {
        let stars: [i64; 8] = std::array::from_fn(|_| rng.gen_range(-STAR_BOUND..=STAR_BOUND));
        let a = nisse_with_stars(stars)?;
        if nisse_is_generic(&a) {
            return Ok(a);
        }
    }
    Err(Error::InvalidParams(format!(
        "no generic stars found for seed {seed}"
    )))
}

/// `k` copies of `U_{c,2c}` summed and then truncated `c` times: rank
/// `ck - c` on `2ck` elements.
pub fn trunc_sum_oracle(c: usize, k: usize) -> Result<RankOracle> {
    if c == 0 || k < 2 {
        return Err(Error::InvalidParams(format!(
            "trunc-sum needs c >= 1 and k >= 2, got c={c}, k={k}"
        )));
    }
    if 2 * c * k > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: 2 * c * k,
            limit: MAX_GROUND,
        });
    }
    let block = make_uniform_oracle(c, 2 * c)?;
    let mut m = direct_sum(&vec![block; k])?;
    for _ in 0..c {
        m = truncate(&m)?;
    }
    Ok(m)
}

/// The block partition `{E_1, .., E_k}` of [`trunc_sum_oracle`]'s ground set.
pub fn block_partition(c: usize, k: usize) -> Partition {
    let parts = (0..k)
        .map(|i| SubsetMask(SubsetMask::full(2 * c).bits() << (2 * c * i)))
        .collect();
    Partition::new(parts).expect("blocks are disjoint")
}

fn small_gaussian(rng: &mut impl Rng, real_only: bool) -> GaussianRational {
    let re = rng.gen_range(-3..=3);
    let im = if real_only { 0 } else { rng.gen_range(-2..=2) };
    GaussianRational::from_ints(re, im)
}

/// A random `d x n` matrix over `Q(i)`, `1 <= d <= max_rows`, `d <= n <=
/// max_cols`, with full row rank and no zero column. Columns are a mix of
/// dense entries, sparse entries and multiples of earlier columns so that
/// the resulting matroids are far from uniform.
pub fn random_linear_matrix(rng: &mut impl Rng, max_rows: usize, max_cols: usize) -> GRMatrix {
    loop {
        let d = rng.gen_range(1..=max_rows);
        let n = rng.gen_range(d..=max_cols);
        let real_only = rng.gen_bool(0.3);
        let mut cols: Vec<Vec<GaussianRational>> = Vec::with_capacity(n);
        for j in 0..n {
            let kind = rng.gen_range(0..4);
            let col = if kind == 0 && j > 0 {
                let src = cols.choose(rng).expect("j > 0").clone();
                let scale = GaussianRational::from_ints(
                    rng.gen_range(1..=3),
                    if real_only { 0 } else { rng.gen_range(-1..=1) },
                );
                src.iter().map(|z| z * &scale).collect()
            } else if kind == 1 {
                let support: Vec<bool> = (0..d).map(|_| rng.gen_bool(0.4)).collect();
                (0..d)
                    .map(|i| {
                        if support[i] {
                            small_gaussian(rng, real_only)
                        } else {
                            GaussianRational::from_ints(0, 0)
                        }
                    })
                    .collect()
            } else {
                (0..d).map(|_| small_gaussian(rng, real_only)).collect()
            };
            cols.push(col);
        }
        let rows: Vec<Vec<GaussianRational>> = (0..d)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let a = GRMatrix::from_rows(rows).expect("dimensions are valid");
        if a.zero_column().is_none() && a.rank() == d {
            return a;
        }
    }
}

/// `count` random matrices (at most 4 rows, 8 columns) from one seed.
pub fn random_linear_matrices(count: usize, seed: u64) -> Vec<GRMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_linear_matrix(&mut rng, 4, 8))
        .collect()
}

/// A named regression instance; `matrix` is present when the matroid comes
/// with a linear representation.
#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub name: String,
    pub oracle: RankOracle,
    pub matrix: Option<GRMatrix>,
}

impl CorpusInstance {
    pub fn from_matrix(name: impl Into<String>, matrix: GRMatrix) -> Result<Self> {
        Ok(CorpusInstance {
            name: name.into(),
            oracle: make_linear_oracle(&matrix)?,
            matrix: Some(matrix),
        })
    }

    pub fn from_oracle(name: impl Into<String>, oracle: RankOracle) -> Self {
        CorpusInstance {
            name: name.into(),
            oracle,
            matrix: None,
        }
    }
}

/// Real `d x n` Vandermonde matrix on nodes `1..=n`; presents `U_{d,n}`.
pub fn vandermonde(d: usize, n: usize) -> Result<GRMatrix> {
    if d == 0 || d > n {
        return Err(Error::InvalidParams(format!(
            "uniform d={d} n={n} needs 1 <= d <= n"
        )));
    }
    let rows: Vec<Vec<GaussianRational>> = (0..d)
        .map(|j| {
            (1..=n)
                .map(|x| {
                    GaussianRational::from_real(BigRational::from_integer(
                        BigInt::from(x).pow(j as u32),
                    ))
                })
                .collect()
        })
        .collect();
    GRMatrix::from_rows(rows)
}

/// Seed of the random part of [`corpus`].
pub const CORPUS_SEED: u64 = 20_240_601;

/// Built-in regression corpus, all with at most 8 elements: the named
/// examples, small sums and `random` seeded random linear matroids.
pub fn corpus(random: usize) -> Vec<CorpusInstance> {
    let mut out = vec![
        CorpusInstance::from_matrix("nisse", nisse_matrix(7).expect("generic stars")).unwrap(),
        CorpusInstance::from_matrix("identity-4", GRMatrix::identity(4).unwrap()).unwrap(),
        CorpusInstance::from_matrix("ones-3", GRMatrix::ones(3).unwrap()).unwrap(),
        CorpusInstance::from_matrix(
            "uniform-2-4",
            GRMatrix::from_integers(&[[1, 0, 1, 1], [0, 1, 2, 5]]).unwrap(),
        )
        .unwrap(),
        CorpusInstance::from_oracle("trunc-sum-1-4", trunc_sum_oracle(1, 4).unwrap()),
        CorpusInstance::from_oracle("uniform-3-7", make_uniform_oracle(3, 7).unwrap()),
        CorpusInstance::from_oracle(
            "u24+u12+free2",
            direct_sum(&[
                make_uniform_oracle(2, 4).unwrap(),
                make_uniform_oracle(1, 2).unwrap(),
                free_matroid(2).unwrap(),
            ])
            .unwrap(),
        ),
    ];
    for (i, a) in random_linear_matrices(random, CORPUS_SEED)
        .into_iter()
        .enumerate()
    {
        out.push(CorpusInstance::from_matrix(format!("random-{i}"), a).unwrap());
    }
    out
}
