//! Real rank of the differential of `Log: X -> R^n`, `z -> (log|z_j|)_j`, at
//! sampled points of `X = V ∩ (C^*)^n`.
//!
//! At `p` the differential sends `v in V` to `Re(v / p)` (coordinate-wise
//! quotient). With a complex basis `v_1..v_d` of `V`, the real vectors
//! `v_j, i v_j` span `V` over `R`, so the rank of the `2d x n` real matrix
//! with rows `Re(v_j / p)` and `Re(i v_j / p) = -Im(v_j / p)` is the rank of
//! `d_p Log`. Everything is exact over `Q`.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::matrix::{rational_rank, GRMatrix};

/// Real and imaginary parts of sampling coefficients are drawn from `[-B, B]`.
pub const COEFFICIENT_BOUND: i64 = 1_000_000;

const MAX_REDRAWS: usize = 100;

/// One sampled point `p = sum c_j row_j` and the rank found there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianSample {
    pub coefficients: Vec<GaussianRational>,
    pub point: Vec<GaussianRational>,
    pub rank_found: usize,
}

fn draw_point(
    a: &GRMatrix,
    rng: &mut impl Rng,
) -> Option<(Vec<GaussianRational>, Vec<GaussianRational>)> {
    let coefficients: Vec<GaussianRational> = (0..a.rows())
        .map(|_| {
            GaussianRational::from_ints(
                rng.gen_range(-COEFFICIENT_BOUND..=COEFFICIENT_BOUND),
                rng.gen_range(-COEFFICIENT_BOUND..=COEFFICIENT_BOUND),
            )
        })
        .collect();
    let point: Vec<GaussianRational> = (0..a.cols())
        .map(|k| {
            coefficients
                .iter()
                .enumerate()
                .fold(GaussianRational::zero(), |acc, (j, c)| {
                    &acc + &(c * a.get(j, k))
                })
        })
        .collect();
    point
        .iter()
        .all(|z| !z.is_zero())
        .then_some((coefficients, point))
}

/// Rank of `d_p Log` at one random point of `X`, redrawing points that hit
/// a coordinate hyperplane.
pub fn jacobian_sample(a: &GRMatrix, rng: &mut impl Rng) -> Result<JacobianSample> {
    let (coefficients, point) = (0..MAX_REDRAWS)
        .find_map(|_| draw_point(a, rng))
        .ok_or_else(|| {
            Error::InvalidParams("no sampled point avoided the coordinate hyperplanes".into())
        })?;
    let n = a.cols();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(2 * a.rows());
    for j in 0..a.rows() {
        let quotient: Vec<GaussianRational> = (0..n)
            .map(|k| {
                a.get(j, k)
                    .checked_div(&point[k])
                    .expect("nonzero coordinate")
            })
            .collect();
        rows.push(quotient.iter().map(|w| w.re.clone()).collect());
        rows.push(quotient.iter().map(|w| -w.im.clone()).collect());
    }
    Ok(JacobianSample {
        coefficients,
        point,
        rank_found: rational_rank(&rows),
    })
}

/// Maximum rank of `d_p Log` over `samples` seeded random points: a
/// certified lower bound for the amoeba dimension, attained at generic points.
pub fn amoeba_dim_numeric(a: &GRMatrix, samples: usize, seed: u64) -> Result<usize> {
    if let Some(column) = a.zero_column() {
        return Err(Error::ZeroColumn { column });
    }
    if a.rank() != a.rows() {
        return Err(Error::RankDeficientInput);
    }
    if samples == 0 {
        return Err(Error::InvalidParams(
            "at least one sample is required".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..samples {
        best = best.max(jacobian_sample(a, &mut rng)?.rank_found);
    }
    Ok(best)
}
