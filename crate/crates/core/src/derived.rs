//! The derived matroid `M'` with rank function
//!
//! ```text
//! r'(S) = min over partitions {P_1, .., P_k} of S of  sum (2 r(P_i) - 1)
//! ```
//!
//! evaluated by building the coarsest optimal partition one element at a
//! time, with one submodular minimisation whenever the basis grows.

use std::collections::HashMap;

use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::matrix::GRMatrix;
use crate::matroid::{ensure_loopless, make_linear_oracle, RankFunction, RankOracle};
use crate::partition::Partition;
use crate::sfm::{largest_feasible_j_with, Minimizer};
use crate::subset::SubsetMask;

/// Coarsest optimal partition of `S`, an `M'`-basis of `S`, and `r'(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalPartitionResult {
    pub partition: Partition,
    pub basis: SubsetMask,
    pub rprime: usize,
    /// Uncached rank evaluations in `M` spent on this query.
    pub rank_calls: u64,
}

/// Constant `C` in the measured bound `calls <= C (nk + k^3 log2(k+2))`.
pub const RANK_CALL_CONSTANT: f64 = 2.0;

/// `n k + k^3 log2(k + 2)` for `n = |S|`, `k = r'(S)`.
pub fn rank_call_budget(n: usize, k: usize) -> f64 {
    let (n, k) = (n as f64, k as f64);
    n * k + k.powi(3) * (k + 2.0).log2()
}

/// Coarsest optimal partition of `s`, processing elements in ascending order.
pub fn coarsest_optimal_partition(m: &RankOracle, s: SubsetMask) -> Result<OptimalPartitionResult> {
    let order: Vec<usize> = s.iter().collect();
    coarsest_optimal_partition_in_order(m, &order, Minimizer::default())
}

/// As [`coarsest_optimal_partition`] for `S = set(order)`, adding elements
/// in the given order.
pub fn coarsest_optimal_partition_in_order(
    m: &RankOracle,
    order: &[usize],
    minimizer: Minimizer,
) -> Result<OptimalPartitionResult> {
    let s: SubsetMask = order.iter().copied().collect();
    if s.len() != order.len() {
        return Err(Error::InvalidParams(
            "processing order repeats an element".into(),
        ));
    }
    if !s.is_subset(m.ground()) {
        return Err(Error::NotInGround {
            bits: s.bits(),
            ground: m.ground_size(),
        });
    }
    let start = m.calls();
    ensure_loopless(m, s)?;

    let mut partition = Partition::empty();
    let mut basis = SubsetMask::EMPTY;
    for &e in order {
        // e is spanned by a part: extend that part, basis unchanged
        let spanning = partition
            .parts()
            .iter()
            .copied()
            .find(|&p| m.rank(p.with(e)) == m.rank(p));
        let block = match spanning {
            Some(p) => p.with(e),
            None => {
                let j = largest_feasible_j_with(m, basis, e, minimizer)?;
                basis = basis.with(e);
                j.with(e)
            }
        };
        partition = partition.join(&Partition::trivial(block));
    }
    Ok(OptimalPartitionResult {
        partition,
        basis,
        rprime: basis.len(),
        rank_calls: m.calls() - start,
    })
}

/// `r'(s)`.
pub fn rprime(m: &RankOracle, s: SubsetMask) -> Result<usize> {
    coarsest_optimal_partition(m, s).map(|r| r.rprime)
}

/// `r'(s) = |s|`.
pub fn independent_in_mprime(m: &RankOracle, s: SubsetMask) -> Result<bool> {
    Ok(rprime(m, s)? == s.len())
}

/// `M'` as a rank function, caching one [`OptimalPartitionResult`] per queried set.
pub struct DerivedOracle {
    base: RankOracle,
    minimizer: Minimizer,
    results: Mutex<HashMap<u64, OptimalPartitionResult>>,
}

impl DerivedOracle {
    pub fn base(&self) -> &RankOracle {
        &self.base
    }

    pub fn with_minimizer(mut self, minimizer: Minimizer) -> Self {
        self.minimizer = minimizer;
        self.results.get_mut().clear();
        self
    }

    pub fn result(&self, s: SubsetMask) -> Result<OptimalPartitionResult> {
        if let Some(r) = self.results.lock().get(&s.bits()) {
            return Ok(r.clone());
        }
        let order: Vec<usize> = s.iter().collect();
        let r = coarsest_optimal_partition_in_order(&self.base, &order, self.minimizer)?;
        self.results
            .lock()
            .entry(s.bits())
            .or_insert_with(|| r.clone());
        Ok(r)
    }

    pub fn rprime(&self, s: SubsetMask) -> Result<usize> {
        self.result(s).map(|r| r.rprime)
    }

    /// Wraps `self` in a memoising [`RankOracle`], so `M'` can be used anywhere
    /// a matroid is expected (including deriving again).
    pub fn into_oracle(self) -> RankOracle {
        RankOracle::new(self)
    }
}

impl RankFunction for DerivedOracle {
    fn ground_size(&self) -> usize {
        self.base.ground_size()
    }

    fn rank(&self, s: SubsetMask) -> usize {
        // loops are rejected at construction; remaining errors are bugs
        self.rprime(s).expect("derived rank evaluation failed")
    }
}

pub fn derived_oracle(m: &RankOracle) -> Result<DerivedOracle> {
    ensure_loopless(m, m.ground())?;
    Ok(DerivedOracle {
        base: m.clone(),
        minimizer: Minimizer::default(),
        results: Mutex::new(HashMap::new()),
    })
}

/// Real dimension of the amoeba of `rowspace(a) ∩ (C^*)^n`, with the
/// coarsest partition attaining it.
pub fn amoeba_dimension(a: &GRMatrix) -> Result<(usize, Partition)> {
    let m = make_linear_oracle(a)?;
    let r = coarsest_optimal_partition(&m, m.ground())?;
    Ok((r.rprime, r.partition))
}
