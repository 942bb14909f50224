use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::matrix::{linear_rank, GRMatrix};
use crate::subset::{SubsetMask, MAX_GROUND};

/// A matroid rank function `r: 2^E -> N` on `E = {0, .., n-1}`.
pub trait RankFunction: Send + Sync {
    fn ground_size(&self) -> usize;

    fn rank(&self, s: SubsetMask) -> usize;
}

#[derive(Default)]
struct Cache {
    ranks: Mutex<HashMap<u64, usize>>,
    misses: AtomicU64,
    lookups: AtomicU64,
}

/// A memoising handle around a [`RankFunction`].
///
/// `calls()` counts cache misses, i.e. distinct rank evaluations of the
/// underlying function. Composite oracles (truncations, sums) memoise only
/// at their own level and query their parts uncached. Clones share the cache and the counter; use
/// [`RankOracle::fresh`] for an independent count.
#[derive(Clone)]
pub struct RankOracle {
    inner: Arc<dyn RankFunction>,
    cache: Arc<Cache>,
}

impl RankOracle {
    pub fn new<F: RankFunction + 'static>(f: F) -> Self {
        Self::from_arc(Arc::new(f))
    }

    pub fn from_arc(inner: Arc<dyn RankFunction>) -> Self {
        RankOracle {
            inner,
            cache: Arc::new(Cache::default()),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    pub fn ground(&self) -> SubsetMask {
        SubsetMask::full(self.ground_size())
    }

    /// `r(s)`, memoised.
    pub fn rank(&self, s: SubsetMask) -> usize {
        assert!(
            s.is_subset(self.ground()),
            "subset {s:?} outside ground set of size {}",
            self.ground_size()
        );
        self.cache.lookups.fetch_add(1, Ordering::Relaxed);
        if let Some(&r) = self.cache.ranks.lock().get(&s.bits()) {
            return r;
        }
        let r = self.inner.rank(s);
        let mut ranks = self.cache.ranks.lock();
        if ranks.insert(s.bits(), r).is_none() {
            self.cache.misses.fetch_add(1, Ordering::Relaxed);
        }
        r
    }

    pub fn try_rank(&self, s: SubsetMask) -> Result<usize> {
        if !s.is_subset(self.ground()) {
            return Err(Error::NotInGround {
                bits: s.bits(),
                ground: self.ground_size(),
            });
        }
        Ok(self.rank(s))
    }

    /// `r(s)` straight from the rank function, bypassing cache and counter.
    pub fn rank_uncached(&self, s: SubsetMask) -> usize {
        self.inner.rank(s)
    }

    /// `r(E)`.
    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    /// Number of distinct (uncached) rank evaluations so far.
    pub fn calls(&self) -> u64 {
        self.cache.misses.load(Ordering::Relaxed)
    }

    /// Total number of `rank` queries, cached or not.
    pub fn lookups(&self) -> u64 {
        self.cache.lookups.load(Ordering::Relaxed)
    }

    /// Same rank function with an empty cache and zeroed counters.
    pub fn fresh(&self) -> Self {
        Self::from_arc(Arc::clone(&self.inner))
    }

    /// The oracle with elements relabelled: element `i` of the result is
    /// element `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<RankOracle> {
        let n = self.ground_size();
        let mut seen = SubsetMask::EMPTY;
        for &e in order {
            if e >= n || seen.contains(e) {
                return Err(Error::InvalidParams("order is not a permutation".into()));
            }
            seen = seen.with(e);
        }
        if order.len() != n {
            return Err(Error::InvalidParams("order is not a permutation".into()));
        }
        Ok(RankOracle::new(Permuted {
            base: self.fresh(),
            order: order.to_vec(),
        }))
    }
}

impl fmt::Debug for RankOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RankOracle")
            .field("ground_size", &self.ground_size())
            .field("calls", &self.calls())
            .finish()
    }
}

impl RankFunction for RankOracle {
    fn ground_size(&self) -> usize {
        RankOracle::ground_size(self)
    }

    fn rank(&self, s: SubsetMask) -> usize {
        RankOracle::rank(self, s)
    }
}

struct Linear {
    matrix: GRMatrix,
}

impl RankFunction for Linear {
    fn ground_size(&self) -> usize {
        self.matrix.cols()
    }

    fn rank(&self, s: SubsetMask) -> usize {
        linear_rank(&self.matrix, s)
    }
}

/// The matroid of the row space of `a`: `r(S)` is the rank of the columns in `S`.
pub fn make_linear_oracle(a: &GRMatrix) -> Result<RankOracle> {
    if let Some(column) = a.zero_column() {
        return Err(Error::ZeroColumn { column });
    }
    Ok(RankOracle::new(Linear { matrix: a.clone() }))
}

struct Uniform {
    d: usize,
    n: usize,
}

impl RankFunction for Uniform {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank(&self, s: SubsetMask) -> usize {
        s.len().min(self.d)
    }
}

/// `U_{d,n}`: `r(S) = min(d, |S|)`.
pub fn make_uniform_oracle(d: usize, n: usize) -> Result<RankOracle> {
    if n > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: n,
            limit: MAX_GROUND,
        });
    }
    if d == 0 || d > n {
        return Err(Error::InvalidParams(format!(
            "uniform matroid needs 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    Ok(RankOracle::new(Uniform { d, n }))
}

/// The free matroid `U_{n,n}`.
pub fn free_matroid(n: usize) -> Result<RankOracle> {
    make_uniform_oracle(n, n)
}

struct Truncation {
    base: RankOracle,
    cap: usize,
}

impl RankFunction for Truncation {
    fn ground_size(&self) -> usize {
        self.base.ground_size()
    }

    fn rank(&self, s: SubsetMask) -> usize {
        self.base.rank_uncached(s).min(self.cap)
    }
}

/// `r_N(S) = min(r(S), d - 1)` where `d = r(E)`.
pub fn truncate(m: &RankOracle) -> Result<RankOracle> {
    let d = m.full_rank();
    if d == 0 {
        return Err(Error::RankZero);
    }
    Ok(RankOracle::new(Truncation {
        base: m.clone(),
        cap: d - 1,
    }))
}

struct DirectSum {
    parts: Vec<(RankOracle, SubsetMask, usize)>,
    n: usize,
}

impl RankFunction for DirectSum {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn rank(&self, s: SubsetMask) -> usize {
        self.parts
            .iter()
            .map(|(m, block, offset)| {
                m.rank_uncached(SubsetMask(s.intersection(*block).bits() >> offset))
            })
            .sum()
    }
}

/// Direct sum; the ground set is the concatenation of the summands' ground sets.
pub fn direct_sum(ms: &[RankOracle]) -> Result<RankOracle> {
    if ms.is_empty() {
        return Err(Error::InvalidParams("direct sum of nothing".into()));
    }
    let n: usize = ms.iter().map(RankOracle::ground_size).sum();
    if n > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: n,
            limit: MAX_GROUND,
        });
    }
    if let [single] = ms {
        return Ok(single.clone());
    }
    let mut offset = 0;
    let parts = ms
        .iter()
        .map(|m| {
            let block = SubsetMask(SubsetMask::full(m.ground_size()).bits() << offset);
            let entry = (m.clone(), block, offset);
            offset += m.ground_size();
            entry
        })
        .collect();
    Ok(RankOracle::new(DirectSum { parts, n }))
}

struct Permuted {
    base: RankOracle,
    order: Vec<usize>,
}

impl RankFunction for Permuted {
    fn ground_size(&self) -> usize {
        self.order.len()
    }

    fn rank(&self, s: SubsetMask) -> usize {
        self.base
            .rank_uncached(s.iter().map(|i| self.order[i]).collect())
    }
}
