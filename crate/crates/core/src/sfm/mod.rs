//! Minimisation of the scaled Cunningham-type function
//!
//! ```text
//! F(I) = 2k (2 r(I + e) - 2 - |I|) - |I|,    I ⊆ B, k = |B|,
//! ```
//!
//! which is `2k` times `f(I) = 2r(I+e) - 1 - |I+e| - |I| / 2k`. `F` is
//! submodular and integer valued, `F(∅) = 0` for loopless `M`, and its
//! largest minimiser is the largest `J ⊆ B` with `2 r(J + e) - 1 = |J + e|`
//! whenever `B + e` is independent in the derived matroid.

mod brute;
mod mnp;

pub use brute::{minimize_brute, BRUTE_FORCE_LIMIT};
pub use mnp::minimize_mnp;

use crate::error::{Error, Result};
use crate::matroid::RankOracle;
use crate::subset::SubsetMask;

/// Default largest `|B|` solved by exhaustive enumeration when dispatching
/// automatically. `2^k` stays below `k^3 log2(k+2)` up to here.
pub const DEFAULT_BRUTE_LIMIT: usize = 12;

/// The function `F` for fixed `(M, B, e)`.
#[derive(Clone, Debug)]
pub struct ScaledCunninghamFn<'a> {
    oracle: &'a RankOracle,
    base: SubsetMask,
    element: usize,
}

impl<'a> ScaledCunninghamFn<'a> {
    pub fn new(oracle: &'a RankOracle, base: SubsetMask, element: usize) -> Result<Self> {
        if base.contains(element) {
            return Err(Error::InvalidParams(format!(
                "element {element} must not lie in B"
            )));
        }
        if element >= oracle.ground_size() || !base.is_subset(oracle.ground()) {
            return Err(Error::NotInGround {
                bits: base.with(element).bits(),
                ground: oracle.ground_size(),
            });
        }
        Ok(ScaledCunninghamFn {
            oracle,
            base,
            element,
        })
    }

    pub fn base(&self) -> SubsetMask {
        self.base
    }

    pub fn element(&self) -> usize {
        self.element
    }

    pub fn oracle(&self) -> &RankOracle {
        self.oracle
    }

    /// `k = |B|`.
    pub fn k(&self) -> usize {
        self.base.len()
    }

    /// `F(I)`; one rank evaluation of `I + e`.
    pub fn eval(&self, i: SubsetMask) -> Result<i64> {
        if !i.is_subset(self.base) {
            return Err(Error::NotSubsetOfB);
        }
        Ok(self.eval_unchecked(i))
    }

    pub(crate) fn eval_unchecked(&self, i: SubsetMask) -> i64 {
        let k = self.k() as i64;
        let size = i.len() as i64;
        let r = self.oracle.rank(i.with(self.element)) as i64;
        2 * k * (2 * r - 2 - size) - size
    }

    /// The feasibility identity `2 r(J + e) - 1 = |J + e|`.
    pub fn is_feasible(&self, j: SubsetMask) -> bool {
        2 * self.oracle.rank(j.with(self.element)) == j.len() + 2
    }
}

/// Which minimiser [`largest_feasible_j_with`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Minimizer {
    /// Exhaustive for `|B| <= brute_limit`, min-norm point above.
    Auto {
        brute_limit: usize,
    },
    Brute,
    MinNorm,
}

impl Default for Minimizer {
    fn default() -> Self {
        Minimizer::Auto {
            brute_limit: DEFAULT_BRUTE_LIMIT,
        }
    }
}

/// Grows `j` by single
/// elements that leave `F` unchanged, until no such element remains.
pub(crate) fn extend_maximal(f: &ScaledCunninghamFn<'_>, mut j: SubsetMask) -> SubsetMask {
    let mut value = f.eval_unchecked(j);
    loop {
        let grow = f
            .base()
            .difference(j)
            .iter()
            .find(|&b| f.eval_unchecked(j.with(b)) == value);
        match grow {
            Some(b) => {
                j = j.with(b);
                value = f.eval_unchecked(j);
            }
            None => return j,
        }
    }
}

/// The largest `J ⊆ B` with `2 r(J + e) - 1 = |J + e|`, using the default
/// minimiser.
pub fn largest_feasible_j(m: &RankOracle, b: SubsetMask, e: usize) -> Result<SubsetMask> {
    largest_feasible_j_with(m, b, e, Minimizer::default())
}

pub fn largest_feasible_j_with(
    m: &RankOracle,
    b: SubsetMask,
    e: usize,
    minimizer: Minimizer,
) -> Result<SubsetMask> {
    let f = ScaledCunninghamFn::new(m, b, e)?;
    if m.rank(SubsetMask::singleton(e)) == 0 {
        return Err(Error::Loop { element: e });
    }
    if b.is_empty() {
        return Ok(SubsetMask::EMPTY);
    }
    let j = match minimizer {
        Minimizer::Brute => minimize_brute(&f)?,
        Minimizer::MinNorm => minimize_mnp(&f)?,
        Minimizer::Auto { brute_limit } if f.k() <= brute_limit.min(BRUTE_FORCE_LIMIT) => {
            minimize_brute(&f)?
        }
        Minimizer::Auto { .. } => minimize_mnp(&f)?,
    };
    if !f.is_feasible(j) {
        return Err(Error::CertificationFailed(format!(
            "minimiser {j:?} violates 2r(J+e)-1 = |J+e|"
        )));
    }
    Ok(j)
}
