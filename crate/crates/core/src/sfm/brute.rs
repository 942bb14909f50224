use crate::error::{Error, Result};
use crate::subset::SubsetMask;

use super::ScaledCunninghamFn;

/// Largest `|B|` accepted by [`minimize_brute`] (about four million evaluations).
pub const BRUTE_FORCE_LIMIT: usize = 22;

/// Maximal minimiser of `F` by enumerating all `2^k` subsets of `B`.
///
/// Minimisers of a submodular function are closed under union, so the
/// union of all of them is the unique largest one.
pub fn minimize_brute(f: &ScaledCunninghamFn<'_>) -> Result<SubsetMask> {
    let k = f.k();
    if k > BRUTE_FORCE_LIMIT {
        return Err(Error::BTooLarge {
            size: k,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut best = i64::MAX;
    let mut union = SubsetMask::EMPTY;
    for i in f.base().subsets() {
        let v = f.eval_unchecked(i);
        if v < best {
            best = v;
            union = i;
        } else if v == best {
            union = union.union(i);
        }
    }
    Ok(union)
}
