use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subset::SubsetMask;

use super::RankOracle;

/// Largest ground set `is_c_connected` will scan exhaustively.
pub const C_CONNECTED_SCAN_LIMIT: usize = 24;

/// Fails with [`Error::Loop`] on the first `e in s` with `r({e}) = 0`.
pub fn ensure_loopless(m: &RankOracle, s: SubsetMask) -> Result<()> {
    match s.iter().find(|&e| m.rank(SubsetMask::singleton(e)) == 0) {
        Some(element) => Err(Error::Loop { element }),
        None => Ok(()),
    }
}

/// Partition of `E` into connected components.
///
/// Two elements lie in a common component iff they lie in a common circuit.
/// Every circuit is reachable through fundamental circuits of one basis, so
/// we greedily pick a basis `B` and, for each `x` outside it, join `x` with
/// every `b in B` for which `B - b + x` is again a basis.
pub fn connected_components(m: &RankOracle) -> Result<Partition> {
    let e = m.ground();
    ensure_loopless(m, e)?;
    let mut basis = SubsetMask::EMPTY;
    for x in e.iter() {
        if m.rank(basis.with(x)) > basis.len() {
            basis = basis.with(x);
        }
    }
    let d = basis.len();
    let mut blocks: Vec<SubsetMask> = e.iter().map(SubsetMask::singleton).collect();
    for x in e.difference(basis).iter() {
        let circuit = basis
            .iter()
            .filter(|&b| m.rank(basis.without(b).with(x)) == d)
            .fold(SubsetMask::singleton(x), SubsetMask::with);
        let (touching, mut rest): (Vec<_>, Vec<_>) =
            blocks.into_iter().partition(|b| b.intersects(circuit));
        rest.push(touching.into_iter().fold(circuit, SubsetMask::union));
        blocks = rest;
    }
    Partition::new(blocks)
}

/// No `S` with `|S| >= c`, `|E - S| >= c` and `r(S) + r(E - S) - r(E) < c`.
pub fn is_c_connected(m: &RankOracle, c: usize) -> Result<bool> {
    let n = m.ground_size();
    if n > C_CONNECTED_SCAN_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            limit: C_CONNECTED_SCAN_LIMIT,
        });
    }
    if n == 0 {
        return Ok(true);
    }
    let e = m.ground();
    let d = m.full_rank();
    // S and E - S give the same test: scan only sets avoiding the last element,
    // bypassing the memo so the scan does not fill it with 2^n entries
    Ok(!e.without(n - 1).subsets().any(|s| {
        let rest = e.difference(s);
        s.len() >= c && rest.len() >= c && m.rank_uncached(s) + m.rank_uncached(rest) < c + d
    }))
}

/// `r(S + e) > r(S)` for every `e` outside `S`.
pub fn is_flat(m: &RankOracle, s: SubsetMask) -> bool {
    let r = m.rank(s);
    m.ground()
        .difference(s)
        .iter()
        .all(|e| m.rank(s.with(e)) > r)
}
