use serde::{Deserialize, Serialize};

use crate::derived::derived_oracle;
use crate::error::{Error, Result};
use crate::matroid::RankOracle;
use crate::subset::SubsetMask;

use super::{bell, PartitionEnumerator};

/// Largest ground set for the exhaustive pairwise scan.
pub const AXIOM_SUITE_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: String,
    /// 1-based elements.
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks_run: u64,
    pub failures: Vec<AxiomFailure>,
    /// Partitions produced by the enumerator on `{1..j}`, for `j = 0..=n`.
    pub bell_counts: Vec<u64>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self
                .bell_counts
                .iter()
                .enumerate()
                .all(|(j, &c)| c == bell(j))
    }
}

/// Exhaustively checks that `r'` of `m` is a matroid rank function:
/// `r' >= 0`, `r'(S) <= |S|`, monotone, submodular, over all pairs `S, T`.
pub fn axiom_suite(m: &RankOracle) -> Result<AxiomReport> {
    let n = m.ground_size();
    if n > AXIOM_SUITE_LIMIT {
        return Err(Error::GroundTooLarge {
            size: n,
            limit: AXIOM_SUITE_LIMIT,
        });
    }
    let derived = derived_oracle(m)?;
    let sets: Vec<SubsetMask> = m.ground().subsets().collect();
    let mut values = vec![0i64; 1 << n];
    for &s in &sets {
        values[s.bits() as usize] = derived.rprime(s)? as i64;
    }
    let r = |s: SubsetMask| values[s.bits() as usize];

    let mut checks_run = 0u64;
    let mut failures = Vec::new();
    let mut fail = |axiom: &str, s: SubsetMask, t: SubsetMask, vals: Vec<i64>| {
        failures.push(AxiomFailure {
            axiom: axiom.to_string(),
            s: s.to_one_based(),
            t: t.to_one_based(),
            values: vals,
        });
    };
    for &s in &sets {
        checks_run += 2;
        if r(s) < 0 {
            fail("nonnegative", s, SubsetMask::EMPTY, vec![r(s)]);
        }
        if r(s) > s.len() as i64 {
            fail(
                "unit_bound",
                s,
                SubsetMask::EMPTY,
                vec![r(s), s.len() as i64],
            );
        }
        for &t in &sets {
            if s.is_subset(t) {
                checks_run += 1;
                if r(s) > r(t) {
                    fail("monotone", s, t, vec![r(s), r(t)]);
                }
            }
            checks_run += 1;
            let (u, i) = (s.union(t), s.intersection(t));
            if r(s) + r(t) < r(u) + r(i) {
                fail("submodular", s, t, vec![r(s), r(t), r(u), r(i)]);
            }
        }
    }
    let bell_counts = (0..=n)
        .map(|j| PartitionEnumerator::new(SubsetMask::full(j)).count() as u64)
        .collect();
    Ok(AxiomReport {
        checks_run,
        failures,
        bell_counts,
    })
}
