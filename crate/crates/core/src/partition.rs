//! Partitions of subsets of the ground set and finite multisets of subsets:
//! finest common coarsening, join and meet, uncrossing and the weight
//! `r~(S_1, .., S_k) = sum (2 r(S_i) - 1)`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroid::RankOracle;
use crate::subset::SubsetMask;

/// Pairwise disjoint nonempty parts whose union is the support.
///
/// Parts are kept sorted by their lowest element, so structurally equal
/// partitions compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<SubsetMask>,
    support: SubsetMask,
}

impl Partition {
    pub fn new(parts: Vec<SubsetMask>) -> Result<Self> {
        let mut support = SubsetMask::EMPTY;
        for &p in &parts {
            if p.is_empty() {
                return Err(Error::EmptyMember);
            }
            if p.intersects(support) {
                return Err(Error::InvalidParams("parts are not disjoint".into()));
            }
            support = support.union(p);
        }
        Ok(Self::from_disjoint(parts))
    }

    /// Caller guarantees the parts are disjoint and nonempty.
    pub(crate) fn from_disjoint(mut parts: Vec<SubsetMask>) -> Self {
        parts.sort_unstable_by_key(|p| p.min_element());
        let support = parts.iter().fold(SubsetMask::EMPTY, |a, &p| a.union(p));
        Partition { parts, support }
    }

    /// The partition of nothing.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// `{{e} : e in s}`.
    pub fn singletons(s: SubsetMask) -> Self {
        Self::from_disjoint(s.iter().map(SubsetMask::singleton).collect())
    }

    /// `{s}`, or the empty partition when `s` is empty.
    pub fn trivial(s: SubsetMask) -> Self {
        if s.is_empty() {
            Self::empty()
        } else {
            Self::from_disjoint(vec![s])
        }
    }

    pub fn parts(&self) -> &[SubsetMask] {
        &self.parts
    }

    pub fn support(&self) -> SubsetMask {
        self.support
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_containing(&self, e: usize) -> Option<SubsetMask> {
        self.parts.iter().copied().find(|p| p.contains(e))
    }

    /// `P v Q := fcc(P u Q)`, a partition of the union of the supports.
    pub fn join(&self, other: &Partition) -> Partition {
        merge_intersecting(self.parts.iter().chain(&other.parts).copied())
    }

    /// `{P n Q} \ {empty}`, a partition of the intersection of the supports.
    pub fn meet(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .flat_map(|&p| other.parts.iter().map(move |&q| p.intersection(q)))
            .filter(|x| !x.is_empty())
            .collect();
        Self::from_disjoint(parts)
    }

    /// `P ^ {s}`: the parts intersected with `s`.
    pub fn restrict(&self, s: SubsetMask) -> Partition {
        self.meet(&Partition::trivial(s))
    }

    /// Each part of `self` lies inside some part of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> Result<bool> {
        if self.support != coarser.support {
            return Err(Error::SupportMismatch);
        }
        Ok(self
            .parts
            .iter()
            .all(|&p| coarser.parts.iter().any(|&q| p.is_subset(q))))
    }

    /// `r~(P)`.
    pub fn weight(&self, oracle: &RankOracle) -> i64 {
        self.parts
            .iter()
            .map(|&p| 2 * oracle.rank(p) as i64 - 1)
            .sum()
    }

    pub fn to_one_based(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.to_one_based()).collect()
    }

    pub fn from_one_based(parts: &[Vec<usize>]) -> Result<Self> {
        let masks = parts
            .iter()
            .map(|p| {
                if p.is_empty() {
                    return Err(Error::EmptyMember);
                }
                let mask = SubsetMask::from_one_based(p)
                    .ok_or_else(|| Error::Parse("element index out of range".into()))?;
                if mask.len() != p.len() {
                    return Err(Error::Parse("repeated element in part".into()));
                }
                Ok(mask)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(masks)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_one_based())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Partition::from_one_based(&raw).map_err(serde::de::Error::custom)
    }
}

/// Merges members until no two blocks intersect. Blocks stay pairwise
/// disjoint, so one pass per member suffices.
fn merge_intersecting<I: IntoIterator<Item = SubsetMask>>(members: I) -> Partition {
    let mut blocks: Vec<SubsetMask> = Vec::new();
    for m in members {
        let mut merged = m;
        blocks.retain(|&b| {
            if b.intersects(merged) {
                merged = merged.union(b);
                false
            } else {
                true
            }
        });
        blocks.push(merged);
    }
    Partition::from_disjoint(blocks)
}

/// Finest common coarsening of a multiset of nonempty subsets.
pub fn fcc(s: &SubsetMultiset) -> Result<Partition> {
    if s.contains_empty() {
        return Err(Error::EmptyMember);
    }
    Ok(merge_intersecting(s.members()))
}

/// A finite multiset of subsets, stored as `(set, multiplicity)` sorted by mask.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SubsetMultiset {
    items: Vec<(SubsetMask, usize)>,
}

impl SubsetMultiset {
    pub fn new<I: IntoIterator<Item = SubsetMask>>(members: I) -> Self {
        let mut all: Vec<SubsetMask> = members.into_iter().collect();
        all.sort_unstable();
        let mut items: Vec<(SubsetMask, usize)> = Vec::new();
        for m in all {
            match items.last_mut() {
                Some((last, mult)) if *last == m => *mult += 1,
                _ => items.push((m, 1)),
            }
        }
        SubsetMultiset { items }
    }

    pub fn from_partition(p: &Partition) -> Self {
        Self::new(p.parts().iter().copied())
    }

    pub fn items(&self) -> &[(SubsetMask, usize)] {
        &self.items
    }

    /// Members with repetition, in canonical order.
    pub fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.items
            .iter()
            .flat_map(|&(m, k)| std::iter::repeat_n(m, k))
    }

    /// `#S`, counting multiplicities.
    pub fn len(&self) -> usize {
        self.items.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains_empty(&self) -> bool {
        self.items.iter().any(|(m, _)| m.is_empty())
    }

    pub fn support(&self) -> SubsetMask {
        self.items
            .iter()
            .fold(SubsetMask::EMPTY, |a, &(m, _)| a.union(m))
    }

    /// `c(S)_e`: how many members contain `e`.
    pub fn count_containing(&self, e: usize) -> usize {
        self.items
            .iter()
            .filter(|(m, _)| m.contains(e))
            .map(|&(_, k)| k)
            .sum()
    }

    /// `n(S) = sum |S|^2`.
    pub fn square_weight(&self) -> usize {
        self.items.iter().map(|&(m, k)| k * m.len() * m.len()).sum()
    }

    /// Multiset union.
    pub fn sum(&self, other: &SubsetMultiset) -> SubsetMultiset {
        Self::new(self.members().chain(other.members()))
    }

    /// Multiset difference; `None` unless `other` is a sub-multiset of `self`.
    pub fn checked_difference(&self, other: &SubsetMultiset) -> Option<SubsetMultiset> {
        let mut items = self.items.clone();
        for &(m, k) in &other.items {
            let slot = items.iter_mut().find(|(x, _)| *x == m)?;
            slot.1 = slot.1.checked_sub(k)?;
        }
        items.retain(|&(_, k)| k > 0);
        Some(SubsetMultiset { items })
    }

    pub fn is_sub_multiset_of(&self, other: &SubsetMultiset) -> bool {
        other.checked_difference(self).is_some()
    }

    pub fn is_cross_free(&self) -> bool {
        self.first_crossing_pair().is_none()
    }

    fn first_crossing_pair(&self) -> Option<(usize, usize)> {
        let n = self.items.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.items[i].0.crosses(self.items[j].0))
    }

    /// One uncrossing step: the first crossing pair `S, S'` in canonical
    /// order is replaced by `S n S', S u S'`.
    pub fn uncross_step(&self) -> Option<SubsetMultiset> {
        let (i, j) = self.first_crossing_pair()?;
        let (a, b) = (self.items[i].0, self.items[j].0);
        let mut items = self.items.clone();
        items[i].1 -= 1;
        items[j].1 -= 1;
        let rest = items
            .into_iter()
            .flat_map(|(m, k)| std::iter::repeat_n(m, k));
        Some(Self::new(rest.chain([a.intersection(b), a.union(b)])))
    }

    /// Every multiset visited while uncrossing, starting with `self` and
    /// ending with a cross-free multiset.
    pub fn uncross_trace(&self) -> Vec<SubsetMultiset> {
        let mut trace = vec![self.clone()];
        while let Some(next) = trace.last().and_then(SubsetMultiset::uncross_step) {
            trace.push(next);
        }
        trace
    }

    /// A cross-free multiset below `self` in the uncrossing order.
    pub fn uncross(&self) -> SubsetMultiset {
        let mut cur = self.clone();
        while let Some(next) = cur.uncross_step() {
            cur = next;
        }
        cur
    }
}

impl fmt::Debug for SubsetMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.members().map(|m| m.to_one_based()))
            .finish()
    }
}

/// `r~(S) = sum over members (with multiplicity) of 2 r(S_i) - 1`.
pub fn tilde_r(oracle: &RankOracle, s: &SubsetMultiset) -> Result<i64> {
    if s.contains_empty() {
        return Err(Error::EmptyMember);
    }
    Ok(s.items
        .iter()
        .map(|&(m, k)| k as i64 * (2 * oracle.rank(m) as i64 - 1))
        .sum())
}
