use crate::error::{Error, Result};
use crate::matroid::{ensure_loopless, RankOracle};
use crate::partition::Partition;
use crate::subset::SubsetMask;

/// Largest `|S|` for exhaustive partition search (`B_12` is about 4.2 million).
pub const BRUTE_PARTITION_LIMIT: usize = 12;

struct Search<'a> {
    oracle: &'a RankOracle,
    elements: Vec<usize>,
    blocks: Vec<SubsetMask>,
    best: i64,
    optimal: Vec<Partition>,
}

impl Search<'_> {
    fn weight(&self) -> i64 {
        self.blocks
            .iter()
            .map(|&b| 2 * self.oracle.rank(b) as i64 - 1)
            .sum()
    }

    // The partial weight only grows as elements are added (ranks are
    // monotone, new blocks cost at least 1), so prefixes above the best
    // value are abandoned. Ties are kept to collect every optimum.
    fn run(&mut self, depth: usize) {
        let w = self.weight();
        if w > self.best {
            return;
        }
        if depth == self.elements.len() {
            if w < self.best {
                self.best = w;
                self.optimal.clear();
            }
            self.optimal
                .push(Partition::from_disjoint(self.blocks.clone()));
            return;
        }
        let e = self.elements[depth];
        for i in 0..self.blocks.len() {
            self.blocks[i] = self.blocks[i].with(e);
            self.run(depth + 1);
            self.blocks[i] = self.blocks[i].without(e);
        }
        self.blocks.push(SubsetMask::singleton(e));
        self.run(depth + 1);
        self.blocks.pop();
    }
}

/// `r'(S)` as the exact minimum of `r~` over all partitions of `S`, with
/// every partition attaining it.
pub fn rprime_bruteforce(m: &RankOracle, s: SubsetMask) -> Result<(usize, Vec<Partition>)> {
    if s.len() > BRUTE_PARTITION_LIMIT {
        return Err(Error::GroundTooLarge {
            size: s.len(),
            limit: BRUTE_PARTITION_LIMIT,
        });
    }
    ensure_loopless(m, s)?;
    if s.is_empty() {
        return Ok((0, vec![Partition::empty()]));
    }
    // singletons attain |S|, so this bound is always reached by some leaf
    let mut search = Search {
        oracle: m,
        elements: s.iter().collect(),
        blocks: Vec::new(),
        best: s.len() as i64,
        optimal: Vec::new(),
    };
    search.run(0);
    Ok((search.best as usize, search.optimal))
}

fn check_optimal(m: &RankOracle, p: &Partition, value: usize, what: &str) -> Result<()> {
    let w = p.weight(m);
    if w != value as i64 {
        return Err(Error::LatticeViolation(format!(
            "{what} {p:?} has weight {w}, optimum is {value}"
        )));
    }
    Ok(())
}

/// Join of all optimal partitions of `S`, checked to be optimal itself.
pub fn coarsest_bruteforce(m: &RankOracle, s: SubsetMask) -> Result<Partition> {
    let (value, optimal) = rprime_bruteforce(m, s)?;
    let join = optimal
        .iter()
        .fold(Partition::empty(), |acc, p| acc.join(p));
    check_optimal(m, &join, value, "join of optimal partitions")?;
    Ok(join)
}

/// Meet of all optimal partitions of `S`, checked to be optimal itself.
pub fn finest_bruteforce(m: &RankOracle, s: SubsetMask) -> Result<Partition> {
    let (value, optimal) = rprime_bruteforce(m, s)?;
    let meet = optimal
        .iter()
        .skip(1)
        .fold(optimal[0].clone(), |acc, p| acc.meet(p));
    check_optimal(m, &meet, value, "meet of optimal partitions")?;
    Ok(meet)
}
