use crate::partition::Partition;
use crate::subset::SubsetMask;

/// Bell number `B_n`, the number of set partitions of an `n`-set. Exact up to `n = 25`.
pub fn bell(n: usize) -> u64 {
    // Bell triangle
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let v = *next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Every set partition of `ground`, each exactly once, as restricted growth
/// strings `a_0 = 0, a_i <= 1 + max(a_0..a_{i-1})` over the elements in
/// ascending order.
pub struct PartitionEnumerator {
    elements: Vec<usize>,
    rgs: Vec<usize>,
    // max of rgs[..=i]
    maxes: Vec<usize>,
    done: bool,
}

impl PartitionEnumerator {
    pub fn new(ground: SubsetMask) -> Self {
        let elements: Vec<usize> = ground.iter().collect();
        let n = elements.len();
        PartitionEnumerator {
            elements,
            rgs: vec![0; n],
            maxes: vec![0; n],
            done: false,
        }
    }

    fn current(&self) -> Partition {
        let blocks = self.maxes.last().map_or(0, |&m| m + 1);
        let mut parts = vec![SubsetMask::EMPTY; blocks];
        for (&e, &b) in self.elements.iter().zip(&self.rgs) {
            parts[b] = parts[b].with(e);
        }
        Partition::from_disjoint(parts)
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[i];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionEnumerator {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let p = self.current();
        self.done = !self.advance();
        Some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn bell_numbers() {
        let known = [
            1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
        ];
        for (n, &b) in known.iter().enumerate() {
            assert_eq!(bell(n), b);
        }
    }

    #[test]
    fn enumerator_counts_and_uniqueness() {
        for n in [0usize, 1, 4, 7, 8] {
            let ground = SubsetMask(0b1011_0111_1011 & SubsetMask::full(12).bits());
            let ground: SubsetMask = ground.iter().take(n).collect();
            let all: Vec<Partition> = PartitionEnumerator::new(ground).collect();
            assert_eq!(all.len() as u64, bell(n), "n={n}");
            let distinct: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|p| p.support() == ground));
        }
    }
}
