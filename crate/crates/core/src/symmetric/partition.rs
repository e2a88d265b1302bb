use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer partition, parts stored non-increasing.
///
/// Partitions of equal weight are ordered reverse-lexicographically, so that
/// `[3] < [2,1] < [1,1,1]`; smaller weights sort first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partition whose Young diagram is the transpose.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// Part multiplicities `(part, count)` in increasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n` in canonical order: `[n]` first, `[1,…,1]` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn partitions_of_three() {
        let ps: Vec<Vec<u32>> = partitions_of(3)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(ps, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn partitions_of_zero() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    /// Brute force: every composition of n, sorted, deduplicated.
    fn brute_partitions(n: u32) -> BTreeSet<Vec<u32>> {
        let mut out = BTreeSet::new();
        if n == 0 {
            out.insert(vec![]);
            return out;
        }
        // compositions of n correspond to subsets of the n-1 gaps
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = vec![];
            let mut cur = 1;
            for gap in 0..n - 1 {
                if mask & (1 << gap) != 0 {
                    parts.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            parts.push(cur);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            out.insert(parts);
        }
        out
    }

    #[test]
    fn counts_match_brute_force() {
        assert_eq!(partitions_of(6).len(), 11);
        for n in 0..=10 {
            let ours: BTreeSet<Vec<u32>> = partitions_of(n)
                .iter()
                .map(|p| p.parts().to_vec())
                .collect();
            assert_eq!(ours, brute_partitions(n), "n={n}");
            assert_eq!(ours.len(), partitions_of(n).len(), "duplicates at n={n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_by_ord() {
        for n in 0..=9 {
            let ps = partitions_of(n);
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn new_sorts_and_drops_zeros() {
        assert_eq!(Partition::new(vec![1, 0, 3, 1]).parts(), &[3, 1, 1]);
        assert_eq!(Partition::new(vec![0]), Partition::empty());
    }

    #[test]
    fn conjugation() {
        assert_eq!(Partition::new(vec![3, 1]).conjugate().parts(), &[2, 1, 1]);
        for n in 0..=8 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().weight(), n);
            }
        }
    }

    #[test]
    fn json_rejects_zero_parts() {
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
        assert_eq!(
            serde_json::from_str::<Partition>("[1,2]").unwrap().parts(),
            &[2, 1]
        );
    }
}
