use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::{self, Bound};
use crate::error::{KlmovError, Result};

/// Weakly decreasing sequence of positive integers; empty is the zero partition.
///
/// Ordered by size, then lexicographically descending on parts, so that
/// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition (n), or the empty partition when n = 0.
    pub fn row(n: u32) -> Self {
        Self::new(vec![n])
    }

    /// (1^n).
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row lengths λ_i with 1-based index; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// (i, m_i) pairs for every part value present.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// ∏ i^{m_i} m_i!.
    pub fn z_stat(&self) -> u128 {
        let mut z: u128 = 1;
        for (i, m) in self.multiplicities() {
            for k in 1..=m {
                z = z.checked_mul(i as u128 * k as u128).expect("z statistic overflow");
            }
        }
        z
    }

    /// Σ_j λ_j (λ_j - 2j + 1).
    pub fn kappa(&self) -> i64 {
        self.0.iter().enumerate().map(|(j, &l)| l as i64 * (l as i64 - 2 * (j as i64 + 1) + 1)).sum()
    }

    /// Multiset union of rows.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Every row multiplied by r.
    pub fn scaled(&self, r: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p * r).collect())
    }

    /// Every row divided by k; caller guarantees divisibility.
    pub fn divided(&self, k: u32) -> Partition {
        debug_assert!(self.0.iter().all(|p| p % k == 0));
        Partition(self.0.iter().map(|&p| p / k).collect())
    }

    /// Whether every part is even.
    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Diagrams obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let cur = self.0.get(i).copied().unwrap_or(0);
            let above = if i == 0 { u32::MAX } else { self.0[i - 1] };
            if cur < above {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Diagrams obtained by removing one box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            let below = self.0.get(i + 1).copied().unwrap_or(0);
            if self.0[i] > below {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                out.push(Partition::new(parts));
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = KlmovError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: u32 = tok.trim().parse().map_err(|_| KlmovError::Parse(format!("bad partition part '{tok}'")))?;
            if v == 0 {
                return Err(KlmovError::Parse(format!("zero part in partition '{s}'")));
            }
            parts.push(v);
        }
        Ok(Partition::new(parts))
    }
}

impl TryFrom<String> for Partition {
    type Error = KlmovError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// Shorthand used heavily in tests and tables.
pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

/// All partitions of n, largest first in lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    config::check(Bound::Partitions, n)?;
    Ok(partitions_unchecked(n))
}

pub(crate) fn partitions_unchecked(n: usize) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Tuple of L partitions indexing colors or conjugacy classes of a link.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition(components)
    }

    pub fn empty(l: usize) -> Self {
        MultiPartition(vec![Partition::empty(); l])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn num_components(&self) -> usize {
        self.0.len()
    }

    /// ||μ⃗||: total number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().map(|p| p.size()).sum()
    }

    /// ℓ(μ⃗): total number of rows.
    pub fn length(&self) -> usize {
        self.0.iter().map(|p| p.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_empty())
    }

    pub fn z_stat(&self) -> u128 {
        self.0.iter().map(|p| p.z_stat()).product()
    }

    pub fn kappa(&self) -> i64 {
        self.0.iter().map(|p| p.kappa()).sum()
    }

    pub fn divided(&self, k: u32) -> MultiPartition {
        MultiPartition(self.0.iter().map(|p| p.divided(k)).collect())
    }

    /// Indices of nonzero components.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| !self.0[i].is_empty()).collect()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("|"))
    }
}

impl FromStr for MultiPartition {
    type Err = KlmovError;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(KlmovError::Parse("empty multipartition".into()));
        }
        s.split('|').map(|c| c.parse()).collect::<Result<Vec<_>>>().map(MultiPartition)
    }
}

impl TryFrom<String> for MultiPartition {
    type Error = KlmovError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<MultiPartition> for String {
    fn from(p: MultiPartition) -> String {
        p.to_string()
    }
}

/// Shorthand: mp(&[&[1, 1], &[1]]) is "1,1|1".
pub fn mp(components: &[&[u32]]) -> MultiPartition {
    MultiPartition(components.iter().map(|c| p(c)).collect())
}

/// Number of up-down tableaux of length n starting from (1) and ending at λ.
pub fn updown_dimension(lambda: &Partition, n: usize) -> Result<u128> {
    let size = lambda.size();
    if size > n || !(n - size).is_multiple_of(2) {
        return Err(KlmovError::ParityMismatch(format!("|{lambda}| = {size} against n = {n}")));
    }
    if n == 0 {
        return Ok(1);
    }
    let mut layer: std::collections::BTreeMap<Partition, u128> = [(p(&[1]), 1)].into();
    for step in 1..n {
        let remaining = n - step - 1;
        let mut next = std::collections::BTreeMap::new();
        for (mu, count) in &layer {
            for nu in mu.add_box().into_iter().chain(mu.remove_box()) {
                // prune shapes that cannot reach λ in the remaining steps
                if nu.size().abs_diff(size) <= remaining {
                    *next.entry(nu).or_insert(0) += count;
                }
            }
        }
        layer = next;
    }
    Ok(layer.get(lambda).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_listing() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).unwrap(), vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(partitions_of(3).unwrap().len(), 3);
        let mut v = partitions_of(4).unwrap();
        v.reverse();
        v.sort();
        assert_eq!(v, partitions_of(4).unwrap());
        assert!(matches!(partitions_of(21), Err(KlmovError::BoundExceeded { .. })));
    }

    #[test]
    fn statistics() {
        assert_eq!(p(&[1, 1]).z_stat(), 2);
        assert_eq!(p(&[2, 2]).z_stat(), 8);
        assert_eq!(mp(&[&[2], &[2]]).z_stat(), 4);
        assert_eq!(p(&[1]).kappa(), 0);
        assert_eq!(p(&[1, 1]).kappa(), -2);
        assert_eq!(p(&[2]).kappa(), 2);
        assert_eq!(p(&[4]).kappa(), 12);
    }

    #[test]
    fn text_formats() {
        assert_eq!(p(&[2, 1]).to_string(), "2,1");
        assert_eq!(Partition::empty().to_string(), "0");
        let m: MultiPartition = "1,1|1".parse().unwrap();
        assert_eq!(m, mp(&[&[1, 1], &[1]]));
        assert_eq!(mp(&[&[], &[1]]).to_string(), "0|1");
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn updown_counts() {
        assert_eq!(updown_dimension(&p(&[1]), 3).unwrap(), 3);
        assert_eq!(updown_dimension(&p(&[2]), 2).unwrap(), 1);
        assert!(updown_dimension(&p(&[2]), 3).is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }
}
