use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::{MultiPartition, Partition};
use crate::algebra::Rational;
use crate::config::{self, Bound};
use crate::error::{KlmovError, Result};

/// A multiset of nonzero multipartitions whose rows add up to a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    /// Distinct parts with their multiplicities.
    pub parts: Vec<(MultiPartition, u32)>,
}

impl Splitting {
    pub fn len(&self) -> usize {
        self.parts.iter().map(|(_, m)| *m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn aut(&self) -> BigInt {
        self.parts.iter().map(|(_, m)| factorial(*m)).product()
    }

    /// (-1)^{r-1} (r-1)! / |Aut|.
    pub fn coefficient(&self) -> Rational {
        let r = self.len() as u32;
        let sign = if r % 2 == 1 { 1 } else { -1 };
        Rational::new(factorial(r - 1) * sign, self.aut())
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// All multisets of nonzero vectors bounded by and summing to `target`, each
/// listed once with parts in non-increasing lexicographic order.
pub fn vector_partitions(target: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn candidates(remaining: &[u32]) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &r in remaining {
            out = out.into_iter().flat_map(|v| (0..=r).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        out.retain(|v| v.iter().any(|&x| x > 0));
        out
    }
    fn rec(remaining: &mut Vec<u32>, max: Option<Vec<u32>>, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if remaining.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for v in candidates(remaining) {
            if max.as_ref().is_some_and(|m| &v > m) {
                continue;
            }
            for (r, x) in remaining.iter_mut().zip(&v) {
                *r -= x;
            }
            cur.push(v.clone());
            rec(remaining, Some(v.clone()), cur, out);
            cur.pop();
            for (r, x) in remaining.iter_mut().zip(&v) {
                *r += x;
            }
        }
    }
    let mut out = Vec::new();
    if target.iter().any(|&x| x > 0) {
        rec(&mut target.to_vec(), None, &mut Vec::new(), &mut out);
    }
    out
}

/// Splittings of μ⃗ with coefficients (-1)^{r-1}(r-1)!/|AutΛ|.
pub fn splittings(mu: &MultiPartition) -> Result<Vec<(Splitting, Rational)>> {
    if mu.is_zero() {
        return Err(KlmovError::Invalid("splittings of the zero multipartition".into()));
    }
    config::check(Bound::Splittings, mu.size())?;
    // row types are (component, value); counts are their multiplicities
    let mut types: Vec<(usize, u32)> = Vec::new();
    let mut counts: Vec<u32> = Vec::new();
    for (a, comp) in mu.components().iter().enumerate() {
        for (v, m) in comp.multiplicities() {
            types.push((a, v));
            counts.push(m);
        }
    }
    let l = mu.num_components();
    let to_multi = |v: &[u32]| {
        let mut comps = vec![Vec::new(); l];
        for (&(a, val), &m) in types.iter().zip(v) {
            comps[a].extend(std::iter::repeat_n(val, m as usize));
        }
        MultiPartition::new(comps.into_iter().map(Partition::new).collect())
    };
    let mut out = Vec::new();
    for parts in vector_partitions(&counts) {
        let mut grouped: BTreeMap<MultiPartition, u32> = BTreeMap::new();
        for v in &parts {
            *grouped.entry(to_multi(v)).or_insert(0) += 1;
        }
        let s = Splitting { parts: grouped.into_iter().collect() };
        let c = s.coefficient();
        out.push((s, c));
    }
    Ok(out)
}

/// Σ over vector partitions of d⃗ of (-1)^{ℓ-1}(ℓ-1)!/(|Aut| ∏ β!).
pub fn lemma72_sum(d: &[u32]) -> Rational {
    let mut total = Rational::zero();
    for parts in vector_partitions(d) {
        let l = parts.len() as u32;
        let mut aut = BigInt::one();
        let mut run = 1u32;
        for i in 1..parts.len() {
            if parts[i] == parts[i - 1] {
                run += 1;
            } else {
                aut *= factorial(run);
                run = 1;
            }
        }
        aut *= factorial(run);
        let beta: BigInt = parts.iter().flat_map(|v| v.iter().map(|&x| factorial(x))).product();
        let sign = if l % 2 == 1 { 1 } else { -1 };
        total += Rational::new(factorial(l - 1) * sign, aut * beta);
    }
    total
}

/// All k dividing every row of every component.
pub fn common_divisors(mu: &MultiPartition) -> Vec<u32> {
    let g = mu.components().iter().flat_map(|c| c.parts().iter().copied()).fold(0u32, num_integer::gcd);
    if g == 0 {
        return Vec::new();
    }
    (1..=g).filter(|k| g % k == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::combinatorics::mp;

    #[test]
    fn single_row() {
        let s = splittings(&mp(&[&[1]])).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].1, int(1));
        let s = splittings(&mp(&[&[2]])).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn two_component_example() {
        let s = splittings(&mp(&[&[1, 1], &[1]])).unwrap();
        let mut found: Vec<(String, Rational)> = s
            .iter()
            .map(|(sp, c)| {
                let names: Vec<String> = sp.parts.iter().map(|(m, k)| format!("{m}^{k}")).collect();
                (names.join(" "), c.clone())
            })
            .collect();
        found.sort();
        let mut expected = vec![
            ("1,1|1^1".to_string(), int(1)),
            ("0|1^1 1,1|0^1".to_string(), int(-1)),
            ("1|0^1 1|1^1".to_string(), int(-1)),
            ("0|1^1 1|0^2".to_string(), int(1)),
        ];
        expected.sort();
        assert_eq!(found, expected);
    }

    #[test]
    fn divisors() {
        assert_eq!(common_divisors(&mp(&[&[2], &[2]])), vec![1, 2]);
        assert_eq!(common_divisors(&mp(&[&[2], &[1]])), vec![1]);
        assert_eq!(common_divisors(&mp(&[&[6]])), vec![1, 2, 3, 6]);
    }

    #[test]
    fn lemma72_small() {
        assert_eq!(lemma72_sum(&[1, 1]), int(0));
        assert_eq!(lemma72_sum(&[2]), int(0));
        assert_eq!(lemma72_sum(&[1]), int(1));
    }

    #[test]
    fn vector_partitions_count() {
        // partitions of 5 and of the bipartite number (2,1)
        assert_eq!(vector_partitions(&[5]).len(), 7);
        assert_eq!(vector_partitions(&[2, 1]).len(), 4);
    }
}
