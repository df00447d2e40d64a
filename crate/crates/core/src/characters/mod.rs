//! Symmetric-group and Brauer-algebra characters.

mod cache;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::Rational;
use crate::combinatorics::{partitions_unchecked, MultiPartition, Partition};
use crate::error::{KlmovError, Result};

pub use cache::{brauer_table, read_cached, set_cache_dir, write_cached, BrauerCharTable, SCHEMA};

type SnMemo = RwLock<HashMap<(Partition, Partition), i64>>;

fn sn_memo() -> &'static SnMemo {
    static M: OnceLock<SnMemo> = OnceLock::new();
    M.get_or_init(|| RwLock::new(HashMap::new()))
}

/// χ^{S_n}_λ(γ_μ) by Murnaghan–Nakayama.
pub fn sn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(KlmovError::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    Ok(mn(lambda, mu))
}

fn mn(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = sn_memo().read().unwrap().get(&key) {
        return *v;
    }
    let r = mu.parts()[0] as i64;
    let rest = Partition::new(mu.parts()[1..].to_vec());
    let l = lambda.len() as i64;
    let beta: Vec<i64> = lambda.parts().iter().enumerate().map(|(i, &x)| x as i64 + l - 1 - i as i64).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb.iter().enumerate().map(|(i, &x)| (x - (l - 1 - i as i64)) as u32).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&Partition::new(parts), &rest);
    }
    sn_memo().write().unwrap().insert(key, total);
    total
}

/// Character table of S_n, rows and columns in partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnCharTable {
    pub n: usize,
    pub labels: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

pub fn sn_table(n: usize) -> SnCharTable {
    let labels = partitions_unchecked(n);
    let values = labels.iter().map(|l| labels.iter().map(|m| mn(l, m)).collect()).collect();
    SnCharTable { n, labels, values }
}

/// Coefficient of s_ν in s_λ s_β, read off through power sums.
pub fn lr_coefficient(lambda: &Partition, beta: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.size() + beta.size() != nu.size() {
        return Err(KlmovError::SizeMismatch(format!("|{lambda}| + |{beta}| != |{nu}|")));
    }
    let mut total = Rational::zero();
    for rho in partitions_unchecked(lambda.size()) {
        let a = mn(lambda, &rho);
        if a == 0 {
            continue;
        }
        for sigma in partitions_unchecked(beta.size()) {
            let b = mn(beta, &sigma);
            if b == 0 {
                continue;
            }
            let c = mn(nu, &rho.union(&sigma));
            let den = BigInt::from(rho.z_stat()) * BigInt::from(sigma.z_stat());
            total += Rational::new(BigInt::from(a * b * c), den);
        }
    }
    assert!(total.is_integer(), "Littlewood–Richardson coefficient must be integral");
    Ok(total.to_integer().to_u64().expect("nonnegative LR coefficient"))
}

/// Labels of irreducible Br_n modules: partitions of n, n-2, ..., down to 0 or 1.
pub fn brauer_labels(n: usize) -> Vec<Partition> {
    (0..=n / 2).flat_map(|k| partitions_unchecked(n - 2 * k)).collect()
}

/// Sub-multisets ρ of the rows of μ with |ρ| = size, paired with the complement.
fn row_splits(mu: &Partition, size: usize) -> Vec<(Partition, Partition)> {
    let mult = mu.multiplicities();
    let mut out = Vec::new();
    fn rec(
        mult: &[(u32, u32)],
        i: usize,
        need: i64,
        taken: &mut Vec<u32>,
        left: &mut Vec<u32>,
        out: &mut Vec<(Partition, Partition)>,
    ) {
        if i == mult.len() {
            if need == 0 {
                out.push((Partition::new(taken.clone()), Partition::new(left.clone())));
            }
            return;
        }
        let (v, m) = mult[i];
        for k in 0..=m {
            if need < (k * v) as i64 {
                break;
            }
            taken.extend(std::iter::repeat_n(v, k as usize));
            left.extend(std::iter::repeat_n(v, (m - k) as usize));
            rec(mult, i + 1, need - (k * v) as i64, taken, left, out);
            taken.truncate(taken.len() - k as usize);
            left.truncate(left.len() - (m - k) as usize);
        }
    }
    rec(&mult, 0, size as i64, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Power-sum coefficient at p_σ of Σ_{β ⊢ k, all parts even} s_β.
fn even_schur_sum_coeff(sigma: &Partition) -> Rational {
    let k = sigma.size();
    let num: i64 = partitions_unchecked(k).iter().filter(|b| b.all_parts_even()).map(|b| mn(b, sigma)).sum();
    Rational::new(num.into(), BigInt::from(sigma.z_stat()))
}

/// χ_A(γ_μ) for the Brauer algebra Br_{|μ|}.
///
/// Uses Σ_ν c^ν_{Aβ} χ_ν(μ) summed over β with all parts even. Expanding both
/// Schur factors in power sums and applying column orthogonality collapses the
/// ν-sum to the row splits of μ.
pub fn brauer_character(a: &Partition, mu: &Partition) -> Result<i64> {
    let n = mu.size();
    if a.size() > n || !(n - a.size()).is_multiple_of(2) {
        return Err(KlmovError::ParityMismatch(format!("label {a} against class {mu}")));
    }
    if a.size() == n {
        return Ok(mn(a, mu));
    }
    let mut total = Rational::zero();
    for (rho, sigma) in row_splits(mu, a.size()) {
        let chi = mn(a, &rho);
        if chi == 0 {
            continue;
        }
        let e = even_schur_sum_coeff(&sigma);
        total += e * Rational::new(chi.into(), BigInt::from(rho.z_stat()));
    }
    total *= Rational::from_integer(BigInt::from(mu.z_stat()));
    assert!(total.is_integer(), "Brauer character must be integral");
    Ok(total.to_integer().to_i64().unwrap())
}

/// Ram's formula evaluated literally through Littlewood–Richardson coefficients.
pub fn brauer_character_via_lr(a: &Partition, mu: &Partition) -> Result<i64> {
    let n = mu.size();
    if a.size() > n || !(n - a.size()).is_multiple_of(2) {
        return Err(KlmovError::ParityMismatch(format!("label {a} against class {mu}")));
    }
    let evens: Vec<Partition> = partitions_unchecked(n - a.size()).into_iter().filter(|b| b.all_parts_even()).collect();
    let mut total = 0i64;
    for nu in partitions_unchecked(n) {
        if !nu.contains(a) {
            continue;
        }
        let c: u64 = evens.iter().map(|b| lr_coefficient(a, b, &nu).unwrap()).sum();
        total += c as i64 * mn(&nu, mu);
    }
    Ok(total)
}

/// ∏_α χ_{A^α}(γ_{μ^α}).
pub fn multi_character(a: &MultiPartition, mu: &MultiPartition) -> Result<i64> {
    if a.num_components() != mu.num_components() {
        return Err(KlmovError::ComponentCountMismatch { expected: mu.num_components(), got: a.num_components() });
    }
    let mut acc = 1;
    for (x, y) in a.components().iter().zip(mu.components()) {
        acc *= brauer_table(y.size()).get(x, y)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{mp, p};

    #[test]
    fn sn_examples() {
        assert_eq!(sn_character(&p(&[2, 2]), &p(&[3, 1])).unwrap(), -1);
        assert_eq!(sn_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        for mu in partitions_unchecked(5) {
            assert_eq!(sn_character(&p(&[5]), &mu).unwrap(), 1);
        }
        assert!(sn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[2]), &p(&[3, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[2]), &p(&[2, 2])).unwrap(), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])).unwrap(), 1);
    }

    #[test]
    fn brauer_examples() {
        assert_eq!(brauer_character(&p(&[1, 1]), &p(&[2, 2])).unwrap(), -2);
        assert_eq!(brauer_character(&Partition::empty(), &p(&[4])).unwrap(), 1);
        assert_eq!(brauer_character(&p(&[2]), &p(&[1, 1, 1, 1])).unwrap(), 6);
        assert_eq!(brauer_character(&Partition::empty(), &p(&[2, 2])).unwrap(), 3);
        assert!(brauer_character(&p(&[1]), &p(&[2])).is_err());
    }

    #[test]
    fn collapsed_formula_matches_literal_ram() {
        for n in 1..=6 {
            for a in brauer_labels(n) {
                for mu in partitions_unchecked(n) {
                    assert_eq!(
                        brauer_character(&a, &mu).unwrap(),
                        brauer_character_via_lr(&a, &mu).unwrap(),
                        "A={a} mu={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn labels() {
        assert_eq!(brauer_labels(2), vec![p(&[2]), p(&[1, 1]), Partition::empty()]);
        assert_eq!(brauer_labels(1), vec![p(&[1])]);
        assert_eq!(brauer_labels(4).len(), 8);
    }

    #[test]
    fn multi() {
        assert_eq!(multi_character(&mp(&[&[2], &[1]]), &mp(&[&[2], &[1]])).unwrap(), 1);
        assert_eq!(multi_character(&mp(&[&[], &[1]]), &mp(&[&[2], &[1]])).unwrap(), 1);
        assert!(multi_character(&mp(&[&[1], &[1]]), &mp(&[&[2], &[1]])).is_err());
    }
}
