use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use super::laurent::LaurentQ;
use super::Rational;

pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "Möbius function needs a positive argument");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n0 = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n0 {
        if n0.is_multiple_of(p) {
            while n0.is_multiple_of(p) {
                n0 /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n0 > 1 {
        result -= result / n0;
    }
    result
}

fn table() -> &'static RwLock<BTreeMap<u32, Arc<LaurentQ>>> {
    static T: OnceLock<RwLock<BTreeMap<u32, Arc<LaurentQ>>>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(BTreeMap::new()))
}

/// The n-th cyclotomic polynomial, built from q^n - 1 = prod_{d|n} Phi_d.
pub fn phi(n: u32) -> Arc<LaurentQ> {
    assert!(n >= 1);
    if let Some(p) = table().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = LaurentQ::binomial(n as i64, 0);
    for d in divisors(n as u64) {
        if d as u32 != n {
            p = p.div_exact(&phi(d as u32)).expect("cyclotomic factor must divide");
        }
    }
    let p = Arc::new(p);
    table().write().unwrap().insert(n, p.clone());
    p
}

/// Whether Phi_n divides p (monomial factors are units and ignored).
pub fn divides(n: u32, p: &LaurentQ) -> bool {
    if p.is_zero() {
        return true;
    }
    let nn = n as usize;
    let mut folded = vec![Rational::zero(); nn];
    for (e, c) in p.terms() {
        folded[e.rem_euclid(n as i64) as usize] += c;
    }
    LaurentQ::from_dense(0, folded).poly_rem(&phi(n)).is_zero()
}

/// Multiset of cyclotomic indices of q^m - 1.
pub fn binomial_factors(m: u32) -> BTreeMap<u32, u32> {
    divisors(m as u64).into_iter().map(|d| (d as u32, 1)).collect()
}

/// Factorization of Phi_n(q^k) into cyclotomic polynomials in q.
pub fn substituted_factors(n: u32, k: u32) -> BTreeMap<u32, u32> {
    let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
    for d in divisors(n as u64) {
        let mu = mobius(n as u64 / d);
        if mu == 0 {
            continue;
        }
        for e in divisors(d * k as u64) {
            *acc.entry(e as u32).or_default() += mu;
        }
    }
    acc.into_iter()
        .filter(|(_, m)| *m != 0)
        .map(|(e, m)| (e, u32::try_from(m).expect("negative cyclotomic multiplicity")))
        .collect()
}

/// Splits p = lc * q^low * prod Phi_n^m * rest with rest monic, free of
/// cyclotomic factors and with nonzero constant term.
pub fn split(p: &LaurentQ) -> (Rational, i64, BTreeMap<u32, u32>, LaurentQ) {
    let (lc, low, mut rest) = p.monic_part();
    let mut factors = BTreeMap::new();
    let deg = rest.span_degree() as u64;
    let mut n: u64 = 1;
    while rest.span_degree() > 0 && n <= 6 * deg + 6 {
        if euler_phi(n) as usize <= rest.span_degree() {
            while divides(n as u32, &rest) {
                rest = rest.div_exact(&phi(n as u32)).unwrap();
                *factors.entry(n as u32).or_insert(0) += 1;
            }
        }
        n += 1;
    }
    (lc, low, factors, rest)
}

pub fn expand(factors: &BTreeMap<u32, u32>) -> LaurentQ {
    let mut acc = LaurentQ::one();
    for (&n, &m) in factors {
        for _ in 0..m {
            acc = &acc * &*phi(n);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*phi(1), LaurentQ::from_int_terms(&[(1, 1), (0, -1)]));
        assert_eq!(*phi(4), LaurentQ::from_int_terms(&[(2, 1), (0, 1)]));
        assert_eq!(*phi(6), LaurentQ::from_int_terms(&[(2, 1), (1, -1), (0, 1)]));
    }

    #[test]
    fn number_theory() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!((1..=6).map(mobius).collect::<Vec<_>>(), vec![1, -1, -1, 0, -1, 1]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn substitution_matches_expansion() {
        for n in 1..=12 {
            for k in 1..=4 {
                let direct = phi(n).substitute(k as i64);
                assert_eq!(expand(&substituted_factors(n, k)), direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn split_recovers_factors() {
        let p = LaurentQ::binomial(6, -6).scale(&Rational::from_integer(3.into()));
        let (lc, low, f, rest) = split(&p);
        assert_eq!(lc, Rational::from_integer(3.into()));
        assert_eq!(low, -6);
        assert_eq!(f, binomial_factors(12));
        assert!(rest.is_one());
        let odd = LaurentQ::from_int_terms(&[(1, 1), (0, 2)]);
        let (_, _, f, rest) = split(&(&odd * &*phi(3)));
        assert_eq!(f, BTreeMap::from([(3, 1)]));
        assert_eq!(rest, odd);
    }
}
