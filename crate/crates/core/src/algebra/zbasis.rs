use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bivariate::LaurentQT;
use super::laurent::{render_power, render_term, LaurentQ};
use super::ratfunc::RationalQT;
use super::Rational;
use crate::error::{KlmovError, Result};

/// Polynomial in z = q - q^-1 with Laurent coefficients in t.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZTPolynomial {
    coeffs: BTreeMap<(u32, i64), Rational>,
}

impl ZTPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, i64, Rational)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<(u32, i64), Rational> = BTreeMap::new();
        for (z, t, c) in terms {
            *coeffs.entry((z, t)).or_insert_with(Rational::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        ZTPolynomial { coeffs }
    }

    pub fn from_int_terms(terms: &[(u32, i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(z, t, c)| (z, t, Rational::from_integer(BigInt::from(c)))))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, zpow: u32, tpow: i64) -> Rational {
        self.coeffs.get(&(zpow, tpow)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterates (zpow, tpow, coefficient) in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64, &Rational)> + '_ {
        self.coeffs.iter().map(|((z, t), c)| (*z, *t, c))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// First coefficient that is not an integer.
    pub fn first_non_integer(&self) -> Option<(u32, i64, Rational)> {
        self.terms().find(|(_, _, c)| !c.is_integer()).map(|(z, t, c)| (z, t, c.clone()))
    }

    /// Coefficient of z^n as a Laurent polynomial in t (encoded in the q slot of LaurentQ).
    pub fn z_coefficient(&self, n: u32) -> BTreeMap<i64, Rational> {
        self.terms().filter(|(z, _, _)| *z == n).map(|(_, t, c)| (t, c.clone())).collect()
    }

    pub fn max_zpow(&self) -> Option<u32> {
        self.coeffs.keys().map(|(z, _)| *z).max()
    }

    /// Re-expands with z := q - q^-1.
    pub fn to_laurent(&self) -> LaurentQT {
        let mut acc = LaurentQT::zero();
        for ((z, t), c) in &self.coeffs {
            acc = &acc + &LaurentQT::from_slice(*t, z_power(*z).scale(c));
        }
        acc
    }

    pub fn to_rational(&self) -> RationalQT {
        self.to_laurent().into()
    }
}

/// (q - q^-1)^d expanded.
pub fn z_power(d: u32) -> LaurentQ {
    let d = d as i64;
    let mut terms = Vec::with_capacity(d as usize + 1);
    let mut binom = BigInt::one();
    for k in 0..=d {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        terms.push((d - 2 * k, Rational::from_integer(&binom * sign)));
        binom = binom * (d - k) / (k + 1);
    }
    LaurentQ::from_terms(terms)
}

/// Rewrites a Laurent polynomial invariant under q -> -q^-1 in powers of z.
pub fn to_z_basis(x: &RationalQT) -> Result<ZTPolynomial> {
    let num = x.as_polynomial().ok_or_else(|| KlmovError::NotPolynomial(x.to_string()))?;
    let mut out = BTreeMap::new();
    for (b, slice) in num.slices() {
        for parity in 0..2 {
            let mut part = LaurentQ::from_terms(
                slice.terms().filter(|(e, _)| e.rem_euclid(2) == parity).map(|(e, c)| (e, c.clone())),
            );
            while let Some(d) = part.high() {
                if d < 0 {
                    return Err(KlmovError::NotZRepresentable { residual: LaurentQT::from_slice(b, part).to_string() });
                }
                let c = part.coeff(d);
                part = &part - &z_power(d as u32).scale(&c);
                out.insert((d as u32, b), c);
            }
        }
    }
    Ok(ZTPolynomial { coeffs: out })
}

impl fmt::Display for ZTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        let mut first = true;
        for ((z, t), c) in self.coeffs.iter().rev() {
            let zs = render_power("z", *z as i64);
            let ts = render_power("t", *t);
            let mono = match (zs.is_empty(), ts.is_empty()) {
                (true, _) => ts,
                (_, true) => zs,
                _ => format!("{zs}*{ts}"),
            };
            render_term(&mut s, c, &mono, first);
            first = false;
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rq(t: &[(i64, i64)]) -> RationalQT {
        RationalQT::from_q(LaurentQ::from_int_terms(t))
    }

    #[test]
    fn z_itself() {
        let z = to_z_basis(&RationalQT::z()).unwrap();
        assert_eq!(z, ZTPolynomial::from_int_terms(&[(1, 0, 1)]));
    }

    #[test]
    fn even_symmetric() {
        let p = to_z_basis(&rq(&[(2, 1), (-2, 1)])).unwrap();
        assert_eq!(p, ZTPolynomial::from_int_terms(&[(2, 0, 1), (0, 0, 2)]));
    }

    #[test]
    fn antisymmetric_rejected() {
        assert!(matches!(to_z_basis(&rq(&[(1, 1), (-1, 1)])), Err(KlmovError::NotZRepresentable { .. })));
        assert!(matches!(to_z_basis(&RationalQT::inv_q_binomial(1)), Err(KlmovError::NotPolynomial(_))));
    }

    #[test]
    fn integrality() {
        let p = ZTPolynomial::from_int_terms(&[(1, 0, 1), (0, 1, 1), (0, -1, -1)]);
        assert!(p.is_integral());
        let half = ZTPolynomial::from_terms([(1, 0, Rational::new(1.into(), 2.into()))]);
        assert!(!half.is_integral());
        assert!(ZTPolynomial::zero().is_integral());
    }

    #[test]
    fn round_trip() {
        let p = ZTPolynomial::from_int_terms(&[(3, 2, 5), (0, -1, -2), (2, 0, 7)]);
        assert_eq!(to_z_basis(&p.to_rational()).unwrap(), p);
    }
}
