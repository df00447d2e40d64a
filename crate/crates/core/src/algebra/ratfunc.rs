use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::bivariate::LaurentQT;
use super::cyclotomic;
use super::laurent::{forward_owned, LaurentQ};
use super::Rational;
use crate::error::{KlmovError, Result};

/// Element of Q(q)[t, t^-1] written num/den with den a polynomial in q only.
///
/// Canonical form: den = prod Phi_n^m * rest, where rest is monic with nonzero
/// constant term and no cyclotomic factor, and no factor of den divides every
/// t-slice of num. Monomials and scalars always live in num.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalQT {
    num: LaurentQT,
    cyclo: BTreeMap<u32, u32>,
    rest: LaurentQ,
}

impl Default for RationalQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalQT {
    pub fn zero() -> Self {
        RationalQT { num: LaurentQT::zero(), cyclo: BTreeMap::new(), rest: LaurentQ::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentQT::one())
    }

    pub fn from_poly(num: LaurentQT) -> Self {
        RationalQT { num, cyclo: BTreeMap::new(), rest: LaurentQ::one() }
    }

    pub fn from_q(p: LaurentQ) -> Self {
        Self::from_poly(LaurentQT::from_q(p))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentQT::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn monomial(c: Rational, a: i64, b: i64) -> Self {
        Self::from_poly(LaurentQT::monomial(c, a, b))
    }

    pub fn q_pow(a: i64) -> Self {
        Self::from_poly(LaurentQT::q_pow(a))
    }

    pub fn t_pow(b: i64) -> Self {
        Self::from_poly(LaurentQT::t_pow(b))
    }

    /// z = q - q^-1.
    pub fn z() -> Self {
        Self::from_q(LaurentQ::binomial(1, -1))
    }

    /// q^n - q^-n.
    pub fn q_binomial(n: i64) -> Self {
        Self::from_q(LaurentQ::binomial(n, -n))
    }

    /// 1 / (q^n - q^-n) for n >= 1, built from its known cyclotomic factorization.
    pub fn inv_q_binomial(n: i64) -> Self {
        assert!(n >= 1);
        RationalQT {
            num: LaurentQT::q_pow(n),
            cyclo: cyclotomic::binomial_factors(2 * n as u32),
            rest: LaurentQ::one(),
        }
    }

    /// num / den for an arbitrary nonzero q-only den.
    pub fn new(num: LaurentQT, den: &LaurentQ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (lc, low, cyclo, rest) = cyclotomic::split(den);
        let num = num.shift(-low, 0).scale(&lc.recip());
        Self::normalized(num, cyclo, rest)
    }

    fn normalized(mut num: LaurentQT, mut cyclo: BTreeMap<u32, u32>, mut rest: LaurentQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        for (n, m) in cyclo.iter_mut() {
            while *m > 0 && num.slices().all(|(_, p)| cyclotomic::divides(*n, p)) {
                num = num.div_exact_q(&cyclotomic::phi(*n)).unwrap();
                *m -= 1;
            }
        }
        cyclo.retain(|_, m| *m > 0);
        if !rest.is_one() {
            let mut g = rest.clone();
            for (_, p) in num.slices() {
                g = LaurentQ::gcd(&g, p);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_one() {
                num = num.div_exact_q(&g).unwrap();
                rest = rest.div_exact(&g).unwrap();
            }
        }
        RationalQT { num, cyclo, rest }
    }

    pub fn num(&self) -> &LaurentQT {
        &self.num
    }

    /// The denominator as an explicit monic polynomial in q.
    pub fn den(&self) -> LaurentQ {
        &cyclotomic::expand(&self.cyclo) * &self.rest
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.cyclo.is_empty() && self.rest.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&LaurentQT> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalQT { num: self.num.scale(c), cyclo: self.cyclo.clone(), rest: self.rest.clone() }
    }

    /// Multiplies by q^a t^b.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        RationalQT { num: self.num.shift(a, b), cyclo: self.cyclo.clone(), rest: self.rest.clone() }
    }

    /// q -> q^qpow, t -> tsign * t^tpow.
    pub fn substitute(&self, qpow: i64, tsign: i64, tpow: i64) -> Self {
        assert!(qpow >= 1);
        let num = self.num.substitute(qpow, tsign, tpow);
        if qpow == 1 {
            return RationalQT { num, cyclo: self.cyclo.clone(), rest: self.rest.clone() };
        }
        let mut cyclo = BTreeMap::new();
        for (&n, &m) in &self.cyclo {
            for (e, k) in cyclotomic::substituted_factors(n, qpow as u32) {
                *cyclo.entry(e).or_insert(0) += k * m;
            }
        }
        // roots of the substituted pieces stay disjoint from those of num, so no
        // further cancellation is possible
        RationalQT { num, cyclo, rest: self.rest.substitute(qpow) }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::from_poly(self.den().into()).exact_div(&self.num)
    }

    /// self / d, where t-dependent content of d must divide the numerator exactly.
    pub fn exact_div(&self, d: &LaurentQT) -> Result<Self> {
        assert!(!d.is_zero(), "division by zero");
        if d.is_q_only() {
            let dq = d.slice(0).unwrap();
            let (lc, low, cyclo, rest) = cyclotomic::split(dq);
            let mut all = self.cyclo.clone();
            for (n, m) in cyclo {
                *all.entry(n).or_insert(0) += m;
            }
            let num = self.num.shift(-low, 0).scale(&lc.recip());
            return Ok(Self::normalized(num, all, &self.rest * &rest));
        }
        let content = d.q_content();
        let primitive = d.div_exact_q(&content).expect("content divides");
        let num = self.num.div_exact(&primitive).ok_or(KlmovError::NotDivisible)?;
        Self { num, cyclo: self.cyclo.clone(), rest: self.rest.clone() }.exact_div(&content.into())
    }

    pub fn div(&self, other: &RationalQT) -> Result<Self> {
        let scaled = self * &RationalQT::from_q(other.den());
        scaled.exact_div(&other.num)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicity of (q - 1) in num minus that in den.
    pub fn valuation_at_q1(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(KlmovError::ZeroInput);
        }
        let den_mult = self.cyclo.get(&1).copied().unwrap_or(0);
        Ok(self.num.mult_at_one() as i64 - den_mult as i64)
    }
}

fn lcm_parts(a: &RationalQT, b: &RationalQT) -> (BTreeMap<u32, u32>, LaurentQ, LaurentQ, LaurentQ) {
    // returns (lcm cyclo, lcm rest, multiplier for a, multiplier for b)
    let mut cyclo = a.cyclo.clone();
    for (&n, &m) in &b.cyclo {
        let e = cyclo.entry(n).or_insert(0);
        *e = (*e).max(m);
    }
    let missing = |own: &BTreeMap<u32, u32>| -> BTreeMap<u32, u32> {
        cyclo.iter().map(|(&n, &m)| (n, m - own.get(&n).copied().unwrap_or(0))).filter(|(_, m)| *m > 0).collect()
    };
    let mut ma = cyclotomic::expand(&missing(&a.cyclo));
    let mut mb = cyclotomic::expand(&missing(&b.cyclo));
    let rest = if a.rest.is_one() && b.rest.is_one() {
        LaurentQ::one()
    } else {
        let g = LaurentQ::gcd(&a.rest, &b.rest);
        let ra = a.rest.div_exact(&g).unwrap();
        let rb = b.rest.div_exact(&g).unwrap();
        ma = &ma * &rb;
        mb = &mb * &ra;
        &(&ra * &rb) * &g
    };
    (cyclo, rest, ma, mb)
}

fn add_impl(a: &RationalQT, b: &RationalQT, negate: bool) -> RationalQT {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    if a.cyclo == b.cyclo && a.rest == b.rest {
        let num = if negate { &a.num - &b.num } else { &a.num + &b.num };
        return RationalQT::normalized(num, a.cyclo.clone(), a.rest.clone());
    }
    let (cyclo, rest, ma, mb) = lcm_parts(a, b);
    let na = a.num.mul_q(&ma);
    let nb = b.num.mul_q(&mb);
    let num = if negate { &na - &nb } else { &na + &nb };
    RationalQT::normalized(num, cyclo, rest)
}

impl Add for &RationalQT {
    type Output = RationalQT;
    fn add(self, rhs: &RationalQT) -> RationalQT {
        add_impl(self, rhs, false)
    }
}

impl Sub for &RationalQT {
    type Output = RationalQT;
    fn sub(self, rhs: &RationalQT) -> RationalQT {
        add_impl(self, rhs, true)
    }
}

impl Mul for &RationalQT {
    type Output = RationalQT;
    fn mul(self, rhs: &RationalQT) -> RationalQT {
        if self.is_zero() || rhs.is_zero() {
            return RationalQT::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RationalQT::from_poly(&self.num * &rhs.num);
        }
        let mut cyclo = self.cyclo.clone();
        for (&n, &m) in &rhs.cyclo {
            *cyclo.entry(n).or_insert(0) += m;
        }
        RationalQT::normalized(&self.num * &rhs.num, cyclo, &self.rest * &rhs.rest)
    }
}

impl Neg for &RationalQT {
    type Output = RationalQT;
    fn neg(self) -> RationalQT {
        RationalQT { num: -&self.num, cyclo: self.cyclo.clone(), rest: self.rest.clone() }
    }
}

forward_owned!(RationalQT, Add add, Sub sub, Mul mul);

impl From<LaurentQT> for RationalQT {
    fn from(p: LaurentQT) -> Self {
        RationalQT::from_poly(p)
    }
}

impl From<LaurentQ> for RationalQT {
    fn from(p: LaurentQ) -> Self {
        RationalQT::from_q(p)
    }
}

impl std::iter::Sum for RationalQT {
    fn sum<I: Iterator<Item = RationalQT>>(iter: I) -> Self {
        iter.fold(RationalQT::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for RationalQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        if self.num.terms().len() > 1 {
            write!(f, "({num})/({})", self.den())
        } else {
            write!(f, "{num}/({})", self.den())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> RationalQT {
        let t = RationalQT::t_pow(1) - RationalQT::t_pow(-1);
        &RationalQT::one() + &t.div(&RationalQT::z()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = RationalQT::z();
        let b = RationalQT::q_pow(1) + RationalQT::q_pow(-1);
        assert_eq!(&a * &b, RationalQT::q_binomial(2));
    }

    #[test]
    fn additive_inverse() {
        assert!((&x() + &(-x())).is_zero());
    }

    #[test]
    fn clearing_the_pole() {
        let expected = RationalQT::z() + RationalQT::t_pow(1) - RationalQT::t_pow(-1);
        assert_eq!(&x() * &RationalQT::z(), expected);
    }

    #[test]
    fn canonical_equality_across_routes() {
        let a = RationalQT::inv_q_binomial(2);
        let b = RationalQT::one().div(&RationalQT::q_binomial(2)).unwrap();
        assert_eq!(a, b);
        let c = &RationalQT::q_binomial(2) * &RationalQT::inv_q_binomial(1);
        assert_eq!(c, RationalQT::q_pow(1) + RationalQT::q_pow(-1));
    }

    #[test]
    fn substitution() {
        let t = RationalQT::t_pow(1) - RationalQT::t_pow(-1);
        assert_eq!(t.substitute(1, -1, 1), -&t);
        assert_eq!(RationalQT::z().substitute(2, 1, 2), RationalQT::q_binomial(2));
        let t2 = RationalQT::t_pow(2) - RationalQT::t_pow(-2);
        let expected = &RationalQT::one() + &t2.div(&RationalQT::q_binomial(2)).unwrap();
        assert_eq!(x().substitute(2, 1, 2), expected);
    }

    #[test]
    fn exact_division_by_t_factor() {
        let n = RationalQT::t_pow(2) - RationalQT::t_pow(-2);
        let d = LaurentQT::t_pow(1) - LaurentQT::t_pow(-1);
        assert_eq!(n.exact_div(&d).unwrap(), RationalQT::t_pow(1) + RationalQT::t_pow(-1));
        let bad = RationalQT::z() + RationalQT::t_pow(1) - RationalQT::t_pow(-1);
        let d = LaurentQT::t_pow(2) - LaurentQT::one();
        assert_eq!(bad.exact_div(&d), Err(KlmovError::NotDivisible));
        let by_q = RationalQT::q_binomial(2).exact_div(&LaurentQ::binomial(1, -1).into()).unwrap();
        assert_eq!(by_q, RationalQT::q_pow(1) + RationalQT::q_pow(-1));
    }

    #[test]
    fn valuations() {
        assert_eq!(RationalQT::z().valuation_at_q1(), Ok(1));
        assert_eq!(RationalQT::z().inv().unwrap().valuation_at_q1(), Ok(-1));
        for k in 1..6 {
            let v = &RationalQT::q_binomial(k) * &RationalQT::inv_q_binomial(1);
            assert_eq!(v.valuation_at_q1(), Ok(0));
        }
        assert_eq!(RationalQT::zero().valuation_at_q1(), Err(KlmovError::ZeroInput));
    }

    #[test]
    fn non_cyclotomic_denominator() {
        let d = LaurentQ::from_int_terms(&[(1, 1), (0, 2)]);
        let a = RationalQT::new(LaurentQT::one(), &d);
        let back = &a * &RationalQT::from_q(d.clone());
        assert!(back.is_one());
        let sum = &a + &RationalQT::inv_q_binomial(1);
        assert_eq!(&(&sum - &a), &RationalQT::inv_q_binomial(1));
    }
}
