use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{checked, forward_owned, render_power, render_term, LaurentQ};
use super::Rational;

/// Laurent polynomial in q and t, stored as t-exponent -> q-slice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentQT {
    slices: BTreeMap<i64, LaurentQ>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        LaurentQT { slices: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_q(LaurentQ::one())
    }

    pub fn from_q(p: LaurentQ) -> Self {
        Self::from_slice(0, p)
    }

    pub fn from_slice(b: i64, p: LaurentQ) -> Self {
        let mut slices = BTreeMap::new();
        if !p.is_zero() {
            slices.insert(b, p);
        }
        LaurentQT { slices }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_q(LaurentQ::constant(c))
    }

    /// c * q^a * t^b.
    pub fn monomial(c: Rational, a: i64, b: i64) -> Self {
        Self::from_slice(b, LaurentQ::monomial(c, a))
    }

    pub fn q_pow(a: i64) -> Self {
        Self::monomial(Rational::one(), a, 0)
    }

    pub fn t_pow(b: i64) -> Self {
        Self::monomial(Rational::one(), 0, b)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    /// Builds from (q-exponent, t-exponent, coefficient) triples.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64, Rational)>>(terms: I) -> Self {
        let mut by_t: BTreeMap<i64, Vec<(i64, Rational)>> = BTreeMap::new();
        for (a, b, c) in terms {
            by_t.entry(b).or_default().push((a, c));
        }
        let slices =
            by_t.into_iter().map(|(b, v)| (b, LaurentQ::from_terms(v))).filter(|(_, p)| !p.is_zero()).collect();
        LaurentQT { slices }
    }

    pub(crate) fn from_slices(slices: BTreeMap<i64, LaurentQ>) -> Self {
        LaurentQT { slices: slices.into_iter().filter(|(_, p)| !p.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.slices.len() == 1 && self.slices.get(&0).is_some_and(|p| p.is_one())
    }

    /// True when no positive or negative power of t occurs.
    pub fn is_q_only(&self) -> bool {
        self.slices.keys().all(|&b| b == 0)
    }

    pub fn slices(&self) -> impl DoubleEndedIterator<Item = (i64, &LaurentQ)> + '_ {
        self.slices.iter().map(|(b, p)| (*b, p))
    }

    pub fn slice(&self, b: i64) -> Option<&LaurentQ> {
        self.slices.get(&b)
    }

    pub fn t_range(&self) -> Option<(i64, i64)> {
        Some((*self.slices.keys().next()?, *self.slices.keys().next_back()?))
    }

    /// All (q-exponent, t-exponent, coefficient) triples.
    pub fn terms(&self) -> Vec<(i64, i64, Rational)> {
        let mut out = Vec::new();
        for (b, p) in &self.slices {
            for (a, c) in p.terms() {
                out.push((a, *b, c.clone()));
            }
        }
        out
    }

    pub fn coeff(&self, a: i64, b: i64) -> Rational {
        self.slices.get(&b).map(|p| p.coeff(a)).unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQT { slices: self.slices.iter().map(|(b, p)| (*b, p.scale(c))).collect() }
    }

    pub fn mul_q(&self, p: &LaurentQ) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        LaurentQT { slices: self.slices.iter().map(|(b, s)| (*b, s * p)).collect() }
    }

    /// Multiplies by q^a t^b.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        LaurentQT { slices: self.slices.iter().map(|(bb, p)| (checked(bb.checked_add(b)), p.shift(a))).collect() }
    }

    /// q -> q^qpow, t -> sign * t^tpow.
    pub fn substitute(&self, qpow: i64, tsign: i64, tpow: i64) -> Self {
        assert!(tpow >= 1 && (tsign == 1 || tsign == -1));
        let mut slices = BTreeMap::new();
        for (b, p) in &self.slices {
            let mut s = p.substitute(qpow);
            if tsign < 0 && b.rem_euclid(2) == 1 {
                s = -s;
            }
            slices.insert(checked(b.checked_mul(tpow)), s);
        }
        LaurentQT { slices }
    }

    /// Divides every slice exactly by a q-only polynomial.
    pub fn div_exact_q(&self, d: &LaurentQ) -> Option<Self> {
        let mut slices = BTreeMap::new();
        for (b, p) in &self.slices {
            slices.insert(*b, p.div_exact(d)?);
        }
        Some(LaurentQT { slices })
    }

    /// Exact division by a general bivariate divisor. Long division in t
    /// with exact q-division of leading slices.
    pub fn div_exact(&self, d: &LaurentQT) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dlo, dhi) = d.t_range().unwrap();
        if dlo == dhi {
            return self.div_exact_q(&d.slices[&dlo]).map(|x| x.shift(0, -dlo));
        }
        let (nlo, _) = self.t_range().unwrap();
        let min_b = nlo - dlo;
        let dtop = &d.slices[&dhi];
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((_, rhi)) = rem.t_range() {
            let b = rhi - dhi;
            if b < min_b {
                return None;
            }
            let c = rem.slices[&rhi].div_exact(dtop)?;
            rem = &rem - &d.shift(0, b).mul_q(&c);
            quot.insert(b, c);
        }
        Some(LaurentQT { slices: quot })
    }

    /// Monic gcd of the q-polynomial parts of all slices.
    pub fn q_content(&self) -> LaurentQ {
        let mut g = LaurentQ::zero();
        for p in self.slices.values() {
            g = LaurentQ::gcd(&g, p);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Minimal (q-1) multiplicity over the slices.
    pub fn mult_at_one(&self) -> u32 {
        self.slices.values().map(|p| p.mult_at_one()).min().expect("multiplicity of zero")
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.slices.values().all(|p| p.has_integer_coeffs())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Writes terms with q-exponents descending, then t-exponents descending.
    pub(crate) fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = self.terms();
        terms.sort_by_key(|x| std::cmp::Reverse((x.0, x.1)));
        let mut s = String::new();
        for (i, (a, b, c)) in terms.iter().enumerate() {
            let qs = render_power("q", *a);
            let ts = render_power("t", *b);
            let mono = match (qs.is_empty(), ts.is_empty()) {
                (true, _) => ts,
                (_, true) => qs,
                _ => format!("{qs}*{ts}"),
            };
            render_term(&mut s, c, &mono, i == 0);
        }
        s
    }
}

fn combine(a: &LaurentQT, b: &LaurentQT, negate: bool) -> LaurentQT {
    let mut slices = a.slices.clone();
    for (k, p) in &b.slices {
        let e = slices.entry(*k).or_default();
        *e = if negate { &*e - p } else { &*e + p };
        if e.is_zero() {
            slices.remove(k);
        }
    }
    LaurentQT { slices }
}

impl Add for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        combine(self, rhs, false)
    }
}

impl Sub for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        combine(self, rhs, true)
    }
}

impl Mul for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        let mut slices: BTreeMap<i64, LaurentQ> = BTreeMap::new();
        for (b1, p1) in &self.slices {
            for (b2, p2) in &rhs.slices {
                let e = slices.entry(checked(b1.checked_add(*b2))).or_default();
                *e = &*e + &(p1 * p2);
            }
        }
        LaurentQT::from_slices(slices)
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT { slices: self.slices.iter().map(|(b, p)| (*b, -p)).collect() }
    }
}

forward_owned!(LaurentQT, Add add, Sub sub, Mul mul);

impl From<LaurentQ> for LaurentQT {
    fn from(p: LaurentQ) -> Self {
        LaurentQT::from_q(p)
    }
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn qt(t: &[(i64, i64, i64)]) -> LaurentQT {
        LaurentQT::from_terms(t.iter().map(|&(a, b, c)| (a, b, r(c))))
    }

    #[test]
    fn t_division() {
        let num = qt(&[(0, 2, 1), (0, -2, -1)]);
        let den = qt(&[(0, 1, 1), (0, -1, -1)]);
        assert_eq!(num.div_exact(&den), Some(qt(&[(0, 1, 1), (0, -1, 1)])));
    }

    #[test]
    fn non_dividing_t_factor() {
        let num = qt(&[(1, 0, 1), (-1, 0, -1), (0, 1, 1), (0, -1, -1)]);
        let den = qt(&[(0, 2, 1), (0, 0, -1)]);
        assert_eq!(num.div_exact(&den), None);
    }

    #[test]
    fn mixed_division_round_trip() {
        let a = qt(&[(1, 1, 1), (-1, -1, -1), (0, 0, 3)]);
        let b = qt(&[(2, 0, 1), (0, 1, -2), (0, -3, 1)]);
        assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn antisymmetrizing_substitution() {
        let x = qt(&[(0, 1, 1), (0, -1, -1)]);
        assert_eq!(x.substitute(1, -1, 1), -&x);
        assert_eq!(x.substitute(3, 1, 2), qt(&[(0, 2, 1), (0, -2, -1)]));
    }

    #[test]
    fn rendering_order() {
        let x = qt(&[(0, 1, 1), (0, -1, -1), (2, 0, 1), (2, 3, -2)]);
        assert_eq!(x.to_string(), "-2*q^2*t^3 + q^2 + t - t^-1");
    }
}
