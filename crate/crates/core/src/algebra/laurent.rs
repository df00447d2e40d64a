use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Laurent polynomial in a single variable q over Q, stored densely from the
/// lowest nonzero exponent. Both ends are trimmed so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQ { low: e, coeffs: vec![c] }
    }

    /// q^e with coefficient one.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// q^a - q^b.
    pub fn binomial(a: i64, b: i64) -> Self {
        Self::q_pow(a) - Self::q_pow(b)
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let terms: Vec<(i64, Rational)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|(e, _)| *e).min().unwrap();
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rational::zero(); span(lo, hi)];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_integer(BigInt::from(c)))))
    }

    pub(crate) fn from_dense(low: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentQ { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Degree of the polynomial obtained after clearing the lowest power.
    pub fn span_degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.low {
            return Rational::zero();
        }
        self.coeffs.get((e - self.low) as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        let low = self.low;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQ { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentQ { low: checked(self.low.checked_add(k)), coeffs: self.coeffs.clone() }
    }

    /// q -> q^k for k >= 1.
    pub fn substitute(&self, k: i64) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let ku = k as usize;
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * ku + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * ku] = c.clone();
        }
        LaurentQ { low: checked(self.low.checked_mul(k)), coeffs }
    }

    /// q -> q^{-1}.
    pub fn invert_variable(&self) -> Self {
        match self.high() {
            None => Self::zero(),
            Some(h) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentQ { low: -h, coeffs }
            }
        }
    }

    /// q -> -q^{-1}.
    pub fn bar_involution(&self) -> Self {
        let inv = self.invert_variable();
        let terms = inv.terms().map(|(e, c)| (e, if e.rem_euclid(2) == 1 { -c } else { c.clone() }));
        Self::from_terms(terms.collect::<Vec<_>>())
    }

    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Multiplicity of (q-1) as a factor.
    pub fn mult_at_one(&self) -> u32 {
        assert!(!self.is_zero(), "multiplicity of the zero polynomial");
        let mut cur = self.coeffs.clone();
        let mut m = 0;
        loop {
            // synthetic division by (q - 1) from the top
            let n = cur.len();
            if n <= 1 {
                return m;
            }
            let mut quot = vec![Rational::zero(); n - 1];
            let mut acc = Rational::zero();
            for i in (1..n).rev() {
                acc += &cur[i];
                quot[i - 1] = acc.clone();
            }
            acc += &cur[0];
            if !acc.is_zero() {
                return m;
            }
            cur = quot;
            m += 1;
        }
    }

    /// Exact division in the Laurent ring. `None` if the divisor does not divide.
    pub fn div_exact(&self, d: &LaurentQ) -> Option<LaurentQ> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let inv = d.coeffs[0].recip();
            return Some(LaurentQ { low: self.low - d.low, coeffs: self.coeffs.iter().map(|c| c * &inv).collect() });
        }
        let (q, r) = poly_divrem(&self.coeffs, &d.coeffs);
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - d.low, q))
    }

    /// Division as ordinary polynomials after clearing the lowest powers; used for gcd.
    pub fn poly_rem(&self, d: &LaurentQ) -> LaurentQ {
        let (_, r) = poly_divrem(&self.coeffs, &d.coeffs);
        Self::from_dense(0, r)
    }

    /// Monic polynomial with nonzero constant term and the same roots in Q-bar minus {0}.
    pub fn monic_part(&self) -> (Rational, i64, LaurentQ) {
        assert!(!self.is_zero());
        let lc = self.coeffs.last().unwrap().clone();
        let inv = lc.recip();
        let p = LaurentQ { low: 0, coeffs: self.coeffs.iter().map(|c| c * &inv).collect() };
        (lc, self.low, p)
    }

    /// Monic gcd of the polynomial parts (monomial factors ignored).
    pub fn gcd(a: &LaurentQ, b: &LaurentQ) -> LaurentQ {
        if a.is_zero() {
            return if b.is_zero() { Self::zero() } else { b.monic_part().2 };
        }
        if b.is_zero() {
            return a.monic_part().2;
        }
        let mut x = a.monic_part().2;
        let mut y = b.monic_part().2;
        if x.coeffs.len() < y.coeffs.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.coeffs.len() == 1 {
                return Self::one();
            }
            let r = x.poly_rem(&y);
            x = y;
            y = if r.is_zero() { r } else { r.monic_part().2 };
        }
        x
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

fn span(lo: i64, hi: i64) -> usize {
    usize::try_from(checked(hi.checked_sub(lo)) + 1).expect("exponent span overflow")
}

pub(crate) fn checked(x: Option<i64>) -> i64 {
    x.expect("exponent arithmetic overflowed i64")
}

/// Ordinary polynomial division on dense coefficient vectors (index = degree).
fn poly_divrem(a: &[Rational], d: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dn = d.len();
    if a.len() < dn {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let lc_inv = d[dn - 1].recip();
    let unit = lc_inv.is_one();
    let mut q = vec![Rational::zero(); a.len() - dn + 1];
    for i in (0..q.len()).rev() {
        let top = &r[i + dn - 1];
        if top.is_zero() {
            continue;
        }
        let c = if unit { top.clone() } else { top * &lc_inv };
        for (j, dj) in d.iter().enumerate() {
            if !dj.is_zero() {
                let t = &c * dj;
                r[i + j] -= t;
            }
        }
        q[i] = c;
    }
    r.truncate(dn - 1);
    (q, r)
}

fn add_dense(a: &LaurentQ, b: &LaurentQ, negate_b: bool) -> LaurentQ {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.low.min(b.low);
    let hi = a.high().unwrap().max(b.high().unwrap());
    let mut coeffs = vec![Rational::zero(); span(lo, hi)];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - lo) as usize + i] = c.clone();
    }
    let off = (b.low - lo) as usize;
    for (i, c) in b.coeffs.iter().enumerate() {
        if negate_b {
            coeffs[off + i] -= c;
        } else {
            coeffs[off + i] += c;
        }
    }
    LaurentQ::from_dense(lo, coeffs)
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        add_dense(self, rhs, false)
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        add_dense(self, rhs, true)
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQ::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentQ::from_dense(checked(self.low.checked_add(rhs.low)), coeffs)
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t { -&self }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(LaurentQ, Add add, Sub sub, Mul mul);

/// Renders a coefficient/monomial product in the shared text grammar.
pub(crate) fn render_term(out: &mut String, c: &Rational, mono: &str, first: bool) {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&abs.to_string());
    } else {
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(mono);
    }
}

pub(crate) fn render_power(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            render_term(&mut s, c, &render_power("q", e), i == 0);
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &[(i64, i64)]) -> LaurentQ {
        LaurentQ::from_int_terms(t)
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(1, 1), (-1, -1)]);
        let b = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(2, 1), (-2, -1)]);
        let b = p(&[(1, 1), (-1, -1)]);
        assert_eq!(a.div_exact(&b), Some(p(&[(1, 1), (-1, 1)])));
        assert_eq!(p(&[(1, 1), (0, 1)]).div_exact(&p(&[(1, 1), (0, -1)])), None);
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (q^4 - 1) and (q^6 - 1) share q^2 - 1
        let g = LaurentQ::gcd(&p(&[(4, 1), (0, -1)]), &p(&[(6, 1), (0, -1)]));
        assert_eq!(g, p(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn multiplicity_at_one() {
        let a = p(&[(1, 1), (-1, -1)]);
        assert_eq!(a.mult_at_one(), 1);
        assert_eq!((&a * &a).mult_at_one(), 2);
        assert_eq!(p(&[(2, 1), (1, 1), (0, 1)]).mult_at_one(), 0);
    }

    #[test]
    fn substitution_and_involution() {
        let a = p(&[(1, 1), (-1, -1)]);
        assert_eq!(a.substitute(2), p(&[(2, 1), (-2, -1)]));
        assert_eq!(a.bar_involution(), a);
        assert_eq!(p(&[(1, 1), (-1, 1)]).bar_involution(), p(&[(1, -1), (-1, -1)]));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[(2, 3), (0, -1), (-1, 1)]).to_string(), "3*q^2 - 1 + q^-1");
        assert_eq!(LaurentQ::zero().to_string(), "0");
    }
}
