//! The rank-2 BMW algebra C₂ = span{1, g, e} with its Markov trace.
//!
//! The Markov trace divides by x = 1 + (t - t⁻¹)/(q - q⁻¹), whose numerator
//! involves t, so coefficients live in [`QTFraction`] rather than [`RationalQT`].
//!
//! Closing g^m gives T(2,m). With the torus normalization of W the comparison is
//! W(T(2,m)) = t^{-w}·x²·tr(g^m), where w = m when m is odd (the knot carries the
//! braid writhe as self-framing) and w = 0 when m is even (the writhe is all linking).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{x_value, LaurentQT, RationalQT};
use crate::combinatorics::{mp, MultiPartition};
use crate::error::{KlmovError, Result};
use crate::torus::{torus_invariant, TorusLinkSpec};

/// num/den with both sides Laurent polynomials in q and t. Not reduced; equality cross-multiplies.
#[derive(Clone, Debug)]
pub struct QTFraction {
    num: LaurentQT,
    den: LaurentQT,
}

impl QTFraction {
    pub fn new(num: LaurentQT, den: LaurentQT) -> Result<Self> {
        if den.is_zero() {
            return Err(KlmovError::ZeroInput);
        }
        Ok(Self { num, den }.tidy())
    }

    pub fn zero() -> Self {
        Self { num: LaurentQT::zero(), den: LaurentQT::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentQT::one(), den: LaurentQT::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &LaurentQT {
        &self.num
    }

    pub fn den(&self) -> &LaurentQT {
        &self.den
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Collapses the denominator when it divides the numerator.
    fn tidy(self) -> Self {
        if self.den.is_one() {
            return self;
        }
        match self.num.div_exact(&self.den) {
            Some(n) => Self { num: n, den: LaurentQT::one() },
            None => self,
        }
    }
}

impl From<&RationalQT> for QTFraction {
    fn from(r: &RationalQT) -> Self {
        Self { num: r.num().clone(), den: LaurentQT::from_q(r.den()) }.tidy()
    }
}

impl From<RationalQT> for QTFraction {
    fn from(r: RationalQT) -> Self {
        Self::from(&r)
    }
}

impl From<LaurentQT> for QTFraction {
    fn from(num: LaurentQT) -> Self {
        Self { num, den: LaurentQT::one() }
    }
}

impl PartialEq for QTFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for QTFraction {}

impl PartialEq<RationalQT> for QTFraction {
    fn eq(&self, other: &RationalQT) -> bool {
        &self.num * &LaurentQT::from_q(other.den()) == other.num() * &self.den
    }
}

impl Add for &QTFraction {
    type Output = QTFraction;
    fn add(self, o: &QTFraction) -> QTFraction {
        if self.den == o.den {
            return QTFraction { num: &self.num + &o.num, den: self.den.clone() }.tidy();
        }
        QTFraction { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }.tidy()
    }
}

impl Sub for &QTFraction {
    type Output = QTFraction;
    fn sub(self, o: &QTFraction) -> QTFraction {
        self + &(-o)
    }
}

impl Mul for &QTFraction {
    type Output = QTFraction;
    fn mul(self, o: &QTFraction) -> QTFraction {
        QTFraction { num: &self.num * &o.num, den: &self.den * &o.den }.tidy()
    }
}

impl Neg for &QTFraction {
    type Output = QTFraction;
    fn neg(self) -> QTFraction {
        QTFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for QTFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// c1·1 + cg·g + ce·e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Element {
    pub c1: QTFraction,
    pub cg: QTFraction,
    pub ce: QTFraction,
}

fn fr(r: RationalQT) -> QTFraction {
    QTFraction::from(r)
}

fn x() -> QTFraction {
    fr(x_value())
}

fn x_inv() -> QTFraction {
    x().inv().expect("x is nonzero")
}

impl C2Element {
    pub fn new(c1: QTFraction, cg: QTFraction, ce: QTFraction) -> Self {
        Self { c1, cg, ce }
    }

    pub fn zero() -> Self {
        Self::new(QTFraction::zero(), QTFraction::zero(), QTFraction::zero())
    }

    pub fn one() -> Self {
        Self::new(QTFraction::one(), QTFraction::zero(), QTFraction::zero())
    }

    pub fn g() -> Self {
        Self::new(QTFraction::zero(), QTFraction::one(), QTFraction::zero())
    }

    pub fn e() -> Self {
        Self::new(QTFraction::zero(), QTFraction::zero(), QTFraction::one())
    }

    /// g⁻¹ = g - (q - q⁻¹)(1 - e).
    pub fn g_inv() -> Self {
        let z = fr(RationalQT::z());
        Self::new(-&z, QTFraction::one(), z)
    }

    pub fn scalar(c: QTFraction) -> Self {
        Self::new(c, QTFraction::zero(), QTFraction::zero())
    }

    pub fn scale(&self, c: &QTFraction) -> Self {
        Self::new(c * &self.c1, c * &self.cg, c * &self.ce)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.c1 + &o.c1, &self.cg + &o.cg, &self.ce + &o.ce)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.c1 - &o.c1, &self.cg - &o.cg, &self.ce - &o.ce)
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.cg.is_zero() && self.ce.is_zero()
    }

    pub fn pow(&self, m: u32) -> Self {
        (0..m).fold(Self::one(), |acc, _| c2_mul(&acc, self))
    }
}

impl fmt::Display for C2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·1 + ({})·g + ({})·e", self.c1, self.cg, self.ce)
    }
}

/// Multiplication from g² = 1 + z(g - t⁻¹e), ge = eg = t⁻¹e, e² = xe.
pub fn c2_mul(a: &C2Element, b: &C2Element) -> C2Element {
    let z = fr(RationalQT::z());
    let tinv = fr(RationalQT::t_pow(-1));
    let gg = &a.cg * &b.cg;
    let c1 = &(&a.c1 * &b.c1) + &gg;
    let cg = &(&(&a.c1 * &b.cg) + &(&a.cg * &b.c1)) + &(&gg * &z);
    let mixed = &(&a.cg * &b.ce) + &(&a.ce * &b.cg);
    let ce = &(&(&(&a.c1 * &b.ce) + &(&a.ce * &b.c1)) - &(&gg * &(&z * &tinv)))
        + &(&(&mixed * &tinv) + &(&(&a.ce * &b.ce) * &x()));
    C2Element::new(c1, cg, ce)
}

/// tr(1) = 1, tr(g) = t/x, tr(e) = 1/x.
pub fn markov_trace(a: &C2Element) -> QTFraction {
    let xi = x_inv();
    &(&a.c1 + &(&(&a.cg * &fr(RationalQT::t_pow(1))) * &xi)) + &(&a.ce * &xi)
}

/// (p_(2), p_(1,1), p_φ).
pub fn minimal_idempotents() -> (C2Element, C2Element, C2Element) {
    let qinv = fr(RationalQT::q_pow(-1));
    let q = fr(RationalQT::q_pow(1));
    let norm = (&q + &qinv).inv().expect("q + q⁻¹ is nonzero");
    let proj = C2Element::one().sub(&C2Element::e().scale(&x_inv()));
    let p2 = c2_mul(&C2Element::scalar(qinv).add(&C2Element::g()).scale(&norm), &proj);
    let p11 = c2_mul(&C2Element::scalar(q).sub(&C2Element::g()).scale(&norm), &proj);
    let pphi = C2Element::e().scale(&x_inv());
    (p2, p11, pphi)
}

/// (g - t⁻¹)(g + q⁻¹)(g - q).
pub fn cubic_residual() -> C2Element {
    let g = C2Element::g();
    let f1 = g.sub(&C2Element::scalar(fr(RationalQT::t_pow(-1))));
    let f2 = g.add(&C2Element::scalar(fr(RationalQT::q_pow(-1))));
    let f3 = g.sub(&C2Element::scalar(fr(RationalQT::q_pow(1))));
    c2_mul(&c2_mul(&f1, &f2), &f3)
}

fn closure(m: u32) -> Result<(TorusLinkSpec, MultiPartition, i64)> {
    if m % 2 == 1 {
        Ok((TorusLinkSpec::new(2, m, 1)?, mp(&[&[1]]), m as i64))
    } else {
        Ok((TorusLinkSpec::new(1, m / 2, 2)?, mp(&[&[1], &[1]]), 0))
    }
}

/// x²·tr(g^m), rescaled by t^{-w}, against the torus formula for T(2,m).
pub fn power_trace_crosscheck(m: u32) -> Result<bool> {
    if m == 0 || m > 8 {
        return Err(KlmovError::BoundExceeded { what: "power_trace_crosscheck m", value: m as usize, bound: 8 });
    }
    let (spec, colors, w) = closure(m)?;
    let x2 = &x() * &x();
    let lhs = &(&x2 * &markov_trace(&C2Element::g().pow(m))) * &fr(RationalQT::t_pow(-w));
    Ok(lhs == torus_invariant(&spec, &colors)?)
}

/// Named pass/fail results of the whole C₂ suite.
pub fn relation_checks() -> Result<Vec<(String, bool)>> {
    let (p2, p11, pphi) = minimal_idempotents();
    let g = C2Element::g();
    let e = C2Element::e();
    let t_inv = fr(RationalQT::t_pow(-1));
    let mut out = vec![
        ("g·e = t⁻¹e".to_string(), c2_mul(&g, &e) == e.scale(&t_inv)),
        ("e·g = t⁻¹e".to_string(), c2_mul(&e, &g) == e.scale(&t_inv)),
        ("e·e = x·e".to_string(), c2_mul(&e, &e) == e.scale(&x())),
        ("g·g⁻¹ = 1".to_string(), c2_mul(&g, &C2Element::g_inv()) == C2Element::one()),
        ("cubic".to_string(), cubic_residual().is_zero()),
        ("tr(1) = 1".to_string(), markov_trace(&C2Element::one()) == QTFraction::one()),
        ("tr(g) = t/x".to_string(), markov_trace(&g) == &fr(RationalQT::t_pow(1)) * &x_inv()),
        ("tr(e) = 1/x".to_string(), markov_trace(&e) == x_inv()),
    ];
    for (name, p) in [("p2", &p2), ("p11", &p11), ("pphi", &pphi)] {
        out.push((format!("{name} idempotent"), c2_mul(p, p) == *p));
    }
    let zero = C2Element::zero();
    out.push(("p2·p11 = 0".into(), c2_mul(&p2, &p11) == zero));
    out.push(("p2·pphi = 0".into(), c2_mul(&p2, &pphi) == zero));
    out.push(("p11·pphi = 0".into(), c2_mul(&p11, &pphi) == zero));
    out.push(("p2 + p11 + pphi = 1".into(), p2.add(&p11).add(&pphi) == C2Element::one()));
    out.push(("g·p2 = q·p2".into(), c2_mul(&g, &p2) == p2.scale(&fr(RationalQT::q_pow(1)))));
    out.push(("g·p11 = -q⁻¹·p11".into(), c2_mul(&g, &p11) == p11.scale(&fr(-RationalQT::q_pow(-1)))));
    out.push(("g·pphi = t⁻¹·pphi".into(), c2_mul(&g, &pphi) == pphi.scale(&t_inv)));
    for m in 1..=8 {
        out.push((format!("x²·tr(g^{m}) vs T(2,{m})"), power_trace_crosscheck(m)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;
    use proptest::prelude::*;

    #[test]
    fn table() {
        let g = C2Element::g();
        let e = C2Element::e();
        assert_eq!(c2_mul(&g, &e), e.scale(&fr(RationalQT::t_pow(-1))));
        assert_eq!(c2_mul(&e, &e), e.scale(&x()));
        assert_eq!(c2_mul(&g, &C2Element::g_inv()), C2Element::one());
        assert!(cubic_residual().is_zero());
    }

    #[test]
    fn traces() {
        assert_eq!(markov_trace(&C2Element::one()), QTFraction::one());
        let tx = parse_rational("t").unwrap();
        assert_eq!(&markov_trace(&C2Element::g()) * &x(), tx);
        assert_eq!(&markov_trace(&C2Element::e()) * &x(), QTFraction::one());
    }

    #[test]
    fn idempotents() {
        let (p2, p11, pphi) = minimal_idempotents();
        assert_eq!(c2_mul(&p2, &p2), p2);
        assert!(c2_mul(&p2, &p11).is_zero());
        assert_eq!(p2.add(&p11).add(&pphi), C2Element::one());
    }

    #[test]
    fn closures() {
        for m in 1..=8 {
            assert!(power_trace_crosscheck(m).unwrap(), "m={m}");
        }
        assert!(power_trace_crosscheck(9).is_err());
        assert!(relation_checks().unwrap().iter().all(|(_, ok)| *ok));
    }

    fn small() -> impl Strategy<Value = QTFraction> {
        prop::collection::vec((-2i64..=2, -2i64..=2, -3i64..=3), 0..3).prop_map(|terms| {
            QTFraction::from(LaurentQT::from_terms(terms.into_iter().map(|(a, b, c)| (a, b, crate::algebra::int(c)))))
        })
    }

    fn element() -> impl Strategy<Value = C2Element> {
        (small(), small(), small()).prop_map(|(a, b, c)| C2Element::new(a, b, c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn trace_is_central(a in element(), b in element()) {
            prop_assert_eq!(markov_trace(&c2_mul(&a, &b)), markov_trace(&c2_mul(&b, &a)));
        }

        #[test]
        fn associative(a in element(), b in element(), c in element()) {
            prop_assert_eq!(c2_mul(&c2_mul(&a, &b), &c), c2_mul(&a, &c2_mul(&b, &c)));
        }
    }
}
