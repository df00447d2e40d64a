//! Type-B Schur functions: the pb <-> sb transition and the (q,t) evaluation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{LaurentQT, Rational, RationalQT};
use crate::characters::{brauer_labels, brauer_table, sn_character};
use crate::combinatorics::{partitions_unchecked, Partition};
use crate::config::{self, Bound};
use crate::error::Result;

macro_rules! lin_comb {
    ($name:ident, $sym:literal) => {
        /// Finite rational combination of basis symbols indexed by partitions.
        #[derive(Clone, Debug, PartialEq, Eq, Default)]
        pub struct $name(BTreeMap<Partition, Rational>);

        impl $name {
            pub fn zero() -> Self {
                Self(BTreeMap::new())
            }

            pub fn one() -> Self {
                Self::basis(Partition::empty())
            }

            pub fn basis(p: Partition) -> Self {
                Self([(p, Rational::one())].into())
            }

            pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(terms: I) -> Self {
                let mut out = Self::zero();
                for (p, c) in terms {
                    out.add_term(p, &c);
                }
                out
            }

            pub fn add_term(&mut self, p: Partition, c: &Rational) {
                if c.is_zero() {
                    return;
                }
                let e = self.0.entry(p.clone()).or_insert_with(Rational::zero);
                *e += c;
                if e.is_zero() {
                    self.0.remove(&p);
                }
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (p, c) in &other.0 {
                    out.add_term(p.clone(), c);
                }
                out
            }

            pub fn scale(&self, c: &Rational) -> Self {
                if c.is_zero() {
                    return Self::zero();
                }
                Self(self.0.iter().map(|(p, x)| (p.clone(), x * c)).collect())
            }

            pub fn coeff(&self, p: &Partition) -> Rational {
                self.0.get(p).cloned().unwrap_or_else(Rational::zero)
            }

            pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
                self.0.iter()
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_empty()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_empty() {
                    return f.write_str("0");
                }
                // largest labels first, as in the printed tables
                for (i, (p, c)) in self.0.iter().rev().enumerate() {
                    let neg = c.is_negative();
                    let abs = c.abs();
                    if i == 0 {
                        if neg {
                            f.write_str("-")?;
                        }
                    } else {
                        f.write_str(if neg { " - " } else { " + " })?;
                    }
                    if p.is_empty() {
                        write!(f, "{abs}")?;
                    } else {
                        if !abs.is_one() {
                            write!(f, "{abs}*")?;
                        }
                        write!(f, "{}({p})", $sym)?;
                    }
                }
                Ok(())
            }
        }
    };
}

lin_comb!(PowerSumElement, "pb");
lin_comb!(SbElement, "sb");

/// pb_μ pb_ν = pb_{μ ∪ ν}, extended bilinearly.
pub fn pb_mul(x: &PowerSumElement, y: &PowerSumElement) -> PowerSumElement {
    let mut out = PowerSumElement::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_term(a.union(b), &(ca * cb));
        }
    }
    out
}

/// pb_μ -> pb_{rμ}.
pub fn adams(x: &PowerSumElement, r: u32) -> PowerSumElement {
    PowerSumElement::from_terms(x.terms().map(|(p, c)| (p.scaled(r), c.clone())))
}

/// pb_μ = Σ_A χ_A(γ_μ) sb_A.
pub fn pb_in_sb(mu: &Partition) -> Result<SbElement> {
    config::check(Bound::Ctilde, mu.size())?;
    let table = brauer_table(mu.size());
    let mut out = SbElement::zero();
    for a in &table.labels {
        let chi = table.get(a, mu)?;
        out.add_term(a.clone(), &Rational::from_integer(chi.into()));
    }
    Ok(out)
}

/// Substitutes every pb_μ by its sb expansion.
pub fn pb_element_in_sb(x: &PowerSumElement) -> Result<SbElement> {
    let mut out = SbElement::zero();
    for (mu, c) in x.terms() {
        out = out.add(&pb_in_sb(mu)?.scale(c));
    }
    Ok(out)
}

type PbMemo = RwLock<HashMap<Partition, Arc<PowerSumElement>>>;

fn sb_memo() -> &'static PbMemo {
    static M: OnceLock<PbMemo> = OnceLock::new();
    M.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Inverse transition, by induction on |A| through the S_n block of the Brauer table.
pub fn sb_in_pb(a: &Partition) -> Result<Arc<PowerSumElement>> {
    config::check(Bound::Ctilde, a.size())?;
    if let Some(v) = sb_memo().read().unwrap().get(a) {
        return Ok(v.clone());
    }
    let n = a.size();
    let table = brauer_table(n);
    let lower: Vec<Partition> = brauer_labels(n).into_iter().filter(|b| b.size() < n).collect();
    let mut out = PowerSumElement::zero();
    for mu in partitions_unchecked(n) {
        let chi = sn_character(a, &mu)?;
        if chi == 0 {
            continue;
        }
        let mut inner = PowerSumElement::basis(mu.clone());
        for b in &lower {
            let c = table.get(b, &mu)?;
            if c != 0 {
                inner = inner.add(&sb_in_pb(b)?.scale(&Rational::from_integer((-c).into())));
            }
        }
        out = out.add(&inner.scale(&Rational::new(chi.into(), BigInt::from(mu.z_stat()))));
    }
    let out = Arc::new(out);
    sb_memo().write().unwrap().insert(a.clone(), out.clone());
    Ok(out)
}

type SbMemo = RwLock<HashMap<Partition, Arc<RationalQT>>>;

fn closed_memo() -> &'static SbMemo {
    static M: OnceLock<SbMemo> = OnceLock::new();
    M.get_or_init(|| RwLock::new(HashMap::new()))
}

/// t q^d - t^-1 q^-d.
fn twisted(d: i64) -> RationalQT {
    RationalQT::from_poly(&LaurentQT::monomial(Rational::one(), d, 1) - &LaurentQT::monomial(Rational::one(), -d, -1))
}

/// sb_λ(q,t) as a product over boxes; the box denominators are q^h - q^-h.
pub fn sb_closed_form(lambda: &Partition) -> Arc<RationalQT> {
    if let Some(v) = closed_memo().read().unwrap().get(lambda) {
        return v.clone();
    }
    let conj = lambda.conjugate();
    let row = |i: usize| lambda.part(i) as i64;
    let col = |j: usize| conj.part(j) as i64;
    let mut acc = RationalQT::one();
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) as usize {
            let (ii, jj) = (i as i64, j as i64);
            let h = row(i) + col(j) - ii - jj + 1;
            let factor = if i == j {
                let e = row(j) - col(j);
                &RationalQT::one() + &(twisted(e) * RationalQT::inv_q_binomial(h))
            } else {
                let d = if i <= j { row(i) + row(j) - ii - jj + 1 } else { -col(i) - col(j) + ii + jj - 1 };
                twisted(d) * RationalQT::inv_q_binomial(h)
            };
            acc = &acc * &factor;
        }
    }
    let acc = Arc::new(acc);
    closed_memo().write().unwrap().insert(lambda.clone(), acc.clone());
    acc
}

pub fn evaluate_sb_element(x: &SbElement) -> RationalQT {
    x.terms().map(|(a, c)| sb_closed_form(a).scale(c)).sum()
}

/// ∏_i (1 + (t^{μ_i} - t^{-μ_i})/(q^{μ_i} - q^{-μ_i})), the unknot value of pb_μ.
pub fn pb_unknot_value(mu: &Partition) -> RationalQT {
    let mut acc = RationalQT::one();
    for &m in mu.parts() {
        let m = m as i64;
        let t = RationalQT::t_pow(m) - RationalQT::t_pow(-m);
        acc = &acc * &(&RationalQT::one() + &(t * RationalQT::inv_q_binomial(m)));
    }
    acc
}

pub fn unknot_identity_check(mu: &Partition) -> Result<bool> {
    Ok(evaluate_sb_element(&pb_in_sb(mu)?) == pb_unknot_value(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_rational, rat};
    use crate::combinatorics::p;

    fn pbe(terms: &[(&[u32], Rational)]) -> PowerSumElement {
        PowerSumElement::from_terms(terms.iter().map(|(k, c)| (p(k), c.clone())))
    }

    fn sbe(terms: &[(&[u32], i64)]) -> SbElement {
        SbElement::from_terms(terms.iter().map(|(k, c)| (p(k), int(*c))))
    }

    #[test]
    fn products_and_adams() {
        let one = pbe(&[(&[1], int(1))]);
        assert_eq!(pb_mul(&one, &one), pbe(&[(&[1, 1], int(1))]));
        let x = pbe(&[(&[2], rat(1, 2)), (&[1, 1], rat(1, 2)), (&[], int(-1))]);
        assert_eq!(pb_mul(&x, &one), pbe(&[(&[2, 1], rat(1, 2)), (&[1, 1, 1], rat(1, 2)), (&[1], int(-1))]));
        assert_eq!(adams(&pbe(&[(&[2, 1], int(1))]), 3), pbe(&[(&[6, 3], int(1))]));
        let y = pbe(&[(&[2], rat(1, 2)), (&[], int(-1))]);
        assert_eq!(adams(&y, 2), pbe(&[(&[4], rat(1, 2)), (&[], int(-1))]));
    }

    #[test]
    fn transitions() {
        assert_eq!(pb_in_sb(&p(&[2])).unwrap(), sbe(&[(&[2], 1), (&[1, 1], -1), (&[], 1)]));
        assert_eq!(pb_in_sb(&p(&[1])).unwrap(), sbe(&[(&[1], 1)]));
        let sb2 = sb_in_pb(&p(&[2])).unwrap();
        assert_eq!(*sb2, pbe(&[(&[2], rat(1, 2)), (&[1, 1], rat(1, 2)), (&[], int(-1))]));
        assert_eq!(*sb_in_pb(&Partition::empty()).unwrap(), PowerSumElement::one());
        let sb21 = sb_in_pb(&p(&[2, 1])).unwrap();
        assert_eq!(*sb21, pbe(&[(&[3], rat(-1, 3)), (&[1, 1, 1], rat(1, 3)), (&[1], int(-1))]));
    }

    #[test]
    fn closed_forms() {
        let sb1 = parse_rational("1 + (t - t^-1)/(q - q^-1)").unwrap();
        assert_eq!(*sb_closed_form(&p(&[1])), sb1);
        let sb2 = parse_rational("(1 + (t q - t^-1 q^-1)/(q^2 - q^-2)) (t - t^-1)/(q - q^-1)").unwrap();
        assert_eq!(*sb_closed_form(&p(&[2])), sb2);
        let sb22 = parse_rational(
            "(1+(t-t^-1)/(q^3-q^-3))(1+(t-t^-1)/(q-q^-1))((t q^-2-t^-1 q^2)/(q^2-q^-2))((t q^2-t^-1 q^-2)/(q^2-q^-2))",
        )
        .unwrap();
        assert_eq!(*sb_closed_form(&p(&[2, 2])), sb22);
        assert!(sb_closed_form(&Partition::empty()).is_one());
    }

    #[test]
    fn evaluation() {
        let two = evaluate_sb_element(&pb_in_sb(&p(&[2])).unwrap());
        assert_eq!(two, parse_rational("1 + (t^2 - t^-2)/(q^2 - q^-2)").unwrap());
        assert!(evaluate_sb_element(&SbElement::zero()).is_zero());
        for mu in [p(&[1]), p(&[2, 1]), p(&[1, 1, 1, 1])] {
            assert!(unknot_identity_check(&mu).unwrap());
        }
    }
}
