//! Colored Kauffman polynomials of torus links T(rL, kL) through the cabling constants c̃.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{to_z_basis, x_value, LaurentQT, Rational, RationalQT};
use crate::combinatorics::{partitions_unchecked, MultiPartition, Partition};
use crate::config::{self, Bound};
use crate::error::{KlmovError, Result};
use crate::typeb::{adams, pb_element_in_sb, pb_mul, sb_closed_form, sb_in_pb, PowerSumElement};

/// The torus link T(rL, kL), which has L components when gcd(r, k) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusLinkSpec {
    pub r: u32,
    pub k: u32,
    #[serde(rename = "L")]
    pub l: u32,
}

impl TorusLinkSpec {
    pub fn new(r: u32, k: u32, l: u32) -> Result<Self> {
        if r == 0 || k == 0 || l == 0 {
            return Err(KlmovError::Invalid(format!("torus parameters must be positive, got {r},{k},{l}")));
        }
        if r.gcd(&k) != 1 {
            return Err(KlmovError::Invalid(format!("r={r} and k={k} are not coprime")));
        }
        Ok(Self { r, k, l })
    }

    /// The sublink on `l` of the components.
    pub fn sublink(&self, l: u32) -> Self {
        Self { l, ..*self }
    }
}

impl fmt::Display for TorusLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.r * self.l, self.k * self.l)
    }
}

impl FromStr for TorusLinkSpec {
    type Err = KlmovError;

    /// Parses "r,k,L".
    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<u32> = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|e| KlmovError::Parse(format!("torus spec {s:?}: {e}"))))
            .collect::<Result<_>>()?;
        match v.as_slice() {
            [r, k, l] => Self::new(*r, *k, *l),
            _ => Err(KlmovError::Parse(format!("torus spec {s:?} must be r,k,L"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CTildeTable {
    pub colors: MultiPartition,
    pub r: u32,
    pub entries: BTreeMap<Partition, Rational>,
}

impl CTildeTable {
    pub fn get(&self, lambda: &Partition) -> Rational {
        self.entries.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Top degree r·‖A⃗‖.
    pub fn degree(&self) -> usize {
        self.r as usize * self.colors.size()
    }

    /// One cell per column: the coefficient, or "×" when the column has the wrong size parity.
    pub fn row_cells(&self, columns: &[Partition]) -> Vec<String> {
        let n = self.degree();
        columns
            .iter()
            .map(|c| {
                if c.size() > n || !(n - c.size()).is_multiple_of(2) {
                    "×".to_string()
                } else {
                    self.get(c).to_string()
                }
            })
            .collect()
    }
}

/// Columns used when printing a set of c̃ tables side by side.
pub fn ctilde_columns(max: usize, parity: Option<usize>) -> Vec<Partition> {
    (0..=max).filter(|s| parity.is_none_or(|p| s % 2 == p % 2)).flat_map(partitions_unchecked).collect()
}

type CTildeMemo = RwLock<HashMap<(MultiPartition, u32), Arc<CTildeTable>>>;

fn ctilde_memo() -> &'static CTildeMemo {
    static M: OnceLock<CTildeMemo> = OnceLock::new();
    M.get_or_init(|| RwLock::new(HashMap::new()))
}

/// c̃^λ_{A⃗}: the sb-expansion of ∏_α sb_{A^α} with every variable raised to the r-th power.
pub fn ctilde(colors: &MultiPartition, r: u32) -> Result<Arc<CTildeTable>> {
    if r == 0 {
        return Err(KlmovError::Invalid("r must be positive".into()));
    }
    config::check(Bound::Ctilde, r as usize * colors.size())?;
    let key = (colors.clone(), r);
    if let Some(t) = ctilde_memo().read().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let mut prod = PowerSumElement::one();
    for a in colors.components() {
        prod = pb_mul(&prod, &adams(&*sb_in_pb(a)?, r));
    }
    let sb = pb_element_in_sb(&prod)?;
    let entries = sb.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
    let table = Arc::new(CTildeTable { colors: colors.clone(), r, entries });
    Ok(ctilde_memo().write().unwrap().entry(key).or_insert(table).clone())
}

fn integral_exponent(num: i64, den: i64, what: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(KlmovError::NonIntegerExponent { exponent: format!("{num}/{den}"), context: what.to_string() });
    }
    Ok(num / den)
}

/// W_{A⃗}(T(rL,kL)). Empty colors are deleted first; the remaining L′ components form T(rL′,kL′).
pub fn torus_invariant(spec: &TorusLinkSpec, colors: &MultiPartition) -> Result<RationalQT> {
    if colors.num_components() != spec.l as usize {
        return Err(KlmovError::ComponentCountMismatch { expected: spec.l as usize, got: colors.num_components() });
    }
    let kept: Vec<Partition> = colors.components().iter().filter(|a| !a.is_empty()).cloned().collect();
    if kept.is_empty() {
        return Ok(RationalQT::one());
    }
    let colors = MultiPartition::new(kept);
    let (r, k) = (spec.r as i64, spec.k as i64);
    let n = colors.size() as i64;
    let table = ctilde(&colors, spec.r)?;
    let mut total = RationalQT::zero();
    for (lambda, c) in &table.entries {
        let f = (r * n - lambda.size() as i64) / 2;
        let qe = integral_exponent(k * lambda.kappa(), r, &format!("q-exponent k·κ/r at λ={lambda}"))?;
        let te = integral_exponent(-2 * f * k, r, &format!("t-exponent -2fk/r at λ={lambda}"))?;
        total = &total + &sb_closed_form(lambda).shift(qe, te).scale(c);
    }
    Ok(total.shift(-k * r * colors.kappa(), -k * (r - 1) * n))
}

/// ∏_α sb_{A^α}, the invariant of the L-component unlink.
pub fn unlink_invariant(colors: &MultiPartition) -> RationalQT {
    let mut acc = RationalQT::one();
    for a in colors.components() {
        acc = &acc * &sb_closed_form(a);
    }
    acc
}

/// ⟨L⟩ normalized by ⟨unknot⟩ = 1.
pub fn kauffman_bracket(spec: &TorusLinkSpec) -> Result<RationalQT> {
    let colors = MultiPartition::new(vec![Partition::row(1); spec.l as usize]);
    torus_invariant(spec, &colors)?.div(&x_value())
}

/// p_n(t) with ⟨L⟩ = Σ_n p_n(t) z^n, n ≥ 1 - L. Each p_n is a Laurent polynomial in t alone.
pub fn bracket_coefficients(spec: &TorusLinkSpec) -> Result<BTreeMap<i64, LaurentQT>> {
    let l = spec.l as i64;
    let lifted = kauffman_bracket(spec)? * RationalQT::z().pow(spec.l - 1);
    let zp = to_z_basis(&lifted)?;
    let mut out = BTreeMap::new();
    for (zpow, tpow, c) in zp.terms() {
        let e: &mut LaurentQT = out.entry(zpow as i64 + 1 - l).or_default();
        *e = &*e + &LaurentQT::monomial(c.clone(), 0, tpow);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_rational};
    use crate::combinatorics::{mp, p};

    fn spec(r: u32, k: u32, l: u32) -> TorusLinkSpec {
        TorusLinkSpec::new(r, k, l).unwrap()
    }

    fn entries(t: &CTildeTable) -> Vec<(String, Rational)> {
        t.entries.iter().map(|(p, c)| (p.to_string(), c.clone())).collect()
    }

    #[test]
    fn ctilde_examples() {
        let t = ctilde(&mp(&[&[1]]), 2).unwrap();
        assert_eq!(entries(&t), vec![("0".into(), int(1)), ("2".into(), int(1)), ("1,1".into(), int(-1))]);
        let t = ctilde(&mp(&[&[1], &[1]]), 1).unwrap();
        assert_eq!(entries(&t), vec![("0".into(), int(1)), ("2".into(), int(1)), ("1,1".into(), int(1))]);
        let t = ctilde(&mp(&[&[2], &[1]]), 1).unwrap();
        assert_eq!(t.get(&p(&[1])), int(1));
        assert_eq!(t.get(&p(&[2, 1])), int(1));
        assert_eq!(t.get(&p(&[1, 1, 1])), int(0));
        assert!(ctilde(&mp(&[&[3, 3, 3, 3, 1]]), 1).is_err());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("2,3,1".parse::<TorusLinkSpec>().unwrap(), spec(2, 3, 1));
        assert!("2,4,1".parse::<TorusLinkSpec>().is_err());
        assert!("2,3".parse::<TorusLinkSpec>().is_err());
        assert_eq!(spec(1, 3, 2).to_string(), "T(2,6)");
    }

    #[test]
    fn invariant_examples() {
        let w = torus_invariant(&spec(1, 1, 2), &mp(&[&[1], &[1]])).unwrap();
        let expect = &(&sb_closed_form(&p(&[2])).shift(2, 0) + &sb_closed_form(&p(&[1, 1])).shift(-2, 0))
            + &RationalQT::t_pow(-2);
        assert_eq!(w, expect);
        let w = torus_invariant(&spec(2, 3, 1), &mp(&[&[1]])).unwrap();
        let inner = &(&sb_closed_form(&p(&[2])).shift(3, 0) - &sb_closed_form(&p(&[1, 1])).shift(-3, 0))
            + &RationalQT::t_pow(-3);
        assert_eq!(w, inner.shift(0, -3));
        let w = torus_invariant(&spec(1, 1, 2), &mp(&[&[1], &[]])).unwrap();
        assert_eq!(w, *sb_closed_form(&p(&[1])));
        assert!(torus_invariant(&spec(1, 1, 2), &mp(&[&[1]])).is_err());
        assert!(torus_invariant(&spec(1, 1, 2), &mp(&[&[], &[]])).unwrap().is_one());
    }

    #[test]
    fn unlinks() {
        assert_eq!(unlink_invariant(&mp(&[&[1]])), *sb_closed_form(&p(&[1])));
        assert!(unlink_invariant(&mp(&[&[], &[]])).is_one());
    }

    #[test]
    fn brackets() {
        let hopf = kauffman_bracket(&spec(1, 1, 2)).unwrap();
        assert_eq!(hopf, parse_rational("(t - t^-1)/(q - q^-1) + 1 + (q - q^-1)(t - t^-1)").unwrap());
        assert!(kauffman_bracket(&spec(1, 1, 1)).unwrap().is_one());
        let c = bracket_coefficients(&spec(1, 1, 1)).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[&0].is_one());
        let u = &LaurentQT::t() - &LaurentQT::t_pow(-1);
        let c = bracket_coefficients(&spec(1, 1, 3)).unwrap();
        assert_eq!(c[&-2], u.pow(2));
    }
}
