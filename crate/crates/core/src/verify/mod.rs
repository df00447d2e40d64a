//! Regression checks against published tables and a seeded randomized property suite.
//!
//! Each numbered criterion yields a list of named checks. The CLI `verify` command and
//! the `acceptance` test target both run these.

mod data;
mod properties;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{parse_rational, to_z_basis, x_value, Rational, RationalQT};
use crate::bmw;
use crate::characters::{brauer_character, brauer_labels};
use crate::combinatorics::{lemma72_sum, partitions_of, MultiPartition, Partition};
use crate::error::{KlmovError, Result};
use crate::lmov::{
    check_conjecture, conjecture_lhs, degree_check, free_energy, lickorish_millett_mismatches, reformulated_g,
    unknot_free_energy, z_coefficient, InvariantSource,
};
use crate::rmatrix;
use crate::torus::{ctilde, torus_invariant, TorusLinkSpec};
use crate::typeb::{pb_in_sb, sb_closed_form, sb_in_pb, unknot_identity_check};

pub use properties::property_checks;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Self { name: name.into(), pass, detail: None }
    }

    fn from_result(name: impl Into<String>, r: Result<bool>) -> Self {
        match r {
            Ok(pass) => Self::new(name, pass),
            Err(e) => Self { name: name.into(), pass: false, detail: Some(format!("error: {e}")) },
        }
    }

    fn compare<T: PartialEq + Display>(name: impl Into<String>, got: Result<T>, want: Result<T>) -> Self {
        match (got, want) {
            (Ok(g), Ok(w)) if g == w => Self::new(name, true),
            (Ok(g), Ok(w)) => Self { name: name.into(), pass: false, detail: Some(format!("got {g}, expected {w}")) },
            (Err(e), _) => Self { name: name.into(), pass: false, detail: Some(format!("error: {e}")) },
            (_, Err(e)) => Self { name: name.into(), pass: false, detail: Some(format!("bad reference: {e}")) },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub key: &'static str,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Failures not listed in [`KNOWN_DISCREPANCIES`].
    pub fn unexpected_failures(&self) -> impl Iterator<Item = &Check> {
        self.failures().filter(|c| !is_known_discrepancy(&c.name))
    }
}

/// (id, key, title) of every criterion.
pub const CRITERIA: &[(u32, &str, &str)] = &[
    (1, "characters", "Brauer character tables for n = 2, 3, 4"),
    (2, "transitions", "pb <-> sb transition lines"),
    (3, "closed-forms", "closed forms of sb_A(q,t)"),
    (4, "ctilde", "cabling constant tables"),
    (5, "invariants", "W-expansions and sb-level z·g displays"),
    (6, "ntables", "N tables after anti-symmetrization"),
    (7, "expansions", "z-expansions without anti-symmetrization"),
    (8, "hopf", "Hopf link with colors (1),(2)"),
    (9, "rmatrix", "explicit R-matrix for N = 1, 2, 3"),
    (10, "bmw", "rank-2 BMW relations, idempotents and power traces"),
    (11, "degree", "degree bound on the free energy"),
    (12, "lickorish-millett", "Lickorish-Millett coefficient formulas"),
    (13, "unknot", "unknot identities and free energy"),
    (14, "lemma72", "vector-partition alternating sums vanish"),
    (15, "properties", "seeded randomized property suite"),
];

/// Criterion ids run by the reference suite (everything except the randomized one).
pub const REFERENCE_IDS: std::ops::RangeInclusive<u32> = 1..=14;
pub const PROPERTY_ID: u32 = 15;

/// Resolves "7" or "expansions" to an id.
pub fn lookup(key: &str) -> Option<u32> {
    let key = key.trim();
    CRITERIA.iter().find(|(id, k, _)| *k == key || id.to_string() == key).map(|(id, _, _)| *id)
}

pub fn run(id: u32, seed: u64) -> Result<CriterionReport> {
    let &(id, key, title) =
        CRITERIA.iter().find(|(i, _, _)| *i == id).ok_or_else(|| KlmovError::Invalid(format!("no criterion {id}")))?;
    let checks = match id {
        1 => characters(),
        2 => transitions(),
        3 => closed_forms(),
        4 => ctilde_tables(),
        5 => invariants(),
        6 => n_tables(),
        7 => expansions(),
        8 => hopf(),
        9 => rmatrix_checks(),
        10 => bmw_checks(),
        11 => degree(),
        12 => lickorish_millett(),
        13 => unknot(),
        14 => lemma72(),
        _ => property_checks(seed),
    };
    Ok(CriterionReport { id, key, title, checks })
}

fn torus(r: u32, k: u32, l: u32) -> Result<InvariantSource> {
    Ok(InvariantSource::Torus(TorusLinkSpec::new(r, k, l)?))
}

fn part(s: &str) -> Result<Partition> {
    s.parse()
}

fn multi(s: &str) -> Result<MultiPartition> {
    s.parse()
}

fn characters() -> Vec<Check> {
    let mut out = Vec::new();
    for (blocks, what) in [(data::SN_TABLES, "S_n"), (data::BRAUER_LOWER, "lower")] {
        for &(n, cols, rows) in blocks {
            for &(label, values) in rows {
                for (col, &want) in cols.iter().zip(values) {
                    let name = format!("n={n} {what}: χ_({label})(γ_({col})) = {want}");
                    let got = part(label).and_then(|a| brauer_character(&a, &part(col)?));
                    out.push(Check::compare(name, got, Ok(want)));
                }
            }
        }
    }
    for n in 2..=4 {
        let listed: BTreeSet<String> = [data::SN_TABLES, data::BRAUER_LOWER]
            .iter()
            .flat_map(|b| b.iter().filter(|blk| blk.0 == n).flat_map(|blk| blk.2.iter().map(|r| r.0.to_string())))
            .collect();
        let labels: BTreeSet<String> = brauer_labels(n).iter().map(|p| p.to_string()).collect();
        out.push(Check::new(format!("n={n}: rows cover every Brauer label"), listed == labels));
    }
    out
}

/// Parses combinations such as "1/6[2pb(3)+3pb(2,1)+pb(1,1,1)]-pb(1)" over one basis symbol.
fn parse_lin(input: &str, sym: &str) -> Result<BTreeMap<Partition, Rational>> {
    struct P<'a> {
        s: &'a [u8],
        pos: usize,
        sym: &'a str,
    }
    impl P<'_> {
        fn err(&self, msg: &str) -> KlmovError {
            KlmovError::Parse(format!("{msg} at byte {} of {:?}", self.pos, String::from_utf8_lossy(self.s)))
        }
        fn peek(&self) -> Option<u8> {
            self.s.get(self.pos).copied()
        }
        fn int(&mut self) -> Option<i64> {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
        }
        fn lin(&mut self, out: &mut BTreeMap<Partition, Rational>, scale: &Rational) -> Result<()> {
            let mut first = true;
            while let Some(c) = self.peek() {
                if c == b']' {
                    break;
                }
                let mut coeff = scale.clone();
                match c {
                    b'+' => self.pos += 1,
                    b'-' => {
                        self.pos += 1;
                        coeff = -coeff;
                    }
                    _ if first => {}
                    _ => return Err(self.err("expected a sign")),
                }
                first = false;
                if let Some(n) = self.int() {
                    let mut c = Rational::from_integer(n.into());
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let d = self.int().ok_or_else(|| self.err("expected a denominator"))?;
                        c /= Rational::from_integer(d.into());
                    }
                    coeff *= c;
                }
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    self.lin(out, &coeff)?;
                    if self.peek() != Some(b']') {
                        return Err(self.err("unclosed bracket"));
                    }
                    self.pos += 1;
                } else if self.s[self.pos..].starts_with(self.sym.as_bytes()) {
                    self.pos += self.sym.len();
                    let close =
                        self.s[self.pos..].iter().position(|&c| c == b')').ok_or_else(|| self.err("unclosed"))?;
                    let label = std::str::from_utf8(&self.s[self.pos..=self.pos + close]).unwrap();
                    self.pos += close + 1;
                    *out.entry(label.parse()?).or_default() += coeff;
                } else {
                    *out.entry(Partition::empty()).or_default() += coeff;
                }
            }
            Ok(())
        }
    }
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = P { s: compact.as_bytes(), pos: 0, sym };
    let mut out = BTreeMap::new();
    p.lin(&mut out, &Rational::from_integer(1.into()))?;
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    out.retain(|_, c: &mut Rational| *c != Rational::from_integer(0.into()));
    Ok(out)
}

fn render_lin(m: &BTreeMap<Partition, Rational>, sym: &str) -> String {
    let terms: Vec<String> = m.iter().map(|(p, c)| format!("{c}·{sym}({p})")).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn transitions() -> Vec<Check> {
    let mut out = Vec::new();
    for &(mu, line) in data::PB_IN_SB {
        let got = part(mu)
            .and_then(|m| pb_in_sb(&m))
            .map(|x| render_lin(&x.terms().map(|(p, c)| (p.clone(), c.clone())).collect(), "sb"));
        let want = parse_lin(line, "sb(").map(|m| render_lin(&m, "sb"));
        out.push(Check::compare(format!("pb_({mu}) = {line}"), got, want));
    }
    for &(a, line) in data::SB_IN_PB {
        let got = part(a)
            .and_then(|a| sb_in_pb(&a))
            .map(|x| render_lin(&x.terms().map(|(p, c)| (p.clone(), c.clone())).collect(), "pb"));
        let want = parse_lin(line, "pb(").map(|m| render_lin(&m, "pb"));
        out.push(Check::compare(format!("sb_({a}) = {line}"), got, want));
    }
    out
}

fn closed_forms() -> Vec<Check> {
    data::SB_CLOSED
        .iter()
        .map(|&(a, form)| {
            let got = part(a).map(|a| (*sb_closed_form(&a)).clone());
            Check::compare(format!("sb_({a}) closed form"), got, parse_rational(form))
        })
        .collect()
}

fn ctilde_tables() -> Vec<Check> {
    let mut out = Vec::new();
    for t in data::CTILDE {
        for &(colors, cells) in t.rows {
            let name = format!("c̃ r={} A={colors}", t.r);
            let r = (|| -> Result<Vec<String>> {
                let table = ctilde(&multi(colors)?, t.r)?;
                let deg = table.degree();
                let cols: Vec<Partition> = t.columns.iter().map(|c| part(c)).collect::<Result<_>>()?;
                let mut bad = Vec::new();
                for (col, cell) in cols.iter().zip(cells.iter()) {
                    let got = table.get(col);
                    match cell {
                        Some(v) if got != Rational::from_integer((*v).into()) => {
                            bad.push(format!("({col}): {got} vs {v}"))
                        }
                        None if col.size() <= deg && (deg - col.size()) % 2 == 0 => {
                            bad.push(format!("({col}) should be ×"))
                        }
                        _ => {}
                    }
                }
                for lambda in table.entries.keys() {
                    if !cols.contains(lambda) {
                        bad.push(format!("({lambda}) not among the printed columns"));
                    }
                }
                Ok(bad)
            })();
            out.push(match r {
                Ok(bad) if bad.is_empty() => Check::new(name, true),
                Ok(bad) => Check { name, pass: false, detail: Some(bad.join("; ")) },
                Err(e) => Check::from_result(name, Err(e)),
            });
        }
    }
    out
}

fn sb(parts: &[u32]) -> RationalQT {
    (*sb_closed_form(&Partition::new(parts.to_vec()))).clone()
}

/// sb_λ(q^r, t^r).
fn sbr(parts: &[u32], r: i64) -> RationalQT {
    sb(parts).substitute(r, 1, r)
}

fn qt(a: i64, b: i64) -> RationalQT {
    RationalQT::monomial(Rational::from_integer(1.into()), a, b)
}

fn c(n: i64) -> RationalQT {
    RationalQT::from_int(n)
}

fn frac(a: RationalQT, b: RationalQT) -> RationalQT {
    a.div(&b).expect("nonzero denominator")
}

fn eval_terms(terms: data::KTerms, k: i64) -> RationalQT {
    terms.iter().map(|&(a, b, n, l)| &(&c(n) * &qt(a * k, b * k)) * &sb(l)).sum()
}

/// Torus k values used for an r: knots T(2,k) need k odd.
fn k_values(r: u32) -> [u32; 3] {
    if r == 2 {
        [1, 3, 5]
    } else {
        [1, 2, 3]
    }
}

type GDisplay = fn(i64) -> RationalQT;

/// sb-level forms of z_μ⃗·g_μ⃗ for T(rL,kL), as (r, L, μ⃗, anti-symmetrized, formula).
fn g_displays() -> Vec<(u32, u32, &'static str, bool, GDisplay)> {
    vec![
        (1, 2, "1|1", false, |k| {
            &(&(&(&qt(2 * k, 0) * &sb(&[2])) + &(&qt(-2 * k, 0) * &sb(&[1, 1]))) + &qt(0, -2 * k)) - &sb(&[1]).pow(2)
        }),
        (1, 2, "1,1|1", false, |k| {
            let s1 = sb(&[1]);
            let w11 = &(&(&qt(2 * k, 0) * &sb(&[2])) + &(&qt(-2 * k, 0) * &sb(&[1, 1]))) + &qt(0, -2 * k);
            let head = [
                &qt(4 * k, 0) * &sb(&[3]),
                &qt(-2 * k, 0) * &sb(&[2, 1]),
                &qt(-2 * k, -2 * k) * &s1,
                &qt(2 * k, 0) * &sb(&[2, 1]),
                &qt(-4 * k, 0) * &sb(&[1, 1, 1]),
                &qt(2 * k, -2 * k) * &s1,
            ]
            .into_iter()
            .sum::<RationalQT>();
            &(&(&head - &(&c(2) * &(&w11 * &s1))) + &(&c(2) * &s1.pow(3))) - &(&(&sb(&[2]) + &sb(&[1, 1])) * &s1)
        }),
        (1, 2, "2|1", false, |k| {
            let s1 = sb(&[1]);
            let head = [
                &qt(4 * k, 0) * &sb(&[3]),
                &qt(-2 * k, 0) * &sb(&[2, 1]),
                &qt(-2 * k, -2 * k) * &s1,
                -&(&qt(2 * k, 0) * &sb(&[2, 1])),
                -&(&qt(-4 * k, 0) * &sb(&[1, 1, 1])),
                -&(&qt(2 * k, -2 * k) * &s1),
                s1.clone(),
            ]
            .into_iter()
            .sum::<RationalQT>();
            &head - &(&s1 * &(&(&sb(&[2]) - &sb(&[1, 1])) + &c(1)))
        }),
        (1, 2, "2|2", false, |k| {
            let sum = [
                &qt(8 * k, 0) * &sb(&[4]),
                &(&c(1) - &(&c(2) * &qt(4 * k, 0))) * &sb(&[3, 1]),
                &(&qt(4 * k, 0) + &qt(-4 * k, 0)) * &sb(&[2, 2]),
                &(&c(1) - &(&c(2) * &qt(-4 * k, 0))) * &sb(&[2, 1, 1]),
                &qt(-8 * k, 0) * &sb(&[1, 1, 1, 1]),
                &(&(&(&qt(-2 * k, 0) - &(&c(2) * &qt(2 * k, 0))) + &qt(6 * k, 0)) * &qt(0, -2 * k)) * &sb(&[2]),
                &(&(&(&qt(-6 * k, 0) - &(&c(2) * &qt(-2 * k, 0))) + &qt(2 * k, 0)) * &qt(0, -2 * k)) * &sb(&[1, 1]),
                &(&qt(4 * k, 0) + &qt(-4 * k, 0)) * &qt(0, -4 * k),
                -&(&sb(&[2]) - &sb(&[1, 1])).pow(2),
                -&(&c(2)
                    * &(&(&(&qt(4 * k, 0) * &sbr(&[2], 2)) + &(&qt(-4 * k, 0) * &sbr(&[1, 1], 2))) + &qt(0, -4 * k))),
                &c(2) * &sbr(&[1], 2).pow(2),
            ];
            sum.into_iter().sum()
        }),
        (1, 2, "3|1", false, |k| {
            let sum = [
                &(&qt(6 * k, 0) - &c(1)) * &sb(&[4]),
                &(&qt(-2 * k, 0) - &qt(4 * k, 0)) * &sb(&[3, 1]),
                &(&qt(2 * k, 0) - &qt(-4 * k, 0)) * &sb(&[2, 1, 1]),
                &(&qt(-6 * k, 0) - &c(1)) * &sb(&[1, 1, 1, 1]),
                &(&(&qt(-4 * k, 0) - &qt(2 * k, 0)) * &qt(0, -2 * k)) * &sb(&[2]),
                &(&(&qt(4 * k, 0) - &qt(-2 * k, 0)) * &qt(0, -2 * k)) * &sb(&[1, 1]),
            ];
            sum.into_iter().sum()
        }),
        (2, 1, "1,1", false, |k| {
            let w2 = eval_terms(data::W_EXPANSIONS[10].3, k);
            let w11 = eval_terms(data::W_EXPANSIONS[11].3, k);
            let inner = &(&(&qt(k, 0) * &sb(&[2])) - &(&qt(-k, 0) * &sb(&[1, 1]))) + &qt(0, -k);
            &(&(&w2 + &w11) - &(&qt(0, -2 * k) * &inner.pow(2))) + &c(1)
        }),
        (2, 1, "2", false, |k| {
            let bracket = [
                &(&qt(2 * k, 0) - &qt(-2 * k, 0)) * &sb(&[3, 1]),
                &(&(&(&qt(-4 * k, 0) - &qt(4 * k, 0)) - &qt(2 * k, 0)) + &qt(-2 * k, 0)) * &sb(&[2, 2]),
                &(&qt(2 * k, 0) - &qt(-2 * k, 0)) * &sb(&[2, 1, 1]),
                &(&(&(&(&qt(-3 * k, 0) - &qt(5 * k, 0)) * &qt(0, -k)) - &qt(2 * k, 0)) + &qt(-2 * k, 0)) * &sb(&[2]),
                &(&(&(&(&qt(3 * k, 0) - &qt(-5 * k, 0)) * &qt(0, -k)) + &qt(2 * k, 0)) - &qt(-2 * k, 0)) * &sb(&[1, 1]),
                &(&(&qt(-4 * k, 0) - &qt(4 * k, 0)) - &c(1)) * &qt(0, -2 * k),
                &qt(-2 * k, 0) - &qt(2 * k, 0),
            ];
            &(&qt(0, -2 * k) * &bracket.into_iter().sum()) + &c(1)
        }),
        (2, 1, "2", true, |k| {
            let z = RationalQT::z();
            let q = |e: i64| qt(e, 0);
            let t = |e: i64| qt(0, e);
            let q2k = &q(2 * k) + &q(-2 * k);
            let t2 = &t(2) + &t(-2);
            let first = frac(&q(2 * k) - &q(-2 * k), &z * &(&q(3) - &q(-3)));
            let first_inner =
                &(&-&(&t2 * &(&(&q2k - &q(2)) - &q(-2))) + &(&(&q(4) + &q(-4)) * &q2k)) - &(&(&q(4) + &c(2)) + &q(-4));
            let second = frac(&t(-k) * &(&q(4 * k) - &q(-4 * k)), &q(2) - &q(-2));
            let second_inner = &-&(&t(1) * &(&q(k + 1) - &q(-k - 1))) + &(&t(-1) * &(&q(k - 1) - &q(-k + 1)));
            let bracket = &(&first * &first_inner) + &(&second * &second_inner);
            &(&t(-2 * k) * &frac(&t(1) - &t(-1), z)) * &bracket
        }),
        (1, 3, "2|1|1", false, |k| {
            let s1 = sb(&[1]);
            let diff = &sb(&[2]) - &sb(&[1, 1]);
            let sum = [
                &qt(10 * k, 0) * &sb(&[4]),
                &(&(&c(2) * &qt(2 * k, 0)) - &qt(6 * k, 0)) * &sb(&[3, 1]),
                &(&qt(-2 * k, 0) - &qt(2 * k, 0)) * &sb(&[2, 2]),
                &(&qt(-6 * k, 0) - &(&c(2) * &qt(-2 * k, 0))) * &sb(&[2, 1, 1]),
                -&(&qt(-10 * k, 0) * &sb(&[1, 1, 1, 1])),
                &(&(&c(3) - &(&c(2) * &qt(4 * k, 0))) * &qt(0, -2 * k)) * &sb(&[2]),
                &(&(&(&c(2) * &qt(-4 * k, 0)) - &c(3)) * &qt(0, -2 * k)) * &sb(&[1, 1]),
                &(&qt(-2 * k, 0) - &qt(2 * k, 0)) * &qt(0, -4 * k),
                -&(&(&(&(&(&qt(2 * k, 0) * &sb(&[2])) + &(&qt(-2 * k, 0) * &sb(&[1, 1]))) - &(&c(2) * &s1.pow(2)))
                    + &qt(0, -2 * k))
                    * &diff),
                &(&c(2)
                    * &[
                        -&(&qt(4 * k, 0) * &sb(&[3])),
                        &(&qt(2 * k, 0) - &qt(-2 * k, 0)) * &sb(&[2, 1]),
                        &qt(-4 * k, 0) * &sb(&[1, 1, 1]),
                        &(&(&qt(2 * k, 0) - &qt(-2 * k, 0)) * &qt(0, -2 * k)) * &s1,
                    ]
                    .into_iter()
                    .sum())
                    * &s1,
            ];
            sum.into_iter().sum()
        }),
    ]
}

/// z_μ⃗·g_μ⃗, or z_μ⃗·(g(q,t) - g(q,-t))/2.
fn zg(src: &InvariantSource, mu: &MultiPartition, antisym: bool) -> Result<RationalQT> {
    let g = reformulated_g(src, mu)?;
    let g = if antisym { (&g - &g.substitute(1, -1, 1)).scale(&Rational::new(1.into(), 2.into())) } else { g };
    Ok(g.scale(&Rational::from_integer(BigInt::from(mu.z_stat()))))
}

fn invariants() -> Vec<Check> {
    let mut out = Vec::new();
    for &(r, l, colors, terms) in data::W_EXPANSIONS {
        for k in k_values(r) {
            let name = format!("W_({colors}) of T({},{}) at k={k}", r * l, k * l);
            let got = TorusLinkSpec::new(r, k, l).and_then(|s| torus_invariant(&s, &multi(colors)?));
            out.push(Check::compare(name, got, Ok(eval_terms(terms, k as i64))));
        }
    }
    for (i, (r, l, mu, antisym, f)) in g_displays().into_iter().enumerate() {
        for k in k_values(r) {
            let tag = if antisym { " anti-symmetrized" } else { "" };
            let name = format!("z·g{tag} display {} for μ={mu} on T({},{}) at k={k}", i + 1, r * l, k * l);
            let got = torus(r, k, l).and_then(|s| zg(&s, &multi(mu)?, antisym));
            out.push(Check::compare(name, got, Ok(f(k as i64))));
        }
    }
    out
}

/// The printed simplification of z·g for colors (1),(1) on T(2,2k). It is even in t, which is
/// what makes every N vanish; the unsimplified sb form it comes from is not.
fn case_a_simplified(k: i64) -> RationalQT {
    let qq = &qt(1, 0) + &qt(-1, 0);
    let a = &frac(&qt(2 * k + 1, 0) + &qt(-2 * k - 1, 0), qq.clone()) - &c(1);
    let b = &frac(&qt(2 * k - 1, 0) + &qt(-2 * k + 1, 0), qq) - &c(1);
    let d = frac(&qt(k, 0) - &qt(-k, 0), RationalQT::z());
    &(&(&(&a * &qt(0, 2)) + &(&b * &qt(0, -2))) - &d.pow(2)) + &qt(0, -2 * k)
}

/// Published values this implementation does not reproduce, matched by check-name prefix.
///
/// Colors (1),(1) on T(2,2k): the printed table is all zero, but the printed sb-level z·g
/// (reproduced exactly under "invariants") is not even in t, so anti-symmetrization leaves
/// nonzero N. At k = 1 the Hopf-link W_(1|1) gives z·g = x·z(t-t⁻¹) directly.
pub const KNOWN_DISCREPANCIES: &[&str] = &["N table μ=1|1 on ", "simplified z·g for μ=1|1 "];

pub fn is_known_discrepancy(check_name: &str) -> bool {
    KNOWN_DISCREPANCIES.iter().any(|p| check_name.starts_with(p))
}

fn render_n(m: &BTreeMap<(u32, i64), BigInt>) -> String {
    let v: Vec<String> = m.iter().map(|((g, b), n)| format!("[2g={g},β={b}]={n}")).collect();
    if v.is_empty() {
        "{}".into()
    } else {
        v.join(" ")
    }
}

fn n_tables() -> Vec<Check> {
    let mut out = Vec::new();
    for t in data::N_TABLES {
        let name = format!("N table μ={} on T({},{}) at k={}", t.mu, t.r * t.l, t.k * t.l, t.k);
        let mut want = BTreeMap::new();
        for &(g2, row) in t.rows {
            for (&beta, &n) in t.betas.iter().zip(row) {
                if n != 0 {
                    want.insert((g2, beta), BigInt::from(n));
                }
            }
        }
        let got = torus(t.r, t.k, t.l).and_then(|s| check_conjecture(&s, &multi(t.mu)?, true)).and_then(|rep| {
            rep.table
                .map(|tab| render_n(&tab.entries))
                .ok_or_else(|| rep.finding.unwrap_or(KlmovError::Invalid("no table".into())))
        });
        out.push(Check::compare(name, got, Ok(render_n(&want))));
    }
    for k in 1..=3 {
        let name = format!("simplified z·g for μ=1|1 on T(2,{})", 2 * k);
        let got = torus(1, k, 2).and_then(|s| zg(&s, &multi("1|1")?, false));
        out.push(Check::compare(name, got, Ok(case_a_simplified(k as i64))));
    }
    out
}

fn expansions() -> Vec<Check> {
    data::Z_EXPANSIONS
        .iter()
        .map(|&(r, k, l, mu, expansion)| {
            let name = format!("z-expansion for μ={mu} on T({},{})", r * l, k * l);
            let got = torus(r, k, l).and_then(|s| conjecture_lhs(&s, &multi(mu)?, false));
            Check::compare(name, got, parse_rational(expansion).and_then(|x| to_z_basis(&x)))
        })
        .collect()
}

fn hopf() -> Vec<Check> {
    let mut out = Vec::new();
    let src = match torus(1, 1, 2) {
        Ok(s) => s,
        Err(e) => return vec![Check::from_result("Hopf link", Err(e))],
    };
    let unknot = InvariantSource::Unlink(1);
    let x = x_value();
    let two = Rational::from_integer(2.into());
    let qq = || parse_rational("q+q^-1");
    out.push(Check::compare(
        "W_(1|1) = x((t-t⁻¹)/z + 1 + z(t-t⁻¹))",
        multi("1|1").and_then(|m| src.invariant(&m)).map(|w| (*w).clone()),
        parse_rational("(t-t^-1)/z+1+z(t-t^-1)").map(|v| &x * &v),
    ));
    out.push(Check::compare(
        "2Z_(1|2) = x/(q+q⁻¹)[(t²-t⁻²)/z + (q+q⁻¹) + (t²-t⁻²)(z³+4z)]",
        multi("1|2").and_then(|m| z_coefficient(&src, &m)).map(|z| z.scale(&two)),
        parse_rational("(t^2-t^-2)/z+(q+q^-1)+(t^2-t^-2)(z^3+4z)").and_then(|v| (&x * &v).div(&qq()?)),
    ));
    out.push(Check::compare(
        "2Z_(1)Z_(2) of the unknot = x(1 + (t²-t⁻²)/(q²-q⁻²))",
        (|| Ok(&*z_coefficient(&unknot, &multi("1")?)? * &*z_coefficient(&unknot, &multi("2")?)?))()
            .map(|v: RationalQT| v.scale(&two)),
        parse_rational("1+(t^2-t^-2)/(q^2-q^-2)").map(|v| &x * &v),
    ));
    out.push(Check::compare(
        "2F_(1|2) = (q+q⁻¹)(t²-t⁻²)[z+(t-t⁻¹)]",
        multi("1|2").and_then(|m| free_energy(&src, &m)).map(|f| f.scale(&two)),
        parse_rational("(q+q^-1)(t^2-t^-2)(z+(t-t^-1))"),
    ));
    out.push(Check::compare(
        "integrality display (t²-t⁻²)[(t-t⁻¹)+z]",
        multi("1|2").and_then(|m| conjecture_lhs(&src, &m, false)),
        parse_rational("(t^2-t^-2)((t-t^-1)+z)").and_then(|x| to_z_basis(&x)),
    ));
    out
}

fn named(prefix: &str, r: Result<Vec<(String, bool)>>) -> Vec<Check> {
    match r {
        Ok(v) => v.into_iter().map(|(n, ok)| Check::new(format!("{prefix}{n}"), ok)).collect(),
        Err(e) => vec![Check::from_result(prefix.trim(), Err(e))],
    }
}

fn rmatrix_checks() -> Vec<Check> {
    (1..=3).flat_map(|n| named(&format!("N={n}: "), rmatrix::bmw_relations(n))).collect()
}

fn bmw_checks() -> Vec<Check> {
    named("", bmw::relation_checks())
}

/// Every (link, μ⃗) whose free energy enters criteria 5 through 8.
fn computed_pairs() -> Result<BTreeSet<(InvariantSource, MultiPartition)>> {
    let mut set = BTreeSet::new();
    for &(r, l, colors, _) in data::W_EXPANSIONS {
        for k in k_values(r) {
            set.insert((torus(r, k, l)?, multi(colors)?));
        }
    }
    for (r, l, mu, _, _) in g_displays() {
        for k in k_values(r) {
            set.insert((torus(r, k, l)?, multi(mu)?));
        }
    }
    for t in data::N_TABLES {
        set.insert((torus(t.r, t.k, t.l)?, multi(t.mu)?));
    }
    for &(r, k, l, mu, _) in data::Z_EXPANSIONS {
        set.insert((torus(r, k, l)?, multi(mu)?));
    }
    set.insert((torus(1, 1, 2)?, multi("1|2")?));
    Ok(set)
}

/// All L-tuples of partitions with total size in 1..=max.
fn multipartitions(l: usize, max: usize) -> Result<Vec<MultiPartition>> {
    let mut acc: Vec<(usize, Vec<Partition>)> = vec![(0, Vec::new())];
    for _ in 0..l {
        let mut next = Vec::new();
        for (size, v) in &acc {
            for n in 0..=max - size {
                for p in partitions_of(n)? {
                    let mut w = v.clone();
                    w.push(p);
                    next.push((size + n, w));
                }
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().filter(|(s, _)| *s > 0).map(|(_, v)| MultiPartition::new(v)).collect())
}

fn degree() -> Vec<Check> {
    let mut pairs: Vec<(InvariantSource, MultiPartition)> = match computed_pairs() {
        Ok(s) => s.into_iter().collect(),
        Err(e) => return vec![Check::from_result("enumerate links", Err(e))],
    };
    for l in 1..=2u32 {
        match multipartitions(l as usize, 6) {
            Ok(v) => pairs.extend(v.into_iter().map(|m| (InvariantSource::Unlink(l), m))),
            Err(e) => return vec![Check::from_result("enumerate unlink colors", Err(e))],
        }
    }
    pairs
        .into_iter()
        .map(|(src, mu)| {
            let name = format!("ord F_({mu}) of {src} ≥ ℓ-2");
            match degree_check(&src, &mu) {
                Ok(rep) => Check {
                    name,
                    pass: rep.pass,
                    detail: (!rep.pass).then(|| format!("valuation {:?} below bound {}", rep.valuation, rep.bound)),
                },
                Err(e) => Check::from_result(name, Err(e)),
            }
        })
        .collect()
}

fn lickorish_millett() -> Vec<Check> {
    let specs = [(1, 1, 2), (1, 2, 2), (1, 3, 2), (1, 1, 3), (1, 2, 3)];
    specs
        .iter()
        .map(|&(r, k, l)| {
            let name = format!("bracket coefficients of T({},{})", r * l, k * l);
            match TorusLinkSpec::new(r, k, l).and_then(|s| lickorish_millett_mismatches(&s)) {
                Ok(m) if m.is_empty() => Check::new(name, true),
                Ok(m) => {
                    let d: Vec<String> =
                        m.iter().map(|x| format!("p_{}: got {}, expected {}", x.index, x.got, x.expected)).collect();
                    Check { name, pass: false, detail: Some(d.join("; ")) }
                }
                Err(e) => Check::from_result(name, Err(e)),
            }
        })
        .collect()
}

fn unknot() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for mu in partitions_of(n).unwrap_or_default() {
            out.push(Check::from_result(
                format!("pb_({mu}) evaluates to the unknot value"),
                unknot_identity_check(&mu),
            ));
        }
    }
    let knot = InvariantSource::Unlink(1);
    for n in 1..=6 {
        for mu in partitions_of(n).unwrap_or_default() {
            let m = MultiPartition::new(vec![mu.clone()]);
            let got = free_energy(&knot, &m);
            if mu.len() == 1 {
                out.push(Check::compare(
                    format!("F_({mu}) of the unknot = (1/n)(1+(tⁿ-t⁻ⁿ)/(qⁿ-q⁻ⁿ))"),
                    got,
                    Ok(unknot_free_energy(n as u32)),
                ));
            } else {
                out.push(Check::from_result(format!("F_({mu}) of the unknot vanishes"), got.map(|f| f.is_zero())));
            }
        }
        let m = MultiPartition::new(vec![Partition::row(n as u32)]);
        out.push(Check::from_result(
            format!("unknot μ=({n}) integral after anti-symmetrization"),
            check_conjecture(&knot, &m, true).map(|r| r.integral()),
        ));
    }
    match multipartitions(2, 4) {
        Ok(v) => {
            for mu in v.into_iter().filter(|m| m.support().len() == 2) {
                let f = free_energy(&InvariantSource::Unlink(2), &mu).map(|f| f.is_zero());
                out.push(Check::from_result(format!("F_({mu}) of the 2-component unlink vanishes"), f));
            }
        }
        Err(e) => out.push(Check::from_result("enumerate unlink colors", Err(e))),
    }
    out
}

/// Compositions of n into positive parts.
fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn lemma72() -> Vec<Check> {
    let zero = Rational::from_integer(0.into());
    (2..=7)
        .flat_map(compositions)
        .map(|d| {
            let s = lemma72_sum(&d);
            let pass = s == zero;
            Check { name: format!("d={d:?}"), pass, detail: (!pass).then(|| format!("sum = {s}")) }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::combinatorics::p;

    #[test]
    fn lin_parser() {
        let m = parse_lin("1/24[6pb(4)+pb(1,1,1,1)]-1/2[pb(2)+pb(1,1)]+3", "pb(").unwrap();
        assert_eq!(m[&p(&[4])], Rational::new(1.into(), 4.into()));
        assert_eq!(m[&p(&[1, 1])], Rational::new((-1).into(), 2.into()));
        assert_eq!(m[&Partition::empty()], int(3));
        assert_eq!(parse_lin("sb(2)-sb(2)", "sb(").unwrap().len(), 0);
        assert!(parse_lin("sb(2)sb(1)", "sb(").is_err());
    }

    #[test]
    fn lookup_by_key_or_number() {
        assert_eq!(lookup("characters"), Some(1));
        assert_eq!(lookup("12"), Some(12));
        assert_eq!(lookup("nothing"), None);
        assert!(run(99, 0).is_err());
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(multipartitions(2, 1).unwrap().len(), 2);
    }
}
