//! Turaev's Ř on V⊗V for the vector representation of U_q(so(2N+1)), and the
//! identities it must satisfy.
//!
//! The summand q^{ī-j̄} has a half-integer exponent whenever exactly one of i, j is
//! N+1, so matrix entries are Laurent polynomials in s = q^{1/2}. Every exponent
//! below is in units of s.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{LaurentQ, LaurentQT, RationalQT};
use crate::combinatorics::Partition;
use crate::config::{self, Bound};
use crate::error::{KlmovError, Result};
use crate::typeb::sb_closed_form;

/// Sparse square matrix over Q[s, s⁻¹].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    dim: usize,
    entries: BTreeMap<(usize, usize), LaurentQ>,
}

impl QMatrix {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| LaurentQ::one()).collect())
    }

    pub fn diagonal(d: Vec<LaurentQ>) -> Self {
        let mut m = Self::zero(d.len());
        for (i, x) in d.into_iter().enumerate() {
            m.add_entry(i, i, &x);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> LaurentQ {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(LaurentQ::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &LaurentQ)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn add_entry(&mut self, i: usize, j: usize, x: &LaurentQ) {
        assert!(i < self.dim && j < self.dim, "index out of range");
        if x.is_zero() {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert_with(LaurentQ::zero);
        *e = &*e + x;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut m = self.clone();
        for (&(i, j), x) in &o.entries {
            m.add_entry(i, j, x);
        }
        m
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&LaurentQ::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        let mut m = Self::zero(self.dim);
        for (&(i, j), x) in &self.entries {
            m.add_entry(i, j, &(x * c));
        }
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let mut rows: Vec<Vec<(usize, &LaurentQ)>> = vec![Vec::new(); o.dim];
        for (&(i, j), x) in &o.entries {
            rows[i].push((j, x));
        }
        let mut acc: HashMap<(usize, usize), LaurentQ> = HashMap::new();
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &rows[k] {
                let e = acc.entry((i, j)).or_insert_with(LaurentQ::zero);
                *e = &*e + &(a * b);
            }
        }
        Self { dim: self.dim, entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).collect() }
    }

    /// A ⊗ B with index (a, b) ↦ a·dim(B) + b.
    pub fn kron(&self, o: &Self) -> Self {
        let mut m = Self::zero(self.dim * o.dim);
        for (&(i, j), x) in &self.entries {
            for (&(k, l), y) in &o.entries {
                m.add_entry(i * o.dim + k, j * o.dim + l, &(x * y));
            }
        }
        m
    }

    pub fn trace(&self) -> LaurentQ {
        let mut t = LaurentQ::zero();
        for i in 0..self.dim {
            t = &t + &self.get(i, i);
        }
        t
    }

    /// Trace over the second factor of V⊗W where dim W = `inner`.
    pub fn partial_trace_second(&self, inner: usize) -> Self {
        assert_eq!(self.dim % inner, 0, "inner dimension must divide");
        let mut m = Self::zero(self.dim / inner);
        for (&(r, c), x) in &self.entries {
            if r % inner == c % inner {
                m.add_entry(r / inner, c / inner, x);
            }
        }
        m
    }

    /// Divides every entry exactly by `d`.
    pub fn div_exact(&self, d: &LaurentQ) -> Option<Self> {
        let mut m = Self::zero(self.dim);
        for (&(i, j), x) in &self.entries {
            m.add_entry(i, j, &x.div_exact(d)?);
        }
        Some(m)
    }

    /// Inverse by Gauss–Jordan over Q(s), block by block on the connected pieces
    /// of the sparsity pattern. None if singular or if the inverse is not Laurent.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nxt = p[y];
                p[y] = r;
                y = nxt;
            }
            r
        }
        for &(i, j) in self.entries.keys() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            blocks.entry(r).or_default().push(i);
        }
        let mut out = Self::zero(n);
        for idx in blocks.values() {
            let b = idx.len();
            let mut a: Vec<Vec<RationalQT>> = idx
                .iter()
                .map(|&i| {
                    let mut row: Vec<RationalQT> = idx.iter().map(|&j| RationalQT::from_q(self.get(i, j))).collect();
                    row.extend((0..b).map(|k| if idx[k] == i { RationalQT::one() } else { RationalQT::zero() }));
                    row
                })
                .collect();
            for col in 0..b {
                let piv = (col..b).find(|&r| !a[r][col].is_zero())?;
                a.swap(col, piv);
                let inv = a[col][col].inv().ok()?;
                a[col] = a[col].iter().map(|x| x * &inv).collect();
                for r in 0..b {
                    if r != col && !a[r][col].is_zero() {
                        let f = a[r][col].clone();
                        let pivot_row = a[col].clone();
                        for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                            *x = &*x - &(&f * p);
                        }
                    }
                }
            }
            for (r, &i) in idx.iter().enumerate() {
                for (c, &j) in idx.iter().enumerate() {
                    let poly = a[r][b + c].as_polynomial()?;
                    if !poly.is_q_only() {
                        return None;
                    }
                    out.add_entry(i, j, &poly.slice(0).cloned().unwrap_or_else(LaurentQ::zero));
                }
            }
        }
        Some(out)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} matrix over Q[s,s^-1], s^2 = q, {} nonzero entries", self.dim, self.dim, self.nnz())?;
        for (&(i, j), x) in &self.entries {
            writeln!(f, "  ({}, {}): {}", i + 1, j + 1, x.to_string().replace('q', "s"))?;
        }
        Ok(())
    }
}

/// s^e.
fn s(e: i64) -> LaurentQ {
    LaurentQ::q_pow(e)
}

/// q - q⁻¹ in units of s.
fn zq() -> LaurentQ {
    LaurentQ::binomial(2, -2)
}

/// 2ī for 1-based i.
fn bar2(i: usize, n: usize) -> i64 {
    let i2 = 2 * i as i64;
    match i {
        _ if i <= n => i2 + 1,
        _ if i == n + 1 => i2,
        _ => i2 - 1,
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(KlmovError::Invalid("N must be positive".into()));
    }
    config::check(Bound::RMatrix, n)
}

/// Ř on V⊗V, dim V = 2N+1.
pub fn build_rhat(n: usize) -> Result<QMatrix> {
    check_n(n)?;
    let d = 2 * n + 1;
    let mid = n + 1;
    let bar = |i: usize| 2 * n + 2 - i;
    let mut m = QMatrix::zero(d * d);
    // E_{a,b} ⊗ E_{c,d} sits at row (a,c), column (b,d); indices 1-based here
    let mut put = |a: usize, b: usize, c: usize, dd: usize, x: LaurentQ| {
        m.add_entry((a - 1) * d + (c - 1), (b - 1) * d + (dd - 1), &x);
    };
    for i in 1..=d {
        put(i, i, i, i, if i == mid { LaurentQ::one() } else { s(2) });
    }
    for j in 1..=d {
        for i in 1..=d {
            if i != j && i != bar(j) {
                put(j, i, i, j, LaurentQ::one());
            }
        }
    }
    for i in (1..=d).filter(|&i| i != mid) {
        put(bar(i), i, i, bar(i), s(-2));
    }
    for i in 1..=d {
        for j in i + 1..=d {
            put(i, i, j, j, zq());
            put(bar(j), i, j, bar(i), -&(&zq() * &s(bar2(i, n) - bar2(j, n))));
        }
    }
    Ok(m)
}

/// Diagonal enhancement K_{2ρ}.
pub fn build_k2rho(n: usize) -> Result<QMatrix> {
    check_n(n)?;
    let n2 = 2 * n as i64;
    let diag = (1..=2 * n + 1)
        .map(|i| {
            let i = i as i64;
            match i {
                _ if i <= n as i64 => s(2 * (2 * i - 1 - n2)),
                _ if i == n as i64 + 1 => LaurentQ::one(),
                _ => s(2 * (2 * i - 3 - n2)),
            }
        })
        .collect();
    Ok(QMatrix::diagonal(diag))
}

/// θ_V = tr₂((I⊗K_{2ρ})Ř).
pub fn ribbon_element(n: usize) -> Result<QMatrix> {
    let d = 2 * n + 1;
    let r = build_rhat(n)?;
    let k = QMatrix::identity(d).kron(&build_k2rho(n)?);
    Ok(k.mul(&r).partial_trace_second(d))
}

/// θ_V = q^{2N}·id.
pub fn ribbon_check(n: usize) -> Result<bool> {
    let d = 2 * n + 1;
    Ok(ribbon_element(n)? == QMatrix::identity(d).scale(&s(4 * n as i64)))
}

/// t = q^{2N} in units of s.
fn t_spec(n: usize) -> LaurentQ {
    s(4 * n as i64)
}

/// Specializes t = q^{2N} in a function of (q, t) and rewrites it in s.
pub fn specialize(x: &RationalQT, n: usize) -> RationalQT {
    let k = 2 * n as i64;
    let num = LaurentQT::from_terms(x.num().terms().into_iter().map(|(a, b, c)| (2 * (a + k * b), 0, c)));
    let den = x.den().substitute(2);
    RationalQT::new(num, &den)
}

/// x = 1 + (t - t⁻¹)/(q - q⁻¹) at t = q^{2N}, in units of s.
fn x_spec(n: usize) -> LaurentQ {
    let tt = &t_spec(n) - &s(-4 * n as i64);
    &LaurentQ::one() + &tt.div_exact(&zq()).expect("q - q⁻¹ divides t - t⁻¹ at t = q^{2N}")
}

/// g⁻¹ read off the cubic: g⁻¹ = -t(g² - σ₁g + σ₂).
pub fn inverse_from_cubic(g: &QMatrix, n: usize) -> QMatrix {
    let tinv = s(-4 * n as i64);
    let sigma1 = &(&tinv - &s(-2)) + &s(2);
    let sigma2 = &(&(&tinv * &s(2)) - &(&tinv * &s(-2))) - &LaurentQ::one();
    let id = QMatrix::identity(g.dim());
    let inner = g.mul(g).sub(&g.scale(&sigma1)).add(&id.scale(&sigma2));
    inner.scale(&-&t_spec(n))
}

/// Named results: braid relation, cubic, e² = xe, the two inverses, ribbon, tr K_{2ρ}.
pub fn bmw_relations(n: usize) -> Result<Vec<(String, bool)>> {
    let d = 2 * n + 1;
    let g = build_rhat(n)?;
    let id = QMatrix::identity(d * d);
    let mut out = Vec::new();

    let cubic = {
        let a = g.sub(&id.scale(&s(-4 * n as i64)));
        let b = g.add(&id.scale(&s(-2)));
        let c = g.sub(&id.scale(&s(2)));
        a.mul(&b).mul(&c)
    };
    out.push(("cubic (g - t⁻¹)(g + q⁻¹)(g - q) = 0".to_string(), cubic.nnz() == 0));

    let g_inv = inverse_from_cubic(&g, n);
    out.push(("g·g⁻¹ = 1 with g⁻¹ from the cubic".into(), g.mul(&g_inv) == id));
    let direct = g.inverse();
    out.push(("cubic inverse = Gauss-Jordan inverse".into(), direct.as_ref() == Some(&g_inv)));

    let e = g.sub(&g_inv).div_exact(&zq()).map(|m| id.sub(&m));
    let e_ok = match &e {
        Some(e) => e.mul(e) == e.scale(&x_spec(n)),
        None => false,
    };
    out.push(("e² = x·e".into(), e_ok));
    if let Some(e) = &e {
        out.push(("g·e = t⁻¹·e".into(), g.mul(e) == e.scale(&s(-4 * n as i64))));
    }

    let one = QMatrix::identity(d);
    let g1 = g.kron(&one);
    let g2 = one.kron(&g);
    out.push(("braid relation on V⊗V⊗V".into(), g1.mul(&g2).mul(&g1) == g2.mul(&g1).mul(&g2)));

    out.push(("θ_V = q^{2N}".into(), ribbon_check(n)?));

    let sb1 = specialize(&sb_closed_form(&Partition::row(1)), n);
    let tr = RationalQT::from_q(build_k2rho(n)?.trace());
    out.push(("tr K_{2ρ} = sb_(1) at t = q^{2N}".into(), tr == sb1));
    Ok(out)
}

pub fn bmw_relations_check(n: usize) -> Result<bool> {
    Ok(bmw_relations(n)?.iter().all(|(_, ok)| *ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summands_n1() {
        let r = build_rhat(1).unwrap();
        // E11⊗E11 and E22⊗E22
        assert_eq!(r.get(0, 0), LaurentQ::q_pow(2));
        assert_eq!(r.get(4, 4), LaurentQ::one());
        assert_eq!(r.dim(), 9);
    }

    #[test]
    fn enhancement() {
        let k = build_k2rho(1).unwrap();
        assert_eq!(k, QMatrix::diagonal(vec![s(-2), LaurentQ::one(), s(2)]));
        let k = build_k2rho(2).unwrap();
        assert_eq!(k, QMatrix::diagonal(vec![s(-6), s(-2), LaurentQ::one(), s(2), s(6)]));
        assert_eq!(build_k2rho(1).unwrap().trace(), LaurentQ::from_int_terms(&[(-2, 1), (0, 1), (2, 1)]));
        assert!(build_k2rho(5).is_err());
    }

    #[test]
    fn ribbon() {
        for n in 1..=3 {
            assert!(ribbon_check(n).unwrap(), "N={n}");
        }
    }

    #[test]
    fn relations() {
        for n in 1..=2 {
            for (name, ok) in bmw_relations(n).unwrap() {
                assert!(ok, "N={n}: {name}");
            }
        }
    }

    #[test]
    fn inverse_of_small_matrix() {
        let m = QMatrix::diagonal(vec![s(2), s(-3)]);
        assert_eq!(m.inverse().unwrap(), QMatrix::diagonal(vec![s(-2), s(3)]));
        let sing = QMatrix::diagonal(vec![LaurentQ::one(), LaurentQ::zero()]);
        assert!(sing.inverse().is_none());
        let notlaurent = QMatrix::diagonal(vec![&LaurentQ::one() + &s(1)]);
        assert!(notlaurent.inverse().is_none());
    }
}
