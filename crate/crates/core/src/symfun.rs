//! Partitions, Schur polynomials, symmetric-group characters, Schur
//! functor dimensions, Gaussian binomials and Betti numbers of
//! Grassmannians and flag manifolds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::chars::{self, CharError};
use crate::linalg::{determinant, fmt_rational, q, Q};
use crate::poly::Poly;
use crate::rootsys::{RootSystem, Weight};

pub const MAX_FROBENIUS_N: usize = 12;
pub const MAX_CAUCHY_DEGREE: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymFunError {
    #[error("not a partition: {0}")]
    BadPartition(String),
    #[error("partition of {lambda} paired with a cycle type of {cycle}")]
    SizeMismatch { lambda: usize, cycle: usize },
    #[error("parameters too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Char(#[from] CharError),
}

impl SymFunError {
    pub fn is_resource_cap(&self) -> bool {
        match self {
            SymFunError::TooLarge(_) => true,
            SymFunError::Char(e) => e.is_resource_cap(),
            _ => false,
        }
    }
}

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, SymFunError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(SymFunError::BadPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.part(0);
        Partition((0..n).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Boxes `(row, column)`, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Sum of box contents `column - row`.
    pub fn content_by_boxes(&self) -> i64 {
        self.boxes().map(|(i, j)| box_content(i, j)).sum()
    }

    /// `sum lambda_i (lambda_i - 2i + 1) / 2`.
    pub fn content_by_formula(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let (l, i) = (l as i64, i as i64 + 1);
                l * (l - 2 * i + 1) / 2
            })
            .sum()
    }

    pub fn content(&self) -> i64 {
        let c = self.content_by_boxes();
        debug_assert_eq!(c, self.content_by_formula());
        c
    }

    /// `sl_n` dominant weight `(lambda_i - lambda_{i+1})`, if at most `n` parts.
    pub fn to_weight(&self, n: usize) -> Option<Weight> {
        (self.len() <= n && n >= 2).then(|| Weight((0..n - 1).map(|i| (self.part(i) - self.part(i + 1)) as i64).collect()))
    }

    pub fn contains(&self, o: &Partition) -> bool {
        (0..o.len()).all(|i| self.part(i) >= o.part(i))
    }

    /// Multiplicities `m_i` of each part size `i >= 1`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Order of the centralizer of a permutation of this cycle type.
    pub fn centralizer_order(&self) -> BigUint {
        let m = self.multiplicities();
        let mut z = BigUint::one();
        for (i, &k) in m.iter().enumerate().skip(1) {
            for t in 1..=k {
                z *= BigUint::from(i) * BigUint::from(t);
            }
        }
        z
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Content of the box in row `i`, column `j`.
pub fn box_content(i: usize, j: usize) -> i64 {
    j as i64 - i as i64
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = SymFunError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SymFunError::BadPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Multivariate polynomial with exponent-vector keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

#[derive(Serialize)]
struct PolyTerm {
    exponents: Vec<u32>,
    coeff: String,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], Q::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Q) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Q::one())
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let x = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *x += c;
        if x.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, o.nvars);
        let mut s = self.clone();
        for (e, c) in &o.terms {
            s.add_term(e.clone(), c.clone());
        }
        s
    }

    pub fn scale(&self, c: &Q) -> SparsePoly {
        let mut s = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            s.add_term(e.clone(), x * c);
        }
        s
    }

    pub fn mul(&self, o: &SparsePoly) -> SparsePoly {
        self.mul_truncated(o, None)
    }

    /// Product dropping terms whose exponent in variable `var` exceeds `max`.
    pub fn mul_truncated(&self, o: &SparsePoly, cap: Option<(usize, u32)>) -> SparsePoly {
        assert_eq!(self.nvars, o.nvars);
        let mut acc: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                if let Some((v, m)) = cap {
                    if e[v] > m {
                        continue;
                    }
                }
                *acc.entry(e).or_insert_with(Q::zero) += x * y;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SparsePoly {
            nvars: self.nvars,
            terms: acc,
        }
    }

    pub fn eval(&self, pt: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(pt)
                    .fold(c.clone(), |acc, (&k, x)| acc * num_traits::pow(x.clone(), k as usize))
            })
            .sum()
    }

    /// Places the variables at positions `offset..offset+nvars` of `total`.
    pub fn embed(&self, offset: usize, total: usize) -> SparsePoly {
        let mut s = Self::zero(total);
        for (e, c) in &self.terms {
            let mut f = vec![0; total];
            f[offset..offset + self.nvars].copy_from_slice(e);
            s.add_term(f, c.clone());
        }
        s
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.coeff(&f) == *c
            })
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let v: Vec<PolyTerm> = self
            .terms
            .iter()
            .map(|(e, c)| PolyTerm {
                exponents: e.clone(),
                coeff: fmt_rational(c),
            })
            .collect();
        serde_json::to_value(v).expect("serializable")
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c < &Q::zero();
            let a = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            match (a.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{}", fmt_rational(&a))?,
                (true, false) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{}*{}", fmt_rational(&a), mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Complete homogeneous symmetric polynomial `h_m` in `n` variables.
pub fn complete_symmetric(m: usize, n: usize) -> SparsePoly {
    let mut p = SparsePoly::zero(n);
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, p: &mut SparsePoly) {
        if cur.len() == n - 1 {
            cur.push(left);
            p.add_term(cur.clone(), Q::one());
            cur.pop();
            return;
        }
        for k in 0..=left {
            cur.push(k);
            go(n, left - k, cur, p);
            cur.pop();
        }
    }
    if n > 0 {
        go(n, m as u32, &mut Vec::new(), &mut p);
    }
    p
}

/// Elementary symmetric polynomial `e_m` in `n` variables.
pub fn elementary_symmetric(m: usize, n: usize) -> SparsePoly {
    let mut p = SparsePoly::zero(n);
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == m {
            p.add_term((0..n).map(|i| (mask >> i & 1) as u32).collect(), Q::one());
        }
    }
    p
}

/// Schur polynomial from the character of the matching `sl_n` module.
pub fn schur_poly(l: &Partition, n: usize) -> Result<SparsePoly, SymFunError> {
    if l.len() > n {
        return Ok(SparsePoly::zero(n));
    }
    if n == 1 {
        return Ok(SparsePoly::monomial(vec![l.size() as u32], Q::one()));
    }
    let rs = RootSystem::from_label(&format!("A{}", n - 1)).map_err(CharError::from)?;
    let w = l.to_weight(n).expect("at most n parts");
    let ch = chars::character(&rs, &w, chars::DEFAULT_MAX_DIM)?;
    let total = l.size() as i64;
    let mut p = SparsePoly::zero(n);
    for (mu, m) in ch.terms() {
        // exponents e with e_i - e_{i+1} = mu_i and sum e = |lambda|
        let weighted: i64 = mu.0.iter().enumerate().map(|(j, x)| (j as i64 + 1) * x).sum();
        let last = (total - weighted) / n as i64;
        debug_assert_eq!((total - weighted) % n as i64, 0);
        let mut e = vec![0u32; n];
        let mut acc = last;
        e[n - 1] = last as u32;
        for i in (0..n - 1).rev() {
            acc += mu.0[i];
            e[i] = acc as u32;
        }
        p.add_term(e, q(*m as i64));
    }
    Ok(p)
}

/// Bialternant `det(x_i^{lambda_j + n - j}) / det(x_i^{n - j})` at distinct points.
pub fn schur_bialternant(l: &Partition, pts: &[Q]) -> Q {
    let n = pts.len();
    if l.len() > n {
        return Q::zero();
    }
    let alt = |shift: &dyn Fn(usize) -> usize| -> Q {
        let m: Vec<Vec<Q>> = pts
            .iter()
            .map(|x| (0..n).map(|j| num_traits::pow(x.clone(), shift(j))).collect())
            .collect();
        determinant(&m)
    };
    alt(&|j| l.part(j) + n - 1 - j) / alt(&|j| n - 1 - j)
}

/// `dim S^lambda C^N` via the Weyl dimension formula.
pub fn schur_dim(l: &Partition, n: usize) -> Result<BigUint, SymFunError> {
    if l.len() > n {
        return Ok(BigUint::zero());
    }
    if n == 1 {
        return Ok(BigUint::one());
    }
    let rs = RootSystem::from_label(&format!("A{}", n - 1)).map_err(CharError::from)?;
    Ok(chars::dimension(&rs, &l.to_weight(n).expect("at most n parts"))?)
}

/// `P_lambda(N)`:
/// `prod_{i<j<=k} (l_i - l_j + j - i)/(j - i) * prod_i prod_{t=1}^{l_i} (N + t - i)/(k + t - i)`.
pub fn schur_dim_poly(l: &Partition) -> Poly {
    let k = l.len();
    let mut c = Q::one();
    for i in 0..k {
        for j in i + 1..k {
            c *= q((l.part(i) - l.part(j) + j - i) as i64) / q((j - i) as i64);
        }
    }
    let mut p = Poly::constant(c);
    for i in 1..=k {
        for t in 1..=l.part(i - 1) {
            let shift = t as i64 - i as i64;
            p = &p * &Poly::new(vec![q(shift) / q(k as i64 + shift), q(1) / q(k as i64 + shift)]);
        }
    }
    p
}

/// Narayana number `(1/n) C(n,k) C(n,k-1)`.
pub fn narayana(n: u64, k: u64) -> BigInt {
    if n == 0 || k == 0 || k > n {
        return BigInt::zero();
    }
    let b = |a: u64, b: u64| -> BigInt {
        (0..b).fold(BigInt::one(), |acc, i| acc * BigInt::from(a - i) / BigInt::from(i + 1))
    };
    b(n, k) * b(n, k - 1) / BigInt::from(n)
}

/// `chi_lambda` at cycle type `mu`: the coefficient of `x^{lambda+delta}` in
/// `prod_{i<j}(x_i - x_j) prod_i p_{mu_i}(x)`, in `len(lambda)` variables.
pub fn frobenius_character(l: &Partition, mu: &Partition) -> Result<BigInt, SymFunError> {
    if l.size() != mu.size() {
        return Err(SymFunError::SizeMismatch {
            lambda: l.size(),
            cycle: mu.size(),
        });
    }
    if l.size() > MAX_FROBENIUS_N {
        return Err(SymFunError::TooLarge(format!("N = {} exceeds {MAX_FROBENIUS_N}", l.size())));
    }
    let k = l.len().max(1);
    Ok(frobenius_in(l, &power_product(mu, k), k))
}

fn power_product(mu: &Partition, k: usize) -> SparsePoly {
    let mut p = SparsePoly::one(k);
    for &m in mu.parts() {
        let mut pm = SparsePoly::zero(k);
        for i in 0..k {
            let mut e = vec![0; k];
            e[i] = m as u32;
            pm.add_term(e, Q::one());
        }
        p = p.mul(&pm);
    }
    p
}

fn frobenius_in(l: &Partition, p: &SparsePoly, k: usize) -> BigInt {
    // sum over permutations s of sgn(s) [x^{lambda + delta - s(delta)}] p
    let target: Vec<i64> = (0..k).map(|i| (l.part(i) + k - 1 - i) as i64).collect();
    let mut total = Q::zero();
    for (perm, sgn) in permutations(k) {
        let e: Option<Vec<u32>> = (0..k)
            .map(|i| {
                let v = target[i] - (k - 1 - perm[i]) as i64;
                (v >= 0).then_some(v as u32)
            })
            .collect();
        if let Some(e) = e {
            total += p.coeff(&e) * q(sgn);
        }
    }
    debug_assert!(total.is_integer());
    total.to_integer()
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if cur.len() == k {
            let inv = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Character table of `S_N`: rows `lambda`, columns cycle types, both in
/// reverse lexicographic order.
pub fn character_table(n: usize) -> Result<(Vec<Partition>, Vec<Vec<BigInt>>), SymFunError> {
    let ps = partitions(n);
    let rows = ps
        .iter()
        .map(|l| ps.iter().map(|mu| frobenius_character(l, mu)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok((ps, rows))
}

/// Eigenvalue of the sum of all transpositions on the irreducible `pi_lambda`,
/// from the character: `C(N,2) chi(transposition) / chi(id)`.
pub fn jucys_murphy_eigenvalue(l: &Partition) -> Result<i64, SymFunError> {
    let n = l.size();
    if n < 2 {
        return Ok(0);
    }
    let id = Partition(vec![1; n]);
    let mut t = vec![2];
    t.extend(std::iter::repeat_n(1, n - 2));
    let tr = Partition(t);
    let d = frobenius_character(l, &id)?;
    let c = frobenius_character(l, &tr)?;
    let num = c * BigInt::from(n * (n - 1) / 2);
    debug_assert!((&num % &d).is_zero());
    Ok((num / d).to_i64().expect("small eigenvalue"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriKind {
    /// `V (x) S^lambda V`: one addable box.
    Box,
    /// `wedge^m V (x) S^lambda V`: `m` boxes in distinct rows.
    Rows(usize),
}

/// Partitions obtained from `lambda` by the Pieri rule, sorted in reverse
/// lexicographic order. With `max_parts = Some(n)` the rule is that of
/// `GL_n`, where partitions with more than `n` parts vanish.
pub fn pieri(l: &Partition, kind: PieriKind, max_parts: Option<usize>) -> Vec<Partition> {
    let m = match kind {
        PieriKind::Box => 1,
        PieriKind::Rows(m) => m,
    };
    let rows = l.len() + m;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << rows) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let parts: Vec<usize> = (0..rows).map(|i| l.part(i) + (mask >> i & 1) as usize).collect();
        if let Ok(p) = Partition::new(parts) {
            if max_parts.is_none_or(|n| p.len() <= n) {
                out.push(p);
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// `binom(n, k)_q` by counting partitions in a `(n-k) x k` box:
/// `G(a, b) = G(a, b-1) + q^b G(a-1, b)`.
pub fn gaussian_binomial(n: usize, k: usize) -> Poly {
    if k > n {
        return Poly::zero();
    }
    let a = n - k;
    let mut g = vec![vec![Poly::one(); k + 1]; a + 1];
    for i in 1..=a {
        for j in 1..=k {
            g[i][j] = &g[i][j - 1] + &(&Poly::monomial(Q::one(), j) * &g[i - 1][j]);
        }
    }
    g[a][k].clone()
}

/// `binom(n, k)_q = [n]_q! / ([k]_q! [n-k]_q!)` by exact division.
pub fn gaussian_binomial_ratio(n: usize, k: usize) -> Poly {
    if k > n {
        return Poly::zero();
    }
    q_factorial(n)
        .div_exact(&(&q_factorial(k) * &q_factorial(n - k)))
        .expect("Gaussian binomials are polynomials")
}

pub fn q_factorial(n: usize) -> Poly {
    (1..=n).fold(Poly::one(), |acc, i| &acc * &Poly::q_integer(i))
}

pub fn gaussian_multinomial(parts: &[usize]) -> Poly {
    let n = parts.iter().sum();
    let den = parts.iter().fold(Poly::one(), |acc, &k| &acc * &q_factorial(k));
    q_factorial(n).div_exact(&den).expect("Gaussian multinomials are polynomials")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Space {
    /// `m`-planes in `C^{m+n}`.
    Grassmannian(usize, usize),
    /// Complete flags in `C^n`.
    Flag(usize),
    /// Flags with successive quotients of dimensions `parts`.
    PartialFlag(Vec<usize>),
}

/// Betti numbers `b_0, b_1, ..., b_{2d}`; odd ones vanish.
pub fn betti(space: &Space) -> Vec<BigInt> {
    let p = match space {
        Space::Grassmannian(m, n) => gaussian_binomial(m + n, *m),
        Space::Flag(n) => q_factorial(*n),
        Space::PartialFlag(parts) => gaussian_multinomial(parts),
    };
    let coeffs = p.int_coeffs().expect("integral");
    let mut out = Vec::with_capacity(2 * coeffs.len());
    for (i, c) in coeffs.into_iter().enumerate() {
        if i > 0 {
            out.push(BigInt::zero());
        }
        out.push(c);
    }
    out
}

/// Checks `sum_lambda s_lambda(x) s_lambda(y) z^{|lambda|} = prod 1/(1 - z x_i y_j)`
/// up to `z^D`.
pub fn cauchy_check(r: usize, s: usize, d: usize) -> Result<bool, SymFunError> {
    if d > MAX_CAUCHY_DEGREE || r + s > 8 {
        return Err(SymFunError::TooLarge(format!("r={r}, s={s}, D={d}")));
    }
    if r == 0 || s == 0 {
        return Err(SymFunError::BadPartition("need at least one variable on each side".into()));
    }
    let total = r + s + 1;
    let z = r + s;
    let mut lhs = SparsePoly::zero(total);
    for m in 0..=d {
        for l in partitions(m) {
            if l.len() > r.min(s) {
                continue;
            }
            let sx = schur_poly(&l, r)?.embed(0, total);
            let sy = schur_poly(&l, s)?.embed(r, total);
            let mut zm = vec![0; total];
            zm[z] = m as u32;
            lhs = lhs.add(&sx.mul(&sy).mul(&SparsePoly::monomial(zm, Q::one())));
        }
    }
    let mut rhs = SparsePoly::one(total);
    for i in 0..r {
        for j in 0..s {
            let mut geo = SparsePoly::zero(total);
            for k in 0..=d as u32 {
                let mut e = vec![0; total];
                e[i] = k;
                e[r + j] = k;
                e[z] = k;
                geo.add_term(e, Q::one());
            }
            rhs = rhs.mul_truncated(&geo, Some((z, d as u32)));
        }
    }
    Ok(lhs == rhs)
}
