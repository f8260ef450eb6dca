//! Truncated free associative series, the free Lie algebra inside it
//! (Lyndon basis, Witt dimensions, primitivity) and the
//! Baker-Campbell-Hausdorff series.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{fmt_rational, mat_mul, q, zero_matrix, QMatrix, Q};

pub type Word = Vec<u8>;

pub const DEFAULT_BCH_MAX_ORDER: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeLieError {
    #[error("series has constant term {found}, expected {expected}")]
    BadConstantTerm { expected: String, found: String },
    #[error("series is not primitive: offending term {witness}")]
    NotPrimitive { witness: String },
    #[error("order {order} exceeds the maximum {max}")]
    TooDeep { order: usize, max: usize },
    #[error("alphabet or truncation mismatch")]
    Mismatch,
    #[error("alphabet size and degree must be positive")]
    Empty,
}

impl FreeLieError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, FreeLieError::TooDeep { .. })
    }
}

/// Display name of letter `i` in an alphabet of size `n`.
pub fn letter_name(i: u8, n: usize) -> String {
    if n <= 3 {
        ["x", "y", "z"][i as usize].to_string()
    } else if n <= 26 {
        ((b'a' + i) as char).to_string()
    } else {
        format!("g{}", i + 1)
    }
}

pub fn word_name(w: &[u8], n: usize) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let sep = if n > 26 { "." } else { "" };
    w.iter()
        .map(|&c| letter_name(c, n))
        .collect::<Vec<_>>()
        .join(sep)
}

/// Element of the free associative algebra on `n` letters, truncated
/// above degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSeries {
    n: usize,
    order: usize,
    terms: BTreeMap<Word, Q>,
}

impl FreeSeries {
    pub fn zero(n: usize, order: usize) -> Self {
        FreeSeries {
            n,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, order: usize) -> Self {
        Self::scalar(n, order, Q::one())
    }

    pub fn scalar(n: usize, order: usize, c: Q) -> Self {
        Self::from_terms(n, order, [(Vec::new(), c)])
    }

    pub fn generator(n: usize, order: usize, i: u8) -> Self {
        Self::from_terms(n, order, [(vec![i], Q::one())])
    }

    /// Terms above the truncation order are dropped.
    pub fn from_terms<I: IntoIterator<Item = (Word, Q)>>(n: usize, order: usize, it: I) -> Self {
        let mut s = Self::zero(n, order);
        for (w, c) in it {
            assert!(w.iter().all(|&a| (a as usize) < n), "letter out of range");
            s.add_term(w, c);
        }
        s
    }

    fn add_term(&mut self, w: Word, c: Q) {
        if w.len() > self.order || c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Word, Q> {
        &self.terms
    }

    pub fn coeff(&self, w: &[u8]) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&[])
    }

    /// Degree-`m` part.
    pub fn homogeneous(&self, m: usize) -> FreeSeries {
        FreeSeries {
            n: self.n,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == m)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> FreeSeries {
        FreeSeries {
            n: self.n,
            order,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= order)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    fn compatible(&self, o: &FreeSeries) -> Result<(), FreeLieError> {
        if self.n != o.n || self.order != o.order {
            return Err(FreeLieError::Mismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &FreeSeries) -> Result<FreeSeries, FreeLieError> {
        self.compatible(o)?;
        let mut s = self.clone();
        for (w, c) in &o.terms {
            s.add_term(w.clone(), c.clone());
        }
        Ok(s)
    }

    pub fn sub(&self, o: &FreeSeries) -> Result<FreeSeries, FreeLieError> {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> FreeSeries {
        FreeSeries::from_terms(
            self.n,
            self.order,
            self.terms.iter().map(|(w, v)| (w.clone(), v * c)),
        )
    }

    pub fn mul(&self, o: &FreeSeries) -> Result<FreeSeries, FreeLieError> {
        self.compatible(o)?;
        let mut by_len: Vec<Vec<(&Word, &Q)>> = vec![Vec::new(); self.order + 1];
        for (w, c) in &o.terms {
            by_len[w.len()].push((w, c));
        }
        let mut acc: BTreeMap<Word, Q> = BTreeMap::new();
        for (u, a) in &self.terms {
            for bucket in by_len.iter().take(self.order + 1 - u.len()) {
                for (v, b) in bucket {
                    let mut w = u.clone();
                    w.extend_from_slice(v);
                    *acc.entry(w).or_insert_with(Q::zero) += a * *b;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(FreeSeries {
            n: self.n,
            order: self.order,
            terms: acc,
        })
    }

    pub fn commutator(&self, o: &FreeSeries) -> Result<FreeSeries, FreeLieError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    /// `sum_{k<=N} A^k / k!` for `A` without constant term.
    pub fn exp(&self) -> Result<FreeSeries, FreeLieError> {
        let c = self.constant_term();
        if !c.is_zero() {
            return Err(FreeLieError::BadConstantTerm {
                expected: "0".into(),
                found: fmt_rational(&c),
            });
        }
        let mut out = FreeSeries::one(self.n, self.order);
        let mut power = FreeSeries::one(self.n, self.order);
        for k in 1..=self.order {
            power = power.mul(self)?.scale(&Q::new(BigInt::one(), BigInt::from(k)));
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// `-sum_{k>=1} (1-A)^k / k` for `A` with constant term 1.
    pub fn log(&self) -> Result<FreeSeries, FreeLieError> {
        let c = self.constant_term();
        if !c.is_one() {
            return Err(FreeLieError::BadConstantTerm {
                expected: "1".into(),
                found: fmt_rational(&c),
            });
        }
        let b = FreeSeries::one(self.n, self.order).sub(self)?;
        let mut out = FreeSeries::zero(self.n, self.order);
        let mut power = FreeSeries::one(self.n, self.order);
        for k in 1..=self.order {
            power = power.mul(&b)?;
            if power.is_zero() {
                break;
            }
            out = out.sub(&power.scale(&Q::new(BigInt::one(), BigInt::from(k))))?;
        }
        Ok(out)
    }

    /// Substitutes matrices for the letters.
    pub fn evaluate(&self, mats: &[QMatrix]) -> QMatrix {
        assert_eq!(mats.len(), self.n, "one matrix per letter");
        let d = mats[0].len();
        let mut out = zero_matrix(d, d);
        for (w, c) in &self.terms {
            let mut m = crate::linalg::identity(d);
            for &a in w {
                m = mat_mul(&m, &mats[a as usize]);
            }
            for (r, row) in out.iter_mut().enumerate() {
                for (s, x) in row.iter_mut().enumerate() {
                    *x += c * &m[r][s];
                }
            }
        }
        out
    }
}

impl fmt::Display for FreeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ws: Vec<(&Word, &Q)> = self.terms.iter().collect();
        ws.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        write_sum(f, ws.into_iter().map(|(w, c)| (word_name(w, self.n), c)))
    }
}

fn write_sum<'a, I: Iterator<Item = (String, &'a Q)>>(f: &mut fmt::Formatter<'_>, it: I) -> fmt::Result {
    let mut first = true;
    for (name, c) in it {
        let neg = c.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let a = c.abs();
        if name == "1" {
            write!(f, "{}", fmt_rational(&a))?;
        } else if a.is_one() {
            write!(f, "{name}")?;
        } else {
            write!(f, "{} {name}", fmt_rational(&a))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Result of the primitivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    /// First nonzero term `u (x) v` of `Delta(s) - s(x)1 - 1(x)s`, ordered by
    /// bidegree then lexicographically.
    Witness { left: Word, right: Word, coeff: Q },
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Primitivity::Primitive)
    }
}

/// Tests `Delta(s) = s (x) 1 + 1 (x) s` where letters are primitive.
pub fn is_primitive(s: &FreeSeries) -> Primitivity {
    let mut delta: BTreeMap<((usize, usize), Word, Word), Q> = BTreeMap::new();
    for (w, c) in &s.terms {
        let m = w.len();
        if m == 0 {
            // 1 is group-like: Delta(1) - 1(x)1 - 1(x)1 = -1(x)1
            *delta
                .entry(((0, 0), Vec::new(), Vec::new()))
                .or_insert_with(Q::zero) -= c;
            continue;
        }
        // proper nonempty subsets only; the two extreme splits cancel
        for mask in 1u64..(1u64 << m) - 1 {
            let (mut u, mut v) = (Vec::new(), Vec::new());
            for (k, &a) in w.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    u.push(a);
                } else {
                    v.push(a);
                }
            }
            *delta
                .entry(((u.len(), v.len()), u, v))
                .or_insert_with(Q::zero) += c;
        }
    }
    match delta.into_iter().find(|(_, c)| !c.is_zero()) {
        None => Primitivity::Primitive,
        Some(((_, u, v), c)) => Primitivity::Witness {
            left: u,
            right: v,
            coeff: c,
        },
    }
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Lyndon words of length exactly `m` over `n` letters, in lexicographic
/// order (Duval's generation algorithm).
pub fn lyndon_words(n: usize, m: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || m == 0 {
        return out;
    }
    let n = n as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == m {
            out.push(w.clone());
        }
        let k = w.len();
        while w.len() < m {
            let c = w[w.len() - k];
            w.push(c);
        }
        while w.last() == Some(&(n - 1)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(c) => *c += 1,
        }
    }
    out
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> Option<(Word, Word)> {
    if w.len() < 2 {
        return None;
    }
    (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .map(|i| (w[..i].to_vec(), w[i..].to_vec()))
}

/// Bracketing of a Lyndon word by standard factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracket {
    Letter(u8),
    Pair(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn of_lyndon(w: &[u8]) -> Bracket {
        match standard_factorization(w) {
            None => Bracket::Letter(w[0]),
            Some((u, v)) => Bracket::Pair(Box::new(Bracket::of_lyndon(&u)), Box::new(Bracket::of_lyndon(&v))),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Bracket::Letter(_) => 1,
            Bracket::Pair(a, b) => a.degree() + b.degree(),
        }
    }

    /// Expansion `[a,b] = ab - ba` as a homogeneous polynomial.
    pub fn expand(&self) -> BTreeMap<Word, BigInt> {
        match self {
            Bracket::Letter(a) => BTreeMap::from([(vec![*a], BigInt::one())]),
            Bracket::Pair(a, b) => {
                let (ea, eb) = (a.expand(), b.expand());
                let mut out: BTreeMap<Word, BigInt> = BTreeMap::new();
                for (u, x) in &ea {
                    for (v, y) in &eb {
                        let mut uv = u.clone();
                        uv.extend_from_slice(v);
                        *out.entry(uv).or_insert_with(BigInt::zero) += x * y;
                        let mut vu = v.clone();
                        vu.extend_from_slice(u);
                        *out.entry(vu).or_insert_with(BigInt::zero) -= x * y;
                    }
                }
                out.retain(|_, c| !c.is_zero());
                out
            }
        }
    }

    pub fn render(&self, n: usize) -> String {
        match self {
            Bracket::Letter(a) => letter_name(*a, n),
            Bracket::Pair(a, b) => format!("[{},{}]", a.render(n), b.render(n)),
        }
    }
}

/// Lyndon basis of the degree-`m` part of the free Lie algebra.
pub fn lyndon_basis(n: usize, m: usize) -> Vec<(Word, Bracket)> {
    lyndon_words(n, m)
        .into_iter()
        .map(|w| {
            let b = Bracket::of_lyndon(&w);
            (w, b)
        })
        .collect()
}

/// `d_1..d_N` from `prod_m (1 - q^m)^{d_m} = 1 - nq`, solved degree by degree.
pub fn witt_dimensions(n: usize, up_to: usize) -> Vec<BigInt> {
    // running product, truncated at degree up_to
    let mut prod = vec![BigInt::zero(); up_to + 1];
    prod[0] = BigInt::one();
    let mut out = Vec::with_capacity(up_to);
    for m in 1..=up_to {
        let target = if m == 1 { -BigInt::from(n) } else { BigInt::zero() };
        // (1-q^m)^d contributes -d q^m at degree m
        let d = &prod[m] - target;
        // multiply prod by (1-q^m)^d = sum_k binom(d,k) (-q^m)^k
        let mut binom = BigInt::one();
        let mut next = prod.clone();
        let mut k = 1usize;
        while k * m <= up_to {
            binom = binom * (&d - BigInt::from(k - 1)) / BigInt::from(k);
            if binom.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
            for j in (k * m)..=up_to {
                next[j] += &sign * &binom * &prod[j - k * m];
            }
            k += 1;
        }
        prod = next;
        out.push(d);
    }
    out
}

/// Witt numbers by the Moebius formula `d_m = (1/m) sum_{k|m} mu(k) n^{m/k}`.
pub fn witt_moebius(n: usize, m: usize) -> BigInt {
    fn mobius(k: usize) -> i64 {
        let (mut k, mut p, mut s) = (k, 2, 1);
        while p * p <= k {
            if k % p == 0 {
                k /= p;
                if k % p == 0 {
                    return 0;
                }
                s = -s;
            }
            p += 1;
        }
        if k > 1 {
            s = -s;
        }
        s
    }
    let total: BigInt = (1..=m)
        .filter(|k| m % k == 0)
        .map(|k| BigInt::from(mobius(k)) * BigInt::from(n).pow((m / k) as u32))
        .sum();
    total / BigInt::from(m)
}

/// Rank of all left-normed brackets `[a_1,[a_2,[...,a_m]]]`.
pub fn lie_degree_rank(n: usize, m: usize) -> usize {
    let total = n.pow(m as u32);
    let rows = (0..total).map(|mut idx| {
        let mut letters = Vec::with_capacity(m);
        for _ in 0..m {
            letters.push((idx % n) as u8);
            idx /= n;
        }
        let mut b = Bracket::Letter(letters[m - 1]);
        for &a in letters[..m - 1].iter().rev() {
            b = Bracket::Pair(Box::new(Bracket::Letter(a)), Box::new(b));
        }
        let index = |w: &Word| w.iter().fold(0usize, |acc, &a| acc * n + a as usize);
        b.expand()
            .into_iter()
            .map(|(w, c)| (index(&w), Q::from_integer(c)))
            .collect::<Vec<_>>()
    });
    crate::linalg::sparse_rank(rows)
}

/// Element of the free Lie algebra in Lyndon coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    n: usize,
    coords: BTreeMap<Word, Q>,
}

#[derive(Serialize)]
pub struct LieTerm {
    pub degree: usize,
    pub bracket: String,
    pub word: String,
    pub coeff: String,
}

impl LieElement {
    pub fn zero(n: usize) -> Self {
        LieElement {
            n,
            coords: BTreeMap::new(),
        }
    }

    pub fn from_coords<I: IntoIterator<Item = (Word, Q)>>(n: usize, it: I) -> Self {
        let coords = it
            .into_iter()
            .filter(|(w, c)| {
                assert!(is_lyndon(w), "coordinates live on Lyndon words");
                !c.is_zero()
            })
            .collect();
        LieElement { n, coords }
    }

    pub fn coords(&self) -> &BTreeMap<Word, Q> {
        &self.coords
    }

    pub fn coeff(&self, w: &[u8]) -> Q {
        self.coords.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn homogeneous(&self, m: usize) -> LieElement {
        LieElement {
            n: self.n,
            coords: self
                .coords
                .iter()
                .filter(|(w, _)| w.len() == m)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> LieElement {
        LieElement::from_coords(self.n, self.coords.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    pub fn add(&self, o: &LieElement) -> LieElement {
        let mut coords = self.coords.clone();
        for (w, c) in &o.coords {
            let e = coords.entry(w.clone()).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                coords.remove(w);
            }
        }
        LieElement { n: self.n.max(o.n), coords }
    }

    pub fn expand(&self, order: usize) -> FreeSeries {
        let mut s = FreeSeries::zero(self.n, order);
        for (w, c) in &self.coords {
            for (u, k) in Bracket::of_lyndon(w).expand() {
                s.add_term(u, c * Q::from_integer(k));
            }
        }
        s
    }

    /// Terms ordered by degree, then Lyndon word.
    pub fn terms(&self) -> Vec<LieTerm> {
        let mut ws: Vec<(&Word, &Q)> = self.coords.iter().collect();
        ws.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        ws.into_iter()
            .map(|(w, c)| LieTerm {
                degree: w.len(),
                bracket: Bracket::of_lyndon(w).render(self.n),
                word: word_name(w, self.n),
                coeff: fmt_rational(c),
            })
            .collect()
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        let qs: Vec<Q> = terms
            .iter()
            .map(|t| crate::linalg::parse_rational(&t.coeff).expect("formatted rational"))
            .collect();
        write_sum(f, terms.iter().map(|t| t.bracket.clone()).zip(qs.iter()))
    }
}

/// Lyndon coordinates of a primitive series by triangular rewriting: the
/// expanded bracket of a Lyndon word `w` is `w` plus lexicographically
/// larger words.
pub fn lie_decompose(s: &FreeSeries) -> Result<LieElement, FreeLieError> {
    let mut rest = s.clone();
    let mut coords = BTreeMap::new();
    while let Some((w, c)) = rest.terms.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        if !is_lyndon(&w) {
            let witness = match is_primitive(s) {
                Primitivity::Witness { left, right, .. } => format!(
                    "{} (x) {}",
                    word_name(&left, s.n),
                    word_name(&right, s.n)
                ),
                Primitivity::Primitive => word_name(&w, s.n),
            };
            return Err(FreeLieError::NotPrimitive { witness });
        }
        for (u, k) in Bracket::of_lyndon(&w).expand() {
            rest.add_term(u, -(&c * Q::from_integer(k)));
        }
        coords.insert(w, c);
    }
    Ok(LieElement { n: s.n, coords })
}

/// `mu = log(exp x exp y)` truncated at `order`.
#[derive(Clone, Debug)]
pub struct Bch {
    pub order: usize,
    pub series: FreeSeries,
    pub lie: LieElement,
}

impl Bch {
    /// `mu_m` with `mu = sum mu_m / m!`.
    pub fn mu(&self, m: usize) -> LieElement {
        let f: BigInt = (1..=m).map(BigInt::from).product();
        self.lie.homogeneous(m).scale(&Q::from_integer(f))
    }
}

pub fn bch(order: usize, max_order: usize) -> Result<Bch, FreeLieError> {
    if order > max_order {
        return Err(FreeLieError::TooDeep {
            order,
            max: max_order,
        });
    }
    if order == 0 {
        return Err(FreeLieError::Empty);
    }
    let x = FreeSeries::generator(2, order, 0);
    let y = FreeSeries::generator(2, order, 1);
    let series = x.exp()?.mul(&y.exp()?)?.log()?;
    let lie = lie_decompose(&series)?;
    Ok(Bch { order, series, lie })
}

/// `exp` of a nilpotent matrix.
pub fn nilpotent_exp(a: &[Vec<Q>]) -> QMatrix {
    let d = a.len();
    let mut out = crate::linalg::identity(d);
    let mut p = crate::linalg::identity(d);
    for k in 1..=d {
        p = mat_mul(&p, a);
        let s = Q::new(BigInt::one(), BigInt::from(k));
        for (r, row) in out.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                p[r][c] *= &s;
                *x += &p[r][c];
            }
        }
    }
    out
}

/// `log` of a unipotent matrix.
pub fn unipotent_log(a: &[Vec<Q>]) -> QMatrix {
    let d = a.len();
    let b = crate::linalg::mat_sub(a, &crate::linalg::identity(d));
    let mut out = zero_matrix(d, d);
    let mut p = crate::linalg::identity(d);
    for k in 1..=d {
        p = mat_mul(&p, &b);
        let s = q(if k % 2 == 1 { 1 } else { -1 }) / q(k as i64);
        for (r, row) in out.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x += &p[r][c] * &s;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x(order: usize) -> FreeSeries {
        FreeSeries::generator(2, order, 0)
    }
    fn y(order: usize) -> FreeSeries {
        FreeSeries::generator(2, order, 1)
    }

    #[test]
    fn lyndon_words_small() {
        let names = |n, m| -> Vec<String> {
            lyndon_words(n, m).iter().map(|w| word_name(w, n)).collect()
        };
        assert_eq!(names(2, 3), vec!["xxy", "xyy"]);
        assert_eq!(names(2, 4), vec!["xxxy", "xxyy", "xyyy"]);
        assert_eq!(lyndon_words(3, 3).len(), 8);
        assert!(lyndon_words(1, 2).is_empty());
        assert_eq!(lyndon_words(1, 1), vec![vec![0]]);
        let b: Vec<String> = lyndon_basis(2, 3).iter().map(|(_, b)| b.render(2)).collect();
        assert_eq!(b, vec!["[x,[x,y]]", "[[x,y],y]"]);
    }

    #[test]
    fn witt_numbers_agree() {
        for n in 1..5 {
            let d = witt_dimensions(n, 9);
            for m in 1..=9 {
                assert_eq!(d[m - 1], witt_moebius(n, m), "n={n} m={m}");
                assert_eq!(d[m - 1], BigInt::from(lyndon_words(n, m).len()));
            }
        }
        assert_eq!(witt_dimensions(2, 2), vec![BigInt::from(2), BigInt::from(1)]);
        assert_eq!(witt_dimensions(3, 3)[2], BigInt::from(8));
        for n in 1..4 {
            for m in 1..6 {
                assert_eq!(
                    BigInt::from(lie_degree_rank(n, m)),
                    witt_moebius(n, m),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn exp_log_inverse() {
        let n = 4;
        let xs = x(n).add(&y(n).scale(&q(3))).unwrap();
        assert_eq!(xs.exp().unwrap().log().unwrap(), xs);
        let prod = x(n).exp().unwrap().mul(&x(n).scale(&q(-1)).exp().unwrap()).unwrap();
        assert_eq!(prod, FreeSeries::one(2, n));
        assert!(matches!(
            FreeSeries::one(2, 3).exp(),
            Err(FreeLieError::BadConstantTerm { .. })
        ));
        assert!(matches!(x(3).log(), Err(FreeLieError::BadConstantTerm { .. })));
    }

    #[test]
    fn primitivity() {
        let s = x(3).add(&y(3)).unwrap();
        assert!(is_primitive(&s).is_primitive());
        let xy = x(3).mul(&y(3)).unwrap();
        assert_eq!(
            is_primitive(&xy),
            Primitivity::Witness {
                left: vec![0],
                right: vec![1],
                coeff: q(1)
            }
        );
        assert!(is_primitive(&x(3).commutator(&y(3)).unwrap()).is_primitive());
        let mu = x(6).exp().unwrap().mul(&y(6).exp().unwrap()).unwrap().log().unwrap();
        assert!(is_primitive(&mu).is_primitive());
        assert!(!is_primitive(&FreeSeries::one(2, 3)).is_primitive());
    }

    #[test]
    fn bch_low_degrees() {
        let b = bch(4, DEFAULT_BCH_MAX_ORDER).unwrap();
        assert_eq!(b.lie.coeff(&[0]), q(1));
        assert_eq!(b.lie.coeff(&[1]), q(1));
        assert_eq!(b.lie.coeff(&[0, 1]), q_frac(1, 2));
        assert_eq!(b.lie.coeff(&[0, 0, 1]), q_frac(1, 12));
        assert_eq!(b.lie.coeff(&[0, 1, 1]), q_frac(1, 12));
        assert_eq!(b.mu(3).coeff(&[0, 0, 1]), q_frac(1, 2));
        // degree 4 is -1/24 [y,[x,[x,y]]]
        assert_eq!(b.lie.coeff(&[0, 0, 0, 1]), q(0));
        assert_eq!(b.lie.coeff(&[0, 0, 1, 1]), q_frac(1, 24));
        assert_eq!(b.lie.coeff(&[0, 1, 1, 1]), q(0));
        assert_eq!(
            b.lie.homogeneous(2).to_string(),
            "1/2 [x,y]"
        );
        assert_eq!(
            bch(11, DEFAULT_BCH_MAX_ORDER).unwrap_err(),
            FreeLieError::TooDeep { order: 11, max: 10 }
        );
    }

    #[test]
    fn bch_stability_and_symmetry() {
        let big = bch(7, DEFAULT_BCH_MAX_ORDER).unwrap();
        for n in 1..7 {
            let small = bch(n, DEFAULT_BCH_MAX_ORDER).unwrap();
            for m in 1..=n {
                assert_eq!(small.lie.homogeneous(m), big.lie.homogeneous(m));
            }
        }
        // mu(x,y) = -mu(-y,-x)
        for (w, c) in big.series.terms() {
            let sw: Word = w.iter().map(|a| 1 - a).collect();
            let sign = if w.len() % 2 == 0 { -1 } else { 1 };
            assert_eq!(big.series.coeff(&sw), c * q(sign), "{w:?}");
        }
        for m in 1..=7 {
            assert!(is_primitive(&big.series.homogeneous(m)).is_primitive());
        }
    }

    #[test]
    fn matrix_oracle() {
        let n = 5;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let b = bch(n, DEFAULT_BCH_MAX_ORDER).unwrap();
        for _ in 0..3 {
            let mut gen = || -> QMatrix {
                (0..=n)
                    .map(|r| (0..=n).map(|c| if c > r { q(rng.gen_range(-3..=3)) } else { q(0) }).collect())
                    .collect()
            };
            let (mx, my) = (gen(), gen());
            let want = unipotent_log(&mat_mul(&nilpotent_exp(&mx), &nilpotent_exp(&my)));
            assert_eq!(b.lie.expand(n).evaluate(&[mx, my]), want);
        }
    }

    #[test]
    fn decompose_errors() {
        let xy = x(3).mul(&y(3)).unwrap();
        match lie_decompose(&xy) {
            Err(FreeLieError::NotPrimitive { witness }) => assert_eq!(witness, "x (x) y"),
            other => panic!("{other:?}"),
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn lyndon_round_trip(n in 1usize..4, coeffs in proptest::collection::vec(-5i64..=5, 40)) {
                let mut basis = Vec::new();
                for m in 1..=4 {
                    basis.extend(lyndon_words(n, m));
                }
                let el = LieElement::from_coords(
                    n,
                    basis.iter().cloned().zip(coeffs.iter().map(|&c| q(c))),
                );
                let s = el.expand(4);
                prop_assert!(is_primitive(&s).is_primitive());
                prop_assert_eq!(lie_decompose(&s).unwrap(), el);
            }

            #[test]
            fn lyndon_words_are_lyndon(n in 1usize..4, m in 1usize..7) {
                let ws = lyndon_words(n, m);
                prop_assert!(ws.windows(2).all(|p| p[0] < p[1]));
                for w in &ws {
                    prop_assert!(is_lyndon(w));
                    prop_assert_eq!(w.len(), m);
                }
            }
        }
    }
}
