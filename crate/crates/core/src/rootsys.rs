//! Reduced root systems built from Cartan matrices.
//!
//! Conventions: `a_ij = <alpha_i^vee, alpha_j>`; roots live in simple-root
//! coordinates, weights in fundamental-weight coordinates. The symmetrized
//! form is `(alpha_i, alpha_j) = d_i a_ij` with `d` the smallest positive
//! integer symmetrizer, so `(alpha_i, alpha_i) = 2 d_i`.
//!
//! Vertex numbering for the built-in types:
//! * `B_n`: `alpha_n` short, `a_{n,n-1} = -2`; `C_n` is the transpose.
//! * `D_n`: `alpha_{n-1}` and `alpha_n` both attach to `alpha_{n-2}`.
//! * `E_n`: `alpha_1 - alpha_3 - alpha_4 - ... - alpha_n` with `alpha_2`
//!   attached to `alpha_4`.
//! * `F_4`: `alpha_1, alpha_2` short, `alpha_3, alpha_4` long, `a_23 = -2`.
//! * `G_2`: `alpha_1` long, `alpha_2` short, `a_21 = -3`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, q, Q, QMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(RootSysError::UnsupportedType(format!("{family}{rank}")))
        }
    }

    /// Dimension of the simple Lie algebra of this type.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => [78, 133, 248][n - 6],
            Family::F => 52,
            Family::G => 14,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootSysError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootSysError::BadLabel(s.to_string());
        let mut chars = s.chars();
        let fam = chars.next().and_then(Family::from_char).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(fam, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses labels such as `"A5"` or `"B3xG2"`.
pub fn parse_types(label: &str) -> Result<Vec<CartanType>, RootSysError> {
    label
        .split(['x', 'X', '*'])
        .map(str::parse)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotCartanReason {
    Empty,
    NotSquare,
    DiagonalNotTwo { vertex: usize },
    PositiveOffDiagonal { row: usize, col: usize },
    AsymmetricZero { row: usize, col: usize },
    NotSymmetrizable,
    Affine,
    Indefinite,
}

impl fmt::Display for NotCartanReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty matrix"),
            Self::NotSquare => write!(f, "matrix is not square"),
            Self::DiagonalNotTwo { vertex } => write!(f, "diagonal entry {vertex} is not 2"),
            Self::PositiveOffDiagonal { row, col } => {
                write!(f, "off-diagonal entry ({row},{col}) is positive")
            }
            Self::AsymmetricZero { row, col } => {
                write!(f, "entry ({row},{col}) is zero but its transpose is not")
            }
            Self::NotSymmetrizable => write!(f, "not symmetrizable"),
            Self::Affine => write!(f, "affine: symmetrized matrix is singular positive semidefinite"),
            Self::Indefinite => write!(f, "indefinite: symmetrized matrix is not positive semidefinite"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSysError {
    #[error("not a Cartan matrix: {0}")]
    NotCartan(NotCartanReason),
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("cannot parse type label `{0}`")]
    BadLabel(String),
    #[error("root system is reducible ({0} components)")]
    Reducible(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid Cartan matrix JSON: {0}")]
    InvalidJson(String),
}

/// A validated Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct CartanJson {
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates the axioms and positive definiteness.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, RootSysError> {
        check_axioms(&entries)?;
        let d = symmetrizer(&entries).ok_or(RootSysError::NotCartan(NotCartanReason::NotSymmetrizable))?;
        check_definite(&entries, &d)?;
        Ok(CartanMatrix { entries })
    }

    pub fn of_type(t: CartanType) -> Result<Self, RootSysError> {
        let t = CartanType::new(t.family, t.rank)?;
        Ok(CartanMatrix {
            entries: standard_entries(t),
        })
    }

    pub fn of_types(ts: &[CartanType]) -> Result<Self, RootSysError> {
        let blocks = ts
            .iter()
            .map(|&t| CartanMatrix::of_type(t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CartanMatrix::block_diagonal(&blocks))
    }

    pub fn block_diagonal(blocks: &[CartanMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rank()).sum();
        let mut e = vec![vec![0; n]; n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rank() {
                for j in 0..b.rank() {
                    e[off + i][off + j] = b.entries[i][j];
                }
            }
            off += b.rank();
        }
        CartanMatrix { entries: e }
    }

    pub fn from_json(text: &str) -> Result<Self, RootSysError> {
        let j: CartanJson =
            serde_json::from_str(text).map_err(|e| RootSysError::InvalidJson(e.to_string()))?;
        if j.entries.len() != j.rank {
            return Err(RootSysError::DimensionMismatch {
                expected: j.rank,
                got: j.entries.len(),
            });
        }
        CartanMatrix::new(j.entries)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CartanJson {
            rank: self.rank(),
            entries: self.entries.clone(),
        })
        .expect("serializable")
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Zero-based entry `a_ij`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.rank();
        CartanMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
                .collect(),
        }
    }

    pub fn symmetrizer(&self) -> Vec<i64> {
        symmetrizer(&self.entries).expect("validated")
    }

    pub fn determinant(&self) -> BigInt {
        linalg::int_determinant(&self.entries)
    }

    /// Connected components of the Dynkin diagram, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(&self.entries)
    }

    /// Vertex permutation `p` with `self[i][j] == other[p[i]][p[j]]`.
    pub fn find_isomorphism(&self, other: &CartanMatrix) -> Option<Vec<usize>> {
        let n = self.rank();
        if other.rank() != n {
            return None;
        }
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            a: &CartanMatrix,
            b: &CartanMatrix,
            k: usize,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let n = a.rank();
            if k == n {
                return true;
            }
            for c in 0..n {
                if used[c] {
                    continue;
                }
                let ok = (0..k).all(|i| {
                    a.entries[k][i] == b.entries[c][perm[i]] && a.entries[i][k] == b.entries[perm[i]][c]
                });
                if ok {
                    perm[k] = c;
                    used[c] = true;
                    if go(a, b, k + 1, perm, used) {
                        return true;
                    }
                    used[c] = false;
                }
            }
            false
        }
        go(self, other, 0, &mut perm, &mut used).then_some(perm)
    }

    /// All vertex permutations preserving the matrix.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut perm = vec![0; n];
        let mut used = vec![false; n];
        fn go(
            a: &CartanMatrix,
            k: usize,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let n = a.rank();
            if k == n {
                out.push(perm.clone());
                return;
            }
            for c in 0..n {
                if used[c] {
                    continue;
                }
                let ok = (0..k).all(|i| {
                    a.entries[k][i] == a.entries[c][perm[i]] && a.entries[i][k] == a.entries[perm[i]][c]
                }) && a.entries[k][k] == a.entries[c][c];
                if ok {
                    perm[k] = c;
                    used[c] = true;
                    go(a, k + 1, perm, used, out);
                    used[c] = false;
                }
            }
        }
        go(self, 0, &mut perm, &mut used, &mut out);
        out
    }
}

fn check_axioms(a: &[Vec<i64>]) -> Result<(), RootSysError> {
    let err = |r| Err(RootSysError::NotCartan(r));
    let n = a.len();
    if n == 0 {
        return err(NotCartanReason::Empty);
    }
    if a.iter().any(|r| r.len() != n) {
        return err(NotCartanReason::NotSquare);
    }
    for i in 0..n {
        if a[i][i] != 2 {
            return err(NotCartanReason::DiagonalNotTwo { vertex: i + 1 });
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                return err(NotCartanReason::PositiveOffDiagonal { row: i + 1, col: j + 1 });
            }
            if (a[i][j] == 0) != (a[j][i] == 0) {
                return err(NotCartanReason::AsymmetricZero { row: i + 1, col: j + 1 });
            }
        }
    }
    Ok(())
}

fn components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..n {
                if !seen[w] && a[v][w] != 0 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Smallest positive integer `d` with `d_i a_ij = d_j a_ji`.
fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for comp in components(a) {
        d[comp[0]] = Some(Q::one());
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let dj = &di * q(a[i][j]) / q(a[j][i]);
                match &d[j] {
                    Some(x) if *x != dj => return None,
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                }
            }
        }
        // scale component to smallest integers
        let l = comp
            .iter()
            .fold(BigInt::one(), |acc, &i| acc.lcm(d[i].as_ref().unwrap().denom()));
        let ints: Vec<BigInt> = comp
            .iter()
            .map(|&i| (d[i].clone().unwrap() * Q::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, v) in comp.iter().zip(ints) {
            d[i] = Some(Q::from_integer(v / &g));
        }
    }
    d.into_iter()
        .map(|x| x.and_then(|v| v.to_integer().to_i64()))
        .collect()
}

fn symmetrized(a: &[Vec<i64>], d: &[i64]) -> QMatrix {
    a.iter()
        .enumerate()
        .map(|(i, r)| r.iter().map(|&x| q(d[i] * x)).collect())
        .collect()
}

fn check_definite(a: &[Vec<i64>], d: &[i64]) -> Result<(), RootSysError> {
    for comp in components(a) {
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| a[i][j]).collect())
            .collect();
        let dc: Vec<i64> = comp.iter().map(|&i| d[i]).collect();
        let b = symmetrized(&sub, &dc);
        let minors = linalg::leading_minors(&b);
        if minors.iter().all(|m| m.is_positive()) {
            continue;
        }
        // A connected diagram whose proper subdiagrams are all finite type
        // and whose determinant vanishes is affine.
        let n = comp.len();
        let det = minors.last().unwrap();
        let proper_ok = (0..n).all(|skip| {
            let idx: Vec<usize> = (0..n).filter(|&k| k != skip).collect();
            let m: QMatrix = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| b[i][j].clone()).collect())
                .collect();
            m.is_empty() || linalg::leading_minors(&m).iter().all(|x| x.is_positive())
        });
        let reason = if det.is_zero() && proper_ok {
            NotCartanReason::Affine
        } else {
            NotCartanReason::Indefinite
        };
        return Err(RootSysError::NotCartan(reason));
    }
    Ok(())
}

/// Checks a matrix and returns the Dynkin types of its components.
pub fn validate_cartan(entries: &[Vec<i64>]) -> Result<Vec<CartanType>, RootSysError> {
    let c = CartanMatrix::new(entries.to_vec())?;
    let d = c.symmetrizer();
    Ok(c.components()
        .iter()
        .map(|comp| identify_component(&c, &d, comp))
        .collect())
}

fn identify_component(c: &CartanMatrix, d: &[i64], comp: &[usize]) -> CartanType {
    let n = comp.len();
    let a = |i: usize, j: usize| c.entries[comp[i]][comp[j]];
    let mut deg = vec![0usize; n];
    let mut max_mult = 0;
    let mut heavy = None;
    for i in 0..n {
        for j in 0..n {
            if i != j && a(i, j) != 0 {
                deg[i] += 1;
                let m = a(i, j) * a(j, i);
                if m > max_mult {
                    max_mult = m;
                    heavy = Some((i.min(j), i.max(j)));
                }
            }
        }
    }
    let t = |f, r| CartanType { family: f, rank: r };
    if max_mult == 3 {
        return t(Family::G, 2);
    }
    if max_mult == 2 {
        let (i, j) = heavy.unwrap();
        if n == 2 {
            let long0 = d[comp[0]] > d[comp[1]];
            return t(if long0 { Family::B } else { Family::C }, 2);
        }
        let end = if deg[i] == 1 { i } else if deg[j] == 1 { j } else { usize::MAX };
        if end == usize::MAX {
            return t(Family::F, 4);
        }
        let other = if end == i { j } else { i };
        let short_end = d[comp[end]] < d[comp[other]];
        return t(if short_end { Family::B } else { Family::C }, n);
    }
    let Some(branch) = (0..n).find(|&v| deg[v] == 3) else {
        return t(Family::A, n);
    };
    let mut legs: Vec<usize> = (0..n)
        .filter(|&w| w != branch && a(branch, w) != 0)
        .map(|start| {
            let (mut prev, mut cur, mut len) = (branch, start, 1);
            loop {
                let next = (0..n).find(|&w| w != prev && w != cur && a(cur, w) != 0);
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    legs.sort_unstable();
    match legs.as_slice() {
        [1, 1, _] => t(Family::D, n),
        _ => t(Family::E, n),
    }
}

fn standard_entries(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    match t.family {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[1][2] = -2,
        Family::G => a[1][0] = -3,
        _ => {}
    }
    a
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(r: usize) -> Self {
        Weight(vec![0; r])
    }

    pub fn fundamental(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        Weight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad weight `{s}`: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
    }
}

/// Either kind of lattice vector, for the pairing.
#[derive(Clone, Debug)]
pub enum LatticeVector {
    Root(Root),
    Weight(Weight),
}

/// A finite abelian group as a list of invariant factors greater than 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub invariants: Vec<u64>,
}

impl AbelianGroup {
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.invariants.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    types: Vec<CartanType>,
    d: Vec<i64>,
    positive: Vec<Root>,
    lookup: HashMap<Vec<i64>, usize>,
    cartan_inv: QMatrix,
}

impl PartialEq for RootSystem {
    fn eq(&self, o: &Self) -> bool {
        self.cartan == o.cartan && self.positive == o.positive && self.d == o.d
    }
}

impl RootSystem {
    pub fn build(t: CartanType) -> Result<Self, RootSysError> {
        Ok(Self::from_cartan(CartanMatrix::of_type(t)?))
    }

    /// Builds from a label such as `"E8"` or `"B3xG2"`.
    pub fn from_label(label: &str) -> Result<Self, RootSysError> {
        Ok(Self::from_cartan(CartanMatrix::of_types(&parse_types(label)?)?))
    }

    pub fn from_cartan(cartan: CartanMatrix) -> Self {
        let d = cartan.symmetrizer();
        let types = cartan
            .components()
            .iter()
            .map(|comp| identify_component(&cartan, &d, comp))
            .collect();
        let r = cartan.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..r {
                let c: i64 = (0..r).map(|j| cartan.get(i, j) * b[j]).sum();
                if c == 0 {
                    continue;
                }
                let mut nb = b.clone();
                nb[i] -= c;
                if seen.insert(nb.clone()) {
                    queue.push_back(nb);
                }
            }
        }
        let mut positive: Vec<Root> = seen
            .into_iter()
            .filter(|v| v.iter().all(|&x| x >= 0))
            .map(Root)
            .collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let lookup = positive
            .iter()
            .enumerate()
            .map(|(k, a)| (a.0.clone(), k))
            .collect();
        let cartan_inv =
            linalg::inverse(&linalg::int_to_q(cartan.entries())).expect("Cartan matrix invertible");
        RootSystem {
            cartan,
            types,
            d,
            positive,
            lookup,
            cartan_inv,
        }
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn types(&self) -> &[CartanType] {
        &self.types
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.types.iter().map(ToString::to_string).collect();
        parts.join("x")
    }

    pub fn is_irreducible(&self) -> bool {
        self.types.len() == 1
    }

    pub fn cartan_type(&self) -> Result<CartanType, RootSysError> {
        match self.types.as_slice() {
            [t] => Ok(*t),
            ts => Err(RootSysError::Reducible(ts.len())),
        }
    }

    fn require_irreducible(&self) -> Result<(), RootSysError> {
        self.cartan_type().map(|_| ())
    }

    /// Symmetrizer `d`: `(alpha_i, alpha_i) = 2 d_i`.
    pub fn d(&self) -> &[i64] {
        &self.d
    }

    /// Positive roots sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// All roots: positive ones followed by their negatives.
    pub fn roots(&self) -> Vec<Root> {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(Root::neg))
            .collect()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn dim(&self) -> usize {
        self.num_roots() + self.rank()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if v.iter().all(|&x| x >= 0) {
            self.lookup.contains_key(v)
        } else {
            let n: Vec<i64> = v.iter().map(|x| -x).collect();
            self.lookup.contains_key(&n)
        }
    }

    /// Index of a positive root in `positive_roots`.
    pub fn positive_index(&self, v: &[i64]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Root(v)
    }

    /// `(alpha, beta)` for roots in simple-root coordinates.
    pub fn root_pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += a[i] * self.d[i] * self.cartan.get(i, j) * b[j];
            }
        }
        s
    }

    /// `(lambda, alpha)` for a weight and a root.
    pub fn weight_root_pairing(&self, l: &[i64], a: &[i64]) -> i64 {
        l.iter()
            .zip(a)
            .zip(&self.d)
            .map(|((x, y), d)| x * y * d)
            .sum()
    }

    /// `<lambda, alpha^vee>` for a weight and a root.
    pub fn coroot_pairing(&self, l: &[i64], a: &[i64]) -> Q {
        let num = 2 * self.weight_root_pairing(l, a);
        let den = self.root_pairing(a, a);
        linalg::q_frac(num, den)
    }

    /// Converts root coordinates to weight coordinates.
    pub fn root_to_weight(&self, a: &[i64]) -> Weight {
        let r = self.rank();
        Weight(
            (0..r)
                .map(|i| (0..r).map(|j| self.cartan.get(i, j) * a[j]).sum())
                .collect(),
        )
    }

    /// Converts weight coordinates to (rational) root coordinates.
    pub fn weight_to_root(&self, l: &[i64]) -> Vec<Q> {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| &self.cartan_inv[i][j] * q(l[j])).sum())
            .collect()
    }

    /// Root coordinates of `lambda - mu` if it lies in the root lattice.
    pub fn root_lattice_coords(&self, l: &Weight) -> Option<Vec<i64>> {
        self.weight_to_root(&l.0)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten())
            .collect()
    }

    fn to_root_coords(&self, v: &LatticeVector) -> Vec<Q> {
        match v {
            LatticeVector::Root(a) => a.0.iter().map(|&x| q(x)).collect(),
            LatticeVector::Weight(w) => self.weight_to_root(&w.0),
        }
    }

    /// The symmetric form on the rational span of the roots.
    pub fn pairing(&self, x: &LatticeVector, y: &LatticeVector) -> Result<Q, RootSysError> {
        let r = self.rank();
        for v in [x, y] {
            let n = match v {
                LatticeVector::Root(a) => a.0.len(),
                LatticeVector::Weight(w) => w.0.len(),
            };
            if n != r {
                return Err(RootSysError::DimensionMismatch { expected: r, got: n });
            }
        }
        let a = self.to_root_coords(x);
        let b = self.to_root_coords(y);
        let mut s = Q::zero();
        for i in 0..r {
            for j in 0..r {
                if !a[i].is_zero() && !b[j].is_zero() {
                    s += &a[i] * &b[j] * q(self.d[i] * self.cartan.get(i, j));
                }
            }
        }
        Ok(s)
    }

    /// `(lambda, mu)` for two weights.
    pub fn weight_pairing(&self, l: &[i64], m: &[i64]) -> Q {
        let c = self.weight_to_root(m);
        l.iter()
            .zip(&c)
            .zip(&self.d)
            .map(|((x, y), d)| q(x * d) * y)
            .sum()
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `rho^vee` in the basis of simple coroots.
    pub fn rho_check(&self) -> Vec<Q> {
        let at = linalg::int_to_q(self.cartan.transpose().entries());
        let inv = linalg::inverse(&at).expect("invertible");
        inv.iter().map(|row| row.iter().sum()).collect()
    }

    /// `(2 rho^vee, lambda)`, an integer.
    pub fn two_rho_check_pairing(&self, l: &[i64]) -> Q {
        self.rho_check()
            .iter()
            .zip(l)
            .map(|(c, &x)| c * q(2 * x))
            .sum()
    }

    pub fn highest_root(&self) -> Result<(Root, i64), RootSysError> {
        self.require_irreducible()?;
        let t = self.positive.last().expect("nonempty").clone();
        let h = t.height();
        Ok((t, h))
    }

    /// Number of positive roots of each height `1..=max`.
    pub fn height_census(&self) -> Vec<usize> {
        let max = self.positive.last().map_or(0, Root::height) as usize;
        let mut c = vec![0; max];
        for a in &self.positive {
            c[a.height() as usize - 1] += 1;
        }
        c
    }

    pub fn exponents(&self) -> Result<Vec<i64>, RootSysError> {
        self.require_irreducible()?;
        let census = self.height_census();
        let mut out = Vec::new();
        for m in 0..census.len() {
            let next = census.get(m + 1).copied().unwrap_or(0);
            for _ in next..census[m] {
                out.push(m as i64 + 1);
            }
        }
        Ok(out)
    }

    /// `(h, h^vee)`.
    pub fn coxeter_numbers(&self) -> Result<(i64, i64), RootSysError> {
        let (theta, ht) = self.highest_root()?;
        let tr: i64 = theta.0.iter().zip(&self.d).map(|(n, d)| n * d).sum();
        let tt = self.root_pairing(&theta.0, &theta.0);
        Ok((ht + 1, 2 * tr / tt + 1))
    }

    /// The highest coroot, in the basis of simple coroots. This is the coroot
    /// of the highest short root, which differs from the coroot of `theta`
    /// in the non-simply-laced types.
    pub fn maximal_coroot(&self) -> Result<Root, RootSysError> {
        self.require_irreducible()?;
        Ok(self
            .positive
            .iter()
            .map(|b| self.coroot(&b.0))
            .max_by_key(Root::height)
            .expect("nonempty"))
    }

    /// `0` together with the fundamental weights that are minuscule.
    pub fn minuscule_weights(&self) -> Result<Vec<Weight>, RootSysError> {
        let m = self.maximal_coroot()?;
        let r = self.rank();
        let mut out = vec![Weight::zero(r)];
        out.extend((0..r).filter(|&i| m.0[i] == 1).map(|i| Weight::fundamental(r, i)));
        Ok(out)
    }

    /// True if `<w, beta^vee>` lies in `{-1,0,1}` for every root.
    pub fn is_minuscule(&self, w: &Weight) -> bool {
        self.positive
            .iter()
            .all(|b| self.coroot_pairing(&w.0, &b.0).abs() <= Q::one())
    }

    /// `P/Q` from the Smith normal form of the Cartan matrix.
    pub fn weight_lattice_quotient(&self) -> AbelianGroup {
        let mut inv: Vec<u64> = linalg::smith_diagonal(self.cartan.entries())
            .into_iter()
            .filter(|x| !x.is_one())
            .map(|x| x.to_u64().expect("small"))
            .collect();
        inv.sort_unstable();
        AbelianGroup { invariants: inv }
    }

    pub fn dual(&self) -> RootSystem {
        RootSystem::from_cartan(self.cartan.transpose())
    }

    /// The coroot of `beta` in the basis of simple coroots.
    pub fn coroot(&self, beta: &[i64]) -> Root {
        let db = self.root_pairing(beta, beta) / 2;
        Root(
            beta.iter()
                .zip(&self.d)
                .map(|(n, d)| n * d / db)
                .collect(),
        )
    }

    /// Ambient dimension formula sanity: `dim g = |R| + r`.
    pub fn dimension_of_algebra(&self) -> usize {
        self.dim()
    }
}

/// Elementary divisors helper exposed for tests.
pub fn elementary_divisors(m: &[Vec<i64>]) -> Vec<BigInt> {
    linalg::smith_diagonal(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_label(s).unwrap()
    }

    /// Ambient realization oracles: roots as vectors in Q^n scaled by 2.
    fn classical_ambient(t: CartanType) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let n = t.rank;
        let e = |i: usize, dim: usize| {
            let mut v = vec![0; dim];
            v[i] = 2;
            v
        };
        let add = |a: &[i64], b: &[i64], s: i64| a.iter().zip(b).map(|(x, y)| x + s * y).collect::<Vec<_>>();
        match t.family {
            Family::A => {
                let dim = n + 1;
                let simple = (0..n).map(|i| add(&e(i, dim), &e(i + 1, dim), -1)).collect();
                let mut roots = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            roots.push(add(&e(i, dim), &e(j, dim), -1));
                        }
                    }
                }
                (simple, roots)
            }
            Family::B | Family::C | Family::D => {
                let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| add(&e(i, n), &e(i + 1, n), -1)).collect();
                let last = match t.family {
                    Family::B => e(n - 1, n),
                    Family::C => e(n - 1, n).iter().map(|x| 2 * x).collect(),
                    _ => add(&e(n - 2, n), &e(n - 1, n), 1),
                };
                simple.push(last);
                let mut roots = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        for s1 in [1, -1] {
                            for s2 in [1, -1] {
                                let a: Vec<i64> = e(i, n).iter().map(|x| s1 * x).collect();
                                roots.push(add(&a, &e(j, n), s2));
                            }
                        }
                    }
                    for s in [1, -1] {
                        match t.family {
                            Family::B => roots.push(e(i, n).iter().map(|x| s * x).collect()),
                            Family::C => roots.push(e(i, n).iter().map(|x| 2 * s * x).collect()),
                            _ => {}
                        }
                    }
                }
                (simple, roots)
            }
            _ => unreachable!(),
        }
    }

    fn realize(rs: &RootSystem, simple: &[Vec<i64>]) -> HashSet<Vec<i64>> {
        rs.roots()
            .iter()
            .map(|a| {
                let dim = simple[0].len();
                (0..dim)
                    .map(|k| a.0.iter().zip(simple).map(|(n, s)| n * s[k]).sum())
                    .collect()
            })
            .collect()
    }

    fn gram_cartan(simple: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
        simple
            .iter()
            .map(|ai| simple.iter().map(|aj| 2 * dot(ai, aj) / dot(ai, ai)).collect())
            .collect()
    }

    #[test]
    fn classical_types_match_ambient_realizations() {
        for (f, range) in [
            (Family::A, 1..=6),
            (Family::B, 2..=6),
            (Family::C, 2..=6),
            (Family::D, 4..=6),
        ] {
            for n in range {
                let t = CartanType::new(f, n).unwrap();
                let (simple, roots) = classical_ambient(t);
                assert_eq!(
                    gram_cartan(&simple),
                    CartanMatrix::of_type(t).unwrap().entries().to_vec(),
                    "{t}"
                );
                let r = RootSystem::build(t).unwrap();
                let got = realize(&r, &simple);
                let want: HashSet<Vec<i64>> = roots.into_iter().collect();
                assert_eq!(got, want, "{t}");
            }
        }
    }

    #[test]
    fn exceptional_realizations() {
        // F4, doubled coordinates
        let f4_simple = vec![
            vec![1, -1, -1, -1],
            vec![0, 0, 0, 2],
            vec![0, 0, 2, -2],
            vec![0, 2, -2, 0],
        ];
        assert_eq!(gram_cartan(&f4_simple), CartanMatrix::of_type("F4".parse().unwrap()).unwrap().entries());
        let f4 = realize(&rs("F4"), &f4_simple);
        assert_eq!(f4.len(), 48);
        let half = f4.iter().filter(|v| v.iter().all(|x| x.abs() == 1)).count();
        assert_eq!(half, 16);

        // E8, doubled coordinates: alpha_1 = (e1+e8-sum e2..e7)/2, alpha_2 = e7+e8,
        // alpha_i = e_{10-i} - e_{11-i} for i >= 3
        let mut e8_simple = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
        let mut a2 = vec![0; 8];
        a2[6] = 2;
        a2[7] = 2;
        e8_simple.push(a2);
        for i in 3..=8 {
            let mut v = vec![0; 8];
            v[10 - i - 1] = 2;
            v[11 - i - 1] = -2;
            e8_simple.push(v);
        }
        assert_eq!(gram_cartan(&e8_simple), CartanMatrix::of_type("E8".parse().unwrap()).unwrap().entries());
        let e8 = realize(&rs("E8"), &e8_simple);
        let integral = e8.iter().filter(|v| v.iter().filter(|&&x| x != 0).count() == 2).count();
        assert_eq!(integral, 112);
        assert!(e8
            .iter()
            .filter(|v| v.iter().all(|x| x.abs() == 1))
            .all(|v| v.iter().filter(|&&x| x < 0).count() % 2 == 0));
    }

    #[test]
    fn validate_examples() {
        assert_eq!(
            validate_cartan(&[vec![2, -1], vec![-3, 2]]).unwrap(),
            vec![CartanType { family: Family::G, rank: 2 }]
        );
        assert_eq!(
            validate_cartan(&[vec![2]]).unwrap(),
            vec![CartanType { family: Family::A, rank: 1 }]
        );
        assert_eq!(
            validate_cartan(&[vec![2, -2], vec![-2, 2]]),
            Err(RootSysError::NotCartan(NotCartanReason::Affine))
        );
        assert_eq!(
            validate_cartan(&[vec![2, -3], vec![-3, 2]]),
            Err(RootSysError::NotCartan(NotCartanReason::Indefinite))
        );
        assert!(matches!(
            validate_cartan(&[vec![2, 1], vec![1, 2]]),
            Err(RootSysError::NotCartan(NotCartanReason::PositiveOffDiagonal { .. }))
        ));
        assert!(matches!(
            validate_cartan(&[vec![2, 0], vec![-1, 2]]),
            Err(RootSysError::NotCartan(NotCartanReason::AsymmetricZero { .. }))
        ));
        assert!(matches!(
            validate_cartan(&[vec![2, -1, 0], vec![-1, 2]]),
            Err(RootSysError::NotCartan(NotCartanReason::NotSquare))
        ));
    }

    #[test]
    fn identification_of_all_builtin_types() {
        for label in [
            "A1", "A4", "B2", "B5", "C2", "C5", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
        ] {
            let t: CartanType = label.parse().unwrap();
            let m = CartanMatrix::of_type(t).unwrap();
            assert_eq!(validate_cartan(m.entries()).unwrap(), vec![t]);
        }
        let prod = CartanMatrix::of_types(&parse_types("B3xG2").unwrap()).unwrap();
        assert_eq!(validate_cartan(prod.entries()).unwrap().len(), 2);
        assert_eq!(
            "E9".parse::<CartanType>(),
            Err(RootSysError::UnsupportedType("E9".into()))
        );
    }

    #[test]
    fn relabeled_e6_is_accepted() {
        let m = CartanMatrix::of_type("E6".parse().unwrap()).unwrap();
        let p = [5, 3, 0, 2, 4, 1];
        let n = 6;
        let mut e = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                e[p[i]][p[j]] = m.get(i, j);
            }
        }
        assert_eq!(validate_cartan(&e).unwrap()[0].to_string(), "E6");
        let other = CartanMatrix::new(e).unwrap();
        assert!(m.find_isomorphism(&other).is_some());
    }

    #[test]
    fn highest_roots() {
        let (t, h) = rs("G2").highest_root().unwrap();
        assert_eq!((t.0, h), (vec![2, 3], 5));
        assert_eq!(rs("A1").highest_root().unwrap().1, 1);
        for n in 2..7 {
            assert_eq!(rs(&format!("A{n}")).highest_root().unwrap().0 .0, vec![1; n]);
        }
        assert_eq!(
            rs("A1xA1").highest_root(),
            Err(RootSysError::Reducible(2))
        );
    }

    #[test]
    fn exponent_duality_and_sums() {
        for label in [
            "A1", "A3", "A6", "B2", "B4", "C3", "C6", "D4", "D5", "D7", "E6", "E7", "E8", "F4", "G2",
        ] {
            let r = rs(label);
            let ex = r.exponents().unwrap();
            let (h, _) = r.coxeter_numbers().unwrap();
            assert_eq!(ex.len(), r.rank());
            assert_eq!(ex.iter().sum::<i64>() as usize, r.positive_roots().len());
            for i in 0..ex.len() {
                assert_eq!(ex[i] + ex[ex.len() - 1 - i], h, "{label}");
            }
            let census = r.height_census();
            assert_eq!(census[0], r.rank());
            assert!(census.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn pairing_examples() {
        let g2 = rs("G2");
        let a = LatticeVector::Root(g2.simple_root(0));
        let b = LatticeVector::Root(g2.simple_root(1));
        let aa = g2.pairing(&a, &a).unwrap();
        let bb = g2.pairing(&b, &b).unwrap();
        let ab = g2.pairing(&a, &b).unwrap();
        let n_ab = q(2) * &ab / &aa;
        let n_ba = q(2) * &ab / &bb;
        assert_eq!(n_ab * n_ba, q(3));
        let f4 = rs("F4");
        let (theta, _) = f4.highest_root().unwrap();
        let tc = f4.coroot(&theta.0);
        let rho_tc: i64 = tc.0.iter().sum();
        assert_eq!(rho_tc, 8);
        assert!(matches!(
            g2.pairing(&LatticeVector::Weight(Weight(vec![1])), &a),
            Err(RootSysError::DimensionMismatch { .. })
        ));
        // (alpha_i, alpha_i^vee) = 2
        for i in 0..4 {
            let w = f4.root_to_weight(&f4.simple_root(i).0);
            assert_eq!(w.0[i], 2);
        }
    }

    #[test]
    fn rho_properties() {
        let c2 = rs("C2");
        // in the ambient realization rho_{C_2} = (2,1): rho in root coords is (3/2)a1 + 2 a2
        // with a1 = e1 - e2, a2 = 2 e2
        let rc = c2.weight_to_root(&c2.rho().0);
        let e1 = rc[0].clone();
        let e2 = -rc[0].clone() + q(2) * &rc[1];
        assert_eq!((e1, e2), (q(2), q(1)));
        for label in ["A3", "B3", "G2", "E6"] {
            let r = rs(label);
            for i in 0..r.rank() {
                assert_eq!(r.coroot_pairing(&r.rho().0, &r.simple_root(i).0), q(1));
            }
        }
    }

    #[test]
    fn duality() {
        for n in 2..6 {
            let b = rs(&format!("B{n}"));
            assert_eq!(b.dual().types()[0].to_string(), format!("C{n}"));
            assert_eq!(b.dual().dual(), b);
            let coroots: HashSet<Root> = b.roots().iter().map(|a| {
                if a.is_positive() { b.coroot(&a.0) } else { b.coroot(&a.neg().0).neg() }
            }).collect();
            let dual_roots: HashSet<Root> = b.dual().roots().into_iter().collect();
            assert_eq!(coroots, dual_roots);
        }
        assert_eq!(rs("G2").dual().types()[0].to_string(), "G2");
        assert_eq!(rs("A1").dual(), rs("A1"));
    }

    #[test]
    fn lattice_quotients() {
        assert_eq!(rs("A4").weight_lattice_quotient().to_string(), "Z/5");
        assert_eq!(rs("D4").weight_lattice_quotient().to_string(), "Z/2 x Z/2");
        assert_eq!(rs("D5").weight_lattice_quotient().to_string(), "Z/4");
        assert_eq!(rs("E8").weight_lattice_quotient().to_string(), "trivial");
    }

    #[test]
    fn minuscule_inventory() {
        for label in ["A1", "A5", "B3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(label);
            let m = r.minuscule_weights().unwrap();
            assert_eq!(
                BigInt::from(m.len()),
                r.cartan().determinant(),
                "{label}"
            );
            for w in &m {
                assert!(r.is_minuscule(w));
            }
            // exhaustive: no other fundamental weight is minuscule
            let others = (0..r.rank())
                .map(|i| Weight::fundamental(r.rank(), i))
                .filter(|w| r.is_minuscule(w))
                .count();
            assert_eq!(others + 1, m.len());
        }
    }

    #[test]
    fn json_round_trip() {
        let m = CartanMatrix::of_type("F4".parse().unwrap()).unwrap();
        let text = m.to_json().to_string();
        assert_eq!(CartanMatrix::from_json(&text).unwrap(), m);
        assert!(CartanMatrix::from_json("{\"rank\":2,\"entries\":[[2]]}").is_err());
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(CartanMatrix::of_type("D4".parse().unwrap()).unwrap().automorphisms().len(), 6);
        assert_eq!(CartanMatrix::of_type("E6".parse().unwrap()).unwrap().automorphisms().len(), 2);
        assert_eq!(CartanMatrix::of_type("F4".parse().unwrap()).unwrap().automorphisms().len(), 1);
        assert_eq!(CartanMatrix::of_type("A4".parse().unwrap()).unwrap().automorphisms().len(), 2);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_type() -> impl Strategy<Value = CartanType> {
            prop_oneof![
                (1usize..8).prop_map(|n| CartanType { family: Family::A, rank: n }),
                (2usize..7).prop_map(|n| CartanType { family: Family::B, rank: n }),
                (2usize..7).prop_map(|n| CartanType { family: Family::C, rank: n }),
                (4usize..7).prop_map(|n| CartanType { family: Family::D, rank: n }),
                (6usize..9).prop_map(|n| CartanType { family: Family::E, rank: n }),
                Just(CartanType { family: Family::F, rank: 4 }),
                Just(CartanType { family: Family::G, rank: 2 }),
            ]
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]
            #[test]
            fn closure_and_counts(t in any_type()) {
                let r = RootSystem::build(t).unwrap();
                prop_assert_eq!(r.dim(), t.dim());
                let all = r.roots();
                for a in &all {
                    for i in 0..r.rank() {
                        let c: i64 = (0..r.rank()).map(|j| r.cartan().get(i, j) * a.0[j]).sum();
                        let mut b = a.0.clone();
                        b[i] -= c;
                        prop_assert!(r.is_root(&b));
                    }
                    let twice: Vec<i64> = a.0.iter().map(|x| 2 * x).collect();
                    prop_assert!(!r.is_root(&twice));
                }
                prop_assert_eq!(r.height_census()[0], r.rank());
                let (theta, ht) = r.highest_root().unwrap();
                let (h, _) = r.coxeter_numbers().unwrap();
                prop_assert_eq!(h, ht + 1);
                prop_assert_eq!(*r.exponents().unwrap().last().unwrap() + 1, h);
                prop_assert!(r.positive_roots().iter().all(|a| a.height() < ht || *a == theta));
            }
        }
    }
}
