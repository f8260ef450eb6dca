//! Finite-dimensional Lie algebras given by exact structure constants:
//! classical and nilpotent constructors, the Killing form, structural
//! predicates, root decompositions and Chevalley-Eilenberg cohomology.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{
    determinant, fmt_rational, integral_row, inverse, nullspace, parse_rational, q, rref,
    QMatrix, SparseEchelon, Subspace, Q,
};
use crate::poly::Poly;
use crate::rootsys::{CartanMatrix, Root, RootSysError, RootSystem};

pub const MAX_CONSTRUCT_DIM: usize = 400;
pub const MAX_COHOMOLOGY_DIM: usize = 20;

/// Structure constants of `G2`, generated from its 7-dimensional module.
pub const G2_JSON: &str = include_str!("../data/g2.json");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieAlgError {
    #[error("invalid structure-constant file: {0}")]
    InvalidFile(String),
    #[error("bracket is not antisymmetric on basis pair ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("matrices do not define a representation on basis pair ({0}, {1})")]
    NotARepresentation(usize, usize),
    #[error("Cartan action is not diagonal: {0}")]
    NotDiagonalizable(String),
    #[error("dimension {dim} exceeds the maximum {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("algebra has no distinguished Cartan subalgebra")]
    NoCartan,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
}

impl LieAlgError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, LieAlgError::TooLarge { .. })
    }
}

type SVec = Vec<(usize, Q)>;

fn add_into(acc: &mut BTreeMap<usize, Q>, v: &[(usize, Q)], c: &Q) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Q::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Lie algebra with basis `x_0..x_{n-1}` and `[x_i, x_j] = sum_k c_ij^k x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureLieAlgebra {
    labels: Vec<String>,
    br: Vec<Vec<SVec>>,
    cartan: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct BracketJson {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cartan: Option<Vec<usize>>,
    brackets: Vec<BracketJson>,
}

impl StructureLieAlgebra {
    /// Builds and validates antisymmetry and the Jacobi identity.
    pub fn new(
        labels: Vec<String>,
        table: BTreeMap<(usize, usize), SVec>,
        cartan: Option<Vec<usize>>,
    ) -> Result<Self, LieAlgError> {
        let n = labels.len();
        if n > MAX_CONSTRUCT_DIM {
            return Err(LieAlgError::TooLarge {
                dim: n,
                max: MAX_CONSTRUCT_DIM,
            });
        }
        let mut br = vec![vec![SVec::new(); n]; n];
        for ((i, j), v) in table {
            if i >= n || j >= n || v.iter().any(|(k, _)| *k >= n) {
                return Err(LieAlgError::InvalidFile(format!("index out of range in [{i},{j}]")));
            }
            let mut m = BTreeMap::new();
            add_into(&mut m, &v, &Q::one());
            br[i][j] = m.into_iter().collect();
        }
        if let Some(h) = &cartan {
            if h.iter().any(|&i| i >= n) {
                return Err(LieAlgError::InvalidFile("Cartan index out of range".into()));
            }
        }
        let g = StructureLieAlgebra { labels, br, cartan };
        g.validate()?;
        Ok(g)
    }

    /// Fills `[x_j, x_i] = -[x_i, x_j]` for pairs given only once.
    fn from_upper(
        labels: Vec<String>,
        upper: BTreeMap<(usize, usize), SVec>,
        cartan: Option<Vec<usize>>,
    ) -> Result<Self, LieAlgError> {
        let mut table = upper.clone();
        for ((i, j), v) in upper {
            let neg: SVec = v.iter().map(|(k, c)| (*k, -c)).collect();
            match table.get(&(j, i)) {
                Some(w) if i != j => {
                    let mut a = BTreeMap::new();
                    add_into(&mut a, w, &Q::one());
                    let mut b = BTreeMap::new();
                    add_into(&mut b, &neg, &Q::one());
                    if a != b {
                        return Err(LieAlgError::NotAntisymmetric(i, j));
                    }
                }
                _ => {
                    table.insert((j, i), neg);
                }
            }
        }
        Self::new(labels, table, cartan)
    }

    fn validate(&self) -> Result<(), LieAlgError> {
        let n = self.dim();
        for i in 0..n {
            if !self.br[i][i].is_empty() {
                return Err(LieAlgError::NotAntisymmetric(i, i));
            }
            for j in i + 1..n {
                let mut s = BTreeMap::new();
                add_into(&mut s, &self.br[i][j], &Q::one());
                add_into(&mut s, &self.br[j][i], &Q::one());
                if !s.is_empty() {
                    return Err(LieAlgError::NotAntisymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut s = BTreeMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, x) in &self.br[b][c] {
                            add_into(&mut s, &self.br[a][*m], x);
                        }
                    }
                    if !s.is_empty() {
                        return Err(LieAlgError::JacobiFailure(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cartan(&self) -> Option<&[usize]> {
        self.cartan.as_deref()
    }

    /// `[x_i, x_j]` as sparse coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.br[i][j]
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut acc = BTreeMap::new();
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                add_into(&mut acc, &self.br[i][j], &(a * b));
            }
        }
        let mut out = vec![Q::zero(); self.dim()];
        for (k, c) in acc {
            out[k] = c;
        }
        out
    }

    /// Matrix of `ad x_i` in the basis: column `j` holds `[x_i, x_j]`.
    pub fn ad(&self, i: usize) -> QMatrix {
        let n = self.dim();
        let mut m = vec![vec![Q::zero(); n]; n];
        for j in 0..n {
            for (k, c) in &self.br[i][j] {
                m[*k][j] = c.clone();
            }
        }
        m
    }

    pub fn from_json(text: &str) -> Result<Self, LieAlgError> {
        let raw: AlgebraJson =
            serde_json::from_str(text).map_err(|e| LieAlgError::InvalidFile(e.to_string()))?;
        if raw.basis.len() != raw.dim {
            return Err(LieAlgError::InvalidFile(format!(
                "dim {} but {} basis labels",
                raw.dim,
                raw.basis.len()
            )));
        }
        let mut upper: BTreeMap<(usize, usize), SVec> = BTreeMap::new();
        for b in raw.brackets {
            let mut v = SVec::new();
            for (k, c) in b.coeffs {
                let k: usize = k
                    .parse()
                    .map_err(|_| LieAlgError::InvalidFile(format!("bad basis index {k:?}")))?;
                let c = parse_rational(&c)
                    .ok_or_else(|| LieAlgError::InvalidFile(format!("bad rational {c:?}")))?;
                v.push((k, c));
            }
            if upper.insert((b.i, b.j), v).is_some() {
                return Err(LieAlgError::InvalidFile(format!("duplicate pair ({}, {})", b.i, b.j)));
            }
        }
        Self::from_upper(raw.basis, upper, raw.cartan)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.br[i][j].is_empty() {
                    brackets.push(BracketJson {
                        i,
                        j,
                        coeffs: self.br[i][j]
                            .iter()
                            .map(|(k, c)| (k.to_string(), fmt_rational(c)))
                            .collect(),
                    });
                }
            }
        }
        serde_json::to_value(AlgebraJson {
            dim: n,
            basis: self.labels.clone(),
            cartan: self.cartan.clone(),
            brackets,
        })
        .expect("serializable")
    }

    pub fn g2() -> Self {
        Self::from_json(G2_JSON).expect("shipped G2 data is valid")
    }
}

/// Sparse square matrix.
type SMat = BTreeMap<(usize, usize), Q>;

fn smat_mul(a: &SMat, b: &SMat) -> SMat {
    let mut by_row: BTreeMap<usize, Vec<(usize, &Q)>> = BTreeMap::new();
    for ((r, c), x) in b {
        by_row.entry(*r).or_default().push((*c, x));
    }
    let mut out = SMat::new();
    for ((r, k), x) in a {
        if let Some(row) = by_row.get(k) {
            for (c, y) in row {
                *out.entry((*r, *c)).or_insert_with(Q::zero) += x * *y;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn smat_commutator(a: &SMat, b: &SMat) -> SMat {
    let mut out = smat_mul(a, b);
    for (k, v) in smat_mul(b, a) {
        *out.entry(k).or_insert_with(Q::zero) -= v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn dense_to_sparse(m: &[Vec<Q>]) -> SMat {
    let mut out = SMat::new();
    for (r, row) in m.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            if !x.is_zero() {
                out.insert((r, c), x.clone());
            }
        }
    }
    out
}

/// Structure constants of a linearly independent, bracket-closed set of
/// matrices.
fn from_matrix_basis(
    labels: Vec<String>,
    mats: Vec<SMat>,
    size: usize,
    cartan: Option<Vec<usize>>,
) -> Result<StructureLieAlgebra, LieAlgError> {
    let n = mats.len();
    if n > MAX_CONSTRUCT_DIM {
        return Err(LieAlgError::TooLarge {
            dim: n,
            max: MAX_CONSTRUCT_DIM,
        });
    }
    let flat = |m: &SMat| -> BTreeMap<usize, Q> {
        m.iter().map(|((r, c), x)| (r * size + c, x.clone())).collect()
    };
    let flats: Vec<BTreeMap<usize, Q>> = mats.iter().map(flat).collect();
    // positions where the basis restricts to an invertible square matrix
    let mut positions: Vec<usize> = flats.iter().flat_map(|f| f.keys().copied()).collect();
    positions.sort_unstable();
    positions.dedup();
    let mut m: QMatrix = flats
        .iter()
        .map(|f| positions.iter().map(|p| f.get(p).cloned().unwrap_or_else(Q::zero)).collect())
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() != n {
        return Err(LieAlgError::BadParameter("matrices are linearly dependent".into()));
    }
    let chosen: Vec<usize> = pivots.iter().map(|&p| positions[p]).collect();
    let square: QMatrix = (0..n)
        .map(|k| {
            (0..n)
                .map(|i| flats[i].get(&chosen[k]).cloned().unwrap_or_else(Q::zero))
                .collect()
        })
        .collect();
    let inv = inverse(&square).expect("pivot minor is invertible");
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = flat(&smat_commutator(&mats[i], &mats[j]));
            if c.is_empty() {
                continue;
            }
            let coords: Vec<Q> = (0..n)
                .map(|r| {
                    chosen
                        .iter()
                        .enumerate()
                        .filter_map(|(k, p)| c.get(p).map(|x| &inv[r][k] * x))
                        .sum()
                })
                .collect();
            let mut check: BTreeMap<usize, Q> = BTreeMap::new();
            for (r, x) in coords.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (p, y) in &flats[r] {
                    *check.entry(*p).or_insert_with(Q::zero) += x * y;
                }
            }
            check.retain(|_, v| !v.is_zero());
            if check != c {
                return Err(LieAlgError::BadParameter("matrices are not closed under the bracket".into()));
            }
            let v: SVec = coords
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect();
            let neg = v.iter().map(|(k, x)| (*k, -x)).collect();
            table.insert((i, j), v);
            table.insert((j, i), neg);
        }
    }
    StructureLieAlgebra::new(labels, table, cartan)
}

fn unit(r: usize, c: usize, x: i64) -> SMat {
    SMat::from([((r, c), q(x))])
}

fn check_size(n: usize, dim: usize) -> Result<(), LieAlgError> {
    if dim > MAX_CONSTRUCT_DIM {
        return Err(LieAlgError::TooLarge {
            dim,
            max: MAX_CONSTRUCT_DIM,
        });
    }
    if n == 0 {
        return Err(LieAlgError::BadParameter("size must be positive".into()));
    }
    Ok(())
}

/// `sl(n)`: `E_ij` for `i<j`, then `i>j`, then `H_i = E_ii - E_{i+1,i+1}`.
pub fn sl(n: usize) -> Result<StructureLieAlgebra, LieAlgError> {
    if n < 2 {
        return Err(LieAlgError::BadParameter("sl(n) needs n >= 2".into()));
    }
    check_size(n, n * n - 1)?;
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for upper in [true, false] {
        for i in 0..n {
            for j in 0..n {
                if (upper && i < j) || (!upper && i > j) {
                    labels.push(format!("E{}_{}", i + 1, j + 1));
                    mats.push(unit(i, j, 1));
                }
            }
        }
    }
    let h0 = mats.len();
    for i in 0..n - 1 {
        labels.push(format!("H{}", i + 1));
        let mut m = unit(i, i, 1);
        m.insert((i + 1, i + 1), q(-1));
        mats.push(m);
    }
    if n == 2 {
        labels = vec!["e".into(), "f".into(), "h".into()];
    }
    from_matrix_basis(labels, mats, n, Some((h0..h0 + n - 1).collect()))
}

/// Split `so(n)` preserving the antidiagonal form `J`: basis
/// `(E_pq - E_qp) J` for `p < q`.
pub fn so(n: usize) -> Result<StructureLieAlgebra, LieAlgError> {
    if n < 2 {
        return Err(LieAlgError::BadParameter("so(n) needs n >= 2".into()));
    }
    check_size(n, n * (n - 1) / 2)?;
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut cartan = Vec::new();
    for p in 0..n {
        for qq in p + 1..n {
            // (E_pq - E_qp) J with J e_k = e_{n-1-k}
            let mut m = unit(p, n - 1 - qq, 1);
            m.insert((qq, n - 1 - p), q(-1));
            if qq == n - 1 - p {
                cartan.push(mats.len());
                labels.push(format!("H{}", p + 1));
            } else {
                labels.push(format!("X{}_{}", p + 1, qq + 1));
            }
            mats.push(m);
        }
    }
    from_matrix_basis(labels, mats, n, Some(cartan))
}

/// `sp(m)` for even `m`: basis `S J^{-1}` with `S` symmetric and
/// `J = [[0, I], [-I, 0]]`.
pub fn sp(m: usize) -> Result<StructureLieAlgebra, LieAlgError> {
    if m < 2 || m % 2 == 1 {
        return Err(LieAlgError::BadParameter("sp(m) needs even m >= 2".into()));
    }
    let n = m / 2;
    check_size(m, n * (2 * n + 1))?;
    // J^{-1} = [[0, -I], [I, 0]]: row r has its entry at column r +- n
    let jinv = |r: usize| -> (usize, i64) {
        if r < n {
            (r + n, -1)
        } else {
            (r - n, 1)
        }
    };
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut cartan = Vec::new();
    for a in 0..m {
        for b in a..m {
            let mut s = SMat::new();
            for (r, c) in [(a, b), (b, a)] {
                let (cc, x) = jinv(c);
                *s.entry((r, cc)).or_insert_with(Q::zero) += q(x);
            }
            s.retain(|_, v| !v.is_zero());
            if b == a + n && a < n {
                cartan.push(mats.len());
                labels.push(format!("H{}", a + 1));
            } else {
                labels.push(format!("S{}_{}", a + 1, b + 1));
            }
            mats.push(s);
        }
    }
    from_matrix_basis(labels, mats, m, Some(cartan))
}

/// `[x, y] = c`.
pub fn heisenberg() -> StructureLieAlgebra {
    let table = BTreeMap::from([((0, 1), vec![(2, q(1))]), ((1, 0), vec![(2, q(-1))])]);
    StructureLieAlgebra::new(vec!["x".into(), "y".into(), "c".into()], table, None)
        .expect("Heisenberg algebra is valid")
}

pub fn abelian(n: usize) -> StructureLieAlgebra {
    StructureLieAlgebra::new(
        (1..=n).map(|i| format!("x{i}")).collect(),
        BTreeMap::new(),
        Some((0..n).collect()),
    )
    .expect("abelian algebra is valid")
}

fn triangular(n: usize, strict: bool) -> Result<StructureLieAlgebra, LieAlgError> {
    check_size(n, n * (n + 1) / 2)?;
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in i..n {
            if strict && i == j {
                continue;
            }
            labels.push(format!("E{}_{}", i + 1, j + 1));
            mats.push(unit(i, j, 1));
        }
    }
    if mats.is_empty() {
        return Ok(abelian(0));
    }
    from_matrix_basis(labels, mats, n, None)
}

pub fn upper_triangular(n: usize) -> Result<StructureLieAlgebra, LieAlgError> {
    triangular(n, false)
}

pub fn strictly_upper_triangular(n: usize) -> Result<StructureLieAlgebra, LieAlgError> {
    triangular(n, true)
}

/// Lie closure of a set of square matrices; `None` if it exceeds `max_dim`.
pub fn matrix_closure(
    gens: &[QMatrix],
    max_dim: usize,
) -> Result<Option<StructureLieAlgebra>, LieAlgError> {
    let size = gens.first().map_or(0, Vec::len);
    let mut space = Subspace::new(size * size);
    let mut basis: Vec<SMat> = Vec::new();
    let flat = |m: &SMat| -> Vec<Q> {
        let mut v = vec![Q::zero(); size * size];
        for ((r, c), x) in m {
            v[r * size + c] = x.clone();
        }
        v
    };
    let mut queue = Vec::new();
    for g in gens {
        let s = dense_to_sparse(g);
        if space.insert(&flat(&s)) {
            basis.push(s.clone());
            queue.push(s);
        }
    }
    while let Some(a) = queue.pop() {
        for k in 0..basis.len() {
            let c = smat_commutator(&a, &basis[k]);
            if space.insert(&flat(&c)) {
                if basis.len() == max_dim {
                    return Ok(None);
                }
                basis.push(c.clone());
                queue.push(c);
            }
        }
    }
    let labels = (1..=basis.len()).map(|i| format!("b{i}")).collect();
    if basis.is_empty() {
        return Ok(Some(abelian(0)));
    }
    from_matrix_basis(labels, basis, size, None).map(Some)
}

/// Random Lie algebra of dimension at most `max_dim`, realized as the
/// closure of a few small integer matrices, some of them triangular.
pub fn random_matrix_algebra<R: Rng>(rng: &mut R, max_dim: usize) -> StructureLieAlgebra {
    loop {
        let size = rng.gen_range(2..=4);
        let count = rng.gen_range(1..=3);
        let shape = rng.gen_range(0..3);
        let gens: Vec<QMatrix> = (0..count)
            .map(|_| {
                (0..size)
                    .map(|r| {
                        (0..size)
                            .map(|c| {
                                let allowed = match shape {
                                    0 => c > r,
                                    1 => c >= r,
                                    _ => true,
                                };
                                if allowed && rng.gen_bool(0.5) {
                                    q(rng.gen_range(-2..=2))
                                } else {
                                    q(0)
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        if let Ok(Some(g)) = matrix_closure(&gens, max_dim) {
            if g.dim() > 0 {
                return g;
            }
        }
    }
}

/// `K(x_i, x_j) = tr(ad x_i ad x_j)`.
pub fn killing_form(g: &StructureLieAlgebra) -> QMatrix {
    let n = g.dim();
    let mut k = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut t = Q::zero();
            for kk in 0..n {
                for (l, c1) in &g.br[j][kk] {
                    if let Ok(p) = g.br[i][*l].binary_search_by_key(&kk, |(m, _)| *m) {
                        t += c1 * &g.br[i][*l][p].1;
                    }
                }
            }
            k[i][j] = t.clone();
            k[j][i] = t;
        }
    }
    k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

impl FromStr for SeriesKind {
    type Err = LieAlgError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "derived" => Ok(SeriesKind::Derived),
            "lower_central" | "lower-central" | "lcs" => Ok(SeriesKind::LowerCentral),
            _ => Err(LieAlgError::BadParameter(format!("unknown series {s:?}"))),
        }
    }
}

fn bracket_span(g: &StructureLieAlgebra, a: &[Vec<Q>], b: &[Vec<Q>]) -> Subspace {
    let mut s = Subspace::new(g.dim());
    for u in a {
        for v in b {
            s.insert(&g.bracket(u, v));
        }
    }
    s
}

fn full_basis(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

/// Dimensions of the derived or lower central series, stopping once stable.
pub fn series(g: &StructureLieAlgebra, kind: SeriesKind) -> Vec<usize> {
    let all = full_basis(g.dim());
    let mut cur = all.clone();
    let mut dims = vec![g.dim()];
    loop {
        let next = match kind {
            SeriesKind::Derived => bracket_span(g, &cur, &cur),
            SeriesKind::LowerCentral => bracket_span(g, &all, &cur),
        };
        let d = next.dim();
        if d == *dims.last().expect("nonempty") {
            break;
        }
        dims.push(d);
        if d == 0 {
            break;
        }
        cur = next.basis();
    }
    dims
}

/// Solvability by the derived series and by the Cartan criterion
/// `K(g, [g,g]) = 0`.
pub fn solvability_checks(g: &StructureLieAlgebra) -> (bool, bool) {
    let by_series = series(g, SeriesKind::Derived).last() == Some(&0);
    let all = full_basis(g.dim());
    let k = killing_form(g);
    let by_cartan = bracket_span(g, &all, &all).basis().iter().all(|u| {
        (0..g.dim()).all(|j| {
            u.iter()
                .enumerate()
                .map(|(i, x)| x * &k[i][j])
                .sum::<Q>()
                .is_zero()
        })
    });
    (by_series, by_cartan)
}

pub fn is_solvable(g: &StructureLieAlgebra) -> bool {
    let (a, b) = solvability_checks(g);
    assert_eq!(a, b, "derived series and Cartan criterion disagree");
    a
}

pub fn is_nilpotent(g: &StructureLieAlgebra) -> bool {
    series(g, SeriesKind::LowerCentral).last() == Some(&0)
}

pub fn is_semisimple(g: &StructureLieAlgebra) -> bool {
    g.dim() > 0 && !determinant(&killing_form(g)).is_zero()
}

/// Dimension of the space of endomorphisms commuting with `ad g`.
pub fn commutant_dim(g: &StructureLieAlgebra) -> usize {
    let n = g.dim();
    // unknown T_{ab} at index a*n+b; equations (T ad_i - ad_i T)_{rc} = 0
    let mut ech = SparseEchelon::new();
    for i in 0..n {
        let ad = g.ad(i);
        for r in 0..n {
            for c in 0..n {
                let mut row: BTreeMap<usize, Q> = BTreeMap::new();
                for k in 0..n {
                    if !ad[k][c].is_zero() {
                        *row.entry(r * n + k).or_insert_with(Q::zero) += &ad[k][c];
                    }
                    if !ad[r][k].is_zero() {
                        *row.entry(k * n + c).or_insert_with(Q::zero) -= &ad[r][k];
                    }
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    let v: Vec<(usize, Q)> = row.into_iter().collect();
                    ech.insert(integral_row(&v));
                }
            }
        }
    }
    n * n - ech.rank()
}

pub fn is_simple(g: &StructureLieAlgebra) -> bool {
    is_semisimple(g) && commutant_dim(g) == 1
}

/// A representation of `g` by explicit matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule {
    dim: usize,
    mats: Vec<QMatrix>,
}

#[derive(Deserialize)]
struct ModuleJson {
    dim: usize,
    matrices: Vec<Vec<Vec<String>>>,
}

impl LieModule {
    pub fn new(g: &StructureLieAlgebra, mats: Vec<QMatrix>) -> Result<Self, LieAlgError> {
        if mats.len() != g.dim() {
            return Err(LieAlgError::BadParameter(format!(
                "{} matrices for an algebra of dimension {}",
                mats.len(),
                g.dim()
            )));
        }
        let dim = mats.first().map_or(0, Vec::len);
        if mats.iter().any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim)) {
            return Err(LieAlgError::BadParameter("matrices must be square of equal size".into()));
        }
        let sm: Vec<SMat> = mats.iter().map(|m| dense_to_sparse(m)).collect();
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let mut lhs = SMat::new();
                for (k, c) in g.bracket_basis(i, j) {
                    for (p, x) in &sm[*k] {
                        *lhs.entry(*p).or_insert_with(Q::zero) += c * x;
                    }
                }
                lhs.retain(|_, v| !v.is_zero());
                if lhs != smat_commutator(&sm[i], &sm[j]) {
                    return Err(LieAlgError::NotARepresentation(i, j));
                }
            }
        }
        Ok(LieModule { dim, mats })
    }

    pub fn trivial(g: &StructureLieAlgebra) -> Self {
        LieModule {
            dim: 1,
            mats: vec![vec![vec![Q::zero()]]; g.dim()],
        }
    }

    pub fn adjoint(g: &StructureLieAlgebra) -> Self {
        LieModule {
            dim: g.dim(),
            mats: (0..g.dim()).map(|i| g.ad(i)).collect(),
        }
    }

    /// `V_n` for `sl(2)` with basis `[e, f, h]`: `v_0..v_n` of weights
    /// `n - 2m`, `f v_m = v_{m+1}`, `e v_m = m(n-m+1) v_{m-1}`.
    pub fn sl2_irrep(g: &StructureLieAlgebra, n: usize) -> Result<Self, LieAlgError> {
        let d = n + 1;
        let mut e = vec![vec![Q::zero(); d]; d];
        let mut f = vec![vec![Q::zero(); d]; d];
        let mut h = vec![vec![Q::zero(); d]; d];
        for m in 0..d {
            h[m][m] = q(n as i64 - 2 * m as i64);
            if m + 1 < d {
                f[m + 1][m] = q(1);
            }
            if m > 0 {
                e[m - 1][m] = q((m * (n - m + 1)) as i64);
            }
        }
        LieModule::new(g, vec![e, f, h])
    }

    pub fn from_json(g: &StructureLieAlgebra, text: &str) -> Result<Self, LieAlgError> {
        let raw: ModuleJson =
            serde_json::from_str(text).map_err(|e| LieAlgError::InvalidFile(e.to_string()))?;
        let mats = raw
            .matrices
            .iter()
            .map(|m| {
                m.iter()
                    .map(|r| {
                        r.iter()
                            .map(|s| {
                                parse_rational(s).ok_or_else(|| {
                                    LieAlgError::InvalidFile(format!("bad rational {s:?}"))
                                })
                            })
                            .collect::<Result<Vec<Q>, _>>()
                    })
                    .collect::<Result<QMatrix, _>>()
            })
            .collect::<Result<Vec<QMatrix>, _>>()?;
        let m = LieModule::new(g, mats)?;
        if m.dim != raw.dim {
            return Err(LieAlgError::InvalidFile("module dimension mismatch".into()));
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, i: usize) -> &QMatrix {
        &self.mats[i]
    }
}

/// Eigenvalues of the marked Cartan elements on each basis vector, if the
/// action is diagonal.
fn basis_weights(g: &StructureLieAlgebra) -> Result<Vec<Vec<Q>>, LieAlgError> {
    let h = g.cartan().ok_or(LieAlgError::NoCartan)?;
    let mut w = vec![Vec::with_capacity(h.len()); g.dim()];
    for &hk in h {
        for (i, wi) in w.iter_mut().enumerate() {
            let b = g.bracket_basis(hk, i);
            match b {
                [] => wi.push(Q::zero()),
                [(k, c)] if *k == i => wi.push(c.clone()),
                _ => {
                    return Err(LieAlgError::NotDiagonalizable(format!(
                        "ad {} does not preserve the line of {}",
                        g.labels[hk], g.labels[i]
                    )))
                }
            }
        }
    }
    for &i in h {
        if w[i].iter().any(|x| !x.is_zero()) {
            return Err(LieAlgError::NotDiagonalizable("marked elements do not commute".into()));
        }
    }
    Ok(w)
}

fn module_weights(g: &StructureLieAlgebra, m: &LieModule) -> Option<Vec<Vec<Q>>> {
    let h = g.cartan()?;
    let mut w = vec![Vec::new(); m.dim];
    for &hk in h {
        let mat = &m.mats[hk];
        for (a, wa) in w.iter_mut().enumerate() {
            if (0..m.dim).any(|b| b != a && (!mat[a][b].is_zero() || !mat[b][a].is_zero())) {
                return None;
            }
            wa.push(mat[a][a].clone());
        }
    }
    Some(w)
}

#[derive(Clone, Debug)]
pub struct RecoveredRoot {
    /// Values on the marked Cartan basis.
    pub functional: Vec<Q>,
    pub basis_index: usize,
    /// Coordinates in the recovered simple roots.
    pub root: Root,
}

#[derive(Clone, Debug)]
pub struct RootDecomposition {
    pub roots: Vec<RecoveredRoot>,
    /// Multiplicity of each distinct root functional.
    pub multiplicities: Vec<usize>,
    pub simple: Vec<usize>,
    pub cartan_matrix: CartanMatrix,
    pub root_system: RootSystem,
}

/// Root space decomposition with respect to the marked Cartan subalgebra,
/// matched against the abstract root system of the recovered Cartan matrix.
pub fn root_decomposition(g: &StructureLieAlgebra) -> Result<RootDecomposition, LieAlgError> {
    let h = g.cartan().ok_or(LieAlgError::NoCartan)?.to_vec();
    let w = basis_weights(g)?;
    let r = h.len();
    let mut roots: Vec<(Vec<Q>, usize)> = Vec::new();
    for i in (0..g.dim()).filter(|i| !h.contains(i)) {
        if w[i].iter().all(Zero::is_zero) {
            return Err(LieAlgError::NotDiagonalizable(format!(
                "{} has weight zero outside the marked subalgebra",
                g.labels[i]
            )));
        }
        roots.push((w[i].clone(), i));
    }
    let mut multiplicities: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
    for (f, _) in &roots {
        *multiplicities.entry(f.clone()).or_insert(0) += 1;
    }
    if multiplicities.values().any(|&m| m != 1) {
        return Err(LieAlgError::NotDiagonalizable("root spaces are not lines".into()));
    }
    // generic positivity functional
    let positive = (2i64..)
        .map(|t| (0..r).map(|k| q(t.pow(k as u32) + k as i64)).collect::<Vec<Q>>())
        .find(|v| {
            roots
                .iter()
                .all(|(f, _)| !f.iter().zip(v).map(|(a, b)| a * b).sum::<Q>().is_zero())
        })
        .expect("a generic functional exists");
    let score = |f: &[Q]| -> Q { f.iter().zip(&positive).map(|(a, b)| a * b).sum() };
    let pos: Vec<usize> = (0..roots.len())
        .filter(|&k| score(&roots[k].0) > Q::zero())
        .collect();
    let index_of = |f: &[Q]| roots.iter().position(|(g2, _)| g2.as_slice() == f);
    let is_sum = |f: &[Q]| {
        pos.iter().any(|&a| {
            let rest: Vec<Q> = f.iter().zip(&roots[a].0).map(|(x, y)| x - y).collect();
            index_of(&rest).is_some_and(|b| pos.contains(&b))
        })
    };
    let simple: Vec<usize> = pos.iter().copied().filter(|&k| !is_sum(&roots[k].0)).collect();
    if simple.len() != r {
        return Err(LieAlgError::NotDiagonalizable(format!(
            "{} simple roots for a rank-{r} torus",
            simple.len()
        )));
    }
    // coroots h_a = 2 [e_a, e_-a] / a([e_a, e_-a])
    let mut coroots = Vec::new();
    for &s in &simple {
        let neg: Vec<Q> = roots[s].0.iter().map(|x| -x).collect();
        let t = index_of(&neg).ok_or_else(|| LieAlgError::NotDiagonalizable("root set not symmetric".into()))?;
        let b = g.bracket_basis(roots[s].1, roots[t].1);
        if b.iter().any(|(k, _)| !h.contains(k)) {
            return Err(LieAlgError::NotDiagonalizable("[e_a, e_-a] leaves the Cartan".into()));
        }
        let hv: Vec<Q> = h
            .iter()
            .map(|hk| b.iter().find(|(k, _)| k == hk).map_or_else(Q::zero, |(_, c)| c.clone()))
            .collect();
        let val: Q = hv.iter().zip(&roots[s].0).map(|(a, b)| a * b).sum();
        if val.is_zero() {
            return Err(LieAlgError::NotDiagonalizable("degenerate root pairing".into()));
        }
        coroots.push(hv.iter().map(|x| x * q(2) / &val).collect::<Vec<Q>>());
    }
    let mut a = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let v: Q = coroots[i].iter().zip(&roots[simple[j]].0).map(|(x, y)| x * y).sum();
            if !v.is_integer() {
                return Err(LieAlgError::NotDiagonalizable("non-integral Cartan entry".into()));
            }
            a[i][j] = v.to_integer().try_into().expect("small Cartan entry");
        }
    }
    let cartan_matrix = CartanMatrix::new(a)?;
    let root_system = RootSystem::from_cartan(cartan_matrix.clone());
    // coordinates in the simple roots
    let sm: QMatrix = (0..r).map(|k| simple.iter().map(|&s| roots[s].0[k].clone()).collect()).collect();
    let sinv = inverse(&sm).ok_or_else(|| LieAlgError::NotDiagonalizable("simple roots dependent".into()))?;
    let mut out = Vec::new();
    for (f, idx) in &roots {
        let coords: Vec<Q> = (0..r)
            .map(|i| (0..r).map(|k| &sinv[i][k] * &f[k]).sum())
            .collect();
        if coords.iter().any(|c| !c.is_integer()) {
            return Err(LieAlgError::NotDiagonalizable("non-integral root coordinates".into()));
        }
        let c: Vec<i64> = coords
            .iter()
            .map(|c| c.to_integer().try_into().expect("small"))
            .collect();
        if !root_system.is_root(&c) {
            return Err(LieAlgError::NotDiagonalizable("recovered root missing from the abstract system".into()));
        }
        out.push(RecoveredRoot {
            functional: f.clone(),
            basis_index: *idx,
            root: Root(c),
        });
    }
    if out.len() != root_system.num_roots() {
        return Err(LieAlgError::NotDiagonalizable("root counts differ".into()));
    }
    Ok(RootDecomposition {
        multiplicities: out.iter().map(|_| 1).collect(),
        roots: out,
        simple: simple.iter().map(|&s| roots[s].1).collect(),
        cartan_matrix,
        root_system,
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

/// Inserts `j` into a sorted set; returns the set and the position of `j`.
fn insert_sorted(set: &[usize], j: usize) -> (Vec<usize>, usize) {
    let pos = set.partition_point(|&x| x < j);
    let mut v = Vec::with_capacity(set.len() + 1);
    v.extend_from_slice(&set[..pos]);
    v.push(j);
    v.extend_from_slice(&set[pos..]);
    (v, pos)
}

fn sign(k: usize) -> Q {
    if k % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

type Cochain = (Vec<usize>, usize);

/// Chevalley-Eilenberg complex `Hom(wedge^k g, V)`, restricted to weight
/// zero when the Cartan action is diagonal on both `g` and `V`.
struct CeComplex<'a> {
    g: &'a StructureLieAlgebra,
    module: &'a LieModule,
    weights: Option<(Vec<Vec<Q>>, Vec<Vec<Q>>)>,
    /// For each target index `m`, the pairs `p < r` with `c_pr^m != 0`.
    pairs: Vec<Vec<(usize, usize, Q)>>,
}

impl<'a> CeComplex<'a> {
    fn new(g: &'a StructureLieAlgebra, module: &'a LieModule) -> Self {
        let weights = match (basis_weights(g), module_weights(g, module)) {
            (Ok(a), Some(b)) => Some((a, b)),
            _ => None,
        };
        let n = g.dim();
        let mut pairs = vec![Vec::new(); n];
        for p in 0..n {
            for r in p + 1..n {
                for (m, c) in g.bracket_basis(p, r) {
                    pairs[*m].push((p, r, c.clone()));
                }
            }
        }
        CeComplex {
            g,
            module,
            weights,
            pairs,
        }
    }

    fn basis(&self, k: usize) -> Vec<Cochain> {
        let mut out = Vec::new();
        for set in combinations(self.g.dim(), k) {
            for a in 0..self.module.dim {
                let keep = match &self.weights {
                    None => true,
                    Some((gw, mw)) => (0..mw[a].len()).all(|t| {
                        let s: Q = set.iter().map(|&i| &gw[i][t]).sum();
                        s == mw[a][t]
                    }),
                };
                if keep {
                    out.push((set.clone(), a));
                }
            }
        }
        out
    }

    /// `d` of the cochain dual to `(set, a)`.
    fn d(&self, set: &[usize], a: usize) -> BTreeMap<Cochain, Q> {
        let mut out: BTreeMap<Cochain, Q> = BTreeMap::new();
        let push = |key: Cochain, c: Q, out: &mut BTreeMap<Cochain, Q>| {
            let e = out.entry(key.clone()).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                out.remove(&key);
            }
        };
        for j in 0..self.g.dim() {
            if set.contains(&j) {
                continue;
            }
            let (jv, pos) = insert_sorted(set, j);
            let mat = &self.module.mats[j];
            for b in 0..self.module.dim {
                if !mat[b][a].is_zero() {
                    push((jv.clone(), b), sign(pos) * &mat[b][a], &mut out);
                }
            }
        }
        for (t, &m) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&x| x != m).collect();
            for (p, r, c) in &self.pairs[m] {
                if rest.contains(p) || rest.contains(r) {
                    continue;
                }
                let (v1, _) = insert_sorted(&rest, *p);
                let (v2, rp) = insert_sorted(&v1, *r);
                let pp = v2.partition_point(|&x| x < *p);
                push((v2, a), sign(pp + rp + t) * c, &mut out);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cohomology {
    /// `dim H^k` for `k = 0..=dim g`.
    pub dims: Vec<usize>,
    /// Whether the weight-zero subcomplex was used.
    pub weight_zero: bool,
}

impl Cohomology {
    pub fn poincare(&self) -> Poly {
        Poly::from_ints(self.dims.iter().map(|&d| d as i64))
    }
}

/// `H^k(g, V)` for all `k`, with `d^2 = 0` checked on every basis cochain.
pub fn ce_cohomology(
    g: &StructureLieAlgebra,
    module: &LieModule,
    max_dim: usize,
) -> Result<Cohomology, LieAlgError> {
    if g.dim() > max_dim {
        return Err(LieAlgError::TooLarge {
            dim: g.dim(),
            max: max_dim,
        });
    }
    let cx = CeComplex::new(g, module);
    let n = g.dim();
    let bases: Vec<Vec<Cochain>> = (0..=n + 1).map(|k| if k <= n { cx.basis(k) } else { Vec::new() }).collect();
    let mut ranks = vec![0usize; n + 2];
    for k in 0..=n {
        let index: HashMap<&Cochain, usize> = bases[k + 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut ech = SparseEchelon::new();
        for (set, a) in &bases[k] {
            let img = cx.d(set, *a);
            // d^2 = 0
            let mut dd: BTreeMap<Cochain, Q> = BTreeMap::new();
            for ((s2, b), c) in &img {
                for (key, x) in cx.d(s2, *b) {
                    *dd.entry(key).or_insert_with(Q::zero) += c * x;
                }
            }
            assert!(dd.values().all(Zero::is_zero), "d^2 != 0");
            let row: Vec<(usize, Q)> = img
                .into_iter()
                .map(|(key, c)| (*index.get(&key).expect("weight preserved"), c))
                .collect();
            if !row.is_empty() {
                ech.insert(integral_row(&row));
            }
        }
        ranks[k] = ech.rank();
    }
    let dims = (0..=n)
        .map(|k| bases[k].len() - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
        .collect();
    Ok(Cohomology {
        dims,
        weight_zero: cx.weights.is_some(),
    })
}

/// Basis of representatives of `H^2(g, trivial)` as 2-forms on basis pairs.
pub fn h2_representatives(g: &StructureLieAlgebra) -> Vec<BTreeMap<(usize, usize), Q>> {
    let triv = LieModule::trivial(g);
    let cx = CeComplex {
        g,
        module: &triv,
        weights: None,
        pairs: CeComplex::new(g, &triv).pairs,
    };
    let c2 = cx.basis(2);
    let c3 = cx.basis(3);
    let idx3: HashMap<&Cochain, usize> = c3.iter().enumerate().map(|(i, c)| (c, i)).collect();
    // d_2 as a dense matrix: rows are 3-cochains
    let mut m = vec![vec![Q::zero(); c2.len()]; c3.len()];
    for (col, (set, a)) in c2.iter().enumerate() {
        for (key, c) in cx.d(set, *a) {
            m[idx3[&key]][col] = c;
        }
    }
    let cycles = nullspace(&m, c2.len());
    let mut space = Subspace::new(c2.len());
    for (set, a) in cx.basis(1) {
        let img = cx.d(&set, a);
        let mut v = vec![Q::zero(); c2.len()];
        for (key, c) in img {
            let i = c2.iter().position(|x| *x == key).expect("2-cochain");
            v[i] = c;
        }
        space.insert(&v);
    }
    cycles
        .into_iter()
        .filter(|z| space.insert(z))
        .map(|z| {
            c2.iter()
                .zip(z)
                .filter(|(_, c)| !c.is_zero())
                .map(|((s, _), c)| ((s[0], s[1]), c))
                .collect()
        })
        .collect()
}

/// `g (+) Q c` with `[x, y]' = [x, y] + omega(x, y) c`.
pub fn central_extension(
    g: &StructureLieAlgebra,
    omega: &BTreeMap<(usize, usize), Q>,
    label: &str,
) -> Result<StructureLieAlgebra, LieAlgError> {
    let n = g.dim();
    let mut labels = g.labels.clone();
    labels.push(label.to_string());
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let mut v = g.br[i][j].clone();
            let w = if i < j {
                omega.get(&(i, j)).cloned()
            } else {
                omega.get(&(j, i)).map(|c| -c)
            };
            if let Some(c) = w.filter(|c| !c.is_zero()) {
                v.push((n, c));
            }
            if !v.is_empty() {
                table.insert((i, j), v);
            }
        }
    }
    StructureLieAlgebra::new(labels, table, None)
}

/// `dim (wedge^k g*)^g`.
pub fn invariant_forms(g: &StructureLieAlgebra, k: usize) -> Result<usize, LieAlgError> {
    if g.dim() > MAX_COHOMOLOGY_DIM {
        return Err(LieAlgError::TooLarge {
            dim: g.dim(),
            max: MAX_COHOMOLOGY_DIM,
        });
    }
    let n = g.dim();
    let weights = basis_weights(g).ok();
    let forms: Vec<Vec<usize>> = combinations(n, k)
        .into_iter()
        .filter(|s| match &weights {
            None => true,
            Some(w) => (0..w.first().map_or(0, Vec::len))
                .all(|t| s.iter().map(|&i| &w[i][t]).sum::<Q>().is_zero()),
        })
        .collect();
    let acting: Vec<usize> = match (&weights, g.cartan()) {
        (Some(_), Some(h)) => (0..n).filter(|i| !h.contains(i)).collect(),
        _ => (0..n).collect(),
    };
    // image of each form under every acting basis element, as one column
    let mut out_index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    let mut ech = SparseEchelon::new();
    for set in &forms {
        let mut col: BTreeMap<usize, Q> = BTreeMap::new();
        for &j in &acting {
            // x_j . e^m = -sum_l c_{jl}^m e^l
            for (p, &m) in set.iter().enumerate() {
                let rest: Vec<usize> = set.iter().copied().filter(|&x| x != m).collect();
                for l in 0..n {
                    if rest.contains(&l) {
                        continue;
                    }
                    let Ok(t) = g.br[j][l].binary_search_by_key(&m, |(x, _)| *x) else {
                        continue;
                    };
                    let c = &g.br[j][l][t].1;
                    let (nv, pos) = insert_sorted(&rest, l);
                    // e^{..l at p..} reordered: move l from position p to pos
                    let s = sign(p + pos);
                    let next = out_index.len();
                    let key = *out_index.entry((j, nv)).or_insert(next);
                    *col.entry(key).or_insert_with(Q::zero) -= s * c;
                }
            }
        }
        col.retain(|_, v| !v.is_zero());
        if !col.is_empty() {
            let v: Vec<(usize, Q)> = col.into_iter().collect();
            ech.insert(integral_row(&v));
        }
    }
    Ok(forms.len() - ech.rank())
}

/// `sum_k dim (wedge^k g*)^g q^k` for semisimple `g`.
pub fn invariant_forms_poincare(g: &StructureLieAlgebra) -> Result<Poly, LieAlgError> {
    if g.dim() > MAX_COHOMOLOGY_DIM {
        return Err(LieAlgError::TooLarge {
            dim: g.dim(),
            max: MAX_COHOMOLOGY_DIM,
        });
    }
    if !is_semisimple(g) {
        return Err(LieAlgError::NotSemisimple);
    }
    let dims = (0..=g.dim())
        .map(|k| invariant_forms(g, k).map(|d| d as i64))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_ints(dims))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleProduct {
    pub dim: usize,
    /// The count is only meaningful for simple `g`.
    pub simple: bool,
}

pub fn triple_product_invariant(g: &StructureLieAlgebra) -> Result<TripleProduct, LieAlgError> {
    Ok(TripleProduct {
        dim: invariant_forms(g, 3)?,
        simple: is_simple(g),
    })
}

/// Rational positivity of the Killing form on the span of the marked
/// Cartan elements, by leading principal minors.
pub fn killing_positive_on_cartan(g: &StructureLieAlgebra) -> Result<bool, LieAlgError> {
    let h = g.cartan().ok_or(LieAlgError::NoCartan)?;
    let k = killing_form(g);
    let sub: QMatrix = h.iter().map(|&i| h.iter().map(|&j| k[i][j].clone()).collect()).collect();
    Ok(crate::linalg::leading_minors(&sub).iter().all(|m| *m > Q::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, Family};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn br(g: &StructureLieAlgebra, i: usize, j: usize) -> Vec<(usize, i64)> {
        g.bracket_basis(i, j)
            .iter()
            .map(|(k, c)| (*k, c.to_integer().try_into().unwrap()))
            .collect()
    }

    #[test]
    fn sl2_brackets() {
        let g = sl(2).unwrap();
        assert_eq!(g.labels(), ["e", "f", "h"]);
        assert_eq!(br(&g, 0, 1), vec![(2, 1)]);
        assert_eq!(br(&g, 2, 0), vec![(0, 2)]);
        assert_eq!(br(&g, 2, 1), vec![(1, -2)]);
        let k = killing_form(&g);
        assert_eq!(k[2][2], q(8));
        assert_eq!(k[0][1], q(4));
        assert_eq!(k[2][0], q(0));
    }

    #[test]
    fn dimensions_of_constructors() {
        assert_eq!(sp(4).unwrap().dim(), 10);
        assert_eq!(so(5).unwrap().dim(), 10);
        assert_eq!(sl(4).unwrap().dim(), 15);
        assert_eq!(heisenberg().dim(), 3);
        assert_eq!(upper_triangular(3).unwrap().dim(), 6);
        assert_eq!(strictly_upper_triangular(4).unwrap().dim(), 6);
        assert!(matches!(sp(3), Err(LieAlgError::BadParameter(_))));
        assert!(matches!(sl(30), Err(LieAlgError::TooLarge { .. })));
    }

    #[test]
    fn killing_invariance() {
        for g in [sl(3).unwrap(), so(5).unwrap(), heisenberg(), upper_triangular(3).unwrap()] {
            let k = killing_form(&g);
            let n = g.dim();
            let e = full_basis(n);
            let kf = |u: &[Q], v: &[Q]| -> Q {
                (0..n)
                    .map(|i| (0..n).map(|j| &u[i] * &k[i][j] * &v[j]).sum::<Q>())
                    .sum()
            };
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        assert_eq!(kf(&g.bracket(&e[x], &e[y]), &e[z]), kf(&e[x], &g.bracket(&e[y], &e[z])));
                    }
                }
            }
        }
        assert!(killing_form(&abelian(3)).iter().flatten().all(Zero::is_zero));
        assert!(killing_form(&heisenberg()).iter().flatten().all(Zero::is_zero));
    }

    #[test]
    fn predicates_and_series() {
        let b = upper_triangular(3).unwrap();
        assert!(is_solvable(&b));
        assert!(!is_nilpotent(&b));
        assert!(is_nilpotent(&strictly_upper_triangular(4).unwrap()));
        assert!(is_semisimple(&sl(3).unwrap()));
        assert!(!is_semisimple(&heisenberg()));
        assert_eq!(series(&abelian(4), SeriesKind::Derived), vec![4, 0]);
        assert_eq!(series(&heisenberg(), SeriesKind::LowerCentral), vec![3, 1, 0]);
        assert_eq!(series(&sl(2).unwrap(), SeriesKind::Derived), vec![3]);
        assert!(is_simple(&sl(3).unwrap()));
        assert!(!is_simple(&so(4).unwrap()));
        assert!(is_semisimple(&so(4).unwrap()));
        assert!(killing_positive_on_cartan(&sl(4).unwrap()).unwrap());
    }

    #[test]
    fn root_decompositions() {
        let cases = [
            (sl(3).unwrap(), Family::A, 2),
            (sp(4).unwrap(), Family::C, 2),
            (so(5).unwrap(), Family::B, 2),
            (so(8).unwrap(), Family::D, 4),
            (sp(6).unwrap(), Family::C, 3),
        ];
        for (g, fam, r) in cases {
            let d = root_decomposition(&g).unwrap();
            let want = CartanMatrix::of_type(CartanType::new(fam, r).unwrap()).unwrap();
            assert!(d.cartan_matrix.find_isomorphism(&want).is_some(), "{fam:?}{r}");
            assert_eq!(d.roots.len(), d.root_system.num_roots());
        }
        assert_eq!(root_decomposition(&sl(3).unwrap()).unwrap().roots.len(), 6);
        let g2 = root_decomposition(&StructureLieAlgebra::g2()).unwrap();
        assert_eq!(g2.root_system.label(), "G2");
        assert!(matches!(root_decomposition(&heisenberg()), Err(LieAlgError::NoCartan)));
    }

    #[test]
    fn json_round_trip_and_errors() {
        let g = sl(3).unwrap();
        let text = g.to_json().to_string();
        assert_eq!(StructureLieAlgebra::from_json(&text).unwrap(), g);
        let bad = r#"{"dim":3,"basis":["a","b","c"],"brackets":[
            {"i":0,"j":1,"coeffs":{"1":"1"}},{"i":1,"j":2,"coeffs":{"0":"1"}}]}"#;
        assert!(matches!(StructureLieAlgebra::from_json(bad), Err(LieAlgError::JacobiFailure(..))));
        assert!(matches!(
            StructureLieAlgebra::from_json("{"),
            Err(LieAlgError::InvalidFile(_))
        ));
        let heis = r#"{"dim":3,"basis":["x","y","c"],"brackets":[{"i":0,"j":1,"coeffs":{"2":"1"}}]}"#;
        assert_eq!(StructureLieAlgebra::from_json(heis).unwrap(), heisenberg());
    }

    #[test]
    fn cohomology_small() {
        let g = sl(2).unwrap();
        let t = ce_cohomology(&g, &LieModule::trivial(&g), MAX_COHOMOLOGY_DIM).unwrap();
        assert_eq!(t.poincare(), Poly::from_ints([1, 0, 0, 1]));
        let a = abelian(2);
        assert_eq!(
            ce_cohomology(&a, &LieModule::trivial(&a), MAX_COHOMOLOGY_DIM).unwrap().poincare(),
            Poly::from_ints([1, 2, 1])
        );
        for n in 1..=6 {
            let v = LieModule::sl2_irrep(&g, n).unwrap();
            let c = ce_cohomology(&g, &v, MAX_COHOMOLOGY_DIM).unwrap();
            assert_eq!(c.dims, vec![0, 0, 0, 0], "V_{n}");
        }
        let v0 = LieModule::sl2_irrep(&g, 0).unwrap();
        assert_eq!(ce_cohomology(&g, &v0, 20).unwrap().dims, vec![1, 0, 0, 1]);
        // same answers without the weight restriction
        let h = heisenberg();
        let hc = ce_cohomology(&h, &LieModule::trivial(&h), 20).unwrap();
        assert!(!hc.weight_zero);
        assert_eq!(hc.dims, vec![1, 2, 2, 1]);
        let n4 = strictly_upper_triangular(3).unwrap();
        // H^0 with adjoint coefficients is the center
        assert_eq!(ce_cohomology(&n4, &LieModule::adjoint(&n4), 20).unwrap().dims[0], 1);
        let big = sl(5).unwrap();
        assert!(matches!(
            ce_cohomology(&big, &LieModule::trivial(&big), MAX_COHOMOLOGY_DIM),
            Err(LieAlgError::TooLarge { .. })
        ));
    }

    #[test]
    fn weight_zero_matches_full_complex() {
        for g in [sl(2).unwrap(), sl(3).unwrap(), so(5).unwrap()] {
            let mut j = g.to_json();
            j.as_object_mut().unwrap().remove("cartan");
            let bare = StructureLieAlgebra::from_json(&j.to_string()).unwrap();
            assert!(bare.cartan().is_none());
            for (m, mb) in [
                (LieModule::trivial(&g), LieModule::trivial(&bare)),
                (LieModule::adjoint(&g), LieModule::adjoint(&bare)),
            ] {
                let fast = ce_cohomology(&g, &m, MAX_COHOMOLOGY_DIM).unwrap();
                let full = ce_cohomology(&bare, &mb, MAX_COHOMOLOGY_DIM).unwrap();
                assert!(fast.weight_zero && !full.weight_zero);
                assert_eq!(fast.dims, full.dims);
            }
        }
    }

    #[test]
    fn invariant_forms_small() {
        assert_eq!(
            invariant_forms_poincare(&sl(3).unwrap()).unwrap(),
            &Poly::from_ints([1, 0, 0, 1]) * &Poly::from_ints([1, 0, 0, 0, 0, 1])
        );
        let b2 = &Poly::from_ints([1, 0, 0, 1]) * &Poly::from_ints([1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(invariant_forms_poincare(&so(5).unwrap()).unwrap(), b2);
        assert_eq!(invariant_forms_poincare(&sp(4).unwrap()).unwrap(), b2);
        assert_eq!(
            triple_product_invariant(&sl(2).unwrap()).unwrap(),
            TripleProduct { dim: 1, simple: true }
        );
        assert_eq!(
            triple_product_invariant(&abelian(3)).unwrap(),
            TripleProduct { dim: 1, simple: false }
        );
        assert_eq!(invariant_forms_poincare(&heisenberg()), Err(LieAlgError::NotSemisimple));
        let sl3 = sl(3).unwrap();
        assert_eq!(
            ce_cohomology(&sl3, &LieModule::trivial(&sl3), 20).unwrap().poincare(),
            invariant_forms_poincare(&sl3).unwrap()
        );
    }

    #[test]
    fn heisenberg_as_central_extension() {
        let a = abelian(2);
        let reps = h2_representatives(&a);
        assert_eq!(reps.len(), 1);
        let h = central_extension(&a, &reps[0], "c").unwrap();
        let want = central_extension(&a, &BTreeMap::from([((0, 1), q(1))]), "c").unwrap();
        // the cocycle is unique up to scale
        let c = reps[0][&(0, 1)].clone();
        assert!(!c.is_zero());
        assert_eq!(h.bracket_basis(0, 1), &[(2, c)]);
        assert_eq!(want.bracket_basis(0, 1), heisenberg().bracket_basis(0, 1));
        assert!(is_nilpotent(&h));
    }

    #[test]
    fn modules() {
        let g = sl(2).unwrap();
        let bad = vec![vec![vec![q(1)]], vec![vec![q(0)]], vec![vec![q(0)]]];
        assert!(matches!(LieModule::new(&g, bad), Err(LieAlgError::NotARepresentation(..))));
        let adj = LieModule::adjoint(&sl(3).unwrap());
        assert!(LieModule::new(&sl(3).unwrap(), adj.mats.clone()).is_ok());
        let text = r#"{"dim":2,"matrices":[[["0","1"],["0","0"]],[["0","0"],["1","0"]],[["1","0"],["0","-1"]]]}"#;
        assert_eq!(LieModule::from_json(&g, text).unwrap(), LieModule::sl2_irrep(&g, 1).unwrap());
    }

    #[test]
    fn random_suite_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut solvable = 0;
        for _ in 0..20 {
            let g = random_matrix_algebra(&mut rng, 8);
            assert!(g.dim() <= 8);
            let (a, b) = solvability_checks(&g);
            assert_eq!(a, b);
            solvable += a as usize;
        }
        assert!(solvable > 0 && solvable < 20);
    }
}
