//! Highest-weight modules: Kostant partition function, weight
//! multiplicities, characters, dimensions and tensor products.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{q, Q};
use crate::poly::Poly;
use crate::rootsys::{Root, RootSysError, RootSystem, Weight};
use crate::weyl::{self, WeylError, DEFAULT_ORBIT_CAP};

pub const DEFAULT_MAX_DIM: u64 = 1_000_000;
pub const DEFAULT_MAX_PRODUCT_DIM: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} is not minuscule")]
    NotMinuscule(Weight),
    #[error("dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: String, cap: u64 },
    #[error("weight has {got} coordinates, rank is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Kostant partition function overflowed")]
    Overflow,
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
}

impl CharError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            CharError::TooLarge { .. } | CharError::Weyl(WeylError::OrbitTooLarge { .. })
        )
    }
}

fn check(rs: &RootSystem, l: &Weight) -> Result<(), CharError> {
    if l.rank() != rs.rank() {
        return Err(CharError::DimensionMismatch {
            expected: rs.rank(),
            got: l.rank(),
        });
    }
    Ok(())
}

fn check_dominant(rs: &RootSystem, l: &Weight) -> Result<(), CharError> {
    check(rs, l)?;
    if !l.is_dominant() {
        return Err(CharError::NotDominant(l.clone()));
    }
    Ok(())
}

/// Integer conversion from weight to root coordinates: `c = adj v / det`.
struct RootCoords {
    adj: Vec<Vec<i64>>,
    det: i64,
}

impl RootCoords {
    fn new(rs: &RootSystem) -> Self {
        let det = rs.cartan().determinant().to_i64().expect("small determinant");
        let r = rs.rank();
        let adj = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let e = rs.weight_to_root(&Weight::fundamental(r, j).0);
                        (&e[i] * q(det)).to_integer().to_i64().expect("integral adjugate")
                    })
                    .collect()
            })
            .collect();
        RootCoords { adj, det }
    }

    /// Writes the root coordinates of `v` into `out`; false if `v` is not in
    /// the root lattice.
    fn convert_into(&self, v: &[i64], out: &mut [i64]) -> bool {
        for (o, row) in out.iter_mut().zip(&self.adj) {
            let s: i64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
            if s % self.det != 0 {
                return false;
            }
            *o = s / self.det;
        }
        true
    }

    fn convert(&self, v: &[i64]) -> Option<Vec<i64>> {
        self.adj
            .iter()
            .map(|row| {
                let s: i64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                (s % self.det == 0).then_some(s / self.det)
            })
            .collect()
    }
}

/// Memoized Kostant partition function.
pub struct KostantTable {
    /// Non-simple positive roots first; simple roots are handled in closed form.
    order: Vec<Vec<i64>>,
    /// One table per position in `order`.
    memo: Vec<HashMap<Vec<i64>, u128>>,
}

impl KostantTable {
    pub fn new(rs: &RootSystem) -> Self {
        let order: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .filter(|a| a.height() > 1)
            .rev()
            .map(|a| a.0.clone())
            .collect();
        KostantTable {
            memo: vec![HashMap::new(); order.len()],
            order,
        }
    }

    /// Number of ways to write `beta` (root coordinates) as a sum of
    /// positive roots.
    pub fn p(&mut self, beta: &[i64]) -> Result<u128, CharError> {
        if beta.iter().any(|&x| x < 0) {
            return Ok(0);
        }
        self.go(0, beta)
    }

    fn go(&mut self, k: usize, g: &[i64]) -> Result<u128, CharError> {
        if k == self.order.len() {
            return Ok(1);
        }
        if let Some(&v) = self.memo[k].get(g) {
            return Ok(v);
        }
        let a = self.order[k].clone();
        let mut total: u128 = 0;
        let mut cur = g.to_vec();
        loop {
            total = total
                .checked_add(self.go(k + 1, &cur)?)
                .ok_or(CharError::Overflow)?;
            for (x, y) in cur.iter_mut().zip(&a) {
                *x -= y;
            }
            if cur.iter().any(|&x| x < 0) {
                break;
            }
        }
        self.memo[k].insert(g.to_vec(), total);
        Ok(total)
    }
}

pub fn kostant_p(rs: &RootSystem, beta: &Root) -> Result<u128, CharError> {
    KostantTable::new(rs).p(&beta.0)
}

/// Dominant weights `mu` with `lambda - mu` in `Q_+`, sorted.
pub fn dominant_weights_below(rs: &RootSystem, l: &Weight) -> Vec<Weight> {
    let pos: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .map(|a| rs.root_to_weight(&a.0))
        .collect();
    let mut seen: HashSet<Weight> = HashSet::from([l.clone()]);
    let mut queue = VecDeque::from([l.clone()]);
    while let Some(m) = queue.pop_front() {
        for a in &pos {
            let n = m.sub(a);
            if n.is_dominant() && seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}

/// Kostant multiplicity evaluator for a fixed highest weight.
struct Multiplicity {
    coords: RootCoords,
    table: KostantTable,
    shifted: Vec<(Vec<i64>, i32)>,
    rho: Vec<i64>,
    diff: Vec<i64>,
    beta: Vec<i64>,
}

impl Multiplicity {
    fn new(rs: &RootSystem, l: &Weight) -> Result<Self, CharError> {
        let lr = l.add(&rs.rho());
        let shifted = weyl::orbit_with_lengths(rs, &lr, DEFAULT_ORBIT_CAP)?
            .into_iter()
            .map(|(w, len)| (w.0, if len % 2 == 0 { 1 } else { -1 }))
            .collect();
        Ok(Multiplicity {
            coords: RootCoords::new(rs),
            table: KostantTable::new(rs),
            shifted,
            rho: rs.rho().0,
            diff: vec![0; rs.rank()],
            beta: vec![0; rs.rank()],
        })
    }

    fn at(&mut self, g: &Weight) -> Result<u64, CharError> {
        let mut s: i128 = 0;
        for (w, e) in &self.shifted {
            for (d, ((a, b), r)) in self.diff.iter_mut().zip(w.iter().zip(&g.0).zip(&self.rho)) {
                *d = a - b - r;
            }
            if !self.coords.convert_into(&self.diff, &mut self.beta) {
                return Ok(0);
            }
            let p = self.table.p(&self.beta)?;
            s += *e as i128 * i128::try_from(p).map_err(|_| CharError::Overflow)?;
        }
        u64::try_from(s).map_err(|_| CharError::Overflow)
    }
}

/// `dim L_lambda[gamma]` by the Kostant multiplicity formula.
pub fn weight_multiplicity(rs: &RootSystem, l: &Weight, g: &Weight) -> Result<u64, CharError> {
    check_dominant(rs, l)?;
    check(rs, g)?;
    Multiplicity::new(rs, l)?.at(g)
}

/// Multiplicities of the dominant weights of `L_lambda`.
pub fn dominant_multiplicities(
    rs: &RootSystem,
    l: &Weight,
) -> Result<BTreeMap<Weight, u64>, CharError> {
    check_dominant(rs, l)?;
    let mut m = Multiplicity::new(rs, l)?;
    let mut out = BTreeMap::new();
    for mu in dominant_weights_below(rs, l) {
        let v = m.at(&mu)?;
        if v > 0 {
            out.insert(mu, v);
        }
    }
    Ok(out)
}

/// A Weyl-invariant finite sum of weights with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, u64>,
}

#[derive(Serialize)]
struct CharTerm<'a> {
    weight: &'a [i64],
    mult: u64,
}

impl FormalCharacter {
    pub fn from_terms(terms: BTreeMap<Weight, u64>) -> Self {
        FormalCharacter {
            terms: terms.into_iter().filter(|(_, m)| *m > 0).collect(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<Weight, u64> {
        &self.terms
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn negated(&self) -> FormalCharacter {
        FormalCharacter {
            terms: self.terms.iter().map(|(w, m)| (w.neg(), *m)).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let v: Vec<CharTerm> = self
            .terms
            .iter()
            .map(|(w, m)| CharTerm { weight: &w.0, mult: *m })
            .collect();
        serde_json::to_value(v).expect("serializable")
    }
}

fn ensure_dim(rs: &RootSystem, l: &Weight, cap: u64) -> Result<u64, CharError> {
    let d = dimension(rs, l)?;
    match d.to_u64() {
        Some(x) if x <= cap => Ok(x),
        _ => Err(CharError::TooLarge {
            dim: d.to_string(),
            cap,
        }),
    }
}

pub fn character(rs: &RootSystem, l: &Weight, max_dim: u64) -> Result<FormalCharacter, CharError> {
    check_dominant(rs, l)?;
    ensure_dim(rs, l, max_dim)?;
    let mut terms = Vec::new();
    for (mu, m) in dominant_multiplicities(rs, l)? {
        terms.extend(weyl::orbit(rs, &mu, DEFAULT_ORBIT_CAP)?.into_iter().map(|w| (w, m)));
    }
    // orbits are disjoint sorted runs, which the bulk build merges
    Ok(FormalCharacter { terms: terms.into_iter().collect() })
}

/// Weyl dimension formula, exact.
pub fn dimension(rs: &RootSystem, l: &Weight) -> Result<BigUint, CharError> {
    check_dominant(rs, l)?;
    let lr = l.add(&rs.rho());
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for a in rs.positive_roots() {
        num *= rs.weight_root_pairing(&lr.0, &a.0);
        den *= rs.weight_root_pairing(&rs.rho().0, &a.0);
    }
    debug_assert!((&num % &den).is_zero());
    Ok((num / den).to_biguint().expect("positive"))
}

/// Principal specialization: `prod (1 - q^{2(alpha, lambda+rho)}) / (1 - q^{2(alpha, rho)})`.
pub fn q_dimension(rs: &RootSystem, l: &Weight) -> Result<Poly, CharError> {
    check_dominant(rs, l)?;
    let lr = l.add(&rs.rho());
    let mut num = Poly::one();
    let mut den = Poly::one();
    let factor = |k: i64| {
        let mut c = vec![0i64; 2 * k as usize + 1];
        c[0] = 1;
        c[2 * k as usize] = -1;
        Poly::from_ints(c)
    };
    for a in rs.positive_roots() {
        num = &num * &factor(rs.weight_root_pairing(&lr.0, &a.0));
        den = &den * &factor(rs.weight_root_pairing(&rs.rho().0, &a.0));
    }
    Ok(num.div_exact(&den).expect("principal specialization is a polynomial"))
}

/// Multiplicity of each dominant weight in `L_lambda (x) L_mu`.
fn product_dominant(
    a: &FormalCharacter,
    b: &FormalCharacter,
) -> BTreeMap<Weight, i64> {
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (x, m) in &a.terms {
        for (y, n) in &b.terms {
            let s = x.add(y);
            if s.is_dominant() {
                *out.entry(s).or_insert(0) += (m * n) as i64;
            }
        }
    }
    out
}

/// Decomposition of `L_lambda (x) L_mu` by peeling off highest terms.
pub fn tensor_decompose(
    rs: &RootSystem,
    l: &Weight,
    m: &Weight,
    max_product_dim: u64,
) -> Result<BTreeMap<Weight, u64>, CharError> {
    check_dominant(rs, l)?;
    check_dominant(rs, m)?;
    let dl = dimension(rs, l)?;
    let dm = dimension(rs, m)?;
    let prod = &dl * &dm;
    if prod > BigUint::from(max_product_dim) {
        return Err(CharError::TooLarge {
            dim: prod.to_string(),
            cap: max_product_dim,
        });
    }
    let cl = character(rs, l, u64::MAX)?;
    let cm = character(rs, m, u64::MAX)?;
    let mut rem = product_dominant(&cl, &cm);
    let top = l.add(m);
    let coords = RootCoords::new(rs);
    let depth = |nu: &Weight| -> i64 {
        coords
            .convert(&top.sub(nu).0)
            .expect("in the root lattice")
            .iter()
            .sum()
    };
    let mut out = BTreeMap::new();
    loop {
        rem.retain(|_, v| *v != 0);
        let Some(nu) = rem
            .keys()
            .min_by(|x, y| depth(x).cmp(&depth(y)).then_with(|| y.cmp(x)))
            .cloned()
        else {
            break;
        };
        let n = rem[&nu];
        assert!(n > 0, "peeling produced a negative multiplicity");
        for (w, k) in dominant_multiplicities(rs, &nu)? {
            *rem.entry(w).or_insert(0) -= n * k as i64;
        }
        out.insert(nu, n as u64);
    }
    Ok(out)
}

/// `L_omega (x) L_lambda = sum over gamma in W omega of L_{lambda + gamma}`,
/// where non-dominant `lambda + gamma` cancel.
pub fn tensor_minuscule(
    rs: &RootSystem,
    om: &Weight,
    l: &Weight,
) -> Result<BTreeMap<Weight, u64>, CharError> {
    check_dominant(rs, l)?;
    check_dominant(rs, om)?;
    if !rs.is_minuscule(om) {
        return Err(CharError::NotMinuscule(om.clone()));
    }
    let mut out = BTreeMap::new();
    for g in weyl::orbit(rs, om, DEFAULT_ORBIT_CAP)? {
        let nu = l.add(&g);
        if nu.is_dominant() {
            *out.entry(nu).or_insert(0) += 1;
        } else {
            // nu + rho lies on a wall: some coordinate of nu is -1
            assert!(
                nu.0.contains(&-1),
                "minuscule shift left the closed shifted chamber"
            );
        }
    }
    Ok(out)
}

pub fn dual_highest_weight(rs: &RootSystem, l: &Weight) -> Result<Weight, CharError> {
    check(rs, l)?;
    let (_, perm) = weyl::longest_element(rs);
    let mut out = vec![0; rs.rank()];
    for (i, &p) in perm.iter().enumerate() {
        out[p] = l.0[i];
    }
    Ok(Weight(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FsType {
    Complex,
    Real,
    Quaternionic,
}

impl std::fmt::Display for FsType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FsType::Complex => "complex",
            FsType::Real => "real",
            FsType::Quaternionic => "quaternionic",
        };
        write!(f, "{s}")
    }
}

pub fn frobenius_schur_type(rs: &RootSystem, l: &Weight) -> Result<FsType, CharError> {
    check_dominant(rs, l)?;
    if dual_highest_weight(rs, l)? != *l {
        return Ok(FsType::Complex);
    }
    let p = rs.two_rho_check_pairing(&l.0);
    debug_assert!(p.is_integer());
    Ok(if num_integer::Integer::is_even(&p.to_integer()) {
        FsType::Real
    } else {
        FsType::Quaternionic
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Casimir {
    /// `(lambda, lambda + 2 rho)` with `(alpha_i, alpha_i) = 2 d_i`.
    pub value: Q,
    /// The same quantity for the adjoint module, when `rs` is irreducible.
    pub adjoint: Option<Q>,
}

impl Casimir {
    pub fn ratio_to_adjoint(&self) -> Option<Q> {
        self.adjoint.as_ref().map(|a| &self.value / a)
    }
}

pub fn casimir_eigenvalue(rs: &RootSystem, l: &Weight) -> Result<Casimir, CharError> {
    check_dominant(rs, l)?;
    let c = |w: &Weight| {
        let s = w.add(&rs.rho()).add(&rs.rho());
        rs.weight_pairing(&w.0, &s.0)
    };
    let adjoint = rs
        .highest_root()
        .ok()
        .map(|(t, _)| c(&rs.root_to_weight(&t.0)));
    Ok(Casimir {
        value: c(l),
        adjoint,
    })
}

/// Sparse Laurent polynomial in the weight lattice.
pub type Laurent = BTreeMap<Vec<i64>, i64>;

/// `p * (1 - e^{shift})`. Translation preserves the lexicographic order, so
/// both summands come sorted and are merged in one pass.
fn laurent_mul_binomial(p: Laurent, shift: &[i64]) -> Laurent {
    let shifted: Vec<(Vec<i64>, i64)> = p
        .iter()
        .map(|(k, v)| (k.iter().zip(shift).map(|(a, b)| a + b).collect(), -v))
        .collect();
    let mut out = Vec::with_capacity(p.len() + shifted.len());
    let mut a = p.into_iter().peekable();
    let mut b = shifted.into_iter().peekable();
    loop {
        let next = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                let (k, v) = a.next().expect("peeked");
                Some((k, v + b.next().expect("peeked").1))
            }
            (Some(x), Some(y)) if x.0 < y.0 => a.next(),
            (Some(_), Some(_)) | (None, Some(_)) => b.next(),
            (Some(_), None) => a.next(),
            (None, None) => break,
        };
        out.extend(next.filter(|e| e.1 != 0));
    }
    out.into_iter().collect()
}

/// Both sides of `prod_{alpha>0} (1 - e^{-alpha}) chi_lambda
/// = sum_w eps(w) e^{w(lambda+rho) - rho}`.
pub fn denominator_identity_sides(
    rs: &RootSystem,
    l: &Weight,
    ch: &FormalCharacter,
) -> Result<(Laurent, Laurent), CharError> {
    let mut lhs: Laurent = ch.terms.iter().map(|(w, m)| (w.0.clone(), *m as i64)).collect();
    for a in rs.positive_roots() {
        let na = rs.root_to_weight(&a.0).neg();
        lhs = laurent_mul_binomial(lhs, &na.0);
    }
    // l + rho is regular, so the orbit points are distinct
    let lr = l.add(&rs.rho());
    let rhs = weyl::orbit_with_lengths(rs, &lr, DEFAULT_ORBIT_CAP)?
        .into_iter()
        .map(|(w, len)| (w.sub(&rs.rho()).0, if len % 2 == 0 { 1 } else { -1 }))
        .collect();
    Ok((lhs, rhs))
}

/// All dominant weights whose module has dimension at most `cap`.
pub fn dominant_weights_up_to_dim(rs: &RootSystem, cap: u64) -> Vec<Weight> {
    let r = rs.rank();
    let cap = BigUint::from(cap);
    let start = Weight::zero(r);
    let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for i in 0..r {
            let mut n = w.clone();
            n.0[i] += 1;
            if !seen.contains(&n) && dimension(rs, &n).expect("dominant") <= cap {
                seen.insert(n.clone());
                queue.push_back(n);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}
