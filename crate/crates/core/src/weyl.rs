//! Weyl group elements as words in simple reflections.
//!
//! A word `[i1, i2, ..., ik]` (letters 1-based) denotes the product
//! `s_{i1} s_{i2} ... s_{ik}`, so the rightmost letter acts first.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::poly::Poly;
use crate::rootsys::{CartanMatrix, Root, RootSystem, Weight};

pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("orbit exceeds the cap of {cap} elements")]
    OrbitTooLarge { cap: usize },
    #[error("weight has {got} coordinates, rank is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

impl WeylError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, WeylError::OrbitTooLarge { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self, WeylError> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i > rank) {
            return Err(WeylError::IndexOutOfRange { index: bad, rank });
        }
        Ok(WeylWord { letters })
    }

    pub fn identity() -> Self {
        WeylWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        WeylWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// The product `self * other`.
    pub fn compose(&self, other: &WeylWord) -> Self {
        WeylWord {
            letters: self.letters.iter().chain(&other.letters).copied().collect(),
        }
    }

    /// `(-1)` to the number of letters.
    pub fn sign(&self) -> i32 {
        if self.letters.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn check_weight(rs: &RootSystem, l: &Weight) -> Result<(), WeylError> {
    if l.rank() != rs.rank() {
        return Err(WeylError::DimensionMismatch {
            expected: rs.rank(),
            got: l.rank(),
        });
    }
    Ok(())
}

/// `s_i` on fundamental-weight coordinates, `i` zero-based.
pub fn reflect_weight(rs: &RootSystem, i: usize, l: &mut [i64]) {
    let c = l[i];
    if c == 0 {
        return;
    }
    let a = rs.cartan();
    for (j, x) in l.iter_mut().enumerate() {
        *x -= c * a.get(j, i);
    }
}

/// `s_i` on simple-root coordinates, `i` zero-based.
pub fn reflect_root(rs: &RootSystem, i: usize, b: &mut [i64]) {
    let a = rs.cartan();
    let c: i64 = (0..b.len()).map(|j| a.get(i, j) * b[j]).sum();
    b[i] -= c;
}

pub fn act(rs: &RootSystem, w: &WeylWord, l: &Weight) -> Result<Weight, WeylError> {
    check_weight(rs, l)?;
    let mut v = l.0.clone();
    for &i in w.letters.iter().rev() {
        reflect_weight(rs, i - 1, &mut v);
    }
    Ok(Weight(v))
}

pub fn act_root(rs: &RootSystem, w: &WeylWord, a: &Root) -> Root {
    let mut v = a.0.clone();
    for &i in w.letters.iter().rev() {
        reflect_root(rs, i - 1, &mut v);
    }
    Root(v)
}

/// Matrix of `w` on the weight lattice: column `j` is `w(omega_j)`.
pub fn action_matrix(rs: &RootSystem, w: &WeylWord) -> Vec<Vec<i64>> {
    let r = rs.rank();
    let cols: Vec<Vec<i64>> = (0..r)
        .map(|j| act(rs, w, &Weight::fundamental(r, j)).expect("rank matches").0)
        .collect();
    (0..r).map(|i| (0..r).map(|j| cols[j][i]).collect()).collect()
}

/// Number of positive roots sent to negative roots.
pub fn length(rs: &RootSystem, w: &WeylWord) -> usize {
    rs.positive_roots()
        .iter()
        .filter(|a| !act_root(rs, w, a).is_positive())
        .count()
}

/// Greedy descent to the dominant chamber. Returns the dominant weight,
/// a word `w` with `w(lambda)` dominant, and `(-1)^{l(w)}`.
pub fn to_dominant(rs: &RootSystem, l: &Weight) -> Result<(Weight, WeylWord, i32), WeylError> {
    check_weight(rs, l)?;
    let mut v = l.0.clone();
    let mut applied = Vec::new();
    while let Some(i) = v.iter().position(|&x| x < 0) {
        reflect_weight(rs, i, &mut v);
        applied.push(i + 1);
    }
    applied.reverse();
    let w = WeylWord { letters: applied };
    let s = w.sign();
    Ok((Weight(v), w, s))
}

/// Dominant representative only.
pub fn dominant(rs: &RootSystem, l: &[i64]) -> Vec<i64> {
    let mut v = l.to_vec();
    while let Some(i) = v.iter().position(|&x| x < 0) {
        reflect_weight(rs, i, &mut v);
    }
    v
}

/// The longest element and the vertex permutation induced by `-w_0`
/// (zero-based: `-w_0(omega_i) = omega_{perm[i]}`).
pub fn longest_element(rs: &RootSystem) -> (WeylWord, Vec<usize>) {
    let r = rs.rank();
    let minus_rho = rs.rho().neg();
    let (_, w, _) = to_dominant(rs, &minus_rho).expect("rank matches");
    let w0 = w.inverse();
    let perm = (0..r)
        .map(|i| {
            let img = act(rs, &w0, &Weight::fundamental(r, i)).expect("rank matches").neg();
            img.0.iter().position(|&x| x == 1).expect("-w0 permutes fundamental weights")
        })
        .collect();
    (w0, perm)
}

/// Breadth-first search of the orbit of the dominant representative of `l`.
/// A non-dominant point `v` has exactly one parent, `s_j v` with `j` its first
/// negative coordinate, so the search is a tree and needs no visited set.
/// Depth in the tree is the minimal length of a group element reaching `v`.
fn orbit_tree(rs: &RootSystem, l: &Weight, cap: usize) -> Result<Vec<(Vec<i64>, usize)>, WeylError> {
    check_weight(rs, l)?;
    let mut out = vec![(dominant(rs, &l.0), 0)];
    let mut k = 0;
    while k < out.len() {
        let depth = out[k].1 + 1;
        for i in 0..rs.rank() {
            if out[k].0[i] > 0 {
                let mut n = out[k].0.clone();
                reflect_weight(rs, i, &mut n);
                if n.iter().position(|&x| x < 0) == Some(i) {
                    if out.len() >= cap {
                        return Err(WeylError::OrbitTooLarge { cap });
                    }
                    out.push((n, depth));
                }
            }
        }
        k += 1;
    }
    Ok(out)
}

/// The orbit `W lambda`, sorted lexicographically.
pub fn orbit(rs: &RootSystem, l: &Weight, cap: usize) -> Result<Vec<Weight>, WeylError> {
    let mut out: Vec<Weight> = orbit_tree(rs, l, cap)?.into_iter().map(|(v, _)| Weight(v)).collect();
    out.sort_unstable();
    Ok(out)
}

/// Orbit of a dominant weight with, for each point, the minimal length of
/// a group element reaching it from the dominant representative.
pub fn orbit_with_lengths(
    rs: &RootSystem,
    l: &Weight,
    cap: usize,
) -> Result<Vec<(Weight, usize)>, WeylError> {
    let mut out: Vec<(Weight, usize)> = orbit_tree(rs, l, cap)?.into_iter().map(|(v, d)| (Weight(v), d)).collect();
    out.sort_unstable();
    Ok(out)
}

/// Splits off the last vertex: `W = W^J W_J` where `W_J` fixes the last
/// fundamental weight and `W^J` is in bijection with its orbit, so only
/// small orbits are ever enumerated.
fn parabolic_chain<T>(
    rs: &RootSystem,
    cap: usize,
    unit: T,
    combine: &dyn Fn(&[(Weight, usize)], T) -> T,
) -> Result<T, WeylError> {
    let r = rs.rank();
    if r == 0 {
        return Ok(unit);
    }
    let pts = orbit_with_lengths(rs, &Weight::fundamental(r, r - 1), cap)?;
    let rest = if r == 1 {
        unit
    } else {
        let sub: Vec<Vec<i64>> = rs.cartan().entries()[..r - 1]
            .iter()
            .map(|row| row[..r - 1].to_vec())
            .collect();
        let sub = CartanMatrix::new(sub).expect("principal submatrix of a Cartan matrix");
        parabolic_chain(&RootSystem::from_cartan(sub), cap, unit, combine)?
    };
    Ok(combine(&pts, rest))
}

pub fn group_order(rs: &RootSystem, cap: usize) -> Result<BigInt, WeylError> {
    parabolic_chain(rs, cap, BigInt::from(1), &|pts, rest| rest * BigInt::from(pts.len()))
}

/// `sum_{w in W} q^{l(w)}`: the orbit lengths of the last fundamental weight
/// are the lengths of minimal coset representatives, and lengths add.
pub fn length_generating_function(rs: &RootSystem, cap: usize) -> Result<Poly, WeylError> {
    parabolic_chain(rs, cap, Poly::from_ints([1]), &|pts, rest| {
        let max = pts.iter().map(|p| p.1).max().unwrap_or(0);
        let mut c = vec![0i64; max + 1];
        for (_, l) in pts {
            c[*l] += 1;
        }
        &Poly::from_ints(c) * &rest
    })
}
