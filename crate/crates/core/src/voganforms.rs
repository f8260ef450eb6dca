//! Real forms of simple Lie algebras through Vogan diagrams: validation,
//! flip equivalence, fixed-subalgebra dimensions and naming.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::rootsys::{CartanMatrix, CartanType, Family, RootSysError, RootSystem};

/// Largest rank accepted; orbits are enumerated over all colorings.
pub const MAX_VOGAN_RANK: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VoganError {
    #[error("bad involution: {0}")]
    BadInvolution(String),
    #[error("bad coloring: {0}")]
    BadColoring(String),
    #[error("vertex {0} is not black")]
    NotBlack(usize),
    #[error("no tabulated real form for the outer-class diagram {0}")]
    OuterNotTabulated(String),
    #[error("could not name the real form of {0}")]
    Unclassified(String),
    #[error("{0} is not a classical type")]
    NotClassical(String),
    #[error("rank {rank} exceeds the maximum {max}")]
    TooLarge { rank: usize, max: usize },
    #[error("invalid diagram JSON: {0}")]
    InvalidJson(String),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
}

impl VoganError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, VoganError::TooLarge { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    fn toggled(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// A Dynkin diagram with an involution and a coloring of its fixed vertices.
/// Vertices are 0-based internally and 1-based in JSON and text.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VoganDiagram {
    ty: CartanType,
    involution: Vec<usize>,
    colors: Vec<Option<Color>>,
}

#[derive(Deserialize)]
struct DiagramJson {
    #[serde(rename = "type")]
    ty: String,
    #[serde(default)]
    involution: Option<Vec<usize>>,
    #[serde(default)]
    colors: BTreeMap<String, Color>,
}

impl VoganDiagram {
    /// Validates `involution` and colors. Fixed vertices missing from
    /// `colors` are white.
    pub fn new(
        ty: CartanType,
        involution: Vec<usize>,
        colors: &BTreeMap<usize, Color>,
    ) -> Result<Self, VoganError> {
        let n = ty.rank;
        if n > MAX_VOGAN_RANK {
            return Err(VoganError::TooLarge { rank: n, max: MAX_VOGAN_RANK });
        }
        let a = CartanMatrix::of_type(ty)?;
        if involution.len() != n {
            return Err(VoganError::BadInvolution(format!(
                "expected {n} entries, got {}",
                involution.len()
            )));
        }
        if involution.iter().any(|&s| s >= n) {
            return Err(VoganError::BadInvolution("vertex out of range".into()));
        }
        if (0..n).any(|i| involution[involution[i]] != i) {
            return Err(VoganError::BadInvolution("not an involution".into()));
        }
        let preserves = (0..n).all(|i| (0..n).all(|j| a.get(i, j) == a.get(involution[i], involution[j])));
        if !preserves {
            return Err(VoganError::BadInvolution("does not preserve the Cartan matrix".into()));
        }
        let mut out = vec![None; n];
        for (i, slot) in out.iter_mut().enumerate() {
            if involution[i] == i {
                *slot = Some(Color::White);
            }
        }
        for (&v, &c) in colors {
            if v >= n {
                return Err(VoganError::BadColoring(format!("vertex {} out of range", v + 1)));
            }
            if involution[v] != v {
                return Err(VoganError::BadColoring(format!("vertex {} is not fixed", v + 1)));
            }
            out[v] = Some(c);
        }
        Ok(VoganDiagram { ty, involution, colors: out })
    }

    /// Inner-class diagram with the given black vertices.
    pub fn inner(ty: CartanType, black: &[usize]) -> Result<Self, VoganError> {
        let colors = black.iter().map(|&v| (v, Color::Black)).collect();
        Self::new(ty, (0..ty.rank).collect(), &colors)
    }

    pub fn from_json(text: &str) -> Result<Self, VoganError> {
        let raw: DiagramJson =
            serde_json::from_str(text).map_err(|e| VoganError::InvalidJson(e.to_string()))?;
        let ty: CartanType = raw.ty.parse()?;
        let involution = match raw.involution {
            Some(v) => v
                .into_iter()
                .map(|x| x.checked_sub(1).ok_or_else(|| VoganError::BadInvolution("vertices are 1-based".into())))
                .collect::<Result<Vec<_>, _>>()?,
            None => (0..ty.rank).collect(),
        };
        let mut colors = BTreeMap::new();
        for (k, c) in raw.colors {
            let v: usize = k
                .trim()
                .parse()
                .ok()
                .and_then(|v: usize| v.checked_sub(1))
                .ok_or_else(|| VoganError::BadColoring(format!("bad vertex key `{k}`")))?;
            colors.insert(v, c);
        }
        Self::new(ty, involution, &colors)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let colors: BTreeMap<String, Color> = self
            .colors
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|c| ((i + 1).to_string(), c)))
            .collect();
        json!({
            "type": self.ty.to_string(),
            "involution": self.involution.iter().map(|s| s + 1).collect::<Vec<_>>(),
            "colors": colors,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        self.colors.get(v).copied().flatten()
    }

    pub fn is_inner(&self) -> bool {
        self.involution.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn black_vertices(&self) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&i| self.colors[i] == Some(Color::Black))
            .collect()
    }

    /// Toggles every fixed neighbor `i` of the black vertex `j` with
    /// `<alpha_j^vee, alpha_i>` odd.
    pub fn flip(&self, j: usize) -> Result<Self, VoganError> {
        if self.color(j) != Some(Color::Black) {
            return Err(VoganError::NotBlack(j));
        }
        let a = CartanMatrix::of_type(self.ty)?;
        let mut out = self.clone();
        for i in 0..self.colors.len() {
            if i != j && a.get(j, i) % 2 != 0 {
                if let Some(c) = out.colors[i] {
                    out.colors[i] = Some(c.toggled());
                }
            }
        }
        Ok(out)
    }

    /// Relabels vertices by a diagram automorphism commuting with the involution.
    fn relabel(&self, tau: &[usize]) -> Self {
        let mut colors = vec![None; self.colors.len()];
        for (i, &c) in self.colors.iter().enumerate() {
            colors[tau[i]] = c;
        }
        VoganDiagram { ty: self.ty, involution: self.involution.clone(), colors }
    }

    fn neighbors(&self) -> Result<Vec<Self>, VoganError> {
        self.black_vertices().into_iter().map(|j| self.flip(j)).collect()
    }
}

impl fmt::Display for VoganDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.ty)?;
        for c in &self.colors {
            let s = match c {
                Some(Color::White) => '◦',
                Some(Color::Black) => '•',
                None => '=',
            };
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Lexicographically least member of a flip orbit, white before black.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub diagram: VoganDiagram,
    pub orbit_size: usize,
}

fn orbit(vd: &VoganDiagram, autos: &[Vec<usize>]) -> Result<Vec<VoganDiagram>, VoganError> {
    let mut seen: HashSet<VoganDiagram> = HashSet::from([vd.clone()]);
    let mut queue = VecDeque::from([vd.clone()]);
    let mut out = Vec::new();
    while let Some(d) = queue.pop_front() {
        let mut next = d.neighbors()?;
        next.extend(autos.iter().map(|t| d.relabel(t)));
        for n in next {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
        out.push(d);
    }
    Ok(out)
}

fn least(orbit: &[VoganDiagram]) -> VoganDiagram {
    orbit
        .iter()
        .min_by(|a, b| a.colors.cmp(&b.colors))
        .expect("orbit is nonempty")
        .clone()
}

/// Flip-orbit representative and orbit size.
pub fn canonical_form(vd: &VoganDiagram) -> Result<CanonicalForm, VoganError> {
    let orb = orbit(vd, &[])?;
    Ok(CanonicalForm { diagram: least(&orb), orbit_size: orb.len() })
}

pub fn flip_equivalent(a: &VoganDiagram, b: &VoganDiagram) -> Result<bool, VoganError> {
    Ok(canonical_form(a)?.diagram == canonical_form(b)?.diagram)
}

/// Dimensions of k and p for the involution encoded by a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FixedDims {
    pub dim_k: usize,
    pub dim_p: usize,
    /// Rank of k; equals the rank of g in the inner class.
    pub rank_k: Option<usize>,
}

impl FixedDims {
    /// Killing-form signature (positive, negative) of the real form.
    pub fn signature(&self) -> (usize, usize) {
        (self.dim_p, self.dim_k)
    }
}

/// Sign by which the pinned diagram automorphism acts on the root space of
/// a root fixed by the involution: -1 exactly when the root is
/// `beta + sigma(beta)` for a root `beta`.
fn pinned_sign(rs: &RootSystem, sigma: &[usize], alpha: &[i64]) -> i64 {
    let folded = rs.roots().iter().any(|b| {
        let sb = apply_sigma(sigma, &b.0);
        b.0 != sb && b.0.iter().zip(&sb).zip(alpha).all(|((x, y), z)| x + y == *z)
    });
    if folded {
        -1
    } else {
        1
    }
}

fn apply_sigma(sigma: &[usize], a: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len()];
    for (i, &c) in a.iter().enumerate() {
        out[sigma[i]] = c;
    }
    out
}

/// `dim k`, `dim p` and, for the inner class, `rank k`.
///
/// Inner class: theta acts on the root space of `alpha` by
/// `(-1)^{sum n_i c_i}`. Outer class: theta is the pinned automorphism
/// composed with that torus element, and `dim k = (dim g + tr theta) / 2`.
pub fn fixed_subalgebra_dims(vd: &VoganDiagram) -> Result<FixedDims, VoganError> {
    let rs = RootSystem::build(vd.ty)?;
    let dim_g = vd.ty.dim();
    let parity = |alpha: &[i64]| -> i64 {
        let s: i64 = alpha
            .iter()
            .zip(&vd.colors)
            .filter(|(_, c)| **c == Some(Color::Black))
            .map(|(n, _)| n)
            .sum();
        if s % 2 == 0 {
            1
        } else {
            -1
        }
    };
    if vd.is_inner() {
        let even = rs.positive_roots().iter().filter(|a| parity(&a.0) == 1).count();
        let dim_k = rs.rank() + 2 * even;
        return Ok(FixedDims { dim_k, dim_p: dim_g - dim_k, rank_k: Some(rs.rank()) });
    }
    let sigma = &vd.involution;
    let fixed_vertices = (0..sigma.len()).filter(|&i| sigma[i] == i).count() as i64;
    let trace: i64 = fixed_vertices
        + rs
            .roots()
            .iter()
            .filter(|a| apply_sigma(sigma, &a.0) == a.0)
            .map(|a| pinned_sign(&rs, sigma, &a.0) * parity(&a.0))
            .sum::<i64>();
    let dim_k = usize::try_from(dim_g as i64 + trace).expect("trace bounded by dim g") / 2;
    Ok(FixedDims { dim_k, dim_p: dim_g - dim_k, rank_k: None })
}

/// Involutive diagram automorphisms up to conjugation: the identity first,
/// then at most one nontrivial representative.
pub fn involution_classes(ty: CartanType) -> Vec<Vec<usize>> {
    let n = ty.rank;
    let id: Vec<usize> = (0..n).collect();
    let outer = match ty.family {
        Family::A if n >= 2 => Some((0..n).rev().collect()),
        Family::D => {
            let mut s = id.clone();
            s.swap(n - 2, n - 1);
            Some(s)
        }
        Family::E if n == 6 => Some(vec![5, 1, 4, 3, 2, 0]),
        _ => None,
    };
    std::iter::once(id).chain(outer).collect()
}

/// Named real form with its fixed-subalgebra data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealFormDescriptor {
    pub name: String,
    /// Isomorphism type of k where it is recorded.
    pub k: Option<String>,
    pub dims: FixedDims,
    pub inner: bool,
    /// Canonical representative of the class.
    pub diagram: VoganDiagram,
}

impl RealFormDescriptor {
    pub fn to_json(&self) -> serde_json::Value {
        let (pos, neg) = self.dims.signature();
        json!({
            "name": self.name,
            "k": self.k,
            "dim_k": self.dims.dim_k,
            "dim_p": self.dims.dim_p,
            "rank_k": self.dims.rank_k,
            "signature": [pos, neg],
            "inner": self.inner,
            "diagram": self.diagram.to_json(),
        })
    }
}

impl fmt::Display for RealFormDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<12} dim k = {:<4} dim p = {:<4}", self.name, self.dims.dim_k, self.dims.dim_p)?;
        if let Some(k) = &self.k {
            write!(f, " k = {k:<14}")?;
        }
        write!(f, " {}", self.diagram)
    }
}

fn so_dim(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// `so_a + so_b` without zero-dimensional summands.
fn so_sum(a: usize, b: usize) -> String {
    let (a, b) = (a.max(b), a.min(b));
    if b <= 1 {
        format!("so{a}")
    } else {
        format!("so{a}+so{b}")
    }
}

fn pq_name(prefix: &str, a: usize, b: usize) -> String {
    let (p, q) = if a >= b { (a, b) } else { (b, a) };
    if q == 0 {
        format!("{prefix}({p})")
    } else {
        format!("{prefix}({p},{q})")
    }
}

fn one_black(orbit: &[VoganDiagram]) -> Option<&VoganDiagram> {
    orbit.iter().find(|d| d.black_vertices().len() <= 1)
}

fn classical_name(vd: &VoganDiagram, orbit: &[VoganDiagram], dims: FixedDims) -> Result<(String, String), VoganError> {
    let n = vd.ty.rank;
    let unclassified = || VoganError::Unclassified(vd.to_string());
    if !vd.is_inner() {
        return match vd.ty.family {
            Family::A => {
                let m = n + 1;
                if m % 2 == 0 && dims.dim_k == (m / 2) * (m + 1) {
                    Ok((format!("sl({},H)", m / 2), format!("sp{m}")))
                } else if dims.dim_k == so_dim(m) {
                    Ok((format!("sl({m},R)"), format!("so{m}")))
                } else {
                    Err(VoganError::OuterNotTabulated(vd.to_string()))
                }
            }
            Family::D => (1..=n)
                .map(|q| (n - q, q))
                .filter(|&(p, q)| p + 1 >= q)
                .find(|&(p, q)| so_dim(2 * p + 1) + so_dim(2 * q - 1) == dims.dim_k)
                .map(|(p, q)| {
(format!("so({},{})", 2 * p + 1, 2 * q - 1), so_sum(2 * p + 1, 2 * q - 1))
                })
                .ok_or_else(|| VoganError::OuterNotTabulated(vd.to_string())),
            _ => Err(VoganError::NotClassical(vd.ty.to_string())),
        };
    }
    let rep = one_black(orbit).ok_or_else(unclassified)?;
    let black = rep.black_vertices().first().map(|&v| v + 1);
    let out = match (vd.ty.family, black) {
        (Family::A, None) => (format!("su({})", n + 1), format!("sl{}", n + 1)),
        (Family::A, Some(p)) => {
            let (a, b) = (p.max(n + 1 - p), p.min(n + 1 - p));
            (pq_name("su", a, b), format!("s(gl{a}+gl{b})"))
        }
        (Family::B, None) => (format!("so({})", 2 * n + 1), format!("so{}", 2 * n + 1)),
        (Family::B, Some(p)) => (pq_name("so", 2 * n - 2 * p + 1, 2 * p), so_sum(2 * n - 2 * p + 1, 2 * p)),
        (Family::C, None) => (format!("sp({n})"), format!("sp{}", 2 * n)),
        (Family::C, Some(p)) if p == n => (format!("sp({},R)", 2 * n), format!("gl{n}")),
        (Family::C, Some(p)) => {
            let (a, b) = (p.max(n - p), p.min(n - p));
            (pq_name("sp", a, b), format!("sp{}+sp{}", 2 * a, 2 * b))
        }
        (Family::D, None) => (format!("so({})", 2 * n), format!("so{}", 2 * n)),
        (Family::D, Some(p)) if p + 1 >= n => {
            if n == 4 {
                ("so(6,2)=so*(8)".to_string(), "gl4".to_string())
            } else {
                (format!("so*({})", 2 * n), format!("gl{n}"))
            }
        }
        (Family::D, Some(p)) => {
            let (a, b) = (2 * p, 2 * n - 2 * p);
            if n == 4 && a.min(b) == 2 {
                ("so(6,2)=so*(8)".to_string(), so_sum(a, b))
            } else {
                (pq_name("so", a, b), so_sum(a, b))
            }
        }
        _ => return Err(VoganError::NotClassical(vd.ty.to_string())),
    };
    Ok(out)
}

/// Exceptional real forms keyed by (type, inner, dim k).
const EXCEPTIONAL: &[(&str, bool, usize, &str, &str)] = &[
    ("G2", true, 14, "G2^c", "G2"),
    ("G2", true, 6, "G2^spl", "sl2+sl2"),
    ("F4", true, 52, "F4^c", "F4"),
    ("F4", true, 36, "F4^1", "so9"),
    ("F4", true, 24, "F4^spl", "sp6+sl2"),
    ("E6", true, 78, "E6^c", "E6"),
    ("E6", true, 46, "E6^2", "so10+so2"),
    ("E6", true, 38, "E6^3", "sl6+sl2"),
    ("E6", false, 52, "E6^1", "F4"),
    ("E6", false, 36, "E6^spl", "sp8"),
    ("E7", true, 133, "E7^c", "E7"),
    ("E7", true, 79, "E7^1", "E6+so2"),
    ("E7", true, 69, "E7^2", "so12+sl2"),
    ("E7", true, 63, "E7^spl", "sl8"),
    ("E8", true, 248, "E8^c", "E8"),
    ("E8", true, 136, "E8^1", "E7+sl2"),
    ("E8", true, 120, "E8^spl", "so16"),
];

fn is_classical(ty: CartanType) -> bool {
    matches!(ty.family, Family::A | Family::B | Family::C | Family::D)
}

fn centralizer(ty: CartanType, sigma: &[usize]) -> Result<Vec<Vec<usize>>, VoganError> {
    let a = CartanMatrix::of_type(ty)?;
    Ok(a.automorphisms()
        .into_iter()
        .filter(|t| (0..t.len()).all(|i| t[sigma[i]] == sigma[t[i]]))
        .collect())
}

fn describe(vd: &VoganDiagram, orbit: &[VoganDiagram]) -> Result<RealFormDescriptor, VoganError> {
    let dims = fixed_subalgebra_dims(vd)?;
    let inner = vd.is_inner();
    let (name, k) = if is_classical(vd.ty) {
        classical_name(vd, orbit, dims)?
    } else {
        let label = vd.ty.to_string();
        let hit = EXCEPTIONAL
            .iter()
            .find(|(t, i, d, _, _)| *t == label && *i == inner && *d == dims.dim_k);
        match hit {
            Some((_, _, _, name, k)) => (name.to_string(), k.to_string()),
            None if inner => return Err(VoganError::Unclassified(vd.to_string())),
            None => return Err(VoganError::OuterNotTabulated(vd.to_string())),
        }
    };
    Ok(RealFormDescriptor { name, k: Some(k), dims, inner, diagram: least(orbit) })
}

/// Names the real form of a classical diagram.
pub fn classify_classical(vd: &VoganDiagram) -> Result<RealFormDescriptor, VoganError> {
    if !is_classical(vd.ty) {
        return Err(VoganError::NotClassical(vd.ty.to_string()));
    }
    classify(vd)
}

/// Names the real form of any diagram.
pub fn classify(vd: &VoganDiagram) -> Result<RealFormDescriptor, VoganError> {
    let autos = centralizer(vd.ty, &vd.involution)?;
    let orb = orbit(vd, &autos)?;
    describe(vd, &orb)
}

/// All colorings of the fixed vertices of `sigma`.
fn all_colorings(ty: CartanType, sigma: &[usize]) -> Result<Vec<VoganDiagram>, VoganError> {
    let fixed: Vec<usize> = (0..sigma.len()).filter(|&i| sigma[i] == i).collect();
    (0u64..1 << fixed.len())
        .map(|mask| {
            let colors = fixed
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &v)| (v, Color::Black))
                .collect();
            VoganDiagram::new(ty, sigma.to_vec(), &colors)
        })
        .collect()
}

/// Classes of diagrams under flips and the diagram automorphisms commuting
/// with the involution, one per real form.
pub fn real_form_classes(ty: CartanType, sigma: &[usize]) -> Result<Vec<Vec<VoganDiagram>>, VoganError> {
    let autos = centralizer(ty, sigma)?;
    let mut seen: HashSet<VoganDiagram> = HashSet::new();
    let mut classes = Vec::new();
    for d in all_colorings(ty, sigma)? {
        if seen.contains(&d) {
            continue;
        }
        let orb = orbit(&d, &autos)?;
        seen.extend(orb.iter().cloned());
        classes.push(orb);
    }
    Ok(classes)
}

/// Flip classes only, without diagram automorphisms.
pub fn flip_classes(ty: CartanType, sigma: &[usize]) -> Result<Vec<CanonicalForm>, VoganError> {
    let mut seen: HashSet<VoganDiagram> = HashSet::new();
    let mut out = Vec::new();
    for d in all_colorings(ty, sigma)? {
        if seen.contains(&d) {
            continue;
        }
        let orb = orbit(&d, &[])?;
        seen.extend(orb.iter().cloned());
        out.push(CanonicalForm { diagram: least(&orb), orbit_size: orb.len() });
    }
    Ok(out)
}

/// Every real form of a simple type, inner class first.
pub fn enumerate_real_forms(ty: CartanType) -> Result<Vec<RealFormDescriptor>, VoganError> {
    let mut out = Vec::new();
    for sigma in involution_classes(ty) {
        for orb in real_form_classes(ty, &sigma)? {
            out.push(describe(&orb[0], &orb)?);
        }
    }
    Ok(out)
}
