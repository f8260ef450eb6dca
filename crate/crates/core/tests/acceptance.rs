//! End-to-end acceptance checks, one printed line per criterion.
//!
//! All comparisons are exact (rational or integer equality). Each criterion
//! also carries a wall-clock budget, enforced alongside the result.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use liekit::chars;
use liekit::freelie::{self, FreeSeries};
use liekit::liealg::{self, LieModule, StructureLieAlgebra, MAX_COHOMOLOGY_DIM};
use liekit::linalg::{self, q, q_frac, QMatrix, Q};
use liekit::poly::Poly;
use liekit::rootsys::{CartanType, Root, RootSystem, Weight};
use liekit::selftest;
use liekit::symfun::{self, Partition, PieriKind, Space};
use liekit::voganforms::{self, VoganDiagram};
use liekit::weyl;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).expect("valid label")
}

fn ty(label: &str) -> CartanType {
    label.parse().expect("valid label")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Every irreducible type of rank at most `max`, exceptional ones included.
fn irreducible_types(max: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.push(format!("A{n}"));
    }
    for n in 2..=max {
        out.push(format!("B{n}"));
    }
    for n in 3..=max {
        out.push(format!("C{n}"));
    }
    for n in 4..=max {
        out.push(format!("D{n}"));
    }
    for (l, r) in [("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)] {
        if r <= max {
            out.push(l.to_string());
        }
    }
    out
}

fn c01_root_counts() -> Check {
    for (l, n) in [("A2", 6), ("G2", 12), ("F4", 48), ("E6", 72), ("E7", 126), ("E8", 240)] {
        let r = rs(l);
        ensure!(r.num_roots() == n, "{l}: {} roots, expected {n}", r.num_roots());
        ensure!(r.roots().len() == n, "{l}: root list length");
    }
    Ok(())
}

fn c02_exponents() -> Check {
    let mut cases: Vec<(String, Vec<i64>)> = Vec::new();
    for n in 2..=6i64 {
        let odd: Vec<i64> = (1..=n).map(|k| 2 * k - 1).collect();
        cases.push((format!("B{n}"), odd.clone()));
        cases.push((format!("C{n}"), odd));
    }
    for n in 4..=8i64 {
        let mut e: Vec<i64> = (1..n).map(|k| 2 * k - 1).collect();
        e.push(n - 1);
        e.sort();
        cases.push((format!("D{n}"), e));
    }
    cases.push(("F4".into(), vec![1, 5, 7, 11]));
    cases.push(("E6".into(), vec![1, 4, 5, 7, 8, 11]));
    cases.push(("E7".into(), vec![1, 5, 7, 9, 11, 13, 17]));
    cases.push(("E8".into(), vec![1, 7, 11, 13, 17, 19, 23, 29]));
    for (l, want) in &cases {
        let r = rs(l);
        let got = r.exponents().map_err(err)?;
        ensure!(&got == want, "{l}: exponents {got:?}, expected {want:?}");
        let sum: i64 = got.iter().sum();
        ensure!(sum as usize == r.positive_roots().len(), "{l}: sum of exponents {sum} vs |R+|");
    }
    Ok(())
}

fn c03_coxeter() -> Check {
    let mut cases: Vec<(String, (i64, i64))> = Vec::new();
    for n in 2..=9i64 {
        cases.push((format!("A{}", n - 1), (n, n)));
    }
    for n in 2..=8i64 {
        cases.push((format!("B{n}"), (2 * n, 2 * n - 1)));
        cases.push((format!("C{n}"), (2 * n, n + 1)));
    }
    for n in 4..=8i64 {
        cases.push((format!("D{n}"), (2 * n - 2, 2 * n - 2)));
    }
    for (l, h) in [("G2", (6, 4)), ("F4", (12, 9)), ("E6", (12, 12)), ("E7", (18, 18)), ("E8", (30, 30))] {
        cases.push((l.into(), h));
    }
    for (l, want) in cases {
        let got = rs(&l).coxeter_numbers().map_err(err)?;
        ensure!(got == want, "{l}: (h, h_dual) = {got:?}, expected {want:?}");
    }
    Ok(())
}

fn minuscule_dims(r: &RootSystem) -> Result<Vec<BigUint>, String> {
    let mut dims = r
        .minuscule_weights()
        .map_err(err)?
        .iter()
        .filter(|w| w.0.iter().any(|&x| x != 0))
        .map(|w| chars::dimension(r, w).map_err(err))
        .collect::<Result<Vec<_>, _>>()?;
    dims.sort();
    Ok(dims)
}

fn c04_minuscule() -> Check {
    for l in irreducible_types(8) {
        let r = rs(&l);
        let count = r.minuscule_weights().map_err(err)?.len();
        ensure!(BigInt::from(count) == r.cartan().determinant(), "{l}: {count} minuscule weights vs det A");
    }
    let big = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
    for n in 2..=8u32 {
        ensure!(minuscule_dims(&rs(&format!("B{n}")))? == big(&[1 << n]), "B{n} spin module");
    }
    for n in 4..=8u64 {
        let s = 1u64 << (n - 1);
        let mut want = vec![2 * n, s, s];
        want.sort();
        ensure!(minuscule_dims(&rs(&format!("D{n}")))? == big(&want), "D{n} minuscule dims");
    }
    ensure!(minuscule_dims(&rs("E6"))? == big(&[27, 27]), "E6 minuscule dims");
    ensure!(minuscule_dims(&rs("E7"))? == big(&[56]), "E7 minuscule dims");
    for l in ["G2", "F4", "E8"] {
        ensure!(minuscule_dims(&rs(l))?.is_empty(), "{l} has a nonzero minuscule weight");
    }
    Ok(())
}

fn c05_pq() -> Check {
    let mut cases: Vec<(String, Vec<u64>)> = Vec::new();
    for n in 2..=9u64 {
        cases.push((format!("A{}", n - 1), vec![n]));
    }
    for n in 2..=8 {
        cases.push((format!("B{n}"), vec![2]));
        cases.push((format!("C{n}"), vec![2]));
    }
    for n in 4..=8 {
        cases.push((format!("D{n}"), if n % 2 == 1 { vec![4] } else { vec![2, 2] }));
    }
    for (l, v) in [("E6", vec![3]), ("E7", vec![2]), ("E8", vec![]), ("F4", vec![]), ("G2", vec![])] {
        cases.push((l.into(), v));
    }
    for (l, want) in cases {
        let got = rs(&l).weight_lattice_quotient();
        ensure!(got.invariants == want, "{l}: P/Q = {got}, expected invariants {want:?}");
    }
    Ok(())
}

fn c06_characters() -> Check {
    const MAX_DIM: u64 = 10_000;
    let types = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"];
    for l in types {
        let r = rs(l);
        for w in chars::dominant_weights_up_to_dim(&r, MAX_DIM) {
            let ch = chars::character(&r, &w, MAX_DIM).map_err(err)?;
            let dim = chars::dimension(&r, &w).map_err(err)?;
            ensure!(BigUint::from(ch.dimension()) == dim, "{l} {w}: multiplicity sum vs dimension formula");
            let (lhs, rhs) = chars::denominator_identity_sides(&r, &w, &ch).map_err(err)?;
            ensure!(lhs == rhs, "{l} {w}: denominator identity");
        }
        let mins: Vec<Weight> = r
            .minuscule_weights()
            .map_err(err)?
            .into_iter()
            .filter(|w| w.0.iter().any(|&x| x != 0))
            .collect();
        for om in &mins {
            for w in chars::dominant_weights_up_to_dim(&r, 500) {
                let peel = chars::tensor_decompose(&r, om, &w, chars::DEFAULT_MAX_PRODUCT_DIM).map_err(err)?;
                let rule = chars::tensor_minuscule(&r, om, &w).map_err(err)?;
                ensure!(peel == rule, "{l}: {om} x {w} minuscule rule vs peeling");
            }
        }
    }
    let a1 = rs("A1");
    for m in 0..=15i64 {
        for n in 0..=15i64 {
            let got = chars::tensor_decompose(&a1, &Weight(vec![m]), &Weight(vec![n]), chars::DEFAULT_MAX_PRODUCT_DIM)
                .map_err(err)?;
            let want: BTreeMap<Weight, u64> = (0..=m.min(n)).map(|k| (Weight(vec![m + n - 2 * k]), 1)).collect();
            ensure!(got == want, "V_{m} x V_{n} Clebsch-Gordan");
        }
    }
    Ok(())
}

fn c07_kostant() -> Check {
    let r = rs("A2");
    let positive = [[1i64, 0], [0, 1], [1, 1]];
    for k1 in 0..=20i64 {
        for k2 in 0..=20i64 {
            // enumerate multiplicities of the three positive roots
            let mut brute = 0u128;
            for a in 0..=k1 {
                for b in 0..=k2 {
                    for c in 0..=k1.min(k2) {
                        let s: Vec<i64> = (0..2)
                            .map(|i| a * positive[0][i] + b * positive[1][i] + c * positive[2][i])
                            .collect();
                        if s == [k1, k2] {
                            brute += 1;
                        }
                    }
                }
            }
            let p = chars::kostant_p(&r, &Root(vec![k1, k2])).map_err(err)?;
            ensure!(p == brute, "p({k1},{k2}) = {p}, brute force {brute}");
            ensure!(p == (k1.min(k2) + 1) as u128, "p({k1},{k2}) = {p}, closed form");
        }
    }
    Ok(())
}

fn nilpotent_exp(x: &[Vec<Q>], terms: usize) -> QMatrix {
    let n = x.len();
    let mut out = linalg::identity(n);
    let mut power = linalg::identity(n);
    let mut fact = Q::one();
    for k in 1..=terms {
        power = linalg::mat_mul(&power, x);
        fact *= q(k as i64);
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v += &power[i][j] / &fact;
            }
        }
    }
    out
}

fn unipotent_log(u: &[Vec<Q>], terms: usize) -> QMatrix {
    let n = u.len();
    let x = linalg::mat_sub(u, &linalg::identity(n));
    let mut out = linalg::zero_matrix(n, n);
    let mut power = linalg::identity(n);
    for k in 1..=terms {
        power = linalg::mat_mul(&power, &x);
        let c = q_frac(if k % 2 == 1 { 1 } else { -1 }, k as i64);
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v += &power[i][j] * &c;
            }
        }
    }
    out
}

fn strictly_upper(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if j > i { q_frac(rng.gen_range(-4..=4), rng.gen_range(1..=3)) } else { Q::zero() })
                .collect()
        })
        .collect()
}

fn c08_bch() -> Check {
    let b = freelie::bch(8, freelie::DEFAULT_BCH_MAX_ORDER).map_err(err)?;
    let s = &b.series;
    ensure!(s.coeff(&[0, 1]) == q_frac(1, 2), "coefficient of xy");
    ensure!(s.coeff(&[1, 0]) == q_frac(-1, 2), "coefficient of yx");
    let x = FreeSeries::generator(2, 3, 0);
    let y = FreeSeries::generator(2, 3, 1);
    let xxy = x.commutator(&x.commutator(&y).map_err(err)?).map_err(err)?;
    let yyx = y.commutator(&y.commutator(&x).map_err(err)?).map_err(err)?;
    let want = xxy.add(&yyx).map_err(err)?.scale(&q_frac(1, 2));
    ensure!(b.mu(3).expand(3) == want, "mu_3 = ([x,[x,y]] + [y,[y,x]]) / 2");
    for m in 1..=8 {
        let part = s.homogeneous(m);
        ensure!(freelie::is_primitive(&part).is_primitive(), "degree {m} part is not primitive");
        ensure!(b.lie.homogeneous(m).expand(8) == part, "degree {m} bracket expansion");
    }
    // words of length 7 vanish on strictly upper triangular 7x7 matrices
    let b6 = freelie::bch(6, freelie::DEFAULT_BCH_MAX_ORDER).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for trial in 0..5 {
        let mx = strictly_upper(&mut rng, 7);
        let my = strictly_upper(&mut rng, 7);
        let oracle = unipotent_log(&linalg::mat_mul(&nilpotent_exp(&mx, 6), &nilpotent_exp(&my, 6)), 6);
        ensure!(b6.series.evaluate(&[mx, my]) == oracle, "matrix oracle, trial {trial}");
    }
    Ok(())
}

/// Coefficients of `prod_m (1 - t^m)^{-d_m}` up to `t^top`.
fn witt_product(d: &[BigInt], top: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); top + 1];
    series[0] = BigInt::one();
    for (i, dm) in d.iter().enumerate() {
        let m = i + 1;
        let dm = u64::try_from(dm).expect("small");
        let mut next = vec![BigInt::zero(); top + 1];
        for (a, c) in series.iter().enumerate() {
            for j in 0..=(top - a) / m {
                // (1 - t^m)^{-d} = sum_j C(d + j - 1, j) t^{mj}
                let coeff = if dm == 0 { BigInt::from(u8::from(j == 0)) } else { binom(dm + j as u64 - 1, j as u64) };
                next[a + m * j] += c * coeff;
            }
        }
        series = next;
    }
    series
}

fn span_rank(polys: &[BTreeMap<Vec<u8>, BigInt>]) -> usize {
    let words: BTreeSet<&Vec<u8>> = polys.iter().flat_map(|p| p.keys()).collect();
    let rows: QMatrix = polys
        .iter()
        .map(|p| words.iter().map(|w| Q::from_integer(p.get(*w).cloned().unwrap_or_default())).collect())
        .collect();
    linalg::rank(&rows)
}

fn c09_witt() -> Check {
    for (n, top) in [(2usize, 10usize), (3, 6)] {
        let d = freelie::witt_dimensions(n, top);
        let prod = witt_product(&d, top);
        for (k, c) in prod.iter().enumerate() {
            ensure!(*c == BigInt::from(n).pow(k as u32), "product identity for n={n} at t^{k}");
        }
        for m in 1..=top {
            let count = freelie::lyndon_words(n, m).len();
            ensure!(d[m - 1] == BigInt::from(count), "d_{m}({n}) = {} vs {count} Lyndon words", d[m - 1]);
        }
    }
    let expand = |n: usize, brackets: &[&str]| -> Vec<BTreeMap<Vec<u8>, BigInt>> {
        brackets
            .iter()
            .map(|b| {
                let s = parse_bracket(b, n);
                s.terms().iter().map(|(w, c)| (w.clone(), c.to_integer())).collect()
            })
            .collect()
    };
    let fl2 = expand(2, &["[x,[x,y]]", "[y,[x,y]]"]);
    let fl3 = expand(
        3,
        &[
            "[x,[x,y]]", "[y,[x,y]]", "[y,[y,z]]", "[z,[y,z]]", "[x,[x,z]]", "[z,[x,z]]", "[x,[y,z]]", "[y,[z,x]]",
        ],
    );
    for (n, listed, dim) in [(2, fl2, 2usize), (3, fl3, 8)] {
        let basis: Vec<BTreeMap<Vec<u8>, BigInt>> =
            freelie::lyndon_basis(n, 3).iter().map(|(_, b)| b.expand()).collect();
        ensure!(basis.len() == dim, "FL_{n}[3] has {} Lyndon elements", basis.len());
        ensure!(span_rank(&listed) == dim, "listed FL_{n}[3] elements are dependent");
        let union: Vec<_> = listed.iter().chain(&basis).cloned().collect();
        ensure!(span_rank(&union) == dim, "listed FL_{n}[3] elements span a different space");
    }
    Ok(())
}

/// Parses `[a,[b,c]]` style brackets over letters x, y, z.
fn parse_bracket(s: &str, n: usize) -> FreeSeries {
    fn go(s: &[u8], i: &mut usize, n: usize) -> FreeSeries {
        if s[*i] == b'[' {
            *i += 1;
            let a = go(s, i, n);
            assert_eq!(s[*i], b',');
            *i += 1;
            let b = go(s, i, n);
            assert_eq!(s[*i], b']');
            *i += 1;
            a.commutator(&b).expect("same alphabet")
        } else {
            let c = s[*i] - b'x';
            *i += 1;
            FreeSeries::generator(n, 3, c)
        }
    }
    go(s.as_bytes(), &mut 0, n)
}

fn c10_predicates() -> Check {
    let u3 = liealg::upper_triangular(3).map_err(err)?;
    ensure!(liealg::is_solvable(&u3) && !liealg::is_nilpotent(&u3), "upper triangular 3x3");
    for n in 2..=6 {
        let s = liealg::strictly_upper_triangular(n).map_err(err)?;
        ensure!(liealg::is_nilpotent(&s), "strictly upper triangular {n}x{n}");
    }
    let mut algebras = Vec::new();
    for n in 2..=6 {
        algebras.push((format!("sl{n}"), liealg::sl(n).map_err(err)?));
        algebras.push((format!("sp{}", 2 * n), liealg::sp(2 * n).map_err(err)?));
    }
    algebras.push(("sp2".into(), liealg::sp(2).map_err(err)?));
    for n in 3..=6 {
        algebras.push((format!("so{n}"), liealg::so(n).map_err(err)?));
    }
    for (name, g) in &algebras {
        ensure!(liealg::is_semisimple(g), "{name} is not semisimple");
        ensure!(!liealg::is_solvable(g), "{name} is solvable");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(selftest::DEFAULT_SEED);
    for k in 0..100 {
        let g = liealg::random_matrix_algebra(&mut rng, 8);
        ensure!(g.dim() <= 8, "random algebra {k} has dimension {}", g.dim());
        let back = StructureLieAlgebra::from_json(&g.to_json().to_string()).map_err(err)?;
        ensure!(back == g, "random algebra {k} fails validation");
        let (cartan, series) = liealg::solvability_checks(&g);
        ensure!(cartan == series, "random algebra {k}: Cartan criterion {cartan}, derived series {series}");
    }
    Ok(())
}

fn trivial_poincare(g: &StructureLieAlgebra) -> Result<Poly, String> {
    Ok(liealg::ce_cohomology(g, &LieModule::trivial(g), MAX_COHOMOLOGY_DIM).map_err(err)?.poincare())
}

fn odd_product(exps: &[usize]) -> Poly {
    exps.iter().fold(Poly::one(), |acc, &e| {
        let mut c = vec![0i64; e + 1];
        c[0] = 1;
        c[e] = 1;
        &acc * &Poly::from_ints(c)
    })
}

fn g2_from_file() -> Result<StructureLieAlgebra, String> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/g2.json");
    let text = std::fs::read_to_string(&path).map_err(err)?;
    StructureLieAlgebra::from_json(&text).map_err(err)
}

fn c11_cohomology() -> Check {
    let sl2 = liealg::sl(2).map_err(err)?;
    let sl3 = liealg::sl(3).map_err(err)?;
    let so5 = liealg::so(5).map_err(err)?;
    let sp4 = liealg::sp(4).map_err(err)?;
    let g2 = g2_from_file()?;
    let cases = [
        ("sl2", &sl2, vec![3]),
        ("sl3", &sl3, vec![3, 5]),
        ("so5", &so5, vec![3, 7]),
        ("sp4", &sp4, vec![3, 7]),
        ("g2", &g2, vec![3, 11]),
    ];
    for (name, g, exps) in &cases {
        let p = trivial_poincare(g)?;
        ensure!(p == odd_product(exps), "{name}: Poincare polynomial {p}");
    }
    let ab = trivial_poincare(&liealg::abelian(2))?;
    ensure!(ab == Poly::from_ints([1, 2, 1]), "abelian(2): {ab}");
    for n in 0..=6 {
        let v = LieModule::sl2_irrep(&sl2, n).map_err(err)?;
        let c = liealg::ce_cohomology(&sl2, &v, MAX_COHOMOLOGY_DIM).map_err(err)?;
        if n > 0 {
            ensure!(c.dims.iter().all(|&d| d == 0), "sl2 with V_{n}: {:?}", c.dims);
        } else {
            ensure!(c.dims[1] == 0 && c.dims[2] == 0, "sl2 trivial: {:?}", c.dims);
        }
    }
    for (name, g, exps) in &cases {
        let total = liealg::invariant_forms_poincare(g).map_err(err)?.sum_of_coeffs();
        ensure!(total == q(1 << exps.len()), "{name}: invariant forms total {total}");
    }
    for (name, g) in [("sl2", &sl2), ("sl3", &sl3), ("so5", &so5)] {
        let t = liealg::triple_product_invariant(g).map_err(err)?;
        ensure!(t.dim == 1 && t.simple, "{name}: (wedge^3 g*)^g has dimension {}", t.dim);
    }
    Ok(())
}

fn c12_root_decompositions() -> Check {
    let mut cases: Vec<(String, StructureLieAlgebra)> = Vec::new();
    for n in 1..=5 {
        cases.push((format!("A{n}"), liealg::sl(n + 1).map_err(err)?));
        cases.push((format!("C{n}"), liealg::sp(2 * n).map_err(err)?));
    }
    for n in 2..=5 {
        cases.push((format!("B{n}"), liealg::so(2 * n + 1).map_err(err)?));
    }
    for n in 3..=5 {
        cases.push((format!("D{n}"), liealg::so(2 * n).map_err(err)?));
    }
    for (label, g) in cases {
        // C1 is A1 and D3 is A3
        let abstract_label = match label.as_str() {
            "C1" => "A1",
            "D3" => "A3",
            l => l,
        };
        let target = rs(abstract_label);
        let d = liealg::root_decomposition(&g).map_err(err)?;
        let p = d
            .cartan_matrix
            .find_isomorphism(target.cartan())
            .ok_or_else(|| format!("{label}: recovered Cartan matrix {:?}", d.cartan_matrix.entries()))?;
        let mut image = BTreeSet::new();
        for root in &d.roots {
            let mut v = vec![0i64; p.len()];
            for (i, &c) in root.root.0.iter().enumerate() {
                v[p[i]] = c;
            }
            ensure!(target.is_root(&v), "{label}: {:?} maps outside the root system", root.root.0);
            image.insert(v);
        }
        ensure!(image.len() == d.roots.len(), "{label}: map is not injective");
        ensure!(image.len() == target.num_roots(), "{label}: map is not onto");
    }
    Ok(())
}

fn c13_symmetric_functions() -> Check {
    for n in 1..=7usize {
        let (ps, t) = symfun::character_table(n).map_err(err)?;
        let id = ps.iter().position(|mu| mu.parts().iter().all(|&x| x == 1)).expect("identity class");
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let sq: BigInt = t.iter().map(|r| &r[id] * &r[id]).sum();
        ensure!(sq == fact, "S_{n}: sum of squared dimensions {sq}");
        if n <= 6 {
            for (a, mu) in ps.iter().enumerate() {
                for b in 0..ps.len() {
                    let s: BigInt = t.iter().map(|r| &r[a] * &r[b]).sum();
                    let want = if a == b { BigInt::from(mu.centralizer_order()) } else { BigInt::zero() };
                    ensure!(s == want, "S_{n}: column orthogonality at {a},{b}");
                }
            }
            for l in &ps {
                for mu in &ps {
                    let x = symfun::frobenius_character(l, mu).map_err(err)?;
                    let y = symfun::frobenius_character(&l.conjugate(), mu).map_err(err)?;
                    ensure!(y == x * mu.sign(), "sign twist of {l} at {mu}");
                }
            }
        }
    }
    let p21 = symfun::schur_dim_poly(&part(&[2, 1]));
    let want = Poly::new(vec![q(0), q_frac(-1, 3), q(0), q_frac(1, 3)]);
    ensure!(p21 == want, "P_(2,1) = {p21}");
    for a in 1..=5usize {
        let pa = symfun::schur_dim_poly(&part(&[a, a]));
        for n in 2..=8u64 {
            let m = n + a as u64 - 1;
            let k = n - 1;
            let narayana = binom(m, k) * binom(m, k - 1) / BigInt::from(m);
            ensure!(pa.eval(&q(n as i64)) == Q::from_integer(narayana), "dim of ({a},{a}) at N={n}");
        }
    }
    ensure!(symfun::cauchy_check(2, 2, 4).map_err(err)?, "Cauchy identity r=s=2, D=4");
    ensure!(
        symfun::pieri(&part(&[3, 3, 2, 1]), PieriKind::Box, None)
            == vec![part(&[4, 3, 2, 1]), part(&[3, 3, 3, 1]), part(&[3, 3, 2, 2]), part(&[3, 3, 2, 1, 1])],
        "Pieri for V x S^(3,3,2,1)"
    );
    ensure!(
        symfun::pieri(&part(&[3, 1]), PieriKind::Rows(2), Some(3))
            == vec![part(&[4, 2]), part(&[4, 1, 1]), part(&[3, 2, 1])],
        "Pieri for wedge^2 V x S^(3,1) with dim V = 3"
    );
    Ok(())
}

fn c14_q_combinatorics() -> Check {
    for m in 0..=8 {
        for n in 0..=8 {
            let dp = symfun::gaussian_binomial(m + n, n);
            ensure!(dp == symfun::gaussian_binomial_ratio(m + n, n), "[{}, {n}]_q", m + n);
        }
    }
    for n in 1..=6usize {
        let b = symfun::betti(&Space::Flag(n));
        let even: Vec<i64> = b.iter().step_by(2).map(|x| i64::try_from(x).expect("small")).collect();
        ensure!(b.iter().skip(1).step_by(2).all(Zero::is_zero), "flag({n}) odd Betti numbers");
        let want = if n == 1 {
            Poly::one()
        } else {
            weyl::length_generating_function(&rs(&format!("A{}", n - 1)), weyl::DEFAULT_ORBIT_CAP).map_err(err)?
        };
        ensure!(Poly::from_ints(even) == want, "flag({n}) vs Weyl length generating function");
    }
    for n in 1..=10 {
        let b = symfun::betti(&Space::Grassmannian(1, n));
        let want: Vec<BigInt> = (0..=2 * n).map(|i| BigInt::from(i64::from(i % 2 == 0))).collect();
        ensure!(b == want, "CP^{n}: {b:?}");
    }
    Ok(())
}

fn c15_real_forms() -> Check {
    for (l, n) in [("G2", 2), ("F4", 3), ("E7", 4), ("E8", 3)] {
        let forms = voganforms::enumerate_real_forms(ty(l)).map_err(err)?;
        ensure!(forms.len() == n, "{l}: {} real forms, expected {n}", forms.len());
    }
    let e6 = ty("E6");
    let inner = voganforms::real_form_classes(e6, &[0, 1, 2, 3, 4, 5]).map_err(err)?.len();
    let outer = voganforms::real_form_classes(e6, &[5, 1, 4, 3, 2, 0]).map_err(err)?.len();
    ensure!((inner, outer) == (3, 2), "E6: {inner} inner and {outer} outer classes");
    let f4 = |pattern: &str| -> VoganDiagram {
        let black: Vec<usize> = pattern.chars().enumerate().filter(|(_, c)| *c == '•').map(|(i, _)| i).collect();
        VoganDiagram::inner(ty("F4"), &black).expect("valid diagram")
    };
    let chain = ["◦◦◦•", "◦◦••", "◦••◦", "•◦•◦", "••••", "••◦•", "•◦◦•"];
    let start = voganforms::canonical_form(&f4(chain[0])).map_err(err)?;
    for p in chain {
        let c = voganforms::canonical_form(&f4(p)).map_err(err)?;
        ensure!(c.diagram == start.diagram, "F4 {p} is not equivalent to {}", chain[0]);
    }
    let k = voganforms::fixed_subalgebra_dims(&f4("•◦◦◦")).map_err(err)?.dim_k;
    ensure!(k == 36, "F4 with the first vertex black: dim k = {k}");
    let b4 = VoganDiagram::inner(ty("B4"), &[0]).map_err(err)?;
    let k = voganforms::fixed_subalgebra_dims(&b4).map_err(err)?.dim_k;
    ensure!(k == 22, "B4 with the first vertex black: dim k = {k}, so(2) + so(7) has 22");
    for l in irreducible_types(8) {
        let t = ty(&l);
        let pos = rs(&l).positive_roots().len();
        let forms = voganforms::enumerate_real_forms(t).map_err(err)?;
        let split = forms.iter().filter(|f| f.dims.dim_k == pos).count();
        ensure!(split == 1, "{l}: {split} forms with dim k = |R+| = {pos}");
    }
    for n in 2..=11usize {
        let t = ty(&format!("A{}", n - 1));
        let count = voganforms::real_form_classes(t, &(0..n - 1).collect::<Vec<_>>()).map_err(err)?.len();
        ensure!(count == n / 2 + 1, "su({n}): {count} inner classes");
    }
    Ok(())
}

fn c16_selftest() -> Check {
    let reports = selftest::run_all(selftest::DEFAULT_SEED);
    ensure!(reports.len() == selftest::suite_names().len(), "missing suites");
    for r in reports {
        ensure!(r.passed(), "suite {}: {:?}", r.name, r.failures);
    }
    Ok(())
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "root counts", budget: secs(6), run: c01_root_counts },
    Criterion { id: 2, title: "exponents", budget: secs(2), run: c02_exponents },
    Criterion { id: 3, title: "Coxeter numbers", budget: secs(1), run: c03_coxeter },
    Criterion { id: 4, title: "minuscule inventory", budget: secs(2), run: c04_minuscule },
    Criterion { id: 5, title: "P/Q groups", budget: secs(1), run: c05_pq },
    Criterion { id: 6, title: "character suite", budget: secs(60), run: c06_characters },
    Criterion { id: 7, title: "Kostant partition function", budget: secs(5), run: c07_kostant },
    Criterion { id: 8, title: "BCH series", budget: secs(30), run: c08_bch },
    Criterion { id: 9, title: "Witt dimensions and Lyndon bases", budget: secs(5), run: c09_witt },
    Criterion { id: 10, title: "Lie algebra predicates", budget: secs(30), run: c10_predicates },
    Criterion { id: 11, title: "Lie algebra cohomology", budget: secs(660), run: c11_cohomology },
    Criterion { id: 12, title: "root decompositions", budget: secs(10), run: c12_root_decompositions },
    Criterion { id: 13, title: "symmetric functions", budget: secs(60), run: c13_symmetric_functions },
    Criterion { id: 14, title: "Betti numbers and q-combinatorics", budget: secs(10), run: c14_q_combinatorics },
    Criterion { id: 15, title: "real forms", budget: secs(10), run: c15_real_forms },
    Criterion { id: 16, title: "property suites", budget: secs(900), run: c16_selftest },
];

fn main() -> ExitCode {
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in CRITERIA.iter().filter(|c| filter.is_none_or(|f| f == c.id)) {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > c.budget {
                Err(format!("over the {}s budget", c.budget.as_secs()))
            } else {
                Ok(())
            }
        });
        let timing = format!("{:.2}s of {}s", elapsed.as_secs_f64(), c.budget.as_secs());
        match outcome {
            Ok(()) => println!("PASS {:>2} {} ({timing})", c.id, c.title),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {} ({timing}): {e}", c.id, c.title);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
