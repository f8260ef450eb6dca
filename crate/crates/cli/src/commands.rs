use std::fmt::Write as _;
use std::path::Path;

use liekit::chars::{self, DEFAULT_MAX_DIM, DEFAULT_MAX_PRODUCT_DIM};
use liekit::freelie::{self, DEFAULT_BCH_MAX_ORDER};
use liekit::liealg::{self, LieModule, SeriesKind, StructureLieAlgebra, MAX_COHOMOLOGY_DIM};
use liekit::poly::Poly;
use liekit::rootsys::{CartanType, RootSystem, Weight};
use liekit::selftest;
use liekit::symfun::{self, Partition, Space};
use liekit::voganforms::{self, VoganDiagram};
use liekit::weyl::{self, DEFAULT_ORBIT_CAP};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{AlgebraArg, Cli, Cmd, Format, Output, SpaceArg, TypeWeight};

type Res = Result<Output, CliError>;

/// Largest degree for `witt` unless `--max-order` says otherwise.
const DEFAULT_WITT_DEGREE: usize = 40;
/// Words enumerated when cross-checking Witt numbers against Lyndon counts.
const LYNDON_COUNT_CAP: u64 = 1 << 20;

pub fn run(cli: &Cli) -> Res {
    match &cli.cmd {
        Cmd::Roots { t, count, positive } => roots(&t.ty, *count, *positive),
        Cmd::Exponents(t) => exponents(&t.ty),
        Cmd::Coxeter(t) => coxeter(&t.ty),
        Cmd::Minuscule(t) => minuscule(&t.ty),
        Cmd::Pq(t) => pq(&t.ty),
        Cmd::WeylOrder { t, poincare } => weyl_order(cli, &t.ty, *poincare),
        Cmd::Orbit { tw, count } => orbit(cli, tw, *count),
        Cmd::Char { tw, dominant } => character(cli, tw, *dominant),
        Cmd::Dim(tw) => dim(tw),
        Cmd::Qdim(tw) => qdim(tw),
        Cmd::Tensor { ty, left, right, minuscule } => tensor(cli, ty, left, right, *minuscule),
        Cmd::Fstype(tw) => fstype(tw),
        Cmd::Bch { order, mu } => bch(cli, *order, *mu),
        Cmd::Witt { generators, degree, list } => witt(cli, *generators, *degree, *list),
        Cmd::LieCheck(a) => lie_check(a),
        Cmd::Cohomology { alg, module, module_file, invariant } => {
            cohomology(cli, alg, module, module_file.as_deref(), *invariant)
        }
        Cmd::Schur { partition, vars, dim } => schur(partition, *vars, *dim),
        Cmd::Frobenius { partition, cycle, table } => frobenius(partition.as_deref(), cycle.as_deref(), *table),
        Cmd::Qbinom { n, k } => qbinom(*n, *k),
        Cmd::Betti { space } => betti(space),
        Cmd::Realforms { ty, list, file, flip } => realforms(ty.as_deref(), *list, file.as_deref(), *flip),
        Cmd::Selftest { suite } => run_selftest(cli, suite.as_deref()),
    }
}

fn root_system(label: &str) -> Result<RootSystem, CliError> {
    Ok(RootSystem::from_label(label)?)
}

fn weight(rs: &RootSystem, s: &str) -> Result<Weight, CliError> {
    let w: Weight = s.parse().map_err(CliError::Invalid)?;
    if w.rank() != rs.rank() {
        return Err(CliError::invalid(format!(
            "weight {w} has {} coordinates, rank is {}",
            w.rank(),
            rs.rank()
        )));
    }
    Ok(w)
}

fn type_weight(tw: &TypeWeight) -> Result<(RootSystem, Weight), CliError> {
    let rs = root_system(&tw.ty)?;
    let w = weight(&rs, &tw.weight)?;
    Ok((rs, w))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
}

fn cap_usize(cli: &Cli, default: usize) -> usize {
    cli.max_dim.map_or(default, |m| usize::try_from(m).unwrap_or(usize::MAX))
}

fn poly_json(p: &Poly) -> Value {
    json!(p.coeff_strings())
}

fn roots(label: &str, count: bool, positive: bool) -> Res {
    let rs = root_system(label)?;
    let n = if positive { rs.positive_roots().len() } else { rs.num_roots() };
    if count {
        return Ok(Output::new(n.to_string(), json!({ "type": label, "count": n })));
    }
    let list: Vec<Vec<i64>> = if positive {
        rs.positive_roots().iter().map(|r| r.0.clone()).collect()
    } else {
        rs.roots().into_iter().map(|r| r.0).collect()
    };
    let text = list.iter().map(|r| Weight(r.clone()).to_string()).collect::<Vec<_>>().join("\n");
    Ok(Output::new(text, json!({ "type": label, "count": n, "roots": list })))
}

fn exponents(label: &str) -> Res {
    let rs = root_system(label)?;
    let e = rs.exponents()?;
    let text = e.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    let pos = rs.positive_roots().len();
    Ok(Output::new(text, json!({ "type": label, "exponents": e, "positive_roots": pos })))
}

fn coxeter(label: &str) -> Res {
    let rs = root_system(label)?;
    let (h, hd) = rs.coxeter_numbers()?;
    Ok(Output::new(
        format!("h = {h}\nh_dual = {hd}"),
        json!({ "type": label, "h": h, "h_dual": hd }),
    ))
}

fn minuscule(label: &str) -> Res {
    let rs = root_system(label)?;
    let ws = rs.minuscule_weights()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for w in &ws {
        let d = chars::dimension(&rs, w)?;
        let _ = writeln!(text, "{w} dim {d}");
        rows.push(json!({ "weight": w.0, "dim": d.to_string() }));
    }
    let det = rs.cartan().determinant();
    let _ = write!(text, "count {} (det {det})", ws.len());
    Ok(Output::new(
        text,
        json!({ "type": label, "weights": rows, "count": ws.len(), "det": det.to_string() }),
    ))
}

fn pq(label: &str) -> Res {
    let rs = root_system(label)?;
    let g = rs.weight_lattice_quotient();
    Ok(Output::new(
        g.to_string(),
        json!({ "type": label, "invariants": g.invariants, "order": g.order() }),
    ))
}

fn weyl_order(cli: &Cli, label: &str, poincare: bool) -> Res {
    let rs = root_system(label)?;
    let cap = cap_usize(cli, DEFAULT_ORBIT_CAP);
    let order = weyl::group_order(&rs, cap)?;
    let mut json = json!({ "type": label, "order": order.to_string() });
    let mut text = order.to_string();
    if poincare {
        let p = weyl::length_generating_function(&rs, cap)?;
        text = format!("{text}\n{}", p.display_in("q"));
        json["poincare"] = poly_json(&p);
    }
    Ok(Output::new(text, json))
}

fn orbit(cli: &Cli, tw: &TypeWeight, count: bool) -> Res {
    let (rs, w) = type_weight(tw)?;
    let mut orb = weyl::orbit_with_lengths(&rs, &w, cap_usize(cli, DEFAULT_ORBIT_CAP))?;
    orb.sort();
    if count {
        return Ok(Output::new(orb.len().to_string(), json!({ "count": orb.len() })));
    }
    let text = orb.iter().map(|(v, l)| format!("{v} {l}")).collect::<Vec<_>>().join("\n");
    let rows: Vec<Value> = orb.iter().map(|(v, l)| json!({ "weight": v.0, "length": l })).collect();
    Ok(Output::new(text, json!({ "count": orb.len(), "orbit": rows })))
}

fn character(cli: &Cli, tw: &TypeWeight, dominant: bool) -> Res {
    let (rs, w) = type_weight(tw)?;
    let cap = cli.max_dim.unwrap_or(DEFAULT_MAX_DIM);
    let ch = chars::character(&rs, &w, cap)?;
    let terms: Vec<(&Weight, &u64)> =
        ch.terms().iter().filter(|(v, _)| !dominant || v.is_dominant()).collect();
    let text = terms.iter().map(|(v, m)| format!("{v} {m}")).collect::<Vec<_>>().join("\n");
    let json_terms: Vec<Value> = terms.iter().map(|(v, m)| json!({ "weight": v.0, "mult": m })).collect();
    Ok(Output::new(
        text,
        json!({ "type": tw.ty, "highest_weight": w.0, "dim": ch.dimension(), "character": json_terms }),
    ))
}

fn dim(tw: &TypeWeight) -> Res {
    let (rs, w) = type_weight(tw)?;
    let d = chars::dimension(&rs, &w)?;
    Ok(Output::new(d.to_string(), json!({ "type": tw.ty, "weight": w.0, "dim": d.to_string() })))
}

fn qdim(tw: &TypeWeight) -> Res {
    let (rs, w) = type_weight(tw)?;
    let p = chars::q_dimension(&rs, &w)?;
    Ok(Output::new(p.display_in("q"), json!({ "type": tw.ty, "weight": w.0, "qdim": poly_json(&p) })))
}

fn tensor(cli: &Cli, ty: &str, left: &str, right: &str, minuscule: bool) -> Res {
    let rs = root_system(ty)?;
    let l = weight(&rs, left)?;
    let r = weight(&rs, right)?;
    let dec = if minuscule {
        chars::tensor_minuscule(&rs, &l, &r)?
    } else {
        chars::tensor_decompose(&rs, &l, &r, cli.max_dim.unwrap_or(DEFAULT_MAX_PRODUCT_DIM))?
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for (nu, m) in &dec {
        let d = chars::dimension(&rs, nu)?;
        let _ = writeln!(text, "{m} x {nu} dim {d}");
        rows.push(json!({ "weight": nu.0, "mult": m, "dim": d.to_string() }));
    }
    Ok(Output::new(text, json!({ "type": ty, "left": l.0, "right": r.0, "summands": rows })))
}

fn fstype(tw: &TypeWeight) -> Res {
    let (rs, w) = type_weight(tw)?;
    let t = chars::frobenius_schur_type(&rs, &w)?;
    let dual = chars::dual_highest_weight(&rs, &w)?;
    Ok(Output::new(
        format!("{t}\ndual {dual}"),
        json!({ "type": tw.ty, "weight": w.0, "fstype": t, "dual": dual.0 }),
    ))
}

fn bch(cli: &Cli, order: usize, mu: bool) -> Res {
    let b = freelie::bch(order, cli.max_order.unwrap_or(DEFAULT_BCH_MAX_ORDER))?;
    let lie = if mu {
        (1..=order).fold(freelie::LieElement::zero(2), |acc, m| acc.add(&b.mu(m)))
    } else {
        b.lie.clone()
    };
    let terms = lie.terms();
    let text = if cli.format == Format::Words {
        let mut ws: Vec<_> = b.series.terms().iter().collect();
        ws.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then(x.0.cmp(y.0)));
        ws.iter()
            .map(|(w, c)| format!("{:>8}  {}", liekit::linalg::fmt_rational(c), freelie::word_name(w, 2)))
            .collect::<Vec<_>>()
            .join("\n")
    } else {
        terms
            .iter()
            .map(|t| format!("{:>8}  {}", t.coeff, t.bracket))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let rows: Vec<Value> = terms
        .iter()
        .map(|t| json!({ "degree": t.degree, "bracket": t.bracket, "coeff": t.coeff }))
        .collect();
    Ok(Output::new(text, json!({ "order": order, "mu": mu, "terms": rows })))
}

fn witt(cli: &Cli, n: usize, degree: usize, list: bool) -> Res {
    if n == 0 || degree == 0 {
        return Err(CliError::invalid("generators and degree must be positive"));
    }
    let max = cli.max_order.unwrap_or(DEFAULT_WITT_DEGREE);
    if degree > max {
        return Err(CliError::Cap(format!("degree {degree} exceeds the maximum {max}")));
    }
    let dims = freelie::witt_dimensions(n, degree);
    let words_ok = u64::try_from(n)
        .ok()
        .and_then(|n| n.checked_pow(degree as u32))
        .is_some_and(|w| w <= LYNDON_COUNT_CAP);
    let mut text = String::new();
    let mut rows = Vec::new();
    for (m, d) in (1..=degree).zip(&dims) {
        let moebius = freelie::witt_moebius(n, m);
        let count = words_ok.then(|| freelie::lyndon_words(n, m).len());
        let _ = writeln!(
            text,
            "d_{m} = {d}{}",
            count.map_or(String::new(), |c| format!("  (lyndon {c}, moebius {moebius})"))
        );
        rows.push(json!({ "degree": m, "dim": d.to_string(), "moebius": moebius.to_string(), "lyndon": count }));
    }
    let mut json = json!({ "generators": n, "dims": rows });
    if list {
        if !words_ok {
            return Err(CliError::Cap(format!("{n}^{degree} words exceed the listing cap")));
        }
        let basis: Vec<String> = freelie::lyndon_basis(n, degree)
            .into_iter()
            .map(|(_, b)| b.render(n))
            .collect();
        for b in &basis {
            let _ = writeln!(text, "{b}");
        }
        json["basis"] = json!(basis);
    }
    Ok(Output::new(text, json))
}

fn algebra(a: &AlgebraArg) -> Result<(String, StructureLieAlgebra), CliError> {
    if let Some(path) = &a.file {
        let g = StructureLieAlgebra::from_json(&read(path)?)?;
        return Ok((path.display().to_string(), g));
    }
    let name = a
        .algebra
        .as_deref()
        .ok_or_else(|| CliError::invalid("give an algebra name or --file"))?;
    let lower = name.to_ascii_lowercase().replace(['(', ')'], "");
    let split = lower.find(|c: char| c.is_ascii_digit()).unwrap_or(lower.len());
    let (head, tail) = lower.split_at(split);
    let num = || -> Result<usize, CliError> {
        tail.parse().map_err(|_| CliError::invalid(format!("unknown algebra `{name}`")))
    };
    let g = match head {
        "sl" => liealg::sl(num()?)?,
        "so" => liealg::so(num()?)?,
        "sp" => liealg::sp(num()?)?,
        "g" if tail == "2" => StructureLieAlgebra::g2(),
        "heisenberg" => liealg::heisenberg(),
        "abelian" => liealg::abelian(num()?),
        "upper" => liealg::upper_triangular(num()?)?,
        "strict" => liealg::strictly_upper_triangular(num()?)?,
        _ => return Err(CliError::invalid(format!("unknown algebra `{name}`"))),
    };
    Ok((name.to_string(), g))
}

fn lie_check(a: &AlgebraArg) -> Res {
    let (name, g) = algebra(a)?;
    let (by_series, by_cartan) = liealg::solvability_checks(&g);
    let nilpotent = liealg::is_nilpotent(&g);
    let semisimple = liealg::is_semisimple(&g);
    let simple = liealg::is_simple(&g);
    let derived = liealg::series(&g, SeriesKind::Derived);
    let lower = liealg::series(&g, SeriesKind::LowerCentral);
    let fmt_series = |s: &[usize]| s.iter().map(usize::to_string).collect::<Vec<_>>().join(" > ");
    let text = format!(
        "dim {}\nsolvable {by_series} (cartan criterion {by_cartan})\nnilpotent {nilpotent}\nsemisimple {semisimple}\nsimple {simple}\nderived series {}\nlower central series {}",
        g.dim(),
        fmt_series(&derived),
        fmt_series(&lower)
    );
    Ok(Output::new(
        text,
        json!({
            "algebra": name,
            "dim": g.dim(),
            "solvable": by_series,
            "solvable_cartan": by_cartan,
            "nilpotent": nilpotent,
            "semisimple": semisimple,
            "simple": simple,
            "derived_series": derived,
            "lower_central_series": lower,
        }),
    ))
}

fn module(g: &StructureLieAlgebra, spec: &str, file: Option<&Path>) -> Result<LieModule, CliError> {
    if let Some(path) = file {
        return Ok(LieModule::from_json(g, &read(path)?)?);
    }
    match spec {
        "trivial" => Ok(LieModule::trivial(g)),
        "adjoint" => Ok(LieModule::adjoint(g)),
        s if s.starts_with('v') => {
            let n = s[1..].parse().map_err(|_| CliError::invalid(format!("bad module `{spec}`")))?;
            Ok(LieModule::sl2_irrep(g, n)?)
        }
        _ => Err(CliError::invalid(format!("unknown module `{spec}`"))),
    }
}

fn cohomology(cli: &Cli, a: &AlgebraArg, spec: &str, file: Option<&Path>, invariant: bool) -> Res {
    let (name, g) = algebra(a)?;
    let max = cap_usize(cli, MAX_COHOMOLOGY_DIM);
    if invariant {
        if g.dim() > max {
            return Err(CliError::Cap(format!("dimension {} exceeds the maximum {max}", g.dim())));
        }
        let dims = (0..=g.dim())
            .map(|k| liealg::invariant_forms(&g, k).map(|d| d as i64))
            .collect::<Result<Vec<_>, _>>()?;
        let p = Poly::from_ints(dims.clone());
        return Ok(Output::new(
            p.display_in("q"),
            json!({ "algebra": name, "invariant_forms": dims, "total": dims.iter().sum::<i64>() }),
        ));
    }
    let m = module(&g, spec, file)?;
    let c = liealg::ce_cohomology(&g, &m, max)?;
    let p = c.poincare();
    let text = format!(
        "{}\n{}",
        p.display_in("q"),
        c.dims.iter().enumerate().map(|(k, d)| format!("H^{k} = {d}")).collect::<Vec<_>>().join("\n")
    );
    Ok(Output::new(
        text,
        json!({ "algebra": name, "module": spec, "dims": c.dims, "weight_zero": c.weight_zero }),
    ))
}

fn partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse::<Partition>()?)
}

fn schur(p: &str, vars: usize, dim_only: bool) -> Res {
    let l = partition(p)?;
    if dim_only {
        let d = symfun::schur_dim(&l, vars)?;
        return Ok(Output::new(d.to_string(), json!({ "partition": l.parts(), "vars": vars, "dim": d.to_string() })));
    }
    let s = symfun::schur_poly(&l, vars)?;
    Ok(Output::new(s.to_string(), json!({ "partition": l.parts(), "vars": vars, "poly": s.to_json() })))
}

fn frobenius(p: Option<&str>, cycle: Option<&str>, table: Option<usize>) -> Res {
    if let Some(n) = table {
        if n > symfun::MAX_FROBENIUS_N {
            return Err(CliError::Cap(format!("N = {n} exceeds {}", symfun::MAX_FROBENIUS_N)));
        }
        let (ps, rows) = symfun::character_table(n)?;
        let mut text = format!("{:<14}{}\n", "", ps.iter().map(|c| format!("{:>10}", c.to_string())).collect::<String>());
        for (l, row) in ps.iter().zip(&rows) {
            let _ = writeln!(text, "{:<14}{}", l.to_string(), row.iter().map(|x| format!("{x:>10}")).collect::<String>());
        }
        let json_rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let classes: Vec<&[usize]> = ps.iter().map(Partition::parts).collect();
        return Ok(Output::new(text, json!({ "n": n, "classes": classes, "table": json_rows })));
    }
    let l = partition(p.ok_or_else(|| CliError::invalid("give a partition or --table"))?)?;
    let classes = match cycle {
        Some(c) => vec![partition(c)?],
        None => symfun::partitions(l.size()),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for mu in &classes {
        let v = symfun::frobenius_character(&l, mu)?;
        let _ = writeln!(text, "{mu} {v}");
        rows.push(json!({ "cycle": mu.parts(), "value": v.to_string() }));
    }
    Ok(Output::new(text, json!({ "partition": l.parts(), "values": rows })))
}

fn qbinom(n: usize, k: usize) -> Res {
    if k > n {
        return Err(CliError::invalid(format!("k = {k} exceeds n = {n}")));
    }
    let p = symfun::gaussian_binomial(n, k);
    Ok(Output::new(p.display_in("q"), json!({ "n": n, "k": k, "coeffs": poly_json(&p) })))
}

fn betti(space: &SpaceArg) -> Res {
    let s = match space {
        SpaceArg::Grassmannian { k, n } if k <= n => Space::Grassmannian(*k, n - k),
        SpaceArg::Grassmannian { k, n } => {
            return Err(CliError::invalid(format!("{k}-planes do not fit in C^{n}")))
        }
        SpaceArg::Flag { n } => Space::Flag(*n),
        SpaceArg::Partial { parts } => {
            let ps = parts
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::invalid(format!("bad dimensions `{parts}`")))?;
            Space::PartialFlag(ps)
        }
        SpaceArg::Projective { n } => Space::Grassmannian(1, *n),
    };
    let b = symfun::betti(&s);
    let text = b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let strs: Vec<String> = b.iter().map(ToString::to_string).collect();
    Ok(Output::new(text, json!({ "space": format!("{s:?}"), "betti": strs })))
}

fn realforms(ty: Option<&str>, list: bool, file: Option<&Path>, flip: Option<usize>) -> Res {
    if let Some(path) = file {
        let mut d = VoganDiagram::from_json(&read(path)?)?;
        if let Some(j) = flip {
            let j = j.checked_sub(1).ok_or_else(|| CliError::invalid("vertices are 1-based"))?;
            d = d.flip(j)?;
        }
        let canon = voganforms::canonical_form(&d)?;
        let form = voganforms::classify(&d)?;
        let text = format!(
            "diagram {d}\ncanonical {} (flip orbit {})\n{form}\nsignature ({}, {})",
            canon.diagram,
            canon.orbit_size,
            form.dims.signature().0,
            form.dims.signature().1
        );
        return Ok(Output::new(
            text,
            json!({
                "diagram": d.to_json(),
                "canonical": canon.diagram.to_json(),
                "orbit_size": canon.orbit_size,
                "form": form.to_json(),
            }),
        ));
    }
    let label = ty.ok_or_else(|| CliError::invalid("give --type or --file"))?;
    let t: CartanType = label.parse()?;
    let forms = voganforms::enumerate_real_forms(t)?;
    let inner = forms.iter().filter(|f| f.inner).count();
    let mut text = format!("{t}: {} real forms ({inner} inner, {} outer)\n", forms.len(), forms.len() - inner);
    if list {
        for f in &forms {
            let _ = writeln!(text, "{} {f}", if f.inner { "inner" } else { "outer" });
        }
    }
    let rows: Vec<Value> = forms.iter().map(|f| f.to_json()).collect();
    Ok(Output::new(
        text,
        json!({ "type": t.to_string(), "count": forms.len(), "inner": inner, "forms": rows }),
    ))
}

fn run_selftest(cli: &Cli, suite: Option<&str>) -> Res {
    let seed = cli.seed.unwrap_or(selftest::DEFAULT_SEED);
    let reports = match suite {
        Some(name) => vec![selftest::run_suite(name, seed).ok_or_else(|| {
            CliError::invalid(format!("unknown suite `{name}`; known: {}", selftest::suite_names().join(", ")))
        })?],
        None => selftest::run_all(seed),
    };
    let mut text = format!("seed {seed}\n");
    for r in &reports {
        let _ = writeln!(
            text,
            "{} {:<12} {:>4} cases {:>8.2}s",
            if r.passed() { "PASS" } else { "FAIL" },
            r.name,
            r.cases,
            r.elapsed.as_secs_f64()
        );
        for f in &r.failures {
            let _ = writeln!(text, "    {f}");
        }
    }
    let failed = reports.iter().any(|r| !r.passed());
    let rows: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
    let mut out = Output::new(text, json!({ "seed": seed, "passed": !failed, "suites": rows }));
    out.failed = failed;
    Ok(out)
}
