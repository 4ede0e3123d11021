//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Failing criteria are reported, not hidden; the process exits non-zero only
//! when `ACCEPTANCE_STRICT=1` is set.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

mod common;

use berger_core::criteria::{screen, screen_range, systems_in_range, RangeBounds, ScreenVerdict};
use berger_core::curvature::{curvature_report, dim_identity_checks, first_prolongation, gamma_set, CurvatureOptions};
use berger_core::matalg::catalog::LISTED;
use berger_core::matalg::{catalog, classify_type, commutant, invariant_bilinear_forms, FieldTag, RepType};
use berger_core::repweights::{fs_indicator, is_self_dual, weyl_dim, FsType};
use berger_core::rootsys::{Family, RootSystem};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn fmt_dur(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn unit(n: usize, i: usize, c: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn label(f: Family, n: usize, l: &[i32]) -> String {
    format!("{f}{n} {}", berger_core::criteria::weight_name(l))
}

fn c1() -> Outcome {
    let mut b = RangeBounds::new(1, 30);
    b.family = Some(Family::A);
    b.rank = Some(1);
    let got: Vec<Vec<i32>> = screen_range(&b).into_iter().filter(|v| v.survivor).map(|v| v.highest).collect();
    Outcome::new(got == vec![vec![2], vec![4]], format!("survivors {got:?}"))
}

fn c2() -> Outcome {
    let mut got = BTreeSet::new();
    let mut want = BTreeSet::new();
    let mut screened = 0;
    // C2 = B2 and D3 = A3 appear once, as in batch screening; sl(2) is excluded
    for (f, n) in systems_in_range(&RangeBounds::new(4, 1)) {
        {
            if f == Family::A && n == 1 {
                continue;
            }
            let rs = RootSystem::build(f, n).unwrap();
            let mut roots = vec![rs.highest_root()];
            roots.extend(rs.highest_short_root());
            for idx in roots {
                let long = rs.is_long(idx);
                for a in 1..=3 {
                    let lam: Vec<i32> = rs.root_dynkin(idx).iter().map(|x| a * x).collect();
                    if weyl_dim(&rs, &lam).unwrap() > 20_000 {
                        continue;
                    }
                    screened += 1;
                    let key = label(f, n, &lam);
                    if screen(f, n, &lam).unwrap().criteria_pass {
                        got.insert(key.clone());
                    }
                    let allowed = if long { a == 1 } else { a == 1 || (a == 2 && matches!(f, Family::B | Family::G)) };
                    if allowed {
                        want.insert(key);
                    }
                }
            }
        }
    }
    let missing: Vec<_> = want.difference(&got).collect();
    let extra: Vec<_> = got.difference(&want).collect();
    Outcome::new(
        missing.is_empty() && extra.is_empty(),
        format!("{screened} root multiples screened, {} passers; missing {missing:?}, extra {extra:?}", got.len()),
    )
}

fn c3() -> Outcome {
    let got: BTreeSet<String> = screen_range(&RangeBounds::new(6, 300))
        .into_iter()
        .filter(|v| v.root_multiple.is_none() && v.passed.contains(&berger_core::criteria::Criterion::SI))
        .map(|v| congruent_name(&v))
        .collect();
    let mut want = BTreeSet::new();
    for n in 3..=6 {
        for c in [1, 2] {
            let l = unit(n, 0, c);
            if weyl_dim(&RootSystem::build(Family::D, n).unwrap(), &l).unwrap() <= 300 {
                want.insert(label(Family::D, n, &l));
            }
        }
    }
    Outcome::new(got == want, format!("SI passers {got:?}"))
}

/// Names modulo the isomorphism A3 = D3.
fn congruent_name(v: &ScreenVerdict) -> String {
    if v.family == Family::A && v.rank == 3 {
        if v.highest == [0, 1, 0] {
            return label(Family::D, 3, &[1, 0, 0]);
        }
        if v.highest == [0, 2, 0] {
            return label(Family::D, 3, &[2, 0, 0]);
        }
    }
    v.name()
}

fn c4() -> Outcome {
    let mut b = RangeBounds::new(8, 300);
    b.zero_weight_free = true;
    let passers: Vec<ScreenVerdict> = screen_range(&b).into_iter().filter(|v| v.criteria_pass).collect();
    let got: BTreeSet<String> = passers.iter().map(congruent_name).collect();
    let mut want = BTreeSet::new();
    want.insert(label(Family::A, 7, &unit(7, 3, 1)));
    for n in [3, 4, 7] {
        want.insert(label(Family::B, n, &unit(n, n - 1, 1)));
    }
    for n in 3..=8 {
        for c in [1, 2] {
            let rs = Arc::new(RootSystem::build(Family::D, n).unwrap());
            let l = unit(n, 0, c);
            let ws = berger_core::repweights::WeightSystem::new(rs.clone(), &l).unwrap();
            if weyl_dim(&rs, &l).unwrap() <= 300 && !ws.zero_in_omega() {
                want.insert(label(Family::D, n, &l));
            }
        }
    }
    // the half-spin weights of D8 are congruent; the canonical one is w7
    want.insert(label(Family::D, 8, &unit(8, 6, 1)));
    let missing: Vec<_> = want.difference(&got).collect();
    let extra: Vec<_> = got.difference(&want).collect();
    let obstructed: Vec<String> = passers.iter().filter(|v| v.obstruction.is_some()).map(|v| v.name()).collect();
    Outcome::new(
        missing.is_empty() && extra.is_empty(),
        format!("{} passers; missing {missing:?}, extra {extra:?}; named obstructions {obstructed:?}", got.len()),
    )
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn c5() -> Outcome {
    let opts = CurvatureOptions::default();
    let mut cases: Vec<(String, usize)> = Vec::new();
    for n in 2..=4usize {
        cases.push((format!("sl({n},C)"), n * n * (n + 1) / 2 - n));
        cases.push((format!("gl({n},C)"), n * n * (n + 1) / 2));
        cases.push((format!("sp({n},C)"), binom(2 * n + 2, 3)));
        cases.push((format!("co({n},C)"), n));
        cases.push((format!("sym2(gl({n},C))"), n * (n + 1) / 2));
        cases.push((format!("so({n})"), 0));
    }
    cases.push(("alt2(gl(5,C))".into(), 10));
    cases.push(("adjoint(A,2)".into(), 0));
    let mut bad = Vec::new();
    for (name, want) in &cases {
        let got = first_prolongation(&catalog(name).unwrap(), &opts).unwrap().dim;
        if got != *want {
            bad.push(format!("{name}: {got} != {want}"));
        }
    }
    Outcome::new(bad.is_empty(), format!("{} algebras, mismatches {bad:?}", cases.len()))
}

fn c6() -> Outcome {
    let r = catalog("so(2)+sp(2)R").unwrap();
    let rep = curvature_report(&r, &CurvatureOptions::default()).unwrap();
    let gh = rep.dim_g_h.unwrap_or(usize::MAX);
    Outcome::new(
        gh < rep.dim_g && rep.is_weak_berger == Some(false) && rep.ideals_verified == Some(true),
        format!("dim g = {}, dim g_h = {gh}, g_h ideal verified = {:?}", rep.dim_g, rep.ideals_verified),
    )
}

fn c7() -> Outcome {
    let r = catalog("sym2_0(g2_7)").unwrap();
    let opts = CurvatureOptions::default();
    let rep = curvature_report(&r, &opts).unwrap();
    let gamma = gamma_set(&r, &opts).unwrap();
    let gh = rep.dim_g_h.unwrap_or(usize::MAX);
    Outcome::new(
        gh < rep.dim_g || !gamma.gamma_equals_roots_and_zero,
        format!("dim g = {}, dim g_h = {gh}, dim B_h = {:?}, Gamma = Delta_0: {}", rep.dim_g, rep.dim_bh, gamma.gamma_equals_roots_and_zero),
    )
}

fn c8() -> Outcome {
    let rep = dim_identity_checks(&catalog("u(2)R").unwrap(), &CurvatureOptions::default()).unwrap();
    let g1 = first_prolongation(&catalog("gl(2,C)").unwrap(), &CurvatureOptions::default()).unwrap().dim;
    let literal = rep.dim_bh_real == 6 && g1 == 6 && rep.dim_prolongation == Some(6);
    let k = rep.dim_prolong_1_1 == Some(rep.dim_k_real);
    Outcome::new(
        literal && k,
        format!(
            "dim_R B_h(u(2)) = {}, dim_C gl(2,C)^(1) = {g1}, 2 dim_C = dim_R: {}, dim_R K = {}, dim_R g^[1,1] = {:?}",
            rep.dim_bh_real,
            rep.prolongation_holds == Some(true),
            rep.dim_k_real,
            rep.dim_prolong_1_1
        ),
    )
}

fn c9() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    let mut lemma_fail: Vec<String> = Vec::new();
    for f in Family::ALL {
        for n in 1..=8 {
            if f.valid_rank(n) {
                let rs = RootSystem::build(f, n).unwrap();
                for c in common::lemma_failures(&rs) {
                    lemma_fail.push(format!("{}: {c}", rs.name()));
                }
            }
        }
    }
    if !lemma_fail.is_empty() {
        ok = false;
        let mut by_clause: HashMap<String, Vec<String>> = HashMap::new();
        for s in &lemma_fail {
            let (sys, clause) = s.split_once(": ").unwrap();
            by_clause.entry(clause.to_string()).or_default().push(sys.to_string());
        }
        let mut parts: Vec<String> = by_clause.into_iter().map(|(c, s)| format!("'{c}' fails in {}", s.join(","))).collect();
        parts.sort();
        notes.push(format!("root lemmas: {}", parts.join("; ")));
    } else {
        notes.push("root lemmas hold".into());
    }

    let mut type_bad = Vec::new();
    let mut typed = 0;
    for name in LISTED {
        let r = catalog(name).unwrap();
        let Ok(t) = classify_type(&r) else { continue };
        typed += 1;
        let expected = if r.field == FieldTag::Real {
            match commutant(&r).len() {
                1 => Some(RepType::Real),
                2 => Some(RepType::Complex),
                4 => Some(RepType::Quaternionic),
                _ => None,
            }
        } else {
            let f = invariant_bilinear_forms(&r);
            match (f.symmetric.len(), f.antisymmetric.len()) {
                (1, 0) => Some(RepType::Real),
                (0, 1) => Some(RepType::Quaternionic),
                (0, 0) => Some(RepType::Complex),
                _ => None,
            }
        };
        if expected != Some(t) {
            type_bad.push(name.to_string());
        }
    }
    ok &= type_bad.is_empty();
    notes.push(format!("type trichotomy on {typed} irreducible entries, mismatches {type_bad:?}"));

    let opts = CurvatureOptions::default();
    let weak = |n: &str| curvature_report(&catalog(n).unwrap(), &opts).unwrap().is_weak_berger;
    let mut block_bad = Vec::new();
    for (a, b) in [("so(3)", "so(3)"), ("so(3)", "u(2)R")] {
        let sum = format!("oplus({a},{b})");
        let lhs = weak(&sum);
        let rhs = weak(a).zip(weak(b)).map(|(x, y)| x && y);
        if lhs.is_none() || lhs != rhs {
            block_bad.push(sum);
        }
    }
    ok &= block_bad.is_empty();
    notes.push(format!("block sums, mismatches {block_bad:?}"));

    let (checked, fs_bad) = fs_oracle();
    ok &= fs_bad.is_empty();
    notes.push(format!("fs indicator on {checked} models, mismatches {fs_bad:?}"));
    Outcome::new(ok, notes.join(" | "))
}

/// Explicit models with known highest weights: the symmetry of their
/// invariant bilinear forms against the weight-level indicator.
fn fs_oracle() -> (usize, Vec<String>) {
    let w = |n: usize, at: &[(usize, i32)]| -> Vec<i32> {
        let mut v = vec![0; n];
        for &(i, c) in at {
            v[i] = c;
        }
        v
    };
    let mut models: Vec<(String, Family, usize, Vec<i32>)> = Vec::new();
    for (f, n) in [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2)] {
        let rs = RootSystem::build(f, n).unwrap();
        models.push((format!("adjoint({f},{n})"), f, n, rs.root_dynkin(rs.highest_root()).to_vec()));
    }
    for n in 2..=5 {
        models.push((format!("sl({n},C)"), Family::A, n - 1, w(n - 1, &[(0, 1)])));
    }
    models.push(("alt2(sl(4,C))".into(), Family::A, 3, w(3, &[(1, 1)])));
    models.push(("sym2(sl(2,C))".into(), Family::A, 1, w(1, &[(0, 2)])));
    models.push(("sp(1,C)".into(), Family::A, 1, w(1, &[(0, 1)])));
    for n in 2..=3 {
        models.push((format!("sp({n},C)"), Family::C, n, w(n, &[(0, 1)])));
    }
    models.push(("sym2(sp(2,C))".into(), Family::C, 2, w(2, &[(0, 2)])));
    for n in [5usize, 7] {
        let r = (n - 1) / 2;
        models.push((format!("complexify(so({n}))"), Family::B, r, w(r, &[(0, 1)])));
        models.push((format!("complexify(sym2_0(so({n})))"), Family::B, r, w(r, &[(0, 2)])));
    }
    models.push(("complexify(so(8))".into(), Family::D, 4, w(4, &[(0, 1)])));
    models.push(("complexify(g2_7)".into(), Family::G, 2, w(2, &[(0, 1)])));
    models.push(("complexify(sym2_0(g2_7))".into(), Family::G, 2, w(2, &[(0, 2)])));
    let mut bad = Vec::new();
    let mut checked = 0;
    for (name, f, n, lam) in models {
        let rs = RootSystem::build(f, n).unwrap();
        let r = catalog(&name).unwrap();
        if r.dim > 60 {
            continue;
        }
        checked += 1;
        let forms = invariant_bilinear_forms(&r);
        let observed = (forms.symmetric.len(), forms.antisymmetric.len());
        let expected = if !is_self_dual(&rs, &lam).unwrap() {
            (0, 0)
        } else {
            match fs_indicator(&rs, &lam).unwrap() {
                FsType::Orthogonal => (1, 0),
                FsType::Symplectic => (0, 1),
            }
        };
        if r.dim as u128 != weyl_dim(&rs, &lam).unwrap() || observed != expected {
            bad.push(name);
        }
    }
    (checked, bad)
}

fn main() {
    // (title, check, runtime budget in seconds)
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 9] = [
        ("sl(2) classification", c1, Some(1)),
        ("root multiples as highest weight", c2, Some(60)),
        ("planar spanning triples", c3, None),
        ("zero-weight-free SII list", c4, Some(1800)),
        ("first prolongation dimensions", c5, Some(300)),
        ("non-weak-Berger witness so(2)+sp(2)", c6, Some(300)),
        ("G2 27-dimensional exception", c7, Some(600)),
        ("B_h / K dimension identities for u(2)", c8, None),
        ("property suites", c9, Some(900)),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    let total = Instant::now();
    for (i, (title, f, budget)) in criteria.iter().enumerate() {
        let id = i + 1;
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let t = Instant::now();
        let out = f();
        let elapsed = t.elapsed();
        let in_budget = budget.map_or(true, |b| elapsed < Duration::from_secs(b));
        let pass = out.pass && in_budget;
        let verdict = if pass { "PASS" } else { "FAIL" };
        if !pass {
            failed += 1;
        }
        let limit = budget.map_or(String::new(), |b| format!(" of {b}s budget"));
        println!("criterion {id} [{verdict}] {title} ({}{limit}): {}", fmt_dur(elapsed), out.detail);
    }
    println!("acceptance: {failed} failing criteria, total {}", fmt_dur(total.elapsed()));
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
