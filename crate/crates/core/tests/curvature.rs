use berger_core::curvature::{
    bh_space, curvature_report, derived_ideal, dim_identity_checks, first_prolongation, gamma_set, graded_space, k_space,
    module_action_check, pairing_check, prolong_1_1, tilde_checks, weight_frame, CurvError, CurvatureOptions, SpaceKind,
};
use berger_core::field::Gauss;
use berger_core::linalg::Mat;
use berger_core::matalg::{catalog, MatrixRep, RepType, SpanCoords};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn opts() -> CurvatureOptions {
    CurvatureOptions::default()
}

fn cat(name: &str) -> MatrixRep {
    catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn k_space_small_examples() {
    assert_eq!(k_space(&cat("so(2)"), &opts()).unwrap().dim, 1);
    assert_eq!(k_space(&cat("so(3)"), &opts()).unwrap().dim, 6);
    assert_eq!(k_space(&cat("zero(3)"), &opts()).unwrap().dim, 0);
    // Riemannian curvature tensors: n^2 (n^2 - 1) / 12
    for n in 2..=5 {
        let d = k_space(&cat(&format!("so({n})")), &opts()).unwrap().dim;
        assert_eq!(d, n * n * (n * n - 1) / 12, "so({n})");
    }
}

#[test]
fn bh_space_of_so_n() {
    for n in 3..=5 {
        let r = cat(&format!("so({n})"));
        let b = bh_space(&r, &opts()).unwrap();
        assert_eq!(b.dim, n * (n + 1) * (n - 1) / 3, "so({n})");
        let (gh, ideal) = derived_ideal(&r, &b).unwrap();
        assert_eq!(gh.dim, r.dim_g());
        assert_eq!(ideal, Some(true));
    }
}

#[test]
fn bh_needs_symmetric_form() {
    assert_eq!(bh_space(&cat("gl(2,C)"), &opts()).unwrap_err(), CurvError::NoSymmetricForm);
    assert_eq!(bh_space(&cat("sp(2,C)"), &opts()).unwrap_err(), CurvError::NoSymmetricForm);
}

#[test]
fn trivial_algebra_report() {
    let rep = curvature_report(&cat("zero(3)"), &opts()).unwrap();
    assert_eq!((rep.dim_k, rep.dim_bh, rep.dim_g_underline, rep.dim_g_h), (0, Some(0), 0, Some(0)));
    assert!(rep.is_berger && rep.is_weak_berger == Some(true));
}

#[test]
fn so3_report() {
    let rep = curvature_report(&cat("so(3)"), &opts()).unwrap();
    assert_eq!(rep.dim_g_underline, 3);
    assert!(rep.is_berger);
    assert_eq!(rep.is_weak_berger, Some(true));
    assert_eq!(rep.ideals_verified, Some(true));
    assert_eq!(rep.underline_in_h, Some(true));
    assert!(!rep.graded);
}

#[test]
fn unitary_is_weak_berger() {
    let rep = curvature_report(&cat("u(2)R"), &opts()).unwrap();
    assert_eq!(rep.is_weak_berger, Some(true));
    // real dimension of the complex space gl(2,C)^(1)
    assert_eq!(rep.dim_bh, Some(12));
}

#[test]
fn so2_plus_sp2_is_not_weak_berger() {
    let r = cat("so(2)+sp(2)R");
    assert_eq!((r.dim, r.dim_g()), (8, 11));
    let rep = curvature_report(&r, &opts()).unwrap();
    assert_eq!(rep.is_weak_berger, Some(false));
    let gh = rep.dim_g_h.unwrap();
    assert!(gh < 11 && gh >= 10, "dim g_h = {gh}");
    // the missing direction is the centre iR
    let b = bh_space(&r, &opts()).unwrap();
    let (span, ideal) = derived_ideal(&r, &b).unwrap();
    assert_eq!(ideal, Some(true));
    let centre = r.basis.last().unwrap();
    let sp = r.span().unwrap();
    let c = sp.coords(centre).unwrap();
    assert!(!span.contains(&c));
}

#[test]
fn prolongation_examples() {
    let d = |n: &str| first_prolongation(&cat(n), &opts()).unwrap().dim;
    assert_eq!(d("sl(2,C)"), 4);
    assert_eq!(d("sp(2,C)"), 20);
    assert_eq!(d("co(3,C)"), 3);
    assert_eq!(d("complexify(so(4))"), 0);
}

#[test]
fn prolongation_formulas() {
    for n in 2..=4usize {
        let d = |name: String| first_prolongation(&cat(&name), &opts()).unwrap().dim;
        assert_eq!(d(format!("sl({n},C)")), n * n * (n + 1) / 2 - n);
        assert_eq!(d(format!("gl({n},C)")), n * n * (n + 1) / 2);
        assert_eq!(d(format!("sp({n},C)")), binom(2 * n + 2, 3));
        assert_eq!(d(format!("co({n},C)")), n);
        assert_eq!(d(format!("sym2(gl({n},C))")), n * (n + 1) / 2);
        assert_eq!(d(format!("so({n})")), 0);
    }
    assert_eq!(first_prolongation(&cat("alt2(gl(5,C))"), &opts()).unwrap().dim, 10);
    assert_eq!(first_prolongation(&cat("adjoint(A,2)"), &opts()).unwrap().dim, 0);
}

#[test]
fn tilde_examples() {
    let t = tilde_checks(&cat("gl(2,C)"), &opts()).unwrap();
    assert!(t.g_tilde_is_g);
    let t = tilde_checks(&cat("cid+sp(2,C)"), &opts()).unwrap();
    assert!(!t.g_tilde_is_g);
    assert_eq!(t.dim_prolongation, 20);
    assert_eq!(t.dim_g_tilde, 10);
    let t = tilde_checks(&cat("co(3,C)"), &opts()).unwrap();
    assert!(t.g_tilde_is_g);
}

#[test]
fn tilde_requires_conjugation() {
    let mut r = cat("gl(2,C)");
    r.real_form = None;
    assert_eq!(tilde_checks(&r, &opts()).unwrap_err(), CurvError::MissingConjugation);
    let g1 = first_prolongation(&r, &opts()).unwrap();
    assert_eq!(prolong_1_1(&r, &g1, &opts()).unwrap_err(), CurvError::MissingConjugation);
}

#[test]
fn identity_u2() {
    let rep = dim_identity_checks(&cat("u(2)R"), &opts()).unwrap();
    assert_eq!(rep.rep_type, Some(RepType::Complex));
    assert_eq!(rep.dim_bh_real, 12);
    assert_eq!(rep.dim_prolongation, Some(6));
    // Kähler curvature tensors in complex dimension 2: (2·3/2)^2
    assert_eq!(rep.dim_k_real, 9);
    assert_eq!(rep.dim_prolong_1_1, Some(9));
    // computed on the catalog model as well
    assert_eq!(first_prolongation(&cat("gl(2,C)"), &opts()).unwrap().dim, 6);
    assert_eq!(rep.prolongation_holds, Some(true));
    assert!(rep.complexification_holds);
}

#[test]
fn identity_so3_complexification() {
    let rep = dim_identity_checks(&cat("so(3)"), &opts()).unwrap();
    assert_eq!(rep.rep_type, Some(RepType::Real));
    assert_eq!(rep.dim_bh_real, rep.dim_bh_complexified);
    assert_eq!(rep.dim_k_real, rep.dim_k_complexified);
    assert_eq!(rep.prolongation_holds, None);
}

#[test]
fn identity_sp1_k_space() {
    let rep = dim_identity_checks(&cat("sp(1)R"), &opts()).unwrap();
    assert_eq!(rep.rep_type, Some(RepType::Quaternionic));
    assert_eq!(Some(rep.dim_k_real), rep.dim_prolong_1_1);
    assert_eq!(rep.prolongation_holds, Some(true));
}

#[test]
fn module_action_examples() {
    let so3 = cat("so(3)");
    assert!(module_action_check(&so3, &k_space(&so3, &opts()).unwrap()).unwrap());
    let u2 = cat("u(2)R");
    assert!(module_action_check(&u2, &bh_space(&u2, &opts()).unwrap()).unwrap());
    let a2 = cat("adjoint(A,2)");
    assert!(module_action_check(&a2, &bh_space(&a2, &opts()).unwrap()).unwrap());
}

#[test]
fn gamma_examples() {
    let g = gamma_set(&cat("adjoint(A,2)"), &opts()).unwrap();
    assert!(g.gamma_equals_roots_and_zero);
    assert_eq!(g.roots_and_zero.len(), 7);
    assert!(g.span_condition);
    assert_eq!(g.pairing, Some(true));
}

#[test]
fn g2_27_obstruction() {
    let r = cat("sym2_0(g2_7)");
    let g = gamma_set(&r, &opts()).unwrap();
    let rep = curvature_report(&r, &opts()).unwrap();
    assert!(rep.graded);
    assert!(rep.is_weak_berger == Some(false) || !g.gamma_equals_roots_and_zero);
}

#[test]
fn graded_and_plain_agree() {
    for name in ["adjoint(A,2)", "adjoint(B,2)", "g2_7"] {
        let r = cat(name);
        let f = weight_frame(&r).unwrap();
        assert_eq!(pairing_check(&f), Some(true));
        for (kind, plain) in [
            (SpaceKind::Bianchi, bh_space(&r, &opts()).unwrap().dim),
            (SpaceKind::Prolongation, first_prolongation(&r, &opts()).unwrap().dim),
        ] {
            assert_eq!(graded_space(&f, kind, &opts()).unwrap().dim, plain, "{name} {kind:?}");
        }
    }
}

#[test]
fn modular_mode_matches_exact() {
    for name in ["so(4)", "u(2)R", "so(2)+sp(2)R"] {
        let r = cat(name);
        let e = curvature_report(&r, &opts()).unwrap();
        let m = curvature_report(&r, &CurvatureOptions::modular()).unwrap();
        assert_eq!((e.dim_k, e.dim_bh, e.dim_g_underline, e.dim_g_h), (m.dim_k, m.dim_bh, m.dim_g_underline, m.dim_g_h));
        assert_eq!(m.rank_mode, "probabilistic rank");
    }
}

#[test]
fn exact_cap_is_reported() {
    let tight = CurvatureOptions { exact_cap: 10, ..opts() };
    assert!(k_space(&cat("so(4)"), &tight).unwrap_err().is_cap());
}

/// Orthogonal Berger algebras are weak-Berger, and g underline lies in g_h.
#[test]
fn berger_implies_weak_berger() {
    let names = ["so(3)", "so(4)", "so(5)", "u(1)R", "u(2)R", "u(3)R", "adjoint(A,2)", "adjoint(B,2)", "adjoint(G,2)"];
    for name in names {
        let rep = curvature_report(&cat(name), &opts()).unwrap();
        if rep.is_berger {
            assert_eq!(rep.is_weak_berger, Some(true), "{name}");
        }
        assert_eq!(rep.underline_in_h, Some(true), "{name}");
        assert_eq!(rep.ideals_verified, Some(true), "{name}");
    }
}

#[test]
fn block_sums() {
    let weak = |n: &str| curvature_report(&cat(n), &opts()).unwrap().is_weak_berger.unwrap();
    for (a, b) in [("so(3)", "so(3)"), ("so(3)", "u(2)R"), ("so(3)", "so(2)+sp(1)R")] {
        let sum = format!("oplus({a},{b})");
        assert_eq!(weak(&sum), weak(a) && weak(b), "{sum}");
    }
}

fn rebase(r: &MatrixRep, seed: u64) -> MatrixRep {
    let n = r.dim_g();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = loop {
        let vals: Vec<Gauss> = (0..n * n).map(|_| Gauss::int(rng.gen_range(-3..=3), 0)).collect();
        let m: Mat<Gauss> = Mat::from_fn(n, n, |a, b| vals[a * n + b].clone());
        if m.inverse().is_some() {
            break m;
        }
    };
    let basis: Vec<_> = (0..n).map(|a| r.element(&m.row(a))).collect();
    let mut out = MatrixRep { basis, torus: None, ..r.clone() };
    if let Ok(ts) = r.torus_matrices() {
        let sp = SpanCoords::new(&out.basis).unwrap();
        out.torus = ts.iter().map(|t| sp.coords(t)).collect();
    }
    out
}

#[test]
fn reports_are_basis_independent() {
    for name in ["so(4)", "u(2)R", "so(2)+sp(1)R", "adjoint(A,2)"] {
        let r = cat(name);
        let a = curvature_report(&r, &opts()).unwrap();
        let b = curvature_report(&rebase(&r, 7), &opts()).unwrap();
        assert_eq!(a, b, "{name}");
    }
}
