//! Named matrix Lie algebras and a small expression grammar over them.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr := so(n) | u(n)R | su(n)R | sp(n)R | gl(n,C) | sl(n,C) | sp(n,C)
//!       | co(n,C) | cid+sp(n,C) | so(2)+sp(n)R | adjoint(X,n) | g2_7 | zero(n)
//!       | dual(expr) | sym2(expr) | alt2(expr) | sym2_0(expr)
//!       | realify(expr) | complexify(expr) | oplus(expr,expr) | tensor(expr,expr)
//! ```
//!
//! `_R` is accepted in place of the `R` suffix and `g2_7dim` for `g2_7`.
//! `sp(n,C)` acts on `C^{2n}`.

use super::chevalley::adjoint;
use super::functors::{alt2, complexify, dual, oplus, realify, sym2, sym2_0, tensor};
use super::g2::g2_7;
use super::{gi, independent, unit, FieldTag, FormKind, GMat, MatError, MatrixRep};
use crate::field::{Gauss, Scalar};
use crate::linalg::Mat;
use crate::rootsys::Family;

/// Largest `n` accepted by the classical constructors.
pub const MAX_CLASSICAL_N: usize = 24;

fn ident(n: usize) -> GMat {
    Mat::identity(n)
}

/// E_jk - E_kj, j < k.
pub fn so_basis(n: usize) -> Vec<GMat> {
    let mut out = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            out.push(unit(n, j, k).sub(&unit(n, k, j)));
        }
    }
    out
}

/// Compact basis of u(n) on C^n: iE_jj, E_jk - E_kj, i(E_jk + E_kj).
pub fn u_basis(n: usize) -> Vec<GMat> {
    let i = Gauss::i();
    let mut out: Vec<GMat> = (0..n).map(|j| unit(n, j, j).scale(&i)).collect();
    for j in 0..n {
        for k in j + 1..n {
            out.push(unit(n, j, k).sub(&unit(n, k, j)));
            out.push(unit(n, j, k).add(&unit(n, k, j)).scale(&i));
        }
    }
    out
}

/// Compact basis of su(n) on C^n.
pub fn su_basis(n: usize) -> Vec<GMat> {
    let i = Gauss::i();
    let mut out: Vec<GMat> = (0..n.saturating_sub(1)).map(|j| unit(n, j, j).sub(&unit(n, j + 1, j + 1)).scale(&i)).collect();
    for j in 0..n {
        for k in j + 1..n {
            out.push(unit(n, j, k).sub(&unit(n, k, j)));
            out.push(unit(n, j, k).add(&unit(n, k, j)).scale(&i));
        }
    }
    out
}

/// Basis of sp(2n) in block form [[A, B], [C, -A^T]] with B, C symmetric.
pub fn sp_split_basis(n: usize) -> Vec<GMat> {
    let m = 2 * n;
    let mut out = Vec::new();
    for j in 0..n {
        for k in 0..n {
            out.push(unit(m, j, k).sub(&unit(m, n + k, n + j)));
        }
    }
    for j in 0..n {
        for k in j..n {
            let b = if j == k { unit(m, j, n + k) } else { unit(m, j, n + k).add(&unit(m, k, n + j)) };
            out.push(b.clone());
            out.push(b.transpose());
        }
    }
    out
}

/// Compact form sp(n) = sp(2n,C) ∩ u(2n) on C^{2n}.
pub fn sp_compact_basis(n: usize) -> Vec<GMat> {
    let i = Gauss::i();
    let mut cand = Vec::new();
    for x in sp_split_basis(n) {
        cand.push(x.sub(&x.transpose()));
        cand.push(x.add(&x.transpose()).scale(&i));
    }
    independent(cand.into_iter().filter(|m| !m.is_zero()).collect(), FieldTag::Real)
}

/// Standard symplectic form [[0, I], [-I, 0]].
pub fn omega(n: usize) -> GMat {
    let m = 2 * n;
    let mut o = Mat::zeros(m, m);
    for j in 0..n {
        o[(j, n + j)] = Gauss::one();
        o[(n + j, j)] = gi(-1);
    }
    o
}

fn diag_torus(rep: &MatrixRep) -> Option<Vec<Vec<Gauss>>> {
    let sp = rep.span().ok()?;
    let diag: Vec<GMat> = rep
        .basis
        .iter()
        .filter(|b| (0..rep.dim).all(|r| (0..rep.dim).all(|c| r == c || b[(r, c)].is_zero())))
        .cloned()
        .collect();
    diag.iter().map(|d| sp.coords(d)).collect()
}

fn check_n(n: usize, min: usize, name: &str) -> Result<(), MatError> {
    if n < min || n > MAX_CLASSICAL_N {
        return Err(MatError::InvalidDimension(name.to_string()));
    }
    Ok(())
}

pub fn so(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "so")?;
    Ok(MatrixRep::new(format!("so({n})"), FieldTag::Real, n, so_basis(n)).with_form(FormKind::Symmetric, ident(n)))
}

fn complex_std(name: String, n: usize, basis: Vec<GMat>, g0: Vec<GMat>) -> MatrixRep {
    let mut r = MatrixRep::new(name, FieldTag::Complex, n, basis).with_real_form(g0).with_form(FormKind::Hermitian, ident(n));
    r.torus = diag_torus(&r);
    r
}

pub fn gl_c(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "gl")?;
    let mut b = Vec::new();
    for j in 0..n {
        for k in 0..n {
            b.push(unit(n, j, k));
        }
    }
    Ok(complex_std(format!("gl({n},C)"), n, b, u_basis(n)))
}

pub fn sl_c(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 2, "sl")?;
    let mut b: Vec<GMat> = (0..n - 1).map(|j| unit(n, j, j).sub(&unit(n, j + 1, j + 1))).collect();
    for j in 0..n {
        for k in 0..n {
            if j != k {
                b.push(unit(n, j, k));
            }
        }
    }
    Ok(complex_std(format!("sl({n},C)"), n, b, su_basis(n)))
}

pub fn sp_c(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "sp")?;
    let mut r = MatrixRep::new(format!("sp({n},C)"), FieldTag::Complex, 2 * n, sp_split_basis(n))
        .with_real_form(sp_compact_basis(n))
        .with_form(FormKind::Antisymmetric, omega(n));
    r.torus = diag_torus(&r);
    Ok(r)
}

pub fn cid_sp_c(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "cid+sp")?;
    let m = 2 * n;
    let mut b = sp_split_basis(n);
    b.push(ident(m));
    let mut g0 = sp_compact_basis(n);
    g0.push(ident(m).scale(&Gauss::i()));
    Ok(complex_std(format!("cid+sp({n},C)"), m, b, g0))
}

pub fn co_c(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "co")?;
    let mut b = so_basis(n);
    b.push(ident(n));
    let mut g0 = so_basis(n);
    g0.push(ident(n).scale(&Gauss::i()));
    let mut r = MatrixRep::new(format!("co({n},C)"), FieldTag::Complex, n, b).with_real_form(g0).with_form(FormKind::Hermitian, ident(n));
    r.torus = None;
    Ok(r)
}

/// u(n), su(n) or sp(n) on C^n / C^{2n}, viewed as a real algebra inside so(2n) / so(4n).
fn compact_realified(name: String, dim: usize, g0: Vec<GMat>) -> Result<MatrixRep, MatError> {
    let c = MatrixRep::new(name.clone(), FieldTag::Complex, dim, g0.clone()).with_real_form(g0).with_form(FormKind::Hermitian, ident(dim));
    let mut r = realify(&c)?;
    r.name = name;
    Ok(r)
}

pub fn u_r(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "u")?;
    compact_realified(format!("u({n})R"), n, u_basis(n))
}

pub fn su_r(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 2, "su")?;
    compact_realified(format!("su({n})R"), n, su_basis(n))
}

pub fn sp_r(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "sp")?;
    compact_realified(format!("sp({n})R"), 2 * n, sp_compact_basis(n))
}

/// iR ⊕ sp(n) acting on C^{2n} = R^{4n}.
pub fn so2_sp_r(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "so(2)+sp")?;
    let mut g0 = sp_compact_basis(n);
    g0.push(ident(2 * n).scale(&Gauss::i()));
    compact_realified(format!("so(2)+sp({n})R"), 2 * n, g0)
}

/// The zero algebra acting on R^n.
pub fn zero(n: usize) -> Result<MatrixRep, MatError> {
    check_n(n, 1, "zero")?;
    Ok(MatrixRep::new(format!("zero({n})"), FieldTag::Real, n, Vec::new()).with_form(FormKind::Symmetric, ident(n)))
}

fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Splits `head(args)suffix` at the outermost parentheses.
fn call(s: &str) -> Option<(&str, &str, &str)> {
    let open = s.find('(')?;
    let mut depth = 0i32;
    for (i, ch) in s.char_indices().skip(open) {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some((&s[..open], &s[open + 1..i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_n(s: &str, whole: &str) -> Result<usize, MatError> {
    s.parse::<usize>().map_err(|_| MatError::InvalidDimension(whole.to_string()))
}

fn build(s: &str) -> Result<MatrixRep, MatError> {
    if s == "g2_7" || s == "g2_7dim" {
        return g2_7();
    }
    if let Some(rest) = s.strip_prefix("cid+") {
        let (h, a, suf) = call(rest).ok_or_else(|| MatError::UnknownName(s.into()))?;
        let args = split_args(a);
        if h == "sp" && suf.is_empty() && args.len() == 2 && args[1] == "C" {
            return cid_sp_c(parse_n(args[0], s)?);
        }
        return Err(MatError::UnknownName(s.into()));
    }
    if let Some(rest) = s.strip_prefix("so(2)+") {
        let (h, a, suf) = call(rest).ok_or_else(|| MatError::UnknownName(s.into()))?;
        if h == "sp" && suf == "R" {
            return so2_sp_r(parse_n(a, s)?);
        }
        return Err(MatError::UnknownName(s.into()));
    }
    let (head, inner, suffix) = call(s).ok_or_else(|| MatError::UnknownName(s.into()))?;
    let args = split_args(inner);
    let one = |f: fn(&MatrixRep) -> Result<MatrixRep, MatError>| -> Result<MatrixRep, MatError> {
        if args.len() != 1 || !suffix.is_empty() {
            return Err(MatError::UnknownName(s.into()));
        }
        f(&build(args[0])?)
    };
    let two = |f: fn(&MatrixRep, &MatrixRep) -> Result<MatrixRep, MatError>| -> Result<MatrixRep, MatError> {
        if args.len() != 2 || !suffix.is_empty() {
            return Err(MatError::UnknownName(s.into()));
        }
        f(&build(args[0])?, &build(args[1])?)
    };
    match (head, args.len(), suffix) {
        ("so", 1, "") => so(parse_n(args[0], s)?),
        ("zero", 1, "") => zero(parse_n(args[0], s)?),
        ("u", 1, "R") => u_r(parse_n(args[0], s)?),
        ("su", 1, "R") => su_r(parse_n(args[0], s)?),
        ("sp", 1, "R") => sp_r(parse_n(args[0], s)?),
        ("gl", 2, "") if args[1] == "C" => gl_c(parse_n(args[0], s)?),
        ("sl", 2, "") if args[1] == "C" => sl_c(parse_n(args[0], s)?),
        ("sp", 2, "") if args[1] == "C" => sp_c(parse_n(args[0], s)?),
        ("co", 2, "") if args[1] == "C" => co_c(parse_n(args[0], s)?),
        ("adjoint", 2, "") => {
            let fam = Family::parse(args[0]).ok_or_else(|| MatError::UnknownName(s.into()))?;
            let rank = parse_n(args[1], s)?;
            if !fam.valid_rank(rank) {
                return Err(MatError::InvalidDimension(s.into()));
            }
            adjoint(fam, rank)
        }
        ("dual", ..) => one(dual),
        ("sym2", ..) => one(sym2),
        ("alt2", ..) => one(alt2),
        ("sym2_0", ..) => one(sym2_0),
        ("realify", ..) => one(realify),
        ("complexify", ..) => one(complexify),
        ("oplus", ..) => two(oplus),
        ("tensor", ..) => two(tensor),
        _ => Err(MatError::UnknownName(s.into())),
    }
}

/// Builds and verifies a catalog entry by name.
pub fn catalog(name: &str) -> Result<MatrixRep, MatError> {
    let norm: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace("_R", "R");
    let mut r = build(&norm)?;
    r.name = norm;
    if r.dim * r.dim * r.dim_g().max(1) <= VERIFY_ENTRY_CAP {
        r.verify()?;
    }
    Ok(r)
}

/// Above this many matrix entries generic verification is skipped; the
/// adjoint constructor verifies its own integer structure constants.
pub const VERIFY_ENTRY_CAP: usize = 400_000;

/// Representative catalog names with their algebra and module dimensions.
pub const LISTED: &[&str] = &[
    "so(3)",
    "so(4)",
    "so(5)",
    "u(2)R",
    "su(2)R",
    "u(3)R",
    "sp(1)R",
    "sp(2)R",
    "so(2)+sp(2)R",
    "gl(2,C)",
    "sl(2,C)",
    "sl(3,C)",
    "sp(1,C)",
    "sp(2,C)",
    "co(3,C)",
    "cid+sp(2,C)",
    "adjoint(A,2)",
    "adjoint(B,2)",
    "adjoint(G,2)",
    "adjoint(F,4)",
    "g2_7",
    "sym2_0(g2_7)",
    "alt2(gl(5,C))",
    "oplus(so(3),so(4))",
];

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub field: FieldTag,
    pub dim_g: usize,
    pub dim_v: usize,
    pub form: Option<FormKind>,
}

pub fn catalog_listing() -> Result<Vec<CatalogEntry>, MatError> {
    LISTED
        .iter()
        .map(|n| {
            let r = catalog(n)?;
            Ok(CatalogEntry { name: r.name.clone(), field: r.field, dim_g: r.dim_g(), dim_v: r.dim, form: r.form.as_ref().map(|f| f.kind) })
        })
        .collect()
}
