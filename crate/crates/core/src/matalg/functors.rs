//! Representation functors: dual, sums, tensor products, symmetric and
//! exterior squares, traceless symmetric square, realification and
//! complexification.

use super::{check_dense, independent, FieldTag, FormKind, GMat, MatError, MatrixRep, PreservedForm, SpanCoords, DEFAULT_TENSOR_CAP};
use crate::field::{Gauss, Scalar};
use crate::linalg::{CoordSolver, Mat};

/// Functors with a configurable bound on the ambient tensor dimension.
#[derive(Clone, Copy, Debug)]
pub struct Functors {
    pub cap: usize,
}

impl Default for Functors {
    fn default() -> Self {
        Functors { cap: DEFAULT_TENSOR_CAP }
    }
}

fn kind_product(a: FormKind, b: FormKind) -> Option<FormKind> {
    use FormKind::*;
    match (a, b) {
        (Hermitian, Hermitian) => Some(Hermitian),
        (Hermitian, _) | (_, Hermitian) => None,
        (x, y) if x == y => Some(Symmetric),
        _ => Some(Antisymmetric),
    }
}

fn map_basis(r: &MatrixRep, f: impl Fn(&GMat) -> GMat) -> (Vec<GMat>, Option<Vec<GMat>>) {
    (r.basis.iter().map(&f).collect(), r.real_form.as_ref().map(|g0| g0.iter().map(&f).collect()))
}

/// Recomputes torus coordinates from torus matrices after a basis change.
fn attach_torus(r: &mut MatrixRep, torus: Option<Vec<GMat>>) {
    r.torus = torus.and_then(|ts| {
        let sp = SpanCoords::new(&r.basis)?;
        ts.iter().map(|t| sp.coords(t)).collect()
    });
}

/// Tensors with at most two terms: `(i, j, coefficient)` for `e_i ⊗ e_j`.
type SmallTensor = Vec<(usize, usize, i64)>;

fn tensor_gram(ts: &[SmallTensor], b: &GMat) -> GMat {
    let n = ts.len();
    Mat::from_fn(n, n, |p, q| {
        let mut s = Gauss::zero();
        for &(i, j, c) in &ts[p] {
            for &(k, l, d) in &ts[q] {
                let v = b[(i, k)].times(&b[(j, l)]);
                if !v.is_zero() {
                    s = s.plus(&v.times(&Gauss::from_i64(c * d)));
                }
            }
        }
        s
    })
}

fn sym_index(d: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 0..d {
        for b in a..d {
            v.push((a, b));
        }
    }
    v
}

fn alt_index(d: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            v.push((a, b));
        }
    }
    v
}

fn pos(d: usize, a: usize, b: usize, strict: bool) -> usize {
    // row-major position of (a, b), a <= b (a < b when strict)
    if strict {
        a * (2 * d - a - 1) / 2 + (b - a - 1)
    } else {
        a * (2 * d - a + 1) / 2 + (b - a)
    }
}

fn sym2_matrix(x: &GMat) -> GMat {
    let d = x.rows;
    let idx = sym_index(d);
    let m = idx.len();
    let mut y: GMat = Mat::zeros(m, m);
    // s(p, q) = m_pq for p != q and 2 m_pp otherwise
    let mut add = |col: usize, p: usize, q: usize, c: &Gauss| {
        if c.is_zero() {
            return;
        }
        let (a, b) = if p <= q { (p, q) } else { (q, p) };
        let row = pos(d, a, b, false);
        let v = if a == b { c.plus(c) } else { c.clone() };
        y[(row, col)] = y[(row, col)].plus(&v);
    };
    for (col, &(a, b)) in idx.iter().enumerate() {
        for k in 0..d {
            add(col, k, b, &x[(k, a)]);
            if a != b {
                add(col, a, k, &x[(k, b)]);
            }
        }
    }
    y
}

fn alt2_matrix(x: &GMat) -> GMat {
    let d = x.rows;
    let idx = alt_index(d);
    let m = idx.len();
    let mut y: GMat = Mat::zeros(m, m);
    let mut add = |col: usize, p: usize, q: usize, c: &Gauss| {
        if c.is_zero() || p == q {
            return;
        }
        let (a, b, v) = if p < q { (p, q, c.clone()) } else { (q, p, c.negate()) };
        let row = pos(d, a, b, true);
        y[(row, col)] = y[(row, col)].plus(&v);
    };
    for (col, &(a, b)) in idx.iter().enumerate() {
        for k in 0..d {
            add(col, k, b, &x[(k, a)]);
            add(col, a, k, &x[(k, b)]);
        }
    }
    y
}

/// Restricts operators preserving the column span of `sub` to that span.
pub fn restrict(x: &GMat, sub: &[Vec<Gauss>], solver: &CoordSolver<Gauss>) -> Option<GMat> {
    let cols: Option<Vec<Vec<Gauss>>> = sub.iter().map(|v| solver.coords(&x.apply(v))).collect();
    Some(Mat::from_columns(&cols?))
}

/// Gram matrix of a form restricted to the span of `sub`.
pub fn restrict_gram(f: &PreservedForm, sub: &[Vec<Gauss>]) -> GMat {
    let k = sub.len();
    Mat::from_fn(k, k, |i, j| {
        let bv = f.gram.apply(&sub[j]);
        let mut s = Gauss::zero();
        for (u, w) in sub[i].iter().zip(&bv) {
            let u = if f.kind == FormKind::Hermitian { u.conj() } else { u.clone() };
            s.add_mul(&u, w);
        }
        s
    })
}

impl Functors {
    fn cap_check(&self, d: usize) -> Result<(), MatError> {
        if d > self.cap {
            return Err(MatError::CapExceeded { dim: d, cap: self.cap });
        }
        Ok(())
    }

    /// Dual module: X acts by -X^T; the form becomes its inverse.
    pub fn dual(&self, r: &MatrixRep) -> Result<MatrixRep, MatError> {
        let (basis, g0) = map_basis(r, |x| x.transpose().neg());
        let form = match &r.form {
            Some(f) => {
                let inv = f.gram.inverse().ok_or(MatError::DegenerateForm)?;
                let gram = if f.kind == FormKind::Hermitian { inv.conj() } else { inv };
                Some(PreservedForm { kind: f.kind, gram })
            }
            None => None,
        };
        Ok(MatrixRep { name: format!("dual({})", r.name), field: r.field, dim: r.dim, basis, form, real_form: g0, torus: r.torus.clone() })
    }

    /// Block sum of two algebras acting on V1 ⊕ V2.
    pub fn oplus(&self, a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep, MatError> {
        if a.field != b.field {
            return Err(MatError::FieldMismatch(a.field));
        }
        let (na, nb) = (a.dim, b.dim);
        self.cap_check(na + nb)?;
        let za = Mat::zeros(na, na);
        let zb = Mat::zeros(nb, nb);
        let lift = |xs: &[GMat], ys: &[GMat]| -> Vec<GMat> {
            xs.iter().map(|x| x.block_diag(&zb)).chain(ys.iter().map(|y| za.block_diag(y))).collect()
        };
        let basis = lift(&a.basis, &b.basis);
        let real_form = match (a.field, &a.real_form, &b.real_form) {
            (FieldTag::Complex, Some(x), Some(y)) => Some(lift(x, y)),
            (FieldTag::Complex, None, None) => None,
            (FieldTag::Complex, x, y) => Some(lift(x.as_deref().unwrap_or(&a.basis), y.as_deref().unwrap_or(&b.basis))),
            _ => None,
        };
        let form = match (&a.form, &b.form) {
            (Some(f), Some(g)) if f.kind == g.kind => Some(PreservedForm { kind: f.kind, gram: f.gram.block_diag(&g.gram) }),
            _ => None,
        };
        let torus = match (a.torus_matrices(), b.torus_matrices()) {
            (Ok(x), Ok(y)) => Some(lift(&x, &y)),
            _ => None,
        };
        let mut r = MatrixRep { name: format!("oplus({},{})", a.name, b.name), field: a.field, dim: na + nb, basis, form, real_form, torus: None };
        attach_torus(&mut r, torus);
        Ok(r)
    }

    /// Product algebra acting on V1 ⊗ V2 by X ⊗ 1 + 1 ⊗ Y.
    pub fn tensor(&self, a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep, MatError> {
        if a.field != b.field {
            return Err(MatError::FieldMismatch(a.field));
        }
        let d = a.dim * b.dim;
        self.cap_check(d)?;
        check_dense(d, a.dim_g() + b.dim_g())?;
        let ia: GMat = Mat::identity(a.dim);
        let ib: GMat = Mat::identity(b.dim);
        let lift = |xs: &[GMat], ys: &[GMat]| -> Vec<GMat> {
            xs.iter().map(|x| x.kron(&ib)).chain(ys.iter().map(|y| ia.kron(y))).collect()
        };
        let basis = independent(lift(&a.basis, &b.basis), a.field);
        let real_form = match a.field {
            FieldTag::Complex if a.real_form.is_some() || b.real_form.is_some() => Some(independent(
                lift(a.real_form.as_deref().unwrap_or(&a.basis), b.real_form.as_deref().unwrap_or(&b.basis)),
                FieldTag::Real,
            )),
            _ => None,
        };
        let form = match (&a.form, &b.form) {
            (Some(f), Some(g)) => kind_product(f.kind, g.kind).map(|kind| PreservedForm { kind, gram: f.gram.kron(&g.gram) }),
            _ => None,
        };
        let torus = match (a.torus_matrices(), b.torus_matrices()) {
            (Ok(x), Ok(y)) => Some(independent(lift(&x, &y), FieldTag::Complex)),
            _ => None,
        };
        let mut r = MatrixRep { name: format!("tensor({},{})", a.name, b.name), field: a.field, dim: d, basis, form, real_form, torus: None };
        attach_torus(&mut r, torus);
        Ok(r)
    }

    fn square(&self, r: &MatrixRep, alt: bool) -> Result<MatrixRep, MatError> {
        let d = r.dim;
        self.cap_check(d * d)?;
        let m = if alt { d * d.saturating_sub(1) / 2 } else { d * (d + 1) / 2 };
        check_dense(m, r.dim_g())?;
        let f = if alt { alt2_matrix } else { sym2_matrix };
        let (basis, real_form) = map_basis(r, f);
        let ts: Vec<SmallTensor> = if alt {
            alt_index(d).into_iter().map(|(a, b)| vec![(a, b, 1), (b, a, -1)]).collect()
        } else {
            sym_index(d).into_iter().map(|(a, b)| if a == b { vec![(a, a, 1)] } else { vec![(a, b, 1), (b, a, 1)] }).collect()
        };
        let form = r.form.as_ref().and_then(|g| {
            let kind = kind_product(g.kind, g.kind)?;
            Some(PreservedForm { kind, gram: tensor_gram(&ts, &g.gram) })
        });
        let tag = if alt { "alt2" } else { "sym2" };
        Ok(MatrixRep { name: format!("{tag}({})", r.name), field: r.field, dim: m, basis, form, real_form, torus: r.torus.clone() })
    }

    pub fn sym2(&self, r: &MatrixRep) -> Result<MatrixRep, MatError> {
        self.square(r, false)
    }

    pub fn alt2(&self, r: &MatrixRep) -> Result<MatrixRep, MatError> {
        self.square(r, true)
    }

    /// Kernel of the contraction with the inverse of the preserved
    /// symmetric form inside the symmetric square.
    pub fn sym2_0(&self, r: &MatrixRep) -> Result<MatrixRep, MatError> {
        let f = r.form.as_ref().filter(|f| f.kind == FormKind::Symmetric).ok_or(MatError::NoForm)?;
        let c = f.gram.inverse().ok_or(MatError::DegenerateForm)?;
        let s = self.sym2(r)?;
        let d = r.dim;
        let psi: Vec<Gauss> = sym_index(d).into_iter().map(|(a, b)| if a == b { c[(a, a)].clone() } else { c[(a, b)].plus(&c[(a, b)]) }).collect();
        let psi_m = Mat { rows: 1, cols: psi.len(), data: psi };
        let sub = psi_m.kernel();
        let solver = CoordSolver::new(sub.clone()).ok_or(MatError::Dependent)?;
        let restrict_all = |xs: &[GMat]| -> Result<Vec<GMat>, MatError> {
            xs.iter().map(|x| restrict(x, &sub, &solver).ok_or(MatError::NotClosed)).collect()
        };
        let basis = restrict_all(&s.basis)?;
        let real_form = s.real_form.as_deref().map(restrict_all).transpose()?;
        let form = s.form.as_ref().map(|g| PreservedForm { kind: g.kind, gram: restrict_gram(g, &sub) });
        Ok(MatrixRep { name: format!("sym2_0({})", r.name), field: r.field, dim: sub.len(), basis, form, real_form, torus: s.torus.clone() })
    }

    /// Underlying real module of a complex one, X = P + iQ ↦ [[P, -Q], [Q, P]].
    pub fn realify(&self, r: &MatrixRep) -> Result<MatrixRep, MatError> {
        if r.field != FieldTag::Complex {
            return Err(MatError::FieldMismatch(FieldTag::Complex));
        }
        self.cap_check(2 * r.dim)?;
        let src: Vec<GMat> = match &r.real_form {
            Some(g0) => g0.clone(),
            None => {
                let i = Gauss::i();
                independent(r.basis.iter().cloned().chain(r.basis.iter().map(|b| b.scale(&i))).collect(), FieldTag::Real)
            }
        };
        let basis: Vec<GMat> = src.iter().map(realify_matrix).collect();
        // a bilinear form that is also an invariant hermitian form (a real
        // definite form on a complexification) realifies to a definite one
        let hermitian_ok = |g: &GMat| *g == g.adjoint() && src.iter().all(|x| x.adjoint().mul(g).add(&g.mul(x)).is_zero());
        let form = r.form.as_ref().map(|f| match f.kind {
            FormKind::Hermitian => PreservedForm { kind: FormKind::Symmetric, gram: realify_matrix(&f.gram) },
            _ if hermitian_ok(&f.gram) => PreservedForm { kind: FormKind::Symmetric, gram: realify_matrix(&f.gram) },
            k => PreservedForm { kind: k, gram: real_part_form(&f.gram) },
        });
        Ok(MatrixRep { name: format!("realify({})", r.name), field: FieldTag::Real, dim: 2 * r.dim, basis, form, real_form: None, torus: None })
    }

    /// Extension of scalars; the original real algebra becomes the real form.
    pub fn complexify(&self, r: &MatrixRep) -> Result<MatrixRep, MatError> {
        if r.field != FieldTag::Real {
            return Err(MatError::FieldMismatch(FieldTag::Real));
        }
        Ok(MatrixRep {
            name: format!("complexify({})", r.name),
            field: FieldTag::Complex,
            dim: r.dim,
            basis: r.basis.clone(),
            form: r.form.clone(),
            real_form: Some(r.basis.clone()),
            torus: r.torus.clone(),
        })
    }
}

pub fn realify_matrix(x: &GMat) -> GMat {
    let n = x.rows;
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        let e = &x[(i % n, j % n)];
        let v = match (i < n, j < n) {
            (true, true) | (false, false) => e.real_part(),
            (true, false) => -e.imag_part(),
            (false, true) => e.imag_part(),
        };
        Gauss::real(v)
    })
}

/// Real part of a complex bilinear form on the realification.
fn real_part_form(b: &GMat) -> GMat {
    let n = b.rows;
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        let e = &b[(i % n, j % n)];
        let v = match (i < n, j < n) {
            (true, true) => e.real_part(),
            (false, false) => -e.real_part(),
            _ => -e.imag_part(),
        };
        Gauss::real(v)
    })
}

pub fn dual(r: &MatrixRep) -> Result<MatrixRep, MatError> {
    Functors::default().dual(r)
}
pub fn oplus(a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep, MatError> {
    Functors::default().oplus(a, b)
}
pub fn tensor(a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep, MatError> {
    Functors::default().tensor(a, b)
}
pub fn sym2(r: &MatrixRep) -> Result<MatrixRep, MatError> {
    Functors::default().sym2(r)
}
pub fn alt2(r: &MatrixRep) -> Result<MatrixRep, MatError> {
    Functors::default().alt2(r)
}
pub fn sym2_0(r: &MatrixRep) -> Result<MatrixRep, MatError> {
    Functors::default().sym2_0(r)
}
pub fn realify(r: &MatrixRep) -> Result<MatrixRep, MatError> {
    Functors::default().realify(r)
}
pub fn complexify(r: &MatrixRep) -> Result<MatrixRep, MatError> {
    Functors::default().complexify(r)
}
