//! Prolongations of complex algebras, the conjugate-paired space g^[1,1],
//! and dimension identities between real algebras and their complexifications.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{bh_space, first_prolongation, k_space, CurvError, CurvatureOptions, SubspaceBasis};
use crate::field::{Gauss, Rat, Scalar};
use crate::linalg::{CoordSolver, Echelon, LinearSystem, Mat};
use crate::matalg::{
    classify_type, complex_structure, FieldTag, FormKind, GMat, MatError, MatrixRep, PreservedForm, RepType, SpanCoords,
};

/// Seed for the change of basis used on the complexified side of identity checks.
pub const CONJUGATE_SEED: u64 = 0xc0de_4242;

/// Conjugates the representation by a random invertible Gaussian-integer
/// matrix and marks it complex. Algebra coordinates are unchanged.
pub fn random_conjugate(r: &MatrixRep, seed: u64) -> MatrixRep {
    let n = r.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, pinv) = loop {
        let vals: Vec<Gauss> = (0..n * n).map(|_| Gauss::int(rng.gen_range(-2..=2), rng.gen_range(-1..=1))).collect();
        let p: GMat = Mat::from_fn(n, n, |a, b| vals[a * n + b].clone());
        if let Some(inv) = p.inverse() {
            break (p, inv);
        }
    };
    let conj = |x: &GMat| pinv.mul(x).mul(&p);
    let form = r.form.as_ref().map(|f| PreservedForm {
        kind: f.kind,
        gram: match f.kind {
            FormKind::Hermitian => p.adjoint().mul(&f.gram).mul(&p),
            _ => p.transpose().mul(&f.gram).mul(&p),
        },
    });
    MatrixRep {
        name: r.name.clone(),
        field: FieldTag::Complex,
        dim: n,
        basis: r.basis.iter().map(conj).collect(),
        form,
        real_form: Some(r.real_basis().iter().map(conj).collect()),
        torus: r.torus.clone(),
    }
}

/// The complex module `(V, J)` of a real module with complex structure `J`,
/// realized on the `+i` eigenspace of `J`, with `g = g0 ⊗ C` acting and
/// `g0` as real form.
pub fn complex_module(r: &MatrixRep, j: &GMat) -> Result<MatrixRep, CurvError> {
    if r.field != FieldTag::Real {
        return Err(MatError::FieldMismatch(FieldTag::Real).into());
    }
    let n = r.dim;
    let w = j.sub(&Mat::identity(n).scale(&Gauss::i())).kernel();
    if 2 * w.len() != n {
        return Err(MatError::NoForm.into());
    }
    let m = w.len();
    let solver = CoordSolver::new(w.clone()).ok_or(MatError::Dependent)?;
    let restrict = |x: &GMat| -> Option<GMat> {
        let cols: Option<Vec<Vec<Gauss>>> = w.iter().map(|v| solver.coords(&x.apply(v))).collect();
        Some(Mat::from_columns(&cols?))
    };
    let basis: Option<Vec<GMat>> = r.basis.iter().map(restrict).collect();
    let basis = basis.ok_or(MatError::NotClosed)?;
    if SpanCoords::new(&basis).is_none() && !basis.is_empty() {
        return Err(MatError::Dependent.into());
    }
    let mut out = MatrixRep::new(format!("complex({})", r.name), FieldTag::Complex, m, basis.clone()).with_real_form(basis);
    if let Some(f) = &r.form {
        if f.kind == FormKind::Symmetric {
            let wm = Mat::from_columns(&w);
            out = out.with_form(FormKind::Hermitian, wm.adjoint().mul(&f.gram).mul(&wm));
        }
    }
    Ok(out)
}

/// Basis of g^[1,1] as a real vector space. A vector holds the complex
/// coefficients `r[k * m + s]` of `R(ē_k, ·) = Σ_s r_ks P_s` over the basis
/// `P_s` of g^(1).
#[derive(Clone, Debug)]
pub struct Prolong11 {
    pub dim: usize,
    pub prolongation_dim: usize,
    pub vectors: Vec<Vec<Gauss>>,
    /// Complex span of all values R(ū, v), in coordinates over the algebra basis.
    pub value_span: Vec<Vec<Gauss>>,
}

/// g^[1,1] = {R ∈ V̄*⊗g^(1) : conj(R(ū,v)) = -R(v̄,u)}, conjugation taken
/// relative to the real form of `r`.
pub fn prolong_1_1(r: &MatrixRep, g1: &SubspaceBasis, opts: &CurvatureOptions) -> Result<Prolong11, CurvError> {
    if r.field != FieldTag::Complex {
        return Err(MatError::FieldMismatch(FieldTag::Complex).into());
    }
    let g0 = r.real_form.as_ref().ok_or(CurvError::MissingConjugation)?;
    if !g1.is_exact() {
        return Err(CurvError::NeedsExact);
    }
    let n = r.dim;
    let dg = r.dim_g();
    let m = g1.dim;
    let unknowns = 2 * n * m;
    if unknowns > opts.exact_cap {
        return Err(CurvError::CapExceeded { unknowns, cap: opts.exact_cap, mode: "exact" });
    }
    let q: Vec<Vec<Gauss>> = (0..m).map(|s| g1.dense(s)).collect();
    // p[s][l] = coordinates of P_s(e_l) over the real form
    let sp = SpanCoords::new(g0).ok_or(MatError::Dependent)?;
    let mut p: Vec<Vec<Vec<Gauss>>> = Vec::with_capacity(m);
    for qs in &q {
        let mut per = Vec::with_capacity(n);
        for l in 0..n {
            let x = r.element(&qs[l * dg..(l + 1) * dg]);
            per.push(sp.coords(&x).ok_or(MatError::NotClosed)?);
        }
        p.push(per);
    }
    let xi = |k: usize, s: usize| 2 * (k * m + s);
    let mut sys: LinearSystem<Rat> = LinearSystem::new(unknowns);
    for k in 0..n {
        for l in k..n {
            for a in 0..dg {
                let mut re = Vec::new();
                let mut im = Vec::new();
                for s in 0..m {
                    // conj(r_ks p_{s,l,a})
                    let (al, be) = (p[s][l][a].re.clone(), p[s][l][a].im.clone());
                    re.push((xi(k, s), al.clone()));
                    re.push((xi(k, s) + 1, -be.clone()));
                    im.push((xi(k, s), -be));
                    im.push((xi(k, s) + 1, -al));
                    // r_ls p_{s,k,a}
                    let (al, be) = (p[s][k][a].re.clone(), p[s][k][a].im.clone());
                    re.push((xi(l, s), al.clone()));
                    re.push((xi(l, s) + 1, -be.clone()));
                    im.push((xi(l, s), be));
                    im.push((xi(l, s) + 1, al));
                }
                sys.push(re);
                sys.push(im);
            }
        }
    }
    let ker = sys.kernel();
    let vectors: Vec<Vec<Gauss>> = ker
        .iter()
        .map(|v| (0..n * m).map(|t| Gauss::new(v[2 * t].clone(), v[2 * t + 1].clone())).collect())
        .collect();
    let mut e: Echelon<Gauss> = Echelon::new(dg);
    'outer: for v in &vectors {
        for k in 0..n {
            for l in 0..n {
                if e.rank() == dg {
                    break 'outer;
                }
                let mut val = vec![Gauss::zero(); dg];
                for s in 0..m {
                    let c = &v[k * m + s];
                    if c.is_zero() {
                        continue;
                    }
                    for (t, x) in val.iter_mut().enumerate() {
                        x.add_mul(c, &q[s][l * dg + t]);
                    }
                }
                e.insert(val);
            }
        }
    }
    Ok(Prolong11 { dim: vectors.len(), prolongation_dim: m, vectors, value_span: e.basis().to_vec() })
}

/// Evaluation spans of the prolongations of a complex algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TildeReport {
    pub algebra_name: String,
    pub dim_g: usize,
    pub dim_prolongation: usize,
    pub dim_g_tilde: usize,
    pub dim_prolong_1_1: usize,
    pub dim_g_tilde_tilde: usize,
    pub g_tilde_is_g: bool,
    pub g_tilde_tilde_is_g: bool,
}

pub fn tilde_checks(r: &MatrixRep, opts: &CurvatureOptions) -> Result<TildeReport, CurvError> {
    if r.field != FieldTag::Complex {
        return Err(MatError::FieldMismatch(FieldTag::Complex).into());
    }
    if r.real_form.is_none() {
        return Err(CurvError::MissingConjugation);
    }
    let mut exact = *opts;
    exact.arithmetic = crate::linalg::Arithmetic::Exact;
    let g1 = first_prolongation(r, &exact)?;
    let tilde = g1.evaluation_span()?;
    let p11 = prolong_1_1(r, &g1, &exact)?;
    let dg = r.dim_g();
    Ok(TildeReport {
        algebra_name: r.name.clone(),
        dim_g: dg,
        dim_prolongation: g1.dim,
        dim_g_tilde: tilde.dim,
        dim_prolong_1_1: p11.dim,
        dim_g_tilde_tilde: p11.value_span.len(),
        g_tilde_is_g: tilde.dim == dg,
        g_tilde_tilde_is_g: p11.value_span.len() == dg,
    })
}

/// Independent computations of both sides of the complexification and
/// prolongation identities for an orthogonal real algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub algebra_name: String,
    pub rep_type: Option<RepType>,
    pub dim_bh_real: usize,
    pub dim_bh_complexified: usize,
    pub dim_k_real: usize,
    pub dim_k_complexified: usize,
    /// dim_C g^(1) for the complex module, non-real type only. The real
    /// dimension 2 dim_C g^(1) is what matches dim_R B_h.
    pub dim_prolongation: Option<usize>,
    /// dim_R g^[1,1] for the complex module, non-real type only.
    pub dim_prolong_1_1: Option<usize>,
    pub complexification_holds: bool,
    pub prolongation_holds: Option<bool>,
}

pub fn dim_identity_checks(r: &MatrixRep, opts: &CurvatureOptions) -> Result<IdentityReport, CurvError> {
    if r.field != FieldTag::Real {
        return Err(MatError::FieldMismatch(FieldTag::Real).into());
    }
    let mut exact = *opts;
    exact.arithmetic = crate::linalg::Arithmetic::Exact;
    let bh_r = bh_space(r, &exact)?.dim;
    let k_r = k_space(r, &exact)?.dim;
    let c = random_conjugate(r, CONJUGATE_SEED);
    let bh_c = bh_space(&c, &exact)?.dim;
    let k_c = k_space(&c, &exact)?.dim;
    let rep_type = classify_type(r).ok();
    let (g1, p11) = match rep_type {
        Some(RepType::Complex) | Some(RepType::Quaternionic) => {
            let j = complex_structure(r)?;
            let cm = complex_module(r, &j)?;
            let g1 = first_prolongation(&cm, &exact)?;
            let p11 = prolong_1_1(&cm, &g1, &exact)?;
            (Some(g1.dim), Some(p11.dim))
        }
        _ => (None, None),
    };
    Ok(IdentityReport {
        algebra_name: r.name.clone(),
        rep_type,
        dim_bh_real: bh_r,
        dim_bh_complexified: bh_c,
        dim_k_real: k_r,
        dim_k_complexified: k_c,
        dim_prolongation: g1,
        dim_prolong_1_1: p11,
        complexification_holds: bh_r == bh_c && k_r == k_c,
        prolongation_holds: g1.zip(p11).map(|(a, b)| 2 * a == bh_r && b == k_r),
    })
}
