//! Torus weights: simultaneous diagonalization, weight frames and Γ.

use std::collections::HashSet;

use num_traits::Zero;
use serde::Serialize;

use super::{graded_space, CurvError, CurvatureOptions, SpaceKind, SubspaceBasis};
use crate::field::{Gauss, Scalar};
use crate::linalg::{CoordSolver, Echelon, Mat};
use crate::matalg::modules::{gaussian_roots, min_poly};
use crate::matalg::{FieldTag, FormKind, GMat, MatError, MatrixRep, PreservedForm, SpanCoords};

/// Eigenvalues of the torus generators on a common eigenvector.
pub type Weight = Vec<Gauss>;

/// A representation rewritten in weight bases of `V` and of `g`.
#[derive(Clone, Debug)]
pub struct WeightFrame {
    /// Complex representation whose basis consists of weight vectors of `g`
    /// acting on a weight basis of `V`.
    pub rep: MatrixRep,
    pub v_weights: Vec<Weight>,
    pub g_weights: Vec<Weight>,
    /// Columns are the weight vectors of `V` in the original coordinates.
    pub change: GMat,
}

/// Common eigenvectors of commuting matrices, each tagged with its weight.
pub fn simultaneous_eigenvectors(mats: &[GMat], n: usize) -> Result<Vec<(Weight, Vec<Gauss>)>, MatError> {
    let units: Vec<Vec<Gauss>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Gauss::one() } else { Gauss::zero() }).collect())
        .collect();
    let mut blocks: Vec<(Weight, Vec<Vec<Gauss>>)> = if n == 0 { Vec::new() } else { vec![(Vec::new(), units)] };
    for t in mats {
        let mut next = Vec::new();
        for (w, vs) in blocks {
            let k = vs.len();
            let solver = CoordSolver::new(vs.clone()).ok_or(MatError::Dependent)?;
            let images: Option<Vec<Vec<Gauss>>> = vs.iter().map(|v| solver.coords(&t.apply(v))).collect();
            let images = images.ok_or(MatError::NonDiagonalizable)?;
            let m: GMat = Mat::from_fn(k, k, |a, b| images[b][a].clone());
            let p = min_poly(&m);
            let roots = gaussian_roots(&p).ok_or(MatError::NonDiagonalizable)?;
            if roots.len() + 1 != p.len() {
                return Err(MatError::NonDiagonalizable);
            }
            let mut found = 0;
            for lam in roots {
                let shifted = m.sub(&Mat::identity(k).scale(&lam));
                let ker = shifted.kernel();
                found += ker.len();
                let vecs: Vec<Vec<Gauss>> = ker
                    .iter()
                    .map(|c| {
                        let mut out = vec![Gauss::zero(); n];
                        for (ci, v) in c.iter().zip(&vs) {
                            for (o, x) in out.iter_mut().zip(v) {
                                o.add_mul(ci, x);
                            }
                        }
                        out
                    })
                    .collect();
                let mut w2 = w.clone();
                w2.push(lam);
                next.push((w2, vecs));
            }
            if found != k {
                return Err(MatError::NonDiagonalizable);
            }
        }
        blocks = next;
    }
    Ok(blocks.into_iter().flat_map(|(w, vs)| vs.into_iter().map(move |v| (w.clone(), v))).collect())
}

/// Diagonalizes the torus on `V` and, through the adjoint action, on `g`.
///
/// When every eigenvalue is imaginary (a compact torus) weights are rescaled
/// by `-i` so that they are rational.
pub fn weight_frame(r: &MatrixRep) -> Result<WeightFrame, MatError> {
    let tor = r.torus.as_ref().ok_or(MatError::NoTorus)?;
    let tmats = r.torus_matrices()?;
    let c = r.structure_constants()?;
    let dg = r.dim_g();
    let ad: Vec<GMat> = tor
        .iter()
        .map(|t| {
            Mat::from_fn(dg, dg, |u, s| {
                let mut acc = Gauss::zero();
                for (j, tj) in t.iter().enumerate() {
                    acc.add_mul(tj, &c[j][s][u]);
                }
                acc
            })
        })
        .collect();
    let mut v_eig = simultaneous_eigenvectors(&tmats, r.dim)?;
    let mut g_eig = simultaneous_eigenvectors(&ad, dg)?;
    let compact = v_eig.iter().chain(&g_eig).all(|(w, _)| w.iter().all(|x| Zero::is_zero(&x.re)));
    if compact {
        let mi = Gauss::int(0, -1);
        for (w, _) in v_eig.iter_mut().chain(g_eig.iter_mut()) {
            for x in w.iter_mut() {
                *x = x.times(&mi);
            }
        }
    }
    let cols: Vec<Vec<Gauss>> = v_eig.iter().map(|(_, v)| v.clone()).collect();
    let p: GMat = if r.dim == 0 { Mat::zeros(0, 0) } else { Mat::from_columns(&cols) };
    let pinv = if r.dim == 0 { p.clone() } else { p.inverse().ok_or(MatError::Dependent)? };
    let conj = |x: &GMat| pinv.mul(x).mul(&p);
    let basis: Vec<GMat> = g_eig.iter().map(|(_, coeff)| conj(&r.element(coeff))).collect();
    let form = r.form.as_ref().map(|f| {
        let gram = match f.kind {
            FormKind::Hermitian => p.adjoint().mul(&f.gram).mul(&p),
            _ => p.transpose().mul(&f.gram).mul(&p),
        };
        PreservedForm { kind: f.kind, gram }
    });
    let sp = SpanCoords::new(&basis).ok_or(MatError::Dependent)?;
    let torus: Option<Vec<Vec<Gauss>>> = tmats.iter().map(|t| sp.coords(&conj(t))).collect();
    let rep = MatrixRep {
        name: r.name.clone(),
        field: FieldTag::Complex,
        dim: r.dim,
        basis,
        form,
        real_form: None,
        torus: Some(torus.ok_or(MatError::NotClosed)?),
    };
    Ok(WeightFrame {
        rep,
        v_weights: v_eig.into_iter().map(|(w, _)| w).collect(),
        g_weights: g_eig.into_iter().map(|(w, _)| w).collect(),
        change: p,
    })
}

/// Γ and the roots-and-zero set Δ₀, both as sorted weight strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub roots_and_zero: Vec<String>,
    pub gamma: Vec<String>,
    pub gamma_equals_roots_and_zero: bool,
    /// span{Q_{-μ}(u_μ)} equals the zero weight space of g.
    pub span_condition: bool,
    /// V_μ pairs only with V_{-μ} under the preserved bilinear form.
    pub pairing: Option<bool>,
}

pub fn weight_string(w: &[Gauss]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn sorted_strings(ws: &HashSet<Weight>) -> Vec<String> {
    let mut v: Vec<&Weight> = ws.iter().collect();
    v.sort_by(|a, b| {
        let key = |w: &Weight| w.iter().map(|x| (x.real_part(), x.imag_part())).collect::<Vec<_>>();
        key(a).cmp(&key(b))
    });
    v.into_iter().map(|w| weight_string(w)).collect()
}

/// Γ from an exact B_H basis computed in `frame`.
pub(crate) fn gamma_from(frame: &WeightFrame, bh: &SubspaceBasis) -> GammaReport {
    let dg = frame.rep.dim_g();
    let rank = frame.g_weights.first().map_or(0, |w| w.len());
    let zero: Weight = vec![Gauss::zero(); rank];
    let mut delta0: HashSet<Weight> = frame.g_weights.iter().cloned().collect();
    delta0.insert(zero.clone());
    let zero_idx: Vec<usize> = (0..dg).filter(|&s| frame.g_weights[s] == zero).collect();
    let mut gamma: HashSet<Weight> = HashSet::new();
    let mut span: Echelon<Gauss> = Echelon::new(zero_idx.len());
    for v in &bh.vectors {
        let mut slot_zero: Vec<(usize, Vec<Gauss>)> = Vec::new();
        for (c, x) in v {
            let (slot, s) = (c / dg, c % dg);
            gamma.insert(frame.g_weights[s].clone());
            if let Some(pos) = zero_idx.iter().position(|&z| z == s) {
                match slot_zero.last_mut() {
                    Some((sl, d)) if *sl == slot => d[pos] = x.clone(),
                    _ => {
                        let mut d = vec![Gauss::zero(); zero_idx.len()];
                        d[pos] = x.clone();
                        slot_zero.push((slot, d));
                    }
                }
            }
        }
        for (_, d) in slot_zero {
            span.insert(d);
        }
    }
    GammaReport {
        gamma_equals_roots_and_zero: gamma == delta0,
        roots_and_zero: sorted_strings(&delta0),
        gamma: sorted_strings(&gamma),
        span_condition: span.rank() == zero_idx.len(),
        pairing: pairing_check(frame),
    }
}

/// Γ for a representation with a torus, from a graded exact B_H computation.
pub fn gamma_set(r: &MatrixRep, opts: &CurvatureOptions) -> Result<GammaReport, CurvError> {
    let frame = weight_frame(r)?;
    let mut exact = *opts;
    exact.arithmetic = crate::linalg::Arithmetic::Exact;
    let bh = graded_space(&frame, SpaceKind::Bianchi, &exact)?;
    Ok(gamma_from(&frame, &bh))
}

/// For a bilinear form in a weight frame: `H(V_μ, V_λ) = 0` unless
/// `λ = -μ`, and every `-μ` is again a weight.
pub fn pairing_check(frame: &WeightFrame) -> Option<bool> {
    let f = frame.rep.form.as_ref()?;
    if f.kind == FormKind::Hermitian {
        return None;
    }
    let w = &frame.v_weights;
    let sum_zero = |a: &Weight, b: &Weight| a.iter().zip(b).all(|(x, y)| x.plus(y).is_zero());
    let n = w.len();
    let orth = (0..n).all(|i| (0..n).all(|j| f.gram[(i, j)].is_zero() || sum_zero(&w[i], &w[j])));
    let paired = w.iter().all(|a| w.iter().any(|b| sum_zero(a, b)));
    Some(orth && paired)
}
