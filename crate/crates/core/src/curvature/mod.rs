//! Curvature-type spaces of a matrix Lie algebra `g ⊂ gl(V)`: algebraic
//! curvature tensors K(g), the space B_h(g) for orthogonal algebras, their
//! evaluation ideals, first prolongations, and the weight set Γ.
//!
//! Every space is the kernel of a sparse system whose unknowns are
//! coefficients over the algebra basis. When the algebra carries a torus
//! acting diagonally the system is rewritten in weight bases of `V` and `g`.
//! The equations are then homogeneous for the weight grading and each weight
//! block is solved on its own, in parallel.

mod identities;
mod weights;

pub use identities::{
    complex_module, dim_identity_checks, prolong_1_1, random_conjugate, tilde_checks, IdentityReport, Prolong11,
    TildeReport,
};
pub use weights::{gamma_set, pairing_check, simultaneous_eigenvectors, weight_frame, GammaReport, Weight, WeightFrame};

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::field::{moduli, Gauss, Modulus, Scalar};
use crate::linalg::{Arithmetic, Echelon, LinearSystem, ModEchelon, SparseRow};
use crate::matalg::{FieldTag, FormKind, GMat, MatError, MatrixRep};
use crate::par::{self, Parallelism};

/// Largest block (in unknowns) solved in exact mode.
pub const EXACT_UNKNOWN_CAP: usize = 1500;
/// Largest block (in unknowns) solved in modular mode.
pub const MODULAR_UNKNOWN_CAP: usize = 6000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurvError {
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error("representation preserves no nondegenerate symmetric bilinear form")]
    NoSymmetricForm,
    #[error("block of {unknowns} unknowns exceeds the {mode} cap {cap}")]
    CapExceeded { unknowns: usize, cap: usize, mode: &'static str },
    #[error("complex representation has no real form to conjugate against")]
    MissingConjugation,
    #[error("equations are not homogeneous for the torus grading")]
    NotHomogeneous,
    #[error("ranks modulo different primes disagree")]
    ModularDisagreement,
    #[error("operation needs an exact basis; rerun in exact mode")]
    NeedsExact,
}

impl CurvError {
    pub fn is_cap(&self) -> bool {
        matches!(self, CurvError::CapExceeded { .. } | CurvError::Mat(MatError::CapExceeded { .. }))
    }

    /// Errors that indicate a broken internal invariant rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, CurvError::NotHomogeneous | CurvError::ModularDisagreement)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurvatureOptions {
    pub arithmetic: Arithmetic,
    pub exact_cap: usize,
    pub modular_cap: usize,
    /// Number of primes that must agree in modular mode.
    pub primes: usize,
    /// Use the torus grading when the algebra has one.
    pub graded: bool,
    pub parallelism: Parallelism,
}

impl Default for CurvatureOptions {
    fn default() -> Self {
        CurvatureOptions {
            arithmetic: Arithmetic::Exact,
            exact_cap: EXACT_UNKNOWN_CAP,
            modular_cap: MODULAR_UNKNOWN_CAP,
            primes: 3,
            graded: true,
            parallelism: Parallelism::Parallel,
        }
    }
}

impl CurvatureOptions {
    pub fn modular() -> Self {
        CurvatureOptions { arithmetic: Arithmetic::Modular, ..Default::default() }
    }

    pub fn sequential(mut self) -> Self {
        self.parallelism = Parallelism::Sequential;
        self
    }

    pub fn ungraded(mut self) -> Self {
        self.graded = false;
        self
    }
}

/// Which tensor space the unknowns live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    /// Λ²V*⊗g, one slot per pair i < j.
    Curvature,
    /// V*⊗g with the cyclic h-condition.
    Bianchi,
    /// V*⊗g with the symmetry condition Q(u)v = Q(v)u.
    Prolongation,
}

/// Basis of a solution space, stored sparsely over the ambient coordinates
/// `slot * dim_g + s`.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    pub kind: SpaceKind,
    pub dim_v: usize,
    pub dim_g: usize,
    pub dim: usize,
    pub arithmetic: Arithmetic,
    /// Exact mode: certified kernel basis.
    pub vectors: Vec<SparseRow<Gauss>>,
    /// Modular mode: kernel bases modulo each prime used.
    pub residues: Vec<(Modulus, Vec<Vec<(usize, u64)>>)>,
}

impl SubspaceBasis {
    pub fn slots(&self) -> usize {
        slots(self.kind, self.dim_v)
    }

    pub fn ambient_dim(&self) -> usize {
        self.slots() * self.dim_g
    }

    pub fn is_exact(&self) -> bool {
        self.arithmetic == Arithmetic::Exact
    }

    pub fn dense(&self, k: usize) -> Vec<Gauss> {
        let mut v = vec![Gauss::zero(); self.ambient_dim()];
        for (c, x) in &self.vectors[k] {
            v[*c] = x.clone();
        }
        v
    }

    /// Span of all evaluations `X(slot)` in coordinates over the algebra basis.
    pub fn evaluation_span(&self) -> Result<Span, CurvError> {
        let dg = self.dim_g;
        if self.is_exact() {
            let mut e: Echelon<Gauss> = Echelon::new(dg);
            for v in &self.vectors {
                for chunk in slot_chunks(v, dg) {
                    if e.rank() == dg {
                        break;
                    }
                    let mut d = vec![Gauss::zero(); dg];
                    for (s, x) in chunk {
                        d[s] = x;
                    }
                    e.insert(d);
                }
            }
            return Ok(Span { dim: e.rank(), basis: e.basis().to_vec(), arithmetic: Arithmetic::Exact });
        }
        let mut seen = None;
        for (m, vs) in &self.residues {
            let mut e = ModEchelon::new(dg, *m);
            for v in vs {
                for chunk in slot_chunks(v, dg) {
                    if e.rank() == dg {
                        break;
                    }
                    let mut d = vec![0u64; dg];
                    for (s, x) in chunk {
                        d[s] = x;
                    }
                    e.insert(&mut d, 0);
                }
            }
            match seen {
                None => seen = Some(e.rank()),
                Some(r) if r != e.rank() => return Err(CurvError::ModularDisagreement),
                _ => {}
            }
        }
        Ok(Span { dim: seen.unwrap_or(0), basis: Vec::new(), arithmetic: Arithmetic::Modular })
    }
}

/// Groups a sorted sparse vector by slot, yielding `(s, value)` per slot.
fn slot_chunks<T: Clone>(v: &[(usize, T)], dg: usize) -> Vec<Vec<(usize, T)>> {
    let mut out: Vec<Vec<(usize, T)>> = Vec::new();
    let mut cur = usize::MAX;
    for (c, x) in v {
        let slot = c / dg;
        if slot != cur {
            out.push(Vec::new());
            cur = slot;
        }
        out.last_mut().expect("chunk").push((c % dg, x.clone()));
    }
    out
}

/// A subspace of `g` in coordinates over the algebra basis.
#[derive(Clone, Debug)]
pub struct Span {
    pub dim: usize,
    /// Echelon basis; empty in modular mode.
    pub basis: Vec<Vec<Gauss>>,
    pub arithmetic: Arithmetic,
}

impl Span {
    pub fn contains(&self, v: &[Gauss]) -> bool {
        let n = v.len();
        Echelon::from_vectors(n, &self.basis).contains(v)
    }

    /// Whether every vector of `other` lies in this span.
    pub fn contains_span(&self, other: &Span) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

fn slots(kind: SpaceKind, n: usize) -> usize {
    match kind {
        SpaceKind::Curvature => n * n.saturating_sub(1) / 2,
        SpaceKind::Bianchi | SpaceKind::Prolongation => n,
    }
}

/// Index of the pair (i, j), i < j, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// First Bianchi identity on Λ²V*⊗g.
pub fn curvature_system(r: &MatrixRep) -> LinearSystem<Gauss> {
    let n = r.dim;
    let dg = r.dim_g();
    let mut sys = LinearSystem::new(slots(SpaceKind::Curvature, n) * dg);
    let b = &r.basis;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (pij, pjk, pik) = (pair_index(n, i, j), pair_index(n, j, k), pair_index(n, i, k));
                for l in 0..n {
                    let mut row = Vec::new();
                    for (s, bs) in b.iter().enumerate() {
                        // R(e_i,e_j)e_k + R(e_j,e_k)e_i - R(e_i,e_k)e_j
                        push_nz(&mut row, pij * dg + s, &bs[(l, k)]);
                        push_nz(&mut row, pjk * dg + s, &bs[(l, i)]);
                        push_nz(&mut row, pik * dg + s, &bs[(l, j)].negate());
                    }
                    sys.push(row);
                }
            }
        }
    }
    sys
}

/// Symmetric nondegenerate Gram matrix of the preserved form.
fn symmetric_gram(r: &MatrixRep) -> Result<&GMat, CurvError> {
    match &r.form {
        Some(f) if f.kind == FormKind::Symmetric => {
            if f.gram.rank() != r.dim {
                return Err(CurvError::Mat(MatError::DegenerateForm));
            }
            Ok(&f.gram)
        }
        _ => Err(CurvError::NoSymmetricForm),
    }
}

/// Cyclic h-identity on V*⊗g.
pub fn bianchi_system(r: &MatrixRep) -> Result<LinearSystem<Gauss>, CurvError> {
    let h = symmetric_gram(r)?;
    let n = r.dim;
    let dg = r.dim_g();
    let a: Vec<GMat> = r.basis.iter().map(|b| h.mul(b)).collect();
    let mut sys = LinearSystem::new(n * dg);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = Vec::new();
                for (s, a_s) in a.iter().enumerate() {
                    // h(Q(e_i)e_j, e_k) + h(Q(e_j)e_k, e_i) + h(Q(e_k)e_i, e_j)
                    push_nz(&mut row, i * dg + s, &a_s[(k, j)]);
                    push_nz(&mut row, j * dg + s, &a_s[(i, k)]);
                    push_nz(&mut row, k * dg + s, &a_s[(j, i)]);
                }
                sys.push(row);
            }
        }
    }
    Ok(sys)
}

/// Symmetry condition Q(e_i)e_j = Q(e_j)e_i on V*⊗g.
pub fn prolongation_system(r: &MatrixRep) -> LinearSystem<Gauss> {
    let n = r.dim;
    let dg = r.dim_g();
    let mut sys = LinearSystem::new(n * dg);
    for i in 0..n {
        for j in i + 1..n {
            for l in 0..n {
                let mut row = Vec::new();
                for (s, bs) in r.basis.iter().enumerate() {
                    push_nz(&mut row, i * dg + s, &bs[(l, j)]);
                    push_nz(&mut row, j * dg + s, &bs[(l, i)].negate());
                }
                sys.push(row);
            }
        }
    }
    sys
}

fn push_nz(row: &mut SparseRow<Gauss>, c: usize, x: &Gauss) {
    if !x.is_zero() {
        row.push((c, x.clone()));
    }
}

fn system_for(r: &MatrixRep, kind: SpaceKind) -> Result<LinearSystem<Gauss>, CurvError> {
    match kind {
        SpaceKind::Curvature => Ok(curvature_system(r)),
        SpaceKind::Bianchi => bianchi_system(r),
        SpaceKind::Prolongation => Ok(prolongation_system(r)),
    }
}

/// Weight class of every unknown, given weights of V and g.
fn unknown_classes(kind: SpaceKind, vw: &[Weight], gw: &[Weight]) -> Vec<usize> {
    let n = vw.len();
    let mut ids: HashMap<Weight, usize> = HashMap::new();
    let mut out = Vec::with_capacity(slots(kind, n) * gw.len());
    let mut class = |w: Weight| {
        let next = ids.len();
        *ids.entry(w).or_insert(next)
    };
    let sub = |a: &Weight, b: &Weight| -> Weight { a.iter().zip(b).map(|(x, y)| x.minus(y)).collect() };
    match kind {
        SpaceKind::Curvature => {
            for i in 0..n {
                for j in i + 1..n {
                    for a in gw {
                        out.push(class(sub(&sub(a, &vw[i]), &vw[j])));
                    }
                }
            }
        }
        SpaceKind::Bianchi | SpaceKind::Prolongation => {
            for v in vw {
                for a in gw {
                    out.push(class(sub(a, v)));
                }
            }
        }
    }
    out
}

/// Kernel of `sys`, block by block when `classes` grades the unknowns.
pub fn solve(
    sys: &LinearSystem<Gauss>,
    classes: Option<&[usize]>,
    opts: &CurvatureOptions,
) -> Result<(Vec<SparseRow<Gauss>>, Vec<(Modulus, Vec<Vec<(usize, u64)>>)>), CurvError> {
    let ncols = sys.ncols;
    let class_of = |c: usize| classes.map_or(0, |cl| cl[c]);
    let nclasses = classes.map_or(1, |cl| cl.iter().copied().max().map_or(0, |m| m + 1));
    let mut cols: Vec<Vec<usize>> = vec![Vec::new(); nclasses];
    for c in 0..ncols {
        cols[class_of(c)].push(c);
    }
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); nclasses];
    for (ri, row) in sys.rows.iter().enumerate() {
        let k = class_of(row[0].0);
        if row.iter().any(|(c, _)| class_of(*c) != k) {
            return Err(CurvError::NotHomogeneous);
        }
        rows[k].push(ri);
    }
    let (cap, mode) = match opts.arithmetic {
        Arithmetic::Exact => (opts.exact_cap, "exact"),
        Arithmetic::Modular => (opts.modular_cap, "modular"),
    };
    if let Some(big) = cols.iter().map(|c| c.len()).max() {
        if big > cap {
            return Err(CurvError::CapExceeded { unknowns: big, cap, mode });
        }
    }
    let mut local = vec![0usize; ncols];
    for cs in &cols {
        for (li, &c) in cs.iter().enumerate() {
            local[c] = li;
        }
    }
    let blocks: Vec<(Vec<usize>, LinearSystem<Gauss>)> = cols
        .into_iter()
        .zip(rows)
        .filter(|(cs, _)| !cs.is_empty())
        .map(|(cs, rs)| {
            let mut b = LinearSystem::new(cs.len());
            for ri in rs {
                b.push(sys.rows[ri].iter().map(|(c, x)| (local[*c], x.clone())).collect());
            }
            (cs, b)
        })
        .collect();
    match opts.arithmetic {
        Arithmetic::Exact => {
            let parts = par::map(&blocks, opts.parallelism, |(cs, b)| {
                b.kernel()
                    .into_iter()
                    .map(|v| v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (cs[i], x)).collect())
                    .collect::<Vec<SparseRow<Gauss>>>()
            });
            Ok((parts.into_iter().flatten().collect(), Vec::new()))
        }
        Arithmetic::Modular => {
            let primes: Vec<Modulus> = moduli().iter().take(opts.primes.max(1)).copied().collect();
            let mut out = Vec::new();
            let mut dim = None;
            for m in primes {
                let parts = par::map(&blocks, opts.parallelism, |(cs, b)| {
                    b.kernel_mod(m).map(|k| {
                        k.into_iter()
                            .map(|v| v.into_iter().enumerate().filter(|(_, x)| *x != 0).map(|(i, x)| (cs[i], x)).collect())
                            .collect::<Vec<Vec<(usize, u64)>>>()
                    })
                });
                let parts: Option<Vec<_>> = parts.into_iter().collect();
                let vs: Vec<Vec<(usize, u64)>> = parts.ok_or(CurvError::ModularDisagreement)?.into_iter().flatten().collect();
                match dim {
                    None => dim = Some(vs.len()),
                    Some(d) if d != vs.len() => return Err(CurvError::ModularDisagreement),
                    _ => {}
                }
                out.push((m, vs));
            }
            Ok((Vec::new(), out))
        }
    }
}

fn space_in(r: &MatrixRep, kind: SpaceKind, classes: Option<&[usize]>, opts: &CurvatureOptions) -> Result<SubspaceBasis, CurvError> {
    let sys = system_for(r, kind)?;
    let (vectors, residues) = solve(&sys, classes, opts)?;
    let dim = if opts.arithmetic == Arithmetic::Exact { vectors.len() } else { residues.first().map_or(0, |(_, v)| v.len()) };
    Ok(SubspaceBasis { kind, dim_v: r.dim, dim_g: r.dim_g(), dim, arithmetic: opts.arithmetic, vectors, residues })
}

/// K(g): curvature tensors satisfying the first Bianchi identity.
pub fn k_space(r: &MatrixRep, opts: &CurvatureOptions) -> Result<SubspaceBasis, CurvError> {
    space_in(r, SpaceKind::Curvature, None, opts)
}

/// B_h(g) for an algebra preserving a symmetric nondegenerate form h.
pub fn bh_space(r: &MatrixRep, opts: &CurvatureOptions) -> Result<SubspaceBasis, CurvError> {
    space_in(r, SpaceKind::Bianchi, None, opts)
}

/// First prolongation g^(1).
pub fn first_prolongation(r: &MatrixRep, opts: &CurvatureOptions) -> Result<SubspaceBasis, CurvError> {
    space_in(r, SpaceKind::Prolongation, None, opts)
}

/// Same spaces computed in a weight frame, block by block.
pub fn graded_space(frame: &WeightFrame, kind: SpaceKind, opts: &CurvatureOptions) -> Result<SubspaceBasis, CurvError> {
    let classes = unknown_classes(kind, &frame.v_weights, &frame.g_weights);
    space_in(&frame.rep, kind, Some(&classes), opts)
}

/// Whether the span is an ideal: `[b_u, X]` stays inside for every basis element.
pub fn is_ideal(r: &MatrixRep, span: &Span) -> Result<bool, CurvError> {
    if span.arithmetic != Arithmetic::Exact {
        return Err(CurvError::NeedsExact);
    }
    let c = r.structure_constants()?;
    let dg = r.dim_g();
    let e = Echelon::from_vectors(dg, &span.basis);
    for x in &span.basis {
        for cu in &c {
            let mut y = vec![Gauss::zero(); dg];
            for (s, xs) in x.iter().enumerate() {
                if xs.is_zero() {
                    continue;
                }
                for (t, yt) in y.iter_mut().enumerate() {
                    yt.add_mul(xs, &cu[s][t]);
                }
            }
            if !e.contains(&y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Evaluation ideal of a computed space (g underline for K, g_h for B_h,
/// g tilde for g^(1)) together with the verified ideal property.
pub fn derived_ideal(r: &MatrixRep, space: &SubspaceBasis) -> Result<(Span, Option<bool>), CurvError> {
    let span = space.evaluation_span()?;
    let ideal = if span.arithmetic == Arithmetic::Exact { Some(is_ideal(r, &span)?) } else { None };
    Ok((span, ideal))
}

fn satisfies(sys: &LinearSystem<Gauss>, v: &[Gauss]) -> bool {
    sys.rows.iter().all(|row| {
        let mut acc = Gauss::zero();
        for (c, a) in row {
            acc.add_mul(a, &v[*c]);
        }
        acc.is_zero()
    })
}

/// Checks that `A · X` lies in the space for every basis element `A` and
/// every basis vector `X`, with `(A·Q)(x) = -Q(Ax) + [A, Q(x)]` and
/// `(A·R)(x,y) = -R(Ax,y) - R(x,Ay) + [A, R(x,y)]`.
pub fn module_action_check(r: &MatrixRep, space: &SubspaceBasis) -> Result<bool, CurvError> {
    if !space.is_exact() {
        return Err(CurvError::NeedsExact);
    }
    let sys = system_for(r, space.kind)?;
    let c = r.structure_constants()?;
    let n = r.dim;
    let dg = r.dim_g();
    let idx: Vec<usize> = (0..space.dim).collect();
    let ok = par::all(&idx, |&k| {
        let v = space.dense(k);
        (0..dg).all(|u| {
            let a = &r.basis[u];
            let out = match space.kind {
                SpaceKind::Bianchi | SpaceKind::Prolongation => act_linear(&v, a, &c[u], n, dg),
                SpaceKind::Curvature => act_bilinear(&v, a, &c[u], n, dg),
            };
            satisfies(&sys, &out)
        })
    });
    Ok(ok)
}

/// `[A, X]` in coordinates, with `cu[s][t]` the coordinates of `[b_u, b_s]`.
fn bracket_coords(cu: &[Vec<Gauss>], x: &[Gauss], out: &mut [Gauss]) {
    for (s, xs) in x.iter().enumerate() {
        if xs.is_zero() {
            continue;
        }
        for (t, o) in out.iter_mut().enumerate() {
            o.add_mul(xs, &cu[s][t]);
        }
    }
}

fn act_linear(q: &[Gauss], a: &GMat, cu: &[Vec<Gauss>], n: usize, dg: usize) -> Vec<Gauss> {
    let mut out = vec![Gauss::zero(); n * dg];
    for i in 0..n {
        let slot = &mut out[i * dg..(i + 1) * dg];
        for j in 0..n {
            let aji = &a[(j, i)];
            if aji.is_zero() {
                continue;
            }
            for t in 0..dg {
                slot[t].sub_mul(aji, &q[j * dg + t]);
            }
        }
        bracket_coords(cu, &q[i * dg..(i + 1) * dg], slot);
    }
    out
}

fn act_bilinear(rv: &[Gauss], a: &GMat, cu: &[Vec<Gauss>], n: usize, dg: usize) -> Vec<Gauss> {
    // R(e_i, e_j) with antisymmetry
    let get = |i: usize, j: usize, t: usize| -> Gauss {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => rv[pair_index(n, i, j) * dg + t].clone(),
            std::cmp::Ordering::Greater => rv[pair_index(n, j, i) * dg + t].negate(),
            std::cmp::Ordering::Equal => Gauss::zero(),
        }
    };
    let mut out = vec![Gauss::zero(); rv.len()];
    for i in 0..n {
        for j in i + 1..n {
            let p = pair_index(n, i, j);
            let slot = &mut out[p * dg..(p + 1) * dg];
            for k in 0..n {
                let aki = &a[(k, i)];
                let akj = &a[(k, j)];
                for t in 0..dg {
                    if !aki.is_zero() {
                        slot[t].sub_mul(aki, &get(k, j, t));
                    }
                    if !akj.is_zero() {
                        slot[t].sub_mul(akj, &get(i, k, t));
                    }
                }
            }
            bracket_coords(cu, &rv[p * dg..(p + 1) * dg], slot);
        }
    }
    out
}

/// Summary of the curvature spaces of one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub algebra_name: String,
    pub field: FieldTag,
    pub dim_v: usize,
    pub dim_g: usize,
    #[serde(rename = "dim_K")]
    pub dim_k: usize,
    /// `None` when the algebra preserves no symmetric form.
    #[serde(rename = "dim_Bh")]
    pub dim_bh: Option<usize>,
    pub dim_g_underline: usize,
    pub dim_g_h: Option<usize>,
    pub is_berger: bool,
    pub is_weak_berger: Option<bool>,
    /// Both evaluation spans were verified to be ideals.
    pub ideals_verified: Option<bool>,
    /// span{R(x,y)} + span{Q(z)} lies in g_h.
    pub underline_in_h: Option<bool>,
    pub gamma_set: Option<GammaReport>,
    /// "exact" or "probabilistic rank".
    pub rank_mode: String,
    /// Systems were split by torus weights.
    pub graded: bool,
}

pub fn rank_mode_label(a: Arithmetic) -> &'static str {
    match a {
        Arithmetic::Exact => "exact",
        Arithmetic::Modular => "probabilistic rank",
    }
}

/// Computes K(g), B_h(g) when defined, the evaluation ideals, and Γ when a
/// diagonalizable torus is available.
pub fn curvature_report(r: &MatrixRep, opts: &CurvatureOptions) -> Result<CurvatureReport, CurvError> {
    let frame = match (&r.torus, opts.graded) {
        (Some(_), true) => match weight_frame(r) {
            Ok(f) => Some(f),
            Err(MatError::NonDiagonalizable) => None,
            Err(e) => return Err(e.into()),
        },
        _ => None,
    };
    let work = frame.as_ref().map_or(r, |f| &f.rep);
    let space = |kind| match &frame {
        Some(f) => graded_space(f, kind, opts),
        None => space_in(r, kind, None, opts),
    };
    let k = space(SpaceKind::Curvature)?;
    let (under, under_ideal) = derived_ideal(work, &k)?;
    let bh = match space(SpaceKind::Bianchi) {
        Ok(b) => Some(b),
        Err(CurvError::NoSymmetricForm) => None,
        Err(e) => return Err(e),
    };
    let (gh, gh_ideal) = match &bh {
        Some(b) => {
            let (s, i) = derived_ideal(work, b)?;
            (Some(s), i)
        }
        None => (None, Some(true)),
    };
    let ideals_verified = match (under_ideal, gh_ideal) {
        (Some(a), Some(b)) => Some(a && b),
        _ => None,
    };
    let underline_in_h = match &gh {
        Some(s) if s.arithmetic == Arithmetic::Exact => Some(s.contains_span(&under)),
        _ => None,
    };
    let gamma = match (&frame, &bh) {
        (Some(f), Some(b)) if b.is_exact() => Some(weights::gamma_from(f, b)),
        _ => None,
    };
    let dg = r.dim_g();
    Ok(CurvatureReport {
        algebra_name: r.name.clone(),
        field: r.field,
        dim_v: r.dim,
        dim_g: dg,
        dim_k: k.dim,
        dim_bh: bh.as_ref().map(|b| b.dim),
        dim_g_underline: under.dim,
        dim_g_h: gh.as_ref().map(|s| s.dim),
        is_berger: under.dim == dg,
        is_weak_berger: gh.as_ref().map(|s| s.dim == dg),
        ideals_verified,
        underline_in_h,
        gamma_set: gamma,
        rank_mode: rank_mode_label(opts.arithmetic).to_string(),
        graded: frame.is_some(),
    })
}
