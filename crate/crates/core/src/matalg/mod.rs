//! Explicit matrix Lie algebras over Gaussian rationals, representation
//! functors, and Schur-type invariants (commutants, invariant forms, type).
//!
//! A [`MatrixRep`] stores a basis of matrices acting on `V = F^dim`. For a
//! real representation `F = R` and the algebra is the real span of the basis.
//! For a complex representation `F = C` and the algebra is the complex span;
//! `real_form`, when present, spans a real form `g0` whose complexification
//! is that algebra. Conjugation of the complex algebra is taken with respect
//! to `g0`.

pub mod catalog;
pub mod chevalley;
pub mod functors;
pub mod g2;
pub mod modules;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Gauss, Rat, Scalar};
use crate::linalg::{CoordSolver, Echelon, Mat};

pub use catalog::{catalog, catalog_listing};
pub use modules::{
    classify_type, commutant, complex_structure, hom_space, invariant_bilinear_forms, invariant_sesquilinear_forms,
    is_irreducible, isotypic_decomposition, BilinearForms, Decomposition, RepType,
};

pub type GMat = Mat<Gauss>;

/// Default bound on the ambient tensor dimension handled by functors.
pub const DEFAULT_TENSOR_CAP: usize = 5000;

/// Bound on `dim_V^2 * dim_g` for building dense representation matrices.
pub const DENSE_ENTRY_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    Real,
    Complex,
}

impl std::fmt::Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FieldTag::Real => "real",
            FieldTag::Complex => "complex",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Antisymmetric,
    Hermitian,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservedForm {
    pub kind: FormKind,
    pub gram: GMat,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("invalid dimension parameter in `{0}`")]
    InvalidDimension(String),
    #[error("basis matrices are linearly dependent")]
    Dependent,
    #[error("basis is not closed under the commutator")]
    NotClosed,
    #[error("preserved form is not invariant")]
    FormNotInvariant,
    #[error("representation has no preserved form of the required kind")]
    NoForm,
    #[error("preserved form is degenerate")]
    DegenerateForm,
    #[error("representation is reducible")]
    Reducible,
    #[error("irreducibility could not be decided")]
    Undecided,
    #[error("dimension {dim} exceeds cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("field mismatch: expected {0} representation")]
    FieldMismatch(FieldTag),
    #[error("complex structure needs a square root of {0}")]
    NotSquareNorm(String),
    #[error("torus action is not diagonalizable over Gaussian rationals")]
    NonDiagonalizable,
    #[error("representation has no designated torus")]
    NoTorus,
    #[error("representations have incompatible shapes")]
    Incompatible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    pub name: String,
    pub field: FieldTag,
    pub dim: usize,
    pub basis: Vec<GMat>,
    pub form: Option<PreservedForm>,
    /// Complex representations only: basis of a real form `g0`.
    pub real_form: Option<Vec<GMat>>,
    /// Cartan subalgebra as coefficient vectors over `basis`.
    pub torus: Option<Vec<Vec<Gauss>>>,
}

pub fn gi(n: i64) -> Gauss {
    Gauss::int(n, 0)
}

/// Matrix unit E_{ij}.
pub fn unit(n: usize, i: usize, j: usize) -> GMat {
    let mut m = Mat::zeros(n, n);
    m[(i, j)] = Gauss::one();
    m
}

/// Real coordinates (re parts then im parts) of a flattened matrix.
pub(crate) fn real_coords(m: &GMat) -> Vec<Rat> {
    let mut v: Vec<Rat> = m.data.iter().map(|x| x.re.clone()).collect();
    v.extend(m.data.iter().map(|x| x.im.clone()));
    v
}

/// Keeps the matrices that are independent over `field`, in order.
pub(crate) fn independent(mats: Vec<GMat>, field: FieldTag) -> Vec<GMat> {
    let Some(first) = mats.first() else { return mats };
    let n = first.data.len();
    let mut out = Vec::new();
    match field {
        FieldTag::Real => {
            let mut e: Echelon<Rat> = Echelon::new(2 * n);
            for m in mats {
                if e.insert(real_coords(&m)) {
                    out.push(m);
                }
            }
        }
        FieldTag::Complex => {
            let mut e: Echelon<Gauss> = Echelon::new(n);
            for m in mats {
                if e.insert(m.data.clone()) {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// Coordinates over a fixed family of matrices (complex or real span).
pub struct SpanCoords {
    solver: CoordSolver<Gauss>,
}

impl SpanCoords {
    pub fn new(mats: &[GMat]) -> Option<Self> {
        let vecs: Vec<Vec<Gauss>> = mats.iter().map(|m| m.data.clone()).collect();
        Some(SpanCoords { solver: CoordSolver::new(vecs)? })
    }

    pub fn coords(&self, m: &GMat) -> Option<Vec<Gauss>> {
        if self.solver.is_empty() {
            return if m.is_zero() { Some(Vec::new()) } else { None };
        }
        self.solver.coords(&m.data)
    }
}

impl MatrixRep {
    pub fn new(name: impl Into<String>, field: FieldTag, dim: usize, basis: Vec<GMat>) -> Self {
        MatrixRep { name: name.into(), field, dim, basis, form: None, real_form: None, torus: None }
    }

    pub fn with_form(mut self, kind: FormKind, gram: GMat) -> Self {
        self.form = Some(PreservedForm { kind, gram });
        self
    }

    pub fn with_real_form(mut self, g0: Vec<GMat>) -> Self {
        self.real_form = Some(g0);
        self
    }

    pub fn with_torus(mut self, t: Vec<Vec<Gauss>>) -> Self {
        self.torus = Some(t);
        self
    }

    pub fn dim_g(&self) -> usize {
        self.basis.len()
    }

    /// Basis of the real Lie algebra acting: the real form when given.
    pub fn real_basis(&self) -> &[GMat] {
        match (&self.field, &self.real_form) {
            (FieldTag::Complex, Some(g0)) => g0,
            _ => &self.basis,
        }
    }

    pub fn span(&self) -> Result<SpanCoords, MatError> {
        SpanCoords::new(&self.basis).ok_or(MatError::Dependent)
    }

    /// Element of the algebra with the given coefficients.
    pub fn element(&self, c: &[Gauss]) -> GMat {
        let mut out: GMat = Mat::zeros(self.dim, self.dim);
        for (x, b) in c.iter().zip(&self.basis) {
            if x.is_zero() {
                continue;
            }
            for (o, e) in out.data.iter_mut().zip(&b.data) {
                o.add_mul(x, e);
            }
        }
        out
    }

    /// Structure constants: `c[i][j]` are the coordinates of `[b_i, b_j]`.
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<Gauss>>>, MatError> {
        let sp = self.span()?;
        let n = self.dim_g();
        let mut c = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if j < i {
                    c[i][j] = c[j][i].iter().map(|x: &Gauss| x.negate()).collect();
                    continue;
                }
                let br = self.basis[i].bracket(&self.basis[j]);
                let co = sp.coords(&br).ok_or(MatError::NotClosed)?;
                if self.field == FieldTag::Real && co.iter().any(|x| !x.is_real()) {
                    return Err(MatError::NotClosed);
                }
                c[i][j] = co;
            }
        }
        Ok(c)
    }

    fn form_ok(&self) -> bool {
        let Some(f) = &self.form else { return true };
        match f.kind {
            FormKind::Symmetric | FormKind::Antisymmetric => {
                let sym = f.gram == f.gram.transpose();
                let anti = f.gram == f.gram.transpose().neg();
                let shape = if f.kind == FormKind::Symmetric { sym } else { anti };
                shape && self.basis.iter().all(|x| x.transpose().mul(&f.gram).add(&f.gram.mul(x)).is_zero())
            }
            FormKind::Hermitian => {
                f.gram == f.gram.adjoint()
                    && self.real_basis().iter().all(|x| x.adjoint().mul(&f.gram).add(&f.gram.mul(x)).is_zero())
            }
        }
    }

    /// Checks independence, bracket closure, real entries for real
    /// representations, and invariance of the preserved form.
    pub fn verify(&self) -> Result<(), MatError> {
        if self.basis.iter().any(|b| b.rows != self.dim || b.cols != self.dim) {
            return Err(MatError::Incompatible);
        }
        if self.field == FieldTag::Real && self.basis.iter().any(|b| !b.is_real()) {
            return Err(MatError::NotClosed);
        }
        self.structure_constants()?;
        if let Some(g0) = &self.real_form {
            if independent(g0.clone(), FieldTag::Real).len() != g0.len() || g0.len() != self.dim_g() {
                return Err(MatError::Dependent);
            }
            let sp = self.span()?;
            if g0.iter().any(|x| sp.coords(x).is_none()) {
                return Err(MatError::NotClosed);
            }
        }
        if !self.form_ok() {
            return Err(MatError::FormNotInvariant);
        }
        Ok(())
    }

    /// Torus elements as matrices.
    pub fn torus_matrices(&self) -> Result<Vec<GMat>, MatError> {
        let t = self.torus.as_ref().ok_or(MatError::NoTorus)?;
        Ok(t.iter().map(|c| self.element(c)).collect())
    }
}

pub(crate) fn check_dense(dim: usize, dim_g: usize) -> Result<(), MatError> {
    let entries = dim.saturating_mul(dim).saturating_mul(dim_g.max(1));
    if entries > DENSE_ENTRY_CAP {
        return Err(MatError::CapExceeded { dim: entries, cap: DENSE_ENTRY_CAP });
    }
    Ok(())
}
