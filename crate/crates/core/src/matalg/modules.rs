//! Module-theoretic invariants: intertwiners, commutants, invariant forms,
//! type classification, irreducibility and isotypic splitting.
//!
//! Irreducibility is certified from a division-algebra commutant, which
//! presumes complete reducibility (true for every algebra preserving a
//! definite form). Reducibility is always certified by an explicit
//! invariant subspace.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::functors::{realify_matrix, restrict};
use super::{FieldTag, FormKind, GMat, MatError, MatrixRep};
use crate::field::{Gauss, Rat, Scalar};
use crate::linalg::{CoordSolver, Echelon, LinearSystem, Mat, Rref};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Real,
    Complex,
    Quaternionic,
}

impl std::fmt::Display for RepType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RepType::Real => "real",
            RepType::Complex => "complex",
            RepType::Quaternionic => "quaternionic",
        })
    }
}

/// Seed for the deterministic random vectors used by spin-up searches.
pub const SPIN_SEED: u64 = 0x5eed_1234;

fn mat_from_flat(rows: usize, cols: usize, v: &[Gauss]) -> GMat {
    Mat { rows, cols, data: v.to_vec() }
}

fn is_diagonal(x: &GMat) -> bool {
    (0..x.rows).all(|i| (0..x.cols).all(|j| i == j || x[(i, j)].is_zero()))
}

fn nonzeros(x: &GMat) -> Vec<(usize, usize, Gauss)> {
    let mut out = Vec::new();
    for i in 0..x.rows {
        for j in 0..x.cols {
            if !x[(i, j)].is_zero() {
                out.push((i, j, x[(i, j)].clone()));
            }
        }
    }
    out
}

/// Rows of the equations `b T - T a = 0` in the n×m unknowns of T.
fn hom_rows(sys: &mut LinearSystem<Gauss>, a: &GMat, b: &GMat) {
    let (n, m) = (b.rows, a.rows);
    for i in 0..n {
        for j in 0..m {
            let mut row = Vec::new();
            for l in 0..n {
                if !b[(i, l)].is_zero() {
                    row.push((l * m + j, b[(i, l)].clone()));
                }
            }
            for l in 0..m {
                if !a[(l, j)].is_zero() {
                    row.push((i * m + l, a[(l, j)].negate()));
                }
            }
            sys.push(row);
        }
    }
}

/// The basis with the identity on the free columns of any system with this
/// kernel, as [`LinearSystem::kernel`] returns it.
fn free_column_form(k: Vec<Vec<Gauss>>, ncols: usize) -> Vec<Vec<Gauss>> {
    let rev: Vec<Vec<Gauss>> = k.into_iter().map(|v| v.into_iter().rev().collect()).collect();
    let r = Rref::new(rev, ncols);
    let mut out: Vec<Vec<Gauss>> = r.rows.into_iter().map(|v| v.into_iter().rev().collect()).collect();
    out.reverse();
    out
}

/// All T (n×m) with `dst[k] T = T src[k]` for every k.
///
/// Diagonal pairs are solved first; every other pair only cuts down the
/// kernel found so far, which keeps systems small for Chevalley-type bases.
pub fn hom_space(src: &[GMat], dst: &[GMat]) -> Vec<GMat> {
    let (Some(s0), Some(d0)) = (src.first(), dst.first()) else {
        return Vec::new();
    };
    let (m, n) = (s0.rows, d0.rows);
    let mut pairs: Vec<(&GMat, &GMat)> = src.iter().zip(dst).collect();
    pairs.sort_by_key(|(a, b)| !(is_diagonal(a) && is_diagonal(b)));
    let n_diag = match pairs.iter().take_while(|(a, b)| is_diagonal(a) && is_diagonal(b)).count() {
        0 => pairs.len(),
        d => d,
    };
    let mut sys = LinearSystem::new(n * m);
    for (a, b) in &pairs[..n_diag] {
        hom_rows(&mut sys, a, b);
    }
    let mut k = sys.kernel();
    for (a, b) in &pairs[n_diag..] {
        if k.is_empty() {
            break;
        }
        let (na, nb) = (nonzeros(a), nonzeros(b));
        let mut red = LinearSystem::new(k.len());
        let mut images: Vec<Vec<Gauss>> = Vec::with_capacity(k.len());
        for t in &k {
            let mut img = vec![Gauss::zero(); n * m];
            for (i, l, x) in &nb {
                for j in 0..m {
                    let y = &t[l * m + j];
                    if !y.is_zero() {
                        img[i * m + j].add_mul(x, y);
                    }
                }
            }
            for (l, j, x) in &na {
                for i in 0..n {
                    let y = &t[i * m + l];
                    if !y.is_zero() {
                        img[i * m + j].sub_mul(y, x);
                    }
                }
            }
            images.push(img);
        }
        for p in 0..n * m {
            let row: Vec<(usize, Gauss)> =
                images.iter().enumerate().filter(|(_, v)| !v[p].is_zero()).map(|(c, v)| (c, v[p].clone())).collect();
            if !row.is_empty() {
                red.push(row);
            }
        }
        let c = red.kernel();
        if c.len() == k.len() {
            continue;
        }
        k = c
            .iter()
            .map(|cv| {
                let mut v = vec![Gauss::zero(); n * m];
                for (ci, t) in cv.iter().zip(&k) {
                    if ci.is_zero() {
                        continue;
                    }
                    for (o, x) in v.iter_mut().zip(t) {
                        o.add_mul(ci, x);
                    }
                }
                v
            })
            .collect();
    }
    if pairs.len() > n_diag {
        k = free_column_form(k, n * m);
    }
    k.iter().map(|v| mat_from_flat(n, m, v)).collect()
}

/// Hom between modules given by equally indexed action matrices; handles
/// the zero algebra.
fn hom_or_all(src: &[GMat], dst: &[GMat], m: usize, n: usize) -> Vec<GMat> {
    if src.is_empty() {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..m {
                let mut t = Mat::zeros(n, m);
                t[(i, j)] = Gauss::one();
                out.push(t);
            }
        }
        return out;
    }
    hom_space(src, dst)
}

/// Matrices commuting with every basis element.
pub fn commutant(r: &MatrixRep) -> Vec<GMat> {
    hom_or_all(&r.basis, &r.basis, r.dim, r.dim)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForms {
    pub symmetric: Vec<GMat>,
    pub antisymmetric: Vec<GMat>,
}

impl BilinearForms {
    pub fn dim(&self) -> usize {
        self.symmetric.len() + self.antisymmetric.len()
    }
}

fn span_basis(mats: Vec<GMat>) -> Vec<GMat> {
    let Some(first) = mats.first() else { return mats };
    let mut e: Echelon<Gauss> = Echelon::new(first.data.len());
    let (r, c) = (first.rows, first.cols);
    for m in &mats {
        e.insert(m.data.clone());
    }
    e.basis().iter().map(|v| mat_from_flat(r, c, v)).collect()
}

/// Invariant bilinear forms B (X^T B + B X = 0), split by symmetry.
pub fn invariant_bilinear_forms(r: &MatrixRep) -> BilinearForms {
    let dst: Vec<GMat> = r.basis.iter().map(|x| x.transpose().neg()).collect();
    let all = hom_or_all(&r.basis, &dst, r.dim, r.dim);
    let half = Gauss::real(crate::field::rat(1, 2));
    let sym = span_basis(all.iter().map(|b| b.add(&b.transpose()).scale(&half)).filter(|m| !m.is_zero()).collect());
    let anti = span_basis(all.iter().map(|b| b.sub(&b.transpose()).scale(&half)).filter(|m| !m.is_zero()).collect());
    BilinearForms { symmetric: sym, antisymmetric: anti }
}

/// Invariant sesquilinear forms H (X^† H + H X = 0 for X in the real form).
pub fn invariant_sesquilinear_forms(r: &MatrixRep) -> Vec<GMat> {
    let src = r.real_basis().to_vec();
    let dst: Vec<GMat> = src.iter().map(|x| x.adjoint().neg()).collect();
    hom_or_all(&src, &dst, r.dim, r.dim)
}

fn is_scalar(m: &GMat) -> bool {
    let c = &m[(0, 0)];
    (0..m.rows).all(|i| (0..m.cols).all(|j| if i == j { &m[(i, j)] == c } else { m[(i, j)].is_zero() }))
}

fn traceless(m: &GMat) -> GMat {
    let n = m.rows;
    let t = m.trace().times(&Gauss::real(Rat::new(BigInt::one(), BigInt::from(n))));
    m.sub(&Mat::identity(n).scale(&t))
}

/// Sylvester test on a real symmetric matrix.
pub fn is_positive_definite(m: &GMat) -> bool {
    if !m.is_real() || *m != m.transpose() {
        return false;
    }
    let n = m.rows;
    let mut a: Vec<Vec<Rat>> = (0..n).map(|i| (0..n).map(|j| m[(i, j)].real_part()).collect()).collect();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            if Zero::is_zero(&f) {
                continue;
            }
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    true
}

/// Whether a real commutant (as a real algebra of matrices) is a division algebra.
fn real_division(c: &[GMat]) -> bool {
    match c.len() {
        1 => true,
        2 => {
            let Some(y) = c.iter().find(|m| !is_scalar(m)) else { return false };
            let x = traceless(y);
            let x2 = x.mul(&x);
            // x^2 = -q I with q > 0
            is_scalar(&x2) && x2[(0, 0)].real_part().is_negative()
        }
        4 => {
            let tl: Vec<GMat> = span_basis(c.iter().map(traceless).filter(|m| !m.is_zero()).collect());
            if tl.len() != 3 {
                return false;
            }
            if tl[0].mul(&tl[1]) == tl[1].mul(&tl[0]) {
                return false;
            }
            let q = Mat::from_fn(3, 3, |i, j| tl[i].mul(&tl[j]).trace().negate());
            is_positive_definite(&q)
        }
        _ => false,
    }
}

fn field_span_ok(v: &[Gauss], field: FieldTag) -> bool {
    field == FieldTag::Complex || v.iter().all(|x| x.is_real())
}

/// Span of the orbit of `v` under the associative algebra generated by `gens`.
fn spin(gens: &[GMat], v: Vec<Gauss>) -> Vec<Vec<Gauss>> {
    let n = v.len();
    let mut e: Echelon<Gauss> = Echelon::new(n);
    let mut out = Vec::new();
    let mut queue = vec![v];
    while let Some(w) = queue.pop() {
        if e.insert(w.clone()) {
            for g in gens {
                queue.push(g.apply(&w));
            }
            out.push(w);
            if out.len() == n {
                break;
            }
        }
    }
    out
}

fn seeded_vectors(n: usize, count: usize, field: FieldTag) -> Vec<Vec<Gauss>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SPIN_SEED ^ n as u64);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let re = rng.gen_range(-3i64..=3);
                    let im = if field == FieldTag::Complex { rng.gen_range(-3i64..=3) } else { 0 };
                    Gauss::int(re, im)
                })
                .collect()
        })
        .collect()
}

// ---------- polynomial roots over Q(i) ----------

pub(crate) fn min_poly(x: &GMat) -> Vec<Gauss> {
    let n = x.rows;
    let mut powers: Vec<Vec<Gauss>> = vec![Mat::<Gauss>::identity(n).data];
    let mut cur: GMat = Mat::identity(n);
    loop {
        cur = cur.mul(x);
        let solver = CoordSolver::new(powers.clone()).expect("independent powers");
        if let Some(c) = solver.coords(&cur.data) {
            let mut p: Vec<Gauss> = c.iter().map(|v| v.negate()).collect();
            p.push(Gauss::one());
            return p;
        }
        powers.push(cur.data.clone());
    }
}

type GInt = (i128, i128);

fn gmul(a: GInt, b: GInt) -> GInt {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn gdivides(d: GInt, z: GInt) -> bool {
    let nd = d.0 * d.0 + d.1 * d.1;
    if nd == 0 {
        return false;
    }
    let p = gmul(z, (d.0, -d.1));
    p.0 % nd == 0 && p.1 % nd == 0
}

const NORM_LIMIT: i128 = 1_000_000_000_000;

/// Gaussian-integer divisors of z up to units, or `None` when too large.
fn gdivisors(z: GInt) -> Option<Vec<GInt>> {
    let nz = z.0 * z.0 + z.1 * z.1;
    if nz == 0 || nz > NORM_LIMIT {
        return None;
    }
    let mut divs = Vec::new();
    let mut d = 1i128;
    while d * d <= nz {
        if nz % d == 0 {
            divs.push(d);
            if d * d != nz {
                divs.push(nz / d);
            }
        }
        d += 1;
    }
    let mut out = Vec::new();
    for &nd in &divs {
        let mut a = 0i128;
        while a * a <= nd {
            let b2 = nd - a * a;
            let b = (b2 as f64).sqrt().round() as i128;
            for bb in [b - 1, b, b + 1] {
                if bb >= 0 && bb * bb == b2 && (a > 0 || bb > 0) {
                    // one representative per unit class: first quadrant incl. positive real axis
                    let w = if a > 0 { (a, bb) } else { (bb, 0) };
                    if gdivides(w, z) && !out.contains(&w) {
                        out.push(w);
                    }
                }
            }
            a += 1;
        }
    }
    Some(out)
}

fn to_gint(g: &Gauss) -> Option<GInt> {
    Some((g.re.to_integer().to_i128()?, g.im.to_integer().to_i128()?))
}

/// Roots in Q(i) of a polynomial (coefficients from low to high degree).
/// `None` when the search space is too large to enumerate.
pub fn gaussian_roots(p: &[Gauss]) -> Option<Vec<Gauss>> {
    let mut p: Vec<Gauss> = p.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        if !roots.contains(&Gauss::zero()) {
            roots.push(Gauss::zero());
        }
    }
    if p.len() <= 1 {
        return Some(roots);
    }
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re.denom()).lcm(c.im.denom()));
    let lr = Rat::from_integer(l);
    let ints: Option<Vec<GInt>> = p.iter().map(|c| to_gint(&Gauss::new(&c.re * &lr, &c.im * &lr))).collect();
    let ints = ints?;
    let num = gdivisors(ints[0])?;
    let den = gdivisors(*ints.last().unwrap())?;
    let units: [GInt; 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    if num.len() * den.len() * 4 > 200_000 {
        return None;
    }
    let eval = |x: &Gauss| -> bool {
        let mut acc = Gauss::zero();
        for c in p.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc.is_zero()
    };
    for u in &num {
        for v in &den {
            for e in units {
                let uu = gmul(*u, e);
                let g = Gauss::int(uu.0 as i64, uu.1 as i64).div(&Gauss::int(v.0 as i64, v.1 as i64));
                if !roots.contains(&g) && eval(&g) {
                    roots.push(g);
                }
            }
        }
    }
    Some(roots)
}

/// Proper nonzero invariant subspace, if one is found; `Ok(None)` certifies
/// irreducibility (given complete reducibility).
pub fn invariant_subspace(r: &MatrixRep) -> Result<Option<Vec<Vec<Gauss>>>, MatError> {
    let n = r.dim;
    if n <= 1 {
        return Ok(None);
    }
    let gens = &r.basis;
    if gens.is_empty() {
        let mut e = vec![Gauss::zero(); n];
        e[0] = Gauss::one();
        return Ok(Some(vec![e]));
    }
    // common kernel: a trivial summand
    let mut stack = LinearSystem::new(n);
    for g in gens {
        for i in 0..n {
            stack.push_dense(&g.row(i));
        }
    }
    let k0 = stack.kernel();
    if !k0.is_empty() {
        return Ok(Some(k0));
    }
    let mut seeds: Vec<Vec<Gauss>> = (0..n.min(8))
        .map(|i| {
            let mut e = vec![Gauss::zero(); n];
            e[i] = Gauss::one();
            e
        })
        .collect();
    seeds.extend(seeded_vectors(n, 2, r.field));
    for s in seeds {
        let w = spin(gens, s);
        if w.len() < n {
            return Ok(Some(w));
        }
    }
    let comm = commutant(r);
    let division = match r.field {
        FieldTag::Real => real_division(&comm),
        FieldTag::Complex => comm.len() == 1,
    };
    if division {
        return Ok(None);
    }
    // zero divisors from eigenvalues of commutant elements
    let mut cands: Vec<GMat> = comm.iter().filter(|m| !is_scalar(m)).cloned().collect();
    for i in 0..comm.len() {
        for j in i + 1..comm.len() {
            cands.push(comm[i].add(&comm[j]));
        }
    }
    for x in &cands {
        let Some(roots) = gaussian_roots(&min_poly(x)) else { continue };
        for lam in roots {
            if r.field == FieldTag::Real && !lam.is_real() {
                continue;
            }
            let k = x.sub(&Mat::identity(n).scale(&lam)).kernel();
            if !k.is_empty() && k.len() < n && k.iter().all(|v| field_span_ok(v, r.field)) {
                return Ok(Some(k));
            }
        }
    }
    Err(MatError::Undecided)
}

pub fn is_irreducible(r: &MatrixRep) -> Result<bool, MatError> {
    Ok(invariant_subspace(r)?.is_none())
}

/// Type of an irreducible module from its commutant (real modules) or from
/// the commutant of its realification (complex modules).
pub fn classify_type(r: &MatrixRep) -> Result<RepType, MatError> {
    if !is_irreducible(r)? {
        return Err(MatError::Reducible);
    }
    match r.field {
        FieldTag::Real => match commutant(r).len() {
            1 => Ok(RepType::Real),
            2 => Ok(RepType::Complex),
            4 => Ok(RepType::Quaternionic),
            _ => Err(MatError::Reducible),
        },
        FieldTag::Complex => {
            let c = realified_commutant(r)?;
            match c.len() {
                2 => Ok(RepType::Complex),
                4 if real_division(&c) => Ok(RepType::Quaternionic),
                4 => Ok(RepType::Real),
                _ => Err(MatError::Reducible),
            }
        }
    }
}

fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Commutant of the realification, split into complex-linear maps and
/// antilinear maps `C∘conj` with `C` in Hom(conj V, V).
fn realified_commutant(r: &MatrixRep) -> Result<Vec<GMat>, MatError> {
    let i = Gauss::i();
    let gens: Vec<GMat> = match &r.real_form {
        Some(g0) => g0.clone(),
        None => super::independent(r.basis.iter().cloned().chain(r.basis.iter().map(|b| b.scale(&i))).collect(), FieldTag::Real),
    };
    let conj: Vec<GMat> = gens.iter().map(|x| x.adjoint().transpose()).collect();
    let n = r.dim;
    let k = Mat::from_fn(2 * n, 2 * n, |a, b| match (a == b, a < n) {
        (true, true) => Gauss::one(),
        (true, false) => Gauss::one().negate(),
        _ => Gauss::zero(),
    });
    let mut out = Vec::new();
    for a in hom_space(&gens, &gens) {
        out.push(realify_matrix(&a));
        out.push(realify_matrix(&a.scale(&i)));
    }
    for c in hom_space(&conj, &gens) {
        out.push(realify_matrix(&c).mul(&k));
        out.push(realify_matrix(&c.scale(&i)).mul(&k));
    }
    Ok(out)
}

/// A complex structure J (J^2 = -1) in the commutant of a real irreducible
/// module of complex or quaternionic type.
pub fn complex_structure(r: &MatrixRep) -> Result<GMat, MatError> {
    if r.field != FieldTag::Real {
        return Err(MatError::FieldMismatch(FieldTag::Real));
    }
    if classify_type(r)? == RepType::Real {
        return Err(MatError::NoForm);
    }
    let c = commutant(r);
    let y = c.iter().find(|m| !is_scalar(m)).ok_or(MatError::NoForm)?;
    let x = traceless(y);
    let x2 = x.mul(&x);
    let q = -x2[(0, 0)].real_part();
    let s = rat_sqrt(&q).ok_or_else(|| MatError::NotSquareNorm(q.to_string()))?;
    Ok(x.scale(&Gauss::real(s.recip())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Basis of the irreducible invariant subspace E_i.
    pub subspace: Vec<Vec<Gauss>>,
    /// Coefficients over the algebra basis of the ideal acting only on E_i.
    pub ideal: Vec<Vec<Gauss>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// E_0: vectors killed by the whole algebra.
    pub trivial: Vec<Vec<Gauss>>,
    pub blocks: Vec<Block>,
    /// The ideals span the algebra and each acts irreducibly on its block.
    pub block_structure: bool,
}

fn sub_rep(r: &MatrixRep, sub: &[Vec<Gauss>]) -> Result<MatrixRep, MatError> {
    let solver = CoordSolver::new(sub.to_vec()).ok_or(MatError::Dependent)?;
    let basis: Option<Vec<GMat>> = r.basis.iter().map(|x| restrict(x, sub, &solver)).collect();
    let basis = basis.ok_or(MatError::NotClosed)?;
    // restrictions may become dependent; keep the acting span only
    let basis = super::independent(basis.into_iter().filter(|m| !m.is_zero()).collect(), r.field);
    Ok(MatrixRep::new(format!("{}|sub", r.name), r.field, sub.len(), basis))
}

fn b_dot(b: &GMat, u: &[Gauss], v: &[Gauss]) -> Gauss {
    let bv = b.apply(v);
    let mut s = Gauss::zero();
    for (x, y) in u.iter().zip(&bv) {
        s.add_mul(x, y);
    }
    s
}

fn orth_complement(b: &GMat, within: &[Vec<Gauss>], of: &[Vec<Gauss>]) -> Vec<Vec<Gauss>> {
    let mut sys = LinearSystem::new(within.len());
    for u in of {
        let row: Vec<Gauss> = within.iter().map(|w| b_dot(b, u, w)).collect();
        sys.push_dense(&row);
    }
    sys.kernel()
        .iter()
        .map(|c| {
            let mut v = vec![Gauss::zero(); b.rows];
            for (ci, w) in c.iter().zip(within) {
                for (x, y) in v.iter_mut().zip(w) {
                    x.add_mul(ci, y);
                }
            }
            v
        })
        .collect()
}

fn split(r: &MatrixRep, b: &GMat, space: Vec<Vec<Gauss>>, out: &mut Vec<Vec<Vec<Gauss>>>) -> Result<(), MatError> {
    let sr = sub_rep(r, &space)?;
    match invariant_subspace(&sr)? {
        None => {
            out.push(space);
            Ok(())
        }
        Some(w) => {
            // lift subspace coordinates back to the ambient space
            let lift = |c: &Vec<Gauss>| -> Vec<Gauss> {
                let mut v = vec![Gauss::zero(); r.dim];
                for (ci, s) in c.iter().zip(&space) {
                    for (x, y) in v.iter_mut().zip(s) {
                        x.add_mul(ci, y);
                    }
                }
                v
            };
            let u: Vec<Vec<Gauss>> = w.iter().map(lift).collect();
            let rest = orth_complement(b, &space, &u);
            split(r, b, u, out)?;
            split(r, b, rest, out)
        }
    }
}

/// Orthogonal decomposition E = E_0 ⊕ E_1 ⊕ ... ⊕ E_k into the trivial part
/// and irreducible summands, with the ideal acting on each summand.
pub fn isotypic_decomposition(r: &MatrixRep) -> Result<Decomposition, MatError> {
    if r.field != FieldTag::Real {
        return Err(MatError::FieldMismatch(FieldTag::Real));
    }
    let f = r.form.as_ref().filter(|f| f.kind == FormKind::Symmetric && is_positive_definite(&f.gram)).ok_or(MatError::NoForm)?;
    let n = r.dim;
    let mut stack = LinearSystem::new(n);
    for g in &r.basis {
        for i in 0..n {
            stack.push_dense(&g.row(i));
        }
    }
    let trivial = if r.basis.is_empty() {
        (0..n)
            .map(|i| {
                let mut e = vec![Gauss::zero(); n];
                e[i] = Gauss::one();
                e
            })
            .collect()
    } else {
        stack.kernel()
    };
    let all: Vec<Vec<Gauss>> = (0..n)
        .map(|i| {
            let mut e = vec![Gauss::zero(); n];
            e[i] = Gauss::one();
            e
        })
        .collect();
    let rest = orth_complement(&f.gram, &all, &trivial);
    let mut comps = Vec::new();
    if !rest.is_empty() {
        split(r, &f.gram, rest, &mut comps)?;
    }
    let dg = r.dim_g();
    let mut blocks = Vec::new();
    let mut total = 0;
    let mut irreducible_ideals = true;
    for (i, e) in comps.iter().enumerate() {
        let mut sys = LinearSystem::new(dg);
        for (j, other) in comps.iter().enumerate() {
            if j == i {
                continue;
            }
            for w in other {
                let images: Vec<Vec<Gauss>> = r.basis.iter().map(|x| x.apply(w)).collect();
                for k in 0..n {
                    let row: Vec<Gauss> = images.iter().map(|im| im[k].clone()).collect();
                    sys.push_dense(&row);
                }
            }
        }
        let ideal = if dg == 0 { Vec::new() } else { sys.kernel() };
        total += ideal.len();
        let gi = MatrixRep::new("ideal", FieldTag::Real, n, ideal.iter().map(|c| r.element(c)).collect());
        let restricted = sub_rep(&gi, e)?;
        if invariant_subspace(&restricted)?.is_some() {
            irreducible_ideals = false;
        }
        blocks.push(Block { subspace: e.clone(), ideal });
    }
    Ok(Decomposition { trivial, blocks, block_structure: irreducible_ideals && total == dg })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_root_search() {
        // (x - 2)(x - i)(2x + 3) = 2x^3 + (-1 - 2i)x^2 + (-6 + i)x + 6i
        let p = vec![Gauss::int(0, 6), Gauss::int(-6, 1), Gauss::int(-1, -2), Gauss::int(2, 0)];
        let mut r = gaussian_roots(&p).unwrap();
        r.sort_by_key(|g| g.to_string());
        assert_eq!(r.len(), 3);
        assert!(r.contains(&Gauss::int(2, 0)));
        assert!(r.contains(&Gauss::i()));
        assert!(r.contains(&Gauss::real(crate::field::rat(-3, 2))));
    }

    #[test]
    fn positive_definite_sylvester() {
        let a: GMat = Mat::<Rat>::from_ints(2, 2, &[2, 1, 1, 2]).to_gauss();
        let b: GMat = Mat::<Rat>::from_ints(2, 2, &[1, 2, 2, 1]).to_gauss();
        assert!(is_positive_definite(&a));
        assert!(!is_positive_definite(&b));
    }

    fn hom_by_one_system(src: &[GMat], dst: &[GMat]) -> Vec<GMat> {
        let (n, m) = (dst[0].rows, src[0].rows);
        let mut sys = LinearSystem::new(n * m);
        for (a, b) in src.iter().zip(dst) {
            hom_rows(&mut sys, a, b);
        }
        sys.kernel().iter().map(|v| mat_from_flat(n, m, v)).collect()
    }

    #[test]
    fn incremental_hom_matches_one_system() {
        for name in ["sl(3,C)", "sym2(sl(2,C))", "sp(2,C)", "so(5)", "u(2)R"] {
            let r = super::super::catalog::catalog(name).unwrap();
            let s = super::super::catalog::catalog("sl(2,C)").unwrap();
            assert_eq!(hom_space(&r.basis, &r.basis), hom_by_one_system(&r.basis, &r.basis), "{name}");
            let dual: Vec<GMat> = r.basis.iter().map(|x| x.transpose().scale(&Gauss::one().negate())).collect();
            assert_eq!(hom_space(&r.basis, &dual), hom_by_one_system(&r.basis, &dual), "{name}");
            if s.basis.len() == r.basis.len() {
                assert_eq!(hom_space(&s.basis, &r.basis), hom_by_one_system(&s.basis, &r.basis), "{name}");
            }
        }
    }
}
