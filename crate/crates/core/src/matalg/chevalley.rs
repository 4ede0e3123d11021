//! Chevalley bases with integer structure constants.
//!
//! Basis order: every root in root-system order (positive roots by height,
//! then their negatives), followed by the simple coroots h_1..h_r. Signs are
//! fixed by the extraspecial-pair rule N = p + 1 and extended to all pairs;
//! the Jacobi identity is verified over all triples before use.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};

use super::{check_dense, FieldTag, FormKind, GMat, MatError, MatrixRep};
use crate::field::{rint, Gauss, Rat, Scalar};
use crate::linalg::Mat;
use crate::rootsys::{Family, Lat, RootSystem};

pub type SparseI = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    pub rs: Arc<RootSystem>,
    /// Number of roots; index of h_1.
    pub nroots: usize,
    pub dim: usize,
    /// `bracket[x][y]` is [b_x, b_y] as a sparse integer vector.
    pub bracket: Vec<Vec<SparseI>>,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ChevalleyError {
    #[error("non-integral structure constant for roots {0} and {1}")]
    NonIntegral(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
}

fn lat_add(a: &Lat, b: &Lat) -> Lat {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn lat_sub(a: &Lat, b: &Lat) -> Lat {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

struct Builder<'a> {
    rs: &'a RootSystem,
    table: HashMap<(usize, usize), Rat>,
}

impl Builder<'_> {
    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.rs.root_lookup(&lat_add(self.rs.root_dynkin(a), self.rs.root_dynkin(b)))
    }

    fn diff_len2(&self, a: usize, b: usize) -> Option<Rat> {
        let d = lat_sub(self.rs.root_dynkin(a), self.rs.root_dynkin(b));
        self.rs.root_lookup(&d).map(|i| self.rs.root_len2(i).clone())
    }

    fn len2(&self, a: usize) -> &Rat {
        self.rs.root_len2(a)
    }

    /// N_{a,b} for arbitrary roots, reduced to pairs of positive roots.
    fn n(&self, a: usize, b: usize) -> Rat {
        let Some(s) = self.sum(a, b) else { return <Rat as Zero>::zero() };
        let (pa, pb) = (self.rs.is_positive(a), self.rs.is_positive(b));
        match (pa, pb) {
            (true, true) => self.table.get(&(a, b)).cloned().expect("lower pair computed"),
            (false, false) => -self.n(self.rs.negative_of(a), self.rs.negative_of(b)),
            (true, false) => {
                let c = self.rs.negative_of(s);
                if self.rs.is_positive(c) {
                    self.len2(c) / self.len2(b) * self.n(c, a)
                } else {
                    self.len2(c) / self.len2(a) * self.n(b, c)
                }
            }
            (false, true) => -self.n(b, a),
        }
    }
}

/// Structure constants N_{a,b} on all pairs of roots (zero when a+b is not a root).
pub fn structure_constants(rs: &RootSystem) -> Result<HashMap<(usize, usize), i64>, ChevalleyError> {
    let p = rs.num_positive();
    let mut b = Builder { rs, table: HashMap::new() };
    for xi in 0..p {
        let pairs: Vec<(usize, usize)> =
            (0..xi).filter_map(|a| rs.root_lookup(&lat_sub(rs.root_dynkin(xi), rs.root_dynkin(a))).filter(|&c| c < p).map(|c| (a, c))).collect();
        let Some(&(g, d)) = pairs.first() else { continue };
        // extraspecial pair: N = p + 1 with p maximal such that d - p g is a root
        let mut q = 0;
        let mut cur = rs.root_dynkin(d).clone();
        loop {
            cur = lat_sub(&cur, rs.root_dynkin(g));
            if rs.root_lookup(&cur).is_none() {
                break;
            }
            q += 1;
        }
        let ngd = rint(q + 1);
        b.table.insert((g, d), ngd.clone());
        b.table.insert((d, g), -ngd.clone());
        let xi2 = rs.root_len2(xi).clone();
        for &(a, c) in &pairs[1..] {
            if a > c {
                continue;
            }
            let (ng, nd) = (rs.negative_of(g), rs.negative_of(d));
            let mut s = <Rat as Zero>::zero();
            if let Some(l) = b.diff_len2(c, g) {
                s += b.n(c, ng) * b.n(a, nd) / l;
            }
            if let Some(l) = b.diff_len2(a, g) {
                s += b.n(ng, a) * b.n(c, nd) / l;
            }
            let v = xi2.clone() / ngd.clone() * s;
            if !v.is_integer() {
                return Err(ChevalleyError::NonIntegral(a, c));
            }
            b.table.insert((a, c), v.clone());
            b.table.insert((c, a), -v);
        }
    }
    let n = rs.num_roots();
    let mut out = HashMap::new();
    for a in 0..n {
        for c in 0..n {
            if b.sum(a, c).is_some() {
                let v = b.n(a, c);
                let iv = v.to_integer().to_i64().filter(|_| v.is_integer()).ok_or(ChevalleyError::NonIntegral(a, c))?;
                out.insert((a, c), iv);
            }
        }
    }
    Ok(out)
}

fn add_into(acc: &mut HashMap<usize, i64>, v: &SparseI, c: i64) {
    for &(k, x) in v {
        *acc.entry(k).or_insert(0) += c * x;
    }
}

impl ChevalleyAlgebra {
    pub fn new(rs: Arc<RootSystem>) -> Result<Self, ChevalleyError> {
        let nconst = structure_constants(&rs)?;
        let nroots = rs.num_roots();
        let r = rs.rank;
        let dim = nroots + r;
        // coroot coefficients over simple coroots: s_i |alpha_i|^2 / |alpha|^2
        let simple_len: Vec<Rat> = (0..r)
            .map(|i| {
                let idx = rs.root_lookup(&rs.cartan[i].iter().copied().collect::<Lat>()).expect("simple root");
                rs.root_len2(idx).clone()
            })
            .collect();
        let coroot = |a: usize| -> SparseI {
            (0..r)
                .filter_map(|i| {
                    let s = rs.root_simple_coords(a)[i];
                    if s == 0 {
                        return None;
                    }
                    let v = rint(s as i64) * simple_len[i].clone() / rs.root_len2(a).clone();
                    Some((nroots + i, v.to_integer().to_i64().expect("integral coroot")))
                })
                .collect()
        };
        let mut bracket = vec![vec![SparseI::new(); dim]; dim];
        for x in 0..dim {
            for y in 0..dim {
                bracket[x][y] = match (x < nroots, y < nroots) {
                    (true, true) => {
                        if y == rs.negative_of(x) {
                            coroot(x)
                        } else {
                            match nconst.get(&(x, y)) {
                                Some(&v) => {
                                    let s = rs.root_lookup(&lat_add(rs.root_dynkin(x), rs.root_dynkin(y))).unwrap();
                                    vec![(s, v)]
                                }
                                None => vec![],
                            }
                        }
                    }
                    (false, true) => {
                        let c = rs.root_dynkin(y)[x - nroots] as i64;
                        if c == 0 { vec![] } else { vec![(y, c)] }
                    }
                    (true, false) => {
                        let c = rs.root_dynkin(x)[y - nroots] as i64;
                        if c == 0 { vec![] } else { vec![(x, -c)] }
                    }
                    (false, false) => vec![],
                };
            }
        }
        let alg = ChevalleyAlgebra { rs, nroots, dim, bracket };
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// [u, v] for sparse integer vectors.
    pub fn bracket_vec(&self, u: &SparseI, v: &SparseI) -> SparseI {
        let mut acc = HashMap::new();
        for &(i, a) in u {
            for &(j, b) in v {
                add_into(&mut acc, &self.bracket[i][j], a * b);
            }
        }
        let mut out: SparseI = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_unstable();
        out
    }

    pub fn check_jacobi(&self) -> Result<(), ChevalleyError> {
        let n = self.dim;
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let mut acc = HashMap::new();
                    add_into(&mut acc, &self.bracket_vec(&vec![(x, 1)], &self.bracket[y][z]), 1);
                    add_into(&mut acc, &self.bracket_vec(&vec![(y, 1)], &self.bracket[z][x]), 1);
                    add_into(&mut acc, &self.bracket_vec(&vec![(z, 1)], &self.bracket[x][y]), 1);
                    if acc.values().any(|&c| c != 0) {
                        return Err(ChevalleyError::Jacobi(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }

    /// Killing form tr(ad x ad y) on basis elements.
    pub fn killing(&self) -> Vec<Vec<i64>> {
        let n = self.dim;
        let mut k = vec![vec![0i64; n]; n];
        for x in 0..n {
            for y in x..n {
                let mut t = 0;
                for z in 0..n {
                    for &(w, c) in &self.bracket[y][z] {
                        for &(u, d) in &self.bracket[x][w] {
                            if u == z {
                                t += c * d;
                            }
                        }
                    }
                }
                k[x][y] = t;
                k[y][x] = t;
            }
        }
        k
    }

    /// Basis of the compact real form: e_a - e_{-a}, i(e_a + e_{-a}), i h_j.
    pub fn compact_form(&self) -> Vec<Vec<Gauss>> {
        let n = self.dim;
        let p = self.rs.num_positive();
        let mut out = Vec::new();
        for a in 0..p {
            let na = self.rs.negative_of(a);
            let mut u = vec![Gauss::zero(); n];
            u[a] = Gauss::one();
            u[na] = Gauss::int(-1, 0);
            out.push(u);
            let mut v = vec![Gauss::zero(); n];
            v[a] = Gauss::i();
            v[na] = Gauss::i();
            out.push(v);
        }
        for j in 0..self.rs.rank {
            let mut u = vec![Gauss::zero(); n];
            u[self.nroots + j] = Gauss::i();
            out.push(u);
        }
        out
    }

    pub fn ad_matrix(&self, x: usize) -> GMat {
        let n = self.dim;
        let mut m = Mat::zeros(n, n);
        for y in 0..n {
            for &(k, c) in &self.bracket[x][y] {
                m[(k, y)] = Gauss::int(c, 0);
            }
        }
        m
    }
}

/// The adjoint representation of the complex simple algebra of the given type.
pub fn adjoint(family: Family, rank: usize) -> Result<MatrixRep, MatError> {
    let rs = RootSystem::build(family, rank).map_err(|_| MatError::InvalidDimension(format!("adjoint({family},{rank})")))?;
    let dim = rs.num_roots() + rank;
    check_dense(dim, dim)?;
    let alg = ChevalleyAlgebra::new(Arc::new(rs)).map_err(|_| MatError::NotClosed)?;
    adjoint_of(&alg)
}

pub fn adjoint_of(alg: &ChevalleyAlgebra) -> Result<MatrixRep, MatError> {
    let n = alg.dim;
    let basis: Vec<GMat> = (0..n).map(|x| alg.ad_matrix(x)).collect();
    let combine = |c: &[Gauss]| -> GMat {
        let mut m: GMat = Mat::zeros(n, n);
        for (x, cx) in c.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (o, e) in m.data.iter_mut().zip(&basis[x].data) {
                o.add_mul(cx, e);
            }
        }
        m
    };
    let real_form: Vec<GMat> = alg.compact_form().iter().map(|c| combine(c)).collect();
    let k = alg.killing();
    let gram = Mat::from_fn(n, n, |i, j| Gauss::int(k[i][j], 0));
    // invariance of the Killing form, checked on integer data
    for x in 0..n {
        for y in 0..n {
            for z in y..n {
                let lhs: i64 = alg.bracket[x][y].iter().map(|&(w, c)| c * k[w][z]).sum::<i64>()
                    + alg.bracket[x][z].iter().map(|&(w, c)| c * k[y][w]).sum::<i64>();
                if lhs != 0 {
                    return Err(MatError::FormNotInvariant);
                }
            }
        }
    }
    let torus = (0..alg.rs.rank)
        .map(|j| {
            let mut u = vec![Gauss::zero(); n];
            u[alg.nroots + j] = Gauss::one();
            u
        })
        .collect();
    Ok(MatrixRep::new(format!("adjoint({},{})", alg.rs.family, alg.rs.rank), FieldTag::Complex, n, basis)
        .with_real_form(real_form)
        .with_form(FormKind::Symmetric, gram)
        .with_torus(torus))
}
