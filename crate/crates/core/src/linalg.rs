//! Dense matrices and exact kernels over [`Scalar`] fields.
//!
//! Large systems are solved by selecting rows modulo a word-sized prime and
//! lifting the reduced echelon form by rational reconstruction. Every lifted
//! kernel vector is checked against every original row in exact arithmetic,
//! so a returned basis is always a certified basis of the true kernel.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::field::{moduli, rational_reconstruct, Gauss, Modulus, Rat, Scalar};

pub type SparseRow<F> = Vec<(usize, F)>;

/// How kernels are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    /// Certified exact kernels.
    #[default]
    Exact,
    /// Ranks modulo several primes that must agree; not certified.
    Modular,
}

/// Homogeneous linear system given by sparse rows.
#[derive(Clone, Debug)]
pub struct LinearSystem<F> {
    pub ncols: usize,
    pub rows: Vec<SparseRow<F>>,
}

impl<F: Scalar> LinearSystem<F> {
    pub fn new(ncols: usize) -> Self {
        LinearSystem { ncols, rows: Vec::new() }
    }

    /// Adds a row, merging repeated columns and dropping zeros.
    pub fn push(&mut self, mut row: SparseRow<F>) {
        row.sort_by_key(|(c, _)| *c);
        let mut merged: SparseRow<F> = Vec::with_capacity(row.len());
        for (c, v) in row {
            debug_assert!(c < self.ncols);
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = lv.plus(&v),
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        if !merged.is_empty() {
            self.rows.push(merged);
        }
    }

    pub fn push_dense(&mut self, row: &[F]) {
        let sparse = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.push(sparse);
    }

    fn all_real(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|(_, v)| v.is_real()))
    }

    /// Certified basis of the kernel.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        if self.ncols == 0 {
            return Vec::new();
        }
        if self.rows.is_empty() {
            return unit_vectors(self.ncols);
        }
        if self.all_real() {
            let real: LinearSystem<Rat> = LinearSystem {
                ncols: self.ncols,
                rows: self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(|(c, v)| (*c, v.real_part())).collect())
                    .collect(),
            };
            return kernel_rational(&real)
                .into_iter()
                .map(|v| v.iter().map(F::from_rat).collect())
                .collect();
        }
        kernel_selected(self)
    }

    pub fn nullity(&self) -> usize {
        self.kernel().len()
    }

    /// Kernel dimension modulo `primes` distinct primes; `None` on disagreement.
    pub fn nullity_modular(&self, primes: usize) -> Option<usize> {
        let mut seen = None;
        for m in moduli().iter().take(primes.max(1)) {
            let ech = ModEchelon::from_system(self, *m)?;
            let nul = self.ncols - ech.rank();
            match seen {
                None => seen = Some(nul),
                Some(s) if s != nul => return None,
                _ => {}
            }
        }
        seen
    }

    /// Kernel basis modulo a single prime.
    pub fn kernel_mod(&self, m: Modulus) -> Option<Vec<Vec<u64>>> {
        let mut ech = ModEchelon::from_system(self, m)?;
        ech.back_substitute();
        Some(ech.kernel())
    }

    fn check(&self, v: &[F]) -> bool {
        self.rows.iter().all(|row| {
            let mut acc = F::zero();
            for (c, a) in row {
                acc.add_mul(a, &v[*c]);
            }
            acc.is_zero()
        })
    }
}

fn unit_vectors<F: Scalar>(n: usize) -> Vec<Vec<F>> {
    (0..n)
        .map(|i| {
            let mut v = vec![F::zero(); n];
            v[i] = F::one();
            v
        })
        .collect()
}

/// Row echelon form modulo a prime, rows kept sorted by pivot column.
pub struct ModEchelon {
    pub m: Modulus,
    pub n: usize,
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
    pub origin: Vec<usize>,
}

impl ModEchelon {
    pub fn new(n: usize, m: Modulus) -> Self {
        ModEchelon { m, n, rows: Vec::new(), pivots: Vec::new(), origin: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn from_system<F: Scalar>(sys: &LinearSystem<F>, m: Modulus) -> Option<Self> {
        let mut ech = ModEchelon::new(sys.ncols, m);
        let mut buf = vec![0u64; sys.ncols];
        for (ri, row) in sys.rows.iter().enumerate() {
            buf.iter_mut().for_each(|x| *x = 0);
            for (c, v) in row {
                buf[*c] = m.add(buf[*c], v.reduce(&m)?);
            }
            ech.insert(&mut buf, ri);
            if ech.rank() == sys.ncols {
                break;
            }
        }
        Some(ech)
    }

    pub fn reduce(&self, v: &mut [u64]) {
        let m = self.m;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let c = m.neg(c);
                for j in pc..self.n {
                    if row[j] != 0 {
                        v[j] = m.add(v[j], m.mul(c, row[j]));
                    }
                }
            }
        }
    }

    /// Reduces `v` and stores it when independent; returns true when stored.
    pub fn insert(&mut self, v: &mut [u64], origin: usize) -> bool {
        self.reduce(v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.m.inv(v[pc]);
        let row: Vec<u64> = v.iter().map(|&x| self.m.mul(x, inv)).collect();
        let at = self.pivots.partition_point(|&p| p < pc);
        self.rows.insert(at, row);
        self.pivots.insert(at, pc);
        self.origin.insert(at, origin);
        true
    }

    /// Turns the echelon form into reduced row echelon form.
    pub fn back_substitute(&mut self) {
        let m = self.m;
        for k in (0..self.rows.len()).rev() {
            let pc = self.pivots[k];
            let (upper, lower) = self.rows.split_at_mut(k);
            let prow = &lower[0];
            for row in upper.iter_mut() {
                let c = row[pc];
                if c != 0 {
                    let c = m.neg(c);
                    for j in pc..self.n {
                        if prow[j] != 0 {
                            row[j] = m.add(row[j], m.mul(c, prow[j]));
                        }
                    }
                }
            }
        }
    }

    fn free_columns(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.n];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.n).filter(|&c| !is_piv[c]).collect()
    }

    /// Kernel basis of a reduced form.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![0u64; self.n];
                v[f] = 1;
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = self.m.neg(row[f]);
                }
                v
            })
            .collect()
    }
}

/// Kernel of a rational system by multi-modular lifting with exact checks.
fn kernel_rational(sys: &LinearSystem<Rat>) -> Vec<Vec<Rat>> {
    let mut best_rank = 0usize;
    let mut pivots: Vec<usize> = Vec::new();
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::from(1);
    let mut last: Option<Vec<Rat>> = None;
    for m in moduli() {
        let Some(mut ech) = ModEchelon::from_system(sys, *m) else {
            continue;
        };
        if ech.rank() < best_rank {
            continue;
        }
        if ech.rank() == sys.ncols {
            return Vec::new();
        }
        ech.back_substitute();
        let free = ech.free_columns();
        let residues: Vec<u64> = ech
            .rows
            .iter()
            .flat_map(|row| free.iter().map(move |&f| row[f]))
            .collect();
        if ech.rank() > best_rank || ech.pivots != pivots {
            best_rank = ech.rank();
            pivots = ech.pivots.clone();
            acc = residues.iter().map(|&r| BigInt::from(r)).collect();
            modulus = BigInt::from(m.p);
            last = None;
            if best_rank == 0 {
                let cand = unit_vectors::<Rat>(sys.ncols);
                if cand.iter().all(|v| sys.check(v)) {
                    return cand;
                }
            }
            continue;
        }
        let p = BigInt::from(m.p);
        let inv = BigInt::from(m.inv(m.reduce_int(&modulus)));
        for (a, &r) in acc.iter_mut().zip(&residues) {
            let diff = (BigInt::from(r) - &*a).mod_floor(&p);
            *a += &modulus * ((diff * &inv).mod_floor(&p));
        }
        modulus *= &p;
        let recon: Option<Vec<Rat>> =
            acc.iter().map(|a| rational_reconstruct(a, &modulus)).collect();
        let Some(recon) = recon else { continue };
        let stable = last.as_ref() == Some(&recon);
        last = Some(recon.clone());
        if !stable {
            continue;
        }
        let ncols = sys.ncols;
        let nfree = ncols - best_rank;
        let mut is_piv = vec![false; ncols];
        for &pc in &pivots {
            is_piv[pc] = true;
        }
        let free: Vec<usize> = (0..ncols).filter(|&c| !is_piv[c]).collect();
        let basis: Vec<Vec<Rat>> = free
            .iter()
            .enumerate()
            .map(|(fi, &f)| {
                let mut v = vec![<Rat as Scalar>::zero(); ncols];
                v[f] = <Rat as Scalar>::one();
                for (ri, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&recon[ri * nfree + fi];
                }
                v
            })
            .collect();
        if crate::par::all(&basis, |v| sys.check(v)) {
            return basis;
        }
    }
    kernel_selected(sys)
}

/// Kernel via modular row selection followed by exact elimination of the
/// selected rows; falls back to adding any violated row and repeating.
fn kernel_selected<F: Scalar>(sys: &LinearSystem<F>) -> Vec<Vec<F>> {
    let m = moduli()[0];
    let mut selected: Vec<usize> = match ModEchelon::from_system(sys, m) {
        Some(ech) => {
            let mut o = ech.origin.clone();
            o.sort_unstable();
            o
        }
        None => (0..sys.rows.len()).collect(),
    };
    loop {
        let dense: Vec<Vec<F>> = selected
            .iter()
            .map(|&i| {
                let mut v = vec![F::zero(); sys.ncols];
                for (c, a) in &sys.rows[i] {
                    v[*c] = a.clone();
                }
                v
            })
            .collect();
        let r = Rref::new(dense, sys.ncols);
        let basis = r.kernel();
        let bad: Vec<usize> = (0..sys.rows.len())
            .filter(|i| selected.binary_search(i).is_err())
            .filter(|&i| {
                basis.iter().any(|v| {
                    let mut acc = F::zero();
                    for (c, a) in &sys.rows[i] {
                        acc.add_mul(a, &v[*c]);
                    }
                    !acc.is_zero()
                })
            })
            .collect();
        if bad.is_empty() {
            return basis;
        }
        selected.extend(bad);
        selected.sort_unstable();
    }
}

/// Reduced row echelon form over an exact field.
#[derive(Clone, Debug)]
pub struct Rref<F> {
    pub ncols: usize,
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> Rref<F> {
    pub fn new(mut rows: Vec<Vec<F>>, ncols: usize) -> Self {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == rows.len() {
                break;
            }
            let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = rows[r][c].recip();
            if !inv.is_one() {
                for x in rows[r][c..].iter_mut() {
                    *x = x.times(&inv);
                }
            }
            let prow = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for j in c..ncols {
                    if !prow[j].is_zero() {
                        row[j].sub_mul(&f, &prow[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Rref { ncols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut is_piv = vec![false; self.ncols];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_piv[c])
            .map(|f| {
                let mut v = vec![F::zero(); self.ncols];
                v[f] = F::one();
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = row[f].negate();
                }
                v
            })
            .collect()
    }
}

/// Incremental exact echelon basis of a span.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub n: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(n: usize) -> Self {
        Echelon { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a Vec<F>>>(n: usize, vs: I) -> Self {
        let mut e = Echelon::new(n);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let c = v[pc].clone();
            for j in pc..self.n {
                if !row[j].is_zero() {
                    v[j].sub_mul(&c, &row[j]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let v = self.reduce(v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pc].recip();
        let row: Vec<F> = v.iter().map(|x| x.times(&inv)).collect();
        let at = self.pivots.partition_point(|&p| p < pc);
        self.rows.insert(at, row);
        self.pivots.insert(at, pc);
        true
    }
}

/// Coordinates with respect to a fixed independent family of vectors.
#[derive(Clone)]
pub struct CoordSolver<F> {
    basis: Vec<Vec<F>>,
    pick: Vec<usize>,
    inv: Mat<F>,
}

impl<F: Scalar> CoordSolver<F> {
    /// Returns `None` when the vectors are dependent.
    pub fn new(basis: Vec<Vec<F>>) -> Option<Self> {
        let k = basis.len();
        if k == 0 {
            return Some(CoordSolver { basis, pick: Vec::new(), inv: Mat::zeros(0, 0) });
        }
        let n = basis[0].len();
        let r = Rref::new(basis.clone(), n);
        if r.rank() != k {
            return None;
        }
        let pick = r.pivots.clone();
        let sub = Mat::from_fn(k, k, |i, j| basis[j][pick[i]].clone());
        let inv = sub.inverse()?;
        Some(CoordSolver { basis, pick, inv })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let k = self.basis.len();
        let rhs: Vec<F> = self.pick.iter().map(|&i| v[i].clone()).collect();
        let c = self.inv.apply(&rhs);
        let mut rebuilt = vec![F::zero(); v.len()];
        for j in 0..k {
            if c[j].is_zero() {
                continue;
            }
            for (x, b) in rebuilt.iter_mut().zip(&self.basis[j]) {
                x.add_mul(&c[j], b);
            }
        }
        if rebuilt.as_slice() == v {
            Some(c)
        } else {
            None
        }
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<F> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F>,
}

impl<F: Scalar> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F> Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_ints(rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        Mat { rows, cols, data: vals.iter().map(|&v| F::from_i64(v)).collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<F>]) -> Self {
        let n = cols.first().map_or(0, |c| c.len());
        Mat::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|x| x.is_real())
    }

    pub fn mul(&self, o: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out: Mat<F> = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    acc.add_mul(&self[(i, j)], &v[j]);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Mat<F> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.times(c)).collect() }
    }

    pub fn neg(&self) -> Mat<F> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.negate()).collect() }
    }

    pub fn transpose(&self) -> Mat<F> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Mat<F> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.conj()).collect() }
    }

    pub fn adjoint(&self) -> Mat<F> {
        self.transpose().conj()
    }

    pub fn bracket(&self, o: &Mat<F>) -> Mat<F> {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.plus(&self[(i, i)]);
        }
        acc
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Mat<F>) -> Mat<F> {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut out = Mat::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out[(i * o.rows + k, j * o.cols + l)] = a.times(&o[(k, l)]);
                    }
                }
            }
        }
        out
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, o: &Mat<F>) -> Mat<F> {
        let mut out = Mat::zeros(self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out[(self.rows + i, self.cols + j)] = o[(i, j)].clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<F>> = (0..self.rows).map(|i| self.row(i)).collect();
        Rref::new(rows, self.cols).rank()
    }

    /// Right kernel {v : M v = 0}.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut sys = LinearSystem::new(self.cols);
        for i in 0..self.rows {
            sys.push_dense(&self.row(i));
        }
        sys.kernel()
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let rows: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i);
                r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                r
            })
            .collect();
        let r = Rref::new(rows, 2 * n);
        if r.rank() < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.rows[i][n + j].clone()))
    }

    pub fn to_gauss(&self) -> Mat<Gauss> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.to_gauss()).collect() }
    }

    /// Converts to another scalar type when every entry is representable.
    pub fn convert<G: Scalar>(&self) -> Option<Mat<G>> {
        let data: Option<Vec<G>> = self.data.iter().map(|x| G::from_gauss(&x.to_gauss())).collect();
        Some(Mat { rows: self.rows, cols: self.cols, data: data? })
    }

    /// Flattened entries, row-major.
    pub fn flat(&self) -> &[F] {
        &self.data
    }
}
