//! Reduced irreducible root systems in their standard coordinate models.
//!
//! Ambient models: A_n in the sum-zero hyperplane of Q^{n+1}; B_n, C_n, D_n
//! in Q^n; E_6, E_7, E_8 inside Q^8 (Bourbaki simple roots); F_4 in Q^4;
//! G_2 in the sum-zero plane of Q^3. Internally weights are also carried as
//! integer Dynkin labels, which is what the hot loops use.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::field::{rat, rint, Rat};
use crate::linalg::Mat;

/// Integer coordinates (Dynkin labels or simple-root coefficients).
pub type Lat = SmallVec<[i32; 8]>;

pub const DEFAULT_ORBIT_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Some(Family::A),
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "D" => Some(Family::D),
            "E" => Some(Family::E),
            "F" => Some(Family::F),
            "G" => Some(Family::G),
            _ => None,
        }
    }

    pub fn valid_rank(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }

    pub fn simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: Family, rank: usize },
    #[error("zero vector where a root is required")]
    ZeroRoot,
    #[error("vector is not a root")]
    NotARoot,
    #[error("roots are proportional")]
    Proportional,
    #[error("root is not long")]
    NotLong,
    #[error("no orthogonal split exists for this root system")]
    NoSplit,
    #[error("weyl orbit exceeds the cap of {0} elements")]
    OrbitCap(usize),
    #[error("vector has dimension {got}, expected {expected}")]
    Dimension { got: usize, expected: usize },
    #[error("weight is not integral")]
    NotIntegral,
}

/// A rational vector in the ambient coordinates of a root system.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WeightVector {
    pub coords: Vec<Rat>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        WeightVector { coords }
    }

    pub fn zero(n: usize) -> Self {
        WeightVector { coords: vec![Rat::zero(); n] }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        WeightVector { coords: v.iter().map(|&x| rint(x)).collect() }
    }

    /// Coordinates given as (numerator, denominator) pairs.
    pub fn from_fracs(v: &[(i64, i64)]) -> Self {
        WeightVector { coords: v.iter().map(|&(n, d)| rat(n, d)).collect() }
    }

    /// Unit vector e_i (1-based, matching the usual notation).
    pub fn e(n: usize, i: usize) -> Self {
        let mut w = WeightVector::zero(n);
        w.coords[i - 1] = Rat::one();
        w
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, o: &WeightVector) -> Rat {
        self.coords.iter().zip(&o.coords).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, o: &WeightVector) -> WeightVector {
        WeightVector { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &WeightVector) -> WeightVector {
        WeightVector { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rat) -> WeightVector {
        WeightVector { coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector { coords: self.coords.iter().map(|a| -a).collect() }
    }

    /// True when the two vectors are linearly dependent.
    pub fn proportional(&self, o: &WeightVector) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                if &self.coords[i] * &o.coords[j] != &self.coords[j] * &o.coords[i] {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A realized root system with cached integer data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<WeightVector>,
    /// Positive roots first (by height, then simple coefficients), then their negatives.
    pub roots: Vec<WeightVector>,
    pub fundamental_weights: Vec<WeightVector>,
    /// `cartan[i][j]` = <alpha_i, alpha_j^vee>.
    pub cartan: Vec<Vec<i32>>,
    root_dynkin: Vec<Lat>,
    root_simple: Vec<Lat>,
    root_coroot: Vec<Lat>,
    root_len2: Vec<Rat>,
    root_index: HashMap<Lat, usize>,
    gram: Vec<Vec<i64>>,
    gram_den: i64,
    max_len2: Rat,
    pub orbit_cap: usize,
}

fn simple_roots_for(family: Family, n: usize) -> (usize, Vec<WeightVector>) {
    let e = |dim: usize, i: usize| WeightVector::e(dim, i);
    match family {
        Family::A => {
            let d = n + 1;
            (d, (1..=n).map(|i| e(d, i).sub(&e(d, i + 1))).collect())
        }
        Family::B | Family::C | Family::D => {
            let mut s: Vec<WeightVector> = (1..n).map(|i| e(n, i).sub(&e(n, i + 1))).collect();
            s.push(match family {
                Family::B => e(n, n),
                Family::C => e(n, n).scale(&rint(2)),
                _ => e(n, n - 1).add(&e(n, n)),
            });
            (n, s)
        }
        Family::E => {
            let h = rat(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut s = vec![WeightVector::new(a1), e(8, 1).add(&e(8, 2))];
            for i in 1..=6 {
                s.push(e(8, i + 1).sub(&e(8, i)));
            }
            s.truncate(n);
            (8, s)
        }
        Family::F => (
            4,
            vec![
                WeightVector::from_fracs(&[(1, 2), (-1, 2), (-1, 2), (-1, 2)]),
                e(4, 4),
                e(4, 3).sub(&e(4, 4)),
                e(4, 2).sub(&e(4, 3)),
            ],
        ),
        Family::G => (3, vec![WeightVector::from_ints(&[1, -1, 0]), WeightVector::from_ints(&[-2, 1, 1])]),
    }
}

fn to_i32(r: &Rat) -> Option<i32> {
    if r.is_integer() {
        r.to_integer().to_i32()
    } else {
        None
    }
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<RootSystem, RootSystemError> {
        if !family.valid_rank(rank) {
            return Err(RootSystemError::InvalidType { family, rank });
        }
        let (ambient_dim, simple_roots) = simple_roots_for(family, rank);
        let n = rank;
        let mut cartan = vec![vec![0i32; n]; n];
        for i in 0..n {
            for j in 0..n {
                let c = rint(2) * simple_roots[i].dot(&simple_roots[j]) / simple_roots[j].dot(&simple_roots[j]);
                cartan[i][j] = to_i32(&c).expect("integral cartan matrix");
            }
        }
        // Closure of the simple system under simple reflections, in simple-root coordinates.
        let unit = |i: usize| -> Lat {
            let mut v: Lat = SmallVec::from_elem(0, n);
            v[i] = 1;
            v
        };
        let pair = |c: &Lat, i: usize| -> i32 { (0..n).map(|j| c[j] * cartan[j][i]).sum() };
        let mut seen: HashSet<Lat> = HashSet::new();
        let mut queue: VecDeque<Lat> = VecDeque::new();
        for i in 0..n {
            let u = unit(i);
            seen.insert(u.clone());
            queue.push_back(u);
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..n {
                let k = pair(&c, i);
                if k == 0 {
                    continue;
                }
                let mut r = c.clone();
                r[i] -= k;
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut positive: Vec<Lat> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let mut simple_coords: Vec<Lat> = positive.clone();
        simple_coords.extend(positive.iter().map(|c| c.iter().map(|x| -x).collect::<Lat>()));

        let len2: Vec<Rat> = simple_roots.iter().map(|a| a.dot(a)).collect();
        let mut roots = Vec::with_capacity(simple_coords.len());
        let mut root_dynkin = Vec::with_capacity(simple_coords.len());
        let mut root_coroot = Vec::with_capacity(simple_coords.len());
        let mut root_len2 = Vec::with_capacity(simple_coords.len());
        for c in &simple_coords {
            let mut v = WeightVector::zero(ambient_dim);
            for (j, &cj) in c.iter().enumerate() {
                if cj != 0 {
                    v = v.add(&simple_roots[j].scale(&rint(cj as i64)));
                }
            }
            let l2 = v.dot(&v);
            let cor: Lat = c
                .iter()
                .enumerate()
                .map(|(j, &cj)| to_i32(&(rint(cj as i64) * &len2[j] / &l2)).expect("integral coroot"))
                .collect();
            root_dynkin.push((0..n).map(|i| pair(c, i)).collect::<Lat>());
            root_coroot.push(cor);
            root_len2.push(l2);
            roots.push(v);
        }
        let root_index = root_dynkin.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();

        let cm: Mat<Rat> = Mat::from_fn(n, n, |i, j| rint(cartan[i][j] as i64));
        let cinv = cm.inverse().expect("invertible cartan matrix");
        let fundamental_weights: Vec<WeightVector> = (0..n)
            .map(|i| {
                let mut w = WeightVector::zero(ambient_dim);
                for k in 0..n {
                    w = w.add(&simple_roots[k].scale(&cinv[(i, k)]));
                }
                w
            })
            .collect();
        let mut den = num_bigint::BigInt::one();
        let mut g = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                g[i][j] = fundamental_weights[i].dot(&fundamental_weights[j]);
                den = num_integer::Integer::lcm(&den, g[i][j].denom());
            }
        }
        let gram_den = den.to_i64().expect("small denominator");
        let gram = g
            .iter()
            .map(|row| row.iter().map(|x| (x * rint(gram_den)).to_integer().to_i64().unwrap()).collect())
            .collect();
        let max_len2 = root_len2.iter().max().cloned().unwrap_or_else(Rat::zero);
        Ok(RootSystem {
            family,
            rank,
            ambient_dim,
            simple_roots,
            roots,
            fundamental_weights,
            cartan,
            root_dynkin,
            root_simple: simple_coords,
            root_coroot,
            root_len2,
            root_index,
            gram,
            gram_den,
            max_len2,
            orbit_cap: DEFAULT_ORBIT_CAP,
        })
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[WeightVector] {
        &self.roots[..self.num_positive()]
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.num_positive()
    }

    /// Index of the negative of root `idx`.
    pub fn negative_of(&self, idx: usize) -> usize {
        let p = self.num_positive();
        if idx < p {
            idx + p
        } else {
            idx - p
        }
    }

    pub fn root_len2(&self, idx: usize) -> &Rat {
        &self.root_len2[idx]
    }

    /// Long roots are those of maximal length (all roots when simply laced).
    pub fn is_long(&self, idx: usize) -> bool {
        self.root_len2[idx] == self.max_len2
    }

    pub fn is_short(&self, idx: usize) -> bool {
        !self.is_long(idx)
    }

    pub fn root_dynkin(&self, idx: usize) -> &Lat {
        &self.root_dynkin[idx]
    }

    pub fn root_simple_coords(&self, idx: usize) -> &Lat {
        &self.root_simple[idx]
    }

    pub fn root_lookup(&self, dynkin: &[i32]) -> Option<usize> {
        self.root_index.get(dynkin).copied()
    }

    pub fn root_lookup_ambient(&self, v: &WeightVector) -> Option<usize> {
        let l = self.to_lat(v).ok()?;
        self.root_lookup(&l)
    }

    /// Highest root (a dominant long root).
    pub fn highest_root(&self) -> usize {
        self.num_positive() - 1
    }

    /// Highest short root, when two lengths occur.
    pub fn highest_short_root(&self) -> Option<usize> {
        (0..self.num_positive()).rev().find(|&i| self.is_short(i))
    }

    // ----- integer (Dynkin label) layer -----

    /// <lambda, alpha^vee> for the root with index `idx`.
    pub fn pair_coroot(&self, lambda: &[i32], idx: usize) -> i32 {
        self.root_coroot[idx].iter().zip(lambda).map(|(a, b)| a * b).sum()
    }

    /// Inner product of two weights in Dynkin labels.
    pub fn ip_lat(&self, a: &[i32], b: &[i32]) -> Rat {
        rat(self.ip_lat_scaled(a, b), self.gram_den)
    }

    /// Inner product scaled by the fixed common denominator [`Self::ip_den`].
    pub fn ip_lat_scaled(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] as i64 * self.gram[i][j] * b[j] as i64;
            }
        }
        s
    }

    pub fn ip_den(&self) -> i64 {
        self.gram_den
    }

    pub fn simple_reflect_lat(&self, lambda: &[i32], i: usize) -> Lat {
        let k = lambda[i];
        lambda.iter().enumerate().map(|(j, &x)| x - k * self.cartan[i][j]).collect()
    }

    pub fn reflect_lat(&self, lambda: &[i32], idx: usize) -> Lat {
        let k = self.pair_coroot(lambda, idx);
        lambda.iter().zip(&self.root_dynkin[idx]).map(|(&x, &a)| x - k * a).collect()
    }

    pub fn dominant_lat(&self, lambda: &[i32]) -> Lat {
        let mut l: Lat = lambda.iter().copied().collect();
        while let Some(i) = (0..self.rank).find(|&i| l[i] < 0) {
            l = self.simple_reflect_lat(&l, i);
        }
        l
    }

    pub fn orbit_lat(&self, lambda: &[i32]) -> Result<Vec<Lat>, RootSystemError> {
        let start: Lat = lambda.iter().copied().collect();
        let mut seen: HashSet<Lat> = HashSet::new();
        let mut order = vec![start.clone()];
        seen.insert(start);
        let mut k = 0;
        while k < order.len() {
            let cur = order[k].clone();
            k += 1;
            for i in 0..self.rank {
                if cur[i] == 0 {
                    continue;
                }
                let r = self.simple_reflect_lat(&cur, i);
                if seen.insert(r.clone()) {
                    if order.len() >= self.orbit_cap {
                        return Err(RootSystemError::OrbitCap(self.orbit_cap));
                    }
                    order.push(r);
                }
            }
        }
        Ok(order)
    }

    pub fn minus_w0_lat(&self, lambda: &[i32]) -> Lat {
        let neg: Lat = lambda.iter().map(|x| -x).collect();
        self.dominant_lat(&neg)
    }

    /// Weyl vector rho = sum of fundamental weights.
    pub fn rho_lat(&self) -> Lat {
        SmallVec::from_elem(1, self.rank)
    }

    pub fn zero_lat(&self) -> Lat {
        SmallVec::from_elem(0, self.rank)
    }

    pub fn to_ambient(&self, lambda: &[i32]) -> WeightVector {
        let mut w = WeightVector::zero(self.ambient_dim);
        for (i, &c) in lambda.iter().enumerate() {
            if c != 0 {
                w = w.add(&self.fundamental_weights[i].scale(&rint(c as i64)));
            }
        }
        w
    }

    /// Dynkin labels of an integral weight lying in the span of the roots.
    pub fn to_lat(&self, v: &WeightVector) -> Result<Lat, RootSystemError> {
        self.check_dim(v)?;
        let mut l = Lat::new();
        for a in &self.simple_roots {
            let c = rint(2) * v.dot(a) / a.dot(a);
            l.push(to_i32(&c).ok_or(RootSystemError::NotIntegral)?);
        }
        if &self.to_ambient(&l) != v {
            return Err(RootSystemError::NotIntegral);
        }
        Ok(l)
    }

    // ----- ambient layer -----

    fn check_dim(&self, v: &WeightVector) -> Result<(), RootSystemError> {
        if v.dim() != self.ambient_dim {
            return Err(RootSystemError::Dimension { got: v.dim(), expected: self.ambient_dim });
        }
        Ok(())
    }

    /// 2<beta, alpha>/|alpha|^2, exactly.
    pub fn cartan_int(&self, beta: &WeightVector, alpha: &WeightVector) -> Result<Rat, RootSystemError> {
        self.check_dim(beta)?;
        self.check_dim(alpha)?;
        if alpha.is_zero() {
            return Err(RootSystemError::ZeroRoot);
        }
        Ok(rint(2) * beta.dot(alpha) / alpha.dot(alpha))
    }

    pub fn reflect(&self, phi: &WeightVector, alpha: &WeightVector) -> Result<WeightVector, RootSystemError> {
        let k = self.cartan_int(phi, alpha)?;
        Ok(phi.sub(&alpha.scale(&k)))
    }

    pub fn is_root(&self, v: &WeightVector) -> bool {
        self.root_lookup_ambient(v).is_some()
    }

    /// (p, q) with beta + k alpha in the root system or zero exactly for -p <= k <= q.
    pub fn root_string(&self, beta: &WeightVector, alpha: &WeightVector) -> Result<(u32, u32), RootSystemError> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(RootSystemError::ZeroRoot);
        }
        if !self.is_root(alpha) || !self.is_root(beta) {
            return Err(RootSystemError::NotARoot);
        }
        if beta.proportional(alpha) {
            return Err(RootSystemError::Proportional);
        }
        let mut p = 0u32;
        while self.is_root(&beta.sub(&alpha.scale(&rint(p as i64 + 1)))) {
            p += 1;
        }
        let mut q = 0u32;
        while self.is_root(&beta.add(&alpha.scale(&rint(q as i64 + 1)))) {
            q += 1;
        }
        Ok((p, q))
    }

    pub fn weyl_orbit(&self, lambda: &WeightVector) -> Result<Vec<WeightVector>, RootSystemError> {
        self.check_dim(lambda)?;
        let mut seen: HashSet<WeightVector> = HashSet::new();
        let mut order = vec![lambda.clone()];
        seen.insert(lambda.clone());
        let mut k = 0;
        while k < order.len() {
            let cur = order[k].clone();
            k += 1;
            for a in &self.simple_roots {
                let r = self.reflect(&cur, a)?;
                if seen.insert(r.clone()) {
                    if order.len() >= self.orbit_cap {
                        return Err(RootSystemError::OrbitCap(self.orbit_cap));
                    }
                    order.push(r);
                }
            }
        }
        Ok(order)
    }

    pub fn dominant_rep(&self, lambda: &WeightVector) -> Result<WeightVector, RootSystemError> {
        self.check_dim(lambda)?;
        let mut l = lambda.clone();
        loop {
            let mut moved = false;
            for a in &self.simple_roots {
                if l.dot(a).is_negative() {
                    l = self.reflect(&l, a)?;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return Ok(l);
            }
        }
    }

    pub fn minus_w0(&self, lambda: &WeightVector) -> Result<WeightVector, RootSystemError> {
        self.dominant_rep(&lambda.neg())
    }

    /// Orthogonal roots (alpha, gamma) with alpha + gamma = beta, for a long root
    /// beta of a doubly laced system other than G2.
    pub fn long_orthogonal_split(&self, beta: &WeightVector) -> Result<(WeightVector, WeightVector), RootSystemError> {
        if self.family == Family::G || self.family.simply_laced() {
            return Err(RootSystemError::NoSplit);
        }
        let bi = self.root_lookup_ambient(beta).ok_or(RootSystemError::NotARoot)?;
        if !self.is_long(bi) {
            return Err(RootSystemError::NotLong);
        }
        for a in &self.roots {
            let g = beta.sub(a);
            if self.is_root(&g) && a.dot(&g).is_zero() {
                return Ok((a.clone(), g));
            }
        }
        Err(RootSystemError::NoSplit)
    }

    /// All diagram automorphisms, as permutations of the simple roots.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let id: Vec<usize> = (0..n).collect();
        let mut out = vec![id.clone()];
        match (self.family, n) {
            (Family::A, n) if n >= 2 => out.push((0..n).rev().collect()),
            (Family::D, 4) => {
                for p in [[0, 1, 3, 2], [2, 1, 0, 3], [2, 1, 3, 0], [3, 1, 0, 2], [3, 1, 2, 0]] {
                    out.push(p.to_vec());
                }
            }
            (Family::D, n) if n >= 3 => {
                let mut p = id.clone();
                p.swap(n - 2, n - 1);
                out.push(p);
            }
            (Family::E, 6) => out.push(vec![5, 1, 4, 3, 2, 0]),
            _ => {}
        }
        out
    }

    /// Canonical representative of a highest weight under diagram automorphisms.
    pub fn canonical_highest(&self, lambda: &[i32]) -> Lat {
        self.diagram_automorphisms()
            .iter()
            .map(|p| {
                let mut l: Lat = SmallVec::from_elem(0, self.rank);
                for (i, &pi) in p.iter().enumerate() {
                    l[pi] = lambda[i];
                }
                l
            })
            .max_by(|a, b| {
                // prefer weights supported on early nodes: compare reversed
                let ra: Vec<i32> = a.iter().rev().copied().collect();
                let rb: Vec<i32> = b.iter().rev().copied().collect();
                rb.cmp(&ra)
            })
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let cases = [
            (Family::A, 1, 2),
            (Family::A, 4, 20),
            (Family::B, 3, 18),
            (Family::C, 3, 18),
            (Family::D, 4, 24),
            (Family::E, 6, 72),
            (Family::E, 7, 126),
            (Family::E, 8, 240),
            (Family::F, 4, 48),
            (Family::G, 2, 12),
        ];
        for (f, n, c) in cases {
            assert_eq!(RootSystem::build(f, n).unwrap().num_roots(), c, "{f}{n}");
        }
    }

    #[test]
    fn fundamental_weights_dual_to_coroots() {
        for (f, n) in [(Family::B, 3), (Family::E, 7), (Family::F, 4), (Family::G, 2), (Family::A, 3)] {
            let rs = RootSystem::build(f, n).unwrap();
            for (i, w) in rs.fundamental_weights.iter().enumerate() {
                for (j, a) in rs.simple_roots.iter().enumerate() {
                    let expect = if i == j { rint(1) } else { rint(0) };
                    assert_eq!(rs.cartan_int(w, a).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn known_coordinates() {
        let d = RootSystem::build(Family::D, 5).unwrap();
        assert_eq!(d.fundamental_weights[2], WeightVector::from_ints(&[1, 1, 1, 0, 0]));
        let g = RootSystem::build(Family::G, 2).unwrap();
        assert_eq!(g.fundamental_weights[0], WeightVector::from_ints(&[0, -1, 1]));
        let f = RootSystem::build(Family::F, 4).unwrap();
        assert_eq!(f.fundamental_weights[0], WeightVector::from_ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn canonical_highest_prefers_first_node() {
        let a = RootSystem::build(Family::A, 3).unwrap();
        assert_eq!(a.canonical_highest(&[0, 0, 1]).as_slice(), &[1, 0, 0]);
        let d = RootSystem::build(Family::D, 4).unwrap();
        assert_eq!(d.canonical_highest(&[0, 0, 2, 0]).as_slice(), &[2, 0, 0, 0]);
    }
}
