//! Root tables shared by the integration tests.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use berger_core::rootsys::{Family, RootSystem};

type Key = [i32; 8];

/// Roots as integer vectors over the simple roots, with inner products
/// scaled to integers by a common denominator.
pub struct Table {
    pub coords: Vec<Key>,
    index: HashMap<Key, usize>,
    pub ip: Vec<Vec<i64>>,
    long: Vec<bool>,
    pub simply_laced: bool,
}

impl Table {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.num_roots();
        let coords: Vec<Key> = (0..n)
            .map(|i| {
                let mut k = [0; 8];
                k[..rs.rank].copy_from_slice(rs.root_simple_coords(i));
                k
            })
            .collect();
        let index = coords.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let ip: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| rs.ip_lat_scaled(rs.root_dynkin(i), rs.root_dynkin(j))).collect()).collect();
        let max = (0..n).map(|i| ip[i][i]).max().unwrap_or(0);
        let long: Vec<bool> = (0..n).map(|i| ip[i][i] == max).collect();
        let simply_laced = long.iter().all(|&l| l);
        Table { coords, index, ip, long, simply_laced }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn long(&self, i: usize) -> bool {
        self.long[i]
    }

    pub fn prop(&self, i: usize, j: usize) -> bool {
        self.coords[i].iter().zip(&self.coords[j]).all(|(a, b)| a == b || *a == -b)
    }

    /// 2<a, b> / <b, b>.
    pub fn cartan(&self, a: usize, b: usize) -> i64 {
        2 * self.ip[a][b] / self.ip[b][b]
    }

    pub fn comb(&self, terms: &[(i32, usize)]) -> Option<usize> {
        let mut v = [0i32; 8];
        for &(c, i) in terms {
            for (x, y) in v.iter_mut().zip(&self.coords[i]) {
                *x += c * y;
            }
        }
        self.index.get(&v).copied()
    }
}

/// Literal checks of the root-string and root-length lemmas. Returns the
/// clauses that fail somewhere in `rs`.
pub fn lemma_failures(rs: &RootSystem) -> Vec<&'static str> {
    let t = Table::new(rs);
    let n = t.n();
    let sl = t.simply_laced;
    let mut fails: HashSet<&'static str> = HashSet::new();
    for i in 0..n {
        for j in 0..n {
            if t.prop(i, j) {
                continue;
            }
            let ip = t.ip[i][j];
            for a in 2..=4 {
                if t.comb(&[(a, i), (1, j)]).is_some() && !(ip < 0 && !t.long(i)) {
                    fails.insert("multiple plus root");
                }
                if t.comb(&[(a, i), (a, j)]).is_some() {
                    fails.insert("multiple of a sum");
                }
            }
            if let Some(s) = t.comb(&[(1, i), (1, j)]) {
                if (sl || t.long(i)) && ip >= 0 {
                    fails.insert("sum with a long root");
                }
                if !sl && !t.long(i) && !t.long(j) && !(if t.long(s) { ip == 0 } else { ip < 0 }) {
                    fails.insert("sum of two short roots");
                }
                if !sl && t.long(i) != t.long(j) && t.long(s) {
                    fails.insert("short plus long");
                }
            }
            for a in 1..=4 {
                for b in a..=4 {
                    if t.comb(&[(a, i), (b, j)]).is_none() {
                        continue;
                    }
                    let ok = match rs.family {
                        Family::G => a <= 2 && b <= 3,
                        Family::A | Family::D | Family::E => a == 1 && b == 1,
                        _ => a == 1 && b <= 2,
                    };
                    if !ok {
                        fails.insert("bounds on a, b");
                    }
                }
            }
        }
    }
    if !sl && rs.family != Family::G {
        for i in (0..n).filter(|&i| t.long(i)) {
            let split = (0..n).any(|a| t.comb(&[(1, i), (-1, a)]).is_some_and(|g| t.ip[a][g] == 0));
            if !split {
                fails.insert("orthogonal split");
            }
        }
    }
    for eta in (0..n).filter(|&e| t.long(e)) {
        for al in (0..n).filter(|&x| !t.prop(x, eta)) {
            for a in 1..=4 {
                for b in 1..=4 {
                    let bound = a <= b && (a == 1 || (rs.family == Family::G && a <= 2));
                    if !bound && t.comb(&[(a, eta), (b, al)]).is_some() {
                        fails.insert("long root multiple");
                    }
                }
            }
            for a in 3..=4 {
                for g in 0..n {
                    if t.comb(&[(1, g), (-a, eta), (-1, al)]).is_some_and(|be| !t.prop(be, eta)) {
                        fails.insert("long root multiple plus two roots");
                    }
                }
            }
        }
    }
    if !sl {
        for al in (0..n).filter(|&a| t.long(a)) {
            for eta in (0..n).filter(|&e| !t.long(e) && t.ip[al][e] > 0) {
                let cands: Vec<usize> =
                    (0..n).filter(|&b| !t.long(b) && !t.prop(b, eta) && t.ip[b][al] < 0 && t.ip[b][eta] <= 0).collect();
                if cands.is_empty() {
                    fails.insert("short root sign pattern");
                }
                if (rs.rank > 2 || t.cartan(al, eta) == 3) && !cands.iter().any(|&b| t.ip[b][eta] < 0) {
                    fails.insert("short root strict sign pattern");
                }
            }
        }
    }
    let mut v: Vec<&'static str> = fails.into_iter().collect();
    v.sort();
    v
}
