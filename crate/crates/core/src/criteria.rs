//! Weight-combinatorial necessary conditions for an orthogonal module of real
//! type to carry a spanning space of h-curvature tensors, and the screening
//! pipeline built on them.
//!
//! Weights and roots are Dynkin-label vectors. A hyperplane is reported as
//! `{lambda : sum_i normal[i] * lambda[i] = offset}`.

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::field::{moduli, Rat};
use crate::linalg::{ModEchelon, Rref};
use crate::par::{self, Parallelism};
use crate::repweights::{fs_indicator, is_self_dual, weyl_dim, FsType, RepError, WeightSystem};
use crate::rootsys::{Family, Lat, RootSystem, DEFAULT_ORBIT_CAP};

/// Hyperplane `{lambda : normal . lambda = offset}`, normal primitive integral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub normal: Vec<i64>,
    pub offset: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTriple {
    pub mu1: Vec<i32>,
    pub mu2: Vec<i32>,
    pub alpha: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarSpanningTriple {
    pub mu1: Vec<i32>,
    pub mu2: Vec<i32>,
    pub hyperplane: Hyperplane,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightHyperplane {
    pub mu: Vec<i32>,
    pub hyperplane: Hyperplane,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootWeight {
    pub alpha: Vec<i32>,
    pub mu: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiiWitness {
    pub lambda: Vec<i32>,
    /// Every root that works together with `lambda`.
    pub alphas: Vec<Vec<i32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoWeightHyperplane {
    pub mu1: Vec<i32>,
    pub mu2: Vec<i32>,
    pub hyperplane: Hyperplane,
}

/// Why a check failed: the root for which no witness exists, when applicable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub failing_root: Option<Vec<i32>>,
}

pub type Check<W> = Result<W, Failure>;

fn fail<W>() -> Check<W> {
    Err(Failure { failing_root: None })
}

fn v(l: &Lat) -> Vec<i32> {
    l.to_vec()
}

fn add(a: &[i32], b: &[i32]) -> Lat {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i32], b: &[i32]) -> Lat {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[i32]) -> Lat {
    a.iter().map(|x| -x).collect()
}

/// Shared lookups for one weight system.
pub struct Ctx<'a> {
    pub ws: &'a WeightSystem,
    pub rs: &'a RootSystem,
    pub lambda: Lat,
}

impl<'a> Ctx<'a> {
    pub fn new(ws: &'a WeightSystem) -> Self {
        Ctx { ws, rs: &ws.rs, lambda: ws.highest.clone() }
    }

    /// lam in mu + Delta_0.
    #[inline]
    fn near(&self, lam: &[i32], mu: &[i32]) -> bool {
        let d = sub(lam, mu);
        d.iter().all(|&x| x == 0) || self.rs.root_lookup(&d).is_some()
    }

    /// mu + Delta_0 intersected with the weights.
    fn around(&self, mu: &[i32]) -> Vec<Lat> {
        let mut out = Vec::new();
        if self.ws.contains(mu) {
            out.push(mu.iter().copied().collect());
        }
        for i in 0..self.rs.num_roots() {
            let c = add(mu, self.rs.root_dynkin(i));
            if self.ws.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    fn root(&self, i: usize) -> &Lat {
        self.rs.root_dynkin(i)
    }
}

fn mod_rank(points: &[&Lat], n: usize) -> usize {
    let m = moduli()[0];
    let mut ech = ModEchelon::new(n, m);
    let mut buf = vec![0u64; n];
    for (k, p) in points.iter().enumerate() {
        for (b, &x) in buf.iter_mut().zip(p.iter()) {
            *b = if x >= 0 { x as u64 } else { m.neg((-x) as u64) };
        }
        ech.insert(&mut buf, k);
        if ech.rank() == n {
            break;
        }
    }
    ech.rank()
}

fn primitive(v: &[Rat]) -> Vec<i64> {
    let mut den = num_bigint::BigInt::from(1);
    for x in v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * Rat::from_integer(den.clone())).to_integer()).collect();
    let mut g = num_bigint::BigInt::from(0);
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return vec![0; v.len()];
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(1, |x| if x.is_negative() { -1 } else { 1 });
    ints.iter().map(|x| (x / &g).to_i64().expect("small normal") * sign).collect()
}

/// Linear hyperplane through every point, with a canonical normal.
pub fn linear_hyperplane(points: &[&Lat], n: usize) -> Option<Hyperplane> {
    if n == 0 || mod_rank(points, n) == n {
        return None;
    }
    let rows: Vec<Vec<Rat>> =
        points.iter().map(|p| p.iter().map(|&x| Rat::from_integer((x as i64).into())).collect()).collect();
    let r = Rref::new(rows, n);
    let ker = r.kernel();
    let first = ker.first()?;
    Some(Hyperplane { normal: primitive(first), offset: 0 })
}

/// Affine hyperplane through every point of `on` and through none of `off`.
pub fn affine_hyperplane(on: &[&Lat], off: &[&Lat], n: usize) -> Option<Hyperplane> {
    // unknowns (T_1..T_n, c) with T . p - c = 0
    let rows: Vec<Vec<Rat>> = on
        .iter()
        .map(|p| {
            let mut r: Vec<Rat> = p.iter().map(|&x| Rat::from_integer((x as i64).into())).collect();
            r.push(Rat::from_integer((-1).into()));
            r
        })
        .collect();
    let basis = if rows.is_empty() {
        (0..=n)
            .map(|i| {
                let mut e = vec![Rat::zero(); n + 1];
                e[i] = Rat::from_integer(1.into());
                e
            })
            .collect()
    } else {
        Rref::new(rows, n + 1).kernel()
    };
    if basis.is_empty() {
        return None;
    }
    let ok = |w: &[Rat]| -> bool {
        if w[..n].iter().all(|x| x.is_zero()) {
            return false;
        }
        off.iter().all(|p| {
            let val: Rat = p.iter().zip(&w[..n]).map(|(&x, t)| t * Rat::from_integer((x as i64).into())).sum();
            val != w[n]
        })
    };
    let k = basis.len();
    let tries = 3 * k + 3;
    for t in 1..=tries {
        let mut w = vec![Rat::zero(); n + 1];
        let tt = Rat::from_integer((t as i64).into());
        let mut pw = Rat::from_integer(1.into());
        for b in &basis {
            for (x, y) in w.iter_mut().zip(b) {
                *x += &pw * y;
            }
            pw *= &tt;
        }
        let cand = if t <= k { basis[t - 1].clone() } else { w };
        if ok(&cand) {
            let p = primitive(&cand);
            let sign = if p[..n].iter().find(|x| **x != 0).is_some_and(|x| *x < 0) { -1 } else { 1 };
            return Some(Hyperplane { normal: p[..n].iter().map(|x| x * sign).collect(), offset: p[n] * sign });
        }
    }
    None
}

/// Some weight mu and a linear hyperplane U with Omega inside (mu + D0) u U u (-mu + D0).
pub fn check_pi(ws: &WeightSystem) -> Check<WeightHyperplane> {
    let c = Ctx::new(ws);
    for mu in &ws.weights {
        let m = neg(mu);
        let rest: Vec<&Lat> = ws.weights.iter().filter(|l| !c.near(l, mu) && !c.near(l, &m)).collect();
        if let Some(h) = linear_hyperplane(&rest, c.rs.rank) {
            return Ok(WeightHyperplane { mu: v(mu), hyperplane: h });
        }
    }
    fail()
}

/// For every root alpha some weight mu with Omega_alpha inside (mu - alpha + D0) u (-mu + D0).
pub fn check_pii(ws: &WeightSystem) -> Check<Vec<RootWeight>> {
    let c = Ctx::new(ws);
    let mut out = Vec::new();
    for i in 0..c.rs.num_roots() {
        let a = c.root(i);
        let oa = ws.omega_alpha_idx(i);
        let works = |mu: &Lat| {
            let p = sub(mu, a);
            let q = neg(mu);
            oa.iter().all(|l| c.near(l, &p) || c.near(l, &q))
        };
        let found = match oa.first() {
            None => Some(c.lambda.clone()),
            Some(l0) => {
                let mut cands = c.around(&add(l0, a));
                cands.extend(c.around(&neg(l0)));
                cands.sort();
                cands.dedup();
                cands.into_iter().find(|mu| works(mu))
            }
        };
        match found {
            Some(mu) => out.push(RootWeight { alpha: v(a), mu: v(&mu) }),
            None => return Err(Failure { failing_root: Some(v(a)) }),
        }
    }
    Ok(out)
}

/// Some delta in Delta_+ u {0} and a linear hyperplane U with Omega inside
/// (Lambda - delta + D0) u U u (-Lambda + delta + D0).
pub fn check_qi(ws: &WeightSystem) -> Check<WeightHyperplane> {
    let c = Ctx::new(ws);
    let mut deltas: Vec<Lat> = vec![c.rs.zero_lat()];
    deltas.extend((0..c.rs.num_positive()).map(|i| c.root(i).clone()));
    for d in deltas {
        let p = sub(&c.lambda, &d);
        let q = neg(&p);
        let rest: Vec<&Lat> = ws.weights.iter().filter(|l| !c.near(l, &p) && !c.near(l, &q)).collect();
        if let Some(h) = linear_hyperplane(&rest, c.rs.rank) {
            return Ok(WeightHyperplane { mu: v(&d), hyperplane: h });
        }
    }
    fail()
}

/// Roots alpha with Omega_alpha inside (Lambda - alpha + D0) u (-Lambda + D0).
pub fn sii_roots(ws: &WeightSystem) -> Vec<usize> {
    let c = Ctx::new(ws);
    let ml = neg(&c.lambda);
    (0..c.rs.num_roots())
        .filter(|&i| {
            let p = sub(&c.lambda, c.root(i));
            ws.omega_alpha_idx(i).iter().all(|l| c.near(l, &p) || c.near(l, &ml))
        })
        .collect()
}

pub fn check_qii(ws: &WeightSystem) -> Check<Vec<i32>> {
    match sii_roots(ws).first() {
        Some(&i) => Ok(ws.rs.root_dynkin(i).to_vec()),
        None => fail(),
    }
}

/// The extremal weight Lambda together with every root satisfying the inclusion.
/// By Weyl symmetry the highest weight represents all extremal weights.
pub fn check_sii(ws: &WeightSystem) -> Check<SiiWitness> {
    let roots = sii_roots(ws);
    if roots.is_empty() {
        return fail();
    }
    Ok(SiiWitness {
        lambda: ws.highest.to_vec(),
        alphas: roots.iter().map(|&i| ws.rs.root_dynkin(i).to_vec()).collect(),
    })
}

/// Planar spanning triple (Lambda, -Lambda, U) with U an affine hyperplane.
pub fn check_si(ws: &WeightSystem) -> Check<PlanarSpanningTriple> {
    let c = Ctx::new(ws);
    let lam = c.lambda.clone();
    let ml = neg(&lam);
    let mut on: Vec<Lat> = ws.extremal_weights().into_iter().filter(|e| *e != lam && *e != ml).collect();
    on.extend(ws.weights.iter().filter(|l| !c.near(l, &lam) && !c.near(l, &ml)).cloned());
    on.sort();
    on.dedup();
    let on_refs: Vec<&Lat> = on.iter().collect();
    match affine_hyperplane(&on_refs, &[&lam, &ml], c.rs.rank) {
        Some(h) => Ok(PlanarSpanningTriple { mu1: v(&lam), mu2: v(&ml), hyperplane: h }),
        None => fail(),
    }
}

/// Weights mu1, mu2 and a linear hyperplane U with Omega inside (mu1 + D0) u U u (mu2 + D0).
pub fn check_ri(ws: &WeightSystem) -> Check<TwoWeightHyperplane> {
    let c = Ctx::new(ws);
    let w = &ws.weights;
    for i in 0..w.len() {
        for j in i..w.len() {
            let rest: Vec<&Lat> = w.iter().filter(|l| !c.near(l, &w[i]) && !c.near(l, &w[j])).collect();
            if let Some(h) = linear_hyperplane(&rest, c.rs.rank) {
                return Ok(TwoWeightHyperplane { mu1: v(&w[i]), mu2: v(&w[j]), hyperplane: h });
            }
        }
    }
    fail()
}

/// For every root alpha a spanning triple (mu1, mu2, alpha).
pub fn check_rii(ws: &WeightSystem) -> Check<Vec<SpanningTriple>> {
    let c = Ctx::new(ws);
    let mut out = Vec::new();
    for i in 0..c.rs.num_roots() {
        let a = c.root(i);
        let oa = ws.omega_alpha_idx(i);
        let mut found = None;
        match oa.first() {
            None => found = Some((c.lambda.clone(), c.lambda.clone())),
            Some(l0) => {
                'outer: for mu1 in c.around(&add(l0, a)) {
                    let p1 = sub(&mu1, a);
                    let rest: Vec<&Lat> = oa.iter().filter(|l| !c.near(l, &p1)).collect();
                    let Some(s0) = rest.first() else {
                        found = Some((mu1.clone(), mu1.clone()));
                        break;
                    };
                    for mu2 in c.around(&add(s0, a)) {
                        let p2 = sub(&mu2, a);
                        if rest.iter().all(|l| c.near(l, &p2)) {
                            found = Some((mu1.clone(), mu2));
                            break 'outer;
                        }
                    }
                }
            }
        }
        match found {
            Some((m1, m2)) => out.push(SpanningTriple { mu1: v(&m1), mu2: v(&m2), alpha: v(a) }),
            None => return Err(Failure { failing_root: Some(v(a)) }),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Criterion {
    PI,
    PII,
    QI,
    QII,
    SI,
    SII,
    RI,
    RII,
}

impl Criterion {
    pub const ALL: [Criterion; 8] =
        [Criterion::PI, Criterion::PII, Criterion::QI, Criterion::QII, Criterion::SI, Criterion::SII, Criterion::RI, Criterion::RII];
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<WeightHyperplane>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pii: Option<Vec<RootWeight>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qi: Option<WeightHyperplane>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qii: Option<Vec<i32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub si: Option<PlanarSpanningTriple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sii: Option<SiiWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ri: Option<TwoWeightHyperplane>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rii: Option<Vec<SpanningTriple>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub self_dual: bool,
    pub orthogonal: bool,
    pub real_type: bool,
    pub zero_weight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootMultiple {
    pub factor: i32,
    pub long: bool,
}

/// Outcome of screening one highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenVerdict {
    pub family: Family,
    pub rank: usize,
    pub highest: Vec<i32>,
    /// Diagram-automorphism images of `highest` (its congruence class).
    pub congruent: Vec<Vec<i32>>,
    pub dim: u64,
    pub flags: Flags,
    pub root_multiple: Option<RootMultiple>,
    pub evaluated: Vec<Criterion>,
    pub passed: Vec<Criterion>,
    pub witnesses: Witnesses,
    /// Real type and (SI or SII).
    pub criteria_pass: bool,
    pub obstruction: Option<String>,
    pub rejected_by: Option<String>,
    pub survivor: bool,
    pub classification_label: Option<String>,
}

impl ScreenVerdict {
    pub fn name(&self) -> String {
        format!("{}{} {}", self.family, self.rank, weight_name(&self.highest))
    }
}

/// Human readable highest weight such as `2w1+w3`, or `0`.
pub fn weight_name(l: &[i32]) -> String {
    let parts: Vec<String> = l
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| if c == 1 { format!("w{}", i + 1) } else { format!("{}w{}", c, i + 1) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

pub const OBSTRUCTION_B7_SPIN: &str = "b7-spin-bh-weight-obstruction";
pub const OBSTRUCTION_G2_2W1: &str = "g2-2w1-bh-weight-obstruction";

fn unit(n: usize, i: usize, c: i32) -> Lat {
    let mut l: Lat = SmallVec::from_elem(0, n);
    l[i] = c;
    l
}

/// Named obstructions that rule out criteria passers by properties of the
/// h-curvature weights which the weight support alone does not see.
pub fn obstruction(family: Family, rank: usize, lambda: &[i32]) -> Option<&'static str> {
    match (family, rank) {
        (Family::B, 7) if lambda == unit(7, 6, 1).as_slice() => Some(OBSTRUCTION_B7_SPIN),
        (Family::G, 2) if lambda == [2, 0] => Some(OBSTRUCTION_G2_2W1),
        _ => None,
    }
}

/// Classification names for criteria passers (highest weight in canonical form).
pub fn classification_label(rs: &RootSystem, lambda: &[i32]) -> Option<String> {
    let n = rs.rank;
    let is = |i: usize, c: i32| lambda == unit(n, i, c).as_slice();
    if lambda == rs.root_dynkin(rs.highest_root()).as_slice() {
        return Some("adjoint representation (symmetric space of group type)".into());
    }
    let s = match (rs.family, n) {
        (Family::A, 1) if is(0, 4) => "symmetric space AI",
        (Family::A, 3) if is(0, 2) || is(1, 1) => "standard representation of so(6)",
        (Family::A, 3) if is(1, 2) => "symmetric space AI",
        (Family::A, 7) if is(3, 1) => "symmetric space EV",
        (Family::B, _) if is(0, 1) => "standard representation of so(2n+1)",
        (Family::B, _) if is(0, 2) => "symmetric space AI",
        (Family::B, 3) if is(2, 1) => "exceptional holonomy Spin(7)",
        (Family::B, 4) if is(3, 1) => "symmetric space FII",
        (Family::C, _) if n >= 3 && is(1, 1) => "symmetric space AII",
        (Family::C, 4) if is(3, 1) => "symmetric space EI",
        (Family::D, _) if is(0, 1) => "standard representation of so(2n)",
        (Family::D, _) if is(0, 2) => "symmetric space AI",
        (Family::D, 8) if is(6, 1) || is(7, 1) => "symmetric space EVIII",
        (Family::F, 4) if is(0, 1) => "symmetric space EIV",
        (Family::G, 2) if is(0, 1) => "exceptional holonomy G2",
        _ => return None,
    };
    Some(s.into())
}

/// Lambda = a * eta for a dominant root eta.
pub fn root_multiple(rs: &RootSystem, lambda: &[i32]) -> Option<RootMultiple> {
    let mut cands = vec![rs.highest_root()];
    cands.extend(rs.highest_short_root());
    for idx in cands {
        let r = rs.root_dynkin(idx);
        let Some(k) = r.iter().position(|&x| x != 0) else { continue };
        if lambda[k] % r[k] != 0 {
            continue;
        }
        let a = lambda[k] / r[k];
        if a > 0 && lambda.iter().zip(r).all(|(&l, &x)| l == a * x) {
            return Some(RootMultiple { factor: a, long: rs.is_long(idx) });
        }
    }
    None
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScreenOptions {
    /// Also evaluate PI, PII, QI, QII, RI and RII.
    pub extended: bool,
}

pub fn screen(family: Family, rank: usize, lambda: &[i32]) -> Result<ScreenVerdict, RepError> {
    let rs = Arc::new(RootSystem::build(family, rank)?);
    screen_with(&rs, lambda, ScreenOptions::default())
}

pub fn screen_with(rs: &Arc<RootSystem>, lambda: &[i32], opts: ScreenOptions) -> Result<ScreenVerdict, RepError> {
    let self_dual = is_self_dual(rs, lambda)?;
    let orthogonal = self_dual && fs_indicator(rs, lambda)? == FsType::Orthogonal;
    let real_type = self_dual && orthogonal;
    let ws = WeightSystem::new(rs.clone(), lambda)?;
    let mut congruent: Vec<Vec<i32>> = rs
        .diagram_automorphisms()
        .iter()
        .map(|p| {
            let mut l = vec![0; rs.rank];
            for (i, &pi) in p.iter().enumerate() {
                l[pi] = lambda[i];
            }
            l
        })
        .collect();
    congruent.sort();
    congruent.dedup();
    let mut verdict = ScreenVerdict {
        family: rs.family,
        rank: rs.rank,
        highest: lambda.to_vec(),
        congruent,
        dim: ws.dim(),
        flags: Flags { self_dual, orthogonal, real_type, zero_weight: ws.zero_in_omega() },
        root_multiple: root_multiple(rs, lambda),
        evaluated: Vec::new(),
        passed: Vec::new(),
        witnesses: Witnesses::default(),
        criteria_pass: false,
        obstruction: None,
        rejected_by: None,
        survivor: false,
        classification_label: None,
    };
    if !real_type {
        verdict.rejected_by = Some(if !self_dual { "not-self-dual" } else { "symplectic" }.into());
        return Ok(verdict);
    }
    let run = |c: Criterion, v: &mut ScreenVerdict| {
        v.evaluated.push(c);
        let ok = match c {
            Criterion::SI => check_si(&ws).map(|w| v.witnesses.si = Some(w)).is_ok(),
            Criterion::SII => check_sii(&ws).map(|w| v.witnesses.sii = Some(w)).is_ok(),
            Criterion::PI => check_pi(&ws).map(|w| v.witnesses.pi = Some(w)).is_ok(),
            Criterion::PII => check_pii(&ws).map(|w| v.witnesses.pii = Some(w)).is_ok(),
            Criterion::QI => check_qi(&ws).map(|w| v.witnesses.qi = Some(w)).is_ok(),
            Criterion::QII => check_qii(&ws).map(|w| v.witnesses.qii = Some(w)).is_ok(),
            Criterion::RI => check_ri(&ws).map(|w| v.witnesses.ri = Some(w)).is_ok(),
            Criterion::RII => check_rii(&ws).map(|w| v.witnesses.rii = Some(w)).is_ok(),
        };
        if ok {
            v.passed.push(c);
        }
    };
    let list: &[Criterion] = if opts.extended { &Criterion::ALL } else { &[Criterion::SI, Criterion::SII] };
    for &c in list {
        run(c, &mut verdict);
    }
    let si = verdict.passed.contains(&Criterion::SI);
    let sii = verdict.passed.contains(&Criterion::SII);
    verdict.criteria_pass = si || sii;
    if !verdict.criteria_pass {
        verdict.rejected_by = Some("SI+SII".into());
        return Ok(verdict);
    }
    if let Some(o) = obstruction(rs.family, rs.rank, lambda) {
        verdict.obstruction = Some(o.into());
        verdict.rejected_by = Some(o.into());
        return Ok(verdict);
    }
    verdict.survivor = true;
    verdict.classification_label =
        classification_label(rs, lambda).or_else(|| Some("unlabeled criteria survivor".into()));
    Ok(verdict)
}

/// Bounds for a batch screening run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeBounds {
    pub max_rank: usize,
    pub max_dim: u64,
    /// Restrict to one family.
    pub family: Option<Family>,
    /// Restrict to one rank.
    pub rank: Option<usize>,
    /// Keep only modules without zero weight.
    pub zero_weight_free: bool,
    pub options: ScreenOptions,
    /// Largest Weyl orbit enumerated per candidate.
    pub orbit_cap: usize,
}

impl RangeBounds {
    pub fn new(max_rank: usize, max_dim: u64) -> Self {
        RangeBounds { max_rank, max_dim, family: None, rank: None, zero_weight_free: false, options: ScreenOptions::default(), orbit_cap: DEFAULT_ORBIT_CAP }
    }
}

/// (family, rank) pairs covered without repeating isomorphic low-rank types,
/// unless one family/rank is requested explicitly.
pub fn systems_in_range(b: &RangeBounds) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        if b.family.is_some_and(|x| x != f) {
            continue;
        }
        let ranks: Vec<usize> = match b.rank {
            Some(r) => vec![r],
            None => (1..=b.max_rank).collect(),
        };
        for n in ranks {
            let explicit = b.family.is_some() && b.rank.is_some();
            let lowest = match f {
                Family::A => 1,
                Family::B => 2,
                Family::C => 3,
                Family::D => 4,
                _ => 0,
            };
            if f.valid_rank(n) && (explicit || n >= lowest) && (b.rank.is_some() || n <= b.max_rank) {
                out.push((f, n));
            }
        }
    }
    out
}

/// Nonzero dominant weights with Weyl dimension at most `max_dim`, one per
/// diagram-automorphism class.
pub fn dominant_weights_up_to(rs: &RootSystem, max_dim: u64) -> Vec<Lat> {
    let mut seen: HashMap<Lat, u128> = HashMap::new();
    let zero = rs.zero_lat();
    let mut stack = vec![zero.clone()];
    seen.insert(zero.clone(), 1);
    while let Some(l) = stack.pop() {
        for i in 0..rs.rank {
            let mut m = l.clone();
            m[i] += 1;
            if seen.contains_key(&m) {
                continue;
            }
            let d = weyl_dim(rs, &m).expect("dominant");
            if d <= max_dim as u128 {
                seen.insert(m.clone(), d);
                stack.push(m);
            }
        }
    }
    let mut out: Vec<Lat> = seen.into_keys().filter(|l| *l != zero).map(|l| rs.canonical_highest(&l)).collect();
    out.sort();
    out.dedup();
    out
}

pub fn screen_range(b: &RangeBounds) -> Vec<ScreenVerdict> {
    screen_range_with(b, Parallelism::Parallel)
}

pub fn screen_range_with(b: &RangeBounds, mode: Parallelism) -> Vec<ScreenVerdict> {
    try_screen_range_with(b, mode).expect("dominant weight in range")
}

/// Like [`screen_range_with`] but reports cap hits instead of panicking.
pub fn try_screen_range_with(b: &RangeBounds, mode: Parallelism) -> Result<Vec<ScreenVerdict>, RepError> {
    let mut jobs: Vec<(Arc<RootSystem>, Lat)> = Vec::new();
    for (f, n) in systems_in_range(b) {
        let mut rs = RootSystem::build(f, n)?;
        rs.orbit_cap = b.orbit_cap;
        let rs = Arc::new(rs);
        for l in dominant_weights_up_to(&rs, b.max_dim) {
            jobs.push((rs.clone(), l));
        }
    }
    let mut out = par::map(&jobs, mode, |(rs, l)| screen_with(rs, l, b.options)).into_iter().collect::<Result<Vec<_>, _>>()?;
    if b.zero_weight_free {
        out.retain(|v| !v.flags.zero_weight);
    }
    out.sort_by(|x, y| {
        (x.family, x.rank, x.dim, std::cmp::Reverse(&x.highest)).cmp(&(y.family, y.rank, y.dim, std::cmp::Reverse(&y.highest)))
    });
    Ok(out)
}
