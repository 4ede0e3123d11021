//! Weight systems of irreducible highest-weight modules.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{Lat, RootSystem, RootSystemError, WeightVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("highest weight must be dominant integral")]
    NotDominant,
    #[error("expected {expected} Dynkin labels, got {got}")]
    WrongLength { got: usize, expected: usize },
    #[error("representation is not self-dual")]
    NotSelfDual,
    #[error("not a root")]
    NotARoot,
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FsType {
    Orthogonal,
    Symplectic,
}

/// Weight support and multiplicities of V(Lambda). Weights are Dynkin labels.
#[derive(Clone, Debug)]
pub struct WeightSystem {
    pub rs: Arc<RootSystem>,
    pub highest: Lat,
    pub weights: Vec<Lat>,
    pub multiplicities: Vec<u64>,
    index: HashMap<Lat, usize>,
}

fn check_dominant(rs: &RootSystem, lambda: &[i32]) -> Result<(), RepError> {
    if lambda.len() != rs.rank {
        return Err(RepError::WrongLength { got: lambda.len(), expected: rs.rank });
    }
    if lambda.iter().any(|&x| x < 0) {
        return Err(RepError::NotDominant);
    }
    Ok(())
}

/// Dominant weights of V(Lambda) with their depth below Lambda.
fn dominant_weights(rs: &RootSystem, lambda: &[i32]) -> Vec<(Lat, i32)> {
    let start: Lat = lambda.iter().copied().collect();
    let mut level: HashMap<Lat, i32> = HashMap::new();
    level.insert(start.clone(), 0);
    let mut stack = vec![start];
    while let Some(mu) = stack.pop() {
        let lv = level[&mu];
        for idx in 0..rs.num_positive() {
            let a = rs.root_dynkin(idx);
            let nu: Lat = mu.iter().zip(a).map(|(x, y)| x - y).collect();
            if nu.iter().any(|&x| x < 0) || level.contains_key(&nu) {
                continue;
            }
            let ht: i32 = rs.root_simple_coords(idx).iter().sum();
            level.insert(nu.clone(), lv + ht);
            stack.push(nu);
        }
    }
    let mut out: Vec<(Lat, i32)> = level.into_iter().collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Multiplicities of the dominant weights by Freudenthal's recursion.
fn freudenthal(rs: &RootSystem, lambda: &[i32], dom: &[(Lat, i32)]) -> HashMap<Lat, u64> {
    let rho = rs.rho_lat();
    let shift = |v: &[i32]| -> Lat { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let lr = shift(lambda);
    let top = rs.ip_lat_scaled(&lr, &lr);
    let mut mult: HashMap<Lat, u64> = HashMap::new();
    for (mu, _) in dom {
        if mu.as_slice() == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mr = shift(mu);
        let den = top - rs.ip_lat_scaled(&mr, &mr);
        let mut num: i128 = 0;
        for idx in 0..rs.num_positive() {
            let a = rs.root_dynkin(idx);
            let mut nu: Lat = mu.clone();
            loop {
                for (x, y) in nu.iter_mut().zip(a) {
                    *x += y;
                }
                let d = rs.dominant_lat(&nu);
                let Some(&m) = mult.get(&d) else { break };
                num += m as i128 * rs.ip_lat_scaled(&nu, a) as i128;
            }
        }
        num *= 2;
        assert!(den > 0 && num % den as i128 == 0, "Freudenthal recursion is integral");
        let m = (num / den as i128) as u64;
        mult.insert(mu.clone(), m);
    }
    mult
}

impl WeightSystem {
    pub fn new(rs: Arc<RootSystem>, lambda: &[i32]) -> Result<WeightSystem, RepError> {
        check_dominant(&rs, lambda)?;
        let dom = dominant_weights(&rs, lambda);
        let dmult = freudenthal(&rs, lambda, &dom);
        let mut all: Vec<(Lat, u64)> = Vec::new();
        for (mu, _) in &dom {
            let m = dmult[mu];
            if m == 0 {
                continue;
            }
            for w in rs.orbit_lat(mu)? {
                all.push((w, m));
            }
        }
        let rs2 = rs.clone();
        let key = |w: &Lat| -> i64 { (0..rs2.num_positive()).map(|i| rs2.pair_coroot(w, i) as i64).sum() };
        all.sort_by(|a, b| key(&b.0).cmp(&key(&a.0)).then_with(|| b.0.cmp(&a.0)));
        let index = all.iter().enumerate().map(|(i, (w, _))| (w.clone(), i)).collect();
        let (weights, multiplicities) = all.into_iter().unzip();
        Ok(WeightSystem { rs, highest: lambda.iter().copied().collect(), weights, multiplicities, index })
    }

    /// Highest weight given in ambient coordinates.
    pub fn from_ambient(rs: Arc<RootSystem>, lambda: &WeightVector) -> Result<WeightSystem, RepError> {
        let l = rs.to_lat(lambda)?;
        WeightSystem::new(rs, &l)
    }

    pub fn contains(&self, w: &[i32]) -> bool {
        self.index.contains_key(w)
    }

    pub fn multiplicity(&self, w: &[i32]) -> u64 {
        self.index.get(w).map_or(0, |&i| self.multiplicities[i])
    }

    pub fn dim(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    pub fn weights_ambient(&self) -> Vec<WeightVector> {
        self.weights.iter().map(|w| self.rs.to_ambient(w)).collect()
    }

    pub fn zero_in_omega(&self) -> bool {
        self.contains(&self.rs.zero_lat())
    }

    /// Weights lambda with lambda + alpha again a weight, alpha the root with index `idx`.
    pub fn omega_alpha_idx(&self, idx: usize) -> Vec<Lat> {
        let a = self.rs.root_dynkin(idx);
        self.weights
            .iter()
            .filter(|w| {
                let s: Lat = w.iter().zip(a).map(|(x, y)| x + y).collect();
                self.contains(&s)
            })
            .cloned()
            .collect()
    }

    pub fn omega_alpha(&self, alpha: &WeightVector) -> Result<Vec<WeightVector>, RepError> {
        let idx = self.rs.root_lookup_ambient(alpha).ok_or(RepError::NotARoot)?;
        Ok(self.omega_alpha_idx(idx).iter().map(|w| self.rs.to_ambient(w)).collect())
    }

    /// The Weyl orbit of the highest weight.
    pub fn extremal_weights(&self) -> Vec<Lat> {
        self.rs.orbit_lat(&self.highest).expect("orbit of a weight in the support fits the cap")
    }
}

pub fn weight_system(rs: &Arc<RootSystem>, lambda: &[i32]) -> Result<WeightSystem, RepError> {
    WeightSystem::new(rs.clone(), lambda)
}

/// Weyl dimension formula; saturates at `u128::MAX`.
pub fn weyl_dim(rs: &RootSystem, lambda: &[i32]) -> Result<u128, RepError> {
    check_dominant(rs, lambda)?;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    let rho = rs.rho_lat();
    let lr: Lat = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    for idx in 0..rs.num_positive() {
        num *= rs.pair_coroot(&lr, idx);
        den *= rs.pair_coroot(&rho, idx);
    }
    debug_assert!((&num % &den).is_zero());
    Ok((num / den).to_u128().unwrap_or(u128::MAX))
}

pub fn is_self_dual(rs: &RootSystem, lambda: &[i32]) -> Result<bool, RepError> {
    check_dominant(rs, lambda)?;
    Ok(rs.minus_w0_lat(lambda).as_slice() == lambda)
}

/// Orthogonal iff the sum of <Lambda, alpha^vee> over positive roots is even.
pub fn fs_indicator(rs: &RootSystem, lambda: &[i32]) -> Result<FsType, RepError> {
    if !is_self_dual(rs, lambda)? {
        return Err(RepError::NotSelfDual);
    }
    let s: i64 = (0..rs.num_positive()).map(|i| rs.pair_coroot(lambda, i) as i64).sum();
    Ok(if s % 2 == 0 { FsType::Orthogonal } else { FsType::Symplectic })
}

/// Dominant weights reachable from Lambda by subtracting positive roots while
/// staying dominant; used as an independent check on the saturation step.
pub fn dominant_support(ws: &WeightSystem) -> HashSet<Lat> {
    ws.weights.iter().filter(|w| w.iter().all(|&x| x >= 0)).cloned().collect()
}
