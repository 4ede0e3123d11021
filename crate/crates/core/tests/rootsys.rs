mod common;

use std::collections::HashSet;
use std::sync::Arc;

use berger_core::field::{rat, rint, Rat};
use berger_core::repweights::{is_self_dual, weyl_dim, WeightSystem};
use berger_core::rootsys::{Family, RootSystem, RootSystemError, WeightVector};
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use common::Table;

fn all_up_to_rank(max: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in 1..=max {
            if f.valid_rank(n) {
                out.push(RootSystem::build(f, n).unwrap());
            }
        }
    }
    out
}

#[test]
fn counts_lengths_and_signature_examples() {
    let a1 = RootSystem::build(Family::A, 1).unwrap();
    assert_eq!(a1.num_roots(), 2);
    let g2 = RootSystem::build(Family::G, 2).unwrap();
    assert_eq!(g2.num_roots(), 12);
    assert_eq!((0..12).filter(|&i| g2.is_long(i)).count(), 6);
    assert!(g2.is_root(&WeightVector::from_ints(&[-1, -1, 2])));
    let eta = g2.root_lookup_ambient(&WeightVector::from_ints(&[-1, -1, 2])).unwrap();
    assert!(g2.is_long(eta));
    let d4 = RootSystem::build(Family::D, 4).unwrap();
    assert_eq!(d4.num_roots(), 24);
    assert!((0..24).all(|i| d4.is_long(i)));
    let b2 = RootSystem::build(Family::B, 2).unwrap();
    let e2 = WeightVector::from_ints(&[0, 1]);
    assert_eq!(b2.cartan_int(&WeightVector::from_ints(&[1, 1]), &e2).unwrap(), rint(2));
    let max = g2.roots.iter().flat_map(|a| g2.roots.iter().map(move |b| (a, b)))
        .map(|(a, b)| g2.cartan_int(a, b).unwrap().abs())
        .max()
        .unwrap();
    assert_eq!(max, rint(3));
}

#[test]
fn invalid_types_are_rejected() {
    for (f, n) in [(Family::A, 0), (Family::B, 1), (Family::C, 1), (Family::D, 2), (Family::E, 5), (Family::E, 9), (Family::F, 3), (Family::G, 3)] {
        assert!(matches!(RootSystem::build(f, n), Err(RootSystemError::InvalidType { .. })), "{f}{n}");
    }
    let a2 = RootSystem::build(Family::A, 2).unwrap();
    assert!(a2.cartan_int(&WeightVector::from_ints(&[1, 0, -1]), &WeightVector::zero(3)).is_err());
}

#[test]
fn root_string_examples() {
    let g2 = RootSystem::build(Family::G, 2).unwrap();
    let short = WeightVector::from_ints(&[1, -1, 0]);
    let long = WeightVector::from_ints(&[-2, 1, 1]);
    assert_eq!(g2.root_string(&long, &short).unwrap(), (0, 3));
    assert!(matches!(g2.root_string(&short, &short.neg()), Err(RootSystemError::Proportional)));
}

#[test]
fn type_invariants_up_to_rank_8() {
    for rs in all_up_to_rank(8) {
        let name = rs.name();
        let roots: HashSet<&WeightVector> = rs.roots.iter().collect();
        let lens: HashSet<Rat> = rs.roots.iter().map(|r| r.dot(r)).collect();
        assert!(lens.len() <= 2, "{name}");
        assert_eq!(lens.len() == 1, rs.family.simply_laced() || rs.rank == 1, "{name}");
        for a in &rs.roots {
            assert!(roots.contains(&a.neg()));
            let mut prop = 0;
            for b in &rs.roots {
                if a.proportional(b) {
                    prop += 1;
                    assert!(b == a || *b == a.neg(), "{name}");
                }
                let k = rs.cartan_int(b, a).unwrap();
                assert!(k.is_integer() && k.abs() <= rint(3), "{name}");
                if k.abs() == rint(3) {
                    assert_eq!(rs.family, Family::G);
                }
                assert!(roots.contains(&rs.reflect(b, a).unwrap()), "{name}");
            }
            assert_eq!(prop, 2);
        }
        for (i, w) in rs.fundamental_weights.iter().enumerate() {
            for (j, a) in rs.simple_roots.iter().enumerate() {
                assert_eq!(rs.cartan_int(w, a).unwrap(), if i == j { rint(1) } else { rint(0) }, "{name}");
            }
        }
    }
}

#[test]
fn sums_and_multiples_of_roots() {
    for rs in all_up_to_rank(8) {
        let t = Table::new(&rs);
        let name = rs.name();
        let g2 = rs.family == Family::G;
        for i in 0..t.n() {
            for j in 0..t.n() {
                if t.prop(i, j) {
                    continue;
                }
                let ip = t.ip[i][j];
                // a α + β ∈ Δ with a > 1 forces an obtuse pair and a short α
                for a in 2..=4 {
                    if t.comb(&[(a, i), (1, j)]).is_some() {
                        assert!(ip.is_negative() && !t.long(i), "{name}");
                    }
                }
                if let Some(s) = t.comb(&[(1, i), (1, j)]) {
                    if t.simply_laced || t.long(i) {
                        assert!(ip.is_negative(), "{name}");
                    }
                    if !t.long(i) && !t.long(j) {
                        if !t.long(s) {
                            assert!(ip.is_negative(), "{name}");
                        } else if !g2 {
                            assert_eq!(ip, 0, "{name}");
                        }
                    }
                    if t.long(i) != t.long(j) {
                        assert!(!t.long(s), "{name}");
                    }
                }
                // a (α + β) ∈ Δ only for a = 1
                for a in 2..=4 {
                    assert!(t.comb(&[(a, i), (a, j)]).is_none(), "{name}");
                }
                // a α + b β ∈ Δ with a ≤ b
                for a in 1..=4 {
                    for b in a..=4 {
                        if t.comb(&[(a, i), (b, j)]).is_none() {
                            continue;
                        }
                        match rs.family {
                            Family::G => assert!(a <= 2 && b <= 3, "{name}"),
                            Family::A | Family::D | Family::E => assert!(a == 1 && b == 1, "{name}"),
                            _ => assert!(a == 1 && b <= 2, "{name}"),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn g2_has_short_roots_summing_to_a_long_root_at_acute_angle() {
    let rs = RootSystem::build(Family::G, 2).unwrap();
    let t = Table::new(&rs);
    let witness = (0..t.n()).any(|i| {
        (0..t.n()).any(|j| {
            !t.prop(i, j)
                && !t.long(i)
                && !t.long(j)
                && t.comb(&[(1, i), (1, j)]).is_some_and(|s| t.long(s))
                && t.ip[i][j].is_positive()
        })
    });
    assert!(witness);
}

#[test]
fn long_roots_split_orthogonally() {
    for rs in all_up_to_rank(8) {
        let name = rs.name();
        for (idx, beta) in rs.roots.iter().enumerate() {
            let res = rs.long_orthogonal_split(beta);
            if rs.family == Family::G || rs.family.simply_laced() {
                assert!(matches!(res, Err(RootSystemError::NoSplit)), "{name}");
                continue;
            }
            if !rs.is_long(idx) {
                assert!(matches!(res, Err(RootSystemError::NotLong)), "{name}");
                continue;
            }
            let (a, g) = res.unwrap();
            assert!(rs.is_root(&a) && rs.is_root(&g) && a.dot(&g).is_zero(), "{name}");
            assert_eq!(a.add(&g), *beta);
        }
    }
}

#[test]
fn multiples_of_long_roots() {
    for rs in all_up_to_rank(8) {
        let t = Table::new(&rs);
        let name = rs.name();
        let g2 = rs.family == Family::G;
        for eta in (0..t.n()).filter(|&e| t.long(e)) {
            for al in (0..t.n()).filter(|&a| !t.prop(a, eta)) {
                for a in 1..=4 {
                    for b in 1..=4 {
                        if t.comb(&[(a, eta), (b, al)]).is_some() {
                            assert!(a <= b && if g2 { a <= 2 } else { a == 1 }, "{name}");
                        }
                    }
                }
            }
            // a η + α + β ∈ Δ forces a ≤ 2: for a = 3, 4 search γ − a η = α + β
            for a in 3..=4 {
                for g in 0..t.n() {
                    for al in (0..t.n()).filter(|&x| !t.prop(x, eta)) {
                        if let Some(be) = t.comb(&[(1, g), (-a, eta), (-1, al)]) {
                            assert!(t.prop(be, eta), "{name}: a = {a}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn short_root_with_sign_pattern() {
    for rs in all_up_to_rank(8) {
        if rs.family.simply_laced() {
            continue;
        }
        let t = Table::new(&rs);
        let name = rs.name();
        for al in (0..t.n()).filter(|&a| t.long(a)) {
            for eta in (0..t.n()).filter(|&e| !t.long(e) && t.ip[al][e].is_positive()) {
                let k = t.cartan(al, eta);
                assert!(k >= 2, "{name}");
                let cands: Vec<usize> = (0..t.n())
                    .filter(|&b| !t.long(b) && !t.prop(b, eta) && t.ip[b][al].is_negative() && !t.ip[b][eta].is_positive())
                    .collect();
                assert!(!cands.is_empty(), "{name}");
                // short roots of B_n are mutually orthogonal, so the strict
                // version cannot hold there
                let strict = cands.iter().any(|&b| t.ip[b][eta].is_negative());
                if rs.family == Family::B {
                    assert!(!strict, "{name}");
                } else if rs.rank > 2 || k == 3 {
                    assert!(strict, "{name}");
                }
            }
        }
    }
}

/// |W| from the exponents, read off the heights of the positive roots.
fn order_from_heights(rs: &RootSystem) -> u128 {
    let heights: Vec<i32> = rs.positive_roots().iter().enumerate().map(|(i, _)| rs.root_simple_coords(i).iter().sum()).collect();
    let max = *heights.iter().max().unwrap();
    let count = |k: i32| heights.iter().filter(|&&h| h == k).count();
    let mut exps = Vec::new();
    for k in 1..=max {
        let excess = count(k) - count(k + 1);
        exps.extend(std::iter::repeat(k).take(excess));
    }
    assert_eq!(exps.len(), rs.rank);
    exps.iter().map(|&e| e as u128 + 1).product()
}

#[test]
fn weyl_group_orders() {
    let mut systems = all_up_to_rank(4);
    systems.push(RootSystem::build(Family::E, 6).unwrap());
    for rs in systems {
        // the stabilizer of ρ is trivial, so |W ρ| = |W|
        let rho = rs.to_ambient(&rs.rho_lat());
        let orbit = rs.weyl_orbit(&rho).unwrap().len() as u128;
        assert_eq!(orbit, order_from_heights(&rs), "{}", rs.name());
        let lat_orbit = rs.orbit_lat(&rs.rho_lat()).unwrap().len() as u128;
        assert_eq!(lat_orbit, orbit);
    }
    let order = |f, n| RootSystem::build(f, n).unwrap().orbit_lat(&RootSystem::build(f, n).unwrap().rho_lat()).unwrap().len();
    assert_eq!(order(Family::G, 2), 12);
    assert_eq!(order(Family::B, 3), 48);
    assert_eq!(order(Family::F, 4), 1152);
}

#[test]
fn orbit_cap_is_enforced() {
    let mut rs = RootSystem::build(Family::E, 8).unwrap();
    rs.orbit_cap = 1000;
    let rho = rs.to_ambient(&rs.rho_lat());
    assert!(matches!(rs.weyl_orbit(&rho), Err(RootSystemError::OrbitCap(1000))));
}

/// Coefficients of a weight over the simple roots: x_i = 2⟨λ, ω_i⟩ / ‖α_i‖².
fn simple_coords(rs: &RootSystem, lambda: &WeightVector) -> Vec<Rat> {
    rs.fundamental_weights
        .iter()
        .zip(&rs.simple_roots)
        .map(|(w, a)| rint(2) * lambda.dot(w) / a.dot(a))
        .collect()
}

fn dominant_weights_up_to(rs: &RootSystem, max_label: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..rs.rank {
        out = out
            .into_iter()
            .flat_map(|v| (0..=max_label).map(move |c| {
                let mut w = v.clone();
                w.push(c);
                w
            }))
            .collect();
    }
    out
}

#[test]
fn dominant_support_is_saturated() {
    for rs in all_up_to_rank(4) {
        let rs = Arc::new(rs);
        for lam in dominant_weights_up_to(&rs, 2) {
            if weyl_dim(&rs, &lam).unwrap() > 2000 {
                continue;
            }
            let ws = WeightSystem::new(rs.clone(), &lam).unwrap();
            let x = simple_coords(&rs, &rs.to_ambient(&lam));
            let bounds: Vec<i32> = x.iter().map(|c| c.floor().to_integer().to_i32().unwrap()).collect();
            let mut brute: HashSet<Vec<i32>> = HashSet::new();
            let mut c = vec![0i32; rs.rank];
            loop {
                let mu: Vec<i32> = (0..rs.rank)
                    .map(|j| lam[j] - (0..rs.rank).map(|i| c[i] * rs.cartan[i][j]).sum::<i32>())
                    .collect();
                if mu.iter().all(|&m| m >= 0) {
                    brute.insert(mu);
                }
                let mut k = 0;
                while k < rs.rank && c[k] == bounds[k] {
                    c[k] = 0;
                    k += 1;
                }
                if k == rs.rank {
                    break;
                }
                c[k] += 1;
            }
            let got: HashSet<Vec<i32>> = ws.weights.iter().filter(|w| w.iter().all(|&m| m >= 0)).map(|w| w.to_vec()).collect();
            assert_eq!(got, brute, "{} {:?}", rs.name(), lam);
        }
    }
}

#[test]
fn weight_system_examples() {
    let a1 = Arc::new(RootSystem::build(Family::A, 1).unwrap());
    let ws = WeightSystem::new(a1, &[2]).unwrap();
    let mut w: Vec<i32> = ws.weights.iter().map(|x| x[0]).collect();
    w.sort();
    assert_eq!(w, vec![-2, 0, 2]);
    assert!(ws.multiplicities.iter().all(|&m| m == 1));
    let b3 = Arc::new(RootSystem::build(Family::B, 3).unwrap());
    let spin = WeightSystem::new(b3, &[0, 0, 1]).unwrap();
    let h = rat(1, 2);
    let got: HashSet<WeightVector> = spin.weights_ambient().into_iter().collect();
    let mut want = HashSet::new();
    for s in 0..8 {
        let c: Vec<Rat> = (0..3).map(|i| if s >> i & 1 == 1 { -h.clone() } else { h.clone() }).collect();
        want.insert(WeightVector::new(c));
    }
    assert_eq!(got, want);
    let g2 = Arc::new(RootSystem::build(Family::G, 2).unwrap());
    assert_eq!(WeightSystem::new(g2, &[2, 0]).unwrap().dim(), 27);
}

/// Every catalog pair of rank ≤ 6 and dimension ≤ 500.
#[test]
fn weight_systems_up_to_rank_6() {
    for rs in all_up_to_rank(6) {
        let rs = Arc::new(rs);
        let max_label = if rs.rank <= 2 { 6 } else if rs.rank <= 4 { 3 } else { 2 };
        for lam in dominant_weights_up_to(&rs, max_label) {
            let d = weyl_dim(&rs, &lam).unwrap();
            if d > 500 {
                continue;
            }
            let ws = WeightSystem::new(rs.clone(), &lam).unwrap();
            let name = format!("{} {:?}", rs.name(), lam);
            assert_eq!(ws.dim() as u128, d, "{name}");
            assert_eq!(ws.multiplicity(&lam), 1, "{name}");
            for w in &ws.weights {
                for i in 0..rs.rank {
                    let r = rs.simple_reflect_lat(w, i);
                    assert!(ws.contains(&r), "{name}");
                    assert_eq!(ws.multiplicity(&r), ws.multiplicity(w), "{name}");
                }
            }
            if is_self_dual(&rs, &lam).unwrap() {
                for w in &ws.weights {
                    let neg: Vec<i32> = w.iter().map(|x| -x).collect();
                    assert!(ws.contains(&neg), "{name}");
                }
            }
        }
    }
}

fn system() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=8).prop_map(|n| (Family::A, n)),
        (2usize..=8).prop_map(|n| (Family::B, n)),
        (2usize..=8).prop_map(|n| (Family::C, n)),
        (3usize..=8).prop_map(|n| (Family::D, n)),
        (6usize..=8).prop_map(|n| (Family::E, n)),
        Just((Family::F, 4)),
        Just((Family::G, 2)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutive_isometries((f, n) in system(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), coeffs in prop::collection::vec(-3i64..=3, 8)) {
        let rs = RootSystem::build(f, n).unwrap();
        let a = &rs.roots[i.index(rs.num_roots())];
        let b = &rs.roots[j.index(rs.num_roots())];
        let sb = rs.reflect(b, a).unwrap();
        prop_assert!(rs.is_root(&sb));
        prop_assert_eq!(sb.dot(&sb), b.dot(b));
        prop_assert_eq!(rs.reflect(&sb, a).unwrap(), b.clone());
        // an arbitrary weight lattice element
        let lam: Vec<i32> = coeffs.iter().take(n).map(|&c| c as i32).collect();
        let v = rs.to_ambient(&lam);
        let sv = rs.reflect(&v, a).unwrap();
        prop_assert_eq!(sv.dot(&sv), v.dot(&v));
        prop_assert_eq!(sv.dot(&sb), v.dot(b));
        prop_assert_eq!(rs.to_lat(&sv).unwrap().to_vec(), rs.reflect_lat(&lam, rs.root_lookup_ambient(a).unwrap()).to_vec());
    }

    #[test]
    fn root_strings_have_no_gaps((f, n) in system(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let rs = RootSystem::build(f, n).unwrap();
        let a = &rs.roots[i.index(rs.num_roots())];
        let b = &rs.roots[j.index(rs.num_roots())];
        prop_assume!(!a.proportional(b));
        let (p, q) = rs.root_string(b, a).unwrap();
        prop_assert!(p + q <= 3);
        prop_assert_eq!(rint(p as i64) - rint(q as i64), rs.cartan_int(b, a).unwrap());
        for k in -(p as i64)..=(q as i64) {
            prop_assert!(rs.is_root(&b.add(&a.scale(&rint(k)))));
        }
    }

    #[test]
    fn dominant_representative_is_in_orbit((f, n) in prop_oneof![Just((Family::A, 3)), Just((Family::B, 3)), Just((Family::C, 3)), Just((Family::G, 2)), Just((Family::D, 4))], coeffs in prop::collection::vec(-3i32..=3, 4)) {
        let rs = RootSystem::build(f, n).unwrap();
        let lam: Vec<i32> = coeffs.into_iter().take(n).collect();
        let v = rs.to_ambient(&lam);
        let d = rs.dominant_rep(&v).unwrap();
        prop_assert!(rs.simple_roots.iter().all(|a| !d.dot(a).is_negative()));
        let orbit = rs.weyl_orbit(&v).unwrap();
        prop_assert!(orbit.contains(&d));
        prop_assert_eq!(rs.to_lat(&d).unwrap().to_vec(), rs.dominant_lat(&lam).to_vec());
        let md = rs.minus_w0(&v).unwrap();
        prop_assert!(rs.weyl_orbit(&v.neg()).unwrap().contains(&md));
    }
}
