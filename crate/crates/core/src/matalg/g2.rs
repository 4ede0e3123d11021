//! G2 as the derivation algebra of the imaginary octonions, acting on R^7.

use super::catalog::so_basis;
use super::{FieldTag, FormKind, GMat, MatError, MatrixRep, SpanCoords};
use crate::field::{rint, Gauss, Rat};
use crate::linalg::{LinearSystem, Mat};
use num_integer::Integer;
use num_traits::{One, Signed};

/// Cyclic triples (i, j, k) with e_i e_j = e_k, 1-based.
pub const FANO_TRIPLES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]];

/// Cross product table on 0-based indices: `cross[a][b] = Some((sign, c))`.
pub fn cross_table() -> [[Option<(i64, usize)>; 7]; 7] {
    let mut t = [[None; 7]; 7];
    for tr in FANO_TRIPLES {
        let [i, j, k] = tr.map(|x| x - 1);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            t[a][b] = Some((1, c));
            t[b][a] = Some((-1, c));
        }
    }
    t
}

fn cross(t: &[[Option<(i64, usize)>; 7]; 7], x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    let mut out = vec![rint(0); 7];
    for a in 0..7 {
        for b in 0..7 {
            if let Some((s, c)) = t[a][b] {
                out[c] += rint(s) * &x[a] * &y[b];
            }
        }
    }
    out
}

/// Derivation equations D(x × y) = Dx × y + x × Dy on matrices `gens`.
fn derivation_system(gens: &[Mat<Rat>]) -> LinearSystem<Rat> {
    let t = cross_table();
    let e = |a: usize| -> Vec<Rat> { (0..7).map(|i| if i == a { rint(1) } else { rint(0) }).collect() };
    let mut sys = LinearSystem::new(gens.len());
    for a in 0..7 {
        for b in a + 1..7 {
            let ab = cross(&t, &e(a), &e(b));
            // column s: contribution of generator s
            let cols: Vec<Vec<Rat>> = gens
                .iter()
                .map(|g| {
                    let lhs = g.apply(&ab);
                    let r1 = cross(&t, &g.apply(&e(a)), &e(b));
                    let r2 = cross(&t, &e(a), &g.apply(&e(b)));
                    (0..7).map(|m| lhs[m].clone() - &r1[m] - &r2[m]).collect()
                })
                .collect();
            for m in 0..7 {
                let row: Vec<Rat> = cols.iter().map(|c| c[m].clone()).collect();
                sys.push_dense(&row);
            }
        }
    }
    sys
}

fn integral(v: &[Rat]) -> Vec<Rat> {
    let l = v.iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<Rat> = v.iter().map(|x| x * Rat::from_integer(l.clone())).collect();
    let g = scaled.iter().fold(num_bigint::BigInt::from(0), |acc, x| acc.gcd(&x.numer().abs()));
    scaled.iter().map(|x| x / Rat::from_integer(g.clone())).collect()
}

fn combine(gens: &[Mat<Rat>], c: &[Rat]) -> Mat<Rat> {
    let mut m = Mat::zeros(7, 7);
    for (g, x) in gens.iter().zip(c) {
        m = m.add(&g.scale(x));
    }
    m
}

/// G2 ⊂ so(7) with integer basis matrices and the torus inside the
/// rotations of the planes (2,3), (4,5), (7,6).
pub fn g2_7() -> Result<MatrixRep, MatError> {
    let so7: Vec<Mat<Rat>> = so_basis(7).iter().map(|m| m.convert().expect("real")).collect();
    let ker = derivation_system(&so7).kernel();
    if ker.len() != 14 {
        return Err(MatError::NotClosed);
    }
    let basis: Vec<GMat> = ker.iter().map(|c| combine(&so7, &integral(c)).to_gauss()).collect();
    let rot = |j: usize, k: usize| -> Mat<Rat> {
        let mut m = Mat::zeros(7, 7);
        m[(j - 1, k - 1)] = rint(1);
        m[(k - 1, j - 1)] = rint(-1);
        m
    };
    let planes = [rot(2, 3), rot(4, 5), rot(7, 6)];
    let tker = derivation_system(&planes).kernel();
    if tker.len() != 2 {
        return Err(MatError::NotClosed);
    }
    let sp = SpanCoords::new(&basis).ok_or(MatError::Dependent)?;
    let torus: Option<Vec<Vec<Gauss>>> = tker.iter().map(|c| sp.coords(&combine(&planes, &integral(c)).to_gauss())).collect();
    let torus = torus.ok_or(MatError::NotClosed)?;
    Ok(MatrixRep::new("g2_7", FieldTag::Real, 7, basis).with_form(FormKind::Symmetric, Mat::identity(7)).with_torus(torus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;

    #[test]
    fn cross_table_is_alternating() {
        let t = cross_table();
        for a in 0..7 {
            assert!(t[a][a].is_none());
            for b in 0..7 {
                if a != b {
                    let (s, c) = t[a][b].unwrap();
                    assert_eq!(t[b][a], Some((-s, c)));
                }
            }
        }
    }

    #[test]
    fn g2_basis_is_integral() {
        let g = g2_7().unwrap();
        assert_eq!(g.dim_g(), 14);
        assert!(g.basis.iter().all(|m| m.data.iter().all(|x| x.is_real() && x.real_part().is_integer())));
    }
}
