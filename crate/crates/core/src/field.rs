//! Exact scalars: rationals and Gaussian rationals, plus reduction modulo
//! word-sized primes that contain a square root of -1.

use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Build a rational from a numerator/denominator pair of machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A prime p = 1 (mod 4) together with a fixed square root of -1 modulo p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Modulus {
    pub p: u64,
    pub i: u64,
}

impl Modulus {
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }
    /// The same prime with the other square root of -1; reductions through
    /// both embeddings determine a Gaussian rational.
    pub fn conjugate(&self) -> Modulus {
        Modulus { p: self.p, i: self.p - self.i }
    }
    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("residue fits in u64")
    }
    pub fn reduce_rat(&self, r: &Rat) -> Option<u64> {
        let d = self.reduce_int(r.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(self.reduce_int(r.numer()), self.inv(d)))
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62 that are 1 mod 4, each with a square root of -1.
pub fn moduli() -> &'static [Modulus] {
    static CELL: OnceLock<Vec<Modulus>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        let mut n: u64 = (1u64 << 62) - 3;
        while out.len() < 24 {
            if n % 4 == 1 && is_prime_u64(n) {
                let mut g = 2u64;
                while powmod(g, (n - 1) / 2, n) != n - 1 {
                    g += 1;
                }
                let i = powmod(g, (n - 1) / 4, n);
                out.push(Modulus { p: n, i });
            }
            n -= 4;
        }
        out
    })
}

/// Exact scalar field used by the linear algebra layer.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn from_gauss(g: &Gauss) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn recip(&self) -> Self;
    fn conj(&self) -> Self;
    fn is_real(&self) -> bool;
    fn real_part(&self) -> Rat;
    fn imag_part(&self) -> Rat;
    fn to_gauss(&self) -> Gauss;
    fn reduce(&self, m: &Modulus) -> Option<u64>;

    fn div(&self, o: &Self) -> Self {
        self.times(&o.recip())
    }
    /// self -= a * b
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.minus(&a.times(b));
    }
    /// self += a * b
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.plus(&a.times(b));
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        rint(v)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn from_gauss(g: &Gauss) -> Option<Self> {
        if Zero::is_zero(&g.im) {
            Some(g.re.clone())
        } else {
            None
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        BigRational::recip(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn is_real(&self) -> bool {
        true
    }
    fn real_part(&self) -> Rat {
        self.clone()
    }
    fn imag_part(&self) -> Rat {
        Zero::zero()
    }
    fn to_gauss(&self) -> Gauss {
        Gauss::real(self.clone())
    }
    fn reduce(&self, m: &Modulus) -> Option<u64> {
        m.reduce_rat(self)
    }
}

/// Gaussian rational re + i*im.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }
    pub fn real(re: Rat) -> Self {
        Gauss { re, im: Zero::zero() }
    }
    pub fn i() -> Self {
        Gauss { re: Zero::zero(), im: One::one() }
    }
    pub fn int(re: i64, im: i64) -> Self {
        Gauss { re: rint(re), im: rint(im) }
    }
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Scalar for Gauss {
    fn zero() -> Self {
        Gauss::default()
    }
    fn one() -> Self {
        Gauss::real(One::one())
    }
    fn from_i64(v: i64) -> Self {
        Gauss::real(rint(v))
    }
    fn from_rat(r: &Rat) -> Self {
        Gauss::real(r.clone())
    }
    fn from_gauss(g: &Gauss) -> Option<Self> {
        Some(g.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn is_one(&self) -> bool {
        One::is_one(&self.re) && Zero::is_zero(&self.im)
    }
    fn plus(&self, o: &Self) -> Self {
        Gauss { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn minus(&self, o: &Self) -> Self {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn times(&self, o: &Self) -> Self {
        if Zero::is_zero(&self.im) && Zero::is_zero(&o.im) {
            return Gauss::real(&self.re * &o.re);
        }
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn negate(&self) -> Self {
        Gauss { re: -&self.re, im: -&self.im }
    }
    fn recip(&self) -> Self {
        assert!(!Scalar::is_zero(self), "inverse of zero");
        if Zero::is_zero(&self.im) {
            return Gauss::real(BigRational::recip(&self.re));
        }
        let n = self.norm();
        Gauss { re: &self.re / &n, im: -&self.im / &n }
    }
    fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -&self.im }
    }
    fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
    fn real_part(&self) -> Rat {
        self.re.clone()
    }
    fn imag_part(&self) -> Rat {
        self.im.clone()
    }
    fn to_gauss(&self) -> Gauss {
        self.clone()
    }
    fn reduce(&self, m: &Modulus) -> Option<u64> {
        let a = m.reduce_rat(&self.re)?;
        if Zero::is_zero(&self.im) {
            return Some(a);
        }
        let b = m.reduce_rat(&self.im)?;
        Some(m.add(a, m.mul(b, m.i)))
    }
}

/// Rational number with |num|, |den| <= sqrt(m/2) congruent to `u` mod `m`.
pub fn rational_reconstruct(u: &BigInt, m: &BigInt) -> Option<Rat> {
    let u = u.mod_floor(m);
    if Zero::is_zero(&u) {
        return Some(Zero::zero());
    }
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if Zero::is_zero(&t1) || t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rat::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_have_square_roots_of_minus_one() {
        for m in moduli().iter().take(4) {
            assert_eq!(m.p % 4, 1);
            assert_eq!(m.mul(m.i, m.i), m.p - 1);
        }
    }

    #[test]
    fn gauss_arithmetic() {
        let a = Gauss::int(1, 2);
        let b = Gauss::int(3, -1);
        assert_eq!(a.times(&b), Gauss::int(5, 5));
        assert_eq!(a.times(&a.recip()), Gauss::one());
        assert_eq!(a.conj(), Gauss::int(1, -2));
    }

    #[test]
    fn reconstruction_round_trip() {
        let m = BigInt::from(moduli()[0].p) * BigInt::from(moduli()[1].p);
        for (n, d) in [(3i64, 7i64), (-22, 5), (0, 1), (123456789, 1000003)] {
            let r = rat(n, d);
            let md = moduli()[0];
            let u0 = md.reduce_rat(&r).unwrap();
            let md1 = moduli()[1];
            let u1 = md1.reduce_rat(&r).unwrap();
            let p0 = BigInt::from(md.p);
            let p1 = BigInt::from(md1.p);
            // crt
            let inv = BigInt::from(md1.inv(md1.reduce_int(&p0)));
            let x = BigInt::from(u0)
                + &p0 * ((BigInt::from(u1) - BigInt::from(u0)) * inv).mod_floor(&p1);
            assert_eq!(rational_reconstruct(&x, &m), Some(r));
        }
    }
}
