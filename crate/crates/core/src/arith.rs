//! Coefficient rings shared by every module.
//!
//! Structure constants live in the Eisenstein integers `Z[ω]` with
//! `ω² = −1 − ω`. Inner and order-two gradings only ever produce rational
//! integers; order-three eigenbases need the cube root of unity. Modular
//! work happens in `F_p` with `p = 2^61 − 1`, where `p ≡ 1 (mod 3)` so `ω`
//! has an image. Exact work over `Q(ω)` uses big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::OnceLock;

/// An Eisenstein integer `a + bω`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eis {
    pub a: i64,
    pub b: i64,
}

impl Eis {
    pub const ZERO: Eis = Eis { a: 0, b: 0 };
    pub const ONE: Eis = Eis { a: 1, b: 0 };
    pub const OMEGA: Eis = Eis { a: 0, b: 1 };

    pub const fn int(a: i64) -> Eis {
        Eis { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Eis {
        match k.rem_euclid(3) {
            0 => Eis::ONE,
            1 => Eis::OMEGA,
            _ => Eis { a: -1, b: -1 },
        }
    }

    /// Returns the rational integer value when `b = 0`.
    pub fn as_int(self) -> Option<i64> {
        (self.b == 0).then_some(self.a)
    }

    /// Exact division by a nonzero rational integer, if it divides.
    pub fn div_exact(self, n: i64) -> Option<Eis> {
        (self.a % n == 0 && self.b % n == 0).then(|| Eis { a: self.a / n, b: self.b / n })
    }

    pub fn to_fp(self) -> Fp {
        Fp::from_i64(self.a) + Fp::from_i64(self.b) * Fp::omega()
    }

    pub fn to_qw(self) -> Qw {
        Qw::new(
            BigRational::from_integer(BigInt::from(self.a)),
            BigRational::from_integer(BigInt::from(self.b)),
        )
    }
}

impl Add for Eis {
    type Output = Eis;
    fn add(self, o: Eis) -> Eis {
        Eis { a: self.a + o.a, b: self.b + o.b }
    }
}

impl AddAssign for Eis {
    fn add_assign(&mut self, o: Eis) {
        self.a += o.a;
        self.b += o.b;
    }
}

impl Sub for Eis {
    type Output = Eis;
    fn sub(self, o: Eis) -> Eis {
        Eis { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Eis {
    type Output = Eis;
    fn neg(self) -> Eis {
        Eis { a: -self.a, b: -self.b }
    }
}

impl Mul for Eis {
    type Output = Eis;
    fn mul(self, o: Eis) -> Eis {
        let bd = self.b * o.b;
        Eis { a: self.a * o.a - bd, b: self.a * o.b + self.b * o.a - bd }
    }
}

impl fmt::Display for Eis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}w"),
            (a, b) if b < 0 => write!(f, "{a}{b}w"),
            (a, b) => write!(f, "{a}+{b}w"),
        }
    }
}

/// The Mersenne prime `2^61 − 1` used for all modular rank computations.
pub const P: u64 = (1u64 << 61) - 1;

/// An element of `F_p`, `p = 2^61 − 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Fp(pub u64);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn new(x: u64) -> Fp {
        Fp(x % P)
    }

    pub fn from_i64(x: i64) -> Fp {
        Fp(x.rem_euclid(P as i64) as u64)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Fp {
        assert!(!self.is_zero(), "inverse of zero in F_p");
        self.pow(P - 2)
    }

    /// A fixed primitive cube root of unity in `F_p`.
    pub fn omega() -> Fp {
        static W: OnceLock<Fp> = OnceLock::new();
        *W.get_or_init(|| {
            (2u64..)
                .map(|g| Fp(g).pow((P - 1) / 3))
                .find(|w| *w != Fp::ONE)
                .expect("F_p has a primitive cube root of unity")
        })
    }

    pub fn random<R: Rng>(rng: &mut R) -> Fp {
        Fp(rng.gen_range(0..P))
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, o: Fp) {
        *self = *self + o;
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        let prod = self.0 as u128 * o.0 as u128;
        let lo = (prod as u64) & P;
        let hi = (prod >> 61) as u64;
        let s = lo + hi;
        Fp(if s >= P { s - P } else { s })
    }
}

/// Rank of a dense matrix over `F_p`; the input is consumed as scratch.
pub fn rank_fp(mut rows: Vec<Vec<Fp>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].inv();
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] * inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    row[c] = row[c] - f * pivot_row[c];
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Reduced row echelon form over `F_p`; returns pivot columns.
pub fn rref_fp(rows: &mut Vec<Vec<Fp>>) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    if nrows == 0 {
        return pivots;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].inv();
        for c in col..ncols {
            rows[rank][c] = rows[rank][c] * inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for c in col..ncols {
                row[c] = row[c] - f * pivot_row[c];
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Basis of the right kernel `{v : M v = 0}` of a dense matrix over `F_p`.
pub fn kernel_fp(rows: Vec<Vec<Fp>>, ncols: usize) -> Vec<Vec<Fp>> {
    let mut rows = rows;
    let pivots = rref_fp(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Fp::ZERO; ncols];
            v[f] = Fp::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][f];
            }
            v
        })
        .collect()
}

/// An element `a + bω` of the cyclotomic field `Q(ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qw {
    pub a: BigRational,
    pub b: BigRational,
}

impl Qw {
    pub fn new(a: BigRational, b: BigRational) -> Qw {
        Qw { a, b }
    }

    pub fn zero() -> Qw {
        Qw::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Qw {
        Qw::new(BigRational::one(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Qw) -> Qw {
        Qw::new(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &Qw) -> Qw {
        Qw::new(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn mul(&self, o: &Qw) -> Qw {
        let bd = &self.b * &o.b;
        Qw::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - &bd)
    }

    /// Inverse via the norm `a² − ab + b²`.
    pub fn inv(&self) -> Qw {
        let norm = &self.a * &self.a - &self.a * &self.b + &self.b * &self.b;
        assert!(!norm.is_zero(), "inverse of zero in Q(w)");
        Qw::new((&self.a - &self.b) / &norm, -(&self.b) / &norm)
    }

    /// Least common denominator of both rational components.
    pub fn denominator_lcm(&self) -> BigInt {
        num_integer_lcm(self.a.denom(), self.b.denom())
    }

    /// Converts to an Eisenstein integer when both parts are small integers.
    pub fn to_eis(&self) -> Option<Eis> {
        if !self.a.is_integer() || !self.b.is_integer() {
            return None;
        }
        let conv = |x: &BigRational| -> Option<i64> {
            let n = x.to_integer();
            if n.abs() > BigInt::from(i64::MAX / 4) {
                None
            } else {
                i64::try_from(n).ok()
            }
        };
        Some(Eis { a: conv(&self.a)?, b: conv(&self.b)? })
    }
}

fn num_integer_lcm(x: &BigInt, y: &BigInt) -> BigInt {
    use num_integer::Integer;
    x.lcm(y)
}

/// Rank of a dense matrix over `Q(ω)` by exact Gaussian elimination.
pub fn rank_qw(mut rows: Vec<Vec<Qw>>) -> usize {
    rref_qw(&mut rows).len()
}

/// Reduced row echelon form over `Q(ω)`; returns pivot columns.
pub fn rref_qw(rows: &mut Vec<Vec<Qw>>) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    if nrows == 0 {
        return pivots;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].inv();
        for c in col..ncols {
            if !rows[rank][c].is_zero() {
                rows[rank][c] = rows[rank][c].mul(&inv);
            }
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    row[c] = row[c].sub(&f.mul(&pivot_row[c]));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Dense matrix product over `Q(ω)`.
pub fn matmul_qw(x: &[Vec<Qw>], y: &[Vec<Qw>]) -> Vec<Vec<Qw>> {
    let n = x.len();
    let k = y.len();
    let cols = if k == 0 { 0 } else { y[0].len() };
    let mut out = vec![vec![Qw::zero(); cols]; n];
    for i in 0..n {
        for l in 0..k {
            if x[i][l].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !y[l][j].is_zero() {
                    out[i][j] = out[i][j].add(&x[i][l].mul(&y[l][j]));
                }
            }
        }
    }
    out
}

/// Deterministic generator for a named check: the top-level seed is split by
/// hashing the check id into the stream number, so independent checks never
/// share random draws.
pub fn rng_for(seed: u64, check_id: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in check_id.bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(h);
    rng
}

/// Greatest common divisor of a list of nonnegative integers (0 for empty).
pub fn gcd_all(xs: &[i64]) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    xs.iter().fold(0, |g, &x| gcd(g, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = Fp::omega();
        assert_ne!(w, Fp::ONE);
        assert_eq!(w * w * w, Fp::ONE);
        assert_eq!(w * w + w + Fp::ONE, Fp::ZERO);
    }

    #[test]
    fn eisenstein_multiplication_matches_modular_image() {
        let x = Eis { a: 3, b: -2 };
        let y = Eis { a: -1, b: 5 };
        assert_eq!((x * y).to_fp(), x.to_fp() * y.to_fp());
        assert_eq!(Eis::OMEGA * Eis::OMEGA * Eis::OMEGA, Eis::ONE);
    }

    #[test]
    fn qw_inverse() {
        let x = Eis { a: 2, b: 7 }.to_qw();
        assert_eq!(x.mul(&x.inv()), Qw::one());
    }

    #[test]
    fn modular_rank_small() {
        let m = vec![
            vec![Fp(1), Fp(2), Fp(3)],
            vec![Fp(2), Fp(4), Fp(6)],
            vec![Fp(0), Fp(1), Fp(1)],
        ];
        assert_eq!(rank_fp(m), 2);
    }

    #[test]
    fn mersenne_reduction() {
        let a = Fp(P - 1);
        assert_eq!(a * a, Fp::ONE);
        assert_eq!(Fp::from_i64(-1), a);
    }
}
