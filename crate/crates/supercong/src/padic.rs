//! Arithmetic in Z/p^k with explicit p-adic valuation tracking.
//!
//! Elements are stored as `u * p^v` with `u` a unit reduced modulo
//! `p^(k-v)`; the zero element carries the distinguished top valuation
//! (meaning "valuation >= k"). All operations are pure; contexts are
//! immutable plain data.

use crate::error::{Error, Result};
use std::fmt;

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a as u128, d as u128, n as u128);
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n as u128);
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^127 so the sum cannot overflow
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

pub(crate) fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        a * b % m
    } else {
        // double-and-add for moduli past 64 bits
        let (mut a, mut b) = (a % m, b % m);
        let mut acc = 0u128;
        while b > 0 {
            if b & 1 == 1 {
                acc = add_mod(acc, a, m);
            }
            a = add_mod(a, a, m);
            b >>= 1;
        }
        acc
    }
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u128, m: u128) -> Option<u128> {
    // m < 2^127, all intermediates fit in i128
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        None
    } else {
        Some(t0.rem_euclid(m as i128) as u128)
    }
}

/// p-adic valuation capped at the working precision; `Top` means ">= k".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Top,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Top => write!(f, "top"),
        }
    }
}

/// A fixed pair (odd prime p, precision k) with modulus p^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdicContext {
    p: u64,
    k: u32,
    modulus: u128,
}

impl PAdicContext {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenPrimeUnsupported);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 1 {
            return Err(Error::OutOfRange("k must be >= 1".into()));
        }
        let mut modulus: u128 = 1;
        for _ in 0..k {
            modulus = modulus
                .checked_mul(p as u128)
                .filter(|&m| m < 1u128 << 127)
                .ok_or(Error::PrecisionOverflow)?;
        }
        Ok(PAdicContext { p, k, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    pub fn zero(&self) -> PAdic {
        PAdic {
            ctx: *self,
            v: self.k,
            u: 0,
        }
    }

    pub fn one(&self) -> PAdic {
        PAdic {
            ctx: *self,
            v: 0,
            u: 1,
        }
    }

    /// Canonical element with the given residue in [0, p^k).
    pub fn from_residue(&self, c: u128) -> PAdic {
        let c = c % self.modulus;
        if c == 0 {
            return self.zero();
        }
        let mut v = 0u32;
        let mut u = c;
        while u % self.p as u128 == 0 {
            u /= self.p as u128;
            v += 1;
        }
        PAdic { ctx: *self, v, u }
    }

    pub fn from_integer(&self, a: i128) -> PAdic {
        self.from_residue(a.rem_euclid(self.modulus as i128) as u128)
    }

    /// Embeds a/b for p-free b, i.e. the canonical element equal to a*b^{-1}.
    pub fn from_rational(&self, a: i128, b: i128) -> Result<PAdic> {
        if b == 0 || b % self.p as i128 == 0 {
            return Err(Error::DenominatorNotUnit);
        }
        let am = a.rem_euclid(self.modulus as i128) as u128;
        let bm = b.rem_euclid(self.modulus as i128) as u128;
        let binv = inv_mod(bm, self.modulus).ok_or(Error::DenominatorNotUnit)?;
        Ok(self.from_residue(mul_mod(am, binv, self.modulus)))
    }

    /// The last nonnegative residue <a/b>_p in [0, p-1].
    pub fn residue(&self, a: i128, b: i128) -> Result<Residue> {
        if b == 0 || b % self.p as i128 == 0 {
            return Err(Error::DenominatorNotUnit);
        }
        let p = self.p as u128;
        let am = a.rem_euclid(self.p as i128) as u128;
        let bm = b.rem_euclid(self.p as i128) as u128;
        let binv = inv_mod(bm, p).ok_or(Error::DenominatorNotUnit)?;
        Ok(Residue {
            value: mul_mod(am, binv, p) as u64,
        })
    }
}

/// Least nonnegative residue modulo p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    pub value: u64,
}

/// A valuation-tracked element u * p^v of Z/p^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdic {
    ctx: PAdicContext,
    v: u32,
    u: u128,
}

impl PAdic {
    pub fn context(&self) -> PAdicContext {
        self.ctx
    }

    pub fn valuation(&self) -> Valuation {
        if self.u == 0 {
            Valuation::Top
        } else {
            Valuation::Finite(self.v)
        }
    }

    /// Unit part in [0, p^(k-v)); 0 for the zero element.
    pub fn unit(&self) -> u128 {
        self.u
    }

    pub fn is_zero(&self) -> bool {
        self.u == 0
    }

    pub fn is_unit(&self) -> bool {
        self.u != 0 && self.v == 0
    }

    /// Canonical residue in [0, p^k).
    pub fn residue(&self) -> u128 {
        let mut r = self.u;
        for _ in 0..self.v {
            r *= self.ctx.p as u128;
        }
        r % self.ctx.modulus
    }

    fn same_ctx(&self, other: &PAdic) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &PAdic) -> Result<PAdic> {
        self.same_ctx(other)?;
        Ok(self
            .ctx
            .from_residue(add_mod(self.residue(), other.residue(), self.ctx.modulus)))
    }

    pub fn try_sub(&self, other: &PAdic) -> Result<PAdic> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &PAdic) -> Result<PAdic> {
        self.same_ctx(other)?;
        Ok(self
            .ctx
            .from_residue(mul_mod(self.residue(), other.residue(), self.ctx.modulus)))
    }

    pub fn neg(&self) -> PAdic {
        if self.u == 0 {
            *self
        } else {
            self.ctx
                .from_residue(self.ctx.modulus - self.residue())
        }
    }

    pub fn inv(&self) -> Result<PAdic> {
        if !self.is_unit() {
            return Err(Error::NonUnit);
        }
        let u = inv_mod(self.u, self.ctx.modulus).ok_or(Error::NonUnit)?;
        Ok(PAdic {
            ctx: self.ctx,
            v: 0,
            u,
        })
    }

    pub fn pow(&self, exp: u64) -> PAdic {
        self.ctx
            .from_residue(pow_mod(self.residue(), exp as u128, self.ctx.modulus))
    }
}

impl std::ops::Add for PAdic {
    type Output = PAdic;
    fn add(self, rhs: PAdic) -> PAdic {
        self.try_add(&rhs).expect("context mismatch")
    }
}

impl std::ops::Sub for PAdic {
    type Output = PAdic;
    fn sub(self, rhs: PAdic) -> PAdic {
        self.try_sub(&rhs).expect("context mismatch")
    }
}

impl std::ops::Mul for PAdic {
    type Output = PAdic;
    fn mul(self, rhs: PAdic) -> PAdic {
        self.try_mul(&rhs).expect("context mismatch")
    }
}

impl std::ops::Neg for PAdic {
    type Output = PAdic;
    fn neg(self) -> PAdic {
        PAdic::neg(&self)
    }
}

impl fmt::Display for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue())
    }
}

/// v(x - y); `Top` exactly when x = y in Z/p^k.
pub fn valuation_of_difference(x: &PAdic, y: &PAdic) -> Result<Valuation> {
    Ok(x.try_sub(y)?.valuation())
}
