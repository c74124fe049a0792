//! Independent exact-rational oracles.
//!
//! Everything here recomputes values over Q with direct (non-incremental)
//! products, so agreement with the modular fast paths is meaningful
//! evidence rather than the same code run twice.

use crate::error::{Error, Result};
use crate::hyper::pochhammer;
use crate::padic::{PAdic, PAdicContext};
use crate::ring::RationalRing;
use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// sum_{k=0}^{upper} (6k+r) (r/3)_k^6 / (1)_k^6, each term from scratch.
pub fn s6_rational(r: i64, upper: i64) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 0..=upper.max(0) as u64 {
        let mut num = rat(6 * k as i64 + r, 1);
        let mut den = BigRational::one();
        for j in 0..k as i64 {
            num *= rat(r + 3 * j, 3).pow(6);
            den *= rat(j + 1, 1).pow(6);
        }
        sum += num / den;
    }
    sum
}

/// sum_{k=0}^{upper} (10k+r) (r/5)_k^5 / (1)_k^5, each term from scratch.
pub fn s10_rational(r: i64, upper: i64) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 0..=upper.max(0) as u64 {
        let mut num = rat(10 * k as i64 + r, 1);
        let mut den = BigRational::one();
        for j in 0..k as i64 {
            num *= rat(r + 5 * j, 5).pow(5);
            den *= rat(j + 1, 1).pow(5);
        }
        sum += num / den;
    }
    sum
}

/// sum_{k=0}^{1-r} (r-1)_k (r/3)_k^3 / ((1)_k (2r/3)_k^3), from scratch.
pub fn cubic_rhs_rational(r: i64) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 0..=(1 - r) as u64 {
        let mut num = BigRational::one();
        let mut den = BigRational::one();
        for j in 0..k as i64 {
            num *= rat(r - 1 + j, 1) * rat(r + 3 * j, 3).pow(3);
            den *= rat(j + 1, 1) * rat(2 * r + 3 * j, 3).pow(3);
        }
        sum += num / den;
    }
    sum
}

/// sum_{k=0}^{(1-r)/2} ((r-1)/2)_k (r/5)_k^3 / ((1)_k (2r/5)_k^2 (1/2+3r/10)_k).
pub fn quintic_rhs_rational(r: i64) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 0..=((1 - r) / 2) as u64 {
        let mut num = BigRational::one();
        let mut den = BigRational::one();
        for j in 0..k as i64 {
            num *= rat(r - 1 + 2 * j, 2) * rat(r + 5 * j, 5).pow(3);
            den *= rat(j + 1, 1) * rat(2 * r + 5 * j, 5).pow(2) * rat(5 + 3 * r + 10 * j, 10);
        }
        sum += num / den;
    }
    sum
}

fn reduce_mod(modulus: u128, q: &BigRational) -> Result<u128> {
    let m = BigInt::from(modulus);
    let num = q.numer().mod_floor(&m);
    let den = q.denom().mod_floor(&m);
    let gcd = den.extended_gcd(&m);
    if !gcd.gcd.is_one() {
        return Err(Error::DenominatorNotUnit);
    }
    let inv = gcd.x.mod_floor(&m);
    let (_, digits) = (num * inv).mod_floor(&m).to_u64_digits();
    let mut out: u128 = 0;
    for &d in digits.iter().rev() {
        out = (out << 64) | d as u128;
    }
    Ok(out)
}

/// Reduce an exact rational into Z/p^k; fails when p divides the denominator.
pub fn reduce(ctx: PAdicContext, q: &BigRational) -> Result<PAdic> {
    Ok(ctx.from_residue(reduce_mod(ctx.modulus(), q)?))
}

/// One instance of the terminating 7F6 -> 4F3 transformation.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityInstance {
    pub n: u32,
    pub m: u32,
    pub t: BigRational,
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

fn poch_checked(x: &BigRational, k: u64, side: &str) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for j in 0..k as i64 {
        let f = x + rat(j, 1);
        if f.is_zero() {
            return Err(Error::PoleEncountered(side.to_string(), j as u32));
        }
        acc *= f;
    }
    Ok(acc)
}

/// The well-poised 7F6 side, summed to its natural termination point k = n.
pub fn transformation_lhs(inst: &IdentityInstance) -> Result<BigRational> {
    let IdentityInstance { n, m, t, a, b, c } = inst;
    let nums = [
        t.clone(),
        rat(1, 1) + t / rat(2, 1),
        rat(-(*n as i64), 1),
        t - a,
        t - b,
        t - c,
        rat(1, 1) - t - rat(*m as i64, 1) + rat(*n as i64, 1) + a + b + c,
    ];
    let dens = [
        t / rat(2, 1),
        rat(1, 1) + t + rat(*n as i64, 1),
        rat(1, 1) + a,
        rat(1, 1) + b,
        rat(1, 1) + c,
        rat(2, 1) * t + rat(*m as i64, 1) - rat(*n as i64, 1) - a - b - c,
    ];
    let mut sum = BigRational::zero();
    for k in 0..=*n as u64 {
        let mut term = BigRational::one();
        for x in &nums {
            term *= pochhammer(&RationalRing, x, k);
        }
        let mut den = pochhammer(&RationalRing, &rat(1, 1), k);
        for x in &dens {
            den *= poch_checked(x, k, "lower parameter")?;
        }
        if den.is_zero() {
            return Err(Error::PoleEncountered("lower parameter".into(), k as u32));
        }
        sum += term / den;
    }
    Ok(sum)
}

/// The 4F3 side with its Pochhammer-quotient prefactor.
pub fn transformation_rhs(inst: &IdentityInstance) -> Result<BigRational> {
    let IdentityInstance { n, m, t, a, b, c } = inst;
    let (nr, mr) = (rat(*n as i64, 1), rat(*m as i64, 1));
    let abc = a + b + c;
    let nums = [
        -mr.clone(),
        -nr.clone(),
        &abc + rat(1, 1) - &mr - rat(2, 1) * t,
        &abc + rat(1, 1) + &nr - &mr - t,
    ];
    let dens = [
        a + b + rat(1, 1) - &mr - t,
        a + c + rat(1, 1) - &mr - t,
        b + c + rat(1, 1) - &mr - t,
    ];
    let mut sum = BigRational::zero();
    for k in 0..=(*n).min(*m) as u64 {
        let mut term = BigRational::one();
        for x in &nums {
            term *= pochhammer(&RationalRing, x, k);
        }
        let mut den = pochhammer(&RationalRing, &rat(1, 1), k);
        for x in &dens {
            den *= poch_checked(x, k, "lower parameter")?;
        }
        sum += term / den;
    }
    let mut pre_num = poch_checked(&(rat(1, 1) + t), *n as u64, "prefactor")?;
    for x in &dens {
        pre_num *= poch_checked(x, *n as u64, "prefactor")?;
    }
    let mut pre_den = BigRational::one();
    for x in [
        rat(1, 1) + a,
        rat(1, 1) + b,
        rat(1, 1) + c,
        &abc + rat(1, 1) - &mr - rat(2, 1) * t,
    ] {
        pre_den *= poch_checked(&x, *n as u64, "prefactor")?;
    }
    if pre_den.is_zero() {
        return Err(Error::PoleEncountered("prefactor".into(), *n));
    }
    Ok(sum * pre_num / pre_den)
}

/// Draw pole-free random instances (small orders, small rational
/// parameters) with seeded rejection sampling.
pub fn sample_instances(count: usize, seed: u64) -> Vec<IdentityInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(0u32..=6);
        let m = rng.gen_range(0u32..=6);
        let mut draw = || rat(rng.gen_range(-8i64..=8), rng.gen_range(1i64..=10));
        let inst = IdentityInstance {
            n,
            m,
            t: draw(),
            a: draw(),
            b: draw(),
            c: draw(),
        };
        if transformation_lhs(&inst).is_ok() && transformation_rhs(&inst).is_ok() {
            out.push(inst);
        }
    }
    out
}

/// Both sides of the finite 4F3 harmonic symmetry identity over Q.
/// They are equal for every admissible r; the equality involves no prime.
pub fn symmetry_identity_sides(r: i64) -> (BigRational, BigRational) {
    let h = |x0: BigRational, lo: i64, hi: i64| -> BigRational {
        let mut s = BigRational::zero();
        for j in lo..=hi {
            s += (x0.clone() + rat(j, 1)).recip();
        }
        s
    };
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    for k in 0..=(1 - r) as i64 {
        let coeff = pochhammer(&RationalRing, &rat(r - 1, 1), k as u64)
            * pochhammer(&RationalRing, &rat(r, 3), k as u64).pow(3)
            / (pochhammer(&RationalRing, &rat(1, 1), k as u64)
                * pochhammer(&RationalRing, &rat(2 * r, 3), k as u64).pow(3));
        lhs += coeff.clone() * (h(rat(2 * r, 3), 0, k - 1) - h(rat(r, 3), 0, k - 1));
        rhs += coeff * h(rat(2 * r, 3), 0, -r);
    }
    (lhs, rhs)
}

/// Gamma_2(n) mod 32 by the defining product (p = 2 is excluded from the
/// general evaluator, so the lone p = 2 case gets its own tiny oracle).
fn gamma2_mod32(n: u64) -> u64 {
    let mut prod: u64 = 1;
    for j in (1..n).step_by(2) {
        prod = prod * j % 32;
    }
    if n % 2 == 1 {
        (32 - prod) % 32
    } else {
        prod
    }
}

/// Both sides of the quintic congruence at p = 2, r = 1, as residues mod 32.
pub fn quintic_p2_r1_sides() -> Result<(u128, u128)> {
    let lhs = reduce_mod(32, &s10_rational(1, 1))?;
    // canonical representatives of 1/5, 2/5, 4/5 in Z/32
    let g15 = gamma2_mod32(13);
    let g25 = gamma2_mod32(26);
    let g45 = gamma2_mod32(20);
    let quotient = rat((g15.pow(4) % 32) as i64, 1)
        / rat((g25 as u128).pow(5) as i64 % 32, 1)
        / rat((g45.pow(3) % 32) as i64, 1);
    let rhs = reduce_mod(
        32,
        &(rat(12 * 16, 25) * quotient * quintic_rhs_rational(1)),
    )?;
    Ok((lhs, rhs))
}

/// p-adic valuation of an exact rational (None for 0).
pub fn rational_valuation(p: u64, q: &BigRational) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let count = |mut x: BigInt| -> i64 {
        let mut v = 0;
        while (&x % &p).is_zero() {
            x /= &p;
            v += 1;
        }
        v
    };
    Some(count(q.numer().abs()) - count(q.denom().abs()))
}

/// Render a rational's reduced numerator sign for reports.
pub fn sign_of(q: &BigRational) -> Sign {
    q.numer().sign()
}
