//! Pochhammer symbols and truncated hypergeometric sums, generic over the
//! coefficient ring, plus the specific weighted sums the congruence
//! checks need.

use crate::error::{Error, Result};
use crate::padic::{PAdic, PAdicContext};
use crate::ring::Ring;

/// (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
pub fn pochhammer<R: Ring>(ring: &R, x: &R::Elem, n: u64) -> R::Elem {
    let mut acc = ring.one();
    let mut factor = x.clone();
    let step = ring.one();
    for _ in 0..n {
        acc = ring.mul(&acc, &factor);
        factor = ring.add(&factor, &step);
    }
    acc
}

/// A rational parameter, interpreted into the target ring on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingParam {
    pub num: i64,
    pub den: i64,
}

impl RingParam {
    pub fn new(num: i64, den: i64) -> Self {
        RingParam { num, den }
    }

    pub fn resolve<R: Ring>(&self, ring: &R) -> Result<R::Elem> {
        ring.from_ratio(self.num, self.den)
    }
}

/// A truncated {r+1}F{r} evaluation request.
#[derive(Debug, Clone)]
pub struct SeriesSpec {
    pub numerator: Vec<RingParam>,
    pub denominator: Vec<RingParam>,
    pub argument: RingParam,
    pub truncation: u64,
}

/// sum_{k=0}^{n} prod (a_i)_k / (prod (b_j)_k * k!) * z^k, by incremental
/// term updates. Numerator factors may lose invertibility (they only raise
/// the term's valuation); a non-invertible denominator factor is an error.
pub fn truncated_f<R: Ring>(
    ring: &R,
    nums: &[R::Elem],
    dens: &[R::Elem],
    z: &R::Elem,
    n: u64,
) -> Result<R::Elem> {
    let mut sum = ring.one();
    let mut term = ring.one();
    let mut anum: Vec<R::Elem> = nums.to_vec();
    let mut aden: Vec<R::Elem> = dens.to_vec();
    let one = ring.one();
    for k in 0..n {
        for a in &anum {
            term = ring.mul(&term, a);
        }
        let mut d = ring.from_ratio(k as i64 + 1, 1)?;
        for b in &aden {
            d = ring.mul(&d, b);
        }
        let dinv = ring
            .inv(&d)
            .map_err(|_| Error::NonInvertibleDenominator(k + 1))?;
        term = ring.mul(&term, &dinv);
        term = ring.mul(&term, z);
        sum = ring.add(&sum, &term);
        for a in anum.iter_mut() {
            *a = ring.add(a, &one);
        }
        for b in aden.iter_mut() {
            *b = ring.add(b, &one);
        }
    }
    Ok(sum)
}

pub fn truncated_f_spec<R: Ring>(ring: &R, spec: &SeriesSpec) -> Result<R::Elem> {
    let nums = spec
        .numerator
        .iter()
        .map(|p| p.resolve(ring))
        .collect::<Result<Vec<_>>>()?;
    let dens = spec
        .denominator
        .iter()
        .map(|p| p.resolve(ring))
        .collect::<Result<Vec<_>>>()?;
    let z = spec.argument.resolve(ring)?;
    truncated_f(ring, &nums, &dens, &z, spec.truncation)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// sum_{k=0}^{upper} (6k+r) (r/3)_k^6 / (1)_k^6 in Z/p^k.
pub fn weighted_sum_6(ctx: PAdicContext, r: i64, upper: i64) -> Result<PAdic> {
    if r > 1 || gcd(r, 3) != 1 {
        return Err(Error::InvalidR(format!("r = {r}: need r <= 1, gcd(r,3) = 1")));
    }
    let x = ctx.from_rational(r as i128, 3)?;
    let mut sum = ctx.zero();
    let mut term = ctx.one(); // (r/3)_k^6 / (1)_k^6
    let mut k: i64 = 0;
    while k <= upper {
        let weight = ctx.from_integer(6 * k as i128 + r as i128);
        sum = sum + weight * term;
        if k < upper {
            let num = x + ctx.from_integer(k as i128);
            let den = ctx
                .from_integer(k as i128 + 1)
                .inv()
                .map_err(|_| Error::NonInvertibleDenominator(k as u64 + 1))?;
            term = term * (num * den).pow(6);
        }
        k += 1;
    }
    Ok(sum)
}

/// sum_{k=0}^{upper} (10k+r) (r/5)_k^5 / (1)_k^5 in Z/p^k.
pub fn weighted_sum_10(ctx: PAdicContext, r: i64, upper: i64) -> Result<PAdic> {
    if r > 1 || r % 2 == 0 || gcd(r, 5) != 1 {
        return Err(Error::InvalidR(format!(
            "r = {r}: need odd r <= 1, gcd(r,5) = 1"
        )));
    }
    let x = ctx.from_rational(r as i128, 5)?;
    let mut sum = ctx.zero();
    let mut term = ctx.one();
    let mut k: i64 = 0;
    while k <= upper {
        let weight = ctx.from_integer(10 * k as i128 + r as i128);
        sum = sum + weight * term;
        if k < upper {
            let num = x + ctx.from_integer(k as i128);
            let den = ctx
                .from_integer(k as i128 + 1)
                .inv()
                .map_err(|_| Error::NonInvertibleDenominator(k as u64 + 1))?;
            term = term * (num * den).pow(5);
        }
        k += 1;
    }
    Ok(sum)
}

/// The two right-hand-side finite-sum families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumFamily {
    /// sum_{k=0}^{1-r} (r-1)_k (r/3)_k^3 / ((1)_k (2r/3)_k^3)
    Cubic,
    /// sum_{k=0}^{(1-r)/2} ((r-1)/2)_k (r/5)_k^3 / ((1)_k (2r/5)_k^2 (1/2+3r/10)_k)
    Quintic,
}

pub fn finite_rhs_sum<R: Ring>(ring: &R, family: SumFamily, r: i64) -> Result<R::Elem> {
    let (upper, valid) = match family {
        SumFamily::Cubic => (1 - r, r <= 1 && gcd(r, 3) == 1),
        SumFamily::Quintic => ((1 - r) / 2, r <= 1 && r % 2 != 0 && gcd(r, 5) == 1),
    };
    if !valid {
        return Err(Error::InvalidR(format!("r = {r} outside the {family:?} family")));
    }
    let mut sum = ring.zero();
    for k in 0..=upper as u64 {
        let (num, den) = match family {
            SumFamily::Cubic => {
                let a = pochhammer(ring, &ring.from_ratio(r - 1, 1)?, k);
                let b = pochhammer(ring, &ring.from_ratio(r, 3)?, k);
                let num = ring.mul(&a, &ring.mul(&b, &ring.mul(&b, &b)));
                let c = pochhammer(ring, &ring.one(), k);
                let d = pochhammer(ring, &ring.from_ratio(2 * r, 3)?, k);
                (num, ring.mul(&c, &ring.mul(&d, &ring.mul(&d, &d))))
            }
            SumFamily::Quintic => {
                let a = pochhammer(ring, &ring.from_ratio((r - 1) / 2, 1)?, k);
                let b = pochhammer(ring, &ring.from_ratio(r, 5)?, k);
                let num = ring.mul(&a, &ring.mul(&b, &ring.mul(&b, &b)));
                let c = pochhammer(ring, &ring.one(), k);
                let d = pochhammer(ring, &ring.from_ratio(2 * r, 5)?, k);
                let e = pochhammer(ring, &ring.from_ratio(5 + 3 * r, 10)?, k);
                (num, ring.mul(&c, &ring.mul(&d, &ring.mul(&d, &e))))
            }
        };
        let dinv = ring
            .inv(&den)
            .map_err(|_| Error::NonInvertibleDenominator(k))?;
        sum = ring.add(&sum, &ring.mul(&num, &dinv));
    }
    Ok(sum)
}

/// Lemma-style weighted harmonic sum, cubic family, mod p:
/// sum_k (6k+r)(r/3)_k^6/(1)_k^6 (sum_{j<k} (r/3+j)^{-5} + sum_{j<=k} j^{-5}).
pub fn harmonic_weighted_sum_6(ctx: PAdicContext, r: i64) -> Result<PAdic> {
    let upper = (2 * ctx.p() as i64 - r) / 3;
    let x = ctx.from_rational(r as i128, 3)?;
    let mut sum = ctx.zero();
    let mut term = ctx.one();
    let mut h1 = ctx.zero(); // sum_{j=0}^{k-1} 1/(r/3+j)^5
    let mut h2 = ctx.zero(); // sum_{j=1}^{k} 1/j^5
    for k in 0..=upper {
        if k > 0 {
            h2 = h2 + ctx.from_integer(k as i128).inv()?.pow(5);
        }
        let weight = ctx.from_integer(6 * k as i128 + r as i128);
        sum = sum + weight * term * (h1 + h2);
        if k < upper {
            let num = x + ctx.from_integer(k as i128);
            h1 = h1 + num.inv().map_err(|_| Error::NonInvertibleDenominator(k as u64))?.pow(5);
            let den = ctx.from_integer(k as i128 + 1).inv()?;
            term = term * (num * den).pow(6);
        }
    }
    Ok(sum)
}

/// Quintic analogue, mod p, with the subtracted harmonic tail:
/// sum_k (10k+r)(r/5)_k^5/(1)_k^5 (sum_{j<k} (r/5+j)^{-4} - sum_{j<=k} j^{-4}).
pub fn harmonic_weighted_sum_10(ctx: PAdicContext, r: i64) -> Result<PAdic> {
    let upper = (3 * ctx.p() as i64 - r) / 5;
    let x = ctx.from_rational(r as i128, 5)?;
    let mut sum = ctx.zero();
    let mut term = ctx.one();
    let mut h1 = ctx.zero();
    let mut h2 = ctx.zero();
    for k in 0..=upper {
        if k > 0 {
            h2 = h2 + ctx.from_integer(k as i128).inv()?.pow(4);
        }
        let weight = ctx.from_integer(10 * k as i128 + r as i128);
        sum = sum + weight * term * (h1 - h2);
        if k < upper {
            let num = x + ctx.from_integer(k as i128);
            h1 = h1 + num.inv().map_err(|_| Error::NonInvertibleDenominator(k as u64))?.pow(4);
            let den = ctx.from_integer(k as i128 + 1).inv()?;
            term = term * (num * den).pow(5);
        }
    }
    Ok(sum)
}

/// Harmonic symmetry of the 4F3 parameters, mod p:
/// sum_{j=0}^{(p-2r-3)/3} (2r/3+j)^{-1} + sum_{j=1}^{(p+r-3)/3} j^{-1}
///   - sum_{j=0}^{-r} (2r/3+j)^{-1}.
pub fn harmonic_symmetry_sum(ctx: PAdicContext, r: i64) -> Result<PAdic> {
    let p = ctx.p() as i64;
    let y = ctx.from_rational(2 * r as i128, 3)?;
    let mut sum = ctx.zero();
    for j in 0..=(p - 2 * r - 3) / 3 {
        sum = sum + (y + ctx.from_integer(j as i128)).inv()?;
    }
    for j in 1..=(p + r - 3) / 3 {
        sum = sum + ctx.from_integer(j as i128).inv()?;
    }
    for j in 0..=-r {
        sum = sum - (y + ctx.from_integer(j as i128)).inv()?;
    }
    Ok(sum)
}
