//! Morita's p-adic Gamma function modulo p^k.
//!
//! Gamma_p(x) is evaluated at the canonical representative n of x in
//! [0, p^k) as (-1)^n * prod_{0<j<n, p not| j} j. The product is taken in
//! blocks of length L = p^ceil(k/2): the product of units across one full
//! block is a short polynomial in the block offset whose coefficients are
//! the top elementary symmetric functions of the units in [1, L], so a
//! single evaluation costs O(L) after an O(L) table build.

use crate::error::{Error, Result};
use crate::padic::{mul_mod, PAdic, PAdicContext};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Precomputed block data for one (p, k).
#[derive(Debug, Clone)]
pub struct MoritaTable {
    ctx: PAdicContext,
    block_len: u128,
    /// e_top[s] = e_{m-s}, the s-th-from-top elementary symmetric function
    /// of the units in [1, block_len], mod p^k. Only the powers with
    /// s * ceil(k/2) < k survive, so the vector is short.
    e_top: Vec<u128>,
}

pub fn build_table(ctx: PAdicContext) -> MoritaTable {
    let p = ctx.p() as u128;
    let k = ctx.k();
    let h = (k + 1) / 2;
    let m = ctx.modulus();
    let mut block_len: u128 = 1;
    for _ in 0..h {
        block_len *= p;
    }
    let mut smax = 0usize;
    while (smax as u32 + 1) * h < k {
        smax += 1;
    }
    let mut e = vec![0u128; smax + 1];
    e[0] = 1;
    let mut u: u128 = 1;
    while u <= block_len {
        if u % p != 0 {
            for s in (1..=smax).rev() {
                e[s] = (mul_mod(e[s], u, m) + e[s - 1]) % m;
            }
            e[0] = mul_mod(e[0], u, m);
        }
        u += 1;
    }
    MoritaTable {
        ctx,
        block_len,
        e_top: e,
    }
}

impl MoritaTable {
    pub fn context(&self) -> PAdicContext {
        self.ctx
    }

    pub fn block_len(&self) -> u128 {
        self.block_len
    }

    pub fn e_top(&self) -> &[u128] {
        &self.e_top
    }

    /// prod_{0<j<n, p not| j} j mod p^k.
    pub fn morita_factorial(&self, n: u128) -> Result<PAdic> {
        if n > self.ctx.modulus() {
            return Err(Error::OutOfRange(format!("n = {n} exceeds p^k")));
        }
        if n <= 1 {
            return Ok(self.ctx.one());
        }
        let m = self.ctx.modulus();
        let p = self.ctx.p() as u128;
        let top = n - 1;
        let blocks = top / self.block_len;
        let rem = top % self.block_len;
        let mut prod: u128 = 1;
        for c in 0..blocks {
            let x = (c * self.block_len) % m;
            let mut blk: u128 = 0;
            let mut xs: u128 = 1;
            for &e in &self.e_top {
                blk = (blk + mul_mod(xs, e, m)) % m;
                xs = mul_mod(xs, x, m);
            }
            prod = mul_mod(prod, blk, m);
        }
        let base = blocks * self.block_len;
        for u in 1..=rem {
            if u % p != 0 {
                prod = mul_mod(prod, base + u, m);
            }
        }
        Ok(self.ctx.from_residue(prod))
    }

    /// Gamma_p(a/b) mod p^k for a p-adic integer argument.
    pub fn gamma(&self, a: i128, b: i128) -> Result<GammaValue> {
        let x = self.ctx.from_rational(a, b)?;
        let n = x.residue();
        let f = self.morita_factorial(n)?;
        let value = if n % 2 == 1 { -f } else { f };
        Ok(GammaValue { value })
    }
}

/// A Gamma_p value; always a unit of Z/p^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaValue {
    pub value: PAdic,
}

/// G_1(0) = Gamma_p'(0)/Gamma_p(0) mod p, recovered from
/// Gamma_p(p)/Gamma_p(0) = 1 + G_1(0) p (mod p^2).
pub fn g1_at_zero(ctx: PAdicContext) -> Result<PAdic> {
    if ctx.k() < 2 {
        return Err(Error::PrecisionTooLow);
    }
    let p = ctx.p();
    let ctx2 = PAdicContext::new(p, 2)?;
    let tbl = build_table(ctx2);
    let q = tbl.gamma(p as i128, 1)?.value;
    let num = q - ctx2.one();
    let g1 = num.residue() / p as u128;
    let ctx1 = PAdicContext::new(p, 1)?;
    Ok(ctx1.from_residue(g1))
}

/// Shared read-only table cache keyed by (p, k); grids reuse tables
/// across parallel evaluations.
pub fn shared_table(p: u64, k: u32) -> Result<Arc<MoritaTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Arc<MoritaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(p, k)) {
        return Ok(t.clone());
    }
    let ctx = PAdicContext::new(p, k)?;
    let tbl = Arc::new(build_table(ctx));
    cache
        .lock()
        .unwrap()
        .entry((p, k))
        .or_insert_with(|| tbl.clone());
    Ok(tbl)
}
