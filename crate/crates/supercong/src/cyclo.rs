//! Arithmetic in Z/p^k[zeta_n] = Z/p^k[x]/Phi_n(x) for n in {4, 5}.
//!
//! Phi_4 = x^2 + 1, Phi_5 = x^4 + x^3 + x^2 + x + 1. Elements are dense
//! coefficient vectors of length phi(n); multiplication is schoolbook
//! followed by reduction. Units are inverted with the Galois-norm trick:
//! multiply by all conjugates and divide by the resulting base-ring norm.

use crate::error::{Error, Result};
use crate::padic::{PAdic, PAdicContext, Valuation};
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycloContext {
    base: PAdicContext,
    n: u8,
}

impl CycloContext {
    pub fn new(base: PAdicContext, n: u8) -> Result<Self> {
        if n != 4 && n != 5 {
            return Err(Error::OutOfRange(format!("root order {n} unsupported")));
        }
        Ok(CycloContext { base, n })
    }

    pub fn base(&self) -> PAdicContext {
        self.base
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn degree(&self) -> usize {
        if self.n == 4 {
            2
        } else {
            4
        }
    }

    pub fn embed(&self, x: PAdic) -> CycloElem {
        let mut coeffs = vec![self.base.zero(); self.degree()];
        coeffs[0] = x;
        CycloElem { ctx: *self, coeffs }
    }

    /// Canonical representative of zeta^j (j taken mod n).
    pub fn zeta_pow(&self, j: i64) -> CycloElem {
        let jm = j.rem_euclid(self.n as i64) as usize;
        let zero = self.base.zero();
        let one = self.base.one();
        let mut coeffs = vec![zero; self.degree()];
        if self.n == 4 {
            match jm {
                0 => coeffs[0] = one,
                1 => coeffs[1] = one,
                2 => coeffs[0] = -one,
                _ => coeffs[1] = -one,
            }
        } else if jm < 4 {
            coeffs[jm] = one;
        } else {
            // zeta^4 = -1 - zeta - zeta^2 - zeta^3
            for c in coeffs.iter_mut() {
                *c = -one;
            }
        }
        CycloElem { ctx: *self, coeffs }
    }

    fn reduce(&self, conv: &[PAdic]) -> CycloElem {
        let zero = self.base.zero();
        let mut coeffs = vec![zero; self.degree()];
        if self.n == 4 {
            // x^2 = -1
            coeffs[0] = conv[0];
            coeffs[1] = conv[1];
            if conv.len() > 2 {
                coeffs[0] = coeffs[0] - conv[2];
            }
        } else {
            // fold with x^5 = 1, then eliminate x^4
            let mut c5 = [zero; 5];
            for (i, v) in conv.iter().enumerate() {
                c5[i % 5] = c5[i % 5] + *v;
            }
            for i in 0..4 {
                coeffs[i] = c5[i] - c5[4];
            }
        }
        CycloElem { ctx: *self, coeffs }
    }
}

/// An element of Z/p^k[zeta_n], reduced modulo Phi_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElem {
    ctx: CycloContext,
    coeffs: Vec<PAdic>,
}

impl CycloElem {
    pub fn context(&self) -> CycloContext {
        self.ctx
    }

    pub fn coeffs(&self) -> &[PAdic] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when the element lies in the image of the base ring.
    pub fn is_base(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn base_part(&self) -> PAdic {
        self.coeffs[0]
    }

    /// Minimum coefficient valuation; Top iff the element is zero.
    pub fn valuation(&self) -> Valuation {
        self.coeffs
            .iter()
            .map(|c| c.valuation())
            .min()
            .unwrap_or(Valuation::Top)
    }

    fn same_ctx(&self, other: &CycloElem) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &CycloElem) -> Result<CycloElem> {
        self.same_ctx(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| *a + *b)
            .collect();
        Ok(CycloElem {
            ctx: self.ctx,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &CycloElem) -> Result<CycloElem> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> CycloElem {
        CycloElem {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| -*c).collect(),
        }
    }

    pub fn try_mul(&self, other: &CycloElem) -> Result<CycloElem> {
        self.same_ctx(other)?;
        let d = self.ctx.degree();
        let mut conv = vec![self.ctx.base.zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                conv[i + j] = conv[i + j] + *a * *b;
            }
        }
        Ok(self.ctx.reduce(&conv))
    }

    pub fn scale(&self, s: PAdic) -> CycloElem {
        CycloElem {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| *c * s).collect(),
        }
    }

    /// Image under the ring automorphism zeta -> zeta^j (j coprime to n).
    pub fn conjugate(&self, j: i64) -> CycloElem {
        let mut acc = self.ctx.embed(self.ctx.base.zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            let term = self.ctx.zeta_pow(i as i64 * j).scale(*c);
            acc = acc.try_add(&term).expect("same context");
        }
        acc
    }

    /// Inverse of a unit, via the product of Galois conjugates.
    pub fn inv(&self) -> Result<CycloElem> {
        let js: &[i64] = if self.ctx.n == 4 { &[3] } else { &[2, 3, 4] };
        let mut cof = self.ctx.embed(self.ctx.base.one());
        for &j in js {
            cof = cof.try_mul(&self.conjugate(j))?;
        }
        let norm = self.try_mul(&cof)?;
        if !norm.is_base() {
            return Err(Error::NonUnit);
        }
        let ninv = norm.base_part().inv()?;
        Ok(cof.scale(ninv))
    }
}

impl Ring for CycloContext {
    type Elem = CycloElem;

    fn zero(&self) -> CycloElem {
        self.embed(self.base.zero())
    }
    fn one(&self) -> CycloElem {
        self.embed(self.base.one())
    }
    fn add(&self, x: &CycloElem, y: &CycloElem) -> CycloElem {
        x.try_add(y).expect("same context")
    }
    fn sub(&self, x: &CycloElem, y: &CycloElem) -> CycloElem {
        x.try_sub(y).expect("same context")
    }
    fn mul(&self, x: &CycloElem, y: &CycloElem) -> CycloElem {
        x.try_mul(y).expect("same context")
    }
    fn neg(&self, x: &CycloElem) -> CycloElem {
        x.neg()
    }
    fn from_ratio(&self, a: i64, b: i64) -> Result<CycloElem> {
        Ok(self.embed(self.base.from_rational(a as i128, b as i128)?))
    }
    fn inv(&self, x: &CycloElem) -> Result<CycloElem> {
        x.inv()
    }
    fn is_zero(&self, x: &CycloElem) -> bool {
        x.is_zero()
    }
}

/// prod_{s=0}^{4} (u + j + v*p*zeta^s) in Z/p^k[zeta_5].
///
/// By the exact factorization this equals (u+j)^5 + (vp)^5 in the base
/// ring; the product is computed factor by factor and the closed form is
/// enforced by the test suite.
pub fn quintuple_product(ctx: &CycloContext, u: PAdic, v: PAdic, j: PAdic) -> Result<CycloElem> {
    if ctx.n != 5 {
        return Err(Error::OutOfRange("quintuple_product needs n = 5".into()));
    }
    let t = u.try_add(&j)?;
    let vp = v.try_mul(&ctx.base.from_integer(ctx.base.p() as i128))?;
    let mut acc = ctx.one();
    for s in 0..5 {
        let factor = ctx.embed(t).try_add(&ctx.zeta_pow(s).scale(vp))?;
        acc = acc.try_mul(&factor)?;
    }
    Ok(acc)
}

/// (u+j+vp)(u+j-vp)(u+j+vpi)(u+j-vpi) in Z/p^k[i]; equals (u+j)^4 - (vp)^4.
pub fn quadruple_product(ctx: &CycloContext, u: PAdic, v: PAdic, j: PAdic) -> Result<CycloElem> {
    if ctx.n != 4 {
        return Err(Error::OutOfRange("quadruple_product needs n = 4".into()));
    }
    let t = u.try_add(&j)?;
    let vp = v.try_mul(&ctx.base.from_integer(ctx.base.p() as i128))?;
    let mut acc = ctx.one();
    for s in 0..4 {
        let factor = ctx.embed(t).try_add(&ctx.zeta_pow(s).scale(vp))?;
        acc = acc.try_mul(&factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx5(p: u64, k: u32) -> CycloContext {
        CycloContext::new(PAdicContext::new(p, k).unwrap(), 5).unwrap()
    }

    fn ctx4(p: u64, k: u32) -> CycloContext {
        CycloContext::new(PAdicContext::new(p, k).unwrap(), 4).unwrap()
    }

    #[test]
    fn zeta_powers() {
        let c = ctx5(7, 3);
        assert_eq!(c.zeta_pow(0), c.one());
        let m1 = -c.base().one();
        let z4 = c.zeta_pow(4);
        assert!(z4.coeffs().iter().all(|&x| x == m1));
        let c4 = ctx4(7, 3);
        assert_eq!(c4.zeta_pow(2), c4.embed(-c4.base().one()));
    }

    #[test]
    fn cyclotomic_relations() {
        let c = ctx5(11, 4);
        // zeta * zeta^4 = 1
        let prod = c.zeta_pow(1).try_mul(&c.zeta_pow(4)).unwrap();
        assert_eq!(prod, c.one());
        // 1 + zeta + ... + zeta^4 = 0
        let mut s = c.zero();
        for j in 0..5 {
            s = s.try_add(&c.zeta_pow(j)).unwrap();
        }
        assert!(s.is_zero());
        // Phi_5(zeta) = 0 via the same sum; Phi_4(i) = i^2 + 1 = 0
        let c4 = ctx4(11, 4);
        let ii = c4.zeta_pow(1).try_mul(&c4.zeta_pow(1)).unwrap();
        assert_eq!(ii, c4.embed(-c4.base().one()));
    }

    #[test]
    fn quintuple_product_closed_form() {
        let c = ctx5(7, 6);
        let b = c.base();
        let u = b.from_rational(1, 3).unwrap();
        let v = b.from_rational(2, 3).unwrap();
        let prod = quintuple_product(&c, u, v, b.zero()).unwrap();
        assert!(prod.is_base());
        let closed = b.from_rational(1, 3).unwrap().pow(5)
            + b.from_rational(14, 3).unwrap().pow(5);
        assert_eq!(prod.base_part(), closed);

        // v = 0 -> (u+j)^5 ; u+j = 0 -> (vp)^5
        let prod = quintuple_product(&c, u, b.zero(), b.one()).unwrap();
        assert_eq!(prod.base_part(), (u + b.one()).pow(5));
        let prod = quintuple_product(&c, b.zero(), v, b.zero()).unwrap();
        let vp = v * b.from_integer(7);
        assert_eq!(prod.base_part(), vp.pow(5));
    }

    #[test]
    fn quadruple_product_closed_form() {
        let c = ctx4(7, 5);
        let b = c.base();
        let u = b.from_rational(1, 5).unwrap();
        let v = b.from_rational(3, 5).unwrap();
        let j = b.from_integer(2);
        let prod = quadruple_product(&c, u, v, j).unwrap();
        assert!(prod.is_base());
        let closed = b.from_rational(11, 5).unwrap().pow(4)
            - b.from_rational(21, 5).unwrap().pow(4);
        assert_eq!(prod.base_part(), closed);

        let prod = quadruple_product(&c, u, b.zero(), j).unwrap();
        assert_eq!(prod.base_part(), (u + j).pow(4));
        let prod = quadruple_product(&c, b.zero(), v, b.zero()).unwrap();
        let vp = v * b.from_integer(7);
        assert_eq!(prod.base_part(), -vp.pow(4));
    }

    proptest! {
        #[test]
        fn inverse_roundtrip_zeta5(c0 in 0u128..343, c1 in 0u128..343,
                                   c2 in 0u128..343, c3 in 0u128..343) {
            let c = ctx5(7, 3);
            let b = c.base();
            let elem = CycloElem {
                ctx: c,
                coeffs: vec![
                    b.from_residue(c0), b.from_residue(c1),
                    b.from_residue(c2), b.from_residue(c3),
                ],
            };
            match elem.inv() {
                Ok(inv) => prop_assert_eq!(elem.try_mul(&inv).unwrap(), c.one()),
                Err(e) => prop_assert_eq!(e, crate::error::Error::NonUnit),
            }
        }

        #[test]
        fn mul_commutes_and_distributes(a in 0u128..125, b in 0u128..125, d in 0u128..125) {
            let c = ctx4(5, 3);
            let base = c.base();
            let x = c.embed(base.from_residue(a)).try_add(&c.zeta_pow(1).scale(base.from_residue(b))).unwrap();
            let y = c.zeta_pow(1).scale(base.from_residue(d)).try_add(&c.one()).unwrap();
            prop_assert_eq!(x.try_mul(&y).unwrap(), y.try_mul(&x).unwrap());
            let z = c.zeta_pow(3);
            let lhs = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
            let rhs = x.try_mul(&y).unwrap().try_add(&x.try_mul(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
