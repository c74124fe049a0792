//! A minimal commutative-ring abstraction so the hypergeometric evaluators
//! can run over Z/p^k, Z/p^k[zeta], or exact rationals with one code path.

use crate::error::{Error, Result};
use crate::padic::{PAdic, PAdicContext};
use num::{BigInt, BigRational, Zero};

pub trait Ring {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    /// Embed the rational a/b; fails when b is not a unit in the ring.
    fn from_ratio(&self, a: i64, b: i64) -> Result<Self::Elem>;
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, x: &Self::Elem) -> bool;
}

impl Ring for PAdicContext {
    type Elem = PAdic;

    fn zero(&self) -> PAdic {
        PAdicContext::zero(self)
    }
    fn one(&self) -> PAdic {
        PAdicContext::one(self)
    }
    fn add(&self, x: &PAdic, y: &PAdic) -> PAdic {
        *x + *y
    }
    fn sub(&self, x: &PAdic, y: &PAdic) -> PAdic {
        *x - *y
    }
    fn mul(&self, x: &PAdic, y: &PAdic) -> PAdic {
        *x * *y
    }
    fn neg(&self, x: &PAdic) -> PAdic {
        -*x
    }
    fn from_ratio(&self, a: i64, b: i64) -> Result<PAdic> {
        self.from_rational(a as i128, b as i128)
    }
    fn inv(&self, x: &PAdic) -> Result<PAdic> {
        x.inv()
    }
    fn is_zero(&self, x: &PAdic) -> bool {
        x.is_zero()
    }
}

/// The field of exact rationals (arbitrary precision).
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalRing;

impl Ring for RationalRing {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::from(BigInt::from(1))
    }
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }
    fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x - y
    }
    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }
    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }
    fn from_ratio(&self, a: i64, b: i64) -> Result<BigRational> {
        if b == 0 {
            return Err(Error::DenominatorNotUnit);
        }
        Ok(BigRational::new(BigInt::from(a), BigInt::from(b)))
    }
    fn inv(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::NonUnit);
        }
        Ok(self.one() / x)
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.numer().is_zero()
    }
}
