//! Exact verification of hypergeometric supercongruences: valuation-tracked
//! arithmetic in Z/p^k, cyclotomic extensions, Morita's p-adic Gamma, and
//! a suite of named congruence checks with exact-rational cross-oracles.

pub mod cli;
pub mod cyclo;
pub mod error;
pub mod gamma;
pub mod hyper;
pub mod oracle;
pub mod padic;
pub mod ring;
pub mod suite;

pub use error::{Error, Result};
