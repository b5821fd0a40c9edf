//! Exact arithmetic for the moduli of rational pseudo-holomorphic curves in
//! symplectizations of lens spaces `L(p, q)` with their standard contact forms.
//!
//! Everything here is integer or rational arithmetic: existence conditions for
//! moduli components, Conley-Zehnder and Fredholm indices, the regularity
//! identity `ind = 4 + 4 d_I`, intersection numbers in the compactified
//! tautological bundle, and the contactomorphism congruence `q' ≡ q^{±1} (mod p)`.
//! The only floating point lives in [`curves`], which spot-checks the
//! equivariance identity of sampled base curves numerically.
//!
//! The crate is `no_std` (with `alloc`); IO and the CLI live in a companion
//! crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod curves;
pub mod fredholm;
pub mod intersect;
pub mod lens;
pub mod modp;
pub mod moduli;
pub mod neckstretch;
pub mod orbits;
pub mod rational;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;
