//! Exact computation in idempotent semirings.
//!
//! The crate covers value groups and `Γ_max`, finite semirings given by
//! tables (congruences, primes, reduction, localization), valuations and
//! valuation subsemirings, valuation orders, contraction and integrality,
//! and the semiring of finitely generated `Z_(p)`-submodules of `Q` and of
//! quadratic fields, with an independent oracle for extending the `p`-adic
//! valuation.
//!
//! Everything is `no_std` with `alloc`; IO lives in the `charone` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod finite;
pub mod frac_ideal;
pub mod gamma;
pub mod group;
pub mod idem;
pub mod integrality;
pub mod order;
pub mod semiring;
pub mod valuation;

pub use error::{Error, Result};
pub use finite::{Congruence, FiniteSemiring};
pub use gamma::{GammaMax, GammaMaxField};
pub use group::{embed, Embedding, Exponent, GroupElement, GroupKind};
pub use order::Relation;
pub use semiring::{Carrier, Semiring, Subset};
pub use valuation::ValuationHom;
