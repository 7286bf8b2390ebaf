//! Clifford defect of numerical semigroups.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`NumericalSemigroup`]: construction from generators or from a membership
//!   predicate, the classical invariants (genus, Frobenius number, conductor,
//!   multiplicity), Apéry sets, symmetry and maximal embedding dimension;
//! * the Clifford map σ(x) = x/2 − l(x) + 1 and its exhaustive maximization
//!   over S ∩ [0, c] and over [0, c] ([`clifford`]);
//! * closed-form maximizers and defect values for the interval, Klein,
//!   Hermitian quotient, Pedersen-Sørensen, Suzuki, norm-trace and
//!   hyperelliptic semigroups ([`families`]);
//! * lower bounds on l(mQ) for one-point codes and the error-correction
//!   capability of the Modified Algorithm ([`codes`]);
//! * a checker for the structural and σ invariants every semigroup satisfies
//!   ([`invariants`]).
//!
//! All values of σ are exact half-integers ([`HalfInt`]); no floating point is
//! used anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod arith;
mod bitmap;
pub mod clifford;
pub mod codes;
pub mod error;
pub mod families;
pub mod halfint;
pub mod invariants;
pub mod semigroup;

pub use clifford::{
    clifford_defect, delta, duursma_defect, profile, sigma, sigma_compare, CliffordProfile,
    DomainKind,
};
pub use codes::{bound_report, ma_capability, BoundWinner, CodeBoundReport, MaCapability};
pub use error::{Error, Result};
pub use families::{FamilyKind, FamilyResult};
pub use halfint::HalfInt;
pub use semigroup::NumericalSemigroup;

/// Conductor above which family results are not materialized as bitmaps.
pub const DEFAULT_CONDUCTOR_CAP: u64 = 50_000;
