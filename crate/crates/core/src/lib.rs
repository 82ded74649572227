//! Exact-arithmetic toolkit for function-field L-values: finite fields and
//! polynomial rings, Drinfeld modules and their deformations, Fitting ideals
//! of the theta-action, the multiplicative function mu, Taelman L-values and
//! Goss-plane evaluation with certified tails, and a machine-checkable suite
//! of special-value and log-algebraicity identities.
//!
//! All values are immutable after construction and all operations are pure
//! functions of their inputs; everything here is safe to share across threads.

pub mod algebra;
pub mod drinfeld;
pub mod encode;
pub mod error;
pub mod frobenius;
pub mod identities;
pub mod lvalues;
pub mod util;

pub use error::{Error, Result};
