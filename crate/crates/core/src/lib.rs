//! Surface bundles over surfaces with non-zero signature, built by gluing
//! two equivalent Lefschetz fibrations over the sphere.
//!
//! - [`invariants`]: exact characteristic numbers and fiber sums.
//! - [`fibrations`]: the `X(h, k)` and `E(n)_K` fibration families, the
//!   equivalence test and the gluing construction.
//! - [`meyer`]: symplectic matrices of Dehn twist words and the Meyer
//!   cocycle, an independent route to fibration signatures.
//! - [`search`]: the parameter grid search, bundle construction, geography
//!   data and the audit of the worked examples.
//! - [`cli`]: the `lf-forge` command-line front end.

pub mod cli;
pub mod error;
pub mod fibrations;
pub mod invariants;
pub mod meyer;
pub mod search;

pub use error::{Error, Result};
