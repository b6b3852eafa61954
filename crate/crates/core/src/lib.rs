//! Numerical core of the KIS-CES macro model.
//!
//! The crate is organised by economic block:
//!
//! * [`production`]: three-factor CES technology, marginal products, factor
//!   shares and the public/private complementarity cross-partials.
//! * [`households`]: liquidity-constrained and wealth-accumulating household
//!   blocks, the modified Euler equation, a steady-state solver and the
//!   marginal propensity to consume (closed form and re-solving oracle).
//! * [`policy`]: Taylor rule with a zero lower bound, Fisher equation, fiscal
//!   laws of motion and sentiment-augmented expectations.
//! * [`multipliers`]: structural consumption and investment multipliers with
//!   an interest-rate feedback that switches off at the ZLB.
//! * [`scenario`]: the log-linear crisis impact equation, the eight built-in
//!   stabilisation scenarios and multi-period paths.
//!
//! Every operation is a pure function of validated inputs.

// `!(x > 0.0)` style checks are deliberate: NaN must fail them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod households;
pub mod multipliers;
pub mod numdiff;
pub mod policy;
pub mod production;
mod roots;
pub mod scenario;

pub use error::{ModelError, Result};
