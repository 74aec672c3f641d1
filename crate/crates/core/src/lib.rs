//! Orientability of random k-uniform hypergraphs.
//!
//! A k-uniform hypergraph is ell-orientable when every edge can be
//! assigned to one of its vertices with no vertex receiving more than
//! ell edges. This crate computes the critical edge density c* at which
//! that property disappears, predicts the size and density of the
//! (ell+1)-core, decides orientability of concrete instances by
//! capacitated matching, generates the random models the theory speaks
//! about, and numerically audits the analytic inequalities behind the
//! threshold.
//!
//! The numeric entry points are [`kernel`] (Poisson tails, truncated
//! Poisson moments, the large-deviation rate function) and [`threshold`]
//! (the fixed-point solvers). Instance work happens in [`hypergraph`],
//! [`models`], [`peel`], [`orient`](mod@crate::orient) and [`dense`]. Everything is
//! deterministic: random models are pure functions of a 128-bit
//! (value, stream) seed.

pub mod audit;
pub mod dense;
pub mod error;
pub mod hypergraph;
pub mod kernel;
pub mod models;
pub mod orient;
pub mod peel;
pub mod rng;
pub mod threshold;

pub use error::{Error, Result};
pub use hypergraph::{Density, Hypergraph};
pub use kernel::{entropy, ln_q_tail, q_tail, RateFnPoint, TruncPoisParams};
pub use orient::{orient, orient_with_peeling, HallWitness, OrientDecision, Orientation};
pub use peel::{peel_core, peel_with_trace, CoreReport};
pub use rng::{Seed, SeededRng};
pub use threshold::{CorePrediction, OrientParams, ThresholdResult};
