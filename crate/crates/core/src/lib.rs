//! Model-based Bayesian reinforcement learning in factored MDPs.
//!
//! The library learns the transition dynamics of a factored MDP whose
//! per-action DBN structure and parameters are both unknown. A particle
//! filter maintains a weighted set of candidate DBN structures, each
//! carrying a Dirichlet posterior over its conditional probability
//! tables. Weights follow the posterior predictive of each observed
//! transition; when the running likelihood of the particle set decays
//! below a threshold, fresh structures are drawn by Metropolis-Hastings
//! over the graph space and refit against the full transition history.
//! Actions are chosen online by a depth-limited Monte Carlo search over
//! the joint (state, posterior) space.
//!
//! The `sysadmin` module provides the network-administration benchmark
//! environments used to exercise the learner, and `harness` drives full
//! seeded experiments with CSV output.

pub mod dirichlet;
pub mod error;
pub mod factored;
pub mod harness;
pub mod inference;
pub mod metrics;
pub mod parallel;
pub mod planner;
pub mod rng;
pub mod sysadmin;

pub use error::{Error, Result};
