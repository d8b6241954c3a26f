//! Decoupled actor-learner reinforcement learning testbed.
//!
//! The crate splits an RL training loop into two cooperating halves — an
//! inference side that samples trajectories and a training side that turns
//! them into policy updates — connected through a versioned checkpoint store
//! and one of two synchronization protocols:
//!
//! * **sequential**: the trainer pulls trajectories through a blocking HTTP
//!   API (`POST /v1/rl/trajectories`), and the worker refreshes its weights
//!   to the caller's version before sampling when the version gap exceeds a
//!   configured threshold;
//! * **async**: workers continuously push version-tagged rollout batches
//!   into a replay buffer while a coordinator tracks the version skew
//!   between the trainer and the inference side and broadcasts a
//!   `sync_weight` command once the skew exceeds `delta_max`.
//!
//! A single-process oracle ([`harness::run_monolithic_oracle`]) reproduces
//! the decoupled computation step for step; the harness verifies that a
//! sequential run over loopback produces a bit-identical parameter trail.

pub mod buffer;
pub mod coordinator;
pub mod env;
pub mod harness;
pub mod placement;
pub mod policy;
pub mod rng;
pub mod rollout;
pub mod service;
pub mod snapshot;
pub mod trainer;
pub mod types;
pub mod worker;

pub use types::{Mode, ParamVersion, RolloutBatch, RunConfig, Trajectory};
