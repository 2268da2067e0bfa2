//! Discrete-time quantum walks on a line in a periodic scattering potential.
//!
//! Ordinary sites flip a Hadamard coin; every site `x = n q` flips the
//! scattering coin `C(θ)` with transmission `sin θ` and reflection `cos θ`.
//! The crate evolves the exact state vector, derives position statistics,
//! and runs the parameter sweeps used to study how the spread `σ` depends
//! on the step count, the angle and the period.

pub mod cli;
pub mod coin;
pub mod error;
pub mod experiments;
pub mod observables;
pub mod oracle;
pub mod potential;
pub mod state;

pub use coin::{hadamard_coin, scattering_coin, CoinDirection, CoinMatrix};
pub use error::{Result, WalkError};
pub use observables::{distribution, moments, q1_law, sigma, symmetry_residual, Distribution, Moments};
pub use potential::PotentialProfile;
pub use state::{initial_state, WalkState};
