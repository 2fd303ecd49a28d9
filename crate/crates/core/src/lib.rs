//! Ancilla-free Deutsch-Jozsa on one to three qubits.
//!
//! Two levels of the same computation live here:
//!
//! * [`qcore`] and [`oracles`]: state vectors, the `(−1)^{f(x)}` phase oracle
//!   and the single-query constant/balanced verdict for every function in
//!   the census;
//! * [`nmr`]: a weak-coupling spin simulator that compiles each oracle to
//!   pulses and delays, starts from thermal equilibrium, and reads the
//!   verdict off stick-spectrum phases.
//!
//! [`entangle`] sorts oracles by the finest tensor factorization of their
//! sign vectors (non-, partially and maximally entangling).
//!
//! See `examples/` for one runnable program per capability.

pub mod cli;
pub mod entangle;
mod error;
pub mod nmr;
pub mod oracles;
pub mod qcore;

pub use error::{Error, Result};
