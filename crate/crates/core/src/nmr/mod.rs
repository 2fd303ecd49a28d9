//! Weak-coupling NMR simulation of the phase oracles.

pub mod compile;
pub mod density;
pub mod dsl;
pub mod experiment;
pub mod propagate;
pub mod published;
pub mod pulse;
pub mod spectrum;
mod spin_system;

pub use compile::{compile_and_verify, compile_oracle, verify_sequence, Verification};
pub use density::{
    evolve, product_operator_decomposition, thermal_state, DensityOperator, Label,
    ProductOperatorTerm,
};
pub use dsl::{parse_sequence, to_program_text};
pub use experiment::{run_experiment, run_sequence, Experiment};
pub use propagate::{
    composite_z, delay_propagator, pseudo_hadamard, rotation_propagator, sequence_propagator,
};
pub use pulse::{Axis, DelaySpec, PulseElement, PulseSequence, ZMode};
pub use spectrum::{
    reference_spectrum, render_spectrum, spectral_verdict, MultipletPattern, SpectralVerdict,
    StickLine, StickSpectrum,
};
pub use spin_system::{SpinSystem, SpinSystemConfig, MAX_SPINS};
