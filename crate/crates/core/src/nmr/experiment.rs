//! End-to-end NMR run: thermal start, pseudo-Hadamard, oracle, detection.
//!
//! The closing Hadamard of the abstract algorithm and the (90°) read pulse
//! cancel, so the transverse magnetization left after the oracle is detected
//! directly.

use crate::error::Result;
use crate::nmr::compile::compile_oracle;
use crate::nmr::density::{evolve, thermal_state, DensityOperator};
use crate::nmr::propagate::{pseudo_hadamard, sequence_propagator};
use crate::nmr::pulse::{PulseSequence, ZMode};
use crate::nmr::spectrum::{reference_spectrum, render_spectrum, spectral_verdict, SpectralVerdict, StickSpectrum};
use crate::nmr::SpinSystem;
use crate::oracles::BooleanFunction;

#[derive(Debug, Clone)]
pub struct Experiment {
    pub sequence: PulseSequence,
    pub rho_final: DensityOperator,
    pub spectrum: StickSpectrum,
    pub verdict: SpectralVerdict,
}

/// Run an arbitrary program after the pseudo-Hadamard.
pub fn run_sequence(sys: &SpinSystem, sequence: &PulseSequence) -> Result<Experiment> {
    sequence.validate(sys)?;
    let prepared = evolve(&thermal_state(sys), &pseudo_hadamard(sys))?;
    let rho_final = evolve(&prepared, &sequence_propagator(sys, sequence)?)?;
    let spectrum = render_spectrum(&rho_final, sys)?;
    let verdict = spectral_verdict(&spectrum, &reference_spectrum(sys))?;
    Ok(Experiment {
        sequence: sequence.clone(),
        rho_final,
        spectrum,
        verdict,
    })
}

pub fn run_experiment(sys: &SpinSystem, f: &BooleanFunction, mode: ZMode) -> Result<Experiment> {
    let sequence = compile_oracle(sys, f, mode)?;
    run_sequence(sys, &sequence)
}
