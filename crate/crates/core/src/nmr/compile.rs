//! Pulse programs for phase oracles, and their verification.
//!
//! A promise function is compiled from its algebraic normal form:
//!
//! * a linear term `x_i` is a `[π]_z` on spin `i`;
//! * a quadratic term `x_i x_j` is a controlled-Z built from flanking
//!   `[∓π/2]_z` pulses on `i` and `j` followed by `J_ij` evolution over
//!   `τ = 1/(2|J_ij|)` inside an echo. The echo flips `i` and `j` together at
//!   `τ/2` (shifts of `i`, `j` and their couplings to the third spin cancel,
//!   `J_ij` survives) and flips any third spin at `τ/4` and `3τ/4`. A second
//!   `[π]_x` pair on `i`, `j` closes the block so it is diagonal;
//! * the constant term is a global phase and emits nothing.
//!
//! Every balanced or constant function of at most three bits has degree ≤ 2,
//! so this covers the whole census.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::nmr::propagate::sequence_propagator;
use crate::nmr::pulse::{Axis, DelaySpec, PulseElement, PulseSequence, ZMode};
use crate::nmr::SpinSystem;
use crate::oracles::{build_phase_oracle, BooleanFunction};
use crate::qcore::{global_phase_equal, Operator, C64};

/// Fidelity threshold for a compiled sequence to count as correct.
pub const VERIFY_TOL: f64 = 1e-9;

fn spins_of(mask: usize, n: usize) -> Vec<usize> {
    (1..=n).filter(|&s| mask >> (n - s) & 1 == 1).collect()
}

fn coupling_delay(num: u32, den: u32, i: usize, j: usize) -> PulseElement {
    PulseElement::Delay(DelaySpec::Coupling { num, den, i, j })
}

/// Controlled-Z between spins `i < j` via scalar coupling.
pub fn controlled_z_block(sys: &SpinSystem, i: usize, j: usize) -> Result<PulseSequence> {
    let coupling = sys.require_coupling(i, j)?;
    let flank = -coupling.signum() * PI / 2.0;
    let mut seq = PulseSequence::new(format!("CZ({i},{j})"));
    seq.push(PulseElement::z(i, flank)).push(PulseElement::z(j, flank));
    let pair = PulseElement::pulse(&[i, j], Axis::X, PI);
    let others: Vec<usize> = (1..=sys.n_spins()).filter(|&k| k != i && k != j).collect();
    if others.is_empty() {
        seq.push(coupling_delay(1, 4, i, j))
            .push(pair.clone())
            .push(coupling_delay(1, 4, i, j))
            .push(pair);
    } else {
        let spectators = PulseElement::pulse(&others, Axis::X, PI);
        seq.push(coupling_delay(1, 8, i, j))
            .push(spectators.clone())
            .push(coupling_delay(1, 8, i, j))
            .push(pair.clone())
            .push(coupling_delay(1, 8, i, j))
            .push(spectators)
            .push(coupling_delay(1, 8, i, j))
            .push(pair);
    }
    Ok(seq)
}

/// Pulse program whose propagator equals the phase oracle of `f` up to a
/// global phase. Constant functions compile to the empty sequence.
pub fn compile_oracle(sys: &SpinSystem, f: &BooleanFunction, mode: ZMode) -> Result<PulseSequence> {
    build_phase_oracle(f)?;
    let n = f.n_bits();
    if n != sys.n_spins() {
        return Err(Error::DimensionMismatch(n, sys.n_spins()));
    }
    let anf = f.anf();
    if let Some(m) = anf.iter().find(|m| m.count_ones() > 2) {
        return Err(Error::UnsupportedFunction(format!(
            "degree-{} monomial over spins {:?}",
            m.count_ones(),
            spins_of(*m, n)
        )));
    }
    let mut seq = PulseSequence::new(format!("oracle {} ({})", f.key(), f.bit_string()));
    let mut quadratic: Vec<Vec<usize>> = anf
        .iter()
        .filter(|m| m.count_ones() == 2)
        .map(|&m| spins_of(m, n))
        .collect();
    quadratic.sort();
    for pair in &quadratic {
        seq.extend(&controlled_z_block(sys, pair[0], pair[1])?);
    }
    let mut linear: Vec<usize> = anf
        .iter()
        .filter(|m| m.count_ones() == 1)
        .flat_map(|&m| spins_of(m, n))
        .collect();
    linear.sort_unstable();
    for spin in linear {
        seq.push(PulseElement::z(spin, PI));
    }
    let mut out = seq.expand_z(mode);
    out.name = seq.name;
    Ok(out)
}

/// Outcome of checking a sequence against a target unitary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verification {
    /// `|tr(T†U)|/2ⁿ`.
    pub strict_fidelity: f64,
    /// Best fidelity after a single-spin z-phase correction `D = ⊗ diag(1, e^{iφ_k})`.
    pub local_phase_fidelity: f64,
    pub unitarity_error: f64,
    /// `strict_fidelity ≥ 1 − VERIFY_TOL`.
    pub pass: bool,
}

/// Fidelity of `u` against `target` when arbitrary single-spin z-phases may be
/// appended. The phases are estimated from neighbouring diagonal ratios of
/// `target†u`; the figure is exact when that product is a local-phase diagonal
/// and a lower bound otherwise.
pub fn local_phase_fidelity(target: &Operator, u: &Operator) -> f64 {
    let w = target.adjoint().matmul(u).expect("same width");
    let dim = w.dim();
    let n = w.n_qubits();
    let diag = w.diagonal();
    let phases: Vec<f64> = (0..n)
        .map(|k| {
            let bit = 1 << (n - 1 - k);
            let sum: C64 = (0..dim)
                .filter(|x| x & bit != 0)
                .map(|x| diag[x] * diag[x ^ bit].conj())
                .sum();
            sum.arg()
        })
        .collect();
    let corrected: C64 = (0..dim)
        .map(|x| {
            let phi: f64 = (0..n)
                .filter(|k| x >> (n - 1 - k) & 1 == 1)
                .map(|k| phases[k])
                .sum();
            diag[x] * C64::from_polar(1.0, -phi)
        })
        .sum();
    corrected.norm() / dim as f64
}

pub fn verify_sequence(sys: &SpinSystem, seq: &PulseSequence, target: &Operator) -> Result<Verification> {
    let u = sequence_propagator(sys, seq)?;
    let cmp = global_phase_equal(target, &u, VERIFY_TOL)?;
    Ok(Verification {
        strict_fidelity: cmp.fidelity,
        local_phase_fidelity: local_phase_fidelity(target, &u).max(cmp.fidelity),
        unitarity_error: u.unitarity_error(),
        pass: cmp.equal,
    })
}

/// Compile `f` and check the result against its phase oracle.
pub fn compile_and_verify(
    sys: &SpinSystem,
    f: &BooleanFunction,
    mode: ZMode,
) -> Result<(PulseSequence, Verification)> {
    let seq = compile_oracle(sys, f, mode)?;
    let target = build_phase_oracle(f)?.to_operator();
    let v = verify_sequence(sys, &seq, &target)?;
    Ok((seq, v))
}
