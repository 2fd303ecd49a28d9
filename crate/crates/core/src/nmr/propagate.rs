//! Propagators for pulses, free evolution and whole sequences.
//!
//! Conventions: `I_a = σ_a/2`, a pulse of angle θ about `a` is the active
//! rotation `exp(−iθ I_a)` (about `−a` the generator is negated), and free
//! evolution uses the weak-coupling Hamiltonian
//! `H/2π = Σ_i ν_i I_z^i + Σ_{i<j} J_ij I_z^i I_z^j` with ν, J in Hz.
//! A spin in basis state 0 has `m = +½`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::nmr::pulse::{check_angle, composite_z_pulses, Axis, PulseElement, PulseSequence};
use crate::nmr::SpinSystem;
use crate::qcore::{kron, Operator, C64};

/// Spin quantum number `m` of `spin` (1-based) in basis state `x`.
pub fn magnetic_number(x: usize, spin: usize, n: usize) -> f64 {
    if x >> (n - spin) & 1 == 0 {
        0.5
    } else {
        -0.5
    }
}

/// `exp(−iθ σ_a/2)` for one spin.
fn single_rotation(axis: Axis, angle: f64) -> Operator {
    let (base, sign) = axis.split();
    let half = sign * angle / 2.0;
    let (s, c) = half.sin_cos();
    let cos = C64::new(c, 0.0);
    let pauli = match base {
        Axis::X => Operator::pauli_x(),
        Axis::Y => Operator::pauli_y(),
        _ => Operator::pauli_z(),
    };
    Operator::identity(2)
        .scale(cos)
        .add(&pauli.scale(C64::new(0.0, -s)))
        .expect("2x2")
}

/// `exp(−i·angle·Σ_{k∈spins} I_axis^k)`.
pub fn rotation_propagator(
    sys: &SpinSystem,
    spins: &[usize],
    axis: Axis,
    angle: f64,
) -> Result<Operator> {
    if spins.is_empty() {
        return Err(Error::InvalidSubset("rotation without spins".into()));
    }
    for &s in spins {
        sys.check_spin(s)?;
    }
    let r = single_rotation(axis, angle);
    let id = Operator::identity(2);
    Ok((1..=sys.n_spins()).fold(Operator::identity(1), |acc, k| {
        kron(&acc, if spins.contains(&k) { &r } else { &id })
    }))
}

/// Free evolution for `duration` seconds. The Hamiltonian is diagonal, so the
/// propagator is built entry by entry.
pub fn delay_propagator(sys: &SpinSystem, duration: f64) -> Result<Operator> {
    if !(duration >= 0.0) || !duration.is_finite() {
        return Err(Error::NegativeDelay(duration));
    }
    let n = sys.n_spins();
    let diag: Vec<C64> = (0..1usize << n)
        .map(|x| {
            let energy_hz = level_hz(sys, x);
            C64::from_polar(1.0, -2.0 * PI * duration * energy_hz)
        })
        .collect();
    Ok(Operator::from_diagonal(&diag))
}

/// Energy of basis state `x` in Hz.
pub fn level_hz(sys: &SpinSystem, x: usize) -> f64 {
    let n = sys.n_spins();
    let zeeman: f64 = (1..=n)
        .map(|i| sys.shift_hz(i) * magnetic_number(x, i, n))
        .sum();
    let coupling: f64 = sys
        .couplings()
        .map(|((i, j), jv)| jv * magnetic_number(x, i, n) * magnetic_number(x, j, n))
        .sum();
    zeeman + coupling
}

pub fn element_propagator(sys: &SpinSystem, element: &PulseElement) -> Result<Operator> {
    match element {
        PulseElement::Pulse { spins, axis, angle } => {
            check_angle(*angle)?;
            rotation_propagator(sys, spins, *axis, *angle)
        }
        PulseElement::Delay(d) => delay_propagator(sys, d.seconds(sys)?),
    }
}

/// Product of all element propagators, later elements on the left.
pub fn sequence_propagator(sys: &SpinSystem, seq: &PulseSequence) -> Result<Operator> {
    seq.elements
        .iter()
        .try_fold(Operator::identity(1 << sys.n_spins()), |acc, e| {
            element_propagator(sys, e)?.matmul(&acc)
        })
}

/// Composite `(θ)_z` on `spin` built from x/y hard pulses.
pub fn composite_z(sys: &SpinSystem, spin: usize, theta: f64) -> Result<PulseSequence> {
    sys.check_spin(spin)?;
    check_angle(theta)?;
    Ok(composite_z_pulses(spin, theta))
}

/// The pseudo-Hadamard `(90°)_y` on every spin.
pub fn pseudo_hadamard(sys: &SpinSystem) -> Operator {
    let all: Vec<usize> = (1..=sys.n_spins()).collect();
    rotation_propagator(sys, &all, Axis::Y, PI / 2.0).expect("all spins valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::global_phase_equal;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn conj(u: &Operator, a: &Operator) -> Operator {
        u.matmul(a).unwrap().matmul(&u.adjoint()).unwrap()
    }

    fn one_spin() -> SpinSystem {
        SpinSystem::new(vec![0.0], []).unwrap()
    }

    #[test]
    fn y_quarter_turn_is_pseudo_hadamard() {
        let r = rotation_propagator(&one_spin(), &[1], Axis::Y, PI / 2.0).unwrap();
        let h = FRAC_1_SQRT_2;
        let expected = Operator::from_real_rows(&[&[h, -h], &[h, h]]).unwrap();
        assert!(r.max_abs_diff(&expected) < 1e-15);
        // I_z → I_x
        let iz = Operator::pauli_z().scale(C64::new(0.5, 0.0));
        let ix = Operator::pauli_x().scale(C64::new(0.5, 0.0));
        assert!(conj(&r, &iz).max_abs_diff(&ix) < 1e-15);
    }

    #[test]
    fn minus_axis_inverts() {
        let sys = one_spin();
        let a = rotation_propagator(&sys, &[1], Axis::X, 0.7).unwrap();
        let b = rotation_propagator(&sys, &[1], Axis::MinusX, 0.7).unwrap();
        assert!(a.matmul(&b).unwrap().max_abs_diff(&Operator::identity(2)) < 1e-15);
    }

    #[test]
    fn composite_z_angles() {
        let sys = SpinSystem::default_three_spin();
        for theta in [0.0, PI / 4.0, PI / 2.0, PI, 1.5 * PI] {
            for spin in 1..=3 {
                let seq = composite_z(&sys, spin, theta).unwrap();
                let u = sequence_propagator(&sys, &seq).unwrap();
                let ideal = rotation_propagator(&sys, &[spin], Axis::Z, theta).unwrap();
                let cmp = global_phase_equal(&u, &ideal, 1e-12).unwrap();
                assert!(cmp.equal, "θ={theta} spin={spin} F={}", cmp.fidelity);
            }
        }
        assert!(composite_z(&sys, 4, PI).is_err());
    }

    #[test]
    fn composite_pi_is_sigma_z() {
        let sys = one_spin();
        let u = sequence_propagator(&sys, &composite_z(&sys, 1, PI).unwrap()).unwrap();
        assert!(global_phase_equal(&u, &Operator::pauli_z(), 1e-12).unwrap().equal);
    }

    #[test]
    fn zero_delay_is_identity() {
        let sys = SpinSystem::default_three_spin();
        let u = delay_propagator(&sys, 0.0).unwrap();
        assert_eq!(u, Operator::identity(8));
        assert!(delay_propagator(&sys, -1e-3).is_err());
        assert!(delay_propagator(&sys, f64::NAN).is_err());
    }

    #[test]
    fn rotation_rejects_bad_spins() {
        let sys = SpinSystem::default_three_spin();
        assert_eq!(
            rotation_propagator(&sys, &[4], Axis::X, PI).unwrap_err(),
            Error::UnknownSpin(4)
        );
        assert!(rotation_propagator(&sys, &[], Axis::X, PI).is_err());
    }
}
