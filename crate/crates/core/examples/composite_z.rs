//! z rotations from x/y hard pulses, compared with the ideal rotation.

use std::f64::consts::PI;

use djnmr::nmr::{composite_z, rotation_propagator, sequence_propagator, to_program_text, Axis, SpinSystem};
use djnmr::qcore::global_phase_equal;

fn main() -> djnmr::Result<()> {
    let sys = SpinSystem::default_three_spin();
    print!("{}", to_program_text(&composite_z(&sys, 2, PI)?));
    for theta in [PI / 4.0, PI / 2.0, PI, 3.0 * PI / 2.0] {
        let ideal = rotation_propagator(&sys, &[2], Axis::Z, theta)?;
        let built = sequence_propagator(&sys, &composite_z(&sys, 2, theta)?)?;
        let cmp = global_phase_equal(&ideal, &built, 1e-12)?;
        println!("theta {:>5.1} deg  fidelity {:.15}", theta.to_degrees(), cmp.fidelity);
    }
    Ok(())
}
