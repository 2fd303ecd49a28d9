//! The ancilla oracle acting on |x>(|0>-|1>)/sqrt2 is the phase oracle in disguise.

use djnmr::oracles::{build_ancilla_oracle, build_phase_oracle, resolve_function};
use djnmr::qcore::{apply, StateVector, C64};

fn main() -> djnmr::Result<()> {
    let f = resolve_function(2, "6")?; // 0110, x1 xor x2
    let uf = build_ancilla_oracle(&f)?;
    let phase = build_phase_oracle(&f)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let minus = StateVector::new(1, vec![C64::new(s, 0.0), C64::new(-s, 0.0)])?;

    for x in 0..4 {
        let out = apply(&uf, &StateVector::basis(2, x)?.tensor(&minus)?)?;
        // amplitude on |x,0> is sign/sqrt2
        let sign = out.amplitude(x << 1).re / s;
        println!("x={x:02b}  kickback sign {sign:+.0}  phase oracle {:+}", phase.signs()[x]);
    }
    Ok(())
}
