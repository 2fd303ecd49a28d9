//! Spin systems from JSON, including unequal polarization weights.

use djnmr::nmr::{run_experiment, SpinSystem, ZMode};
use djnmr::oracles::resolve_function;

const CONFIG: &str = r#"{
  "n_spins": 2,
  "shifts_hz": [2588.0, 2516.0],
  "couplings_hz": { "1,2": 3.6 },
  "weights": [1.0, 0.25]
}"#;

fn main() -> djnmr::Result<()> {
    let sys = SpinSystem::from_json(CONFIG)?;
    let f = resolve_function(2, "U4")?; // Z (x) Z
    let exp = run_experiment(&sys, &f, ZMode::Ideal)?;
    for line in &exp.spectrum.lines {
        println!(
            "spin {} {:>9.3} Hz  {:+.3}  partners {}",
            line.spin, line.frequency_hz, line.amplitude.re, line.partner_config
        );
    }
    println!("{}", exp.verdict.kind);

    if let Err(e) = SpinSystem::from_json(r#"{"n_spins": 1, "shifts_hz": [1.0], "colour": 3}"#) {
        println!("rejected: {e}");
    }
    Ok(())
}
