//! Decide constant/balanced from a spectrum alone, as a spectroscopist would.

use djnmr::nmr::{reference_spectrum, run_experiment, spectral_verdict, SpinSystem, StickSpectrum, ZMode};
use djnmr::oracles::enumerate_functions;

fn main() -> djnmr::Result<()> {
    let sys = SpinSystem::default_three_spin();
    let reference = reference_spectrum(&sys);
    let mut agree = 0;
    let fs = enumerate_functions(3)?;
    for f in &fs {
        let csv = run_experiment(&sys, f, ZMode::Ideal)?.spectrum.to_csv();
        // only the CSV crosses this line
        let verdict = spectral_verdict(&StickSpectrum::from_csv(&csv)?, &reference)?;
        if verdict.kind == f.classify() {
            agree += 1;
        }
    }
    println!("{agree}/{} spectral verdicts match the truth table", fs.len());
    Ok(())
}
