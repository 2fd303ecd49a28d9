//! Full NMR run for U6: final product operators, stick spectrum, verdict.

use djnmr::nmr::{product_operator_decomposition, run_experiment, SpinSystem, ZMode};
use djnmr::oracles::canonical_by_name;

fn main() -> djnmr::Result<()> {
    let sys = SpinSystem::default_three_spin();
    let f = canonical_by_name(3, "U6")?.function();
    let exp = run_experiment(&sys, &f, ZMode::Ideal)?;

    for term in product_operator_decomposition(&exp.rho_final) {
        println!("{term}");
    }
    print!("\n{}", exp.spectrum.to_csv());
    for (spin, pattern) in &exp.verdict.patterns {
        println!("spin {spin}: {pattern}");
    }
    println!("{}", exp.verdict.kind);
    Ok(())
}
