//! The two printed entangling sequences against the compiled ones.
//! With tau = 1/J the coupling evolution is a full 2pi IzIz turn and
//! entangles nothing; the compiler uses 1/(2J).

use djnmr::nmr::published::{u6_as_printed, u9_as_printed};
use djnmr::nmr::{compile_and_verify, run_sequence, verify_sequence, SpinSystem, ZMode};
use djnmr::oracles::canonical_by_name;
use djnmr::nmr::product_operator_decomposition;

fn main() -> djnmr::Result<()> {
    let sys = SpinSystem::default_three_spin();
    for (name, printed) in [("U6", u6_as_printed(&sys, ZMode::Ideal)?), ("U9", u9_as_printed(&sys, ZMode::Ideal)?)] {
        let op = canonical_by_name(3, name)?;
        let target = op.oracle.to_operator();
        let as_printed = verify_sequence(&sys, &printed, &target)?;
        let (compiled, v) = compile_and_verify(&sys, &op.function(), ZMode::Ideal)?;
        println!(
            "{name}: as printed fidelity {:.4} (local-phase {:.4}), compiled {:.12} over {} elements",
            as_printed.strict_fidelity,
            as_printed.local_phase_fidelity,
            v.strict_fidelity,
            compiled.len()
        );
        let terms: Vec<String> = product_operator_decomposition(&run_sequence(&sys, &printed)?.rho_final)
            .iter()
            .map(|t| t.to_string())
            .collect();
        println!("    as printed leaves {}", terms.join(" "));
    }
    Ok(())
}
