//! Compile every three-bit promise function and check it against its oracle.

use djnmr::nmr::{compile_and_verify, to_program_text, SpinSystem, ZMode};
use djnmr::oracles::{canonical_by_name, enumerate_functions};

fn main() -> djnmr::Result<()> {
    let sys = SpinSystem::default_three_spin();

    let u9 = canonical_by_name(3, "U9")?.function();
    let (seq, v) = compile_and_verify(&sys, &u9, ZMode::Ideal)?;
    print!("{}", to_program_text(&seq));
    println!("# {:.2} ms, fidelity {:.12}\n", seq.duration(&sys)? * 1e3, v.strict_fidelity);

    let mut worst = 1.0f64;
    let mut longest = 0.0f64;
    for f in enumerate_functions(3)? {
        let (seq, v) = compile_and_verify(&sys, &f, ZMode::Composite)?;
        worst = worst.min(v.strict_fidelity);
        longest = longest.max(seq.duration(&sys)?);
    }
    println!("72 functions, composite z: worst fidelity {worst:.12}, longest {:.1} ms", longest * 1e3);
    Ok(())
}
