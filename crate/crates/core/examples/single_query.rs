//! One oracle call decides constant vs balanced for every named operator.

use djnmr::oracles::{canonical_operators, run_dj};

fn main() -> djnmr::Result<()> {
    for n in 1..=3 {
        for op in canonical_operators(n)? {
            let f = op.function();
            let (_, verdict) = run_dj(&f)?;
            println!(
                "n={n} {:<3} {:<40} table {}  |<0|psi>| = {:.3}  {}",
                op.name,
                op.expression,
                f.bit_string(),
                verdict.zero_state_amplitude.norm(),
                verdict.kind
            );
        }
    }
    Ok(())
}
