//! Which three-bit oracles split into smaller factors, and where.

use djnmr::entangle::{factorizes_over, finest_factorization};
use djnmr::oracles::canonical_operators;

fn main() -> djnmr::Result<()> {
    for op in canonical_operators(3)? {
        let class = finest_factorization(&op.oracle);
        let splits: Vec<String> = (1..=3)
            .filter(|&q| factorizes_over(&op.oracle, &[q]).unwrap_or(false))
            .map(|q| format!("{{{q}}}"))
            .collect();
        println!(
            "{:<3} {:<20} {:<10} single-spin splits: {}",
            op.name,
            class.kind.to_string(),
            class.finest_partition.to_string(),
            if splits.is_empty() { "none".into() } else { splits.join(" ") }
        );
    }
    Ok(())
}
