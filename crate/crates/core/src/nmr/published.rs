//! The two entangling sequences exactly as published, with `τ_ij = 1/J_ij`
//! and no closing pulses. Useful for comparing against [`compile_oracle`]
//! output; see the `published_sequences` example.
//!
//! [`compile_oracle`]: crate::nmr::compile_oracle

use crate::error::Result;
use crate::nmr::dsl::parse_sequence;
use crate::nmr::pulse::{PulseSequence, ZMode};
use crate::nmr::SpinSystem;

/// `[π/2]²_z [π/2]³_z -- τ₂₃/2 -- [π]²_x [π]³_x -- τ₂₃/2 -- [π]¹_z`
pub const U6_AS_PRINTED: &str = "\
ZPULSE 2 90
ZPULSE 3 90
DELAY 1/2J(2,3)
PULSE 2,3 x 180
DELAY 1/2J(2,3)
ZPULSE 1 180
";

/// `[π/2]¹_z [π/2]³_z -- τ₁₂/2 -- [π]¹_x [π]²_x -- (τ₁₂+τ₂₃)/2 -- [π]²_x [π]³_x -- τ₂₃/2`
pub const U9_AS_PRINTED: &str = "\
ZPULSE 1 90
ZPULSE 3 90
DELAY 1/2J(1,2)
PULSE 1,2 x 180
DELAY 1/2J(1,2)
DELAY 1/2J(2,3)
PULSE 2,3 x 180
DELAY 1/2J(2,3)
";

pub fn u6_as_printed(sys: &SpinSystem, mode: ZMode) -> Result<PulseSequence> {
    let mut seq = parse_sequence(U6_AS_PRINTED, sys, mode)?;
    seq.name = "U6 as printed".into();
    Ok(seq)
}

pub fn u9_as_printed(sys: &SpinSystem, mode: ZMode) -> Result<PulseSequence> {
    let mut seq = parse_sequence(U9_AS_PRINTED, sys, mode)?;
    seq.name = "U9 as printed".into();
    Ok(seq)
}
