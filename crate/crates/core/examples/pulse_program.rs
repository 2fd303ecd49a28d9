//! Parse a pulse program, report its duration and render it back.

use djnmr::nmr::{parse_sequence, sequence_propagator, to_program_text, SpinSystem, ZMode};

const PROGRAM: &str = "\
# refocused J evolution between spins 2 and 3
PULSE 1,2,3 y 90
DELAY 1/4J(2,3)
PULSE 2,3 x 180
DELAY 1/4J(2,3)
PULSE 2,3 x 180
ZPULSE 1 180
";

fn main() -> djnmr::Result<()> {
    let sys = SpinSystem::default_three_spin();
    let seq = parse_sequence(PROGRAM, &sys, ZMode::Ideal)?;
    println!("{} elements, {:.2} ms", seq.len(), seq.duration(&sys)? * 1e3);

    let u = sequence_propagator(&sys, &seq)?;
    println!("unitarity error {:.1e}", u.unitarity_error());

    let composite = parse_sequence(PROGRAM, &sys, ZMode::Composite)?;
    print!("{}", to_program_text(&composite));

    if let Err(e) = parse_sequence("PULSE 4 x 90", &sys, ZMode::Ideal) {
        println!("rejected: {e}");
    }
    Ok(())
}
