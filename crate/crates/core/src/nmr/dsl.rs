//! Line-oriented pulse program text.
//!
//! ```text
//! # comments run to end of line
//! PULSE  <spin-list> <axis> <angle-deg>     PULSE 2,3 x 180
//! DELAY  <seconds | k/mJ(i,j) | k/J(i,j)>   DELAY 1/2J(2,3)
//! ZPULSE <spin> <angle-deg>                 ZPULSE 1 180
//! ```
//!
//! `ZPULSE` becomes an ideal z-rotation or its composite expansion depending
//! on the [`ZMode`] passed to [`parse_sequence`].

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::nmr::pulse::{Axis, DelaySpec, PulseElement, PulseSequence, ZMode};
use crate::nmr::SpinSystem;

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_spins(line: usize, token: &str) -> Result<Vec<usize>> {
    token
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| syntax(line, format!("bad spin list {token:?}")))
        })
        .collect()
}

fn parse_degrees(line: usize, token: &str) -> Result<f64> {
    let deg: f64 = token
        .parse()
        .map_err(|_| syntax(line, format!("bad angle {token:?}")))?;
    if !deg.is_finite() {
        return Err(syntax(line, format!("bad angle {token:?}")));
    }
    Ok(deg.to_radians())
}

fn parse_delay(line: usize, token: &str) -> Result<DelaySpec> {
    let bad = || syntax(line, format!("bad delay {token:?}"));
    let Some(jpos) = token.find(['J', 'j']) else {
        let s: f64 = token.parse().map_err(|_| bad())?;
        if !s.is_finite() || s < 0.0 {
            return Err(syntax(line, format!("negative or non-finite delay {token:?}")));
        }
        return Ok(DelaySpec::Seconds(s));
    };
    let (ratio, rest) = token.split_at(jpos);
    let (num, den) = ratio.split_once('/').ok_or_else(bad)?;
    let num: u32 = num.parse().map_err(|_| bad())?;
    let den: u32 = if den.is_empty() {
        1
    } else {
        den.parse().map_err(|_| bad())?
    };
    let pair = rest[1..]
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (i, j) = pair.split_once(',').ok_or_else(bad)?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    if num == 0 || den == 0 {
        return Err(bad());
    }
    Ok(DelaySpec::Coupling { num, den, i, j })
}

/// Parse and validate a program against `sys`.
pub fn parse_sequence(text: &str, sys: &SpinSystem, mode: ZMode) -> Result<PulseSequence> {
    let mut seq = PulseSequence::new("program");
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let element = match (tokens[0].to_ascii_uppercase().as_str(), &tokens[1..]) {
            ("PULSE", [spins, axis, angle]) => {
                let axis = Axis::parse(axis)
                    .ok_or_else(|| syntax(line, format!("bad axis {axis:?}")))?;
                PulseElement::pulse(&parse_spins(line, spins)?, axis, parse_degrees(line, angle)?)
            }
            ("ZPULSE", [spin, angle]) => {
                let spins = parse_spins(line, spin)?;
                if spins.len() != 1 {
                    return Err(syntax(line, "ZPULSE takes a single spin"));
                }
                PulseElement::z(spins[0], parse_degrees(line, angle)?)
            }
            ("DELAY", [value]) => PulseElement::Delay(parse_delay(line, value)?),
            ("PULSE", _) => return Err(syntax(line, "expected PULSE <spins> <axis> <angle>")),
            ("ZPULSE", _) => return Err(syntax(line, "expected ZPULSE <spin> <angle>")),
            ("DELAY", _) => return Err(syntax(line, "expected DELAY <duration>")),
            (kw, _) => return Err(syntax(line, format!("unknown directive {kw:?}"))),
        };
        element.validate(sys).map_err(|e| syntax(line, e.to_string()))?;
        seq.push(element);
    }
    Ok(seq.expand_z(mode))
}

fn format_degrees(rad: f64) -> String {
    let deg = rad.to_degrees();
    let rounded = deg.round();
    if (deg - rounded).abs() < 1e-9 {
        format!("{}", rounded as i64)
    } else {
        let s = format!("{deg:.6}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

/// Render a sequence as program text. Single-spin `+z` rotations are written
/// as `ZPULSE`, so ideal-mode output parses back to the same sequence.
pub fn to_program_text(seq: &PulseSequence) -> String {
    let mut out = String::new();
    if !seq.name.is_empty() {
        let _ = writeln!(out, "# {}", seq.name);
    }
    for e in &seq.elements {
        match e {
            PulseElement::Pulse { spins, axis, angle } => {
                if *axis == Axis::Z && spins.len() == 1 {
                    let _ = writeln!(out, "ZPULSE {} {}", spins[0], format_degrees(*angle));
                } else {
                    let list: Vec<String> = spins.iter().map(usize::to_string).collect();
                    let _ = writeln!(
                        out,
                        "PULSE {} {} {}",
                        list.join(","),
                        axis,
                        format_degrees(*angle)
                    );
                }
            }
            PulseElement::Delay(d) => {
                let _ = writeln!(out, "DELAY {d}");
            }
        }
    }
    out
}
