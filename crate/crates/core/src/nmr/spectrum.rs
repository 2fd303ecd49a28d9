//! Stick spectra read directly off the deviation density matrix.
//!
//! For spin `i` and each state of the other spins, the line amplitude is
//! `⟨p|ρ|q⟩` with `q` holding spin `i` in state 0 and `p` holding it in
//! state 1. The line sits at `νᵢ + Σ_{j≠i} J_ij m_j`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::nmr::density::{evolve, thermal_state, DensityOperator};
use crate::nmr::propagate::{magnetic_number, pseudo_hadamard};
use crate::nmr::SpinSystem;
use crate::oracles::Classification;
use crate::qcore::C64;

pub const CSV_HEADER: &str = "spin,frequency_hz,amp_real,amp_imag,partner_config";

#[derive(Debug, Clone, PartialEq)]
pub struct StickLine {
    pub spin: usize,
    pub frequency_hz: f64,
    pub amplitude: C64,
    /// States of the other spins in ascending spin order, `0` meaning `m = +½`.
    pub partner_config: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct StickSpectrum {
    pub lines: Vec<StickLine>,
    /// Lines of different spins that fall on the same frequency.
    pub warnings: Vec<String>,
}

fn partner_string(x: usize, spin: usize, n: usize) -> String {
    (1..=n)
        .filter(|&j| j != spin)
        .map(|j| if x >> (n - j) & 1 == 0 { '0' } else { '1' })
        .collect()
}

pub fn render_spectrum(rho: &DensityOperator, sys: &SpinSystem) -> Result<StickSpectrum> {
    let n = sys.n_spins();
    if rho.n_spins() != n {
        return Err(Error::DimensionMismatch(rho.n_spins(), n));
    }
    let m = rho.matrix();
    let mut lines = Vec::with_capacity(n << (n - 1));
    for spin in 1..=n {
        let bit = 1 << (n - spin);
        for q in (0..1usize << n).filter(|q| q & bit == 0) {
            let p = q | bit;
            let frequency_hz = sys.shift_hz(spin)
                + (1..=n)
                    .filter(|&j| j != spin)
                    .map(|j| sys.coupling_hz(spin, j) * magnetic_number(q, j, n))
                    .sum::<f64>();
            lines.push(StickLine {
                spin,
                frequency_hz,
                amplitude: m[(p, q)],
                partner_config: partner_string(q, spin, n),
            });
        }
    }
    lines.sort_by(|a, b| {
        a.spin
            .cmp(&b.spin)
            .then(a.frequency_hz.total_cmp(&b.frequency_hz))
            .then_with(|| a.partner_config.cmp(&b.partner_config))
    });
    let mut warnings = Vec::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if a.spin != b.spin && (a.frequency_hz - b.frequency_hz).abs() < 1e-6 {
                warnings.push(format!(
                    "spin {} and spin {} lines coincide at {:.6} Hz",
                    a.spin, b.spin, a.frequency_hz
                ));
            }
        }
    }
    Ok(StickSpectrum { lines, warnings })
}

/// Spectrum after the pseudo-Hadamard alone, which is what every constant
/// function produces. Phases of other runs are judged against it.
pub fn reference_spectrum(sys: &SpinSystem) -> StickSpectrum {
    let rho = evolve(&thermal_state(sys), &pseudo_hadamard(sys)).expect("matching widths");
    render_spectrum(&rho, sys).expect("matching widths")
}

fn fmt_num(v: f64, places: usize) -> String {
    let s = format!("{v:.places$}");
    // no "-0.000…"
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

impl StickSpectrum {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for l in &self.lines {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                l.spin,
                fmt_num(l.frequency_hz, 6),
                fmt_num(l.amplitude.re, 9),
                fmt_num(l.amplitude.im, 9),
                l.partner_config
            );
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        match rows.next() {
            Some((_, h)) if h.trim() == CSV_HEADER => {}
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("expected header {CSV_HEADER:?}"),
                })
            }
        }
        let mut lines = Vec::new();
        for (idx, row) in rows {
            let bad = |what: &str| Error::Parse {
                line: idx + 1,
                message: format!("bad {what}"),
            };
            let fields: Vec<&str> = row.trim().split(',').collect();
            if fields.len() != 5 {
                return Err(bad("field count"));
            }
            let spin = fields[0].parse().map_err(|_| bad("spin"))?;
            let frequency_hz = fields[1].parse().map_err(|_| bad("frequency"))?;
            let re = fields[2].parse().map_err(|_| bad("amp_real"))?;
            let im = fields[3].parse().map_err(|_| bad("amp_imag"))?;
            if !fields[4].chars().all(|c| c == '0' || c == '1') {
                return Err(bad("partner_config"));
            }
            lines.push(StickLine {
                spin,
                frequency_hz,
                amplitude: C64::new(re, im),
                partner_config: fields[4].to_string(),
            });
        }
        Ok(Self {
            lines,
            warnings: Vec::new(),
        })
    }

    pub fn lines_for(&self, spin: usize) -> impl Iterator<Item = &StickLine> {
        self.lines.iter().filter(move |l| l.spin == spin)
    }
}

/// Shape of one spin's multiplet relative to the reference run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultipletPattern {
    /// Every line has the reference phase.
    InPhase,
    /// Every line has the opposite phase.
    Inverted,
    /// Both signs present and the multiplet integrates to zero.
    Antiphase,
    /// No observable intensity.
    Absent,
    /// Anything else, e.g. dispersive or partially refocused lines.
    Mixed,
}

impl std::fmt::Display for MultipletPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MultipletPattern::InPhase => "in-phase",
            MultipletPattern::Inverted => "inverted",
            MultipletPattern::Antiphase => "antiphase",
            MultipletPattern::Absent => "absent",
            MultipletPattern::Mixed => "mixed",
        })
    }
}

const PHASE_TOL: f64 = 1e-6;

/// Projection of `line` on its reference line, in units of the reference.
fn relative_phase(line: &StickLine, reference: &StickLine) -> f64 {
    let r = reference.amplitude;
    if r.norm_sqr() == 0.0 {
        return 0.0;
    }
    (line.amplitude * r.conj()).re / r.norm_sqr()
}

fn reference_line<'a>(reference: &'a StickSpectrum, line: &StickLine) -> Result<&'a StickLine> {
    reference
        .lines
        .iter()
        .find(|r| r.spin == line.spin && r.partner_config == line.partner_config)
        .ok_or_else(|| {
            Error::InvalidSpinSystem(format!(
                "no reference line for spin {} config {:?}",
                line.spin, line.partner_config
            ))
        })
}

/// Phase picture of a spectrum against the constant-function reference.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralVerdict {
    pub kind: Classification,
    /// One entry per spin, in spin order.
    pub patterns: Vec<(usize, MultipletPattern)>,
}

pub fn multiplet_pattern(
    spectrum: &StickSpectrum,
    reference: &StickSpectrum,
    spin: usize,
) -> Result<MultipletPattern> {
    let mut projections = Vec::new();
    let mut quadrature = 0.0f64;
    for line in spectrum.lines_for(spin) {
        let r = reference_line(reference, line)?;
        let p = relative_phase(line, r);
        let total = line.amplitude.norm() / r.amplitude.norm().max(f64::MIN_POSITIVE);
        quadrature = quadrature.max((total * total - p * p).max(0.0).sqrt());
        projections.push(p);
    }
    if projections.is_empty() {
        return Err(Error::UnknownSpin(spin));
    }
    let pos = projections.iter().filter(|&&p| p > 0.5).count();
    let neg = projections.iter().filter(|&&p| p < -0.5).count();
    let sum: f64 = projections.iter().sum();
    let all = projections.len();
    Ok(if quadrature > PHASE_TOL {
        MultipletPattern::Mixed
    } else if projections.iter().all(|p| p.abs() < PHASE_TOL) {
        MultipletPattern::Absent
    } else if pos == all {
        MultipletPattern::InPhase
    } else if neg == all {
        MultipletPattern::Inverted
    } else if pos > 0 && neg > 0 && pos + neg == all && sum.abs() < PHASE_TOL {
        MultipletPattern::Antiphase
    } else {
        MultipletPattern::Mixed
    })
}

/// Constant iff every line is in phase with the reference.
pub fn spectral_verdict(
    spectrum: &StickSpectrum,
    reference: &StickSpectrum,
) -> Result<SpectralVerdict> {
    let mut spins: Vec<usize> = spectrum.lines.iter().map(|l| l.spin).collect();
    spins.sort_unstable();
    spins.dedup();
    let patterns = spins
        .iter()
        .map(|&s| multiplet_pattern(spectrum, reference, s).map(|p| (s, p)))
        .collect::<Result<Vec<_>>>()?;
    let kind = if patterns.iter().all(|(_, p)| *p == MultipletPattern::InPhase) {
        Classification::Constant
    } else {
        Classification::Balanced
    };
    Ok(SpectralVerdict { kind, patterns })
}
