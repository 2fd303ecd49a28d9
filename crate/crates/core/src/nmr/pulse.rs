use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::nmr::SpinSystem;

/// Rotation axis in the rotating frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    MinusX,
    Y,
    MinusY,
    Z,
    MinusZ,
}

impl Axis {
    pub fn parse(token: &str) -> Option<Self> {
        Some(match token.to_ascii_lowercase().as_str() {
            "x" | "+x" => Axis::X,
            "-x" => Axis::MinusX,
            "y" | "+y" => Axis::Y,
            "-y" => Axis::MinusY,
            "z" | "+z" => Axis::Z,
            "-z" => Axis::MinusZ,
            _ => return None,
        })
    }

    pub fn is_z(self) -> bool {
        matches!(self, Axis::Z | Axis::MinusZ)
    }

    /// `(base axis, sign)`, so `−x` is `(X, −1)`.
    pub fn split(self) -> (Axis, f64) {
        match self {
            Axis::MinusX => (Axis::X, -1.0),
            Axis::MinusY => (Axis::Y, -1.0),
            Axis::MinusZ => (Axis::Z, -1.0),
            a => (a, 1.0),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::MinusX => "-x",
            Axis::Y => "y",
            Axis::MinusY => "-y",
            Axis::Z => "z",
            Axis::MinusZ => "-z",
        })
    }
}

/// How ideal z-rotations are realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ZMode {
    /// Instantaneous z-rotation.
    #[default]
    Ideal,
    /// `(π/2)_{−x} (θ)_y (π/2)_x` in time order.
    Composite,
}

/// Delay length, either absolute or tied to a coupling constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DelaySpec {
    Seconds(f64),
    /// `num / (den · |J_ij|)` seconds.
    Coupling {
        num: u32,
        den: u32,
        i: usize,
        j: usize,
    },
}

impl DelaySpec {
    pub fn seconds(&self, sys: &SpinSystem) -> Result<f64> {
        match *self {
            DelaySpec::Seconds(s) if s < 0.0 || !s.is_finite() => Err(Error::NegativeDelay(s)),
            DelaySpec::Seconds(s) => Ok(s),
            DelaySpec::Coupling { num, den, i, j } => {
                let jv = sys.require_coupling(i, j)?;
                Ok(num as f64 / (den as f64 * jv.abs()))
            }
        }
    }
}

impl fmt::Display for DelaySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DelaySpec::Seconds(s) => write!(f, "{s}"),
            DelaySpec::Coupling { num, den: 1, i, j } => write!(f, "{num}/J({i},{j})"),
            DelaySpec::Coupling { num, den, i, j } => write!(f, "{num}/{den}J({i},{j})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PulseElement {
    /// Instantaneous rotation `exp(−i·angle·Σ_k I_axis^k)`; spins are 1-based.
    Pulse {
        spins: Vec<usize>,
        axis: Axis,
        angle: f64,
    },
    Delay(DelaySpec),
}

impl PulseElement {
    pub fn pulse(spins: &[usize], axis: Axis, angle: f64) -> Self {
        let mut spins = spins.to_vec();
        spins.sort_unstable();
        spins.dedup();
        PulseElement::Pulse { spins, axis, angle }
    }

    pub fn z(spin: usize, angle: f64) -> Self {
        Self::pulse(&[spin], Axis::Z, angle)
    }

    pub fn validate(&self, sys: &SpinSystem) -> Result<()> {
        match self {
            PulseElement::Pulse { spins, angle, .. } => {
                if spins.is_empty() {
                    return Err(Error::InvalidSubset("pulse without spins".into()));
                }
                for &s in spins {
                    sys.check_spin(s)?;
                }
                check_angle(*angle)
            }
            PulseElement::Delay(d) => d.seconds(sys).map(|_| ()),
        }
    }
}

/// Angles live in `(−2π, 2π]`.
pub fn check_angle(angle: f64) -> Result<()> {
    const EPS: f64 = 1e-12;
    if angle.is_finite() && angle > -2.0 * PI + EPS && angle <= 2.0 * PI + EPS {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange(angle))
    }
}

/// Named, ordered list of pulses and delays (first element acts first).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PulseSequence {
    pub name: String,
    pub elements: Vec<PulseElement>,
}

impl PulseSequence {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            elements: Vec::new(),
        }
    }

    pub fn push(&mut self, element: PulseElement) -> &mut Self {
        self.elements.push(element);
        self
    }

    pub fn extend(&mut self, other: &PulseSequence) -> &mut Self {
        self.elements.extend(other.elements.iter().cloned());
        self
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn validate(&self, sys: &SpinSystem) -> Result<()> {
        self.elements.iter().try_for_each(|e| e.validate(sys))
    }

    /// Total free-evolution time.
    pub fn duration(&self, sys: &SpinSystem) -> Result<f64> {
        self.elements
            .iter()
            .map(|e| match e {
                PulseElement::Delay(d) => d.seconds(sys),
                PulseElement::Pulse { .. } => Ok(0.0),
            })
            .sum()
    }

    /// Rewrite every z-rotation for the given mode.
    pub fn expand_z(&self, mode: ZMode) -> PulseSequence {
        let mut out = PulseSequence::new(self.name.clone());
        for e in &self.elements {
            match (e, mode) {
                (PulseElement::Pulse { spins, axis, angle }, ZMode::Composite) if axis.is_z() => {
                    let (_, sign) = axis.split();
                    for &s in spins {
                        out.extend(&composite_z_pulses(s, sign * angle));
                    }
                }
                _ => {
                    out.push(e.clone());
                }
            }
        }
        out
    }
}

/// `(θ)_z` on one spin from x/y hard pulses: `(π/2)_{−x}`, `(θ)_y`, `(π/2)_x`
/// in time order, which composes to exactly `exp(−iθ I_z)`.
pub(crate) fn composite_z_pulses(spin: usize, theta: f64) -> PulseSequence {
    let mut seq = PulseSequence::new(format!("composite z({spin})"));
    seq.push(PulseElement::pulse(&[spin], Axis::MinusX, PI / 2.0))
        .push(PulseElement::pulse(&[spin], Axis::Y, theta))
        .push(PulseElement::pulse(&[spin], Axis::X, PI / 2.0));
    seq
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_tokens() {
        assert_eq!(Axis::parse("-X"), Some(Axis::MinusX));
        assert_eq!(Axis::parse("y"), Some(Axis::Y));
        assert_eq!(Axis::parse("w"), None);
        assert_eq!(Axis::MinusY.to_string(), "-y");
    }

    #[test]
    fn coupling_delay_resolution() {
        let sys = SpinSystem::new(vec![0.0, 0.0, 0.0], [((2, 3), 7.0)]).unwrap();
        let d = DelaySpec::Coupling {
            num: 1,
            den: 2,
            i: 2,
            j: 3,
        };
        assert!((d.seconds(&sys).unwrap() - 0.0714285714).abs() < 1e-10);
        assert_eq!(d.to_string(), "1/2J(2,3)");
        let missing = DelaySpec::Coupling {
            num: 1,
            den: 1,
            i: 1,
            j: 2,
        };
        assert_eq!(missing.seconds(&sys), Err(Error::MissingCoupling(1, 2)));
        assert!(DelaySpec::Seconds(-1.0).seconds(&sys).is_err());
    }

    #[test]
    fn angle_range() {
        assert!(check_angle(2.0 * PI).is_ok());
        assert!(check_angle(-PI / 2.0).is_ok());
        assert!(check_angle(-2.0 * PI).is_err());
        assert!(check_angle(7.0).is_err());
    }

    #[test]
    fn composite_expansion_shape() {
        let mut seq = PulseSequence::new("t");
        seq.push(PulseElement::z(1, PI));
        let c = seq.expand_z(ZMode::Composite);
        assert_eq!(c.len(), 3);
        assert_eq!(seq.expand_z(ZMode::Ideal), seq);
    }
}
