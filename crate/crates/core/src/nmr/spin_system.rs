use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_SPINS: usize = 3;

/// Weakly coupled spin-½ system: resonance offsets, scalar couplings and
/// thermal polarization weights. Spins are numbered from 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinSystem {
    shifts_hz: Vec<f64>,
    couplings_hz: BTreeMap<(usize, usize), f64>,
    weights: Vec<f64>,
}

/// On-disk form of a [`SpinSystem`].
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinSystemConfig {
    pub n_spins: usize,
    pub shifts_hz: Vec<f64>,
    #[serde(default)]
    pub couplings_hz: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
}

impl SpinSystem {
    pub fn new(
        shifts_hz: Vec<f64>,
        couplings: impl IntoIterator<Item = ((usize, usize), f64)>,
    ) -> Result<Self> {
        let n = shifts_hz.len();
        Self::with_weights(shifts_hz, couplings, vec![1.0; n])
    }

    pub fn with_weights(
        shifts_hz: Vec<f64>,
        couplings: impl IntoIterator<Item = ((usize, usize), f64)>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        let n = shifts_hz.len();
        if !(1..=MAX_SPINS).contains(&n) {
            return Err(Error::QubitCount(n, "1..=3 spins"));
        }
        if weights.len() != n {
            return Err(Error::InvalidSpinSystem(format!(
                "{} weights for {n} spins",
                weights.len()
            )));
        }
        if shifts_hz.iter().chain(&weights).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("spin system"));
        }
        let mut couplings_hz = BTreeMap::new();
        for ((a, b), j) in couplings {
            let key = (a.min(b), a.max(b));
            if key.0 == 0 || key.1 > n || key.0 == key.1 {
                return Err(Error::InvalidSpinSystem(format!("coupling ({a},{b})")));
            }
            if !j.is_finite() {
                return Err(Error::NonFinite("coupling"));
            }
            if couplings_hz.insert(key, j).is_some() {
                return Err(Error::InvalidSpinSystem(format!("duplicate coupling ({a},{b})")));
            }
        }
        Ok(Self {
            shifts_hz,
            couplings_hz,
            weights,
        })
    }

    pub fn from_config(cfg: &SpinSystemConfig) -> Result<Self> {
        if cfg.shifts_hz.len() != cfg.n_spins {
            return Err(Error::Config(format!(
                "n_spins = {} but {} shifts given",
                cfg.n_spins,
                cfg.shifts_hz.len()
            )));
        }
        let couplings = cfg
            .couplings_hz
            .iter()
            .map(|(key, &j)| parse_pair(key).map(|p| (p, j)))
            .collect::<Result<Vec<_>>>()?;
        let weights = cfg
            .weights
            .clone()
            .unwrap_or_else(|| vec![1.0; cfg.n_spins]);
        Self::with_weights(cfg.shifts_hz.clone(), couplings, weights)
    }

    pub fn to_config(&self) -> SpinSystemConfig {
        SpinSystemConfig {
            n_spins: self.n_spins(),
            shifts_hz: self.shifts_hz.clone(),
            couplings_hz: self
                .couplings_hz
                .iter()
                .map(|(&(a, b), &j)| (format!("{a},{b}"), j))
                .collect(),
            weights: Some(self.weights.clone()),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SpinSystemConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        Self::from_config(&cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// The three-spin default: offsets (300, 150, 0) Hz, J₁₂ = 10, J₂₃ = 7,
    /// J₁₃ = 4 Hz.
    pub fn default_three_spin() -> Self {
        Self::new(
            vec![300.0, 150.0, 0.0],
            [((1, 2), 10.0), ((2, 3), 7.0), ((1, 3), 4.0)],
        )
        .expect("valid defaults")
    }

    pub fn n_spins(&self) -> usize {
        self.shifts_hz.len()
    }

    pub fn shifts_hz(&self) -> &[f64] {
        &self.shifts_hz
    }

    pub fn shift_hz(&self, spin: usize) -> f64 {
        self.shifts_hz[spin - 1]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `J_ij` in Hz, 0 when the pair is uncoupled.
    pub fn coupling_hz(&self, i: usize, j: usize) -> f64 {
        self.couplings_hz
            .get(&(i.min(j), i.max(j)))
            .copied()
            .unwrap_or(0.0)
    }

    pub fn couplings(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.couplings_hz.iter().map(|(&k, &v)| (k, v))
    }

    /// Nonzero coupling for a delay expression.
    pub fn require_coupling(&self, i: usize, j: usize) -> Result<f64> {
        self.check_spin(i)?;
        self.check_spin(j)?;
        let jv = self.coupling_hz(i, j);
        if i == j || jv == 0.0 {
            Err(Error::MissingCoupling(i, j))
        } else {
            Ok(jv)
        }
    }

    pub fn check_spin(&self, spin: usize) -> Result<()> {
        if spin == 0 || spin > self.n_spins() {
            Err(Error::UnknownSpin(spin))
        } else {
            Ok(())
        }
    }

    /// Same system with new offsets.
    pub fn with_shifts(&self, shifts_hz: Vec<f64>) -> Result<Self> {
        Self::with_weights(shifts_hz, self.couplings(), self.weights.clone())
    }
}

fn parse_pair(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::Config(format!("coupling key {key:?} is not \"i,j\""));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}
