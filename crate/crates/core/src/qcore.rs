//! Dense complex linear algebra for a handful of qubits.
//!
//! Basis index `x` encodes the bit string `x₁x₂…xₙ` with qubit 1 as the most
//! significant bit, so `|x₁x₂x₃⟩` reads left to right like the integer it
//! names. [`kron`] follows the same order: the left factor acts on the more
//! significant qubits.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Largest register this module is meant for (16×16 matrices).
pub const MAX_QUBITS: usize = 4;

/// Default tolerance used for global-phase comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCount(n, "1..=4"))
    }
}

/// Square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct Operator {
    dim: usize,
    data: Vec<C64>,
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Operator({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|c| {
                    let z = self[(r, c)];
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Operator {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for Operator {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.dim + c]
    }
}

impl Operator {
    /// Build from row-major entries. `dim` must be a power of two.
    pub fn from_rows(dim: usize, data: Vec<C64>) -> Result<Self> {
        if dim == 0 || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch(dim, dim.next_power_of_two()));
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch(data.len(), dim * dim));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("operator"));
        }
        Ok(Self { dim, data })
    }

    /// Real-valued convenience constructor, mostly for fixed gates.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(row.len(), dim));
            }
            data.extend(row.iter().map(|&v| C64::new(v, 0.0)));
        }
        Self::from_rows(dim, data)
    }

    pub fn zeros(dim: usize) -> Self {
        debug_assert!(dim.is_power_of_two());
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn identity_qubits(n: usize) -> Self {
        Self::identity(1 << n)
    }

    pub fn from_diagonal(diag: &[C64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Pauli σ_x.
    pub fn pauli_x() -> Self {
        Self::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
    }

    /// Pauli σ_y.
    pub fn pauli_y() -> Self {
        Self::from_rows(2, vec![ZERO, C64::new(0.0, -1.0), C64::new(0.0, 1.0), ZERO]).unwrap()
    }

    /// Pauli σ_z.
    pub fn pauli_z() -> Self {
        Self::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]).unwrap()
    }

    /// Single-qubit Hadamard `(1/√2)[[1,1],[1,−1]]`.
    pub fn hadamard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::from_real_rows(&[&[h, h], &[h, -h]]).unwrap()
    }

    /// Embed a single-qubit operator on `qubit` (0-based, 0 = most significant)
    /// of an `n`-qubit register.
    pub fn embed(single: &Operator, qubit: usize, n: usize) -> Self {
        assert_eq!(single.dim, 2, "embed expects a single-qubit operator");
        assert!(qubit < n, "qubit {qubit} out of range for {n} qubits");
        (0..n).fold(Operator::identity(1), |acc, k| {
            if k == qubit {
                kron(&acc, single)
            } else {
                kron(&acc, &Operator::identity(2))
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Operator) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch(self.dim, rhs.dim));
        }
        let d = self.dim;
        let mut out = Self::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                for c in 0..d {
                    out.data[r * d + c] += a * rhs.data[k * d + c];
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Operator) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch(self.dim, rhs.dim));
        }
        Ok(Self {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, rhs: &Operator) -> Result<Self> {
        self.add(&rhs.scale(-ONE))
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Largest entrywise modulus of `self − rhs`.
    pub fn max_abs_diff(&self, rhs: &Operator) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `‖U†U − I‖_max`.
    pub fn unitarity_error(&self) -> f64 {
        let prod = self.adjoint().matmul(self).expect("square");
        prod.max_abs_diff(&Operator::identity(self.dim))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_error() <= tol
    }

    pub fn hermiticity_error(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| r == c || self[(r, c)].norm() <= tol))
    }
}

/// Kronecker product; the left operand occupies the more significant qubits.
///
/// Chains are assembled left to right, `kron(kron(a, b), c)`, wherever this
/// crate builds multi-qubit operators.
pub fn kron(a: &Operator, b: &Operator) -> Operator {
    let d = a.dim * b.dim;
    let mut out = Operator::zeros(d);
    for ar in 0..a.dim {
        for ac in 0..a.dim {
            let s = a[(ar, ac)];
            if s == ZERO {
                continue;
            }
            for br in 0..b.dim {
                for bc in 0..b.dim {
                    out[(ar * b.dim + br, ac * b.dim + bc)] = s * b[(br, bc)];
                }
            }
        }
    }
    out
}

/// `H^{⊗n}` with the `2^{−n/2}` normalization, so every entry is `±2^{−n/2}`.
pub fn hadamard_n(n: usize) -> Result<Operator> {
    check_qubits(n)?;
    let h = Operator::hadamard();
    Ok((1..n).fold(h.clone(), |acc, _| kron(&acc, &h)))
}

/// Result of comparing two operators up to a global phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseComparison {
    /// `|tr(a†b)| / dim`
    pub fidelity: f64,
    pub equal: bool,
}

/// Compare `a` and `b` ignoring a global phase: `F = |tr(a†b)|/2ⁿ`, equal iff
/// `F ≥ 1 − tol`.
pub fn global_phase_equal(a: &Operator, b: &Operator, tol: f64) -> Result<PhaseComparison> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let mut overlap = ZERO;
    for (x, y) in a.data.iter().zip(&b.data) {
        overlap += x.conj() * y;
    }
    let fidelity = overlap.norm() / a.dim as f64;
    Ok(PhaseComparison {
        fidelity,
        equal: fidelity >= 1.0 - tol,
    })
}

/// Pure state of 1–4 qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<C64>,
}

impl StateVector {
    pub const NORM_TOL: f64 = 1e-10;

    pub fn new(n_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        check_qubits(n_qubits)?;
        if amplitudes.len() != 1 << n_qubits {
            return Err(Error::DimensionMismatch(amplitudes.len(), 1 << n_qubits));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("state vector"));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Computational basis state `|x⟩`.
    pub fn basis(n_qubits: usize, x: usize) -> Result<Self> {
        check_qubits(n_qubits)?;
        let dim = 1 << n_qubits;
        if x >= dim {
            return Err(Error::DimensionMismatch(x, dim));
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[x] = ONE;
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn zero(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, x: usize) -> C64 {
        self.amplitudes[x]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Tensor product `self ⊗ other`; `self` takes the high-order qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<Self> {
        let mut amplitudes = Vec::with_capacity(self.amplitudes.len() * other.amplitudes.len());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Self::new(self.n_qubits + other.n_qubits, amplitudes)
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Matrix-vector product `u|ψ⟩`.
pub fn apply(u: &Operator, psi: &StateVector) -> Result<StateVector> {
    let d = psi.amplitudes.len();
    if u.dim != d {
        return Err(Error::DimensionMismatch(u.dim, d));
    }
    let amplitudes = (0..d)
        .map(|r| (0..d).map(|c| u[(r, c)] * psi.amplitudes[c]).sum())
        .collect();
    StateVector::new(psi.n_qubits, amplitudes)
}
