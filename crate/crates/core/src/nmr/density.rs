//! Deviation density matrices and their product-operator expansion.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::nmr::SpinSystem;
use crate::qcore::{kron, Operator, C64};

/// Traceless, Hermitian deviation part of a spin density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    n_spins: usize,
    matrix: Operator,
}

impl DensityOperator {
    pub const HERMITIAN_TOL: f64 = 1e-10;

    pub fn new(matrix: Operator) -> Result<Self> {
        let herm = matrix.hermiticity_error();
        if herm > Self::HERMITIAN_TOL {
            return Err(Error::InvalidSpinSystem(format!(
                "density operator not Hermitian (deviation {herm:e})"
            )));
        }
        Ok(Self {
            n_spins: matrix.n_qubits(),
            matrix,
        })
    }

    /// Sum of weighted product-operator strings.
    pub fn from_terms(n_spins: usize, terms: &[ProductOperatorTerm]) -> Result<Self> {
        let mut m = Operator::zeros(1 << n_spins);
        for t in terms {
            if t.labels.len() != n_spins {
                return Err(Error::DimensionMismatch(t.labels.len(), n_spins));
            }
            m = m.add(&t.basis_operator().scale(C64::new(t.coefficient, 0.0)))?;
        }
        Self::new(m)
    }

    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    pub fn matrix(&self) -> &Operator {
        &self.matrix
    }
}

/// `Σ_i wᵢ I_z^i`.
pub fn thermal_state(sys: &SpinSystem) -> DensityOperator {
    let n = sys.n_spins();
    let terms: Vec<ProductOperatorTerm> = (0..n)
        .map(|i| {
            let mut labels = vec![Label::E; n];
            labels[i] = Label::Z;
            ProductOperatorTerm {
                coefficient: sys.weights()[i],
                labels,
            }
        })
        .collect();
    DensityOperator::from_terms(n, &terms).expect("Hermitian by construction")
}

/// `UρU†`.
pub fn evolve(rho: &DensityOperator, u: &Operator) -> Result<DensityOperator> {
    if u.dim() != rho.matrix.dim() {
        return Err(Error::DimensionMismatch(u.dim(), rho.matrix.dim()));
    }
    let m = u.matmul(&rho.matrix)?.matmul(&u.adjoint())?;
    DensityOperator::new(m)
}

/// Single-spin factor of a product operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    E,
    X,
    Y,
    Z,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::E, Label::X, Label::Y, Label::Z];

    /// `E` or `I_a = σ_a/2`.
    pub fn matrix(self) -> Operator {
        match self {
            Label::E => Operator::identity(2),
            Label::X => Operator::pauli_x().scale(C64::new(0.5, 0.0)),
            Label::Y => Operator::pauli_y().scale(C64::new(0.5, 0.0)),
            Label::Z => Operator::pauli_z().scale(C64::new(0.5, 0.0)),
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Label::E => "",
            Label::X => "x",
            Label::Y => "y",
            Label::Z => "z",
        }
    }
}

/// `coefficient · 2^{q−1} ∏ I`, where `q` counts non-identity labels.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductOperatorTerm {
    pub coefficient: f64,
    pub labels: Vec<Label>,
}

impl ProductOperatorTerm {
    pub fn new(coefficient: f64, labels: Vec<Label>) -> Self {
        Self {
            coefficient,
            labels,
        }
    }

    /// Parse a compact label string such as `"EXZ"` (spin order).
    pub fn from_code(coefficient: f64, code: &str) -> Option<Self> {
        let labels = code
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'E' => Some(Label::E),
                'X' => Some(Label::X),
                'Y' => Some(Label::Y),
                'Z' => Some(Label::Z),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coefficient, labels))
    }

    pub fn order(&self) -> usize {
        self.labels.iter().filter(|&&l| l != Label::E).count()
    }

    pub fn code(&self) -> String {
        self.labels
            .iter()
            .map(|l| match l {
                Label::E => 'E',
                Label::X => 'X',
                Label::Y => 'Y',
                Label::Z => 'Z',
            })
            .collect()
    }

    /// The normalized string `2^{q−1} ∏ I` (for q = 0, `E/2`).
    pub fn basis_operator(&self) -> Operator {
        let product = self
            .labels
            .iter()
            .fold(Operator::identity(1), |acc, l| kron(&acc, &l.matrix()));
        product.scale(C64::new(2f64.powi(self.order() as i32 - 1), 0.0))
    }

    /// Conventional notation: `I1x`, `2I2xI3z`, `4I1zI2xI3z`.
    pub fn operator_string(&self) -> String {
        let q = self.order();
        if q == 0 {
            return "E".into();
        }
        let mut s = if q > 1 {
            (1u32 << (q - 1)).to_string()
        } else {
            String::new()
        };
        for (i, l) in self.labels.iter().enumerate() {
            if *l != Label::E {
                s.push_str(&format!("I{}{}", i + 1, l.suffix()));
            }
        }
        s
    }

    fn sort_key(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.labels.cmp(&other.labels))
    }
}

impl fmt::Display for ProductOperatorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+.6} {}", self.coefficient, self.operator_string())
    }
}

/// Coefficients below this are dropped from decompositions.
pub const TERM_CUTOFF: f64 = 1e-9;

/// Expansion over all `4ⁿ` strings, `c = tr(ρB)/2^{n−2}`, ordered by number of
/// non-identity labels and then label-wise `E < x < y < z`.
pub fn product_operator_decomposition(rho: &DensityOperator) -> Vec<ProductOperatorTerm> {
    let n = rho.n_spins;
    let norm = 2f64.powi(n as i32 - 2);
    let mut terms: Vec<ProductOperatorTerm> = (0..4usize.pow(n as u32))
        .map(|code| {
            let labels = (0..n)
                .map(|k| Label::ALL[code / 4usize.pow((n - 1 - k) as u32) % 4])
                .collect();
            let mut term = ProductOperatorTerm::new(0.0, labels);
            let b = term.basis_operator();
            let overlap = rho.matrix.matmul(&b).expect("same width").trace();
            term.coefficient = overlap.re / norm;
            term
        })
        .filter(|t| t.coefficient.abs() >= TERM_CUTOFF)
        .collect();
    terms.sort_by(|a, b| a.sort_key(b));
    terms
}
