//! Boolean functions for the n-bit Deutsch problem, their oracles, and the
//! ancilla-free algorithm `H^{⊗n} · U_f · H^{⊗n} |0…0⟩`.

use std::fmt;

use crate::error::{Error, Result};
use crate::qcore::{self, kron, Operator, StateVector, C64};

/// Largest input width handled by the census and the canonical operators.
pub const MAX_BITS: usize = 3;

/// Promise class of a Boolean function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    Constant,
    Balanced,
    Neither,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Constant => "CONSTANT",
            Classification::Balanced => "BALANCED",
            Classification::Neither => "NEITHER",
        })
    }
}

/// Truth table of `f : {0,1}ⁿ → {0,1}`.
///
/// The integer key is big-endian: `f(0)` is the most significant of the
/// `2ⁿ` bits, so the table `0110` has key 6.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    n_bits: usize,
    table: Vec<bool>,
}

impl BooleanFunction {
    pub fn new(n_bits: usize, table: Vec<bool>) -> Result<Self> {
        if !(1..=MAX_BITS).contains(&n_bits) {
            return Err(Error::QubitCount(n_bits, "1..=3"));
        }
        if table.len() != 1 << n_bits {
            return Err(Error::TruthTableLength {
                got: table.len(),
                expected: 1 << n_bits,
            });
        }
        Ok(Self { n_bits, table })
    }

    pub fn from_fn(n_bits: usize, f: impl Fn(usize) -> bool) -> Result<Self> {
        Self::new(n_bits, (0..1usize << n_bits).map(f).collect())
    }

    /// Inverse of [`key`](Self::key).
    pub fn from_key(n_bits: usize, key: u64) -> Result<Self> {
        if !(1..=MAX_BITS).contains(&n_bits) {
            return Err(Error::QubitCount(n_bits, "1..=3"));
        }
        let len = 1usize << n_bits;
        if key >> len != 0 {
            return Err(Error::TruthTableValue(key, len));
        }
        Self::new(n_bits, (0..len).map(|x| key >> (len - 1 - x) & 1 == 1).collect())
    }

    /// Parse a bit string such as `"0110"` (entry `x` is character `x`).
    pub fn from_bit_string(n_bits: usize, s: &str) -> Result<Self> {
        let table = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    line: 1,
                    message: format!("invalid truth-table character {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n_bits, table)
    }

    pub fn n_bits(&self) -> usize {
        self.n_bits
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    pub fn eval(&self, x: usize) -> bool {
        self.table[x]
    }

    pub fn key(&self) -> u64 {
        self.table.iter().fold(0u64, |acc, &b| acc << 1 | b as u64)
    }

    pub fn bit_string(&self) -> String {
        self.table.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn popcount(&self) -> usize {
        self.table.iter().filter(|&&b| b).count()
    }

    pub fn classify(&self) -> Classification {
        classify(self)
    }

    /// Algebraic normal form: the monomials with coefficient 1.
    ///
    /// A monomial is a mask in the state-index convention, so bit `n−k` of the
    /// mask stands for qubit `k` (1-based); mask 0 is the constant term.
    pub fn anf(&self) -> Vec<usize> {
        let mut coeffs: Vec<bool> = self.table.clone();
        for bit in 0..self.n_bits {
            let step = 1 << bit;
            for x in 0..coeffs.len() {
                if x & step != 0 {
                    coeffs[x] ^= coeffs[x ^ step];
                }
            }
        }
        coeffs
            .iter()
            .enumerate()
            .filter_map(|(m, &c)| c.then_some(m))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.anf()
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Complement `1 ⊕ f`.
    pub fn complement(&self) -> Self {
        Self {
            n_bits: self.n_bits,
            table: self.table.iter().map(|b| !b).collect(),
        }
    }

    fn require_promise(&self) -> Result<()> {
        match self.classify() {
            Classification::Neither => Err(Error::NeitherConstantNorBalanced),
            _ => Ok(()),
        }
    }
}

/// Constant iff the popcount is 0 or 2ⁿ, balanced iff it is 2ⁿ⁻¹.
pub fn classify(f: &BooleanFunction) -> Classification {
    let ones = f.popcount();
    let len = f.table.len();
    if ones == 0 || ones == len {
        Classification::Constant
    } else if 2 * ones == len {
        Classification::Balanced
    } else {
        Classification::Neither
    }
}

/// All constant and balanced functions on `n` bits, ordered by key.
///
/// There are `C(2ⁿ, 2ⁿ⁻¹) + 2` of them.
pub fn enumerate_functions(n: usize) -> Result<Vec<BooleanFunction>> {
    if !(1..=MAX_BITS).contains(&n) {
        return Err(Error::QubitCount(n, "1..=3"));
    }
    let len = 1u32 << n;
    (0..1u64 << len)
        .filter(|k| {
            let ones = k.count_ones();
            ones == 0 || ones == len || 2 * ones == len
        })
        .map(|k| BooleanFunction::from_key(n, k))
        .collect()
}

/// Diagonal `±1` unitary with `U_f|x⟩ = (−1)^{f(x)}|x⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseOracle {
    n_qubits: usize,
    signs: Vec<i8>,
}

impl PhaseOracle {
    pub fn from_signs(signs: Vec<i8>) -> Result<Self> {
        let len = signs.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::TruthTableLength {
                got: len,
                expected: len.next_power_of_two().max(2),
            });
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidSubset("phase oracle entries must be ±1".into()));
        }
        Ok(Self {
            n_qubits: len.trailing_zeros() as usize,
            signs,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn to_operator(&self) -> Operator {
        Operator::from_diagonal(
            &self
                .signs
                .iter()
                .map(|&s| C64::new(s as f64, 0.0))
                .collect::<Vec<_>>(),
        )
    }

    /// The function whose phase oracle this is, `f(x) = [signs[x] = −1]`.
    pub fn function(&self) -> Result<BooleanFunction> {
        BooleanFunction::new(self.n_qubits, self.signs.iter().map(|&s| s < 0).collect())
    }

    /// `s → −s`.
    pub fn negated(&self) -> Self {
        Self {
            n_qubits: self.n_qubits,
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    /// Tensor product, `self` on the high-order qubits.
    pub fn kron(&self, other: &PhaseOracle) -> Self {
        let signs = self
            .signs
            .iter()
            .flat_map(|a| other.signs.iter().map(move |b| a * b))
            .collect();
        Self {
            n_qubits: self.n_qubits + other.n_qubits,
            signs,
        }
    }
}

pub fn build_phase_oracle(f: &BooleanFunction) -> Result<PhaseOracle> {
    f.require_promise()?;
    PhaseOracle::from_signs(f.table.iter().map(|&b| if b { -1 } else { 1 }).collect())
}

/// `(n+1)`-qubit permutation `|x⟩|y⟩ → |x⟩|y ⊕ f(x)⟩`, ancilla least significant.
pub fn build_ancilla_oracle(f: &BooleanFunction) -> Result<Operator> {
    f.require_promise()?;
    let n = f.n_bits + 1;
    if n > qcore::MAX_QUBITS {
        return Err(Error::QubitCount(n, "n + 1 <= 4"));
    }
    let dim = 1 << n;
    let mut u = Operator::zeros(dim);
    for x in 0..1 << f.n_bits {
        for y in 0..2 {
            let col = x << 1 | y;
            let row = x << 1 | (y ^ f.eval(x) as usize);
            u[(row, col)] = C64::new(1.0, 0.0);
        }
    }
    Ok(u)
}

/// Outcome of a single oracle query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    pub kind: Classification,
    pub zero_state_amplitude: C64,
}

/// Runs `H^{⊗n} U_f H^{⊗n}` on `|0…0⟩` and reads the `|0…0⟩` amplitude,
/// which is exactly 1 in modulus for constant `f` and 0 for balanced `f`.
pub fn run_dj(f: &BooleanFunction) -> Result<(StateVector, Verdict)> {
    let oracle = build_phase_oracle(f)?;
    let n = f.n_bits;
    let h = qcore::hadamard_n(n)?;
    let mut psi = StateVector::zero(n)?;
    for u in [&h, &oracle.to_operator(), &h] {
        psi = qcore::apply(u, &psi)?;
    }
    let amp = psi.amplitude(0);
    let kind = if amp.norm() > 0.5 {
        Classification::Constant
    } else {
        Classification::Balanced
    };
    Ok((
        psi,
        Verdict {
            kind,
            zero_state_amplitude: amp,
        },
    ))
}

/// One of the named `U_i` operators, materialized from its `I`/`σ_z` expression.
#[derive(Debug, Clone)]
pub struct CanonicalOperator {
    /// `U1`, `U2`, ...
    pub name: String,
    /// The operator written as a sum of `I`/`σ_z` strings.
    pub expression: &'static str,
    pub label: Classification,
    pub oracle: PhaseOracle,
    /// Written with an overall `−1` (e.g. `−σ_z`).
    pub negated: bool,
}

impl CanonicalOperator {
    pub fn function(&self) -> BooleanFunction {
        self.oracle
            .function()
            .expect("canonical oracles have valid widths")
    }
}

type Terms = &'static [(f64, &'static str)];

const ONE_BIT: &[(&str, Terms)] = &[
    ("I", &[(1.0, "I")]),
    ("-I", &[(-1.0, "I")]),
    ("Z", &[(1.0, "Z")]),
    ("-Z", &[(-1.0, "Z")]),
];

const TWO_BIT: &[(&str, Terms)] = &[
    ("I⊗I", &[(1.0, "II")]),
    ("Z⊗I", &[(1.0, "ZI")]),
    ("I⊗Z", &[(1.0, "IZ")]),
    ("Z⊗Z", &[(1.0, "ZZ")]),
    ("-I⊗I", &[(-1.0, "II")]),
    ("-Z⊗I", &[(-1.0, "ZI")]),
    ("-I⊗Z", &[(-1.0, "IZ")]),
    ("-Z⊗Z", &[(-1.0, "ZZ")]),
];

const THREE_BIT: &[(&str, Terms)] = &[
    ("I⊗I⊗I", &[(1.0, "III")]),
    ("Z⊗I⊗I", &[(1.0, "ZII")]),
    ("I⊗I⊗Z", &[(1.0, "IIZ")]),
    ("Z⊗Z⊗I", &[(1.0, "ZZI")]),
    ("Z⊗Z⊗Z", &[(1.0, "ZZZ")]),
    (
        "½ Z₁⊗(I⊗I + Z⊗I + I⊗Z − Z⊗Z)₂₃",
        &[(0.5, "ZII"), (0.5, "ZZI"), (0.5, "ZIZ"), (-0.5, "ZZZ")],
    ),
    (
        "½ Z₂⊗(I⊗I + Z⊗I + I⊗Z − Z⊗Z)₁₃",
        &[(0.5, "IZI"), (0.5, "ZZI"), (0.5, "IZZ"), (-0.5, "ZZZ")],
    ),
    (
        "½ Z₃⊗(I⊗I + Z⊗I + I⊗Z − Z⊗Z)₁₂",
        &[(0.5, "IIZ"), (0.5, "ZIZ"), (0.5, "IZZ"), (-0.5, "ZZZ")],
    ),
    (
        "½ (Z⊗I⊗I + I⊗I⊗Z − Z⊗Z⊗I + I⊗Z⊗Z)",
        &[(0.5, "ZII"), (0.5, "IIZ"), (-0.5, "ZZI"), (0.5, "IZZ")],
    ),
];

fn evaluate_terms(terms: Terms) -> Operator {
    let z = Operator::pauli_z();
    let id = Operator::identity(2);
    let n = terms[0].1.len();
    terms
        .iter()
        .fold(Operator::zeros(1 << n), |acc, (coef, pattern)| {
            let string = pattern.chars().fold(Operator::identity(1), |m, c| {
                kron(&m, if c == 'Z' { &z } else { &id })
            });
            acc.add(&string.scale(C64::new(*coef, 0.0)))
                .expect("same width")
        })
}

fn materialize(terms: Terms) -> PhaseOracle {
    let op = evaluate_terms(terms);
    assert!(op.is_diagonal(1e-12), "canonical operators are diagonal");
    let signs = op
        .diagonal()
        .iter()
        .map(|d| {
            assert!(d.im.abs() < 1e-12 && (d.re.abs() - 1.0).abs() < 1e-12);
            if d.re > 0.0 {
                1
            } else {
                -1
            }
        })
        .collect();
    PhaseOracle::from_signs(signs).expect("±1 diagonal")
}

/// The named operators `U₁…U₄` (n=1), `U₁…U₈` (n=2), `U₁…U₉` (n=3).
pub fn canonical_operators(n: usize) -> Result<Vec<CanonicalOperator>> {
    let table = match n {
        1 => ONE_BIT,
        2 => TWO_BIT,
        3 => THREE_BIT,
        _ => return Err(Error::QubitCount(n, "1..=3")),
    };
    Ok(table
        .iter()
        .enumerate()
        .map(|(i, (expression, terms))| {
            let oracle = materialize(terms);
            let label = classify(&oracle.function().expect("valid width"));
            CanonicalOperator {
                name: format!("U{}", i + 1),
                expression,
                label,
                oracle,
                negated: terms.len() == 1 && terms[0].0 < 0.0,
            }
        })
        .collect())
}

/// Look up `U<i>` for width `n` (case-insensitive).
pub fn canonical_by_name(n: usize, name: &str) -> Result<CanonicalOperator> {
    canonical_operators(n)?
        .into_iter()
        .find(|c| c.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownFunctionName(name.to_string()))
}

/// Resolve a user-facing function reference: a canonical name such as `U6`,
/// or a truth-table key in decimal.
pub fn resolve_function(n: usize, spec: &str) -> Result<BooleanFunction> {
    let spec = spec.trim();
    if spec.starts_with(['U', 'u']) {
        return Ok(canonical_by_name(n, spec)?.function());
    }
    let key: u64 = spec
        .parse()
        .map_err(|_| Error::UnknownFunctionName(spec.to_string()))?;
    BooleanFunction::from_key(n, key)
}
