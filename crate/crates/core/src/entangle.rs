//! Entangling power of phase oracles, decided by exact tensor factorization
//! of their `±1` sign vectors.
//!
//! A diagonal oracle factors across a bipartition `(S, S̄)` iff its sign
//! vector, reshaped to a `2^|S| × 2^|S̄|` matrix, has rank one. For `±1`
//! entries that is checked exactly through the 2×2 minors, so no tolerance
//! enters the decision.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::oracles::{self, build_phase_oracle, PhaseOracle};

/// Disjoint blocks of 1-based qubit indices covering `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QubitPartition {
    blocks: Vec<Vec<usize>>,
}

impl QubitPartition {
    /// Normalizes block order; rejects overlaps, gaps and empty blocks.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidSubset("empty block".into()));
            }
            block.sort_unstable();
            for &q in block.iter() {
                if q == 0 || q > n || seen[q] {
                    return Err(Error::InvalidSubset(format!("qubit {q} in {blocks:?}")));
                }
                seen[q] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidSubset(format!("{blocks:?} does not cover 1..={n}")));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n_qubits(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Every block of `self` lies inside some block of `coarser`.
    pub fn refines(&self, coarser: &QubitPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| coarser.blocks.iter().any(|c| b.iter().all(|q| c.contains(q))))
    }
}

impl fmt::Display for QubitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            let inner: Vec<String> = block.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntanglementKind {
    NonEntangling,
    PartiallyEntangling,
    MaximallyEntangling,
}

impl EntanglementKind {
    pub const ALL: [EntanglementKind; 3] = [
        EntanglementKind::NonEntangling,
        EntanglementKind::PartiallyEntangling,
        EntanglementKind::MaximallyEntangling,
    ];
}

impl fmt::Display for EntanglementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntanglementKind::NonEntangling => "NonEntangling",
            EntanglementKind::PartiallyEntangling => "PartiallyEntangling",
            EntanglementKind::MaximallyEntangling => "MaximallyEntangling",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntanglementClass {
    pub kind: EntanglementKind,
    pub finest_partition: QubitPartition,
}

/// Sign tensor over an ordered set of qubits (1-based labels).
struct SignTensor {
    qubits: Vec<usize>,
    signs: Vec<i8>,
}

impl SignTensor {
    /// Bit of `x` belonging to the `pos`-th qubit of this tensor.
    fn bit(&self, x: usize, pos: usize) -> usize {
        x >> (self.qubits.len() - 1 - pos) & 1
    }

    /// Positions of `subset` within `self.qubits`.
    fn positions(&self, subset: &[usize]) -> Vec<usize> {
        subset
            .iter()
            .map(|q| self.qubits.iter().position(|p| p == q).expect("member qubit"))
            .collect()
    }

    fn gather(&self, x: usize, positions: &[usize]) -> usize {
        positions.iter().fold(0, |acc, &p| acc << 1 | self.bit(x, p))
    }

    /// Reshape into `M[x_S][x_S̄]`.
    fn matricize(&self, subset: &[usize]) -> Vec<Vec<i8>> {
        let rows_pos = self.positions(subset);
        let cols_pos: Vec<usize> = (0..self.qubits.len())
            .filter(|p| !rows_pos.contains(p))
            .collect();
        let mut m = vec![vec![0i8; 1 << cols_pos.len()]; 1 << rows_pos.len()];
        for (x, &s) in self.signs.iter().enumerate() {
            m[self.gather(x, &rows_pos)][self.gather(x, &cols_pos)] = s;
        }
        m
    }

    fn factorizes_over(&self, subset: &[usize]) -> bool {
        let m = self.matricize(subset);
        let cols = m[0].len();
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                for c in 0..cols {
                    for d in c + 1..cols {
                        if m[a][c] * m[b][d] != m[a][d] * m[b][c] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Factor on `subset` of a rank-one tensor, fixed up to an overall sign:
    /// the slice with every other qubit in state 0.
    fn restrict(&self, subset: &[usize]) -> SignTensor {
        let m = self.matricize(subset);
        SignTensor {
            qubits: subset.to_vec(),
            signs: m.iter().map(|row| row[0]).collect(),
        }
    }

    fn finest_blocks(&self) -> Vec<Vec<usize>> {
        let k = self.qubits.len();
        if k == 1 {
            return vec![self.qubits.clone()];
        }
        // Proper subsets containing the first qubit, smallest first.
        let mut masks: Vec<usize> = (1..(1usize << k) - 1)
            .filter(|m| m >> (k - 1) & 1 == 1)
            .collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let subset: Vec<usize> = (0..k)
                .filter(|p| mask >> (k - 1 - p) & 1 == 1)
                .map(|p| self.qubits[p])
                .collect();
            if self.factorizes_over(&subset) {
                let rest: Vec<usize> = self
                    .qubits
                    .iter()
                    .copied()
                    .filter(|q| !subset.contains(q))
                    .collect();
                let mut blocks = self.restrict(&subset).finest_blocks();
                blocks.extend(self.restrict(&rest).finest_blocks());
                return blocks;
            }
        }
        vec![self.qubits.clone()]
    }
}

fn tensor_of(oracle: &PhaseOracle) -> SignTensor {
    SignTensor {
        qubits: (1..=oracle.n_qubits()).collect(),
        signs: oracle.signs().to_vec(),
    }
}

/// Whether the oracle is a tensor product across `(subset, complement)`.
/// `subset` holds 1-based qubit indices and must be a nonempty proper subset.
pub fn factorizes_over(oracle: &PhaseOracle, subset: &[usize]) -> Result<bool> {
    let n = oracle.n_qubits();
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != subset.len()
        || sorted.is_empty()
        || sorted.len() >= n
        || sorted.iter().any(|&q| q == 0 || q > n)
    {
        return Err(Error::InvalidSubset(format!(
            "{subset:?} is not a nonempty proper subset of 1..={n}"
        )));
    }
    Ok(tensor_of(oracle).factorizes_over(&sorted))
}

/// Finest tensor-product partition of the oracle and the resulting class.
pub fn finest_factorization(oracle: &PhaseOracle) -> EntanglementClass {
    let n = oracle.n_qubits();
    let blocks = tensor_of(oracle).finest_blocks();
    let finest_partition = QubitPartition::new(n, blocks).expect("blocks partition the register");
    let kind = if finest_partition.blocks().iter().all(|b| b.len() == 1) {
        EntanglementKind::NonEntangling
    } else if finest_partition.blocks().len() == 1 {
        EntanglementKind::MaximallyEntangling
    } else {
        EntanglementKind::PartiallyEntangling
    };
    EntanglementClass {
        kind,
        finest_partition,
    }
}

/// Per-class counts and member keys over the whole census for `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCensus {
    pub n: usize,
    pub members: BTreeMap<EntanglementKind, Vec<u64>>,
}

impl ClassCensus {
    pub fn count(&self, kind: EntanglementKind) -> usize {
        self.members.get(&kind).map_or(0, Vec::len)
    }

    pub fn total(&self) -> usize {
        self.members.values().map(Vec::len).sum()
    }
}

pub fn census_by_class(n: usize) -> Result<ClassCensus> {
    let mut members: BTreeMap<EntanglementKind, Vec<u64>> =
        EntanglementKind::ALL.iter().map(|&k| (k, Vec::new())).collect();
    for f in oracles::enumerate_functions(n)? {
        let class = finest_factorization(&build_phase_oracle(&f)?);
        members.entry(class.kind).or_default().push(f.key());
    }
    Ok(ClassCensus { n, members })
}
