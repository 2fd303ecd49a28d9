//! Independent reference computations for the integration tests.
#![allow(dead_code)]

use djnmr::qcore::{kron, Operator, C64};

/// exp(A) by scaling and squaring around a truncated Taylor series.
pub fn expm(a: &Operator) -> Operator {
    let norm = a.entries().iter().map(|z| z.norm()).sum::<f64>();
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let a = a.scale(C64::new(scale, 0.0));
    let dim = a.dim();
    let mut result = Operator::identity(dim);
    let mut term = Operator::identity(dim);
    for k in 1..30 {
        term = term.matmul(&a).unwrap().scale(C64::new(1.0 / k as f64, 0.0));
        result = result.add(&term).unwrap();
    }
    for _ in 0..squarings {
        result = result.matmul(&result).unwrap();
    }
    result
}

pub fn half(p: Operator) -> Operator {
    p.scale(C64::new(0.5, 0.0))
}

/// Spin operator `I_a` (a ∈ {'x','y','z'}) on `spin` (1-based) of `n`.
pub fn spin_op(axis: char, spin: usize, n: usize) -> Operator {
    let single = match axis {
        'x' => half(Operator::pauli_x()),
        'y' => half(Operator::pauli_y()),
        _ => half(Operator::pauli_z()),
    };
    let id = Operator::identity(2);
    (1..=n).fold(Operator::identity(1), |acc, k| {
        kron(&acc, if k == spin { &single } else { &id })
    })
}

/// Angular-frequency Hamiltonian 2π(Σ ν I_z + Σ J I_z I_z), assembled from matrices.
pub fn hamiltonian(shifts: &[f64], couplings: &[((usize, usize), f64)]) -> Operator {
    let n = shifts.len();
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut h = Operator::zeros(1 << n);
    for (i, &nu) in shifts.iter().enumerate() {
        h = h.add(&spin_op('z', i + 1, n).scale(C64::new(two_pi * nu, 0.0))).unwrap();
    }
    for &((i, j), jv) in couplings {
        let zz = spin_op('z', i, n).matmul(&spin_op('z', j, n)).unwrap();
        h = h.add(&zz.scale(C64::new(two_pi * jv, 0.0))).unwrap();
    }
    h
}

/// exp(−i t H).
pub fn evolve_for(h: &Operator, t: f64) -> Operator {
    expm(&h.scale(C64::new(0.0, -t)))
}

pub fn conj(u: &Operator, a: &Operator) -> Operator {
    u.matmul(a).unwrap().matmul(&u.adjoint()).unwrap()
}

/// Traces of ρ^k for k = 1..=dim; equal lists ⇔ equal eigenvalue multisets
/// for Hermitian matrices.
pub fn power_traces(m: &Operator) -> Vec<f64> {
    let mut p = Operator::identity(m.dim());
    (0..m.dim())
        .map(|_| {
            p = p.matmul(m).unwrap();
            p.trace().re
        })
        .collect()
}

/// f affine ⇔ f(x) = b ⊕ a·x for some (a, b); checked by trying all of them.
pub fn is_affine(table: &[bool], n: usize) -> bool {
    (0..1usize << n).any(|a| {
        [false, true].iter().any(|&b| {
            table
                .iter()
                .enumerate()
                .all(|(x, &fx)| fx == (b ^ ((a & x).count_ones() % 2 == 1)))
        })
    })
}
