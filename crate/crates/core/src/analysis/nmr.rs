//! Classicality of pseudo-pure NMR states under the spin-1/2 kernels.
//!
//! With `Δ(n) = ⊗ (I + n_i·σ)/2` and `Δ̃(n) = ⊗ (I + 3 n_i·σ)/(4π)`, the state
//! `ρ = (1-ε) I/2ⁿ + ε ρ₁` has `μ(n) = Tr[ρ Δ̃(n)]`. Each qubit factor of
//! `(4π)ⁿ Tr[ρ₁ Δ̃]` lies in `[-2, 4]`, so `μ ≥ 0` whenever
//! `ε ≤ 1/(1 + 2^{2n-1})`.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::operator::{cx, identity, sigma, tensor_all, trace_product, ComplexMatrix, DensityOperator};
use crate::quadrature::{fibonacci_points, symmetric_directions};

pub const MAX_NMR_QUBITS: usize = 3;
/// Smallest number of sampled direction tuples.
pub const MIN_SAMPLES: usize = 10_000;

const FOUR_PI: f64 = 4.0 * core::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NmrReport {
    pub n_qubits: usize,
    pub epsilon: f64,
    pub epsilon_bound: f64,
    /// `[(1-ε) - ε 2^{2n-1}]/(4π)ⁿ`
    pub analytic_lower_bound: f64,
    pub sampled_min: f64,
    pub samples: usize,
    /// Sampled minimum is nonnegative within the tolerance.
    pub classical: bool,
    /// Sampled minimum respects the analytic lower bound.
    pub bound_respected: bool,
}

pub fn epsilon_bound(n_qubits: usize) -> f64 {
    1.0 / (1.0 + (1u64 << (2 * n_qubits - 1)) as f64)
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_NMR_QUBITS {
        return Err(Error::UnsupportedDimension(format!("need 1..={MAX_NMR_QUBITS} qubits, got {n}")));
    }
    Ok(())
}

fn bloch_factor(n: [f64; 3], weight: f64) -> Result<ComplexMatrix> {
    let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidPoint(format!("direction has norm {norm}")));
    }
    let [sx, sy, sz] = sigma();
    Ok(identity(2) + (sx * cx(n[0], 0.0) + sy * cx(n[1], 0.0) + sz * cx(n[2], 0.0)) * cx(weight, 0.0))
}

/// `(Δ(n), Δ̃(n))` at one tuple of per-qubit directions.
pub fn nmr_kernels(directions: &[[f64; 3]]) -> Result<(ComplexMatrix, ComplexMatrix)> {
    check_qubits(directions.len())?;
    let k = directions.len() as i32;
    let plain: Vec<ComplexMatrix> = directions.iter().map(|n| bloch_factor(*n, 1.0)).collect::<Result<_>>()?;
    let dual: Vec<ComplexMatrix> = directions.iter().map(|n| bloch_factor(*n, 3.0)).collect::<Result<_>>()?;
    Ok((tensor_all(&plain) * cx(0.5f64.powi(k), 0.0), tensor_all(&dual) * cx(FOUR_PI.powi(-k), 0.0)))
}

/// Per-qubit directions: a Fibonacci lattice plus the six axes and eight
/// diagonals, sized so that all `n`-tuples number at least [`MIN_SAMPLES`].
pub fn sample_directions(n_qubits: usize) -> Vec<[f64; 3]> {
    let extra = symmetric_directions();
    let mut per_qubit = (MIN_SAMPLES as f64).powf(1.0 / n_qubits as f64).ceil() as usize;
    while per_qubit.pow(n_qubits as u32) < MIN_SAMPLES {
        per_qubit += 1;
    }
    let mut pts = fibonacci_points(per_qubit.saturating_sub(extra.len()).max(1));
    pts.extend(extra);
    pts
}

/// `(1-ε) I/2ⁿ + ε ρ₁`.
pub fn nmr_state(epsilon: f64, rho1: &DensityOperator) -> Result<DensityOperator> {
    if !(0.0..=1.0).contains(&epsilon) || !epsilon.is_finite() {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let d = rho1.dim();
    DensityOperator::new(identity(d) * cx((1.0 - epsilon) / d as f64, 0.0) + rho1.matrix() * cx(epsilon, 0.0))
}

/// Evaluates `μ` over every tuple of the per-qubit direction set.
pub fn nmr_classicality(
    n_qubits: usize,
    epsilon: f64,
    rho1: &DensityOperator,
    directions: &[[f64; 3]],
    tol: f64,
) -> Result<NmrReport> {
    check_qubits(n_qubits)?;
    let d = 1usize << n_qubits;
    if rho1.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: rho1.dim() });
    }
    let rho = nmr_state(epsilon, rho1)?;
    let factors: Vec<ComplexMatrix> = directions.iter().map(|n| bloch_factor(*n, 3.0)).collect::<Result<_>>()?;
    let scale = FOUR_PI.powi(-(n_qubits as i32));
    let total = directions.len().pow(n_qubits as u32);
    let mut sampled_min = f64::INFINITY;
    let mut idx = alloc::vec![0usize; n_qubits];
    for _ in 0..total {
        let parts: Vec<ComplexMatrix> = idx.iter().map(|&i| factors[i].clone()).collect();
        let v = trace_product(rho.matrix(), &tensor_all(&parts)).re * scale;
        sampled_min = sampled_min.min(v);
        for slot in idx.iter_mut().rev() {
            *slot += 1;
            if *slot < directions.len() {
                break;
            }
            *slot = 0;
        }
    }
    let analytic_lower_bound = ((1.0 - epsilon) - epsilon * (1u64 << (2 * n_qubits - 1)) as f64) * scale;
    Ok(NmrReport {
        n_qubits,
        epsilon,
        epsilon_bound: epsilon_bound(n_qubits),
        analytic_lower_bound,
        sampled_min,
        samples: total,
        classical: sampled_min >= -tol,
        bound_respected: sampled_min >= analytic_lower_bound - tol,
    })
}

/// `|0…0⟩⟨0…0|` on `n` qubits.
pub fn diagonal_pure(n_qubits: usize) -> Result<DensityOperator> {
    check_qubits(n_qubits)?;
    DensityOperator::pure(&crate::operator::basis_vector(1 << n_qubits, 0))
}

/// `n`-fold tensor power of the Bloch-`(1,1,1)/√3` state.
pub fn diagonal_bloch_product(n_qubits: usize) -> Result<DensityOperator> {
    check_qubits(n_qubits)?;
    let r = 1.0 / 3f64.sqrt();
    let one = DensityOperator::from_bloch([r, r, r])?;
    let parts: Vec<ComplexMatrix> = (0..n_qubits).map(|_| one.matrix().clone()).collect();
    DensityOperator::new(tensor_all(&parts))
}
