//! Qudit teleportation simulated in Hilbert space and read off in phase space.
//!
//! Systems 2 and 3 share `|Φ⟩ = Σ_k |kk⟩/√d`. Systems 1 and 2 are measured in
//! the basis `(I ⊗ X^a Z^b)|Φ⟩`. For outcome `(a, b)` the Wootters function of
//! system 3 is the input one displaced: `μ_out(q, p) = μ_in(q - a, p + b)`.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::frame::QuasiDistribution;
use crate::operator::{
    cx, distance, identity, make_pauli_family, partial_trace_matrix, projector, tensor, ComplexVector, DensityOperator,
};
use crate::reps::wootters::wootters_prime;

#[derive(Debug, Clone, PartialEq)]
pub struct TeleportOutcome {
    pub outcome: (usize, usize),
    pub probability: f64,
    pub mu_in: QuasiDistribution,
    pub mu_out: QuasiDistribution,
    /// `max |μ_out(q,p) - μ_in(q-a, p+b)|`
    pub displacement_residual: f64,
    /// Distance between the corrected output state and the input.
    pub corrected_residual: f64,
}

fn maximally_entangled(d: usize) -> ComplexVector {
    let mut v = ComplexVector::zeros(d * d);
    for k in 0..d {
        v[k * d + k] = cx(1.0 / (d as f64).sqrt(), 0.0);
    }
    v
}

pub fn teleport_phase_space(d: usize, rho_in: &DensityOperator, outcome: (usize, usize)) -> Result<TeleportOutcome> {
    let rep = wootters_prime(d)?;
    if rho_in.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: rho_in.dim() });
    }
    let (a, b) = (outcome.0 % d, outcome.1 % d);
    let fam = make_pauli_family(d)?;
    let phi = maximally_entangled(d);
    let bell = tensor(&identity(d), &fam.displacement(a as i64, b as i64)) * &phi;
    let joint = tensor(rho_in.matrix(), &projector(&phi));
    let meas = tensor(&projector(&bell), &identity(d));
    let post = &meas * joint * &meas;
    let out = partial_trace_matrix(&partial_trace_matrix(&post, 0, &[d, d, d])?, 0, &[d, d])?;
    let probability = out.trace().re;
    let rho_out = DensityOperator::new(out / cx(probability, 0.0))?;
    let mu_in = rep.represent(rho_in)?;
    let mu_out = rep.represent(&rho_out)?;
    let mut displacement_residual: f64 = 0.0;
    for q in 0..d {
        for p in 0..d {
            let src = ((q + d - a) % d) * d + (p + b) % d;
            displacement_residual = displacement_residual.max((mu_out.values[q * d + p] - mu_in.values[src]).abs());
        }
    }
    // undo the displacement by (a, -b)
    let shift = fam.displacement(a as i64, -(b as i64));
    let corrected = shift.adjoint() * rho_out.matrix() * &shift;
    let corrected_residual = distance(&corrected, rho_in.matrix());
    Ok(TeleportOutcome { outcome: (a, b), probability, mu_in, mu_out, displacement_residual, corrected_residual })
}

/// Runs every outcome and returns them in row-major `(a, b)` order.
pub fn teleport_all(d: usize, rho_in: &DensityOperator) -> Result<Vec<TeleportOutcome>> {
    (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).map(|o| teleport_phase_space(d, rho_in, o)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::random_state;

    #[test]
    fn trivial_outcome_copies_input() {
        let rho = random_state(3, 2, 1).unwrap();
        let t = teleport_phase_space(3, &rho, (0, 0)).unwrap();
        assert!(t.displacement_residual < 1e-10);
        for (a, b) in t.mu_out.values.iter().zip(&t.mu_in.values) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn all_outcomes_displace() {
        for d in [3, 5] {
            let rho = random_state(d, 1, 40 + d as u64).unwrap();
            let all = teleport_all(d, &rho).unwrap();
            let total: f64 = all.iter().map(|t| t.probability).sum();
            assert!((total - 1.0).abs() < 1e-10);
            for t in &all {
                assert!((t.probability - 1.0 / (d * d) as f64).abs() < 1e-10);
                assert!(t.displacement_residual < 1e-9, "{:?}", t.outcome);
                assert!(t.corrected_residual < 1e-9, "{:?}", t.outcome);
            }
        }
    }

    #[test]
    fn qubits_rejected() {
        let rho = DensityOperator::maximally_mixed(2);
        assert!(matches!(teleport_phase_space(2, &rho, (0, 0)), Err(Error::UnsupportedDimension(_))));
    }
}
