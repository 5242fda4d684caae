//! Probability tables over a complete set of mutually unbiased bases in
//! prime dimension.
//!
//! Basis `0` is the computational basis, basis `n ∈ 1..d` is `V^n` applied
//! to it with `V = F diag(ω^{k²/2}) F†`, and basis `d` is the Fourier basis.
//! At `d = 2` the phase `ω^{k²/2}` is read as `diag(1, i)`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::frame::{DualFrame, Frame, Label, OutcomeSet, QuasiDistribution};
use crate::operator::{
    cx, distance, finite_fourier, half_phase, identity, projector, trace_product, unitary_power, zeros, ComplexMatrix,
    ComplexVector, DensityOperator, HermitianOperator,
};
use crate::reps::Representation;

#[derive(Debug, Clone, PartialEq)]
pub struct MubFamily {
    pub dim: usize,
    /// `bases[n]` holds the `d` basis vectors as columns.
    pub bases: Vec<ComplexMatrix>,
}

impl MubFamily {
    pub fn vector(&self, n: usize, k: usize) -> ComplexVector {
        self.bases[n].column(k).into_owned()
    }

    pub fn projector(&self, n: usize, k: usize) -> ComplexMatrix {
        projector(&self.vector(n, k))
    }

    /// Largest deviation of `|⟨ψ^{n′}_{k′}|ψ^n_k⟩|²` from `δδ + (1-δ_{nn′})/d`.
    pub fn max_deviation(&self) -> f64 {
        let d = self.dim;
        let mut worst: f64 = 0.0;
        for n in 0..=d {
            for m in 0..=d {
                let overlaps = self.bases[n].adjoint() * &self.bases[m];
                for k in 0..d {
                    for j in 0..d {
                        let want = if n == m {
                            if k == j {
                                1.0
                            } else {
                                0.0
                            }
                        } else {
                            1.0 / d as f64
                        };
                        worst = worst.max((overlaps[(k, j)].norm_sqr() - want).abs());
                    }
                }
            }
        }
        worst
    }

    pub fn outcomes(&self) -> OutcomeSet {
        OutcomeSet::grid(self.dim + 1, self.dim)
    }
}

/// The operator `V` whose powers generate the intermediate bases.
pub fn mub_generator(d: usize) -> Result<ComplexMatrix> {
    let f = finite_fourier(d)?;
    let mut diag = zeros(d);
    for k in 0..d as i64 {
        diag[(k as usize, k as usize)] = if d == 2 {
            if k == 0 {
                cx(1.0, 0.0)
            } else {
                cx(0.0, 1.0)
            }
        } else {
            half_phase(d, k * k)
        };
    }
    Ok(&f * diag * f.adjoint())
}

pub fn mub_family(d: usize) -> Result<MubFamily> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    if !is_prime(d as u64) {
        return Err(Error::UnsupportedDimension(format!("d must be prime, got {d}")));
    }
    let v = mub_generator(d)?;
    let mut bases = Vec::with_capacity(d + 1);
    bases.push(identity(d));
    for n in 1..d as i64 {
        bases.push(unitary_power(&v, n));
    }
    bases.push(finite_fourier(d)?);
    Ok(MubFamily { dim: d, bases })
}

/// Table `Tr[ρ P(n,k)]` over labels `(n, k)`; each basis row sums to one.
pub fn mub_table(family: &MubFamily, rho: &DensityOperator) -> Result<QuasiDistribution> {
    let d = family.dim;
    if rho.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: rho.dim() });
    }
    let mut values = Vec::with_capacity(d * (d + 1));
    for n in 0..=d {
        for k in 0..d {
            values.push(trace_product(rho.matrix(), &family.projector(n, k)).re);
        }
    }
    QuasiDistribution::new("mub-table", d, family.outcomes(), values)
}

/// `ρ = Σ μ(n,k) P(n,k) - I`.
pub fn mub_reconstruct(family: &MubFamily, table: &QuasiDistribution) -> Result<HermitianOperator> {
    let d = family.dim;
    if table.outcomes != family.outcomes() {
        return Err(Error::OutcomeSetMismatch);
    }
    let mut acc = zeros(d);
    for n in 0..=d {
        for k in 0..d {
            acc += family.projector(n, k) * cx(table.values[n * d + k], 0.0);
        }
    }
    Ok(HermitianOperator::hermitian_part(acc - identity(d)))
}

/// `Σ μ μ′ - 1 = Tr(ρ ρ′)`.
pub fn mub_transition(t1: &QuasiDistribution, t2: &QuasiDistribution) -> Result<f64> {
    if t1.outcomes != t2.outcomes {
        return Err(Error::OutcomeSetMismatch);
    }
    Ok(t1.values.iter().zip(&t2.values).map(|(a, b)| a * b).sum::<f64>() - 1.0)
}

/// Frame `P(n,k)/(d+1)` with dual `(d+1) P(n,k) - I`.
pub fn mub_rep(d: usize) -> Result<Representation> {
    let family = mub_family(d)?;
    let outcomes = family.outcomes();
    let s = (d + 1) as f64;
    let mut frame_ops = Vec::with_capacity(d * (d + 1));
    let mut dual_ops = Vec::with_capacity(d * (d + 1));
    for n in 0..=d {
        for k in 0..d {
            let p = family.projector(n, k);
            frame_ops.push(HermitianOperator::hermitian_part(&p * cx(1.0 / s, 0.0)));
            dual_ops.push(HermitianOperator::hermitian_part(&p * cx(s, 0.0) - identity(d)));
        }
    }
    let frame = Frame::new(d, outcomes.clone(), frame_ops)?;
    let dual = DualFrame::new(d, outcomes, dual_ops)?;
    Ok(Representation::new("mub", frame, dual, None))
}

/// `(n, k)` label of a table entry.
pub fn mub_label(n: usize, k: usize) -> Label {
    Label::new(&[n as i64, k as i64])
}

/// Checks that `V` is unitary and that `V^d` is the identity.
pub fn generator_period_deviation(d: usize) -> Result<f64> {
    let v = mub_generator(d)?;
    Ok(distance(&unitary_power(&v, d as i64), &identity(d)))
}
