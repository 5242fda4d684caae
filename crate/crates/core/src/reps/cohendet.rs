//! Fano operators for odd dimension and the extended phase space.
//!
//! `W_{mn} φ_k = ω^{2n(k-m)} φ_{k-2m}` and `Δ_{qp} = W_{qp} P`. These are
//! Hermitian, unitary and orthogonal, and `Δ_{qp}` coincides with the
//! Wootters operator at `(-q, p)`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::frame::{Label, OutcomeSet, QuasiDistribution};
use crate::geometry::prime_lattice;
use crate::operator::{make_pauli_family, root_of_unity, zeros, ComplexMatrix};
use crate::reps::{from_phase_points, Representation};

fn check_odd(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    if d.is_multiple_of(2) {
        return Err(Error::UnsupportedDimension(format!("d must be odd, got {d}")));
    }
    Ok(())
}

/// `W_{mn}` with exponents taken mod `d`.
pub fn fano_displacement(m: i64, n: i64, d: usize) -> ComplexMatrix {
    let di = d as i64;
    let mut w = zeros(d);
    for k in 0..di {
        w[((k - 2 * m).rem_euclid(di) as usize, k as usize)] = root_of_unity(d, 2 * n * (k - m));
    }
    w
}

pub fn fano_operators(d: usize) -> Result<Vec<ComplexMatrix>> {
    check_odd(d)?;
    let parity = make_pauli_family(d)?.parity;
    let mut out = Vec::with_capacity(d * d);
    for q in 0..d as i64 {
        for p in 0..d as i64 {
            out.push(fano_displacement(q, p, d) * &parity);
        }
    }
    Ok(out)
}

/// Frame `Δ_{qp}/d` with dual `Δ_{qp}`, so `μ(q,p) = Tr[ρ Δ_{qp}]/d`.
pub fn cohendet(d: usize) -> Result<Representation> {
    let ops = fano_operators(d)?;
    from_phase_points("cohendet", d, ops, prime_lattice(d))
}

/// Extended distribution `μ(q,p,σ) = (2/d + σ μ(q,p)) / (4d)` over labels
/// `(q, p, σ)`, the `σ = +1` block first.
pub fn extended_distribution(mu_odd: &QuasiDistribution) -> Result<QuasiDistribution> {
    let d = mu_odd.dim;
    let mut labels = Vec::with_capacity(2 * mu_odd.values.len());
    let mut values = Vec::with_capacity(2 * mu_odd.values.len());
    for sigma in [1i64, -1] {
        for (l, v) in mu_odd.outcomes.labels().iter().zip(&mu_odd.values) {
            let mut parts = l.0.clone();
            parts.push(sigma);
            labels.push(Label(parts));
            values.push((2.0 / d as f64 + sigma as f64 * v) / (4.0 * d as f64));
        }
    }
    QuasiDistribution::new("cohendet-extended", d, OutcomeSet::new(labels)?, values)
}
