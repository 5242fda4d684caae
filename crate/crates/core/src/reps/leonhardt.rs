//! Leonhardt's discrete Wigner functions.
//!
//! Odd `d`: kernel `X^{2q} Z^{2p} P ω^{2qp}` on `Z_d × Z_d`, a minimal frame.
//! Even `d`: kernel `X^q Z^p P τ^{qp} / (2d)` with `τ = e^{iπ/d}` on the
//! doubled lattice `Z_{2d} × Z_{2d}`. The `4d²` even kernels sum to the
//! identity but span only `d²` directions, so they form an overcomplete frame
//! and the dual is the canonical one.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::frame::{Frame, OutcomeSet};
use crate::geometry::{prime_lattice, GeometryKind, PhaseSpaceGeometry};
use crate::operator::{cx, half_phase, make_pauli_family, root_of_unity, ComplexMatrix, HermitianOperator};
use crate::reps::{from_phase_points, Representation};

pub fn odd_kernels(d: usize) -> Result<Vec<ComplexMatrix>> {
    let fam = make_pauli_family(d)?;
    let mut out = Vec::with_capacity(d * d);
    for q in 0..d as i64 {
        for p in 0..d as i64 {
            out.push(fam.displacement(2 * q, 2 * p) * &fam.parity * root_of_unity(d, 2 * q * p));
        }
    }
    Ok(out)
}

/// Kernels over `(q, p) ∈ Z_{2d}²`, row-major.
pub fn even_kernels(d: usize) -> Result<Vec<ComplexMatrix>> {
    let fam = make_pauli_family(d)?;
    let mut out = Vec::with_capacity(4 * d * d);
    for q in 0..2 * d as i64 {
        for p in 0..2 * d as i64 {
            let k = fam.displacement(q, p) * &fam.parity * half_phase(d, q * p) * cx(1.0 / (2 * d) as f64, 0.0);
            out.push(k);
        }
    }
    Ok(out)
}

pub fn leonhardt(d: usize) -> Result<Representation> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    if d % 2 == 1 {
        return from_phase_points("leonhardt", d, odd_kernels(d)?, prime_lattice(d));
    }
    let ops: Vec<HermitianOperator> =
        even_kernels(d)?.into_iter().map(HermitianOperator::new).collect::<Result<_>>()?;
    let outcomes = OutcomeSet::grid(2 * d, 2 * d);
    let geometry = PhaseSpaceGeometry::points_only(GeometryKind::DoubleLattice, outcomes.labels().to_vec());
    let frame = Frame::new(d, outcomes, ops)?;
    Representation::with_canonical_dual("leonhardt", frame, Some(geometry))
}
