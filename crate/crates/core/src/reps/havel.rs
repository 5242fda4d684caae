//! Havel's real density matrix for `n` qubits.
//!
//! The qubit operator matrix is `[[I, X], [Y, Z]]` with `Y` from the
//! generalized Pauli family; `P_kj` tensors these over the binary digits of
//! `k` and `j`, most significant digit first.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::frame::{coefficients, DualFrame, Frame, OutcomeSet};
use crate::operator::{identity, make_pauli_family, tensor_all, ComplexMatrix, DensityOperator, HermitianOperator};
use crate::reps::Representation;

pub const MAX_QUBITS: usize = 6;

pub fn havel_operators(n_qubits: usize) -> Result<Vec<ComplexMatrix>> {
    if n_qubits == 0 || n_qubits > MAX_QUBITS {
        return Err(Error::UnsupportedDimension(format!("need 1..={MAX_QUBITS} qubits, got {n_qubits}")));
    }
    let fam = make_pauli_family(2)?;
    let cell = [[identity(2), fam.x.clone()], [fam.y.clone(), fam.z.clone()]];
    let d = 1usize << n_qubits;
    let mut out = Vec::with_capacity(d * d);
    for k in 0..d {
        for j in 0..d {
            let parts: Vec<ComplexMatrix> = (0..n_qubits)
                .map(|a| {
                    let shift = n_qubits - 1 - a;
                    cell[(k >> shift) & 1][(j >> shift) & 1].clone()
                })
                .collect();
            out.push(tensor_all(&parts));
        }
    }
    Ok(out)
}

/// Frame `P_kj` with dual `P_kj / d`, labels `(k, j)`.
pub fn havel_rep(n_qubits: usize) -> Result<Representation> {
    let ops = havel_operators(n_qubits)?;
    let d = 1usize << n_qubits;
    let outcomes = OutcomeSet::grid(d, d);
    let f: Vec<HermitianOperator> = ops.into_iter().map(HermitianOperator::new).collect::<Result<_>>()?;
    let dual_ops = f.iter().map(|p| p.scale(1.0 / d as f64)).collect();
    let frame = Frame::new(d, outcomes.clone(), f)?;
    let dual = DualFrame::new(d, outcomes, dual_ops)?;
    Ok(Representation::new("havel", frame, dual, None))
}

/// `σ_kj = Tr[ρ P_kj]` as a `d × d` real matrix.
pub fn real_density_matrix(rho: &DensityOperator) -> Result<DMatrix<f64>> {
    let d = rho.dim();
    if !d.is_power_of_two() || d < 2 {
        return Err(Error::UnsupportedDimension(format!("dimension {d} is not a power of two")));
    }
    let ops: Vec<HermitianOperator> =
        havel_operators(d.trailing_zeros() as usize)?.into_iter().map(HermitianOperator::hermitian_part).collect();
    let c = coefficients(rho.matrix(), &ops);
    Ok(DMatrix::from_row_slice(d, d, &c))
}
