//! Hardy's vector representation: `μ(α) = Tr[ρ P(α)]` with `α = dk + j` and
//!
//! ```text
//! P_kj = φ_k φ_k*                    k = j
//!        (φ_k + φ_j)(φ_k + φ_j)*     k < j
//!        (φ_k + iφ_j)(φ_k + iφ_j)*   k > j
//! ```
//!
//! The off-diagonal operators are built from unnormalized vectors and have
//! trace 2. The effect vector solves `E = Σ ξ(α) P(α)`, so the dual is the
//! Gram dual.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::frame::{gram_dual, Frame, OutcomeSet};
use crate::operator::{basis_vector, cx, projector, ComplexMatrix, HermitianOperator};
use crate::reps::Representation;

pub fn hardy_operators(d: usize) -> Vec<ComplexMatrix> {
    let mut out = Vec::with_capacity(d * d);
    for k in 0..d {
        for j in 0..d {
            let v = if k == j {
                basis_vector(d, k)
            } else if k < j {
                basis_vector(d, k) + basis_vector(d, j)
            } else {
                basis_vector(d, k) + basis_vector(d, j) * cx(0.0, 1.0)
            };
            out.push(projector(&v));
        }
    }
    out
}

pub fn hardy_rep(d: usize) -> Result<Representation> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    let ops = hardy_operators(d).into_iter().map(HermitianOperator::hermitian_part).collect();
    let frame = Frame::new(d, OutcomeSet::grid(d, d), ops)?;
    let dual = gram_dual(&frame)?;
    Ok(Representation::new("hardy", frame, dual, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{born_pair, gram_matrix, is_dual_pair};
    use crate::operator::{random_effect, random_state, trace_product, DensityOperator};

    #[test]
    fn maximally_mixed_qubit() {
        let h = hardy_rep(2).unwrap();
        let mu = h.represent(&DensityOperator::maximally_mixed(2)).unwrap();
        let want = [0.5, 1.0, 1.0, 0.5];
        for (v, w) in mu.values.iter().zip(want) {
            assert!((v - w).abs() < 1e-12);
        }
    }

    #[test]
    fn operators_are_independent() {
        let g = gram_matrix(hardy_rep(2).unwrap().frame.operators());
        assert!(g.determinant().abs() > 1e-6);
    }

    #[test]
    fn dot_product_born_rule() {
        let h = hardy_rep(3).unwrap();
        assert!(is_dual_pair(&h.frame, &h.dual).holds);
        for seed in 0..20 {
            let rho = random_state(3, 2, seed).unwrap();
            let e = random_effect(3, seed + 50).unwrap();
            let p = born_pair(&h.represent(&rho).unwrap(), &h.effect_function(&e).unwrap()).unwrap();
            assert!((p - trace_product(rho.matrix(), e.matrix()).re).abs() < 1e-9);
        }
    }
}
