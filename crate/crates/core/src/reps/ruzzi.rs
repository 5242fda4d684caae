//! Discrete Cahill–Glauber kernel at `s = 0`: the Fourier transform of the
//! Schwinger basis, `T(q,p) = (1/√d) Σ_{η,ξ} S(η,ξ) ω^{-(ηq + ξp)}`.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::geometry::prime_lattice;
use crate::operator::{cx, root_of_unity, schwinger_basis, zeros, ComplexMatrix};
use crate::reps::{from_phase_points, Representation};

pub fn fourier_kernels(d: usize) -> Result<Vec<ComplexMatrix>> {
    if d.is_multiple_of(2) {
        return Err(Error::UnsupportedDimension(format!("d must be odd, got {d}")));
    }
    let basis = schwinger_basis(d)?;
    let norm = cx(1.0 / (d as f64).sqrt(), 0.0);
    let mut out = Vec::with_capacity(d * d);
    for q in 0..d as i64 {
        for p in 0..d as i64 {
            let mut t = zeros(d);
            for ((eta, xi), s) in &basis {
                t += s * root_of_unity(d, -(eta * q + xi * p));
            }
            out.push(t * norm);
        }
    }
    Ok(out)
}

/// Frame `T(q,p)/d` with dual `T(q,p)`.
pub fn ruzzi_s0(d: usize) -> Result<Representation> {
    from_phase_points("ruzzi", d, fourier_kernels(d)?, prime_lattice(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::is_dual_pair;
    use crate::operator::{distance, identity, trace_product, DensityOperator};

    #[test]
    fn kernel_properties() {
        for d in [3, 5] {
            let t = fourier_kernels(d).unwrap();
            let mut sum = zeros(d);
            for (i, a) in t.iter().enumerate() {
                assert!(distance(a, &a.adjoint()) < 1e-12);
                assert!((a.trace() - cx(1.0, 0.0)).norm() < 1e-12);
                for (j, b) in t.iter().enumerate() {
                    let want = if i == j { d as f64 } else { 0.0 };
                    assert!((trace_product(a, b).re - want).abs() < 1e-10);
                }
                sum += a;
            }
            assert!(distance(&sum, &(identity(d) * cx(d as f64, 0.0))) < 1e-10);
        }
    }

    #[test]
    fn uniform_on_maximally_mixed() {
        let r = ruzzi_s0(3).unwrap();
        assert!(is_dual_pair(&r.frame, &r.dual).holds);
        let mu = r.represent(&DensityOperator::maximally_mixed(3)).unwrap();
        assert!(mu.values.iter().all(|v| (v - 1.0 / 9.0).abs() < 1e-12));
        assert!(matches!(ruzzi_s0(4), Err(Error::UnsupportedDimension(_))));
    }
}
