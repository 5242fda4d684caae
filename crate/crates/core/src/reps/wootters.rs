//! Wootters phase-point operators on `Z_d × Z_d` and their tensor products.
//!
//! For odd prime `d`,
//! `A(q,p) = (1/d) Σ_{j,m} ω^{pj - qm + jm/2} X^j Z^m`, which is covariant:
//! `X^a Z^b A(q,p) (X^a Z^b)† = A(q+a, p+b)`. Vertical lines `q = c` carry
//! the `Z` eigenbasis and horizontal lines `p = c` the `X` eigenbasis.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::geometry::{prime_lattice, product_points, GeometryKind, PhaseSpaceGeometry};
use crate::operator::{cx, half_phase, identity, make_pauli_family, root_of_unity, tensor_all, zeros, ComplexMatrix};
use crate::reps::{from_phase_points, Representation};

/// Phase-point operators for odd prime `d` in row-major `(q, p)` order.
pub fn prime_phase_points(d: usize) -> Result<Vec<ComplexMatrix>> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    if d.is_multiple_of(2) || !is_prime(d as u64) {
        return Err(Error::UnsupportedDimension(format!("d must be an odd prime, got {d}")));
    }
    let fam = make_pauli_family(d)?;
    let di = d as i64;
    let disp: Vec<ComplexMatrix> =
        (0..di).flat_map(|j| (0..di).map(move |m| (j, m))).map(|(j, m)| fam.displacement(j, m)).collect();
    let mut out = Vec::with_capacity(d * d);
    for q in 0..di {
        for p in 0..di {
            let mut a = zeros(d);
            for j in 0..di {
                for m in 0..di {
                    let phase = root_of_unity(d, p * j - q * m) * half_phase(d, j * m);
                    a += &disp[(j * di + m) as usize] * phase;
                }
            }
            out.push(a * cx(1.0 / d as f64, 0.0));
        }
    }
    Ok(out)
}

/// Qubit phase-point operators `A(q,p) = [I + (-1)^q Z + (-1)^p X + (-1)^{q+p} Y]/2`
/// with `Y` from the generalized Pauli family.
pub fn qubit_phase_points() -> Vec<ComplexMatrix> {
    let fam = make_pauli_family(2).expect("d = 2 is valid");
    let mut out = Vec::with_capacity(4);
    for q in 0..2 {
        for p in 0..2 {
            let sq = if q == 0 { 1.0 } else { -1.0 };
            let sp = if p == 0 { 1.0 } else { -1.0 };
            let a = identity(2) + &fam.z * cx(sq, 0.0) + &fam.x * cx(sp, 0.0) + &fam.y * cx(sq * sp, 0.0);
            out.push(a * cx(0.5, 0.0));
        }
    }
    out
}

pub fn wootters_prime(d: usize) -> Result<Representation> {
    let a = prime_phase_points(d)?;
    from_phase_points("wootters", d, a, prime_lattice(d))
}

pub fn wootters_qubit() -> Result<Representation> {
    from_phase_points("wootters", 2, qubit_phase_points(), prime_lattice(2))
}

/// Wootters representation for `d = 2` or odd prime `d`.
pub fn wootters(d: usize) -> Result<Representation> {
    if d == 2 {
        wootters_qubit()
    } else {
        wootters_prime(d)
    }
}

fn factor_phase_points(d: usize) -> Result<Vec<ComplexMatrix>> {
    if d == 2 {
        Ok(qubit_phase_points())
    } else {
        prime_phase_points(d)
    }
}

/// `A_α = A_{α₁} ⊗ A_{α₂} ⊗ ...` over the product of the factor lattices.
/// Labels are `(q₁, p₁, q₂, p₂, ...)` with the first factor slowest.
pub fn wootters_composite(dims: &[usize]) -> Result<Representation> {
    if dims.is_empty() {
        return Err(Error::InvalidInput("no factors".into()));
    }
    if dims.len() == 1 {
        return wootters(dims[0]);
    }
    let factors: Vec<Vec<ComplexMatrix>> = dims.iter().map(|&d| factor_phase_points(d)).collect::<Result<_>>()?;
    let total: usize = dims.iter().product();
    let mut ops: Vec<Vec<ComplexMatrix>> = alloc::vec![Vec::new()];
    for f in &factors {
        let mut next = Vec::with_capacity(ops.len() * f.len());
        for head in &ops {
            for a in f {
                let mut h = head.clone();
                h.push(a.clone());
                next.push(h);
            }
        }
        ops = next;
    }
    let phase_points = ops.iter().map(|parts| tensor_all(parts)).collect();
    let lattices: Vec<_> = dims.iter().map(|&d| prime_lattice(d)).collect();
    let geometry = PhaseSpaceGeometry::points_only(GeometryKind::CompositeLattice, product_points(&lattices));
    from_phase_points("wootters", total, phase_points, geometry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{canonical_dual, frame_bounds, is_dual_pair, negativity};
    use crate::operator::{distance, projector, random_state, tensor, trace_product, DensityOperator};

    fn gram_deviation(rep: &Representation, scale: f64) -> f64 {
        let a = rep.dual.operators();
        let mut worst: f64 = 0.0;
        for (i, x) in a.iter().enumerate() {
            for (j, y) in a.iter().enumerate() {
                let want = if i == j { scale } else { 0.0 };
                worst = worst.max((trace_product(x.matrix(), y.matrix()).re - want).abs());
            }
        }
        worst
    }

    #[test]
    fn d3_traces_and_gram() {
        let w = wootters_prime(3).unwrap();
        for a in w.dual.operators() {
            assert!((a.trace() - 1.0).abs() < 1e-12);
        }
        assert!(gram_deviation(&w, 3.0) < 1e-10);
        let (a, b) = frame_bounds(&w.frame).unwrap();
        assert!((a - 1.0 / 3.0).abs() < 1e-12 && (b - 1.0 / 3.0).abs() < 1e-12);
        let dual = canonical_dual(&w.frame).unwrap();
        for (x, y) in dual.operators().iter().zip(w.dual.operators()) {
            assert!(distance(x.matrix(), y.matrix()) < 1e-10);
        }
        assert!(is_dual_pair(&w.frame, &w.dual).holds);
    }

    #[test]
    fn striations_are_pvms() {
        for d in [2, 3, 5] {
            let w = wootters(d).unwrap();
            let g = w.geometry.as_ref().unwrap();
            for s in &g.striations {
                let mut sum = zeros(d);
                for &l in s {
                    let q = w.line_operator(&g.lines[l]);
                    assert!(distance(&(&q * &q), &q) < 1e-10);
                    assert!((q.trace().re - 1.0).abs() < 1e-10);
                    sum += q;
                }
                assert!(distance(&sum, &identity(d)) < 1e-10);
            }
        }
    }

    #[test]
    fn vertical_and_horizontal_lines() {
        for d in [2, 3, 5] {
            let w = wootters(d).unwrap();
            let g = w.geometry.as_ref().unwrap();
            let fam = make_pauli_family(d).unwrap();
            for (c, &l) in g.striations[0].iter().enumerate() {
                let q = w.line_operator(&g.lines[l]);
                // vertical line q = c is the Z eigenprojector with eigenvalue ω^c
                let zq = &fam.z * &q;
                assert!(distance(&zq, &(&q * root_of_unity(d, c as i64))) < 1e-10);
                assert!(distance(&q, &projector(&crate::operator::basis_vector(d, c))) < 1e-10);
            }
            for &l in &g.striations[1] {
                let q = w.line_operator(&g.lines[l]);
                assert!(distance(&(&fam.x * &q), &(&q * &fam.x)) < 1e-10);
            }
        }
    }

    #[test]
    fn covariance_under_displacements() {
        let d = 5;
        let a = prime_phase_points(d).unwrap();
        let fam = make_pauli_family(d).unwrap();
        for (s, t) in [(1, 0), (0, 1), (2, 3)] {
            let u = fam.displacement(s, t);
            for q in 0..d {
                for p in 0..d {
                    let moved = &u * &a[q * d + p] * u.adjoint();
                    let target = &a[((q + s as usize) % d) * d + (p + t as usize) % d];
                    assert!(distance(&moved, target) < 1e-10);
                }
            }
        }
    }

    #[test]
    fn qubit_properties() {
        let w = wootters_qubit().unwrap();
        assert!(gram_deviation(&w, 2.0) < 1e-12);
        let r3 = 3f64.sqrt();
        for a in w.dual.operators() {
            let ev = a.eigenvalues();
            assert!((ev[0] - (1.0 - r3) / 2.0).abs() < 1e-12);
            assert!((ev[1] - (1.0 + r3) / 2.0).abs() < 1e-12);
        }
        let fam = make_pauli_family(2).unwrap();
        let a00 = (identity(2) + &fam.z + &fam.x + &fam.y) * cx(0.5, 0.0);
        assert!(distance(w.dual.operators()[0].matrix(), &a00) < 1e-15);
    }

    #[test]
    fn qubit_bloch_minimum() {
        let w = wootters_qubit().unwrap();
        let r = 1.0 / 3f64.sqrt();
        let rho = DensityOperator::from_bloch([r, r, r]).unwrap();
        let n = negativity(&w.represent(&rho).unwrap());
        assert!((n.min_value - (1.0 - 3f64.sqrt()) / 4.0).abs() < 1e-12);
        let z_plus = DensityOperator::from_bloch([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(negativity(&w.represent(&z_plus).unwrap()).l1_negativity, 0.0);
    }

    #[test]
    fn maximally_mixed_is_uniform() {
        let w = wootters_prime(3).unwrap();
        let mu = w.represent(&DensityOperator::maximally_mixed(3)).unwrap();
        assert!(mu.values.iter().all(|v| (v - 1.0 / 9.0).abs() < 1e-12));
        let back = w.reconstruct(&mu).unwrap();
        assert!(distance(back.matrix(), DensityOperator::maximally_mixed(3).matrix()) < 1e-12);
        let c = wootters_composite(&[3, 3]).unwrap();
        let mu = c.represent(&DensityOperator::maximally_mixed(9)).unwrap();
        assert!(mu.values.iter().all(|v| (v - 1.0 / 81.0).abs() < 1e-12));
    }

    #[test]
    fn composite_gram_and_factorization() {
        let c = wootters_composite(&[2, 2]).unwrap();
        assert_eq!(c.frame.len(), 16);
        assert!(gram_deviation(&c, 4.0) < 1e-10);
        let q = wootters_qubit().unwrap();
        let r1 = random_state(2, 2, 1).unwrap();
        let r2 = random_state(2, 1, 2).unwrap();
        let prod = DensityOperator::new(tensor(r1.matrix(), r2.matrix())).unwrap();
        let mu = c.represent(&prod).unwrap();
        let (m1, m2) = (q.represent(&r1).unwrap(), q.represent(&r2).unwrap());
        for i in 0..4 {
            for j in 0..4 {
                assert!((mu.values[i * 4 + j] - m1.values[i] * m2.values[j]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn unsupported_dimensions() {
        assert!(matches!(wootters_prime(4), Err(Error::UnsupportedDimension(_))));
        assert!(matches!(wootters_prime(9), Err(Error::UnsupportedDimension(_))));
        assert!(matches!(wootters_composite(&[2, 4]), Err(Error::UnsupportedDimension(_))));
    }
}
