//! Singlet correlations for spin measurements in the x–z plane and the
//! inequality `|C(a,b) - C(a,c)| ≤ 1 + C(b,c)`.

#[allow(unused_imports)]
use num_traits::Float;

use crate::analysis::entanglement::singlet;
use crate::operator::{cx, sigma, tensor, trace_product, ComplexMatrix};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellReport {
    pub c_ab: f64,
    pub c_ac: f64,
    pub c_bc: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub violated: bool,
}

fn spin_along(theta: f64) -> ComplexMatrix {
    let [sx, _, sz] = sigma();
    sz * cx(theta.cos(), 0.0) + sx * cx(theta.sin(), 0.0)
}

/// `⟨Ψ⁻| σ(a) ⊗ σ(b) |Ψ⁻⟩`, which equals `-cos(a - b)`.
pub fn correlation(a: f64, b: f64) -> f64 {
    trace_product(singlet().matrix(), &tensor(&spin_along(a), &spin_along(b))).re
}

/// Angles in radians.
pub fn bell_chsh_demo(a: f64, b: f64, c: f64) -> BellReport {
    let (c_ab, c_ac, c_bc) = (correlation(a, b), correlation(a, c), correlation(b, c));
    let lhs = (c_ab - c_ac).abs();
    let rhs = 1.0 + c_bc;
    BellReport { c_ab, c_ac, c_bc, lhs, rhs, violated: lhs > rhs + 1e-12 }
}

/// Largest `lhs - rhs` over a grid of angle triples in `[0°, 360°)`.
pub fn max_violation(step_degrees: f64) -> (f64, [f64; 3]) {
    let steps = (360.0 / step_degrees).round() as usize;
    let rad = |i: usize| (i as f64 * step_degrees).to_radians();
    // the correlations depend only on angle differences, so fix a = 0
    let mut best = (f64::NEG_INFINITY, [0.0; 3]);
    for j in 0..steps {
        for k in 0..steps {
            let (b, c) = (rad(j), rad(k));
            let gap = (-(b.cos()) + c.cos()).abs() - (1.0 - (b - c).cos());
            if gap > best.0 {
                best = (gap, [0.0, b, c]);
            }
        }
    }
    best
}
