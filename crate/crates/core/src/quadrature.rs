//! Sphere quadrature and point sets.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, exact for polynomials of
/// degree `2n - 1`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        x.push(z);
        w.push(2.0 / ((1.0 - z * z) * dp * dp));
    }
    (x, w)
}

/// Product rule on the unit sphere: Gauss–Legendre in `cos θ` times a
/// uniform grid of `2n` angles in `φ`. Weights sum to `4π`; the rule is exact
/// for spherical polynomials of degree below `2n`.
pub fn sphere_rule(n: usize) -> Vec<([f64; 3], f64)> {
    let (xs, ws) = gauss_legendre(n);
    let m = 2 * n;
    let mut out = Vec::with_capacity(n * m);
    for (ct, wt) in xs.iter().zip(&ws) {
        let st = (1.0 - ct * ct).max(0.0).sqrt();
        for k in 0..m {
            let phi = 2.0 * PI * k as f64 / m as f64;
            out.push(([st * phi.cos(), st * phi.sin(), *ct], wt * 2.0 * PI / m as f64));
        }
    }
    out
}

/// `n` nearly uniform points from the Fibonacci spiral.
pub fn fibonacci_points(n: usize) -> Vec<[f64; 3]> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * i as f64;
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

/// The six coordinate axes and the eight cube diagonals.
pub fn symmetric_directions() -> Vec<[f64; 3]> {
    let mut out = Vec::with_capacity(14);
    for axis in 0..3 {
        for s in [1.0, -1.0] {
            let mut v = [0.0; 3];
            v[axis] = s;
            out.push(v);
        }
    }
    let r = 1.0 / 3f64.sqrt();
    for sx in [1.0, -1.0] {
        for sy in [1.0, -1.0] {
            for sz in [1.0, -1.0] {
                out.push([sx * r, sy * r, sz * r]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_integrates_polynomials() {
        for n in 1..12 {
            let (x, w) = gauss_legendre(n);
            for deg in 0..2 * n {
                let got: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let want = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((got - want).abs() < 1e-12, "n={n} deg={deg}");
            }
        }
    }

    #[test]
    fn sphere_rule_moments() {
        let rule = sphere_rule(6);
        let area: f64 = rule.iter().map(|(_, w)| w).sum();
        assert!((area - 4.0 * PI).abs() < 1e-12);
        let zz: f64 = rule.iter().map(|(n, w)| w * n[2] * n[2]).sum();
        assert!((zz - 4.0 * PI / 3.0).abs() < 1e-12);
        let xxyy: f64 = rule.iter().map(|(n, w)| w * n[0] * n[0] * n[1] * n[1]).sum();
        assert!((xxyy - 4.0 * PI / 15.0).abs() < 1e-12);
    }

    #[test]
    fn point_sets_are_unit_vectors() {
        for v in fibonacci_points(500).iter().chain(symmetric_directions().iter()) {
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            assert!((n - 1.0).abs() < 1e-12);
        }
        assert_eq!(symmetric_directions().len(), 14);
    }
}
