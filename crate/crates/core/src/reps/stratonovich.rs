//! Spherical Stratonovich kernels for a spin `s` system, `d = 2s + 1`.
//!
//! ```text
//! Δ(n) = Σ_m Σ_l w_l (2l+1)/(2s+1) C^{s l s}_{m 0 m} |m⟩_n⟨m|
//! ```
//!
//! where `|m⟩_n` are eigenvectors of `n·S`. Sign weights `w_l = ±1` give a
//! self-dual kernel; a general nonzero weight vector `γ` pairs with its
//! reciprocal `γ⁻¹`. Sampling the kernel at `d²` points (a constellation)
//! gives a discrete frame whose dual comes from the Gram matrix.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::frame::{gram_dual, gram_matrix, Frame, Label, OutcomeSet};
use crate::geometry::{GeometryKind, PhaseSpaceGeometry};
use crate::operator::{
    cx, distance, hermitian_basis, hermitian_eigen, identity, projector, seeded_rng, trace_product, zeros,
    ComplexMatrix, HermitianOperator,
};
use crate::quadrature::sphere_rule;
use crate::reps::Representation;

/// Condition number above which a constellation is rejected.
pub const MAX_CONDITION: f64 = 1e8;
const MAX_DRAWS: usize = 100;

fn twice(x: f64) -> Result<i64> {
    let t = (2.0 * x).round();
    if (2.0 * x - t).abs() > 1e-9 {
        return Err(Error::InvalidInput(format!("{x} is not a half-integer")));
    }
    Ok(t as i64)
}

fn ln_factorial(n: i64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Clebsch–Gordan coefficient `⟨j1 m1; j2 m2 | J M⟩` (Condon–Shortley
/// phases) for half-integer arguments. Returns zero when the selection rules
/// fail.
pub fn clebsch_gordan(j1: f64, m1: f64, j2: f64, m2: f64, j: f64, m: f64) -> Result<f64> {
    let [a, am, b, bm, c, cm] = [twice(j1)?, twice(m1)?, twice(j2)?, twice(m2)?, twice(j)?, twice(m)?];
    if am + bm != cm || am.abs() > a || bm.abs() > b || cm.abs() > c {
        return Ok(0.0);
    }
    if c > a + b
        || c < (a - b).abs()
        || (a + b + c) % 2 != 0
        || (a + am) % 2 != 0
        || (b + bm) % 2 != 0
        || (c + cm) % 2 != 0
    {
        return Ok(0.0);
    }
    // All factorial arguments below are integers once halved.
    let h = |x: i64| x / 2;
    let prefactor =
        ((c + 1) as f64).ln() + ln_factorial(h(c + a - b)) + ln_factorial(h(c - a + b)) + ln_factorial(h(a + b - c))
            - ln_factorial(h(a + b + c) + 1)
            + ln_factorial(h(c + cm))
            + ln_factorial(h(c - cm))
            + ln_factorial(h(a - am))
            + ln_factorial(h(a + am))
            + ln_factorial(h(b - bm))
            + ln_factorial(h(b + bm));
    let k_min = 0.max(h(b - c - am)).max(h(a - c + bm));
    let k_max = h(a + b - c).min(h(a - am)).min(h(b + bm));
    let mut sum = 0.0;
    for k in k_min..=k_max {
        let denom = ln_factorial(k)
            + ln_factorial(h(a + b - c) - k)
            + ln_factorial(h(a - am) - k)
            + ln_factorial(h(b + bm) - k)
            + ln_factorial(h(c - b + am) + k)
            + ln_factorial(h(c - a - bm) + k);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (0.5 * prefactor - denom).exp();
    }
    Ok(sum)
}

/// Spin matrices `(S_x, S_y, S_z)` in the basis `m = s, s-1, …, -s`.
pub fn spin_matrices(d: usize) -> [ComplexMatrix; 3] {
    let s = (d as f64 - 1.0) / 2.0;
    let mut sp = zeros(d);
    for i in 1..d {
        let m = s - i as f64;
        sp[(i - 1, i)] = cx((s * (s + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let sm = sp.adjoint();
    let sx = (&sp + &sm) * cx(0.5, 0.0);
    let sy = (&sp - &sm) * cx(0.0, -0.5);
    let sz = ComplexMatrix::from_fn(d, d, |i, j| if i == j { cx(s - i as f64, 0.0) } else { cx(0.0, 0.0) });
    [sx, sy, sz]
}

fn dim_of_spin(spin: f64) -> Result<usize> {
    let t = twice(spin)?;
    if t < 1 {
        return Err(Error::InvalidInput(format!("spin must be positive, got {spin}")));
    }
    Ok(t as usize + 1)
}

fn check_point(n: [f64; 3]) -> Result<()> {
    let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidPoint(format!("direction has norm {norm}")));
    }
    Ok(())
}

fn check_weights(d: usize, weights: &[f64]) -> Result<()> {
    if weights.len() != d {
        return Err(Error::InvalidInput(format!("expected {d} weights, got {}", weights.len())));
    }
    if (weights[0] - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidWeight(0));
    }
    if let Some(l) = weights.iter().position(|w| *w == 0.0 || !w.is_finite()) {
        return Err(Error::InvalidWeight(l));
    }
    Ok(())
}

/// All-ones sign vector, the self-dual choice.
pub fn unit_signs(spin: f64) -> Result<Vec<f64>> {
    Ok(vec![1.0; dim_of_spin(spin)?])
}

pub fn reciprocal_weights(weights: &[f64]) -> Vec<f64> {
    weights.iter().map(|w| 1.0 / w).collect()
}

/// Per-`m` eigenvalues of the kernel, `m` ascending from `-s`.
fn kernel_spectrum(d: usize, weights: &[f64]) -> Result<Vec<f64>> {
    let s = (d as f64 - 1.0) / 2.0;
    (0..d)
        .map(|i| {
            let m = -s + i as f64;
            let mut acc = 0.0;
            for (l, w) in weights.iter().enumerate() {
                let c = clebsch_gordan(s, m, l as f64, 0.0, s, m)?;
                acc += w * (2 * l + 1) as f64 / d as f64 * c;
            }
            Ok(acc)
        })
        .collect()
}

fn kernel_with_spectrum(d: usize, spectrum: &[f64], n: [f64; 3]) -> ComplexMatrix {
    let [sx, sy, sz] = spin_matrices(d);
    let ns = sx * cx(n[0], 0.0) + sy * cx(n[1], 0.0) + sz * cx(n[2], 0.0);
    let (_, vecs) = hermitian_eigen(&ns);
    let mut out = zeros(d);
    for (i, w) in spectrum.iter().enumerate() {
        out += projector(&vecs.column(i).into_owned()) * cx(*w, 0.0);
    }
    out
}

/// Kernel `Δ(n)` for the given spin and weights `w_0 = 1, w_1, …, w_{2s}`.
pub fn stratonovich_kernel(spin: f64, weights: &[f64], n: [f64; 3]) -> Result<HermitianOperator> {
    let d = dim_of_spin(spin)?;
    check_weights(d, weights)?;
    check_point(n)?;
    let spectrum = kernel_spectrum(d, weights)?;
    Ok(HermitianOperator::hermitian_part(kernel_with_spectrum(d, &spectrum, n)))
}

fn rule_order(d: usize) -> usize {
    d + 2
}

/// Deviation of `(d/4π) ∫ Δ(n) dn` from the identity.
pub fn normalization_residual(spin: f64, weights: &[f64]) -> Result<f64> {
    let d = dim_of_spin(spin)?;
    check_weights(d, weights)?;
    let spectrum = kernel_spectrum(d, weights)?;
    let mut acc = zeros(d);
    for (n, w) in sphere_rule(rule_order(d)) {
        acc += kernel_with_spectrum(d, &spectrum, n) * cx(w, 0.0);
    }
    acc *= cx(d as f64 / (4.0 * core::f64::consts::PI), 0.0);
    Ok(distance(&acc, &identity(d)))
}

/// Largest deviation of `(d/4π) ∫ Tr[A Δ_w(n)] Δ_{w⁻¹}(n) dn` from `A` over
/// a Hermitian operator basis.
pub fn duality_residual(spin: f64, weights: &[f64]) -> Result<f64> {
    let d = dim_of_spin(spin)?;
    check_weights(d, weights)?;
    let fwd = kernel_spectrum(d, weights)?;
    let back = kernel_spectrum(d, &reciprocal_weights(weights))?;
    let rule: Vec<(ComplexMatrix, ComplexMatrix, f64)> = sphere_rule(rule_order(d))
        .into_iter()
        .map(|(n, w)| (kernel_with_spectrum(d, &fwd, n), kernel_with_spectrum(d, &back, n), w))
        .collect();
    let scale = d as f64 / (4.0 * core::f64::consts::PI);
    let mut worst: f64 = 0.0;
    for a in hermitian_basis(d) {
        let mut acc = zeros(d);
        for (k, k_dual, w) in &rule {
            acc += k_dual * cx(w * scale * trace_product(&a, k).re, 0.0);
        }
        worst = worst.max(distance(&acc, &a));
    }
    Ok(worst)
}

/// `d²` unit vectors at which the kernel is sampled.
#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    pub points: Vec<[f64; 3]>,
}

impl Constellation {
    pub fn new(points: Vec<[f64; 3]>) -> Result<Self> {
        for p in &points {
            check_point(*p)?;
        }
        Ok(Self { points })
    }
}

/// Vertices of a regular tetrahedron, the symmetric constellation for `s = 1/2`.
pub fn tetrahedral_constellation() -> Constellation {
    let r = 1.0 / 3f64.sqrt();
    Constellation { points: vec![[r, r, r], [r, -r, -r], [-r, r, -r], [-r, -r, r]] }
}

fn kernels_at(spin: f64, c: &Constellation) -> Result<Vec<HermitianOperator>> {
    let d = dim_of_spin(spin)?;
    if c.points.len() != d * d {
        return Err(Error::InvalidInput(format!("constellation needs {} points, got {}", d * d, c.points.len())));
    }
    let ones = vec![1.0; d];
    c.points.iter().map(|n| stratonovich_kernel(spin, &ones, *n)).collect()
}

/// Condition number of the Gram matrix of the kernels at a constellation.
pub fn constellation_condition(spin: f64, c: &Constellation) -> Result<f64> {
    let g = gram_matrix(&kernels_at(spin, c)?);
    let ev = g.symmetric_eigen().eigenvalues;
    let lo = ev.iter().fold(f64::INFINITY, |m, l| m.min(l.abs()));
    let hi = ev.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    Ok(if lo == 0.0 { f64::INFINITY } else { hi / lo })
}

fn draw_constellation<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Constellation {
    let points = (0..count)
        .map(|_| loop {
            let v: [f64; 3] = [rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal)];
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if n > 1e-12 {
                break [v[0] / n, v[1] / n, v[2] / n];
            }
        })
        .collect();
    Constellation { points }
}

/// Draws a single constellation and rejects it when ill-conditioned.
pub fn try_random_constellation(spin: f64, seed: u64) -> Result<Constellation> {
    let d = dim_of_spin(spin)?;
    let c = draw_constellation(&mut seeded_rng(seed), d * d);
    let cond = constellation_condition(spin, &c)?;
    if cond > MAX_CONDITION {
        return Err(Error::RetryConstellation(cond));
    }
    Ok(c)
}

/// Uniform random constellation, redrawn until well-conditioned.
pub fn random_constellation(spin: f64, seed: u64) -> Result<Constellation> {
    let d = dim_of_spin(spin)?;
    let mut rng = seeded_rng(seed);
    let mut last = f64::INFINITY;
    for _ in 0..MAX_DRAWS {
        let c = draw_constellation(&mut rng, d * d);
        last = constellation_condition(spin, &c)?;
        if last <= MAX_CONDITION {
            return Ok(c);
        }
    }
    Err(Error::RetryConstellation(last))
}

/// Frame `Δ(n_ν)/d` over the constellation with its Gram dual.
pub fn stratonovich_discrete(spin: f64, c: &Constellation) -> Result<Representation> {
    let d = dim_of_spin(spin)?;
    let cond = constellation_condition(spin, c)?;
    if cond > MAX_CONDITION {
        return Err(Error::RetryConstellation(cond));
    }
    let ops = kernels_at(spin, c)?.iter().map(|k| k.scale(1.0 / d as f64)).collect();
    let outcomes = OutcomeSet::indexed(d * d);
    let labels: Vec<Label> = outcomes.labels().to_vec();
    let frame = Frame::new(d, outcomes, ops)?;
    let dual = gram_dual(&frame)?;
    let geometry = PhaseSpaceGeometry::points_only(GeometryKind::Constellation, labels);
    Ok(Representation::new("stratonovich", frame, dual, Some(geometry)))
}
