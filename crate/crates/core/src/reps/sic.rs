//! Symmetric informationally complete POVMs on the Weyl–Heisenberg orbit.
//!
//! The orbit vectors are `φ_k = X^j Z^m φ` with `k = d·j + m`. A fiducial is
//! found by minimizing the fourth frame potential
//! `Σ_k |⟨φ|X^jZ^m|φ⟩|⁴ / ‖φ‖⁸`, whose global minimum `2d/(d+1)` is reached
//! exactly at SIC fiducials.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;

use crate::error::{Error, Result};
use crate::frame::{DualFrame, Frame, OutcomeSet, QuasiDistribution};
use crate::operator::{
    cx, hermitian_eigen, identity, make_pauli_family, projector, seeded_rng, sigma, trace_product, ComplexMatrix,
    ComplexVector, Effect, HermitianOperator,
};
use crate::reps::Representation;

pub const MAX_SIC_DIM: usize = 8;
pub const SIC_ACCEPT: f64 = 1e-8;
pub const DEFAULT_STARTS: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct SicFiducial {
    pub dim: usize,
    pub vector: ComplexVector,
    /// Largest `||⟨φ_k|φ_l⟩|² - 1/(d+1)|` over distinct orbit pairs.
    pub deviation: f64,
}

impl SicFiducial {
    pub fn new(vector: ComplexVector) -> Result<Self> {
        let d = vector.len();
        let norm = vector.norm();
        if d < 2 || norm == 0.0 {
            return Err(Error::InvalidInput("fiducial must be a nonzero vector of length at least 2".into()));
        }
        let vector = vector / cx(norm, 0.0);
        let deviation = orbit_deviation(&orbit(&vector)?);
        Ok(Self { dim: d, vector, deviation })
    }

    pub fn orbit(&self) -> Vec<ComplexVector> {
        orbit(&self.vector).expect("dimension validated at construction")
    }

    /// Orbit projectors `Π_k`.
    pub fn projectors(&self) -> Vec<ComplexMatrix> {
        self.orbit().iter().map(projector).collect()
    }
}

fn displacements(d: usize) -> Result<Vec<ComplexMatrix>> {
    let fam = make_pauli_family(d)?;
    let mut out = Vec::with_capacity(d * d);
    for j in 0..d as i64 {
        for m in 0..d as i64 {
            out.push(fam.displacement(j, m));
        }
    }
    Ok(out)
}

fn orbit(phi: &ComplexVector) -> Result<Vec<ComplexVector>> {
    Ok(displacements(phi.len())?.iter().map(|u| u * phi).collect())
}

fn orbit_deviation(orbit: &[ComplexVector]) -> f64 {
    let target = 1.0 / (orbit[0].len() + 1) as f64;
    let mut worst: f64 = 0.0;
    for (i, a) in orbit.iter().enumerate() {
        for b in &orbit[i + 1..] {
            worst = worst.max((a.dotc(b).norm_sqr() - target).abs());
        }
    }
    worst
}

/// Fiducial with Bloch vector `(1,1,1)/√3`.
pub fn qubit_fiducial() -> SicFiducial {
    let [sx, sy, sz] = sigma();
    let r = 1.0 / 3f64.sqrt();
    let rho = (identity(2) + (sx + sy + sz) * cx(r, 0.0)) * cx(0.5, 0.0);
    let (_, vecs) = hermitian_eigen(&rho);
    SicFiducial::new(vecs.column(1).into_owned()).expect("qubit fiducial")
}

struct Potential {
    d: usize,
    ops: Vec<ComplexMatrix>,
}

impl Potential {
    fn to_complex(&self, x: &DVector<f64>) -> ComplexVector {
        ComplexVector::from_fn(self.d, |i, _| cx(x[i], x[i + self.d]))
    }

    /// Value and real gradient with respect to `(Re φ, Im φ)`.
    fn eval(&self, x: &DVector<f64>) -> (f64, DVector<f64>) {
        let phi = self.to_complex(x);
        let n = phi.norm_squared();
        let mut s = 0.0;
        let mut ds = ComplexVector::zeros(self.d);
        for u in &self.ops {
            let uphi = u * &phi;
            let g = phi.dotc(&uphi);
            let g2 = g.norm_sqr();
            s += g2 * g2;
            let udag_phi = u.adjoint() * &phi;
            ds += (uphi * g.conj() + udag_phi * g) * cx(2.0 * g2, 0.0);
        }
        let n4 = n * n * n * n;
        let value = s / n4;
        let dphi = ds / cx(n4, 0.0) - &phi * cx(4.0 * s / (n4 * n), 0.0);
        let grad =
            DVector::from_fn(2 * self.d, |i, _| if i < self.d { 2.0 * dphi[i].re } else { 2.0 * dphi[i - self.d].im });
        (value, grad)
    }
}

/// Gauss–Newton on the overlap equations `|⟨φ|U_k φ⟩|²/‖φ‖⁴ = 1/(d+1)`,
/// which converges to full precision once the potential minimizer is close.
fn polish(pot: &Potential, mut x: DVector<f64>, iters: usize) -> DVector<f64> {
    let d = pot.d;
    let target = 1.0 / (d + 1) as f64;
    for _ in 0..iters {
        let phi = pot.to_complex(&x);
        let n = phi.norm_squared();
        let rows = pot.ops.len() - 1;
        let mut r = DVector::zeros(rows);
        let mut jac = DMatrix::zeros(rows, 2 * d);
        for (k, u) in pot.ops.iter().skip(1).enumerate() {
            let uphi = u * &phi;
            let g = phi.dotc(&uphi);
            let g2 = g.norm_sqr();
            r[k] = g2 / (n * n) - target;
            let dg =
                (uphi * g.conj() + u.adjoint() * &phi * g) / cx(n * n, 0.0) - &phi * cx(2.0 * g2 / (n * n * n), 0.0);
            for i in 0..d {
                jac[(k, i)] = 2.0 * dg[i].re;
                jac[(k, i + d)] = 2.0 * dg[i].im;
            }
        }
        if r.amax() < 1e-15 {
            break;
        }
        let Ok(step) = jac.svd(true, true).solve(&(-r), 1e-10) else { break };
        x += step;
    }
    x
}

fn bfgs(pot: &Potential, mut x: DVector<f64>, max_iter: usize) -> DVector<f64> {
    let n = x.len();
    let mut h = DMatrix::<f64>::identity(n, n);
    let (mut f, mut g) = pot.eval(&x);
    for _ in 0..max_iter {
        if g.norm() < 1e-13 {
            break;
        }
        let mut dir = -(&h * &g);
        if dir.dot(&g) >= 0.0 {
            h = DMatrix::identity(n, n);
            dir = -g.clone();
        }
        let slope = dir.dot(&g);
        let mut step = 1.0;
        let mut accepted = None;
        for _ in 0..60 {
            let trial = &x + &dir * step;
            let (ft, gt) = pot.eval(&trial);
            if ft <= f + 1e-4 * step * slope {
                accepted = Some((trial, ft, gt));
                break;
            }
            step *= 0.5;
        }
        let Some((xn, fnew, gn)) = accepted else { break };
        let s = &xn - &x;
        let y = &gn - &g;
        let sy = s.dot(&y);
        if sy > 1e-300 {
            let rho = 1.0 / sy;
            let i = DMatrix::<f64>::identity(n, n);
            let left = &i - &s * y.transpose() * rho;
            let right = &i - &y * s.transpose() * rho;
            h = &left * &h * &right + &s * s.transpose() * rho;
        }
        let done = (f - fnew).abs() < 1e-16 * f.max(1.0);
        x = xn;
        f = fnew;
        g = gn;
        if done {
            break;
        }
    }
    x
}

/// Multi-start minimization of the frame potential from `max_starts` seeded
/// random vectors. Fails with the best deviation seen when no start reaches
/// [`SIC_ACCEPT`].
pub fn search_fiducial(d: usize, max_starts: usize, seed: u64) -> Result<SicFiducial> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    if d > MAX_SIC_DIM {
        return Err(Error::UnsupportedDimension(format!("SIC search supports d <= {MAX_SIC_DIM}, got {d}")));
    }
    let pot = Potential { d, ops: displacements(d)? };
    let mut rng = seeded_rng(seed);
    let mut best_deviation = f64::INFINITY;
    for _ in 0..max_starts {
        let x0 = DVector::from_fn(2 * d, |_, _| rng.random::<f64>() * 2.0 - 1.0);
        let x = bfgs(&pot, x0, 4000);
        let x = polish(&pot, x, 20);
        let fid = SicFiducial::new(pot.to_complex(&x))?;
        if fid.deviation < SIC_ACCEPT {
            return Ok(fid);
        }
        best_deviation = best_deviation.min(fid.deviation);
    }
    Err(Error::NoFiducialFound { best_deviation })
}

/// Analytic fiducial at `d = 2`, otherwise the default seeded search.
pub fn sic_fiducial(d: usize) -> Result<SicFiducial> {
    if d == 2 {
        return Ok(qubit_fiducial());
    }
    search_fiducial(d, DEFAULT_STARTS, 0)
}

/// Frame `Π_k/d` with dual `(d+1)Π_k - I`, labels `(j, m)` of `X^jZ^m`.
pub fn sic_rep_from(fid: &SicFiducial) -> Result<Representation> {
    if fid.deviation > 1e-6 {
        return Err(Error::NoFiducialFound { best_deviation: fid.deviation });
    }
    let d = fid.dim;
    let outcomes = OutcomeSet::grid(d, d);
    let pis = fid.projectors();
    let frame_ops = pis.iter().map(|p| HermitianOperator::hermitian_part(p * cx(1.0 / d as f64, 0.0))).collect();
    let dual_ops =
        pis.iter().map(|p| HermitianOperator::hermitian_part(p * cx((d + 1) as f64, 0.0) - identity(d))).collect();
    let frame = Frame::new(d, outcomes.clone(), frame_ops)?;
    let dual = DualFrame::new(d, outcomes, dual_ops)?;
    Ok(Representation::new("sic", frame, dual, None))
}

pub fn sic_rep(d: usize) -> Result<Representation> {
    sic_rep_from(&sic_fiducial(d)?)
}

/// Conditional probabilities `Tr(E Π_k)` of an effect given each orbit vector.
pub fn sic_conditionals(fid: &SicFiducial, effect: &Effect) -> Result<Vec<f64>> {
    if effect.dim() != fid.dim {
        return Err(Error::DimensionMismatch { expected: fid.dim, found: effect.dim() });
    }
    Ok(fid.projectors().iter().map(|p| trace_product(effect.matrix(), p).re).collect())
}

/// `Σ_k [(d+1) μ(k) - 1/d] · r(k)` for SIC probabilities `μ` and
/// conditionals `r(k) = Tr(E Π_k)`; equals `Tr(ρE)`.
pub fn sic_born(mu: &QuasiDistribution, conditionals: &[f64]) -> Result<f64> {
    if mu.values.len() != conditionals.len() {
        return Err(Error::DimensionMismatch { expected: mu.values.len(), found: conditionals.len() });
    }
    let d = mu.dim as f64;
    Ok(mu.values.iter().zip(conditionals).map(|(m, r)| ((d + 1.0) * m - 1.0 / d) * r).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{coefficients, deformed_born, gram_dual, is_dual_pair};
    use crate::operator::{distance, random_effect, random_state, DensityOperator};

    #[test]
    fn qubit_fiducial_overlaps() {
        let f = qubit_fiducial();
        assert!(f.deviation < 1e-12);
        let orbit = f.orbit();
        for a in 0..4 {
            for b in 0..4 {
                let want = if a == b { 1.0 } else { 1.0 / 3.0 };
                assert!((orbit[a].dotc(&orbit[b]).norm_sqr() - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn fiducial_state_distribution() {
        let f = qubit_fiducial();
        let rep = sic_rep_from(&f).unwrap();
        let mu = rep.represent(&DensityOperator::pure(&f.vector).unwrap()).unwrap();
        let want = [0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0];
        for (v, w) in mu.values.iter().zip(want) {
            assert!((v - w).abs() < 1e-12);
        }
    }

    #[test]
    fn potential_minimum_value() {
        let f = qubit_fiducial();
        let pot = Potential { d: 2, ops: displacements(2).unwrap() };
        let x = DVector::from_fn(4, |i, _| if i < 2 { f.vector[i].re } else { f.vector[i - 2].im });
        let (v, g) = pot.eval(&x);
        assert!((v - 4.0 / 3.0).abs() < 1e-12);
        assert!(g.norm() < 1e-10);
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let pot = Potential { d: 3, ops: displacements(3).unwrap() };
        let x = DVector::from_vec(alloc::vec![0.3, -0.2, 0.9, 0.1, 0.5, -0.4]);
        let (_, g) = pot.eval(&x);
        let h = 1e-6;
        for i in 0..6 {
            let mut xp = x.clone();
            xp[i] += h;
            let mut xm = x.clone();
            xm[i] -= h;
            let fd = (pot.eval(&xp).0 - pot.eval(&xm).0) / (2.0 * h);
            assert!((fd - g[i]).abs() < 1e-6, "component {i}: {fd} vs {}", g[i]);
        }
    }

    #[test]
    fn search_finds_qutrit_sic() {
        let f = search_fiducial(3, DEFAULT_STARTS, 0).unwrap();
        assert!(f.deviation < 1e-12, "{}", f.deviation);
        let rep = sic_rep_from(&f).unwrap();
        assert!(is_dual_pair(&rep.frame, &rep.dual).holds);
        let sum: ComplexMatrix = rep.frame.operator_sum();
        assert!(distance(&sum, &identity(3)) < 1e-9);
    }

    #[test]
    fn search_failure_reports_best_deviation() {
        match search_fiducial(4, 0, 1) {
            Err(Error::NoFiducialFound { best_deviation }) => assert!(best_deviation.is_infinite()),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(search_fiducial(9, 1, 0), Err(Error::UnsupportedDimension(_))));
    }

    #[test]
    fn born_rule_with_conditionals() {
        let f = search_fiducial(3, DEFAULT_STARTS, 0).unwrap();
        let rep = sic_rep_from(&f).unwrap();
        for seed in 0..100 {
            let rho = random_state(3, 1 + seed as usize % 3, seed).unwrap();
            let e = random_effect(3, 1000 + seed).unwrap();
            let mu = rep.represent(&rho).unwrap();
            let r = sic_conditionals(&f, &e).unwrap();
            let want = trace_product(rho.matrix(), e.matrix()).re;
            assert!((sic_born(&mu, &r).unwrap() - want).abs() < 1e-8);
        }
    }

    #[test]
    fn deformed_rule_uses_same_frame() {
        for d in [2, 3] {
            let rep = sic_rep(d).unwrap();
            let e = random_effect(d, 4).unwrap();
            let rho = random_state(d, 1, 5).unwrap();
            let mu = rep.represent(&rho).unwrap();
            let c = coefficients(e.matrix(), rep.frame.operators());
            let xi_same = QuasiDistribution::new("sic", d, rep.frame.outcomes().clone(), c).unwrap();
            let got = deformed_born(&mu, &xi_same, &rep.dual).unwrap();
            assert!((got - trace_product(rho.matrix(), e.matrix()).re).abs() < 1e-8);
        }
    }

    #[test]
    fn positive_frame_is_not_self_dual() {
        let rep = sic_rep(2).unwrap();
        let self_dual = DualFrame::new(2, rep.frame.outcomes().clone(), rep.frame.operators().to_vec()).unwrap();
        assert!(!is_dual_pair(&rep.frame, &self_dual).holds);
        let g = gram_dual(&rep.frame).unwrap();
        for (a, b) in g.operators().iter().zip(rep.dual.operators()) {
            assert!(distance(a.matrix(), b.matrix()) < 1e-9);
        }
    }
}
