//! Frames, duals and the quasi-probability maps they induce.
//!
//! Operators are handled through their real coordinates in the generalized
//! Gell-Mann basis (see [`crate::operator::hermitian_basis`]). In those
//! coordinates the frame operator is the real symmetric matrix `V Vᵀ`, where
//! the columns of `V` are the coordinates of the frame elements.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use nalgebra::{DMatrix, DVector};
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::operator::{
    cx, distance, identity, trace_product, zeros, ComplexMatrix, DensityOperator, Effect, HermitianOperator, TAU_EQ,
};

/// Outcome identifier: a short tuple of integers such as `(q, p)` or `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(pub Vec<i64>);

impl Label {
    pub fn new(parts: &[i64]) -> Self {
        Self(parts.to_vec())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Ordered, duplicate-free list of labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeSet {
    labels: Vec<Label>,
}

impl OutcomeSet {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidOutcomeSet("empty".into()));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidOutcomeSet("duplicate labels".into()));
        }
        Ok(Self { labels })
    }

    /// Labels `0..n` as one-component tuples.
    pub fn indexed(n: usize) -> Self {
        Self { labels: (0..n as i64).map(|i| Label(alloc::vec![i])).collect() }
    }

    /// Row-major grid `(a, b)` over `0..rows × 0..cols`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut labels = Vec::with_capacity(rows * cols);
        for a in 0..rows as i64 {
            for b in 0..cols as i64 {
                labels.push(Label(alloc::vec![a, b]));
            }
        }
        Self { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Real Gell-Mann coordinates of a Hermitian matrix, read off its entries.
pub fn coords(a: &ComplexMatrix) -> DVector<f64> {
    let d = a.nrows();
    let mut out = DVector::zeros(d * d);
    let r2 = 2f64.sqrt();
    let mut trace = 0.0;
    for k in 0..d {
        trace += a[(k, k)].re;
    }
    out[0] = trace / (d as f64).sqrt();
    let mut i = 1;
    for j in 0..d {
        for k in j + 1..d {
            let z = (a[(j, k)] + a[(k, j)].conj()) * 0.5;
            out[i] = r2 * z.re;
            out[i + 1] = -r2 * z.im;
            i += 2;
        }
    }
    let mut partial = 0.0;
    for l in 1..d {
        partial += a[(l - 1, l - 1)].re;
        out[i] = (partial - l as f64 * a[(l, l)].re) / ((l * (l + 1)) as f64).sqrt();
        i += 1;
    }
    out
}

/// Inverse of [`coords`].
pub fn from_coords(c: &DVector<f64>, d: usize) -> ComplexMatrix {
    let mut m = identity(d) * cx(c[0] / (d as f64).sqrt(), 0.0);
    let r = 1.0 / 2f64.sqrt();
    let mut i = 1;
    for j in 0..d {
        for k in j + 1..d {
            let z = cx(c[i] * r, -c[i + 1] * r);
            m[(j, k)] += z;
            m[(k, j)] += z.conj();
            i += 2;
        }
    }
    for l in 1..d {
        let n = c[i] / ((l * (l + 1)) as f64).sqrt();
        for m_ in 0..l {
            m[(m_, m_)] += cx(n, 0.0);
        }
        m[(l, l)] -= cx(l as f64 * n, 0.0);
        i += 1;
    }
    m
}

fn coord_matrix(d: usize, ops: &[HermitianOperator]) -> DMatrix<f64> {
    let mut v = DMatrix::zeros(d * d, ops.len());
    for (j, op) in ops.iter().enumerate() {
        v.set_column(j, &coords(op.matrix()));
    }
    v
}

fn check_family(dim: usize, outcomes: &OutcomeSet, operators: &[HermitianOperator]) -> Result<()> {
    if dim < 1 {
        return Err(Error::InvalidDimension(dim));
    }
    if operators.len() != outcomes.len() {
        return Err(Error::InvalidOutcomeSet(alloc::format!(
            "{} labels for {} operators",
            outcomes.len(),
            operators.len()
        )));
    }
    for op in operators {
        if op.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: op.dim() });
        }
    }
    Ok(())
}

/// Family `F(λ)` with a positive lower frame bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    dim: usize,
    outcomes: OutcomeSet,
    operators: Vec<HermitianOperator>,
}

impl Frame {
    /// Validates the frame condition; fails with `NotAFrame` otherwise.
    pub fn new(dim: usize, outcomes: OutcomeSet, operators: Vec<HermitianOperator>) -> Result<Self> {
        check_family(dim, &outcomes, &operators)?;
        if operators.len() < dim * dim {
            return Err(Error::NotAFrame { lower: 0.0 });
        }
        let f = Self { dim, outcomes, operators };
        frame_bounds(&f)?;
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn outcomes(&self) -> &OutcomeSet {
        &self.outcomes
    }

    pub fn operators(&self) -> &[HermitianOperator] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// `|Λ| = d²`.
    pub fn is_minimal(&self) -> bool {
        self.len() == self.dim * self.dim
    }

    /// `Σ_λ F(λ)`.
    pub fn operator_sum(&self) -> ComplexMatrix {
        sum_ops(self.dim, &self.operators)
    }
}

/// Family `D(λ)` over the same outcome set as some frame.
#[derive(Debug, Clone, PartialEq)]
pub struct DualFrame {
    dim: usize,
    outcomes: OutcomeSet,
    operators: Vec<HermitianOperator>,
}

impl DualFrame {
    /// Shape checks only; duality is established by [`is_dual_pair`].
    pub fn new(dim: usize, outcomes: OutcomeSet, operators: Vec<HermitianOperator>) -> Result<Self> {
        check_family(dim, &outcomes, &operators)?;
        Ok(Self { dim, outcomes, operators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn outcomes(&self) -> &OutcomeSet {
        &self.outcomes
    }

    pub fn operators(&self) -> &[HermitianOperator] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }
}

fn sum_ops(d: usize, ops: &[HermitianOperator]) -> ComplexMatrix {
    let mut s = zeros(d);
    for op in ops {
        s += op.matrix();
    }
    s
}

/// Real function on an outcome set representing a state.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasiDistribution {
    pub representation: String,
    pub dim: usize,
    pub outcomes: OutcomeSet,
    pub values: Vec<f64>,
}

impl QuasiDistribution {
    pub fn new(representation: &str, dim: usize, outcomes: OutcomeSet, values: Vec<f64>) -> Result<Self> {
        if values.len() != outcomes.len() {
            return Err(Error::InvalidOutcomeSet(alloc::format!(
                "{} values for {} labels",
                values.len(),
                outcomes.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { representation: representation.to_string(), dim, outcomes, values })
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn value(&self, label: &Label) -> Option<f64> {
        self.outcomes.position(label).map(|i| self.values[i])
    }
}

/// Real function on an outcome set representing an effect.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectFunction {
    pub outcomes: OutcomeSet,
    pub values: Vec<f64>,
}

/// Non-fatal diagnostics attached to a representation result.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// `Σ F(λ)` differs from the identity by this Frobenius distance, so
    /// state values need not sum to one.
    UnnormalizedRepresentation { sum_deviation: f64 },
    /// Some dual element has trace away from one by this much, so the
    /// identity effect does not map to the all-ones function.
    NonNormalizedDual { max_trace_deviation: f64 },
}

/// A result value together with an optional warning.
#[derive(Debug, Clone, PartialEq)]
pub struct Checked<T> {
    pub value: T,
    pub warning: Option<Warning>,
}

impl<T> Checked<T> {
    pub fn into_value(self) -> T {
        self.value
    }
}

fn real_symmetric_spectrum(s: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let eig = s.clone().symmetric_eigen();
    (eig.eigenvalues, eig.eigenvectors)
}

/// Frame operator `S = Σ_λ |F(λ)⟩⟩⟨⟨F(λ)|` as a `d² × d²` real matrix.
pub fn frame_operator(frame: &Frame) -> DMatrix<f64> {
    frame_operator_of(frame.dim, &frame.operators)
}

fn frame_operator_of(d: usize, ops: &[HermitianOperator]) -> DMatrix<f64> {
    let v = coord_matrix(d, ops);
    let s = &v * v.transpose();
    (&s + s.transpose()) * 0.5
}

fn bounds_of(s: &DMatrix<f64>) -> (f64, f64) {
    let (ev, _) = real_symmetric_spectrum(s);
    (ev.min(), ev.max())
}

/// Extreme eigenvalues `(a, b)` of the frame operator.
pub fn frame_bounds(frame: &Frame) -> Result<(f64, f64)> {
    let (a, b) = bounds_of(&frame_operator(frame));
    if a <= TAU_EQ * b.max(1.0) || a <= 1e-10 * b {
        return Err(Error::NotAFrame { lower: a });
    }
    Ok((a, b))
}

/// Canonical dual `D(λ) = S⁻¹ F(λ)`.
pub fn canonical_dual(frame: &Frame) -> Result<DualFrame> {
    let d = frame.dim;
    let v = coord_matrix(d, &frame.operators);
    // S⁻¹V = U Σ⁻¹ Wᵀ for V = U Σ Wᵀ, without squaring the condition number.
    let rows = v.nrows();
    let svd = v.svd(true, true);
    let (u, w_t) = (svd.u.ok_or(Error::NonFinite)?, svd.v_t.ok_or(Error::NonFinite)?);
    let sigma = &svd.singular_values;
    let (lower, top) = (sigma.min().powi(2), sigma.max().powi(2));
    if sigma.len() < rows || lower <= 1e-10 * top {
        return Err(Error::NotAFrame { lower });
    }
    let inv_diag = DVector::from_iterator(sigma.len(), sigma.iter().map(|&l| 1.0 / l));
    let dual_coords = u * DMatrix::from_diagonal(&inv_diag) * w_t;
    let ops = (0..frame.len())
        .map(|j| HermitianOperator::hermitian_part(from_coords(&dual_coords.column(j).into_owned(), d)))
        .collect();
    DualFrame::new(d, frame.outcomes.clone(), ops)
}

/// Gram matrix `G_{μν} = Tr[F(μ) F(ν)]`.
pub fn gram_matrix(ops: &[HermitianOperator]) -> DMatrix<f64> {
    let n = ops.len();
    DMatrix::from_fn(n, n, |i, j| trace_product(ops[i].matrix(), ops[j].matrix()).re)
}

/// Dual of a minimal frame via the inverse Gram matrix:
/// `D(μ) = Σ_ν G⁻¹_{νμ} F(ν)`.
pub fn gram_dual(frame: &Frame) -> Result<DualFrame> {
    let d = frame.dim;
    if !frame.is_minimal() {
        return Err(Error::NotABasis);
    }
    let g = gram_matrix(&frame.operators);
    let (ev, _) = real_symmetric_spectrum(&g);
    let top = ev.iter().fold(0.0f64, |m, &l| m.max(l.abs()));
    if ev.iter().any(|l| l.abs() <= 1e-10 * top) {
        return Err(Error::NotABasis);
    }
    let g_inv = g.try_inverse().ok_or(Error::NotABasis)?;
    let ops = (0..frame.len())
        .map(|mu| {
            let mut acc = zeros(d);
            for (nu, f) in frame.operators.iter().enumerate() {
                acc += f.matrix() * cx(g_inv[(nu, mu)], 0.0);
            }
            HermitianOperator::hermitian_part(acc)
        })
        .collect();
    DualFrame::new(d, frame.outcomes.clone(), ops)
}

/// Outcome of a duality test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityCheck {
    pub holds: bool,
    /// Largest Frobenius deviation `‖A - Σ Tr[F(λ)A] D(λ)‖` over an
    /// orthonormal Hermitian operator basis.
    pub residual: f64,
}

pub fn is_dual_pair(frame: &Frame, dual: &DualFrame) -> DualityCheck {
    is_dual_pair_within(frame, dual, TAU_EQ)
}

pub fn is_dual_pair_within(frame: &Frame, dual: &DualFrame, tol: f64) -> DualityCheck {
    if frame.outcomes != dual.outcomes || frame.dim != dual.dim {
        return DualityCheck { holds: false, residual: f64::INFINITY };
    }
    let d = frame.dim;
    let vf = coord_matrix(d, &frame.operators);
    let vd = coord_matrix(d, &dual.operators);
    // column i of M is the reconstruction of basis element i
    let m = vd * vf.transpose() - DMatrix::<f64>::identity(d * d, d * d);
    let residual = (0..d * d).map(|i| m.column(i).norm()).fold(0.0, f64::max);
    DualityCheck { holds: residual < tol, residual }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `Tr[A O(λ)]` for each operator of a family.
pub fn coefficients(a: &ComplexMatrix, ops: &[HermitianOperator]) -> Vec<f64> {
    ops.iter().map(|o| trace_product(a, o.matrix()).re).collect()
}

/// `μ(λ) = Tr[ρ F(λ)]`, with a warning when `Σ F(λ) ≠ I`.
pub fn represent_state(rho: &DensityOperator, frame: &Frame, name: &str) -> Result<Checked<QuasiDistribution>> {
    check_dim(frame.dim, rho.dim())?;
    let values = coefficients(rho.matrix(), &frame.operators);
    let dev = distance(&frame.operator_sum(), &identity(frame.dim));
    let warning = (dev > TAU_EQ * (frame.dim as f64).sqrt().max(1.0))
        .then_some(Warning::UnnormalizedRepresentation { sum_deviation: dev });
    let value = QuasiDistribution::new(name, frame.dim, frame.outcomes.clone(), values)?;
    Ok(Checked { value, warning })
}

/// `ξ(λ) = Tr[E D(λ)]`, with a warning when some `Tr D(λ) ≠ 1`.
pub fn represent_effect(effect: &Effect, dual: &DualFrame) -> Result<Checked<EffectFunction>> {
    check_dim(dual.dim, effect.dim())?;
    let values = coefficients(effect.matrix(), &dual.operators);
    let dev = dual.operators.iter().map(|o| (o.trace() - 1.0).abs()).fold(0.0, f64::max);
    let warning = (dev > TAU_EQ).then_some(Warning::NonNormalizedDual { max_trace_deviation: dev });
    Ok(Checked { value: EffectFunction { outcomes: dual.outcomes.clone(), values }, warning })
}

/// `Σ_λ μ(λ) ξ(λ)`.
pub fn born_pair(mu: &QuasiDistribution, xi: &EffectFunction) -> Result<f64> {
    if mu.outcomes != xi.outcomes {
        return Err(Error::OutcomeSetMismatch);
    }
    Ok(mu.values.iter().zip(&xi.values).map(|(a, b)| a * b).sum())
}

/// `Σ_λ μ(λ) D(λ)`.
pub fn reconstruct_state(mu: &QuasiDistribution, dual: &DualFrame) -> Result<HermitianOperator> {
    if mu.outcomes != dual.outcomes {
        return Err(Error::OutcomeSetMismatch);
    }
    let mut acc = zeros(dual.dim);
    for (v, d) in mu.values.iter().zip(&dual.operators) {
        acc += d.matrix() * cx(*v, 0.0);
    }
    Ok(HermitianOperator::hermitian_part(acc))
}

/// Linear map between two representations of the same Hilbert space.
///
/// `matrix[(λ′, λ)] = Tr[D′(λ′) F(λ)]` and the target distribution is
/// `μ(λ) = Σ_λ′ matrix[(λ′, λ)] μ′(λ′)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Transform {
    pub source: OutcomeSet,
    pub target: OutcomeSet,
    pub matrix: DMatrix<f64>,
}

impl Transform {
    pub fn apply(&self, mu: &QuasiDistribution, name: &str) -> Result<QuasiDistribution> {
        if mu.outcomes != self.source {
            return Err(Error::OutcomeSetMismatch);
        }
        let v = DVector::from_column_slice(&mu.values);
        let out = self.matrix.transpose() * v;
        QuasiDistribution::new(name, mu.dim, self.target.clone(), out.iter().copied().collect())
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Transform) -> Result<Transform> {
        if self.target != next.source {
            return Err(Error::OutcomeSetMismatch);
        }
        Ok(Transform { source: self.source.clone(), target: next.target.clone(), matrix: &self.matrix * &next.matrix })
    }
}

pub fn transform_matrix(source_frame: &Frame, source_dual: &DualFrame, target: &Frame) -> Result<Transform> {
    check_dim(source_frame.dim, target.dim)?;
    check_dim(source_frame.dim, source_dual.dim)?;
    if source_frame.outcomes != source_dual.outcomes {
        return Err(Error::OutcomeSetMismatch);
    }
    let vd = coord_matrix(source_dual.dim, &source_dual.operators);
    let vf = coord_matrix(target.dim, &target.operators);
    Ok(Transform {
        source: source_frame.outcomes.clone(),
        target: target.outcomes.clone(),
        matrix: vd.transpose() * vf,
    })
}

/// `Σ_{λ,λ′} μ(λ) ξ(λ′) Tr[D(λ) D(λ′)]` where both `μ` and `ξ` come from
/// the same frame.
pub fn deformed_born(mu: &QuasiDistribution, xi_same: &QuasiDistribution, dual: &DualFrame) -> Result<f64> {
    if mu.outcomes != dual.outcomes || xi_same.outcomes != dual.outcomes {
        return Err(Error::OutcomeSetMismatch);
    }
    let g = gram_matrix(&dual.operators);
    let a = DVector::from_column_slice(&mu.values);
    let b = DVector::from_column_slice(&xi_same.values);
    Ok(a.dot(&(g * b)))
}

/// Negativity summary of a quasi-distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Negativity {
    pub min_value: f64,
    /// `Σ |μ(λ)|` over negative values.
    pub l1_negativity: f64,
}

pub fn negativity(mu: &QuasiDistribution) -> Negativity {
    let min_value = mu.values.iter().copied().fold(f64::INFINITY, f64::min);
    let l1_negativity = mu.values.iter().filter(|v| **v < 0.0).map(|v| -v).sum();
    Negativity { min_value, l1_negativity }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{hermitian_basis, hermitian_coords, random_effect, random_state, sample_state, seeded_rng};
    use proptest::prelude::*;

    fn basis_frame(d: usize) -> Frame {
        let ops = hermitian_basis(d).into_iter().map(HermitianOperator::hermitian_part).collect();
        Frame::new(d, OutcomeSet::indexed(d * d), ops).unwrap()
    }

    fn random_basis_frame(d: usize, seed: u64) -> Frame {
        let mut rng = seeded_rng(seed);
        let ops: Vec<_> = (0..d * d).map(|_| sample_state(&mut rng, d, d).unwrap().as_hermitian().clone()).collect();
        Frame::new(d, OutcomeSet::indexed(d * d), ops).unwrap()
    }

    fn max_op_distance(a: &[HermitianOperator], b: &[HermitianOperator]) -> f64 {
        a.iter().zip(b).map(|(x, y)| distance(x.matrix(), y.matrix())).fold(0.0, f64::max)
    }

    #[test]
    fn coordinates_match_trace_definition() {
        for d in 2..=5 {
            let basis = hermitian_basis(d);
            for seed in 0..5 {
                let rho = random_state(d, d, seed).unwrap();
                let fast = coords(rho.matrix());
                let slow = hermitian_coords(rho.matrix(), &basis);
                assert!((&fast - &slow).norm() < 1e-12);
                assert!(distance(&from_coords(&fast, d), rho.matrix()) < 1e-12);
            }
        }
    }

    #[test]
    fn orthonormal_basis_frame() {
        let f = basis_frame(3);
        let (a, b) = frame_bounds(&f).unwrap();
        assert!((a - 1.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12);
        assert!((frame_operator(&f) - DMatrix::<f64>::identity(9, 9)).norm() < 1e-12);
        let g = gram_dual(&f).unwrap();
        assert!(max_op_distance(g.operators(), f.operators()) < 1e-12);
    }

    #[test]
    fn doubled_frame_doubles_operator() {
        let f = random_basis_frame(2, 3);
        let mut ops = f.operators().to_vec();
        ops.extend(f.operators().iter().cloned());
        let doubled = Frame::new(2, OutcomeSet::indexed(8), ops).unwrap();
        let diff = frame_operator(&doubled) - frame_operator(&f) * 2.0;
        assert!(diff.norm() < 1e-12);
    }

    #[test]
    fn too_few_operators_is_not_a_frame() {
        let ops: Vec<_> = hermitian_basis(2).into_iter().take(3).map(HermitianOperator::hermitian_part).collect();
        assert!(matches!(Frame::new(2, OutcomeSet::indexed(3), ops), Err(Error::NotAFrame { .. })));
        // four operators that only span three directions
        let mut ops: Vec<_> = hermitian_basis(2).into_iter().take(3).map(HermitianOperator::hermitian_part).collect();
        ops.push(ops[0].clone());
        assert!(matches!(Frame::new(2, OutcomeSet::indexed(4), ops), Err(Error::NotAFrame { .. })));
    }

    #[test]
    fn tight_frame_dual_is_rescaling() {
        let ops: Vec<_> =
            hermitian_basis(2).into_iter().map(|b| HermitianOperator::hermitian_part(b * cx(0.5, 0.0))).collect();
        let f = Frame::new(2, OutcomeSet::indexed(4), ops).unwrap();
        let (a, b) = frame_bounds(&f).unwrap();
        assert!((a - 0.25).abs() < 1e-12 && (b - 0.25).abs() < 1e-12);
        let dual = canonical_dual(&f).unwrap();
        let scaled: Vec<_> = f.operators().iter().map(|o| o.scale(1.0 / a)).collect();
        assert!(max_op_distance(dual.operators(), &scaled) < 1e-12);
    }

    #[test]
    fn gram_and_canonical_duals_agree() {
        for seed in 0..10 {
            let f = random_basis_frame(2, seed);
            let g = gram_dual(&f).unwrap();
            let c = canonical_dual(&f).unwrap();
            assert!(max_op_distance(g.operators(), c.operators()) < 1e-9);
            assert!(is_dual_pair(&f, &c).holds);
        }
        let f = random_basis_frame(3, 99);
        let g = gram_dual(&f).unwrap();
        let c = canonical_dual(&f).unwrap();
        assert!(max_op_distance(g.operators(), c.operators()) < 1e-9);
    }

    #[test]
    fn duality_detects_non_duals() {
        let f = random_basis_frame(2, 4);
        let bogus = DualFrame::new(2, f.outcomes().clone(), f.operators().to_vec()).unwrap();
        let check = is_dual_pair(&f, &bogus);
        assert!(!check.holds && check.residual > 1e-3);
    }

    #[test]
    fn born_rule_and_reconstruction() {
        let f = random_basis_frame(3, 12);
        let dual = canonical_dual(&f).unwrap();
        for seed in 0..20 {
            let rho = random_state(3, 1 + seed as usize % 3, seed).unwrap();
            let e = random_effect(3, 1000 + seed).unwrap();
            let mu = represent_state(&rho, &f, "random").unwrap().value;
            let xi = represent_effect(&e, &dual).unwrap().value;
            let direct = trace_product(rho.matrix(), e.matrix()).re;
            assert!((born_pair(&mu, &xi).unwrap() - direct).abs() < 1e-9);
            let back = reconstruct_state(&mu, &dual).unwrap();
            assert!(distance(back.matrix(), rho.matrix()) < 1e-9);
            let xi_same =
                QuasiDistribution::new("same", 3, f.outcomes().clone(), coefficients(e.matrix(), f.operators()))
                    .unwrap();
            assert!((deformed_born(&mu, &xi_same, &dual).unwrap() - direct).abs() < 1e-9);
        }
    }

    #[test]
    fn warnings_surface_normalization() {
        let f = random_basis_frame(2, 5);
        let dual = canonical_dual(&f).unwrap();
        let rho = DensityOperator::maximally_mixed(2);
        let r = represent_state(&rho, &f, "x").unwrap();
        assert!(matches!(r.warning, Some(Warning::UnnormalizedRepresentation { .. })));
        let e = represent_effect(&Effect::identity(2), &dual).unwrap();
        assert!(matches!(e.warning, Some(Warning::NonNormalizedDual { .. })));
        let zero = represent_effect(&Effect::zero(2), &dual).unwrap();
        assert!(zero.value.values.iter().all(|v| *v == 0.0));
    }

    #[test]
    fn transform_identity_and_composition() {
        let a = random_basis_frame(2, 1);
        let b = random_basis_frame(2, 2);
        let c = random_basis_frame(2, 3);
        let (da, db) = (canonical_dual(&a).unwrap(), canonical_dual(&b).unwrap());
        let t_aa = transform_matrix(&a, &da, &a).unwrap();
        assert!((&t_aa.matrix - DMatrix::<f64>::identity(4, 4)).norm() < 1e-9);
        let t_ab = transform_matrix(&a, &da, &b).unwrap();
        let t_bc = transform_matrix(&b, &db, &c).unwrap();
        let t_ac = transform_matrix(&a, &da, &c).unwrap();
        assert!((t_ab.then(&t_bc).unwrap().matrix - &t_ac.matrix).norm() < 1e-8);
        let rho = random_state(2, 2, 7).unwrap();
        let mu_a = represent_state(&rho, &a, "a").unwrap().value;
        let mu_c = represent_state(&rho, &c, "c").unwrap().value;
        let via = t_ac.apply(&mu_a, "c").unwrap();
        for (x, y) in via.values.iter().zip(&mu_c.values) {
            assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn negativity_summary() {
        let os = OutcomeSet::indexed(4);
        let p = QuasiDistribution::new("p", 2, os.clone(), alloc::vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        let n = negativity(&p);
        assert!(n.min_value >= 0.0 && n.l1_negativity == 0.0);
        let q = QuasiDistribution::new("q", 2, os, alloc::vec![-0.25, 0.5, -0.25, 1.0]).unwrap();
        let n = negativity(&q);
        assert_eq!(n.min_value, -0.25);
        assert_eq!(n.l1_negativity, 0.5);
    }

    #[test]
    fn mismatched_outcomes_are_errors() {
        let a = random_basis_frame(2, 1);
        let da = canonical_dual(&a).unwrap();
        let rho = random_state(2, 1, 1).unwrap();
        let mu = represent_state(&rho, &a, "a").unwrap().value;
        let other = OutcomeSet::grid(2, 2);
        let xi = EffectFunction { outcomes: other, values: alloc::vec![0.0; 4] };
        assert_eq!(born_pair(&mu, &xi), Err(Error::OutcomeSetMismatch));
        let rho3 = random_state(3, 1, 1).unwrap();
        assert!(matches!(represent_state(&rho3, &a, "a"), Err(Error::DimensionMismatch { .. })));
        assert!(reconstruct_state(&mu, &da).is_ok());
    }

    #[test]
    fn outcome_set_validation() {
        assert!(OutcomeSet::new(alloc::vec![Label::new(&[0]), Label::new(&[0])]).is_err());
        assert!(OutcomeSet::new(Vec::new()).is_err());
        assert_eq!(Label::new(&[1, -2]).to_string(), "1,-2");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn canonical_dual_reconstructs(seed in 0u64..10_000, d in 2usize..5, extra in 0usize..4) {
            let mut rng = seeded_rng(seed);
            let ops: Vec<_> = (0..d * d + extra)
                .map(|_| sample_state(&mut rng, d, d).unwrap().as_hermitian().clone())
                .collect();
            let f = Frame::new(d, OutcomeSet::indexed(d * d + extra), ops).unwrap();
            let dual = canonical_dual(&f).unwrap();
            prop_assert!(is_dual_pair(&f, &dual).residual < 1e-9);
            let s = frame_operator(&f);
            prop_assert!((&s - s.transpose()).norm() < 1e-12);
            let (a, b) = frame_bounds(&f).unwrap();
            prop_assert!(a > 0.0 && a <= b);
        }

        #[test]
        fn born_pair_is_bilinear_in_states(seed in 0u64..10_000, t in 0.0f64..1.0) {
            let f = random_basis_frame(2, 77);
            let dual = canonical_dual(&f).unwrap();
            let r1 = random_state(2, 1, seed).unwrap();
            let r2 = random_state(2, 2, seed + 1).unwrap();
            let mix = DensityOperator::new(r1.matrix() * cx(t, 0.0) + r2.matrix() * cx(1.0 - t, 0.0)).unwrap();
            let e = random_effect(2, seed + 2).unwrap();
            let xi = represent_effect(&e, &dual).unwrap().value;
            let b = |r: &DensityOperator| born_pair(&represent_state(r, &f, "x").unwrap().value, &xi).unwrap();
            prop_assert!((b(&mix) - (t * b(&r1) + (1.0 - t) * b(&r2))).abs() < 1e-9);
        }
    }
}
