//! Two-qubit entanglement tests on the product Wootters phase space.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::frame::QuasiDistribution;
use crate::operator::{cx, eigenvalues, partial_transpose, tau_for, ComplexVector, DensityOperator, TAU_EQ};
use crate::reps::wootters::wootters_composite;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Entangled,
    Inconclusive,
    Separable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Entangled => "entangled",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Separable => "separable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Minimum of the two-qubit discrete Wigner function against a fixed
    /// threshold.
    Negativity,
    /// Sign of the smallest eigenvalue of the partial transpose.
    PartialTranspose,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Negativity => "negativity",
            Method::PartialTranspose => "partial-transpose",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementVerdict {
    pub min_value: f64,
    pub threshold: f64,
    pub verdict: Verdict,
    pub method: Method,
}

/// `(1 - √3)/8`, the value reached by the product of a `+z` eigenstate and
/// the Bloch-`(1,1,1)/√3` state.
pub fn franco_penna_threshold() -> f64 {
    (1.0 - 3f64.sqrt()) / 8.0
}

/// Declares entanglement when the two-qubit Wigner function drops below
/// [`franco_penna_threshold`].
///
/// This is a heuristic. The product of the Bloch-`(1,1,1)/√3` state and
/// its antipode is separable yet reaches `-1/8`, below the threshold; see
/// [`separable_extreme_state`].
pub fn franco_penna(mu: &QuasiDistribution) -> Result<EntanglementVerdict> {
    if mu.dim != 4 || mu.values.len() != 16 || mu.outcomes.labels().iter().any(|l| l.0.len() != 4) {
        return Err(Error::InvalidInput(format!(
            "expected a two-qubit Wootters distribution, got {} values at d={}",
            mu.values.len(),
            mu.dim
        )));
    }
    let min_value = mu.values.iter().copied().fold(f64::INFINITY, f64::min);
    let threshold = franco_penna_threshold();
    let verdict = if min_value < threshold - TAU_EQ { Verdict::Entangled } else { Verdict::Inconclusive };
    Ok(EntanglementVerdict { min_value, threshold, verdict, method: Method::Negativity })
}

/// Two-qubit Wootters distribution of a state.
pub fn two_qubit_wigner(rho: &DensityOperator) -> Result<QuasiDistribution> {
    check_two_qubit(rho)?;
    wootters_composite(&[2, 2])?.represent(rho)
}

fn check_two_qubit(rho: &DensityOperator) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    Ok(())
}

/// Peres–Horodecki test, exact for two qubits.
pub fn ppt_separability_two_qubit(rho: &DensityOperator) -> Result<EntanglementVerdict> {
    check_two_qubit(rho)?;
    let pt = partial_transpose(rho, 1, &[2, 2])?;
    let min_value = pt.eigenvalues()[0];
    let verdict = if min_value < -tau_for(1.0) { Verdict::Entangled } else { Verdict::Separable };
    Ok(EntanglementVerdict { min_value, threshold: 0.0, verdict, method: Method::PartialTranspose })
}

/// Minima of the Wigner functions of `ρ` and of its partial transpose. The
/// partial transpose of an entangled state is not a state, but it still has
/// a phase-space function through the same frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleWigner {
    pub state_min: f64,
    pub transposed_min: f64,
}

impl DoubleWigner {
    pub fn both_nonnegative(&self) -> bool {
        self.state_min >= -TAU_EQ && self.transposed_min >= -TAU_EQ
    }
}

pub fn double_wigner(rho: &DensityOperator) -> Result<DoubleWigner> {
    check_two_qubit(rho)?;
    let rep = wootters_composite(&[2, 2])?;
    let pt = partial_transpose(rho, 1, &[2, 2])?;
    let state_min = fold_min(&rep.represent(rho)?.values);
    let transposed: Vec<f64> =
        rep.frame.operators().iter().map(|f| crate::operator::trace_product(pt.matrix(), f.matrix()).re).collect();
    Ok(DoubleWigner { state_min, transposed_min: fold_min(&transposed) })
}

fn fold_min(v: &[f64]) -> f64 {
    v.iter().copied().fold(f64::INFINITY, f64::min)
}

/// The singlet `(|01⟩ - |10⟩)/√2`.
pub fn singlet() -> DensityOperator {
    let r = 1.0 / 2f64.sqrt();
    let v = ComplexVector::from_vec(alloc::vec![cx(0.0, 0.0), cx(r, 0.0), cx(-r, 0.0), cx(0.0, 0.0)]);
    DensityOperator::pure(&v).expect("unit vector")
}

/// `v |Ψ⁻⟩⟨Ψ⁻| + (1 - v) I/4`.
pub fn werner_state(visibility: f64) -> Result<DensityOperator> {
    if !(0.0..=1.0).contains(&visibility) {
        return Err(Error::InvalidInput(format!("visibility {visibility} outside [0, 1]")));
    }
    let m = singlet().matrix() * cx(visibility, 0.0) + crate::operator::identity(4) * cx((1.0 - visibility) / 4.0, 0.0);
    DensityOperator::new(m)
}

/// `|+z⟩⟨+z| ⊗ ρ(1,1,1)/√3`, the product state whose minimum equals the
/// Franco–Penna threshold.
pub fn threshold_product_state() -> DensityOperator {
    let r = 1.0 / 3f64.sqrt();
    product(&[0.0, 0.0, 1.0], &[r, r, r])
}

/// `ρ(1,1,1)/√3 ⊗ ρ(-1,-1,-1)/√3`: separable, with Wigner minimum
/// `(1-√3)/4 · (1+√3)/4 = -1/8`.
pub fn separable_extreme_state() -> DensityOperator {
    let r = 1.0 / 3f64.sqrt();
    product(&[r, r, r], &[-r, -r, -r])
}

fn product(a: &[f64; 3], b: &[f64; 3]) -> DensityOperator {
    let ra = DensityOperator::from_bloch(*a).expect("unit Bloch vector");
    let rb = DensityOperator::from_bloch(*b).expect("unit Bloch vector");
    DensityOperator::new(crate::operator::tensor(ra.matrix(), rb.matrix())).expect("product of states")
}

/// Smallest eigenvalue of the partial transpose of a Werner state, `(1 - 3v)/4`.
pub fn werner_pt_min(visibility: f64) -> Result<f64> {
    Ok(eigenvalues(partial_transpose(&werner_state(visibility)?, 1, &[2, 2])?.matrix())[0])
}
