//! Factories for the discrete quasi-probability representations.
//!
//! Each factory returns a [`Representation`]: a frame, a dual, and when the
//! outcome set has phase-space structure, its geometry.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Result;
use crate::frame::{
    canonical_dual, reconstruct_state, represent_effect, represent_state, Checked, DualFrame, EffectFunction, Frame,
    QuasiDistribution,
};
use crate::geometry::PhaseSpaceGeometry;
use crate::operator::{cx, zeros, ComplexMatrix, DensityOperator, Effect, HermitianOperator};

pub mod cohendet;
pub mod ghw;
pub mod hardy;
pub mod havel;
pub mod leonhardt;
pub mod mub;
pub mod registry;
pub mod ruzzi;
pub mod sic;
pub mod stratonovich;
pub mod wootters;

pub use registry::{build, sic_fiducial_for, RepParams, REPRESENTATION_NAMES};

#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub name: String,
    pub frame: Frame,
    pub dual: DualFrame,
    pub geometry: Option<PhaseSpaceGeometry>,
}

impl Representation {
    pub fn new(name: &str, frame: Frame, dual: DualFrame, geometry: Option<PhaseSpaceGeometry>) -> Self {
        Self { name: name.to_string(), frame, dual, geometry }
    }

    /// Frame with its canonical dual.
    pub fn with_canonical_dual(name: &str, frame: Frame, geometry: Option<PhaseSpaceGeometry>) -> Result<Self> {
        let dual = canonical_dual(&frame)?;
        Ok(Self::new(name, frame, dual, geometry))
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn represent_checked(&self, rho: &DensityOperator) -> Result<Checked<QuasiDistribution>> {
        represent_state(rho, &self.frame, &self.name)
    }

    pub fn represent(&self, rho: &DensityOperator) -> Result<QuasiDistribution> {
        Ok(self.represent_checked(rho)?.value)
    }

    pub fn effect_function(&self, e: &Effect) -> Result<EffectFunction> {
        Ok(represent_effect(e, &self.dual)?.value)
    }

    pub fn reconstruct(&self, mu: &QuasiDistribution) -> Result<HermitianOperator> {
        reconstruct_state(mu, &self.dual)
    }

    /// `(1/d) Σ_{α∈line} D(α)`: the line operator of a phase-point
    /// representation, where `D(α)` are the phase-point operators.
    pub fn line_operator(&self, line: &[usize]) -> ComplexMatrix {
        let d = self.dim();
        let mut acc = zeros(d);
        for &i in line {
            acc += self.dual.operators()[i].matrix();
        }
        acc * cx(1.0 / d as f64, 0.0)
    }
}

/// Representation with `F(α) = A_α/d` and `D(α) = A_α`.
pub(crate) fn from_phase_points(
    name: &str,
    d: usize,
    phase_points: Vec<ComplexMatrix>,
    geometry: PhaseSpaceGeometry,
) -> Result<Representation> {
    let outcomes = geometry.outcomes();
    let a: Vec<HermitianOperator> = phase_points.into_iter().map(HermitianOperator::hermitian_part).collect();
    let f: Vec<HermitianOperator> = a.iter().map(|x| x.scale(1.0 / d as f64)).collect();
    let frame = Frame::new(d, outcomes.clone(), f)?;
    let dual = DualFrame::new(d, outcomes, a)?;
    Ok(Representation::new(name, frame, dual, Some(geometry)))
}
