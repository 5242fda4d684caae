//! Witnesses of the negativity every quasi-probability representation must
//! show in its states or its effects.
//!
//! The smallest value of `μ(λ) = Tr[ρ F(λ)]` over pure states is the lowest
//! eigenvalue of `F(λ)`, and the range of `ξ(λ) = Tr[P D(λ)]` over rank-one
//! projectors is the spectrum of `D(λ)`. Both are found exactly by
//! eigen-decomposition.

use crate::frame::Label;
use crate::operator::{hermitian_eigen, ComplexVector};
use crate::reps::Representation;

#[derive(Debug, Clone, PartialEq)]
pub struct NegativityWitness {
    /// Smallest `μ(λ)` reachable by a pure state.
    pub state_min: f64,
    pub state_label: Label,
    /// Pure state attaining `state_min`.
    pub state_vector: ComplexVector,
    /// Smallest `ξ(λ)` reachable by a rank-one projector, with where and by
    /// which vector it is reached.
    pub effect_min: f64,
    pub effect_min_label: Label,
    pub effect_min_vector: ComplexVector,
    pub effect_max: f64,
    pub effect_max_label: Label,
    pub effect_max_vector: ComplexVector,
}

impl NegativityWitness {
    /// A state with `μ < -tol` or a projector with `ξ ∉ [-tol, 1 + tol]`.
    pub fn witnessed(&self, tol: f64) -> bool {
        self.state_min < -tol || self.effect_min < -tol || self.effect_max > 1.0 + tol
    }
}

pub fn negativity_witness(rep: &Representation) -> NegativityWitness {
    let labels = rep.frame.outcomes().labels();
    let mut state = (f64::INFINITY, 0, ComplexVector::zeros(rep.dim()));
    for (i, f) in rep.frame.operators().iter().enumerate() {
        let (vals, vecs) = hermitian_eigen(f.matrix());
        if vals[0] < state.0 {
            state = (vals[0], i, vecs.column(0).into_owned());
        }
    }
    let mut lo = (f64::INFINITY, 0, ComplexVector::zeros(rep.dim()));
    let mut hi = (f64::NEG_INFINITY, 0, ComplexVector::zeros(rep.dim()));
    for (i, dl) in rep.dual.operators().iter().enumerate() {
        let (vals, vecs) = hermitian_eigen(dl.matrix());
        let last = vals.len() - 1;
        if vals[0] < lo.0 {
            lo = (vals[0], i, vecs.column(0).into_owned());
        }
        if vals[last] > hi.0 {
            hi = (vals[last], i, vecs.column(last).into_owned());
        }
    }
    NegativityWitness {
        state_min: state.0,
        state_label: labels[state.1].clone(),
        state_vector: state.2,
        effect_min: lo.0,
        effect_min_label: labels[lo.1].clone(),
        effect_min_vector: lo.2,
        effect_max: hi.0,
        effect_max_label: labels[hi.1].clone(),
        effect_max_vector: hi.2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{trace_product, DensityOperator, Effect};
    use crate::reps::{build, RepParams};

    #[test]
    fn wootters_qubit_state_negativity() {
        let w = negativity_witness(&build("wootters", &RepParams::dim(2)).unwrap());
        assert!((w.state_min - (1.0 - 3f64.sqrt()) / 4.0).abs() < 1e-12);
        assert!(w.witnessed(1e-6));
        let rho = DensityOperator::pure(&w.state_vector).unwrap();
        let rep = build("wootters", &RepParams::dim(2)).unwrap();
        let i = rep.frame.outcomes().position(&w.state_label).unwrap();
        assert!((rep.represent(&rho).unwrap().values[i] - w.state_min).abs() < 1e-12);
    }

    #[test]
    fn sic_negativity_sits_in_effects() {
        let rep = build("sic", &RepParams::dim(2)).unwrap();
        let w = negativity_witness(&rep);
        assert!(w.state_min >= -1e-12);
        assert!((w.effect_min + 1.0).abs() < 1e-10);
        assert!((w.effect_max - 2.0).abs() < 1e-10);
        for (v, l, want) in [
            (&w.effect_min_vector, &w.effect_min_label, w.effect_min),
            (&w.effect_max_vector, &w.effect_max_label, w.effect_max),
        ] {
            let e = Effect::projector(v).unwrap();
            let i = rep.dual.outcomes().position(l).unwrap();
            let xi = trace_product(e.matrix(), rep.dual.operators()[i].matrix()).re;
            assert!((xi - want).abs() < 1e-10);
        }
    }
}
