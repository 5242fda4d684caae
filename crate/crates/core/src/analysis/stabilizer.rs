//! Convex combinations of qubit stabilizer states have a nonnegative Wootters
//! function, while the Bloch-`(1,1,1)/√3` state does not.

use rand_distr::{Distribution, Exp1};

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Result;
use crate::operator::{cx, qubit_stabilizer_states, seeded_rng, zeros, DensityOperator};
use crate::reps::wootters::wootters_qubit;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilizerReport {
    /// Smallest Wootters value over the six stabilizer states.
    pub stabilizer_min: f64,
    /// Smallest Wootters value of the Bloch-`(1,1,1)/√3` state.
    pub magic_min: f64,
    /// Smallest Wootters value over random stabilizer mixtures.
    pub mixture_min: f64,
    pub mixtures: usize,
}

impl StabilizerReport {
    pub fn holds(&self, tol: f64) -> bool {
        self.stabilizer_min >= -tol && self.mixture_min >= -tol && self.magic_min < -tol
    }
}

fn min_value(rep: &crate::reps::Representation, rho: &DensityOperator) -> Result<f64> {
    Ok(rep.represent(rho)?.values.iter().copied().fold(f64::INFINITY, f64::min))
}

/// Evaluates the six stabilizer states, the magic state, and `mixtures`
/// uniformly random convex combinations of stabilizer states.
pub fn stabilizer_positivity_check(mixtures: usize, seed: u64) -> Result<StabilizerReport> {
    let rep = wootters_qubit()?;
    let stab = qubit_stabilizer_states();
    let mut stabilizer_min = f64::INFINITY;
    for s in &stab {
        stabilizer_min = stabilizer_min.min(min_value(&rep, s)?);
    }
    let r = 1.0 / 3f64.sqrt();
    let magic_min = min_value(&rep, &DensityOperator::from_bloch([r, r, r])?)?;
    let mut rng = seeded_rng(seed);
    let mut mixture_min = f64::INFINITY;
    for _ in 0..mixtures {
        // normalized exponentials are uniform on the simplex
        let w: alloc::vec::Vec<f64> = (0..stab.len()).map(|_| Exp1.sample(&mut rng)).collect();
        let total: f64 = w.iter().sum();
        let mut m = zeros(2);
        for (wi, s) in w.iter().zip(&stab) {
            m += s.matrix() * cx(wi / total, 0.0);
        }
        mixture_min = mixture_min.min(min_value(&rep, &DensityOperator::new(m)?)?);
    }
    Ok(StabilizerReport { stabilizer_min, magic_min, mixture_min, mixtures })
}
