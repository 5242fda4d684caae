//! Property suites run against a representation built by name.
//!
//! Every representation gets the shared checks (duality, Born rule,
//! reconstruction, unavoidable negativity). Families with more structure add
//! their own: phase-point orthogonality, striations, covariance, the GHW net
//! axioms, MUB overlaps and transition rule, and the SIC overlaps and Born
//! rules.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::analysis::witness::negativity_witness;
use crate::error::{Error, Result};
use crate::field::{prime_power, Field};
use crate::frame::{born_pair, coefficients, deformed_born, is_dual_pair, QuasiDistribution};
use crate::operator::{
    distance, identity, make_pauli_family, sample_effect, sample_state, seeded_rng, trace_product, ComplexMatrix,
    DensityOperator, Effect,
};
use crate::reps::ghw::{check_net, FieldPhaseSpace};
use crate::reps::mub::{mub_family, mub_table, mub_transition};
use crate::reps::sic::{sic_born, sic_conditionals, SicFiducial};
use crate::reps::{build, sic_fiducial_for, RepParams, Representation};

/// Residual bounds used by the suites.
pub mod tolerance {
    /// Duality, orthogonality and the algebraic identities.
    pub const EXACT: f64 = 1e-9;
    /// Born rule and reconstruction over random samples.
    pub const SAMPLED: f64 = 1e-8;
    /// Smallest negativity accepted as a witness.
    pub const WITNESS: f64 = 1e-6;
}

pub const DEFAULT_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl PropertyCheck {
    /// Passes when `residual < tolerance`.
    pub fn below(name: &str, residual: f64, tolerance: f64, detail: String) -> Self {
        Self { name: name.to_string(), passed: residual < tolerance, worst_residual: residual, tolerance, detail }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub representation: String,
    pub dim: usize,
    pub outcomes: usize,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<PropertyCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Builds the named representation and runs its suite with `samples`
/// random (state, effect) pairs drawn from `seed`.
pub fn verify_representation(name: &str, params: &RepParams, samples: usize) -> Result<VerifyReport> {
    let fiducial = if name == "sic" { Some(sic_fiducial_for(params)?) } else { None };
    let rep = match &fiducial {
        Some(f) => crate::reps::sic::sic_rep_from(f)?,
        None => build(name, params)?,
    };
    let mut checks = shared_checks(&rep, samples, params.seed)?;
    match name {
        "wootters" => {
            checks.push(orthogonality(&rep));
            if has_lines(&rep) {
                checks.push(striations(&rep));
                checks.push(covariance(&rep)?);
            }
        }
        "cohendet" => checks.push(orthogonality(&rep)),
        "ghw" => checks.extend(ghw_checks(params)?),
        "mub" => checks.extend(mub_checks(rep.dim(), samples, params.seed)?),
        "sic" => checks.extend(sic_checks(&rep, fiducial.as_ref().expect("sic fiducial"), samples, params.seed)?),
        _ => {}
    }
    Ok(VerifyReport {
        representation: name.to_string(),
        dim: rep.dim(),
        outcomes: rep.frame.len(),
        seed: params.seed,
        samples,
        checks,
    })
}

fn samples_of(d: usize, samples: usize, seed: u64) -> Result<Vec<(DensityOperator, Effect)>> {
    let mut rng = seeded_rng(seed);
    (0..samples)
        .map(|i| {
            let rank = 1 + i % d;
            Ok((sample_state(&mut rng, d, rank)?, sample_effect(&mut rng, d)))
        })
        .collect()
}

fn shared_checks(rep: &Representation, samples: usize, seed: u64) -> Result<Vec<PropertyCheck>> {
    let mut out = Vec::new();
    let dual = is_dual_pair(&rep.frame, &rep.dual);
    out.push(PropertyCheck::below("duality", dual.residual, tolerance::EXACT, format!("{} outcomes", rep.frame.len())));

    let mut born: f64 = 0.0;
    let mut round_trip: f64 = 0.0;
    for (rho, e) in samples_of(rep.dim(), samples, seed)? {
        let mu = rep.represent(&rho)?;
        let xi = rep.effect_function(&e)?;
        let want = trace_product(rho.matrix(), e.matrix()).re;
        born = born.max((born_pair(&mu, &xi)? - want).abs());
        round_trip = round_trip.max(distance(rep.reconstruct(&mu)?.matrix(), rho.matrix()));
    }
    out.push(PropertyCheck::below("born_rule", born, tolerance::SAMPLED, format!("{samples} state/effect pairs")));
    out.push(PropertyCheck::below("reconstruction", round_trip, tolerance::SAMPLED, format!("{samples} states")));

    let w = negativity_witness(rep);
    let excess = (-w.state_min).max(-w.effect_min).max(w.effect_max - 1.0);
    out.push(PropertyCheck {
        name: "negativity_witness".to_string(),
        passed: w.witnessed(tolerance::WITNESS),
        worst_residual: excess,
        tolerance: tolerance::WITNESS,
        detail: format!(
            "state min {:.6e} at {}, effect range [{:.6e}, {:.6e}]",
            w.state_min, w.state_label, w.effect_min, w.effect_max
        ),
    });
    Ok(out)
}

fn has_lines(rep: &Representation) -> bool {
    rep.geometry.as_ref().is_some_and(|g| !g.lines.is_empty())
}

/// `Tr(A_α A_β) = d δ_{αβ}` for the phase-point operators held in the dual.
fn orthogonality(rep: &Representation) -> PropertyCheck {
    let d = rep.dim() as f64;
    let ops = rep.dual.operators();
    let mut worst: f64 = 0.0;
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate() {
            let want = if i == j { d } else { 0.0 };
            worst = worst.max((trace_product(a.matrix(), b.matrix()).re - want).abs());
        }
    }
    PropertyCheck::below("orthogonality", worst, tolerance::EXACT, format!("{} phase points", ops.len()))
}

/// Each line operator is a rank-one projector and each striation sums to
/// the identity.
fn striations(rep: &Representation) -> PropertyCheck {
    let g = rep.geometry.as_ref().expect("geometry with lines");
    let d = rep.dim();
    let lines: Vec<ComplexMatrix> = g.lines.iter().map(|l| rep.line_operator(l)).collect();
    let mut worst: f64 = 0.0;
    for q in &lines {
        worst = worst.max(distance(&(q * q), q)).max((q.trace().re - 1.0).abs());
    }
    for s in &g.striations {
        let mut sum = ComplexMatrix::zeros(d, d);
        for &l in s {
            sum += &lines[l];
        }
        worst = worst.max(distance(&sum, &identity(d)));
    }
    PropertyCheck::below("striations", worst, tolerance::EXACT, format!("{} striations", g.striations.len()))
}

/// `X^a Z^b A(q,p) (X^a Z^b)† = A(q+a, p+b)` on grid labels `(q, p)`.
fn covariance(rep: &Representation) -> Result<PropertyCheck> {
    let d = rep.dim();
    let fam = make_pauli_family(d)?;
    let ops = rep.dual.operators();
    let mut worst: f64 = 0.0;
    for a in 0..d {
        for b in 0..d {
            let t = fam.displacement(a as i64, b as i64);
            for q in 0..d {
                for p in 0..d {
                    let moved = &t * ops[q * d + p].matrix() * t.adjoint();
                    let target = ops[((q + a) % d) * d + (p + b) % d].matrix();
                    worst = worst.max(distance(&moved, target));
                }
            }
        }
    }
    Ok(PropertyCheck::below("covariance", worst, tolerance::EXACT, format!("{} displacements", d * d)))
}

fn ghw_checks(params: &RepParams) -> Result<Vec<PropertyCheck>> {
    let (p, n) = match (params.p, params.n, params.d) {
        (Some(p), n, _) => (p, n.unwrap_or(1)),
        (None, _, Some(d)) => {
            prime_power(d as u64).ok_or_else(|| Error::UnsupportedDimension(format!("{d} is not a prime power")))?
        }
        _ => return Err(Error::InvalidInput("ghw needs --p/--n or --d".into())),
    };
    let space = FieldPhaseSpace::new(&Field::conway(p, n)?)?;
    let net = space.canonical_net()?;
    let c = check_net(&space, &net);
    let detail = format!("GF({p}^{n})");
    Ok([
        ("net_trace", c.trace),
        ("net_orthogonality", c.orthogonality),
        ("net_line_sum", c.line_sum),
        ("net_covariance", c.covariance),
        ("net_pvm", c.pvm),
        ("net_unbiased", c.unbiased),
    ]
    .into_iter()
    .map(|(name, r)| PropertyCheck::below(name, r, tolerance::EXACT, detail.clone()))
    .collect())
}

fn mub_checks(d: usize, samples: usize, seed: u64) -> Result<Vec<PropertyCheck>> {
    let family = mub_family(d)?;
    let mut out = alloc::vec![PropertyCheck::below(
        "mub_overlaps",
        family.max_deviation(),
        tolerance::EXACT,
        format!("{} bases", d + 1)
    )];
    let mut rng = seeded_rng(seed ^ 0x6d_7562);
    let mut transition: f64 = 0.0;
    let mut pure: f64 = 0.0;
    for i in 0..samples {
        let a = sample_state(&mut rng, d, 1 + i % d)?;
        let b = sample_state(&mut rng, d, 1)?;
        let (ta, tb) = (mub_table(&family, &a)?, mub_table(&family, &b)?);
        let want = trace_product(a.matrix(), b.matrix()).re;
        transition = transition.max((mub_transition(&ta, &tb)? - want).abs());
        pure = pure.max((mub_transition(&tb, &tb)? - 1.0).abs());
    }
    out.push(PropertyCheck::below("mub_transition", transition, tolerance::EXACT, format!("{samples} pairs")));
    out.push(PropertyCheck::below(
        "mub_pure_self_transition",
        pure,
        tolerance::EXACT,
        format!("{samples} pure states"),
    ));
    Ok(out)
}

fn sic_checks(rep: &Representation, fid: &SicFiducial, samples: usize, seed: u64) -> Result<Vec<PropertyCheck>> {
    let mut out = alloc::vec![PropertyCheck::below(
        "sic_overlaps",
        fid.deviation,
        tolerance::SAMPLED,
        format!("{} orbit vectors", fid.dim * fid.dim)
    )];
    let mut born: f64 = 0.0;
    let mut deformed: f64 = 0.0;
    for (rho, e) in samples_of(rep.dim(), samples, seed ^ 0x73_6963)? {
        let mu = rep.represent(&rho)?;
        let want = trace_product(rho.matrix(), e.matrix()).re;
        born = born.max((sic_born(&mu, &sic_conditionals(fid, &e)?)? - want).abs());
        let xi_same = QuasiDistribution::new(
            "sic",
            rep.dim(),
            rep.frame.outcomes().clone(),
            coefficients(e.matrix(), rep.frame.operators()),
        )?;
        deformed = deformed.max((deformed_born(&mu, &xi_same, &rep.dual)? - want).abs());
    }
    out.push(PropertyCheck::below("sic_born_rule", born, tolerance::SAMPLED, format!("{samples} pairs")));
    out.push(PropertyCheck::below("deformed_born", deformed, tolerance::SAMPLED, format!("{samples} pairs")));
    Ok(out)
}
