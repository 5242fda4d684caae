//! Name-based access to the factories.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::prime_power;
use crate::reps::{
    cohendet::cohendet,
    ghw::ghw,
    hardy::hardy_rep,
    havel::havel_rep,
    leonhardt::leonhardt,
    mub::mub_rep,
    ruzzi::ruzzi_s0,
    sic::{qubit_fiducial, search_fiducial, sic_rep_from, SicFiducial, DEFAULT_STARTS},
    stratonovich, wootters, Representation,
};

pub const REPRESENTATION_NAMES: [&str; 10] =
    ["wootters", "ghw", "cohendet", "leonhardt", "stratonovich", "ruzzi", "mub", "hardy", "havel", "sic"];

/// Dimension arguments for [`build`]. Which fields matter depends on the
/// representation: `ghw` reads `p` and `n` (falling back to factoring `d`),
/// `havel` reads `n` as a qubit count (or `d = 2^n`), `wootters` uses `dims`
/// when non-empty, `stratonovich` draws its constellation from `seed`, and
/// `sic` above `d = 2` searches for a fiducial with `starts` seeded starts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepParams {
    pub d: Option<usize>,
    pub p: Option<u32>,
    pub n: Option<u32>,
    pub dims: Vec<usize>,
    pub seed: u64,
    /// Start budget of the SIC fiducial search.
    pub starts: Option<usize>,
}

impl RepParams {
    pub fn dim(d: usize) -> Self {
        Self { d: Some(d), ..Self::default() }
    }

    fn need_d(&self, name: &str) -> Result<usize> {
        self.d.ok_or_else(|| Error::InvalidInput(format!("{name} needs a dimension")))
    }
}

pub fn build(name: &str, params: &RepParams) -> Result<Representation> {
    match name {
        "wootters" if !params.dims.is_empty() => wootters::wootters_composite(&params.dims),
        "wootters" => wootters::wootters(params.need_d(name)?),
        "ghw" => {
            let (p, n) = match (params.p, params.n) {
                (Some(p), n) => (p, n.unwrap_or(1)),
                (None, _) => {
                    let d = params.need_d(name)?;
                    prime_power(d as u64)
                        .ok_or_else(|| Error::UnsupportedDimension(format!("{d} is not a prime power")))?
                }
            };
            Ok(ghw(p, n)?.0)
        }
        "cohendet" => cohendet(params.need_d(name)?),
        "leonhardt" => leonhardt(params.need_d(name)?),
        "stratonovich" => {
            let d = params.need_d(name)?;
            if d < 2 {
                return Err(Error::InvalidDimension(d));
            }
            let spin = (d as f64 - 1.0) / 2.0;
            let c = stratonovich::random_constellation(spin, params.seed)?;
            stratonovich::stratonovich_discrete(spin, &c)
        }
        "ruzzi" => ruzzi_s0(params.need_d(name)?),
        "mub" => mub_rep(params.need_d(name)?),
        "hardy" => hardy_rep(params.need_d(name)?),
        "havel" => match (params.n, params.d) {
            (Some(n), _) => havel_rep(n as usize),
            (None, Some(d)) if d.is_power_of_two() && d >= 2 => havel_rep(d.trailing_zeros() as usize),
            (None, Some(d)) => Err(Error::UnsupportedDimension(format!("dimension {d} is not a power of two"))),
            (None, None) => Err(Error::InvalidInput("havel needs --n or --d".into())),
        },
        "sic" => sic_rep_from(&sic_fiducial_for(params)?),
        other => Err(Error::InvalidInput(format!("unknown representation {other}"))),
    }
}

/// The analytic qubit fiducial at `d = 2`, otherwise a seeded search with
/// the start budget from `params`.
pub fn sic_fiducial_for(params: &RepParams) -> Result<SicFiducial> {
    let d = params.need_d("sic")?;
    if d == 2 {
        return Ok(qubit_fiducial());
    }
    search_fiducial(d, params.starts.unwrap_or(DEFAULT_STARTS), params.seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::is_dual_pair;

    #[test]
    fn every_name_builds() {
        let cases: [(&str, RepParams); 10] = [
            ("wootters", RepParams::dim(3)),
            ("ghw", RepParams { p: Some(2), n: Some(2), ..RepParams::default() }),
            ("cohendet", RepParams::dim(3)),
            ("leonhardt", RepParams::dim(2)),
            ("stratonovich", RepParams::dim(2)),
            ("ruzzi", RepParams::dim(3)),
            ("mub", RepParams::dim(2)),
            ("hardy", RepParams::dim(2)),
            ("havel", RepParams { n: Some(1), ..RepParams::default() }),
            ("sic", RepParams::dim(2)),
        ];
        for (name, params) in cases {
            let rep = build(name, &params).unwrap();
            assert!(is_dual_pair(&rep.frame, &rep.dual).holds, "{name}");
        }
        assert!(build("ghw", &RepParams::dim(9)).is_ok());
        assert!(matches!(build("ghw", &RepParams::dim(6)), Err(Error::UnsupportedDimension(_))));
        let starved = RepParams { d: Some(7), starts: Some(0), ..RepParams::default() };
        assert!(matches!(build("sic", &starved), Err(Error::NoFiducialFound { .. })));
        assert!(matches!(build("nope", &RepParams::dim(2)), Err(Error::InvalidInput(_))));
    }
}
