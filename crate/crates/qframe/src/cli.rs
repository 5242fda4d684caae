use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qframe_core::analysis::bell::{bell_chsh_demo, max_violation};
use qframe_core::analysis::entanglement::{
    franco_penna, franco_penna_threshold, ppt_separability_two_qubit, separable_extreme_state, singlet,
    threshold_product_state, two_qubit_wigner, werner_state, EntanglementVerdict, Verdict,
};
use qframe_core::analysis::nmr::{
    diagonal_bloch_product, diagonal_pure, epsilon_bound, nmr_classicality, sample_directions, NmrReport,
};
use qframe_core::analysis::teleport::teleport_all;
use qframe_core::analysis::witness::negativity_witness;
use qframe_core::frame::{
    coefficients, frame_bounds, is_dual_pair, negativity, transform_matrix, QuasiDistribution, Warning,
};
use qframe_core::operator::{distance, random_state, sample_state, seeded_rng, DensityOperator};
use qframe_core::reps::{build, sic_fiducial_for, RepParams, Representation, REPRESENTATION_NAMES};
use qframe_core::verify::{tolerance, verify_representation, VerifyReport, DEFAULT_SAMPLES};

use crate::canonical::{float, floats, format_float, to_canonical_string};
use crate::error::{CliError, CliResult};
use crate::formats::{
    distribution_to_csv, distribution_to_json, geometry_to_json, operators_to_json, parse_distribution, parse_state,
    state_to_json,
};

/// Environment variable read when `--seed` is absent.
pub const SEED_VAR: &str = "QFRAME_SEED";

#[derive(Parser, Debug)]
#[command(name = "qframe", version, about = "Quasi-probability representations of finite-dimensional quantum systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct DimArgs {
    /// Hilbert-space dimension.
    #[arg(long)]
    pub d: Option<usize>,
    /// Field characteristic (ghw).
    #[arg(long)]
    pub p: Option<u32>,
    /// Field degree (ghw) or qubit count (havel, nmr).
    #[arg(long)]
    pub n: Option<u32>,
    /// Factor dimensions of a composite space, e.g. `2,2`.
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<usize>,
    /// Random seed; falls back to QFRAME_SEED, then 0.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Start budget of the SIC fiducial search.
    #[arg(long)]
    pub starts: Option<usize>,
    /// Tolerance override for pass/fail decisions.
    #[arg(long)]
    pub tol: Option<f64>,
}

impl DimArgs {
    fn given(&self) -> bool {
        self.d.is_some() || self.p.is_some() || self.n.is_some() || !self.dims.is_empty()
    }

    fn params(&self) -> CliResult<RepParams> {
        Ok(RepParams {
            d: self.d,
            p: self.p,
            n: self.n,
            dims: self.dims.clone(),
            seed: resolve_seed(self.seed)?,
            starts: self.starts,
        })
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutputArgs {
    /// Output file (directory for `build`); stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug, Clone, Default)]
pub struct StateArgs {
    /// State file in matrix JSON.
    #[arg(long, conflicts_with = "random")]
    pub state: Option<PathBuf>,
    /// Use a seeded random state of this rank instead of a file.
    #[arg(long)]
    pub random: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Demo {
    Teleport,
    Nmr,
    Bell,
    Entanglement,
}

fn rep_name() -> PossibleValuesParser {
    PossibleValuesParser::new(REPRESENTATION_NAMES)
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a representation; print frame bounds and the duality residual,
    /// and write frame, dual and geometry files to `--out DIR`.
    Build {
        #[arg(value_parser = rep_name())]
        rep: String,
        #[command(flatten)]
        dims: DimArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quasi-distribution of a state.
    Represent {
        #[arg(value_parser = rep_name())]
        rep: String,
        #[command(flatten)]
        dims: DimArgs,
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Operator reconstructed from a quasi-distribution file.
    Reconstruct {
        /// Defaults to the representation named in the file.
        #[arg(value_parser = rep_name())]
        rep: Option<String>,
        #[arg(long)]
        dist: PathBuf,
        #[command(flatten)]
        dims: DimArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a quasi-distribution into another representation.
    Transform {
        #[arg(long)]
        dist: PathBuf,
        /// Source representation; defaults to the one named in the file.
        #[arg(long)]
        from: Option<String>,
        #[arg(long, value_parser = rep_name())]
        to: String,
        #[command(flatten)]
        dims: DimArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Negativity of a state's distribution, or the representation's
    /// negativity witnesses when no state is given.
    Negativity {
        #[arg(value_parser = rep_name())]
        rep: String,
        #[command(flatten)]
        dims: DimArgs,
        #[command(flatten)]
        state: StateArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suite of a representation.
    Verify {
        #[arg(value_parser = rep_name())]
        rep: String,
        #[command(flatten)]
        dims: DimArgs,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Worked applications: teleportation, NMR classicality, Bell
    /// correlations, entanglement tests.
    Demo {
        #[arg(value_enum)]
        name: Demo,
        #[command(flatten)]
        dims: DimArgs,
        /// Measurement angles in degrees (bell).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        angles: Vec<f64>,
        /// Polarization of the NMR state.
        #[arg(long)]
        epsilon: Option<f64>,
        /// Random states to compare (entanglement).
        #[arg(long)]
        samples: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn resolve_seed(flag: Option<u64>) -> CliResult<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::InvalidArguments(format!("{SEED_VAR}={v:?} is not a u64"))),
        Err(_) => Ok(0),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Writes `text` to `path`, or to `stdout` when no path is given.
fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn say(out: &mut dyn Write, line: &str) -> CliResult<()> {
    writeln!(out, "{line}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

/// Runs one command. Reports go to `out`, diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Build { rep, dims, out: dir } => cmd_build(&rep, &dims, dir.as_deref(), out),
        Command::Represent { rep, dims, state, output } => cmd_represent(&rep, &dims, &state, &output, out, err),
        Command::Reconstruct { rep, dist, dims, out: path } => {
            cmd_reconstruct(rep.as_deref(), &dist, &dims, path.as_deref(), out, err)
        }
        Command::Transform { dist, from, to, dims, output } => {
            cmd_transform(&dist, from.as_deref(), &to, &dims, &output, out, err)
        }
        Command::Negativity { rep, dims, state, out: path } => {
            cmd_negativity(&rep, &dims, &state, path.as_deref(), out)
        }
        Command::Verify { rep, dims, samples, out: path } => cmd_verify(&rep, &dims, samples, path.as_deref(), out),
        Command::Demo { name, dims, angles, epsilon, samples, output } => {
            cmd_demo(name, &dims, &angles, epsilon, samples, &output, out)
        }
    }
}

fn build_rep(name: &str, dims: &DimArgs) -> CliResult<Representation> {
    Ok(build(name, &dims.params()?)?)
}

fn cmd_build(name: &str, dims: &DimArgs, dir: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    let params = dims.params()?;
    let rep = build(name, &params)?;
    let (lower, upper) = frame_bounds(&rep.frame)?;
    let duality = is_dual_pair(&rep.frame, &rep.dual);
    let mut summary = json!({
        "representation": rep.name,
        "dim": rep.dim(),
        "outcomes": rep.frame.len(),
        "minimal": rep.frame.is_minimal(),
        "frame_bounds": floats(&[lower, upper]),
        "duality_residual": float(duality.residual),
    });
    if name == "sic" {
        summary["fiducial_deviation"] = float(sic_fiducial_for(&params)?.deviation);
    }
    if let Some(dir) = dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
        let mut files = vec!["frame.json", "dual.json"];
        write_file(
            &dir.join("frame.json"),
            &to_canonical_string(&operators_to_json(rep.dim(), rep.frame.outcomes(), rep.frame.operators())),
        )?;
        write_file(
            &dir.join("dual.json"),
            &to_canonical_string(&operators_to_json(rep.dim(), rep.dual.outcomes(), rep.dual.operators())),
        )?;
        if let Some(g) = &rep.geometry {
            write_file(&dir.join("geometry.json"), &to_canonical_string(&geometry_to_json(g)))?;
            files.push("geometry.json");
        }
        summary["files"] = json!(files);
    }
    emit(out, None, &to_canonical_string(&summary))?;
    let tol = dims.tol.unwrap_or(tolerance::EXACT);
    if duality.residual >= tol {
        return Err(CliError::PropertyFailed(format!("duality residual {:.3e} exceeds {tol:.1e}", duality.residual)));
    }
    Ok(())
}

fn load_state(state: &StateArgs, d: usize, seed: u64) -> CliResult<Option<DensityOperator>> {
    match (&state.state, state.random) {
        (Some(path), _) => Ok(Some(parse_state(&read(path)?)?)),
        (None, Some(rank)) => Ok(Some(random_state(d, rank, seed)?)),
        (None, None) => Ok(None),
    }
}

fn require_state(state: &StateArgs, d: usize, seed: u64) -> CliResult<DensityOperator> {
    load_state(state, d, seed)?.ok_or_else(|| CliError::InvalidArguments("give --state FILE or --random RANK".into()))
}

fn cmd_represent(
    name: &str,
    dims: &DimArgs,
    state: &StateArgs,
    output: &OutputArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let params = dims.params()?;
    let rep = build(name, &params)?;
    let rho = require_state(state, rep.dim(), params.seed)?;
    let checked = rep.represent_checked(&rho)?;
    if let Some(w) = &checked.warning {
        say(err, &warning_text(w))?;
    }
    let mu = checked.value;
    let round_trip = distance(rep.reconstruct(&mu)?.matrix(), rho.matrix());
    say(err, &format!("round-trip error: {}", format_float(round_trip)))?;
    let text = match output.format {
        Format::Json => to_canonical_string(&distribution_to_json(&mu)),
        Format::Csv => distribution_to_csv(&mu),
    };
    emit(out, output.out.as_deref(), &text)
}

fn warning_text(w: &Warning) -> String {
    match w {
        Warning::UnnormalizedRepresentation { sum_deviation } => format!(
            "warning: frame operators sum to the identity only within {sum_deviation:.3e}; values need not sum to one"
        ),
        Warning::NonNormalizedDual { max_trace_deviation } => {
            format!("warning: dual operators have trace away from one by up to {max_trace_deviation:.3e}")
        }
    }
}

/// Source representation for a distribution file: the explicit name when
/// given, else the file's. The dimension defaults to the file's.
fn source_for(mu: &QuasiDistribution, explicit: Option<&str>, dims: &DimArgs) -> CliResult<(String, DimArgs)> {
    let name = explicit.unwrap_or(&mu.representation).to_string();
    let mut dims = dims.clone();
    if !dims.given() {
        dims.d = Some(mu.dim);
    }
    Ok((name, dims))
}

fn check_matches(rep: &Representation, mu: &QuasiDistribution) -> CliResult<()> {
    if rep.dim() != mu.dim {
        return Err(CliError::DimensionMismatch(format!(
            "distribution has d={} but {} was built with d={}",
            mu.dim,
            rep.name,
            rep.dim()
        )));
    }
    if rep.frame.outcomes() != &mu.outcomes {
        return Err(CliError::DimensionMismatch(format!("outcome labels differ from those of {}", rep.name)));
    }
    Ok(())
}

fn cmd_reconstruct(
    name: Option<&str>,
    dist: &Path,
    dims: &DimArgs,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let mu = parse_distribution(&read(dist)?)?;
    let (name, dims) = source_for(&mu, name, dims)?;
    if !REPRESENTATION_NAMES.contains(&name.as_str()) {
        return Err(CliError::InvalidArguments(format!("no factory named {name}")));
    }
    let rep = build_rep(&name, &dims)?;
    check_matches(&rep, &mu)?;
    let op = rep.reconstruct(&mu)?;
    let eig = op.eigenvalues();
    say(err, &format!("trace: {}, smallest eigenvalue: {}", format_float(op.trace()), format_float(eig[0])))?;
    emit(out, path, &to_canonical_string(&state_to_json(&op)))
}

fn cmd_transform(
    dist: &Path,
    from: Option<&str>,
    to: &str,
    dims: &DimArgs,
    output: &OutputArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let mu = parse_distribution(&read(dist)?)?;
    let (source_name, dims) = source_for(&mu, from, dims)?;
    if !REPRESENTATION_NAMES.contains(&source_name.as_str()) {
        return Err(CliError::UnsupportedTransform(format!(
            "{source_name} has no stored dual frame to transform from"
        )));
    }
    let source = build_rep(&source_name, &dims)?;
    check_matches(&source, &mu)?;
    let target = build_rep(to, &dims)?;
    if target.dim() != source.dim() {
        return Err(CliError::DimensionMismatch(format!(
            "{} has d={}, {} has d={}",
            source.name,
            source.dim(),
            to,
            target.dim()
        )));
    }
    let t = transform_matrix(&source.frame, &source.dual, &target.frame)?;
    let mapped = t.apply(&mu, &target.name)?;
    let direct = coefficients(source.reconstruct(&mu)?.matrix(), target.frame.operators());
    let residual = mapped.values.iter().zip(&direct).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    say(err, &format!("direct-representation residual: {}", format_float(residual)))?;
    let text = match output.format {
        Format::Json => to_canonical_string(&distribution_to_json(&mapped)),
        Format::Csv => distribution_to_csv(&mapped),
    };
    emit(out, output.out.as_deref(), &text)
}

fn cmd_negativity(
    name: &str,
    dims: &DimArgs,
    state: &StateArgs,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult<()> {
    let params = dims.params()?;
    let rep = build(name, &params)?;
    let tol = dims.tol.unwrap_or(tolerance::WITNESS);
    let report = match load_state(state, rep.dim(), params.seed)? {
        Some(rho) => {
            let mu = rep.represent(&rho)?;
            let n = negativity(&mu);
            json!({
                "representation": rep.name,
                "dim": rep.dim(),
                "min_value": float(n.min_value),
                "l1_negativity": float(n.l1_negativity),
                "negative": n.min_value < -tol,
                "tolerance": float(tol),
            })
        }
        None => {
            let w = negativity_witness(&rep);
            json!({
                "representation": rep.name,
                "dim": rep.dim(),
                "state_min": float(w.state_min),
                "state_label": w.state_label.parts(),
                "effect_min": float(w.effect_min),
                "effect_min_label": w.effect_min_label.parts(),
                "effect_max": float(w.effect_max),
                "effect_max_label": w.effect_max_label.parts(),
                "witnessed": w.witnessed(tol),
                "tolerance": float(tol),
            })
        }
    };
    emit(out, path, &to_canonical_string(&report))
}

pub fn verify_report_json(r: &VerifyReport) -> Value {
    json!({
        "representation": r.representation,
        "dim": r.dim,
        "outcomes": r.outcomes,
        "seed": r.seed,
        "samples": r.samples,
        "passed": r.passed(),
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "worst_residual": float(c.worst_residual),
            "tolerance": float(c.tolerance),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_verify(name: &str, dims: &DimArgs, samples: usize, path: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    let report = verify_representation(name, &dims.params()?, samples)?;
    emit(out, path, &to_canonical_string(&verify_report_json(&report)))?;
    let failed: Vec<String> =
        report.failures().map(|c| format!("{} ({:.3e} >= {:.1e})", c.name, c.worst_residual, c.tolerance)).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::PropertyFailed(format!("{name}: failed {}", failed.join(", "))))
    }
}

/// A demo's human-readable summary and its machine-readable artifacts.
struct DemoResult {
    summary: Vec<String>,
    csv: String,
    json: Value,
    failure: Option<String>,
}

fn cmd_demo(
    name: Demo,
    dims: &DimArgs,
    angles: &[f64],
    epsilon: Option<f64>,
    samples: Option<usize>,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> CliResult<()> {
    let seed = resolve_seed(dims.seed)?;
    let result = match name {
        Demo::Teleport => demo_teleport(dims.d.unwrap_or(3), seed, dims.tol.unwrap_or(tolerance::EXACT))?,
        Demo::Nmr => demo_nmr(dims.n.unwrap_or(1) as usize, epsilon, dims.tol.unwrap_or(tolerance::SAMPLED))?,
        Demo::Bell => demo_bell(angles)?,
        Demo::Entanglement => demo_entanglement(samples.unwrap_or(500), seed)?,
    };
    for line in &result.summary {
        say(out, line)?;
    }
    if let Some(path) = &output.out {
        let text = match output.format {
            Format::Csv => result.csv.clone(),
            Format::Json => to_canonical_string(&result.json),
        };
        write_file(path, &text)?;
    }
    match result.failure {
        Some(msg) => Err(CliError::PropertyFailed(msg)),
        None => Ok(()),
    }
}

fn demo_teleport(d: usize, seed: u64, tol: f64) -> CliResult<DemoResult> {
    let rho = random_state(d, 1, seed)?;
    let all = teleport_all(d, &rho)?;
    let mut summary = vec![format!("teleport d={d} seed={seed}"), "a b probability displacement corrected".into()];
    let mut csv = String::from("a,b,probability,displacement_residual,corrected_residual\n");
    let mut worst: f64 = 0.0;
    for t in &all {
        let (a, b) = t.outcome;
        summary
            .push(format!("{a} {b} {:.6} {:.3e} {:.3e}", t.probability, t.displacement_residual, t.corrected_residual));
        csv.push_str(&format!(
            "{a},{b},{},{},{}\n",
            format_float(t.probability),
            format_float(t.displacement_residual),
            format_float(t.corrected_residual)
        ));
        worst = worst.max(t.displacement_residual).max(t.corrected_residual);
    }
    let passed = worst < tol;
    summary.push(format!("max residual: {worst:.3e}"));
    summary.push(format!("passed: {passed}"));
    let json = json!({
        "demo": "teleport",
        "dim": d,
        "seed": seed,
        "tolerance": float(tol),
        "max_residual": float(worst),
        "passed": passed,
        "outcomes": all.iter().map(|t| json!({
            "a": t.outcome.0,
            "b": t.outcome.1,
            "probability": float(t.probability),
            "displacement_residual": float(t.displacement_residual),
            "corrected_residual": float(t.corrected_residual),
        })).collect::<Vec<_>>(),
    });
    let failure = (!passed).then(|| format!("teleport residual {worst:.3e} exceeds {tol:.1e}"));
    Ok(DemoResult { summary, csv, json, failure })
}

fn demo_nmr(n: usize, epsilon: Option<f64>, tol: f64) -> CliResult<DemoResult> {
    let eps = epsilon.unwrap_or_else(|| epsilon_bound(n.clamp(1, 3)));
    let dirs = sample_directions(n.max(1));
    let cases: Vec<(&str, NmrReport)> = vec![
        ("diagonal-pure", nmr_classicality(n, eps, &diagonal_pure(n)?, &dirs, tol)?),
        ("bloch-product", nmr_classicality(n, eps, &diagonal_bloch_product(n)?, &dirs, tol)?),
    ];
    let mut summary = vec![
        format!("nmr n={n} epsilon={eps} bound={:.6}", epsilon_bound(n)),
        format!("samples: {}", cases[0].1.samples),
    ];
    let mut csv = String::from("rho1,n,epsilon,epsilon_bound,analytic_lower_bound,sampled_min,samples,classical\n");
    for (label, r) in &cases {
        summary.push(format!(
            "{label}: sampled min {:.6e}, analytic lower bound {:.6e}, classical {}",
            r.sampled_min, r.analytic_lower_bound, r.classical
        ));
        csv.push_str(&format!(
            "{label},{n},{},{},{},{},{},{}\n",
            format_float(r.epsilon),
            format_float(r.epsilon_bound),
            format_float(r.analytic_lower_bound),
            format_float(r.sampled_min),
            r.samples,
            r.classical
        ));
    }
    let classical = cases.iter().all(|(_, r)| r.classical);
    summary.push(format!("classical: {classical}"));
    let json = json!({
        "demo": "nmr",
        "n_qubits": n,
        "epsilon": float(eps),
        "epsilon_bound": float(epsilon_bound(n)),
        "classical": classical,
        "cases": cases.iter().map(|(label, r)| json!({
            "rho1": label,
            "analytic_lower_bound": float(r.analytic_lower_bound),
            "sampled_min": float(r.sampled_min),
            "samples": r.samples,
            "classical": r.classical,
            "bound_respected": r.bound_respected,
        })).collect::<Vec<_>>(),
    });
    let broken: Vec<&str> = cases.iter().filter(|(_, r)| !r.bound_respected).map(|(l, _)| *l).collect();
    let failure =
        (!broken.is_empty()).then(|| format!("sampled minimum below the analytic bound for {}", broken.join(", ")));
    Ok(DemoResult { summary, csv, json, failure })
}

fn demo_bell(angles: &[f64]) -> CliResult<DemoResult> {
    let angles = if angles.is_empty() { &[0.0, 60.0, 120.0][..] } else { angles };
    let [a, b, c] = <[f64; 3]>::try_from(angles)
        .map_err(|_| CliError::InvalidArguments(format!("--angles needs three values, got {}", angles.len())))?;
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(CliError::InvalidArguments("angles must be finite".into()));
    }
    let r = bell_chsh_demo(a.to_radians(), b.to_radians(), c.to_radians());
    let (gap, best) = max_violation(1.0);
    let summary = vec![
        format!("angles: {a}, {b}, {c} degrees"),
        format!("C(a,b) = {:.4}, C(a,c) = {:.4}, C(b,c) = {:.4}", r.c_ab, r.c_ac, r.c_bc),
        format!("lhs={:.4}, rhs={:.4}", r.lhs, r.rhs),
        format!("violated: {}", r.violated),
        format!(
            "largest violation on a 1 degree grid: {gap:.4} at {:.0}, {:.0}, {:.0}",
            best[0].to_degrees(),
            best[1].to_degrees(),
            best[2].to_degrees()
        ),
    ];
    let csv = format!(
        "a_deg,b_deg,c_deg,c_ab,c_ac,c_bc,lhs,rhs,violated\n{},{},{},{},{},{},{},{},{}\n",
        format_float(a),
        format_float(b),
        format_float(c),
        format_float(r.c_ab),
        format_float(r.c_ac),
        format_float(r.c_bc),
        format_float(r.lhs),
        format_float(r.rhs),
        r.violated
    );
    let json = json!({
        "demo": "bell",
        "angles_deg": floats(&[a, b, c]),
        "c_ab": float(r.c_ab),
        "c_ac": float(r.c_ac),
        "c_bc": float(r.c_bc),
        "lhs": float(r.lhs),
        "rhs": float(r.rhs),
        "violated": r.violated,
        "max_violation": float(gap),
    });
    Ok(DemoResult { summary, csv, json, failure: None })
}

fn verdict_pair(rho: &DensityOperator) -> CliResult<(EntanglementVerdict, EntanglementVerdict)> {
    Ok((franco_penna(&two_qubit_wigner(rho)?)?, ppt_separability_two_qubit(rho)?))
}

fn demo_entanglement(samples: usize, seed: u64) -> CliResult<DemoResult> {
    let mut named: Vec<(String, DensityOperator)> = vec![
        ("singlet".into(), singlet()),
        ("threshold-product".into(), threshold_product_state()),
        ("separable-extreme".into(), separable_extreme_state()),
    ];
    for v in [0.0, 0.2, 1.0 / 3.0, 0.5, 1.0] {
        named.push((format!("werner-{v:.4}"), werner_state(v)?));
    }
    let mut summary = vec![
        format!("threshold (1-sqrt3)/8 = {:.6}", franco_penna_threshold()),
        "state negativity-min verdict pt-min verdict".into(),
    ];
    let mut csv = String::from("state,negativity_min,negativity_verdict,pt_min,pt_verdict\n");
    let mut rows = Vec::new();
    for (label, rho) in &named {
        let (fp, pt) = verdict_pair(rho)?;
        summary.push(format!(
            "{label} {:.6} {} {:.6} {}",
            fp.min_value,
            fp.verdict.name(),
            pt.min_value,
            pt.verdict.name()
        ));
        csv.push_str(&format!(
            "{label},{},{},{},{}\n",
            format_float(fp.min_value),
            fp.verdict.name(),
            format_float(pt.min_value),
            pt.verdict.name()
        ));
        rows.push(json!({
            "state": label,
            "negativity_min": float(fp.min_value),
            "negativity_verdict": fp.verdict.name(),
            "pt_min": float(pt.min_value),
            "pt_verdict": pt.verdict.name(),
        }));
    }
    let mut rng = seeded_rng(seed);
    let (mut conclusive, mut agree) = (0usize, 0usize);
    for i in 0..samples {
        let rho = sample_state(&mut rng, 4, 1 + i % 4)?;
        let (fp, pt) = verdict_pair(&rho)?;
        if fp.verdict == Verdict::Entangled {
            conclusive += 1;
            agree += usize::from(pt.verdict == Verdict::Entangled);
        }
    }
    summary.push(format!("random states: {samples}, conclusive: {conclusive}, agreeing: {agree}"));
    let json = json!({
        "demo": "entanglement",
        "seed": seed,
        "threshold": float(franco_penna_threshold()),
        "states": rows,
        "random_states": samples,
        "conclusive": conclusive,
        "agreeing": agree,
    });
    let failure = (agree != conclusive)
        .then(|| format!("{} conclusive negativity verdicts disagree with the partial transpose", conclusive - agree));
    Ok(DemoResult { summary, csv, json, failure })
}
