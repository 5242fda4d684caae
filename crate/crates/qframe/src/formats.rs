//! File formats for matrices, states, quasi-distributions, frames and
//! geometries, in JSON and CSV.

use qframe_core::frame::{Label, OutcomeSet, QuasiDistribution};
use qframe_core::geometry::PhaseSpaceGeometry;
use qframe_core::operator::{cx, ComplexMatrix, DensityOperator, HermitianOperator};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::canonical::{float, floats};
use crate::error::{CliError, CliResult};

/// `{"dim": d, "re": [[...]], "im": [[...]]}`, row-major.
pub fn matrix_to_json(m: &ComplexMatrix) -> Value {
    let d = m.nrows();
    let rows = |f: fn(&ComplexMatrix, usize, usize) -> f64| {
        Value::Array((0..d).map(|i| Value::Array((0..d).map(|j| float(f(m, i, j))).collect())).collect())
    };
    json!({ "dim": d, "re": rows(|m, i, j| m[(i, j)].re), "im": rows(|m, i, j| m[(i, j)].im) })
}

#[derive(Deserialize)]
struct MatrixFile {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

pub fn parse_matrix(text: &str) -> CliResult<ComplexMatrix> {
    let m: MatrixFile = parse(text, "matrix")?;
    let d = m.dim;
    let shape_ok = |rows: &Vec<Vec<f64>>| rows.len() == d && rows.iter().all(|r| r.len() == d);
    if d == 0 || !shape_ok(&m.re) || !shape_ok(&m.im) {
        return Err(CliError::Parse(format!("matrix entries do not form a {d}x{d} array")));
    }
    Ok(ComplexMatrix::from_fn(d, d, |i, j| cx(m.re[i][j], m.im[i][j])))
}

pub fn parse_state(text: &str) -> CliResult<DensityOperator> {
    Ok(DensityOperator::new(parse_matrix(text)?)?)
}

pub fn state_to_json(rho: &HermitianOperator) -> Value {
    matrix_to_json(rho.matrix())
}

fn labels_json(outcomes: &OutcomeSet) -> Value {
    Value::Array(outcomes.labels().iter().map(|l| json!(l.parts())).collect())
}

/// `{"representation", "dim", "labels", "values"}` in outcome order.
pub fn distribution_to_json(mu: &QuasiDistribution) -> Value {
    json!({
        "representation": mu.representation,
        "dim": mu.dim,
        "labels": labels_json(&mu.outcomes),
        "values": floats(&mu.values),
    })
}

#[derive(Deserialize)]
struct DistributionFile {
    representation: String,
    dim: usize,
    labels: Vec<Vec<i64>>,
    values: Vec<f64>,
}

pub fn parse_distribution(text: &str) -> CliResult<QuasiDistribution> {
    let f: DistributionFile = parse(text, "distribution")?;
    if f.labels.len() != f.values.len() {
        return Err(CliError::Parse(format!("{} labels but {} values", f.labels.len(), f.values.len())));
    }
    let outcomes = OutcomeSet::new(f.labels.into_iter().map(Label).collect())?;
    Ok(QuasiDistribution::new(&f.representation, f.dim, outcomes, f.values)?)
}

/// Header names for the label columns of a representation's outcomes.
pub fn label_columns(representation: &str, arity: usize) -> Vec<String> {
    let base: &[&str] = match representation {
        "mub" => &["basis", "outcome"],
        "sic" => &["shift", "boost"],
        "hardy" | "havel" => &["row", "col"],
        "stratonovich" => &["point"],
        _ => &["q", "p"],
    };
    if arity == base.len() {
        return base.iter().map(|s| s.to_string()).collect();
    }
    if base.len() == 2 && arity.is_multiple_of(2) {
        return (1..=arity / 2).flat_map(|k| [format!("{}{k}", base[0]), format!("{}{k}", base[1])]).collect();
    }
    (0..arity).map(|k| format!("label{k}")).collect()
}

/// Label columns then the value, one row per outcome.
pub fn distribution_to_csv(mu: &QuasiDistribution) -> String {
    let arity = mu.outcomes.labels().first().map_or(0, |l| l.parts().len());
    let mut out = label_columns(&mu.representation, arity).join(",");
    out.push_str(",value\n");
    for (l, v) in mu.outcomes.labels().iter().zip(&mu.values) {
        out.push_str(&format!("{l},{}\n", crate::canonical::format_float(*v)));
    }
    out
}

/// `{"dim", "labels", "operators"}`.
pub fn operators_to_json(dim: usize, outcomes: &OutcomeSet, ops: &[HermitianOperator]) -> Value {
    json!({
        "dim": dim,
        "labels": labels_json(outcomes),
        "operators": ops.iter().map(|o| matrix_to_json(o.matrix())).collect::<Vec<_>>(),
    })
}

pub fn geometry_to_json(g: &PhaseSpaceGeometry) -> Value {
    json!({
        "kind": g.kind.name(),
        "points": g.points.iter().map(|l| json!(l.parts())).collect::<Vec<_>>(),
        "lines": g.lines,
        "striations": g.striations,
        "directions": g.directions.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::to_canonical_string;
    use qframe_core::operator::{distance, random_state};
    use qframe_core::reps::{build, RepParams};

    #[test]
    fn matrix_round_trip() {
        let rho = random_state(3, 2, 5).unwrap();
        let text = to_canonical_string(&matrix_to_json(rho.matrix()));
        let back = parse_state(&text).unwrap();
        assert!(distance(back.matrix(), rho.matrix()) < 1e-11);
    }

    #[test]
    fn malformed_matrices_rejected() {
        assert!(matches!(parse_matrix("{\"dim\": 2, \"re\": [[1, 0]"), Err(CliError::Parse(_))));
        let ragged = r#"{"dim": 2, "re": [[1, 0], [0]], "im": [[0, 0], [0, 0]]}"#;
        assert!(matches!(parse_matrix(ragged), Err(CliError::Parse(_))));
        let not_state = r#"{"dim": 2, "re": [[2, 0], [0, 0]], "im": [[0, 0], [0, 0]]}"#;
        assert!(matches!(parse_state(not_state), Err(CliError::Parse(_))));
    }

    #[test]
    fn distribution_round_trip_and_csv() {
        let rep = build("wootters", &RepParams::dim(3)).unwrap();
        let mu = rep.represent(&DensityOperator::maximally_mixed(3)).unwrap();
        let back = parse_distribution(&to_canonical_string(&distribution_to_json(&mu))).unwrap();
        assert_eq!(back.outcomes, mu.outcomes);
        for (a, b) in back.values.iter().zip(&mu.values) {
            assert!((a - b).abs() < 1e-12);
        }
        let csv = distribution_to_csv(&mu);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("q,p,value"));
        assert_eq!(lines.next(), Some("0,0,1.111111111111e-01"));
        assert_eq!(csv.lines().count(), 10);
    }

    #[test]
    fn composite_columns() {
        assert_eq!(label_columns("wootters", 4), ["q1", "p1", "q2", "p2"]);
        assert_eq!(label_columns("mub", 2), ["basis", "outcome"]);
        assert_eq!(label_columns("other", 3), ["label0", "label1", "label2"]);
    }
}
