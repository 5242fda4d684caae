//! Finite-field phase space for `d = p^n`.
//!
//! Points are pairs `(q, p)` of field elements. The translation operator of a
//! point is `T(q,p) = ⊗_i X^{q_i} Z^{p_i}` with `q_i = tr(ẽ_i q)` in the
//! polynomial basis `e` and `p_i = tr(e_i p)` in its trace dual `ẽ`, so the
//! translations along any line through the origin commute.
//!
//! A quantum net assigns a rank-one projector to each line. The canonical net
//! takes, for every striation, one joint eigenvector of the translations along
//! the line through the origin and moves it to the parallel lines by
//! translation. Phase-point operators are `A_α = Σ_{λ∋α} Q(λ) - I`.

use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{dual_basis, expand_with_dual, Field};
use crate::geometry::{field_lattice, PhaseSpaceGeometry};
use crate::operator::{
    cx, distance, hermitian_eigen, identity, make_pauli_family, projector, seeded_rng, tensor_all, trace_product,
    zeros, ComplexMatrix, ComplexVector,
};
use crate::reps::wootters::wootters;
use crate::reps::{from_phase_points, Representation};

pub const MAX_GHW_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumNet {
    pub geometry: PhaseSpaceGeometry,
    /// `projectors[l]` is `Q` of line `l` in `geometry.lines`.
    pub projectors: Vec<ComplexMatrix>,
    /// Index of the ray eigenvector chosen in each striation.
    pub choice: Vec<usize>,
}

/// Field phase space with its translation operators and point arithmetic.
#[derive(Debug, Clone)]
pub struct FieldPhaseSpace {
    pub field: Field,
    pub geometry: PhaseSpaceGeometry,
    /// Translation operator of each point, by point index.
    pub translations: Vec<ComplexMatrix>,
    add: Vec<Vec<usize>>,
}

impl FieldPhaseSpace {
    pub fn new(field: &Field) -> Result<Self> {
        let m = field.order();
        if m > MAX_GHW_ORDER {
            return Err(Error::UnsupportedDimension(format!("field order {m} exceeds {MAX_GHW_ORDER}")));
        }
        let geometry = field_lattice(field)?;
        let basis = field.polynomial_basis();
        let dual = dual_basis(&basis)?;
        let fam = make_pauli_family(field.p() as usize)?;
        let els = field.elements();
        let mut translations = Vec::with_capacity(m * m);
        for q in &els {
            let qc = expand_with_dual(q, &dual)?;
            for p in &els {
                let pc = expand_with_dual(p, &basis)?;
                let factors: Vec<ComplexMatrix> =
                    qc.iter().zip(&pc).map(|(a, b)| fam.displacement(*a as i64, *b as i64)).collect();
                translations.push(tensor_all(&factors));
            }
        }
        let add = els
            .iter()
            .map(|a| els.iter().map(|b| a.add(b).map(|x| x.index())).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Ok(Self { field: field.clone(), geometry, translations, add })
    }

    pub fn order(&self) -> usize {
        self.field.order()
    }

    /// Index of `α + β`.
    pub fn shift(&self, alpha: usize, beta: usize) -> usize {
        let m = self.order();
        let q = self.add[alpha / m][beta / m];
        let p = self.add[alpha % m][beta % m];
        q * m + p
    }

    /// Index of the line `λ + β`.
    pub fn shift_line(&self, line: usize, beta: usize) -> usize {
        let moved: Vec<usize> = self.geometry.lines[line].iter().map(|&a| self.shift(a, beta)).collect();
        self.geometry
            .lines
            .iter()
            .position(|l| moved.iter().all(|a| l.contains(a)))
            .expect("translates of lines are lines")
    }

    /// Joint eigenvectors of the translations along the ray of a striation,
    /// ordered by the arguments of their eigenvalues.
    pub fn ray_eigenvectors(&self, striation: usize) -> Vec<ComplexVector> {
        let d = self.order();
        let ray = &self.geometry.lines[self.geometry.striations[striation][0]];
        let mut rng = seeded_rng(0x6e6574 + striation as u64);
        let mut h = zeros(d);
        for &b in ray {
            let c = cx(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
            let t = &self.translations[b];
            h += t * c + t.adjoint() * c.conj();
        }
        let (_, vecs) = hermitian_eigen(&h);
        let mut keyed: Vec<(Vec<i64>, ComplexVector)> = (0..d)
            .map(|i| {
                let v = vecs.column(i).into_owned();
                let key = ray
                    .iter()
                    .filter(|&&b| b != 0)
                    .map(|&b| {
                        let mut arg = v.dotc(&(&self.translations[b] * &v)).arg();
                        if arg < 0.0 {
                            arg += 2.0 * core::f64::consts::PI;
                        }
                        (arg * 1e6).round() as i64
                    })
                    .collect();
                (key, v)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.into_iter().map(|(_, v)| v).collect()
    }

    /// Net obtained by putting eigenvector `choice[s]` on the ray of each
    /// striation `s`.
    pub fn net(&self, choice: &[usize]) -> Result<QuantumNet> {
        let g = &self.geometry;
        let d = self.order();
        if choice.len() != g.striations.len() || choice.iter().any(|&c| c >= d) {
            return Err(Error::InvalidInput("one eigenvector index per striation required".into()));
        }
        let mut projectors = alloc::vec![zeros(d); g.lines.len()];
        for (s, lines) in g.striations.iter().enumerate() {
            let q0 = projector(&self.ray_eigenvectors(s)[choice[s]]);
            let ray = lines[0];
            for &l in lines {
                let beta = g.lines[l][0];
                let t = &self.translations[beta];
                debug_assert_eq!(self.shift_line(ray, beta), l);
                projectors[l] = t * &q0 * t.adjoint();
            }
        }
        Ok(QuantumNet { geometry: g.clone(), projectors, choice: choice.to_vec() })
    }

    pub fn canonical_net(&self) -> Result<QuantumNet> {
        self.net(&alloc::vec![0; self.geometry.striations.len()])
    }
}

/// `A_α = Σ_{λ∋α} Q(λ) - I` for every point.
pub fn phase_points(net: &QuantumNet) -> Vec<ComplexMatrix> {
    let d = net.projectors[0].nrows();
    let mut out = alloc::vec![-identity(d); net.geometry.points.len()];
    for (l, line) in net.geometry.lines.iter().enumerate() {
        for &a in line {
            out[a] += &net.projectors[l];
        }
    }
    out
}

pub fn ghw_from_net(net: &QuantumNet) -> Result<Representation> {
    let d = net.projectors[0].nrows();
    from_phase_points("ghw", d, phase_points(net), net.geometry.clone())
}

/// Representation from the canonical net over `field`.
pub fn ghw_field(field: &Field) -> Result<(Representation, QuantumNet)> {
    let space = FieldPhaseSpace::new(field)?;
    let net = space.canonical_net()?;
    Ok((ghw_from_net(&net)?, net))
}

pub fn ghw(p: u32, n: u32) -> Result<(Representation, QuantumNet)> {
    ghw_field(&Field::conway(p, n)?)
}

/// Largest residuals of the defining properties of a field phase space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhwChecks {
    /// `|Tr A_α - 1|`
    pub trace: f64,
    /// `|Tr A_α A_β - d δ|`
    pub orthogonality: f64,
    /// `‖Σ_{α∈λ} A_α - d Q(λ)‖`
    pub line_sum: f64,
    /// `‖Q(λ + β) - T_β Q(λ) T_β†‖`
    pub covariance: f64,
    /// Deviation of each striation from a rank-one PVM.
    pub pvm: f64,
    /// `||⟨a|b⟩|² - 1/d|` across striations.
    pub unbiased: f64,
}

impl GhwChecks {
    pub fn max(&self) -> f64 {
        [self.trace, self.orthogonality, self.line_sum, self.covariance, self.pvm, self.unbiased]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

pub fn check_net(space: &FieldPhaseSpace, net: &QuantumNet) -> GhwChecks {
    let g = &net.geometry;
    let d = space.order();
    let a = phase_points(net);
    let mut c = GhwChecks { trace: 0.0, orthogonality: 0.0, line_sum: 0.0, covariance: 0.0, pvm: 0.0, unbiased: 0.0 };
    for (i, ai) in a.iter().enumerate() {
        c.trace = c.trace.max((ai.trace() - cx(1.0, 0.0)).norm());
        for (j, aj) in a.iter().enumerate() {
            let want = if i == j { d as f64 } else { 0.0 };
            c.orthogonality = c.orthogonality.max((trace_product(ai, aj) - cx(want, 0.0)).norm());
        }
    }
    for (l, line) in g.lines.iter().enumerate() {
        let mut sum = zeros(d);
        for &p in line {
            sum += &a[p];
        }
        c.line_sum = c.line_sum.max(distance(&sum, &(&net.projectors[l] * cx(d as f64, 0.0))));
    }
    let pairs: Vec<(usize, usize)> = if d <= 9 {
        (0..g.points.len()).flat_map(|b| (0..g.lines.len()).map(move |l| (b, l))).collect()
    } else {
        let mut rng = seeded_rng(20);
        (0..200).map(|_| (rng.random_range(0..g.points.len()), rng.random_range(0..g.lines.len()))).collect()
    };
    for (beta, l) in pairs {
        let t = &space.translations[beta];
        let moved = t * &net.projectors[l] * t.adjoint();
        c.covariance = c.covariance.max(distance(&moved, &net.projectors[space.shift_line(l, beta)]));
    }
    for lines in &g.striations {
        let mut sum = zeros(d);
        for &l in lines {
            let q = &net.projectors[l];
            c.pvm = c.pvm.max(distance(&(q * q), q)).max((q.trace() - cx(1.0, 0.0)).norm());
            sum += q;
        }
        c.pvm = c.pvm.max(distance(&sum, &identity(d)));
    }
    for (s, ls) in g.striations.iter().enumerate() {
        for lt in g.striations.iter().skip(s + 1) {
            for &x in ls {
                for &y in lt {
                    let o = trace_product(&net.projectors[x], &net.projectors[y]).re;
                    c.unbiased = c.unbiased.max((o - 1.0 / d as f64).abs());
                }
            }
        }
    }
    c
}

/// Outcome of matching a prime-field net to the Wootters construction.
#[derive(Debug, Clone, PartialEq)]
pub struct NetRelabeling {
    /// Ray eigenvector chosen per striation.
    pub choice: Vec<usize>,
    /// `permutation[i]` is the Wootters point equal to field point `i`.
    pub permutation: Vec<usize>,
    pub residual: f64,
}

/// Finds the net over `GF(p)` whose phase-point operators coincide with the
/// Wootters ones, together with the point relabeling between them.
pub fn match_wootters(p: u32) -> Result<NetRelabeling> {
    let field = Field::conway(p, 1)?;
    let space = FieldPhaseSpace::new(&field)?;
    let woo = wootters(p as usize)?;
    let wg = woo.geometry.as_ref().ok_or(Error::InvalidInput("wootters geometry missing".into()))?;
    let mut choice = Vec::with_capacity(space.geometry.striations.len());
    for (s, lines) in wg.striations.iter().enumerate() {
        let target = woo.line_operator(&wg.lines[lines[0]]);
        let best = space
            .ray_eigenvectors(s)
            .iter()
            .map(|v| distance(&projector(v), &target))
            .enumerate()
            .fold((0, f64::INFINITY), |acc, (i, e)| if e < acc.1 { (i, e) } else { acc });
        choice.push(best.0);
    }
    let a = phase_points(&space.net(&choice)?);
    let mut permutation = Vec::with_capacity(a.len());
    let mut residual: f64 = 0.0;
    for ai in &a {
        let (j, e) = woo
            .dual
            .operators()
            .iter()
            .map(|w| distance(ai, w.matrix()))
            .enumerate()
            .fold((0, f64::INFINITY), |acc, (i, e)| if e < acc.1 { (i, e) } else { acc });
        permutation.push(j);
        residual = residual.max(e);
    }
    Ok(NetRelabeling { choice, permutation, residual })
}
