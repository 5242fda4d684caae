//! Complex operator algebra on a `d`-dimensional Hilbert space.
//!
//! Every representation in this crate acts on the types defined here:
//! [`HermitianOperator`] and its refinements [`DensityOperator`] and
//! [`Effect`], the generalized Pauli family, Weyl displacement operators,
//! the Schwinger basis and the finite Fourier transform. Composite-system
//! helpers (tensor products, partial traces and transposes) and seeded
//! samplers live here as well.
//!
//! Computational basis vectors are written `φ_k`, `k ∈ Z_d`. The shift acts
//! as `X φ_k = φ_{k+1}`, the clock as `Z φ_k = ω^k φ_k` with `ω = e^{2πi/d}`,
//! and the parity as `P φ_k = φ_{-k}`.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};

/// Dense complex square matrix, row-major semantics for serialization.
pub type ComplexMatrix = DMatrix<Complex64>;
/// Dense complex column vector.
pub type ComplexVector = DVector<Complex64>;

/// Base equality tolerance for matrix predicates.
pub const TAU_EQ: f64 = 1e-9;

/// Tolerance scaled to the size of the operands: `1e-9 · max(1, ‖·‖_F)`.
pub fn tau_for(norm: f64) -> f64 {
    TAU_EQ * norm.max(1.0)
}

#[inline]
pub fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `ω^k` for `ω = e^{2πi/d}`.
pub fn root_of_unity(d: usize, k: i64) -> Complex64 {
    let k = k.rem_euclid(d as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * k / d as f64)
}

/// Modular inverse of 2 in `Z_d` for odd `d`.
pub fn half_mod(d: usize) -> Option<i64> {
    if d % 2 == 1 {
        Some(((d as i64) + 1) / 2)
    } else {
        None
    }
}

/// `ω^{m/2}`: for odd `d` the exponent is `m · 2⁻¹ mod d`; for even `d` it is
/// `τ^m` with `τ = e^{iπ/d}` a primitive `2d`-th root of unity.
pub fn half_phase(d: usize, m: i64) -> Complex64 {
    match half_mod(d) {
        Some(inv2) => root_of_unity(d, (m.rem_euclid(d as i64) * inv2) % d as i64),
        None => {
            let m = m.rem_euclid(2 * d as i64) as f64;
            Complex64::from_polar(1.0, PI * m / d as f64)
        }
    }
}

pub fn identity(d: usize) -> ComplexMatrix {
    ComplexMatrix::identity(d, d)
}

pub fn zeros(d: usize) -> ComplexMatrix {
    ComplexMatrix::zeros(d, d)
}

pub fn frobenius(m: &ComplexMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Frobenius distance between two matrices of equal shape.
pub fn distance(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    frobenius(&(a - b))
}

/// Integer matrix power, negative exponents allowed for unitaries.
pub fn unitary_power(u: &ComplexMatrix, k: i64) -> ComplexMatrix {
    let base = if k < 0 { u.adjoint() } else { u.clone() };
    let mut out = identity(u.nrows());
    for _ in 0..k.unsigned_abs() {
        out = &out * &base;
    }
    out
}

fn check_square(m: &ComplexMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(m.nrows())
}

/// Eigen-decomposition of a Hermitian matrix.
///
/// Eigenvalues ascend; each eigenvector has its first non-negligible
/// component made real and positive.
pub fn hermitian_eigen(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let d = m.nrows();
    let sym = (m + m.adjoint()) * cx(0.5, 0.0);
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());
    let mut vecs = ComplexMatrix::zeros(d, d);
    let mut vals = Vec::with_capacity(d);
    for (col, &i) in order.iter().enumerate() {
        vals.push(eig.eigenvalues[i]);
        let v = eig.eigenvectors.column(i).into_owned();
        let v = fix_phase(v);
        vecs.set_column(col, &v);
    }
    (vals, vecs)
}

/// Rotates a vector's global phase so that its first component with modulus
/// above `1e-9` is real and positive.
pub fn fix_phase(mut v: ComplexVector) -> ComplexVector {
    if let Some(z) = v.iter().find(|z| z.norm() > 1e-9).copied() {
        let ph = z.conj() / z.norm();
        v *= ph;
    }
    v
}

pub fn eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    hermitian_eigen(m).0
}

/// Projector `|v⟩⟨v|` onto a (normalized) vector.
pub fn projector(v: &ComplexVector) -> ComplexMatrix {
    v * v.adjoint()
}

pub fn basis_vector(d: usize, k: usize) -> ComplexVector {
    let mut v = ComplexVector::zeros(d);
    v[k % d] = cx(1.0, 0.0);
    v
}

/// Hermitian operator; the stored matrix is exactly Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator(ComplexMatrix);

impl HermitianOperator {
    /// Validates Hermiticity within `τ_eq` and stores the Hermitian part.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        check_square(&m)?;
        let dev = distance(&m, &m.adjoint());
        if dev > tau_for(frobenius(&m)) {
            return Err(Error::NotHermitian(dev));
        }
        Ok(Self::hermitian_part(m))
    }

    /// Hermitian part `(M + M†)/2`, no validation.
    pub fn hermitian_part(m: ComplexMatrix) -> Self {
        let h = (&m + m.adjoint()) * cx(0.5, 0.0);
        Self(h)
    }

    pub fn identity(d: usize) -> Self {
        Self(identity(d))
    }

    pub fn zero(d: usize) -> Self {
        Self(zeros(d))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        eigenvalues(&self.0)
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(&self.0 * cx(s, 0.0))
    }
}

/// Positive semidefinite, unit-trace operator.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator(HermitianOperator);

impl DensityOperator {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let h = HermitianOperator::new(m)?;
        let tol = tau_for(frobenius(h.matrix()));
        let tr = h.trace();
        if (tr - 1.0).abs() > tol {
            return Err(Error::NotDensity(format!("trace {tr}")));
        }
        let min = h.eigenvalues()[0];
        if min < -tol {
            return Err(Error::NotDensity(format!("eigenvalue {min}")));
        }
        Ok(Self(h))
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self(HermitianOperator(identity(d) * cx(1.0 / d as f64, 0.0)))
    }

    /// Pure state `|ψ⟩⟨ψ|`; the vector is normalized first.
    pub fn pure(psi: &ComplexVector) -> Result<Self> {
        let n = psi.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidInput("zero state vector".into()));
        }
        Ok(Self(HermitianOperator::hermitian_part(projector(&(psi / cx(n, 0.0))))))
    }

    /// Qubit state `(I + r·σ)/2` with the standard Pauli matrices.
    pub fn from_bloch(r: [f64; 3]) -> Result<Self> {
        let [sx, sy, sz] = sigma();
        let m = (identity(2) + sx * cx(r[0], 0.0) + sy * cx(r[1], 0.0) + sz * cx(r[2], 0.0)) * cx(0.5, 0.0);
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.0.matrix()
    }

    pub fn as_hermitian(&self) -> &HermitianOperator {
        &self.0
    }

    pub fn purity(&self) -> f64 {
        (self.matrix() * self.matrix()).trace().re
    }
}

/// Operator with spectrum in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Effect(HermitianOperator);

impl Effect {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let h = HermitianOperator::new(m)?;
        let tol = tau_for(frobenius(h.matrix()));
        let ev = h.eigenvalues();
        if ev[0] < -tol || ev[ev.len() - 1] > 1.0 + tol {
            return Err(Error::NotEffect(format!("spectrum [{}, {}]", ev[0], ev[ev.len() - 1])));
        }
        Ok(Self(h))
    }

    pub fn identity(d: usize) -> Self {
        Self(HermitianOperator::identity(d))
    }

    pub fn zero(d: usize) -> Self {
        Self(HermitianOperator::zero(d))
    }

    pub fn projector(psi: &ComplexVector) -> Result<Self> {
        Ok(Self(DensityOperator::pure(psi)?.0))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.0.matrix()
    }

    pub fn as_hermitian(&self) -> &HermitianOperator {
        &self.0
    }
}

impl From<DensityOperator> for Effect {
    fn from(rho: DensityOperator) -> Self {
        Effect(rho.0)
    }
}

/// Ordered list of effects summing to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Povm(Vec<Effect>);

impl Povm {
    pub fn new(effects: Vec<Effect>) -> Result<Self> {
        let d = effects.first().map(Effect::dim).ok_or_else(|| Error::InvalidInput("empty POVM".into()))?;
        let mut sum = zeros(d);
        for e in &effects {
            if e.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: e.dim() });
            }
            sum += e.matrix();
        }
        let dev = distance(&sum, &identity(d));
        if dev > tau_for(d as f64) {
            return Err(Error::NotPovm(dev));
        }
        Ok(Self(effects))
    }

    pub fn effects(&self) -> &[Effect] {
        &self.0
    }
}

/// Standard Pauli matrices `(σ_x, σ_y, σ_z)`.
pub fn sigma() -> [ComplexMatrix; 3] {
    let o = cx(0.0, 0.0);
    let l = cx(1.0, 0.0);
    let i = cx(0.0, 1.0);
    [
        ComplexMatrix::from_row_slice(2, 2, &[o, l, l, o]),
        ComplexMatrix::from_row_slice(2, 2, &[o, -i, i, o]),
        ComplexMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
    ]
}

/// Generalized Pauli operators for dimension `d`.
///
/// `y` is defined by `[X, Z] = 2iY`; at `d = 2` this is `-σ_y`.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliFamily {
    pub dim: usize,
    pub x: ComplexMatrix,
    pub z: ComplexMatrix,
    pub y: ComplexMatrix,
    pub parity: ComplexMatrix,
    pub omega: Complex64,
}

impl PauliFamily {
    /// `X^j Z^m` with exponents reduced mod `d`.
    pub fn displacement(&self, j: i64, m: i64) -> ComplexMatrix {
        let d = self.dim as i64;
        let j = j.rem_euclid(d);
        let m = m.rem_euclid(d);
        // (X^j Z^m)_{k+j, k} = ω^{mk}
        let mut out = zeros(self.dim);
        for k in 0..d {
            out[(((k + j) % d) as usize, k as usize)] = root_of_unity(self.dim, m * k);
        }
        out
    }
}

pub fn make_pauli_family(d: usize) -> Result<PauliFamily> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    let mut x = zeros(d);
    let mut z = zeros(d);
    let mut parity = zeros(d);
    for k in 0..d {
        x[((k + 1) % d, k)] = cx(1.0, 0.0);
        z[(k, k)] = root_of_unity(d, k as i64);
        parity[((d - k) % d, k)] = cx(1.0, 0.0);
    }
    let y = (&x * &z - &z * &x) / cx(0.0, 2.0);
    Ok(PauliFamily { dim: d, x, z, y, parity, omega: root_of_unity(d, 1) })
}

/// Weyl operator `U_{(p,q)} = ω^{pq/2} X^p Z^q`.
pub fn weyl_operator(p: i64, q: i64, d: usize) -> Result<ComplexMatrix> {
    let fam = make_pauli_family(d)?;
    let di = d as i64;
    let (p, q) = (p.rem_euclid(di), q.rem_euclid(di));
    Ok(fam.displacement(p, q) * half_phase(d, p * q))
}

/// The Schwinger basis `S(η,ξ) = X^η Z^ξ ω^{ηξ/2} / √d`, `η, ξ ∈ [-l, l]`,
/// ordered with `η` outermost.
pub fn schwinger_basis(d: usize) -> Result<Vec<((i64, i64), ComplexMatrix)>> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    if d.is_multiple_of(2) {
        return Err(Error::UnsupportedDimension(format!("Schwinger basis needs odd d, got {d}")));
    }
    let fam = make_pauli_family(d)?;
    let l = ((d - 1) / 2) as i64;
    let norm = cx(1.0 / (d as f64).sqrt(), 0.0);
    let mut out = Vec::with_capacity(d * d);
    for eta in -l..=l {
        for xi in -l..=l {
            let s = fam.displacement(eta, xi) * half_phase(d, eta * xi) * norm;
            out.push(((eta, xi), s));
        }
    }
    Ok(out)
}

/// `F = (1/√d) Σ ω^{kk'} |φ_k⟩⟨φ_k'|`.
pub fn finite_fourier(d: usize) -> Result<ComplexMatrix> {
    if d < 2 {
        return Err(Error::InvalidDimension(d));
    }
    let s = 1.0 / (d as f64).sqrt();
    Ok(ComplexMatrix::from_fn(d, d, |k, kk| root_of_unity(d, (k * kk) as i64) * s))
}

/// `Tr(AB)` for Hermitian operands.
pub fn trace_inner_product(a: &HermitianOperator, b: &HermitianOperator) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    Ok(trace_product(a.matrix(), b.matrix()).re)
}

/// `Tr(AB)` without forming the product.
pub fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let d = a.nrows();
    let mut acc = cx(0.0, 0.0);
    for i in 0..d {
        for j in 0..d {
            acc += a[(i, j)] * b[(j, i)];
        }
    }
    acc
}

/// Kronecker product `A ⊗ B`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

pub fn tensor_all(ops: &[ComplexMatrix]) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(1, 1);
    for op in ops {
        out = out.kronecker(op);
    }
    out
}

fn check_dims(m: &ComplexMatrix, subsystem: usize, dims: &[usize]) -> Result<()> {
    let total: usize = dims.iter().product();
    if total != m.nrows() || m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch { expected: total, found: m.nrows() });
    }
    if subsystem >= dims.len() {
        return Err(Error::InvalidInput(format!("subsystem {subsystem} out of range")));
    }
    Ok(())
}

/// Splits a flat index into (outer, local, inner) around `subsystem`.
fn split_index(i: usize, subsystem: usize, dims: &[usize]) -> (usize, usize, usize) {
    let inner: usize = dims[subsystem + 1..].iter().product();
    let local = dims[subsystem];
    (i / (inner * local), (i / inner) % local, i % inner)
}

/// Transpose on one tensor factor.
pub fn partial_transpose_matrix(m: &ComplexMatrix, subsystem: usize, dims: &[usize]) -> Result<ComplexMatrix> {
    check_dims(m, subsystem, dims)?;
    let n = m.nrows();
    let inner: usize = dims[subsystem + 1..].iter().product();
    let local = dims[subsystem];
    let mut out = zeros(n);
    for r in 0..n {
        for c in 0..n {
            let (ro, rl, ri) = split_index(r, subsystem, dims);
            let (co, cl, ci) = split_index(c, subsystem, dims);
            let r2 = (ro * local + cl) * inner + ri;
            let c2 = (co * local + rl) * inner + ci;
            out[(r2, c2)] = m[(r, c)];
        }
    }
    Ok(out)
}

pub fn partial_transpose(rho: &DensityOperator, subsystem: usize, dims: &[usize]) -> Result<HermitianOperator> {
    Ok(HermitianOperator::hermitian_part(partial_transpose_matrix(rho.matrix(), subsystem, dims)?))
}

/// Traces out one tensor factor.
pub fn partial_trace_matrix(m: &ComplexMatrix, subsystem: usize, dims: &[usize]) -> Result<ComplexMatrix> {
    check_dims(m, subsystem, dims)?;
    let inner: usize = dims[subsystem + 1..].iter().product();
    let local = dims[subsystem];
    let outer: usize = dims[..subsystem].iter().product();
    let n_out = outer * inner;
    let mut out = zeros(n_out);
    for ro in 0..outer {
        for ri in 0..inner {
            for co in 0..outer {
                for ci in 0..inner {
                    let mut acc = cx(0.0, 0.0);
                    for k in 0..local {
                        acc += m[((ro * local + k) * inner + ri, (co * local + k) * inner + ci)];
                    }
                    out[(ro * inner + ri, co * inner + ci)] = acc;
                }
            }
        }
    }
    Ok(out)
}

pub fn partial_trace(rho: &DensityOperator, subsystem: usize, dims: &[usize]) -> Result<DensityOperator> {
    Ok(DensityOperator(HermitianOperator::hermitian_part(partial_trace_matrix(rho.matrix(), subsystem, dims)?)))
}

/// Seeded generator used by every sampler in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    cx(re, im)
}

/// Haar-random pure state vector.
pub fn sample_pure_vector<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexVector {
    let v = ComplexVector::from_fn(d, |_, _| gaussian_complex(rng));
    let n = v.norm();
    v / cx(n, 0.0)
}

/// Random state of the given rank: a Gaussian pure state on `d × rank`
/// with the ancilla traced out.
pub fn sample_state<R: Rng + ?Sized>(rng: &mut R, d: usize, rank: usize) -> Result<DensityOperator> {
    if d < 1 || rank < 1 || rank > d {
        return Err(Error::RankOutOfRange { rank, dim: d });
    }
    let g = ComplexMatrix::from_fn(d, rank, |_, _| gaussian_complex(rng));
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    Ok(DensityOperator(HermitianOperator::hermitian_part(m / cx(tr, 0.0))))
}

/// Random effect: random eigenbasis (from a GUE draw) with eigenvalues
/// uniform in `[0, 1]`.
pub fn sample_effect<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Effect {
    let g = ComplexMatrix::from_fn(d, d, |_, _| gaussian_complex(rng));
    let (_, u) = hermitian_eigen(&(&g + g.adjoint()));
    let lam = DVector::<Complex64>::from_fn(d, |_, _| cx(rng.random::<f64>(), 0.0));
    let m = &u * ComplexMatrix::from_diagonal(&lam) * u.adjoint();
    Effect(HermitianOperator::hermitian_part(m))
}

pub fn random_state(d: usize, rank: usize, seed: u64) -> Result<DensityOperator> {
    sample_state(&mut seeded_rng(seed), d, rank)
}

pub fn random_effect(d: usize, seed: u64) -> Result<Effect> {
    if d < 1 {
        return Err(Error::InvalidDimension(d));
    }
    Ok(sample_effect(&mut seeded_rng(seed), d))
}

/// The six qubit stabilizer states: `±` eigenprojectors of X, Y, Z, in that
/// order (`+` first).
pub fn qubit_stabilizer_states() -> Vec<DensityOperator> {
    let [sx, sy, sz] = sigma();
    let mut out = Vec::with_capacity(6);
    for s in [sx, sy, sz] {
        for sign in [1.0, -1.0] {
            let m = (identity(2) + &s * cx(sign, 0.0)) * cx(0.5, 0.0);
            out.push(DensityOperator(HermitianOperator::hermitian_part(m)));
        }
    }
    out
}

/// Orthonormal Hermitian operator basis (generalized Gell-Mann).
///
/// Ordering: `I/√d`; then for each pair `j < k` in lexicographic order the
/// symmetric `(E_jk + E_kj)/√2` followed by the antisymmetric
/// `-i(E_jk - E_kj)/√2`; then the diagonal elements
/// `(Σ_{m<l} E_mm - l E_ll)/√(l(l+1))` for `l = 1..d-1`.
pub fn hermitian_basis(d: usize) -> Vec<ComplexMatrix> {
    let mut out = Vec::with_capacity(d * d);
    out.push(identity(d) * cx(1.0 / (d as f64).sqrt(), 0.0));
    let r = 1.0 / 2f64.sqrt();
    for j in 0..d {
        for k in j + 1..d {
            let mut s = zeros(d);
            s[(j, k)] = cx(r, 0.0);
            s[(k, j)] = cx(r, 0.0);
            out.push(s);
            let mut a = zeros(d);
            a[(j, k)] = cx(0.0, -r);
            a[(k, j)] = cx(0.0, r);
            out.push(a);
        }
    }
    for l in 1..d {
        let n = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut g = zeros(d);
        for m in 0..l {
            g[(m, m)] = cx(n, 0.0);
        }
        g[(l, l)] = cx(-(l as f64) * n, 0.0);
        out.push(g);
    }
    out
}

/// Real coordinates `Tr(B_i A)` of a Hermitian matrix in [`hermitian_basis`].
pub fn hermitian_coords(a: &ComplexMatrix, basis: &[ComplexMatrix]) -> DVector<f64> {
    DVector::from_iterator(basis.len(), basis.iter().map(|b| trace_product(b, a).re))
}

/// Inverse of [`hermitian_coords`].
pub fn from_hermitian_coords(c: &DVector<f64>, basis: &[ComplexMatrix]) -> ComplexMatrix {
    let d = basis[0].nrows();
    let mut out = zeros(d);
    for (ci, b) in c.iter().zip(basis) {
        out += b * cx(*ci, 0.0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> bool {
        distance(a, b) < tol
    }

    #[test]
    fn pauli_d2_matrices() {
        let f = make_pauli_family(2).unwrap();
        let [sx, sy, sz] = sigma();
        assert!(close(&f.x, &sx, 1e-15));
        assert!(close(&f.z, &sz, 1e-15));
        // [X,Z] = 2iY gives the negative of σ_y.
        assert!(close(&f.y, &(-sy), 1e-15));
        assert!(close(
            &f.y,
            &ComplexMatrix::from_row_slice(2, 2, &[cx(0., 0.), cx(0., 1.), cx(0., -1.), cx(0., 0.)]),
            1e-15
        ));
    }

    #[test]
    fn pauli_d3_spectrum_of_z() {
        let f = make_pauli_family(3).unwrap();
        for k in 0..3 {
            let w = root_of_unity(3, k as i64);
            assert!((f.z[(k, k)] - w).norm() < 1e-15);
        }
        assert!((f.omega - Complex64::from_polar(1.0, 2.0 * PI / 3.0)).norm() < 1e-15);
    }

    #[test]
    fn pauli_rejects_small_dimension() {
        assert_eq!(make_pauli_family(1).unwrap_err(), Error::InvalidDimension(1));
    }

    #[test]
    fn pauli_group_relations() {
        for d in 2..=8 {
            let f = make_pauli_family(d).unwrap();
            let id = identity(d);
            assert!(close(&unitary_power(&f.x, d as i64), &id, 1e-10));
            assert!(close(&unitary_power(&f.z, d as i64), &id, 1e-10));
            assert!(close(&(&f.parity * &f.parity), &id, 1e-10));
            assert!(close(&(&f.z * &f.x), &(&f.x * &f.z * f.omega), 1e-10));
            assert!(close(&(f.x.adjoint() * &f.x), &id, 1e-12));
            assert!(close(&(f.z.adjoint() * &f.z), &id, 1e-12));
            for j in -3..4 {
                for m in -3..4 {
                    let direct = unitary_power(&f.x, j) * unitary_power(&f.z, m);
                    assert!(close(&f.displacement(j, m), &direct, 1e-10));
                }
            }
        }
    }

    #[test]
    fn weyl_examples() {
        for d in 2..=6 {
            assert!(close(&weyl_operator(0, 0, d).unwrap(), &identity(d), 1e-15));
        }
        let f = make_pauli_family(3).unwrap();
        assert!(close(&weyl_operator(1, 0, 3).unwrap(), &f.x, 1e-15));
        let u = weyl_operator(1, 1, 3).unwrap();
        assert!(close(&(u.adjoint() * &u), &identity(3), 1e-12));
        let u = weyl_operator(1, 1, 4).unwrap();
        assert!(close(&(u.adjoint() * &u), &identity(4), 1e-12));
    }

    #[test]
    fn schwinger_orthonormal() {
        let b = schwinger_basis(3).unwrap();
        assert!(close(&b[4].1, &(identity(3) * cx(1.0 / 3f64.sqrt(), 0.0)), 1e-15));
        assert_eq!(b[4].0, (0, 0));
        for (i, (_, a)) in b.iter().enumerate() {
            for (j, (_, c)) in b.iter().enumerate() {
                let ip = trace_product(&a.adjoint(), c);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - cx(want, 0.0)).norm() < 1e-10);
            }
        }
        let b5 = schwinger_basis(5).unwrap();
        let find = |k: (i64, i64)| b5.iter().find(|(l, _)| *l == k).unwrap().1.clone();
        assert!(trace_product(&find((1, -1)).adjoint(), &find((1, 1))).norm() < 1e-12);
        assert!(matches!(schwinger_basis(4), Err(Error::UnsupportedDimension(_))));
    }

    #[test]
    fn fourier_examples() {
        let f2 = finite_fourier(2).unwrap();
        let r = 1.0 / 2f64.sqrt();
        let want = ComplexMatrix::from_row_slice(2, 2, &[cx(r, 0.), cx(r, 0.), cx(r, 0.), cx(-r, 0.)]);
        assert!(close(&f2, &want, 1e-15));
        let f3 = finite_fourier(3).unwrap();
        assert!(close(&(f3.adjoint() * &f3), &identity(3), 1e-12));
        let f4 = finite_fourier(4).unwrap();
        let par = make_pauli_family(4).unwrap().parity;
        assert!(close(&(&f4 * &f4), &par, 1e-12));
    }

    #[test]
    fn fourier_conjugates_shift_to_clock() {
        for d in [2, 3, 5] {
            let f = finite_fourier(d).unwrap();
            let p = make_pauli_family(d).unwrap();
            assert!(close(&(&f * &p.x * f.adjoint()), &p.z, 1e-10));
            assert!(close(&(f.adjoint() * &p.x * &f), &p.z.adjoint(), 1e-10));
        }
    }

    #[test]
    fn trace_inner_product_examples() {
        let i3 = HermitianOperator::identity(3);
        assert!((trace_inner_product(&i3, &i3).unwrap() - 3.0).abs() < 1e-15);
        let [sx, _, sz] = sigma();
        let x = HermitianOperator::new(sx).unwrap();
        let z = HermitianOperator::new(sz).unwrap();
        assert!(trace_inner_product(&x, &z).unwrap().abs() < 1e-15);
        let a = random_state(4, 4, 1).unwrap();
        let b = random_effect(4, 2).unwrap();
        let mut oracle = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                oracle += (a.matrix()[(i, j)] * b.matrix()[(j, i)]).re;
            }
        }
        let got = trace_inner_product(a.as_hermitian(), b.as_hermitian()).unwrap();
        assert!((got - oracle).abs() < 1e-12);
        assert!(trace_inner_product(&i3, &HermitianOperator::identity(2)).is_err());
    }

    #[test]
    fn composite_plumbing() {
        let r1 = random_state(2, 2, 10).unwrap();
        let r2 = random_state(3, 2, 11).unwrap();
        let prod = DensityOperator::new(tensor(r1.matrix(), r2.matrix())).unwrap();
        let pt = partial_transpose(&prod, 1, &[2, 3]).unwrap();
        let want = tensor(r1.matrix(), &r2.matrix().transpose());
        assert!(close(pt.matrix(), &want, 1e-12));
        assert!(pt.eigenvalues()[0] > -1e-12);
        let red = partial_trace(&prod, 1, &[2, 3]).unwrap();
        assert!(close(red.matrix(), r1.matrix(), 1e-12));
        let red2 = partial_trace(&prod, 0, &[2, 3]).unwrap();
        assert!(close(red2.matrix(), r2.matrix(), 1e-12));
        // singlet
        let mut psi = ComplexVector::zeros(4);
        psi[1] = cx(1.0 / 2f64.sqrt(), 0.0);
        psi[2] = cx(-1.0 / 2f64.sqrt(), 0.0);
        let singlet = DensityOperator::pure(&psi).unwrap();
        let ev = partial_transpose(&singlet, 1, &[2, 2]).unwrap().eigenvalues();
        assert!((ev[0] + 0.5).abs() < 1e-12);
        assert!(partial_trace(&singlet, 0, &[2, 3]).is_err());
    }

    #[test]
    fn random_state_contract() {
        let p = random_state(3, 1, 5).unwrap();
        assert!((p.purity() - 1.0).abs() < 1e-10);
        let full = random_state(3, 3, 6).unwrap();
        assert!(full.as_hermitian().eigenvalues()[0] > 0.0);
        assert_eq!(random_state(4, 2, 9).unwrap(), random_state(4, 2, 9).unwrap());
        assert!(matches!(random_state(3, 4, 1), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(random_state(3, 0, 1), Err(Error::RankOutOfRange { .. })));
        let e = random_effect(3, 4).unwrap();
        assert!(Effect::new(e.matrix().clone()).is_ok());
    }

    #[test]
    fn random_states_are_valid_densities() {
        for d in [2, 3, 4, 6] {
            for seed in 0..1000u64 {
                let rank = 1 + (seed as usize % d);
                let rho = random_state(d, rank, seed).unwrap();
                assert!(DensityOperator::new(rho.matrix().clone()).is_ok());
            }
        }
    }

    #[test]
    fn stabilizer_states() {
        let s = qubit_stabilizer_states();
        assert_eq!(s.len(), 6);
        let z_plus = (identity(2) + sigma()[2].clone()) * cx(0.5, 0.0);
        assert!(s.iter().any(|r| close(r.matrix(), &z_plus, 1e-15)));
        for a in &s {
            assert!((a.purity() - 1.0).abs() < 1e-12);
            for b in &s {
                let o = trace_product(a.matrix(), b.matrix()).re;
                assert!([0.0, 0.5, 1.0].iter().any(|v| (o - v).abs() < 1e-12));
            }
        }
    }

    #[test]
    fn gell_mann_is_orthonormal() {
        for d in 2..=5 {
            let b = hermitian_basis(d);
            assert_eq!(b.len(), d * d);
            for (i, x) in b.iter().enumerate() {
                assert!(distance(x, &x.adjoint()) < 1e-15);
                for (j, y) in b.iter().enumerate() {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((trace_product(x, y).re - want).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn normalized_schwinger_hermitian_combinations_are_orthonormal() {
        // (S + S†)/√2 and i(S - S†)/√2 over pairs {(η,ξ), (-η,-ξ)}, plus S(0,0).
        let d = 5;
        let b = schwinger_basis(d).unwrap();
        let mut herm = Vec::new();
        for ((eta, xi), s) in &b {
            if (*eta, *xi) == (0, 0) {
                herm.push(s.clone());
            } else if (*eta, *xi) > (0, 0) {
                let r = cx(1.0 / 2f64.sqrt(), 0.0);
                herm.push((s + s.adjoint()) * r);
                herm.push((s - s.adjoint()) * cx(0.0, 1.0) * r);
            }
        }
        assert_eq!(herm.len(), d * d);
        for (i, x) in herm.iter().enumerate() {
            assert!(distance(x, &x.adjoint()) < 1e-12);
            for (j, y) in herm.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((trace_product(x, y).re - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn validation_rejects_bad_operators() {
        let m = ComplexMatrix::from_row_slice(2, 2, &[cx(1., 0.), cx(1., 0.), cx(0., 0.), cx(0., 0.)]);
        assert!(matches!(HermitianOperator::new(m), Err(Error::NotHermitian(_))));
        assert!(matches!(DensityOperator::new(identity(2)), Err(Error::NotDensity(_))));
        assert!(matches!(Effect::new(identity(2) * cx(2.0, 0.0)), Err(Error::NotEffect(_))));
        let half = Effect::new(identity(2) * cx(0.5, 0.0)).unwrap();
        assert!(Povm::new(alloc::vec![half.clone(), half.clone()]).is_ok());
        assert!(matches!(Povm::new(alloc::vec![half]), Err(Error::NotPovm(_))));
    }
}
