//! Arithmetic in GF(p^n).
//!
//! Elements are polynomials over `Z_p` of degree below `n`, reduced modulo a
//! monic irreducible polynomial. The default modulus for each `(p, n)` is the
//! Conway polynomial, computed on demand rather than read from a table.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest field order for which specs are validated exhaustively.
pub const MAX_FIELD_ORDER: u64 = 4096;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// `(p, n)` with `q = p^n`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|k| q.is_multiple_of(*k))?;
    let mut n = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        n += 1;
    }
    (r == 1).then_some((p as u32, n))
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= m {
        if m.is_multiple_of(k) {
            out.push(k);
            while m.is_multiple_of(k) {
                m /= k;
            }
        }
        k += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Polynomial arithmetic over `Z_p`, little-endian coefficient vectors.
mod poly {
    use super::*;

    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    /// Remainder of `a` modulo a monic `m`.
    pub fn rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let dm = m.len() - 1;
        while a.len() > dm {
            let lead = *a.last().unwrap() as u64;
            let shift = a.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                let idx = shift + i;
                a[idx] = ((a[idx] as u64 + (p as u64 - lead) * c as u64) % p as u64) as u32;
            }
            a = trim(a);
        }
        a
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        rem_monic(&mul(a, b, p), m, p)
    }

    pub fn powmod(a: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut base = rem_monic(a, m, p);
        let mut acc = vec![1u32];
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &base, m, p);
            }
            base = mulmod(&base, &base, m, p);
            e >>= 1;
        }
        rem_monic(&acc, m, p)
    }

    /// Evaluates `f(y)` modulo `m`, with `y` itself a residue mod `m`.
    pub fn compose(f: &[u32], y: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut acc: Vec<u32> = Vec::new();
        for &c in f.iter().rev() {
            acc = mulmod(&acc, y, m, p);
            if acc.is_empty() {
                acc.push(0);
            }
            acc[0] = (acc[0] + c) % p;
            acc = trim(acc);
        }
        acc
    }

    /// Monic polynomial of degree `deg` whose lower coefficients are the
    /// base-`p` digits of `index`.
    pub fn monic_from_index(mut index: u64, deg: usize, p: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            out.push((index % p as u64) as u32);
            index /= p as u64;
        }
        out.push(1);
        out
    }
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=n/2`.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let n = modulus.len() - 1;
    if n == 0 {
        return false;
    }
    for deg in 1..=n / 2 {
        let count = (p as u64).pow(deg as u32);
        for idx in 0..count {
            let g = poly::monic_from_index(idx, deg, p);
            if poly::rem_monic(modulus, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Field description: characteristic `p`, degree `n` and a monic irreducible
/// modulus given as coefficients `c_0..c_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    n: u32,
    modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn new(p: u32, n: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::InvalidField("degree must be positive".into()));
        }
        let order = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
        if order > MAX_FIELD_ORDER {
            return Err(Error::InvalidField(format!("field order {order} exceeds {MAX_FIELD_ORDER}")));
        }
        if modulus.len() != n as usize + 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!("modulus must have {} coefficients in Z_{p}", n + 1)));
        }
        if modulus[n as usize] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidField(format!("modulus {modulus:?} is reducible over Z_{p}")));
        }
        Ok(Self { p, n, modulus })
    }

    /// Spec with the Conway polynomial as modulus.
    pub fn conway(p: u32, n: u32) -> Result<Self> {
        let modulus = conway_polynomial(p, n)?;
        Self::new(p, n, modulus)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.n)
    }
}

/// Conway polynomial `C_{p,n}`.
///
/// Candidates run through `x^n - a_{n-1}x^{n-1} + a_{n-2}x^{n-2} - ...` with
/// `(a_{n-1}, ..., a_0)` in lexicographic order. The first candidate for
/// which `x` is primitive and which is compatible with every `C_{p,m}`,
/// `m | n`, is returned.
pub fn conway_polynomial(p: u32, n: u32) -> Result<Vec<u32>> {
    if !is_prime(p as u64) || n == 0 {
        return Err(Error::InvalidField(format!("no Conway polynomial for p={p}, n={n}")));
    }
    let order = (p as u64).checked_pow(n).unwrap_or(u64::MAX);
    if order > MAX_FIELD_ORDER {
        return Err(Error::InvalidField(format!("field order {order} exceeds {MAX_FIELD_ORDER}")));
    }
    let group = order - 1;
    let cofactors: Vec<u64> = prime_factors(group).into_iter().map(|r| group / r).collect();
    let subfields: Vec<(u32, Vec<u32>)> = (1..n)
        .filter(|m| n.is_multiple_of(*m))
        .map(|m| conway_polynomial(p, m).map(|c| (m, c)))
        .collect::<Result<_>>()?;
    let n = n as usize;
    let x = vec![0, 1];
    for idx in 0..(p as u64).pow(n as u32) {
        // digits of idx, most significant first, are (a_{n-1}, ..., a_0)
        let mut f = vec![0u32; n + 1];
        f[n] = 1;
        let mut rest = idx;
        for (i, coeff) in f.iter_mut().take(n).enumerate() {
            let a = (rest % p as u64) as u32;
            rest /= p as u64;
            *coeff = if (n - i).is_multiple_of(2) { a } else { (p - a) % p };
        }
        if f[0] == 0 {
            continue;
        }
        if poly::powmod(&x, group, &f, p) != vec![1] {
            continue;
        }
        if cofactors.iter().any(|&c| poly::powmod(&x, c, &f, p) == vec![1]) {
            continue;
        }
        let compatible = subfields.iter().all(|(m, c)| {
            let e = group / ((p as u64).pow(*m) - 1);
            let y = poly::powmod(&x, e, &f, p);
            poly::compose(c, &y, &f, p).is_empty()
        });
        if compatible {
            return Ok(f);
        }
    }
    Err(Error::InvalidField(format!("no Conway polynomial found for p={p}, n={n}")))
}

/// Shared handle to a field; elements keep a reference to it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldSpec>);

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        Self(Arc::new(spec))
    }

    pub fn conway(p: u32, n: u32) -> Result<Self> {
        Ok(Self::new(FieldSpec::conway(p, n)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn n(&self) -> usize {
        self.0.n as usize
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.n() {
            return Err(Error::InvalidInput(format!("expected at most {} coefficients", self.n())));
        }
        let mut c: Vec<u32> = coeffs.iter().map(|&v| v % self.p()).collect();
        c.resize(self.n(), 0);
        Ok(FieldElement { field: self.clone(), coeffs: c })
    }

    /// Element whose base-`p` digits (least significant first) are its
    /// coefficients.
    pub fn from_index(&self, mut index: usize) -> FieldElement {
        let p = self.p() as usize;
        let coeffs = (0..self.n())
            .map(|_| {
                let c = index % p;
                index /= p;
                c as u32
            })
            .collect();
        FieldElement { field: self.clone(), coeffs }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_index(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_index(1)
    }

    pub fn from_int(&self, v: i64) -> FieldElement {
        self.from_index(v.rem_euclid(self.p() as i64) as usize)
    }

    /// The class of the indeterminate `x` (the constant `x mod (x - c)` when `n = 1`).
    pub fn generator(&self) -> FieldElement {
        let m = &self.0.modulus;
        let r = poly::rem_monic(&[0, 1], m, self.p());
        self.element_from_poly(r)
    }

    /// All elements in index order.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.order()).map(|i| self.from_index(i)).collect()
    }

    /// Polynomial basis `{1, x, ..., x^{n-1}}`.
    pub fn polynomial_basis(&self) -> Vec<FieldElement> {
        (0..self.n())
            .map(|i| {
                let mut c = vec![0u32; self.n()];
                c[i] = 1;
                FieldElement { field: self.clone(), coeffs: c }
            })
            .collect()
    }

    fn element_from_poly(&self, mut c: Vec<u32>) -> FieldElement {
        c.resize(self.n(), 0);
        FieldElement { field: self.clone(), coeffs: c }
    }
}

/// Element of GF(p^n) as a coefficient vector of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn index(&self) -> usize {
        let p = self.field.p() as usize;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::CrossSpec);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let p = self.field.p();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a + b) % p).collect();
        Ok(Self { field: self.field.clone(), coeffs })
    }

    pub fn neg(&self) -> Self {
        let p = self.field.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        Self { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let spec = self.field.spec();
        let r = poly::mulmod(&self.coeffs, &other.coeffs, &spec.modulus, spec.p);
        Ok(self.field.element_from_poly(r))
    }

    pub fn pow(&self, e: u64) -> Self {
        let spec = self.field.spec();
        let r = poly::powmod(&self.coeffs, e, &spec.modulus, spec.p);
        self.field.element_from_poly(r)
    }

    /// Multiplicative inverse via `a^{q-2}`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.order() as u64 - 2))
    }

    /// Scalar multiple by an element of the prime field.
    pub fn scale(&self, s: u32) -> Self {
        let p = self.field.p() as u64;
        let coeffs = self.coeffs.iter().map(|&a| ((a as u64 * s as u64) % p) as u32).collect();
        Self { field: self.field.clone(), coeffs }
    }

    /// Field trace `Σ_{i<n} x^{p^i}`, an element of `Z_p`.
    pub fn trace(&self) -> u32 {
        let p = self.field.p() as u64;
        let mut acc = self.field.zero();
        let mut term = self.clone();
        for _ in 0..self.field.n() {
            acc = acc.add(&term).expect("same field");
            term = term.pow(p);
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&c| c == 0));
        acc.coeffs[0]
    }
}

pub fn field_add(a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    a.add(b)
}

pub fn field_mul(a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    a.mul(b)
}

pub fn field_inv(a: &FieldElement) -> Result<FieldElement> {
    a.inv()
}

pub fn field_trace(x: &FieldElement) -> u32 {
    x.trace()
}

/// Inverse of a square matrix over `Z_p` by Gauss–Jordan elimination.
fn invert_mod_p(m: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let p64 = p as u64;
    let inv_scalar = |a: u32| -> u32 {
        let mut acc = 1u64;
        let mut base = a as u64 % p64;
        let mut e = p64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p64;
            }
            base = base * base % p64;
            e >>= 1;
        }
        acc as u32
    };
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<u64> = row.iter().map(|&v| v as u64 % p64).collect();
            r.extend((0..n).map(|j| (i == j) as u64));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let s = inv_scalar(a[col][col] as u32) as u64;
        for v in a[col].iter_mut() {
            *v = *v * s % p64;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x = (*x + (p64 - f) * y) % p64;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].iter().map(|&v| v as u32).collect()).collect())
}

/// Trace-dual basis: `tr(ẽ_i e_j) = δ_ij`.
pub fn dual_basis(basis: &[FieldElement]) -> Result<Vec<FieldElement>> {
    let field = basis.first().ok_or(Error::SingularBasis)?.field().clone();
    if basis.len() != field.n() {
        return Err(Error::SingularBasis);
    }
    for e in basis {
        if e.field() != &field {
            return Err(Error::CrossSpec);
        }
    }
    let gram: Vec<Vec<u32>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| a.mul(b).map(|x| x.trace())).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let inv = invert_mod_p(&gram, field.p()).ok_or(Error::SingularBasis)?;
    inv.iter()
        .map(|row| {
            let mut acc = field.zero();
            for (c, e) in row.iter().zip(basis) {
                acc = acc.add(&e.scale(*c))?;
            }
            Ok(acc)
        })
        .collect()
}

/// Coordinates of `x` in `basis`: `x_i = tr(ẽ_i x)`.
pub fn expand(x: &FieldElement, basis: &[FieldElement]) -> Result<Vec<u32>> {
    let dual = dual_basis(basis)?;
    expand_with_dual(x, &dual)
}

/// [`expand`] with a precomputed dual basis.
pub fn expand_with_dual(x: &FieldElement, dual: &[FieldElement]) -> Result<Vec<u32>> {
    dual.iter().map(|d| d.mul(x).map(|y| y.trace())).collect()
}

/// `Σ c_i e_i`.
pub fn recombine(coeffs: &[u32], basis: &[FieldElement]) -> Result<FieldElement> {
    let field = basis.first().ok_or(Error::SingularBasis)?.field().clone();
    let mut acc = field.zero();
    for (c, e) in coeffs.iter().zip(basis) {
        acc = acc.add(&e.scale(*c))?;
    }
    Ok(acc)
}
