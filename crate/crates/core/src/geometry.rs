//! Discrete phase spaces: labeled points, lines and striations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::field::Field;
use crate::frame::{Label, OutcomeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryKind {
    PrimeLattice,
    CompositeLattice,
    FieldLattice,
    ExtendedLattice,
    DoubleLattice,
    Constellation,
    SphereSample,
}

impl GeometryKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::PrimeLattice => "prime-lattice",
            Self::CompositeLattice => "composite-lattice",
            Self::FieldLattice => "field-lattice",
            Self::ExtendedLattice => "extended-lattice",
            Self::DoubleLattice => "double-lattice",
            Self::Constellation => "constellation",
            Self::SphereSample => "sphere-sample",
        }
    }
}

/// Points with optional line structure. Lines hold point indices; a
/// striation holds the indices of its `d` parallel lines, and its first
/// line passes through the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpaceGeometry {
    pub kind: GeometryKind,
    pub points: Vec<Label>,
    pub lines: Vec<Vec<usize>>,
    pub striations: Vec<Vec<usize>>,
    /// Direction `(a, b)` of each striation: its lines are `a q + b p = c`.
    pub directions: Vec<(usize, usize)>,
}

impl PhaseSpaceGeometry {
    /// Points only, no lines.
    pub fn points_only(kind: GeometryKind, points: Vec<Label>) -> Self {
        Self { kind, points, lines: Vec::new(), striations: Vec::new(), directions: Vec::new() }
    }

    pub fn outcomes(&self) -> OutcomeSet {
        OutcomeSet::new(self.points.clone()).expect("geometry labels are distinct")
    }

    pub fn point_index(&self, label: &Label) -> Option<usize> {
        self.points.iter().position(|l| l == label)
    }

    /// Index of the unique line through two distinct points.
    pub fn line_through(&self, a: usize, b: usize) -> Option<usize> {
        self.lines.iter().position(|l| l.contains(&a) && l.contains(&b))
    }

    /// Checks the affine-plane axioms: every striation partitions the
    /// points, two points share exactly one line, nonparallel lines meet in
    /// exactly one point, and parallel lines are disjoint.
    pub fn verify_axioms(&self) -> bool {
        let n = self.points.len();
        if self.lines.is_empty() {
            return false;
        }
        for s in &self.striations {
            let mut cover = vec![0usize; n];
            for &l in s {
                for &p in &self.lines[l] {
                    cover[p] += 1;
                }
            }
            if cover.iter().any(|&c| c != 1) {
                return false;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let count = self.lines.iter().filter(|l| l.contains(&a) && l.contains(&b)).count();
                if count != 1 {
                    return false;
                }
            }
        }
        let striation_of: Vec<usize> = {
            let mut v = vec![usize::MAX; self.lines.len()];
            for (si, s) in self.striations.iter().enumerate() {
                for &l in s {
                    v[l] = si;
                }
            }
            v
        };
        for (i, li) in self.lines.iter().enumerate() {
            for (j, lj) in self.lines.iter().enumerate().skip(i + 1) {
                let common = li.iter().filter(|p| lj.contains(p)).count();
                let want = if striation_of[i] == striation_of[j] { 0 } else { 1 };
                if common != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds lines `a q + b p = c` over an `m × m` grid of ring elements given
/// by index, for each direction in order and each `c` in index order.
fn lattice<F>(kind: GeometryKind, m: usize, directions: Vec<(usize, usize)>, eval: F) -> PhaseSpaceGeometry
where
    F: Fn(usize, usize, usize, usize) -> usize,
{
    let mut points = Vec::with_capacity(m * m);
    for q in 0..m {
        for p in 0..m {
            points.push(Label(vec![q as i64, p as i64]));
        }
    }
    let mut lines = Vec::new();
    let mut striations = Vec::new();
    for &(a, b) in &directions {
        let mut s = Vec::with_capacity(m);
        let mut by_c = vec![Vec::new(); m];
        for q in 0..m {
            for p in 0..m {
                by_c[eval(a, b, q, p)].push(q * m + p);
            }
        }
        for line in by_c {
            s.push(lines.len());
            lines.push(line);
        }
        striations.push(s);
    }
    PhaseSpaceGeometry { kind, points, lines, striations, directions }
}

/// `Z_d × Z_d` with striations in the order `(1,0)`, then `(m,1)` for
/// `m = 0..d-1`. Point `(q, p)` has index `q·d + p`.
pub fn prime_lattice(d: usize) -> PhaseSpaceGeometry {
    let mut dirs = vec![(1, 0)];
    dirs.extend((0..d).map(|m| (m, 1)));
    lattice(GeometryKind::PrimeLattice, d, dirs, |a, b, q, p| (a * q + b * p) % d)
}

/// `F × F` for a finite field, points and coefficients indexed as in
/// [`Field::from_index`]. Striation order matches [`prime_lattice`].
pub fn field_lattice(field: &Field) -> Result<PhaseSpaceGeometry> {
    let m = field.order();
    let els = field.elements();
    // multiplication and addition tables by index
    let mul: Vec<Vec<usize>> = els
        .iter()
        .map(|a| els.iter().map(|b| a.mul(b).map(|x| x.index())).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let add: Vec<Vec<usize>> = els
        .iter()
        .map(|a| els.iter().map(|b| a.add(b).map(|x| x.index())).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut dirs = vec![(1, 0)];
    dirs.extend((0..m).map(|k| (k, 1)));
    Ok(lattice(GeometryKind::FieldLattice, m, dirs, |a, b, q, p| add[mul[a][q]][mul[b][p]]))
}

/// Points of a product lattice; labels concatenate the factor labels
/// `(q_1, p_1, q_2, p_2, ...)` and the first factor varies slowest.
pub fn product_points(factors: &[PhaseSpaceGeometry]) -> Vec<Label> {
    let mut out = vec![Label(Vec::new())];
    for g in factors {
        let mut next = Vec::with_capacity(out.len() * g.points.len());
        for head in &out {
            for tail in &g.points {
                let mut parts = head.0.clone();
                parts.extend_from_slice(&tail.0);
                next.push(Label(parts));
            }
        }
        out = next;
    }
    out
}
