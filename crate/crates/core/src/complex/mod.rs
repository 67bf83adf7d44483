//! Bounded complexes of finitely generated free abelian groups.
//!
//! A complex stores one free module per degree in `[min_deg, max_deg]` and,
//! for each degree `d`, the matrix of the differential leaving `d`. With
//! homological orientation it lands in `d - 1`, with cohomological
//! orientation in `d + 1`. Matrices are `(dim target) x (dim source)`, and a
//! differential whose target lies outside the range has zero rows.

mod json;
mod map;

use std::borrow::Cow;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{
    homology_from_invariants, invariant_factors, FgAbGroup, GradedAbGroup, IntegerMatrix, InvariantFactors,
};
use crate::error::{Error, Result};

pub use json::ComplexDocument;
pub use map::ChainMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Differential lowers degree.
    Homological,
    /// Differential raises degree.
    Cohomological,
}

impl Orientation {
    /// Degree step of the differential: `-1` or `+1`.
    pub fn step(self) -> i64 {
        match self {
            Orientation::Homological => -1,
            Orientation::Cohomological => 1,
        }
    }

    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Homological => Orientation::Cohomological,
            Orientation::Cohomological => Orientation::Homological,
        }
    }
}

/// Basis of one degree. Large generated complexes skip explicit labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    Anonymous(usize),
    Labeled(Vec<String>),
}

impl Basis {
    pub fn len(&self) -> usize {
        match self {
            Basis::Anonymous(n) => *n,
            Basis::Labeled(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self, i: usize) -> Cow<'_, str> {
        match self {
            Basis::Anonymous(_) => Cow::Owned(format!("e{i}")),
            Basis::Labeled(v) => Cow::Borrowed(&v[i]),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.label(i).into_owned()).collect()
    }

    fn is_labeled(&self) -> bool {
        matches!(self, Basis::Labeled(_))
    }
}

impl From<Vec<String>> for Basis {
    fn from(v: Vec<String>) -> Self {
        Basis::Labeled(v)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct BoundedComplex {
    orientation: Orientation,
    min_deg: i64,
    basis: Vec<Basis>,
    differentials: Vec<IntegerMatrix>,
}

impl BoundedComplex {
    /// Validates shapes and `d ∘ d = 0`.
    pub fn new(
        orientation: Orientation,
        min_deg: i64,
        basis: Vec<Basis>,
        differentials: Vec<IntegerMatrix>,
    ) -> Result<Self> {
        let c = Self::new_unchecked(orientation, min_deg, basis, differentials)?;
        c.check_squares_zero()?;
        Ok(c)
    }

    /// Shape checks only. For builders whose `d ∘ d = 0` is proven by tests.
    pub(crate) fn new_unchecked(
        orientation: Orientation,
        min_deg: i64,
        basis: Vec<Basis>,
        differentials: Vec<IntegerMatrix>,
    ) -> Result<Self> {
        if basis.len() != differentials.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} bases but {} differentials",
                basis.len(),
                differentials.len()
            )));
        }
        let c = BoundedComplex {
            orientation,
            min_deg,
            basis,
            differentials,
        };
        for d in c.degrees() {
            let m = &c.differentials[c.idx(d)];
            let expected = (c.dim(d + orientation.step()), c.dim(d));
            if m.shape() != expected {
                return Err(Error::ShapeMismatch(format!(
                    "differential at degree {d} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    expected.0,
                    expected.1
                )));
            }
        }
        Ok(c)
    }

    /// Complex with anonymous bases of the given dimensions.
    pub fn from_dims(
        orientation: Orientation,
        min_deg: i64,
        dims: &[usize],
        differentials: Vec<IntegerMatrix>,
    ) -> Result<Self> {
        Self::new(
            orientation,
            min_deg,
            dims.iter().map(|&n| Basis::Anonymous(n)).collect(),
            differentials,
        )
    }

    /// The complex with no modules at all.
    pub fn zero(orientation: Orientation) -> Self {
        BoundedComplex {
            orientation,
            min_deg: 0,
            basis: Vec::new(),
            differentials: Vec::new(),
        }
    }

    /// `Z^rank` in a single degree.
    pub fn concentrated(orientation: Orientation, degree: i64, rank: usize) -> Self {
        BoundedComplex {
            orientation,
            min_deg: degree,
            basis: vec![Basis::Anonymous(rank)],
            differentials: vec![IntegerMatrix::zeros(0, rank)],
        }
    }

    /// Two-term complex `Z^a → Z^b` with the given matrix, starting at `degree`
    /// and going in the direction of the orientation.
    pub fn two_term(orientation: Orientation, degree: i64, m: IntegerMatrix) -> Result<Self> {
        let (b, a) = m.shape();
        let next = degree + orientation.step();
        let (min_deg, basis, diffs) = if next > degree {
            (
                degree,
                vec![Basis::Anonymous(a), Basis::Anonymous(b)],
                vec![m, IntegerMatrix::zeros(0, b)],
            )
        } else {
            (
                next,
                vec![Basis::Anonymous(b), Basis::Anonymous(a)],
                vec![IntegerMatrix::zeros(0, b), m],
            )
        };
        Self::new(orientation, min_deg, basis, diffs)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    /// `min_deg - 1` for the zero complex.
    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.basis.len() as i64 - 1
    }

    pub fn is_zero_complex(&self) -> bool {
        self.basis.iter().all(Basis::is_empty)
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.min_deg..=self.max_deg()
    }

    fn contains(&self, d: i64) -> bool {
        d >= self.min_deg && d <= self.max_deg()
    }

    fn idx(&self, d: i64) -> usize {
        (d - self.min_deg) as usize
    }

    pub fn dim(&self, d: i64) -> usize {
        if self.contains(d) {
            self.basis[self.idx(d)].len()
        } else {
            0
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Basis::len).collect()
    }

    pub fn basis(&self, d: i64) -> Option<&Basis> {
        self.contains(d).then(|| &self.basis[self.idx(d)])
    }

    /// Differential leaving degree `d`, if `d` is in range.
    pub fn differential(&self, d: i64) -> Option<&IntegerMatrix> {
        self.contains(d).then(|| &self.differentials[self.idx(d)])
    }

    /// Differential leaving `d`, or an empty zero matrix of the right shape.
    pub fn differential_or_zero(&self, d: i64) -> IntegerMatrix {
        self.differential(d)
            .cloned()
            .unwrap_or_else(|| IntegerMatrix::zeros(self.dim(d + self.orientation.step()), self.dim(d)))
    }

    /// Degree whose differential lands in `d`.
    pub fn source_of(&self, d: i64) -> i64 {
        d - self.orientation.step()
    }

    fn check_squares_zero(&self) -> Result<()> {
        let step = self.orientation.step();
        for d in self.degrees() {
            let next = d + step;
            if let (Some(a), Some(b)) = (self.differential(d), self.differential(next)) {
                if !b.mul(a)?.is_zero() {
                    return Err(Error::CompositionNotZero(format!(" at degree {d}")));
                }
            }
        }
        Ok(())
    }

    /// Rank and invariant factors of every differential, in degree order.
    pub fn differential_invariants(&self) -> Vec<InvariantFactors> {
        self.differentials.par_iter().map(invariant_factors).collect()
    }

    /// Homology (or cohomology, per the orientation) in every degree.
    pub fn homology(&self) -> GradedAbGroup {
        let inv = self.differential_invariants();
        let empty = InvariantFactors::default();
        GradedAbGroup::from_components(self.degrees().map(|d| {
            let s = self.source_of(d);
            let incoming = if self.contains(s) { &inv[self.idx(s)] } else { &empty };
            let outgoing = inv[self.idx(d)].rank;
            (d, homology_from_invariants(self.dim(d), incoming, outgoing))
        }))
    }

    /// Homology in a single degree.
    pub fn homology_at(&self, d: i64) -> FgAbGroup {
        if !self.contains(d) {
            return FgAbGroup::trivial();
        }
        let out = invariant_factors(&self.differentials[self.idx(d)]).rank;
        let s = self.source_of(d);
        let incoming = if self.contains(s) {
            invariant_factors(&self.differentials[self.idx(s)])
        } else {
            InvariantFactors::default()
        };
        homology_from_invariants(self.dim(d), &incoming, out)
    }

    /// Same modules, transposed differentials, opposite orientation.
    pub fn dualize(&self) -> BoundedComplex {
        let new_orient = self.orientation.flipped();
        let differentials = self
            .degrees()
            .map(|d| {
                // In the dual, the map leaving d is the transpose of the one arriving at d.
                let s = self.source_of(d);
                match self.differential(s) {
                    Some(m) => m.transpose(),
                    None => IntegerMatrix::zeros(0, self.dim(d)),
                }
            })
            .collect();
        BoundedComplex {
            orientation: new_orient,
            min_deg: self.min_deg,
            basis: self.basis.clone(),
            differentials,
        }
    }

    /// Cohomological degree `k` becomes homological degree `-k`; homological
    /// complexes are returned unchanged.
    pub fn reindexed_homological(&self) -> BoundedComplex {
        if self.orientation == Orientation::Homological {
            return self.clone();
        }
        let mut basis = self.basis.clone();
        basis.reverse();
        let mut differentials = self.differentials.clone();
        differentials.reverse();
        BoundedComplex {
            orientation: Orientation::Homological,
            min_deg: -self.max_deg(),
            basis,
            differentials,
        }
    }

    /// Component in degree `d` moves to `d + k`. Differentials are kept as
    /// they are; homology shifts by `k`.
    pub fn shift(&self, k: i64) -> BoundedComplex {
        BoundedComplex {
            min_deg: self.min_deg + k,
            ..self.clone()
        }
    }

    /// Keeps degrees in `[lo, hi]`. Homology agrees with the original strictly
    /// inside the window.
    pub fn truncate(&self, lo: i64, hi: i64) -> BoundedComplex {
        let lo = lo.max(self.min_deg);
        let hi = hi.min(self.max_deg());
        if lo > hi {
            return BoundedComplex::zero(self.orientation);
        }
        let step = self.orientation.step();
        let basis = (lo..=hi).map(|d| self.basis[self.idx(d)].clone()).collect();
        let differentials = (lo..=hi)
            .map(|d| {
                let t = d + step;
                if t < lo || t > hi {
                    IntegerMatrix::zeros(0, self.dim(d))
                } else {
                    self.differentials[self.idx(d)].clone()
                }
            })
            .collect();
        BoundedComplex {
            orientation: self.orientation,
            min_deg: lo,
            basis,
            differentials,
        }
    }

    /// Degreewise direct sum; the first summand's basis comes first.
    pub fn direct_sum(a: &BoundedComplex, b: &BoundedComplex) -> Result<BoundedComplex> {
        if a.orientation != b.orientation {
            return Err(Error::OrientationMismatch);
        }
        if a.basis.is_empty() {
            return Ok(b.clone());
        }
        if b.basis.is_empty() {
            return Ok(a.clone());
        }
        let lo = a.min_deg.min(b.min_deg);
        let hi = a.max_deg().max(b.max_deg());
        let basis = (lo..=hi)
            .map(|d| concat_basis(a.basis(d), b.basis(d), a.dim(d), b.dim(d)))
            .collect();
        let differentials = (lo..=hi)
            .map(|d| IntegerMatrix::direct_sum(&a.differential_or_zero(d), &b.differential_or_zero(d)))
            .collect();
        Ok(BoundedComplex {
            orientation: a.orientation,
            min_deg: lo,
            basis,
            differentials,
        })
    }

    /// Tensor product; the second factor's differential carries the Koszul
    /// sign `(-1)^p` where `p` is the degree of the first factor.
    pub fn tensor(c: &BoundedComplex, d: &BoundedComplex) -> Result<BoundedComplex> {
        if c.orientation != d.orientation {
            return Err(Error::OrientationMismatch);
        }
        if c.basis.is_empty() || d.basis.is_empty() {
            return Ok(BoundedComplex::zero(c.orientation));
        }
        let step = c.orientation.step();
        let lo = c.min_deg + d.min_deg;
        let hi = c.max_deg() + d.max_deg();

        // Block layout of each total degree: (p, q, offset).
        let layout = |n: i64| -> (Vec<(i64, i64, usize)>, usize) {
            let mut blocks = Vec::new();
            let mut off = 0;
            for p in c.degrees() {
                let q = n - p;
                if d.contains(q) {
                    blocks.push((p, q, off));
                    off += c.dim(p) * d.dim(q);
                }
            }
            (blocks, off)
        };
        let layouts: Vec<_> = (lo..=hi).map(layout).collect();
        let offset_of = |n: i64, p: i64| -> Option<usize> {
            if n < lo || n > hi {
                return None;
            }
            layouts[(n - lo) as usize]
                .0
                .iter()
                .find(|(bp, _, _)| *bp == p)
                .map(|(_, _, o)| *o)
        };

        let labeled = c.basis.iter().all(Basis::is_labeled) && d.basis.iter().all(Basis::is_labeled);
        let mut basis = Vec::with_capacity(layouts.len());
        let mut differentials = Vec::with_capacity(layouts.len());
        for (ni, (blocks, total)) in layouts.iter().enumerate() {
            let n = lo + ni as i64;
            let t = n + step;
            let target_dim = if t >= lo && t <= hi {
                layouts[(t - lo) as usize].1
            } else {
                0
            };
            let mut trip: Vec<(usize, usize, BigInt)> = Vec::new();
            let mut labels = Vec::new();
            for &(p, q, off) in blocks {
                let (dp, dq) = (c.dim(p), d.dim(q));
                if labeled {
                    let cb = &c.basis[c.idx(p)];
                    let db = &d.basis[d.idx(q)];
                    for i in 0..dp {
                        for k in 0..dq {
                            labels.push(format!("{}⊗{}", cb.label(i), db.label(k)));
                        }
                    }
                }
                // d_C ⊗ 1
                if let Some(toff) = offset_of(t, p + step) {
                    let m = &c.differentials[c.idx(p)];
                    for r in 0..m.rows() {
                        for (j, v) in m.row(r) {
                            for k in 0..dq {
                                trip.push((toff + r * dq + k, off + j * dq + k, v.clone()));
                            }
                        }
                    }
                }
                // (-1)^p 1 ⊗ d_D
                if let Some(toff) = offset_of(t, p) {
                    let m = &d.differentials[d.idx(q)];
                    let tq = d.dim(q + step);
                    let neg = p.rem_euclid(2) == 1;
                    for r in 0..m.rows() {
                        for (k, v) in m.row(r) {
                            let v = if neg { -v } else { v.clone() };
                            for j in 0..dp {
                                trip.push((toff + j * tq + r, off + j * dq + k, v.clone()));
                            }
                        }
                    }
                }
            }
            basis.push(if labeled {
                Basis::Labeled(labels)
            } else {
                Basis::Anonymous(*total)
            });
            differentials.push(IntegerMatrix::from_triplets(target_dim, *total, trip)?);
        }
        BoundedComplex::new_unchecked(c.orientation, lo, basis, differentials)
    }

    /// Mapping cone of `f: C → D`. Degree `n` holds `C_{n+s} ⊕ D_n` with `s = -1`
    /// for homological and `s = +1` for cohomological orientation; the
    /// differential is `(c, e) ↦ (d_C c, f c - d_D e)`.
    pub fn cone(f: &ChainMap) -> Result<BoundedComplex> {
        let c = f.source();
        let d = f.target();
        let step = c.orientation.step();
        // C_{n+s} sits in cone degree n, i.e. C shifted by -s.
        let cs = c.shift(-step);
        let lo_candidates = [cs.min_deg, d.min_deg];
        let hi_candidates = [cs.max_deg(), d.max_deg()];
        let (lo, hi) = match (c.basis.is_empty(), d.basis.is_empty()) {
            (true, true) => return Ok(BoundedComplex::zero(c.orientation)),
            (true, false) => (d.min_deg, d.max_deg()),
            (false, true) => (cs.min_deg, cs.max_deg()),
            (false, false) => (
                *lo_candidates.iter().min().unwrap(),
                *hi_candidates.iter().max().unwrap(),
            ),
        };
        let basis = (lo..=hi)
            .map(|n| concat_basis(cs.basis(n), d.basis(n), cs.dim(n), d.dim(n)))
            .collect();
        let differentials = (lo..=hi)
            .map(|n| {
                let dc = cs.differential_or_zero(n);
                let dd = d.differential_or_zero(n);
                // f from C_{n+s} (cone degree n) to D_{n+s} (cone degree n + step).
                let fm = f.component_or_zero(n + step);
                IntegerMatrix::block(
                    &dc,
                    &IntegerMatrix::zeros(dc.rows(), dd.cols()),
                    &fm,
                    &dd.scale(&BigInt::from(-1)),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        BoundedComplex::new_unchecked(c.orientation, lo, basis, differentials)
    }

    /// Homotopy fiber of `f`: the cone moved one step against the differential,
    /// so that `Fib → C → D` is the start of the long exact sequence.
    pub fn fiber(f: &ChainMap) -> Result<BoundedComplex> {
        let cone = Self::cone(f)?;
        Ok(cone.shift(cone.orientation.step()))
    }

    /// Homotopy pullback of `A → C ← B`, as the fiber of `a - b: A ⊕ B → C`.
    pub fn homotopy_pullback(a: &ChainMap, b: &ChainMap) -> Result<BoundedComplex> {
        let diff = ChainMap::difference(a, b)?;
        Self::fiber(&diff)
    }

    /// Total rank of all modules.
    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(Basis::len).sum()
    }
}

fn concat_basis(a: Option<&Basis>, b: Option<&Basis>, da: usize, db: usize) -> Basis {
    let la = a.is_none_or(Basis::is_labeled);
    let lb = b.is_none_or(Basis::is_labeled);
    if la && lb {
        let mut v = a.map(Basis::labels).unwrap_or_default();
        v.extend(b.map(Basis::labels).unwrap_or_default());
        Basis::Labeled(v)
    } else {
        Basis::Anonymous(da + db)
    }
}

impl fmt::Debug for BoundedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundedComplex")
            .field("orientation", &self.orientation)
            .field("min_deg", &self.min_deg)
            .field("dims", &self.dims())
            .field("differentials", &self.differentials)
            .finish()
    }
}
