//! Explicit complexes whose (co)homology computes Ext groups.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::algebra::{normalize_row, GradedAbGroup, IntegerMatrix, SparseRow};
use crate::combinatorics::{binomial, compositions, surjection_index, surjections};
use crate::complex::{Basis, BoundedComplex, ChainMap, Orientation};
use crate::error::{Error, Result};
use crate::groupcoh::{homotopy_fixed_points, FiniteGroup, GModule};

/// How a model's (co)homology is read off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Readout {
    /// (Co)homology of the complex as stored.
    Homology,
    /// Cohomology of the integral dual.
    DualCohomology,
}

/// Affine, bijective regrading `ext = sign · internal + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grading {
    pub reflect: bool,
    pub offset: i64,
}

impl Grading {
    pub fn identity() -> Self {
        Grading {
            reflect: false,
            offset: 0,
        }
    }

    pub fn to_ext(&self, d: i64) -> i64 {
        if self.reflect {
            self.offset - d
        } else {
            d + self.offset
        }
    }
}

/// A complex together with the recipe that turns its homology into Ext.
#[derive(Clone, Debug)]
pub struct ChainLevelModel {
    pub complex: BoundedComplex,
    pub grading: Grading,
    pub readout: Readout,
    /// Highest Ext degree in which the answer is exact (`None`: all degrees).
    pub valid_through: Option<i64>,
    pub provenance: &'static str,
}

impl ChainLevelModel {
    /// The Ext groups this model computes.
    pub fn evaluate(&self) -> GradedAbGroup {
        let h = match self.readout {
            Readout::Homology => self.complex.homology(),
            Readout::DualCohomology => self.complex.dualize().homology(),
        };
        let out = GradedAbGroup::from_components(h.iter().map(|(d, g)| (self.grading.to_ext(d), g.clone())));
        match self.valid_through {
            Some(b) => out.truncate_above(b),
            None => out,
        }
    }
}

/// Chains `1 ≤ n_0 < … < n_k = n` in lexicographic order.
fn chains(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k + 1);
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut c = cur.clone();
            c.push(n);
            out.push(c);
            return;
        }
        for v in start..n {
            if n - v < left {
                break;
            }
            cur.push(v);
            rec(v + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

fn chain_label(c: &[usize]) -> String {
    let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Coinvariant cochain complex whose cohomology is `Ext^*(ab, S^n∘ab)`.
///
/// Degree `k` has a basis of chains `1 ≤ n_0 < … < n_k = n`. The coboundary
/// sends a chain to every refinement obtained by inserting `n'` at position
/// `j` (so `n_{j-1} < n' < n_j`, with `n_{-1} = 0`), with coefficient
/// `(-1)^j · C(n_j - n_{j-1}, n' - n_{j-1})`.
pub fn symmetric_power_complex(n: usize) -> Result<BoundedComplex> {
    if n < 1 {
        return Err(Error::InvalidParameter("symmetric_power_complex needs n ≥ 1".into()));
    }
    let bases: Vec<Vec<Vec<usize>>> = (0..n).map(|k| chains(n, k)).collect();
    let index: Vec<BTreeMap<&[usize], usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect())
        .collect();
    let mut differentials = Vec::with_capacity(n);
    for k in 0..n {
        if k + 1 == n {
            differentials.push(IntegerMatrix::zeros(0, bases[k].len()));
            continue;
        }
        let mut trip = Vec::new();
        for (col, c) in bases[k].iter().enumerate() {
            let mut prev = 0;
            for (j, &nj) in c.iter().enumerate() {
                for ins in prev + 1..nj {
                    let mut refined = c.clone();
                    refined.insert(j, ins);
                    let row = index[k + 1][refined.as_slice()];
                    let mut v = BigInt::from(binomial(nj - prev, ins - prev));
                    if j % 2 == 1 {
                        v = -v;
                    }
                    trip.push((row, col, v));
                }
                prev = nj;
            }
        }
        differentials.push(IntegerMatrix::from_triplets(bases[k + 1].len(), bases[k].len(), trip)?);
    }
    let basis = bases
        .iter()
        .map(|b| Basis::Labeled(b.iter().map(|c| chain_label(c)).collect()))
        .collect();
    BoundedComplex::new(Orientation::Cohomological, 0, basis, differentials)
}

/// Normalized chains on the smash power of the simplicial circle, restricted
/// to at most `m` distinct coordinates. Degree `k` has basis `sur(n, k)` and
/// `∂ = Σ_{i=1}^{k-1} (-1)^i merge_i`; the outer faces hit the basepoint.
/// `Ext^*(Pa_m, T^n∘ab) = H_{n-*}`.
pub fn surjection_complex(n: usize, m: usize) -> Result<ChainLevelModel> {
    if n < 1 {
        return Err(Error::InvalidParameter("surjection_complex needs n ≥ 1".into()));
    }
    let top = m.min(n);
    let grading = Grading {
        reflect: true,
        offset: n as i64,
    };
    if top == 0 {
        return Ok(ChainLevelModel {
            complex: BoundedComplex::zero(Orientation::Homological),
            grading,
            readout: Readout::Homology,
            valid_through: None,
            provenance: "reduced chains of the at-most-m-distinct locus in the n-fold smash of S^1",
        });
    }
    let mut basis = Vec::with_capacity(top);
    let mut differentials = Vec::with_capacity(top);
    for k in 1..=top {
        let src = surjections(n, k);
        basis.push(Basis::Labeled(src.iter().map(ToString::to_string).collect()));
        if k == 1 {
            differentials.push(IntegerMatrix::zeros(0, src.len()));
            continue;
        }
        let target = surjection_index(n, k - 1);
        let mut trip = Vec::new();
        for (col, a) in src.iter().enumerate() {
            for i in 1..k {
                let b = a.merge(i)?;
                let v = if i % 2 == 0 { 1 } else { -1 };
                trip.push((target[b.values()], col, BigInt::from(v)));
            }
        }
        differentials.push(IntegerMatrix::from_triplets(target.len(), src.len(), trip)?);
    }
    Ok(ChainLevelModel {
        complex: BoundedComplex::new(Orientation::Homological, 1, basis, differentials)?,
        grading,
        readout: Readout::Homology,
        valid_through: None,
        provenance: "reduced chains of the at-most-m-distinct locus in the n-fold smash of S^1",
    })
}

/// Reduced cellular chains of `R̄_n`: one cell in each dimension `0..n-1`,
/// with boundary `1` out of odd dimensions and `0` out of even ones.
/// `Ext^*(ab, Pa_n)` is the cohomology of the dual.
pub fn rbar_complex(n: usize) -> Result<ChainLevelModel> {
    if n < 1 {
        return Err(Error::InvalidParameter("rbar_complex needs n ≥ 1".into()));
    }
    let differentials = (0..n)
        .map(|j| {
            if j == 0 {
                IntegerMatrix::zeros(0, 1)
            } else if j % 2 == 1 {
                IntegerMatrix::identity(1)
            } else {
                IntegerMatrix::zeros(1, 1)
            }
        })
        .collect();
    let basis = (0..n).map(|j| Basis::Labeled(vec![format!("e{j}")])).collect();
    Ok(ChainLevelModel {
        complex: BoundedComplex::new(Orientation::Homological, 0, basis, differentials)?,
        grading: Grading::identity(),
        readout: Readout::DualCohomology,
        valid_through: None,
        provenance: "cellular chains of the R_n cell structure",
    })
}

/// One tensor product of symmetric-power complexes per composition of `n`
/// into `m` parts; their cohomologies sum to `Ext^*(T^m∘ab, S^n∘ab)`.
pub fn tensor_symmetric_complex(m: usize, n: usize) -> Result<Vec<BoundedComplex>> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameter("tensor_symmetric_complex needs m, n ≥ 1".into()));
    }
    let factors: Vec<BoundedComplex> = (1..=n).map(symmetric_power_complex).collect::<Result<_>>()?;
    compositions(n, m)
        .par_iter()
        .map(|c| {
            let mut parts = c.parts().iter();
            let first = factors[parts.next().expect("m ≥ 1") - 1].clone();
            parts.try_fold(first, |acc, &p| BoundedComplex::tensor(&acc, &factors[p - 1]))
        })
        .collect()
}

/// `Ext^*(T^m∘ab, S^n∘ab)` from [`tensor_symmetric_complex`].
pub fn tensor_symmetric_ext(m: usize, n: usize) -> Result<GradedAbGroup> {
    let parts = tensor_symmetric_complex(m, n)?;
    let hs: Vec<GradedAbGroup> = parts.par_iter().map(BoundedComplex::homology).collect();
    Ok(GradedAbGroup::direct_sum(hs.iter()))
}

/// `Z[Comp(n, 2)]` with `Σ_2` swapping the two parts.
pub fn composition_swap_module(n: usize) -> GModule {
    let s2 = FiniteGroup::symmetric(2);
    let size = n.saturating_sub(1);
    // Composition (a, n - a) has index a - 1; the swap sends it to n - a - 1.
    GModule::permutation(&s2, size, |g, x| if g == 0 { x } else { size - 1 - x })
        .expect("swap is an action")
}

/// Bar total complex with the augmentation `Z[X] → Z` applied pointwise.
fn augmentation_map(a: &BoundedComplex, c: &BoundedComplex, points: usize) -> Result<ChainMap> {
    let mut comps = BTreeMap::new();
    for d in a.degrees() {
        let rows = c.dim(d);
        let cols = a.dim(d);
        // Degree d of A is Maps(Ḡ^d, Z^points), tuple index major.
        let data: Vec<SparseRow> = (0..rows)
            .map(|t| {
                let mut r: SparseRow = (0..points).map(|x| (t * points + x, BigInt::one())).collect();
                normalize_row(&mut r);
                r
            })
            .collect();
        comps.insert(d, IntegerMatrix::from_sparse_rows(rows, cols, data));
    }
    ChainMap::new(a.clone(), c.clone(), comps)
}

/// Homotopy pullback computing `Ext^*(Λ^2∘ab, Λ^n∘ab)` through Ext degree `d`.
///
/// The square is `Z[Comp(n,2)]^{hΣ_2} → Maps(RP^∞_+, Z) ← Z`, the left map
/// induced by the augmentation and the right one the constant inclusion.
/// Cohomological degree `k` of the pullback is Ext degree `k + n - 2`.
pub fn lambda2_pullback_complex(n: usize, d: i64) -> Result<ChainLevelModel> {
    if n < 1 {
        return Err(Error::InvalidParameter("lambda2_pullback_complex needs n ≥ 1".into()));
    }
    if d < 0 {
        return Err(Error::InvalidParameter("degree bound must be non-negative".into()));
    }
    let shift = n as i64 - 2;
    // Pullback cohomology is exact in degrees ≤ bar_top - 1.
    let bar_top = (d - shift + 1).max(1);
    let s2 = FiniteGroup::symmetric(2);
    let module = composition_swap_module(n);
    let a = homotopy_fixed_points(&module.as_complex(), bar_top);
    let c = homotopy_fixed_points(&GModule::trivial(&s2, 1).as_complex(), bar_top);
    let b = BoundedComplex::concentrated(Orientation::Cohomological, 0, 1);
    let fa = augmentation_map(&a, &c, module.rank())?;
    let fb = ChainMap::new(b, c.clone(), BTreeMap::from([(0, IntegerMatrix::identity(1))]))?;
    let p = BoundedComplex::homotopy_pullback(&fa, &fb)?;
    Ok(ChainLevelModel {
        complex: p.truncate(p.min_deg(), bar_top),
        grading: Grading {
            reflect: false,
            offset: shift,
        },
        readout: Readout::Homology,
        valid_through: Some(d.min(bar_top - 1 + shift)),
        provenance: "homotopy pullback of Σ_2 fixed points of the second cross-effect",
    })
}
