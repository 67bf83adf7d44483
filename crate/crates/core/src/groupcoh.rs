//! Cohomology of small finite groups through the normalized bar complex.
//!
//! Cochains in degree `p` with values in a module `M` are functions from
//! `p`-tuples of non-identity elements to `M`. A tuple `(g_1, …, g_p)` is
//! encoded in base `|G| - 1` with `g_1` as the most significant digit, and
//! the module coordinate varies fastest. The coboundary is
//!
//! ```text
//! (δf)(g_1..g_{p+1}) = g_1·f(g_2..g_{p+1})
//!                    + Σ_{i=1}^{p} (-1)^i f(.., g_i g_{i+1}, ..)
//!                    + (-1)^{p+1} f(g_1..g_p)
//! ```
//!
//! where terms whose argument contains the identity vanish.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::algebra::{normalize_row, FgAbGroup, GradedAbGroup, IntegerMatrix, SparseRow, Truncation};
use crate::complex::{Basis, BoundedComplex, ChainMap, Orientation};
use crate::error::{Error, Result};

/// A finite group given by its multiplication table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    labels: Vec<String>,
    /// Points moved, for permutation groups.
    permutations: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Verifies closure, identity at index 0, inverses and associativity.
    pub fn new(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table is not square over its elements".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row[0] != a || table[0][a] != a {
                return Err(Error::NotAGroup("element 0 is not the identity".into()));
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(Error::NotAGroup(format!("{} has no inverse", labels[a]))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails for ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            table,
            inverse,
            labels,
            permutations: None,
        })
    }

    pub fn trivial() -> Self {
        Self::symmetric(1)
    }

    /// `Σ_n` acting on `{1..n}`, elements in lexicographic order of their
    /// one-line notation (so the identity comes first). Products compose
    /// right to left: `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index: BTreeMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                        index[&st]
                    })
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        let mut g = FiniteGroup::new(table, labels).expect("symmetric group table is a group");
        g.permutations = Some(perms);
        g
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group of order 0".into()));
        }
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|a| format!("g^{a}")).collect();
        FiniteGroup::new(table, labels)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// One-line notation (0-based images) for permutation groups.
    pub fn permutation(&self, a: usize) -> Option<&[usize]> {
        self.permutations.as_ref().map(|p| p[a].as_slice())
    }

    /// Index of the permutation with the given 0-based one-line notation.
    pub fn find_permutation(&self, images: &[usize]) -> Option<usize> {
        self.permutations.as_ref()?.iter().position(|p| p == images)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cyc.push((i + 1).to_string());
            i = p[i];
        }
        s.push_str(&format!("({})", cyc.join(" ")));
    }
    if s.is_empty() {
        "()".into()
    } else {
        s
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A free abelian group of finite rank with a left action: `ρ(gh) = ρ(g)ρ(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    group: FiniteGroup,
    rank: usize,
    action: Vec<IntegerMatrix>,
}

impl GModule {
    pub fn new(group: FiniteGroup, rank: usize, action: Vec<IntegerMatrix>) -> Result<Self> {
        let n = group.order();
        if action.len() != n || action.iter().any(|m| m.shape() != (rank, rank)) {
            return Err(Error::NotAnAction("one rank x rank matrix per element is required".into()));
        }
        if action[0] != IntegerMatrix::identity(rank) {
            return Err(Error::NotAnAction("identity acts nontrivially".into()));
        }
        for g in 0..n {
            for h in 0..n {
                if action[g].mul(&action[h])? != action[group.mul(g, h)] {
                    return Err(Error::NotAnAction(format!(
                        "ρ({})ρ({}) ≠ ρ({})",
                        group.label(g),
                        group.label(h),
                        group.label(group.mul(g, h))
                    )));
                }
            }
        }
        Ok(GModule { group, rank, action })
    }

    /// `Z^rank` with trivial action.
    pub fn trivial(group: &FiniteGroup, rank: usize) -> Self {
        GModule {
            group: group.clone(),
            rank,
            action: vec![IntegerMatrix::identity(rank); group.order()],
        }
    }

    /// `Z` on which permutations act by their sign.
    pub fn sign(group: &FiniteGroup) -> Result<Self> {
        let Some(perms) = &group.permutations else {
            return Err(Error::InvalidParameter("the sign module needs a permutation group".into()));
        };
        let action = perms
            .iter()
            .map(|p| IntegerMatrix::from_rows(&[vec![permutation_sign(p)]]))
            .collect();
        Ok(GModule {
            group: group.clone(),
            rank: 1,
            action,
        })
    }

    /// Permutation module `Z[X]` for an action on `{0..size-1}`.
    pub fn permutation<F>(group: &FiniteGroup, size: usize, act: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize,
    {
        let action = (0..group.order())
            .map(|g| {
                IntegerMatrix::from_triplets(size, size, (0..size).map(|x| (act(g, x), x, BigInt::one())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group.clone(), size, action)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self, g: usize) -> &IntegerMatrix {
        &self.action[g]
    }

    /// The module as a complex concentrated in degree 0 with its action.
    pub fn as_complex(&self) -> GComplex {
        GComplex {
            group: self.group.clone(),
            complex: BoundedComplex::concentrated(Orientation::Cohomological, 0, self.rank),
            action: self.action.iter().map(|m| vec![m.clone()]).collect(),
        }
    }
}

/// A cochain complex with a group acting by chain automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GComplex {
    group: FiniteGroup,
    complex: BoundedComplex,
    /// `action[g][d - min_deg]`
    action: Vec<Vec<IntegerMatrix>>,
}

impl GComplex {
    /// Verifies that the matrices define an action by chain maps.
    pub fn new(group: FiniteGroup, complex: BoundedComplex, action: Vec<Vec<IntegerMatrix>>) -> Result<Self> {
        if complex.orientation() != Orientation::Cohomological {
            return Err(Error::InvalidParameter("group actions are taken on cochain complexes".into()));
        }
        let n = group.order();
        let degs: Vec<i64> = complex.degrees().collect();
        if action.len() != n || action.iter().any(|a| a.len() != degs.len()) {
            return Err(Error::NotAnAction("one matrix per element and degree is required".into()));
        }
        for (k, &d) in degs.iter().enumerate() {
            let dim = complex.dim(d);
            for (g, per_degree) in action.iter().enumerate() {
                if per_degree[k].shape() != (dim, dim) {
                    return Err(Error::NotAnAction(format!("matrix of {} in degree {d} has the wrong shape", group.label(g))));
                }
            }
            if action[0][k] != IntegerMatrix::identity(dim) {
                return Err(Error::NotAnAction(format!("identity acts nontrivially in degree {d}")));
            }
            for g in 0..n {
                for h in 0..n {
                    let gh = group.mul(g, h);
                    if action[g][k].mul(&action[h][k])? != action[gh][k] {
                        return Err(Error::NotAnAction(format!(
                            "ρ({})ρ({}) ≠ ρ({}) in degree {d}",
                            group.label(g),
                            group.label(h),
                            group.label(gh)
                        )));
                    }
                }
                let comps = degs
                    .iter()
                    .enumerate()
                    .map(|(j, &e)| (e, action[g][j].clone()))
                    .collect();
                if let Err(Error::NotAChainMap { degree }) = ChainMap::new(complex.clone(), complex.clone(), comps) {
                    return Err(Error::NotAnAction(format!(
                        "{} does not commute with the differential at degree {degree}",
                        group.label(g)
                    )));
                }
            }
        }
        Ok(GComplex { group, complex, action })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn complex(&self) -> &BoundedComplex {
        &self.complex
    }
}

/// Tuples of non-identity elements in base `|G| - 1`.
struct TupleCodec {
    base: usize,
}

impl TupleCodec {
    fn count(&self, len: usize) -> usize {
        self.base.pow(len as u32)
    }

    fn decode(&self, mut idx: usize, len: usize, out: &mut Vec<usize>) {
        out.clear();
        out.resize(len, 0);
        for slot in out.iter_mut().rev() {
            *slot = idx % self.base + 1;
            idx /= self.base;
        }
    }

    fn encode(&self, elems: impl Iterator<Item = usize>) -> usize {
        elems.fold(0, |acc, g| acc * self.base + (g - 1))
    }
}

/// Total complex of `Maps(Ḡ^p, C^q)` with differential `δ_bar + (-1)^p d_C`,
/// keeping total degrees `≤ top`.
fn bar_total_complex(gc: &GComplex, top: i64) -> BoundedComplex {
    let g = &gc.group;
    let c = &gc.complex;
    let codec = TupleCodec { base: g.order() - 1 };
    let qmin = c.min_deg();
    let qmax = c.max_deg();
    if c.degrees().count() == 0 || top < qmin {
        return BoundedComplex::zero(Orientation::Cohomological);
    }
    let max_p = |n: i64| -> i64 {
        if codec.base == 0 {
            0
        } else {
            n - qmin
        }
    };
    // Blocks of total degree n: (p, q, offset, size).
    let layout = |n: i64| -> (Vec<(usize, i64, usize, usize)>, usize) {
        let mut blocks = Vec::new();
        let mut off = 0;
        for p in 0..=max_p(n) {
            let q = n - p;
            if q < qmin || q > qmax {
                continue;
            }
            let size = codec.count(p as usize) * c.dim(q);
            blocks.push((p as usize, q, off, size));
            off += size;
        }
        (blocks, off)
    };
    let layouts: Vec<_> = (qmin..=top).map(layout).collect();
    let block_offset = |n: i64, p: usize| -> Option<usize> {
        if n < qmin || n > top {
            return None;
        }
        layouts[(n - qmin) as usize]
            .0
            .iter()
            .find(|b| b.0 == p)
            .map(|b| b.2)
    };
    let action_at = |h: usize, q: i64| -> &IntegerMatrix { &gc.action[h][(q - qmin) as usize] };

    let mut differentials = Vec::with_capacity(layouts.len());
    for (ni, (_, src_total)) in layouts.iter().enumerate() {
        let n = qmin + ni as i64;
        let t = n + 1;
        if t > top {
            differentials.push(IntegerMatrix::zeros(0, *src_total));
            continue;
        }
        let (tblocks, ttotal) = &layouts[(t - qmin) as usize];
        let mut rows: Vec<SparseRow> = Vec::with_capacity(*ttotal);
        for &(p, q, _, size) in tblocks {
            let dim_q = c.dim(q);
            let bar_src = if p >= 1 { block_offset(n, p - 1) } else { None };
            let dc_src = block_offset(n, p);
            let dc = c.differential(q - 1);
            let sign_dc = if p % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let block_rows: Vec<SparseRow> = (0..size)
                .into_par_iter()
                .map_init(Vec::new, |tuple, r| {
                    let (ti, a) = (r / dim_q.max(1), r % dim_q.max(1));
                    codec.decode(ti, p, tuple);
                    let mut row: SparseRow = Vec::new();
                    if let Some(off) = bar_src {
                        // Coboundary of a (p-1)-cochain evaluated on a p-tuple.
                        let k = p - 1;
                        let first = codec.encode(tuple[1..].iter().copied());
                        for (b, v) in action_at(tuple[0], q).row(a) {
                            row.push((off + first * dim_q + b, v.clone()));
                        }
                        for i in 1..=k {
                            let prod = g.mul(tuple[i - 1], tuple[i]);
                            if prod == 0 {
                                continue;
                            }
                            let merged = codec.encode(
                                tuple[..i - 1]
                                    .iter()
                                    .copied()
                                    .chain(std::iter::once(prod))
                                    .chain(tuple[i + 1..].iter().copied()),
                            );
                            let v = if i % 2 == 0 { 1 } else { -1 };
                            row.push((off + merged * dim_q + a, BigInt::from(v)));
                        }
                        let last = codec.encode(tuple[..k].iter().copied());
                        let v = if (k + 1) % 2 == 0 { 1 } else { -1 };
                        row.push((off + last * dim_q + a, BigInt::from(v)));
                    }
                    if let (Some(off), Some(m)) = (dc_src, dc) {
                        let dim_prev = c.dim(q - 1);
                        for (b, v) in m.row(a) {
                            row.push((off + ti * dim_prev + b, v * &sign_dc));
                        }
                    }
                    normalize_row(&mut row);
                    row
                })
                .collect();
            rows.extend(block_rows);
        }
        differentials.push(IntegerMatrix::from_sparse_rows(*ttotal, *src_total, rows));
    }
    let basis = layouts.iter().map(|(_, total)| Basis::Anonymous(*total)).collect();
    BoundedComplex::new_unchecked(Orientation::Cohomological, qmin, basis, differentials)
        .expect("bar total complex shapes are consistent")
}

/// Normalized bar cochain complex of `M`, degrees `0..=d`.
pub fn bar_cochain_complex(m: &GModule, d: usize) -> BoundedComplex {
    bar_total_complex(&m.as_complex(), d as i64)
}

/// Homotopy fixed points `C^{hG}`: the bar total complex, in total degrees `≤ d`.
/// Its cohomology is exact in degrees `< d`.
pub fn homotopy_fixed_points(gc: &GComplex, d: i64) -> BoundedComplex {
    bar_total_complex(gc, d)
}

/// Cohomology of a cochain complex that was cut off at its top degree,
/// assuming the top-degree group is torsion: the torsion of the cokernel of
/// the incoming map equals the torsion of the true cohomology there, since
/// kernels are saturated.
fn cohomology_torsion_top(c: &BoundedComplex) -> GradedAbGroup {
    let top = c.max_deg();
    let full = c.homology();
    let mut h = GradedAbGroup::from_components(full.iter().filter(|(d, _)| *d < top).map(|(d, g)| (d, g.clone())));
    h.add_component(top, &FgAbGroup::new(0, full.get(top).torsion().iter().cloned()));
    h.with_truncation(Truncation::TruncatedAbove(top))
}

/// `H^k(G; M)` for `k ≤ d`.
///
/// For `k ≥ 1` these groups are killed by `|G|`, so the top degree is read
/// from the cokernel torsion and the complex never has to be built one
/// degree further.
pub fn group_cohomology(m: &GModule, d: usize) -> GradedAbGroup {
    if d == 0 {
        let c = bar_cochain_complex(m, 1);
        return GradedAbGroup::concentrated(0, c.homology_at(0)).with_truncation(Truncation::TruncatedAbove(0));
    }
    cohomology_torsion_top(&bar_cochain_complex(m, d))
}

/// Reduced bar cochains of `BG` with integer coefficients: degree 0 dropped.
fn reduced_bar(g: &FiniteGroup, d: usize) -> BoundedComplex {
    let c = bar_cochain_complex(&GModule::trivial(g, 1), d);
    c.truncate(1, d as i64)
}

/// `H̃^*(BΣ_3/BΣ_2)` for degrees `≤ d`, where `Σ_2 ⊂ Σ_3` is generated by `(1 2)`.
///
/// Computed as the fiber of the restriction map of reduced bar complexes.
pub fn bsigma3_mod_bsigma2(d: usize) -> GradedAbGroup {
    if d == 0 {
        return GradedAbGroup::trivial().with_truncation(Truncation::TruncatedAbove(0));
    }
    let s3 = FiniteGroup::symmetric(3);
    let s2 = FiniteGroup::symmetric(2);
    let tau = s3.find_permutation(&[1, 0, 2]).expect("(1 2) is in Σ_3");
    let x = reduced_bar(&s3, d);
    let a = reduced_bar(&s2, d);
    let codec = TupleCodec { base: s3.order() - 1 };
    let comps = (1..=d as i64)
        .map(|k| {
            // Restriction evaluates a cochain on the single tuple (τ, …, τ).
            let col = codec.encode(std::iter::repeat_n(tau, k as usize));
            let m = IntegerMatrix::from_triplets(1, x.dim(k), [(0, col, BigInt::one())])
                .expect("restriction index in range");
            (k, m)
        })
        .collect();
    let res = ChainMap::new(x, a, comps).expect("restriction is a cochain map");
    let fib = BoundedComplex::fiber(&res).expect("fiber of a cochain map");
    cohomology_torsion_top(&fib.truncate(0, d as i64))
}

/// `H̃^*(RP^∞; Z)` for degrees `≤ d`: `Z/2` in every positive even degree.
pub fn rp_infinity_reduced_cohomology(d: usize) -> GradedAbGroup {
    GradedAbGroup::from_components((2..=d as i64).step_by(2).map(|k| (k, FgAbGroup::cyclic(2))))
        .with_truncation(Truncation::TruncatedAbove(d as i64))
}

/// Closed form of [`bsigma3_mod_bsigma2`]: `Z/3` in every positive degree
/// divisible by 4. This is the 3-primary part of `H^*(Σ_3; Z)`, which the
/// restriction to `Σ_2` kills while the 2-primary part maps isomorphically.
pub fn bsigma3_mod_bsigma2_closed(d: usize) -> GradedAbGroup {
    GradedAbGroup::from_components((4..=d as i64).step_by(4).map(|k| (k, FgAbGroup::cyclic(3))))
        .with_truncation(Truncation::TruncatedAbove(d as i64))
}

/// The same groups computed from the bar complex of `Σ_2`.
pub fn rp_infinity_reduced_cohomology_bar(d: usize) -> GradedAbGroup {
    let s2 = FiniteGroup::symmetric(2);
    group_cohomology(&GModule::trivial(&s2, 1), d)
        .restrict_below(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: u64) -> FgAbGroup {
        FgAbGroup::cyclic(k)
    }

    #[test]
    fn symmetric_groups() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.label(0), "()");
        let tau = s3.find_permutation(&[1, 0, 2]).unwrap();
        assert_eq!(s3.label(tau), "(1 2)");
        assert_eq!(s3.mul(tau, tau), 0);
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 1]], vec!["e".into(), "a".into()]).is_err());
    }

    #[test]
    fn sigma2_period_two() {
        let s2 = FiniteGroup::symmetric(2);
        let h = group_cohomology(&GModule::trivial(&s2, 1), 8);
        let expected = GradedAbGroup::from_components(
            [(0, FgAbGroup::free(1))]
                .into_iter()
                .chain((2..=8).step_by(2).map(|k| (k, z(2)))),
        );
        assert!(h.same_groups(&expected), "{h}");
        assert_eq!(h.truncation(), Truncation::TruncatedAbove(8));
    }

    #[test]
    fn sigma3_low_degrees() {
        let s3 = FiniteGroup::symmetric(3);
        let h = group_cohomology(&GModule::trivial(&s3, 1), 4);
        let expected = GradedAbGroup::from_components([(0, FgAbGroup::free(1)), (2, z(2)), (4, z(6))]);
        assert!(h.same_groups(&expected), "{h}");
    }

    #[test]
    fn sign_coefficients_of_sigma2() {
        // H^*(Σ_2; Z^-) is Z/2 in odd degrees.
        let s2 = FiniteGroup::symmetric(2);
        let h = group_cohomology(&GModule::sign(&s2).unwrap(), 5);
        let expected = GradedAbGroup::from_components([(1, z(2)), (3, z(2)), (5, z(2))]);
        assert!(h.same_groups(&expected), "{h}");
    }

    #[test]
    fn free_orbit_fixed_points() {
        let s2 = FiniteGroup::symmetric(2);
        let m = GModule::permutation(&s2, 2, |g, x| if g == 0 { x } else { 1 - x }).unwrap();
        let c = homotopy_fixed_points(&m.as_complex(), 7);
        let h = c.homology();
        assert!(h.agrees_up_to(&GradedAbGroup::concentrated(0, FgAbGroup::free(1)), 6), "{h}");
    }

    #[test]
    fn trivial_group_fixed_points_are_the_complex() {
        let g = FiniteGroup::trivial();
        let c = BoundedComplex::two_term(Orientation::Cohomological, 0, IntegerMatrix::from_rows(&[vec![2]])).unwrap();
        let gc = GComplex::new(g, c.clone(), vec![vec![IntegerMatrix::identity(1); 2]]).unwrap();
        assert_eq!(homotopy_fixed_points(&gc, 5).homology(), c.homology());
    }

    #[test]
    fn invalid_action_is_rejected() {
        let s2 = FiniteGroup::symmetric(2);
        let bad = GModule::new(s2.clone(), 1, vec![IntegerMatrix::identity(1), IntegerMatrix::from_rows(&[vec![2]])]);
        assert!(matches!(bad, Err(Error::NotAnAction(_))));
        let c = BoundedComplex::two_term(Orientation::Cohomological, 0, IntegerMatrix::from_rows(&[vec![2]])).unwrap();
        let swap_sign = vec![
            vec![IntegerMatrix::identity(1); 2],
            vec![IntegerMatrix::from_rows(&[vec![-1]]), IntegerMatrix::identity(1)],
        ];
        assert!(matches!(GComplex::new(s2, c, swap_sign), Err(Error::NotAnAction(_))));
    }

    #[test]
    fn cofiber_is_three_torsion() {
        let h = bsigma3_mod_bsigma2(6);
        let expected = GradedAbGroup::concentrated(4, z(3));
        assert!(h.same_groups(&expected), "{h}");
        assert!(h.same_groups(&bsigma3_mod_bsigma2_closed(6)));
    }

    #[test]
    fn rp_infinity_paths_agree() {
        assert!(rp_infinity_reduced_cohomology(9).same_groups(&rp_infinity_reduced_cohomology_bar(9)));
        assert_eq!(rp_infinity_reduced_cohomology(1).get(1), FgAbGroup::trivial());
    }
}
