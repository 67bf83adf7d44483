//! Smith normal form over the integers.
//!
//! Two entry points share the same elementary operations:
//!
//! * [`smith_normal_form`] works on a dense copy and tracks the unimodular
//!   transforms, so `U·M·V = S` can be checked exactly.
//! * [`invariant_factors`] only needs the diagonal. It first eliminates unit
//!   pivots directly on the sparse rows (boundary matrices are mostly
//!   `±1`), then finishes the small dense core with the dense reduction.
//!
//! Pivots are always chosen with minimal absolute value to limit entry growth.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntegerMatrix, SparseRow};

/// Result of [`smith_normal_form`]: `u · m · v = s`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub s: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    /// Inverse of `v`, kept so that vectors can be rewritten in the new
    /// column basis without a separate inversion.
    pub v_inv: IntegerMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries `s_1 | s_2 | ... | s_rank`, all positive.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s.get(i, i)).collect()
    }
}

/// Rank and non-unit invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InvariantFactors {
    pub rank: usize,
    /// Invariant factors `> 1`, in divisibility order.
    pub torsion: Vec<BigUint>,
}

struct Dense {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    // Transform tracking is optional; the invariant-factor path skips it.
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
    v_inv: Option<Vec<Vec<BigInt>>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

impl Dense {
    fn new(a: Vec<Vec<BigInt>>, rows: usize, cols: usize, track: bool) -> Self {
        Dense {
            a,
            rows,
            cols,
            u: track.then(|| identity(rows)),
            v: track.then(|| identity(cols)),
            v_inv: track.then(|| identity(cols)),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap(i, j);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        add_scaled(&mut self.a, dst, src, q);
        if let Some(u) = &mut self.u {
            add_scaled(u, dst, src, q);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for row in &mut self.a {
            let t = &row[src] * q;
            row[dst] += t;
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                let t = &row[src] * q;
                row[dst] += t;
            }
        }
        if let Some(vi) = &mut self.v_inv {
            // Inverse of the column operation acts on rows of V^{-1}.
            let neg = -q;
            add_scaled(vi, src, dst, &neg);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    fn min_abs_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut best_abs = BigInt::zero();
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.is_none() || ax < best_abs {
                    let unit = ax.is_one();
                    best = Some((i, j));
                    best_abs = ax;
                    if unit {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn reduce(&mut self) -> usize {
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((pi, pj)) = self.min_abs_in_block(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                // Clear column t below the pivot and row t right of it.
                for i in t + 1..self.rows {
                    if !self.a[i][t].is_zero() {
                        let q = -(&self.a[i][t] / &self.a[t][t]);
                        self.add_row(i, t, &q);
                    }
                }
                for j in t + 1..self.cols {
                    if !self.a[t][j].is_zero() {
                        let q = -(&self.a[t][j] / &self.a[t][t]);
                        self.add_col(j, t, &q);
                    }
                }
                // Any remainder is smaller than the pivot: promote it.
                let mut smaller: Option<(usize, usize)> = None;
                let mut best = self.a[t][t].abs();
                for i in t + 1..self.rows {
                    let x = self.a[i][t].abs();
                    if !x.is_zero() && x < best {
                        best = x;
                        smaller = Some((i, t));
                    }
                }
                for j in t + 1..self.cols {
                    let x = self.a[t][j].abs();
                    if !x.is_zero() && x < best {
                        best = x;
                        smaller = Some((t, j));
                    }
                }
                if let Some((i, j)) = smaller {
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                // Divisibility: the pivot must divide the remaining block.
                let p = self.a[t][t].clone();
                let bad = (t + 1..self.rows).find(|&i| {
                    (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&p))
                });
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        t
    }
}

fn add_scaled(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x += y * q;
        }
    }
}

fn dense_to_matrix(rows: usize, cols: usize, a: &[Vec<BigInt>]) -> IntegerMatrix {
    IntegerMatrix::from_dense(rows, cols, a).expect("dense shape is consistent")
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = m.shape();
    let mut d = Dense::new(m.to_dense(), rows, cols, true);
    let rank = d.reduce();
    SmithForm {
        s: dense_to_matrix(rows, cols, &d.a),
        u: dense_to_matrix(rows, rows, d.u.as_ref().unwrap()),
        v: dense_to_matrix(cols, cols, d.v.as_ref().unwrap()),
        v_inv: dense_to_matrix(cols, cols, d.v_inv.as_ref().unwrap()),
        rank,
    }
}

fn is_unit(x: &BigInt) -> bool {
    x.magnitude().is_one()
}

/// `target -= factor * pivot` on sorted sparse rows. Columns that appear
/// in the result but not in `target` before are reported through `fresh`.
fn sub_scaled_row(target: &SparseRow, pivot: &SparseRow, factor: &BigInt, fresh: &mut Vec<usize>) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ti = target.get(i).map(|(c, _)| *c).unwrap_or(usize::MAX);
        let pj = pivot.get(j).map(|(c, _)| *c).unwrap_or(usize::MAX);
        if ti < pj {
            out.push(target[i].clone());
            i += 1;
        } else if pj < ti {
            fresh.push(pj);
            out.push((pj, -(&pivot[j].1 * factor)));
            j += 1;
        } else {
            let v = &target[i].1 - &pivot[j].1 * factor;
            if !v.is_zero() {
                out.push((ti, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank and invariant factors, without transforms.
pub fn invariant_factors(m: &IntegerMatrix) -> InvariantFactors {
    let nrows = m.rows();
    let ncols = m.cols();
    let mut rows: Vec<SparseRow> = m.sparse_rows().to_vec();
    let mut alive = vec![true; nrows];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    for (i, row) in rows.iter().enumerate() {
        for (j, _) in row {
            col_rows[*j].push(i);
        }
    }

    let mut units = 0usize;
    let mut fresh = Vec::new();
    loop {
        let mut progress = false;
        let mut order: Vec<usize> = (0..nrows)
            .filter(|&i| alive[i] && !rows[i].is_empty())
            .collect();
        order.sort_by_key(|&i| rows[i].len());
        for pr in order {
            if !alive[pr] || rows[pr].is_empty() {
                continue;
            }
            let pick = rows[pr]
                .iter()
                .filter(|(_, v)| is_unit(v))
                .min_by_key(|(j, _)| col_rows[*j].len())
                .map(|(j, v)| (*j, v.clone()));
            let Some((pc, pv)) = pick else {
                continue;
            };
            let pivot_row = std::mem::take(&mut rows[pr]);
            alive[pr] = false;
            let touched = std::mem::take(&mut col_rows[pc]);
            for r in touched {
                if !alive[r] {
                    continue;
                }
                let Ok(pos) = rows[r].binary_search_by_key(&pc, |(c, _)| *c) else {
                    continue;
                };
                // pv is ±1, so a_rc / pv == a_rc * pv.
                let factor = &rows[r][pos].1 * &pv;
                fresh.clear();
                let updated = sub_scaled_row(&rows[r], &pivot_row, &factor, &mut fresh);
                rows[r] = updated;
                for &c in &fresh {
                    col_rows[c].push(r);
                }
            }
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    // Dense core on the surviving rows and columns.
    let live_rows: Vec<usize> = (0..nrows)
        .filter(|&i| alive[i] && !rows[i].is_empty())
        .collect();
    let mut used = vec![false; ncols];
    for &i in &live_rows {
        for (j, _) in &rows[i] {
            used[*j] = true;
        }
    }
    let live_cols: Vec<usize> = (0..ncols).filter(|&j| used[j]).collect();
    if live_rows.is_empty() {
        return InvariantFactors {
            rank: units,
            torsion: Vec::new(),
        };
    }
    let mut col_index = vec![usize::MAX; ncols];
    for (k, &j) in live_cols.iter().enumerate() {
        col_index[j] = k;
    }
    let dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|&i| {
            let mut r = vec![BigInt::zero(); live_cols.len()];
            for (j, v) in &rows[i] {
                r[col_index[*j]] = v.clone();
            }
            r
        })
        .collect();
    let mut d = Dense::new(dense, live_rows.len(), live_cols.len(), false);
    let core_rank = d.reduce();
    let torsion = (0..core_rank)
        .map(|t| d.a[t][t].magnitude().clone())
        .filter(|x| !x.is_one())
        .collect();
    InvariantFactors {
        rank: units + core_rank,
        torsion,
    }
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntegerMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a = m.to_dense();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    match sign.sign() {
        Sign::Minus => -a[n - 1][n - 1].clone(),
        _ => a[n - 1][n - 1].clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(sf: &SmithForm) -> Vec<i64> {
        sf.diagonal().iter().map(|x| x.try_into().unwrap()).collect()
    }

    fn check(m: &IntegerMatrix) -> SmithForm {
        let sf = smith_normal_form(m);
        assert_eq!(sf.u.mul(m).unwrap().mul(&sf.v).unwrap(), sf.s);
        assert_eq!(sf.v.mul(&sf.v_inv).unwrap(), IntegerMatrix::identity(m.cols()));
        assert!(determinant(&sf.u).magnitude().is_one());
        assert!(determinant(&sf.v).magnitude().is_one());
        sf
    }

    #[test]
    fn identity_case() {
        let sf = check(&IntegerMatrix::identity(2));
        assert_eq!(sf.s, IntegerMatrix::identity(2));
    }

    #[test]
    fn two_four_six_eight() {
        // Row/column gcd reduction by hand: gcd of all entries is 2 and
        // |det| = 8, so the diagonal is (2, 4).
        let sf = check(&IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(diag(&sf), vec![2, 4]);
    }

    #[test]
    fn zero_one_by_one() {
        let sf = check(&IntegerMatrix::from_rows(&[vec![0]]));
        assert_eq!(sf.rank, 0);
        assert_eq!(sf.s, IntegerMatrix::from_rows(&[vec![0]]));
    }

    #[test]
    fn empty_matrices() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let m = IntegerMatrix::zeros(r, c);
            let sf = check(&m);
            assert_eq!(sf.rank, 0);
            assert_eq!(invariant_factors(&m), InvariantFactors::default());
        }
    }

    #[test]
    fn divisibility_is_enforced() {
        // diag(2, 3) must become diag(1, 6).
        let sf = check(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(diag(&sf), vec![1, 6]);
    }

    #[test]
    fn sparse_path_agrees_on_binomial_matrix() {
        let m = IntegerMatrix::from_rows(&[vec![-3, -3, 0], vec![2, 0, -2], vec![0, 3, 3]]);
        let inv = invariant_factors(&m);
        let sf = check(&m);
        assert_eq!(inv.rank, sf.rank);
        let dense_torsion: Vec<BigUint> = sf
            .diagonal()
            .into_iter()
            .map(|x| x.magnitude().clone())
            .filter(|x| !x.is_one())
            .collect();
        assert_eq!(inv.torsion, dense_torsion);
    }

    #[test]
    fn determinant_small() {
        let m = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&m), BigInt::from(-1));
        let m = IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(determinant(&m), BigInt::from(-8));
    }
}
