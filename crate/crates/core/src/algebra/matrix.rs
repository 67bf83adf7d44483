//! Exact integer matrices.
//!
//! Storage is row-sparse: each row keeps its nonzero entries sorted by
//! column. Boundary maps of bar and surjection complexes have a handful of
//! nonzeros per row, while the dense views needed by the Smith normal form
//! are materialized on demand.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type SparseRow = Vec<(usize, BigInt)>;

#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
    row_labels: Option<Arc<[String]>>,
    col_labels: Option<Arc<[String]>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.data.iter_mut().enumerate() {
            row.push((i, BigInt::one()));
        }
        m
    }

    /// Builds a matrix from dense rows. All rows must have length `cols`.
    pub fn from_dense<T: Into<BigInt> + Clone>(rows: usize, cols: usize, entries: &[Vec<T>]) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "expected {rows}x{cols} dense entries"
            )));
        }
        let data = entries
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter_map(|(j, v)| {
                        let v: BigInt = v.clone().into();
                        (!v.is_zero()).then_some((j, v))
                    })
                    .collect()
            })
            .collect();
        Ok(IntegerMatrix {
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        })
    }

    /// Convenience constructor for literal matrices; the shape is taken from
    /// the input, and an empty slice yields the 0x0 matrix.
    pub fn from_rows<T: Into<BigInt> + Clone>(entries: &[Vec<T>]) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        Self::from_dense(rows, cols, entries).expect("ragged literal matrix")
    }

    /// Builds a matrix from `(row, col, value)` triplets; duplicate positions
    /// are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut data: Vec<SparseRow> = vec![Vec::new(); rows];
        for (i, j, v) in triplets {
            if i >= rows || j >= cols {
                return Err(Error::ShapeMismatch(format!(
                    "entry ({i},{j}) outside {rows}x{cols}"
                )));
            }
            data[i].push((j, v));
        }
        for row in &mut data {
            normalize_row(row);
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        })
    }

    pub(crate) fn from_sparse_rows(rows: usize, cols: usize, data: Vec<SparseRow>) -> Self {
        debug_assert_eq!(data.len(), rows);
        IntegerMatrix {
            rows,
            cols,
            data,
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn with_labels(mut self, row_labels: Option<Vec<String>>, col_labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &row_labels {
            if l.len() != self.rows {
                return Err(Error::ShapeMismatch("row label count".into()));
            }
        }
        if let Some(l) = &col_labels {
            if l.len() != self.cols {
                return Err(Error::ShapeMismatch("column label count".into()));
            }
        }
        self.row_labels = row_labels.map(Into::into);
        self.col_labels = col_labels.map(Into::into);
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of bounds");
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn row(&self, i: usize) -> &[(usize, BigInt)] {
        &self.data[i]
    }

    pub(crate) fn sparse_rows(&self) -> &[SparseRow] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        IntegerMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
        }
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: SparseRow = Vec::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        acc.push((*j, a * b));
                    }
                }
                normalize_row(&mut acc);
                acc
            })
            .collect();
        Ok(IntegerMatrix::from_sparse_rows(self.rows, other.cols, data))
    }

    pub fn add(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        self.combine(other, BigInt::one())
    }

    pub fn sub(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        self.combine(other, -BigInt::one())
    }

    fn combine(&self, other: &IntegerMatrix, sign: BigInt) -> Result<IntegerMatrix> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut acc: SparseRow = a.clone();
                acc.extend(b.iter().map(|(j, v)| (*j, v * &sign)));
                normalize_row(&mut acc);
                acc
            })
            .collect();
        Ok(IntegerMatrix::from_sparse_rows(self.rows, self.cols, data))
    }

    pub fn scale(&self, c: &BigInt) -> IntegerMatrix {
        if c.is_zero() {
            return IntegerMatrix::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(j, v)| (*j, v * c)).collect())
            .collect();
        IntegerMatrix::from_sparse_rows(self.rows, self.cols, data)
    }

    /// Block matrix `[[a, b], [c, d]]`; block shapes must be compatible.
    pub fn block(a: &IntegerMatrix, b: &IntegerMatrix, c: &IntegerMatrix, d: &IntegerMatrix) -> Result<IntegerMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::ShapeMismatch("incompatible blocks".into()));
        }
        let mut data = Vec::with_capacity(a.rows + c.rows);
        for (left, right) in a.data.iter().zip(&b.data).chain(c.data.iter().zip(&d.data)) {
            let mut row = left.clone();
            row.extend(right.iter().map(|(j, v)| (j + a.cols, v.clone())));
            data.push(row);
        }
        Ok(IntegerMatrix::from_sparse_rows(
            a.rows + c.rows,
            a.cols + b.cols,
            data,
        ))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
        Self::block(
            a,
            &IntegerMatrix::zeros(a.rows, b.cols),
            &IntegerMatrix::zeros(b.rows, a.cols),
            b,
        )
        .expect("direct sum blocks always fit")
    }

    /// Kronecker product `a ⊗ b`, with row index `i * b.rows + k`.
    pub fn kronecker(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
        let mut data = Vec::with_capacity(a.rows * b.rows);
        for arow in &a.data {
            for brow in &b.data {
                let mut row = Vec::with_capacity(arow.len() * brow.len());
                for (ja, va) in arow {
                    for (jb, vb) in brow {
                        row.push((ja * b.cols + jb, va * vb));
                    }
                }
                data.push(row);
            }
        }
        IntegerMatrix::from_sparse_rows(a.rows * b.rows, a.cols * b.cols, data)
    }

    /// Keeps the listed rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntegerMatrix {
        let mut col_map = vec![usize::MAX; self.cols];
        for (new, &old) in cols.iter().enumerate() {
            col_map[old] = new;
        }
        let data = rows
            .iter()
            .map(|&i| {
                let mut row: SparseRow = self.data[i]
                    .iter()
                    .filter(|(j, _)| col_map[*j] != usize::MAX)
                    .map(|(j, v)| (col_map[*j], v.clone()))
                    .collect();
                row.sort_by_key(|(j, _)| *j);
                row
            })
            .collect();
        IntegerMatrix::from_sparse_rows(rows.len(), cols.len(), data)
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data
            .iter()
            .flat_map(|r| r.iter().map(|(_, v)| v.abs()))
            .max()
            .unwrap_or_default()
    }
}

/// Sorts by column, merges duplicates and drops zeros.
pub(crate) fn normalize_row(row: &mut SparseRow) {
    row.sort_by_key(|(j, _)| *j);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (j, v) in row.drain(..) {
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv += v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    *row = out;
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix {}x{} ", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            f.debug_list()
                .entries(self.to_dense().iter().map(|r| {
                    r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                }))
                .finish()
        } else {
            write!(f, "({} nonzeros)", self.nnz())
        }
    }
}
