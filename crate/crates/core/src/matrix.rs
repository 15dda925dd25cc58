use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingKind};

/// A dense `rows × cols` matrix over one of the supported rings.
///
/// Realization matrices store one column per ground-set element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    ring: RingKind,
    rows: usize,
    cols: usize,
    data: Vec<RingElement>,
}

impl RMatrix {
    pub fn zeros(ring: RingKind, rows: usize, cols: usize) -> Self {
        RMatrix { ring, rows, cols, data: alloc::vec![RingElement::zero(ring); rows * cols] }
    }

    pub fn identity(ring: RingKind, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = RingElement::one(ring);
        }
        m
    }

    pub fn from_rows(ring: RingKind, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch { expected: ncols, found: row.len() });
            }
            for e in row {
                if e.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                data.push(e);
            }
        }
        Ok(RMatrix { ring, rows: nrows, cols: ncols, data })
    }

    /// Builds a `rows × columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(ring: RingKind, rows: usize, columns: &[Vec<RingElement>]) -> Result<Self> {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: col.len() });
            }
            for (i, e) in col.iter().enumerate() {
                if e.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                m[(i, j)] = e.clone();
            }
        }
        Ok(m)
    }

    pub fn from_ints(ring: RingKind, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            ring,
            rows.iter().map(|r| r.iter().map(|&x| RingElement::from_int(ring, x)).collect()).collect(),
        )
    }

    pub fn ring(&self) -> RingKind {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<RingElement> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[RingElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn columns(&self) -> Vec<Vec<RingElement>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn mul(&self, other: &RMatrix) -> Result<RMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = RMatrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[RingElement]) -> Vec<RingElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(RingElement::zero(self.ring), |acc, (a, x)| &acc + &(a * x)))
            .collect()
    }

    /// Laplace expansion. Exponential in the size; meant for small matrices.
    pub fn determinant(&self) -> Option<RingElement> {
        if self.rows != self.cols {
            return None;
        }
        Some(det_rec(self, &(0..self.rows).collect::<Vec<_>>(), 0))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += c · row[source]`
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, c: &RingElement) {
        for j in 0..self.cols {
            let delta = c * &self[(source, j)];
            self[(target, j)] = &self[(target, j)] + &delta;
        }
    }

    /// `col[target] += c · col[source]`
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, c: &RingElement) {
        for i in 0..self.rows {
            let delta = c * &self[(i, source)];
            self[(i, target)] = &self[(i, target)] + &delta;
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &RingElement) {
        for j in 0..self.cols {
            self[(i, j)] = c * &self[(i, j)];
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, c: &RingElement) {
        for i in 0..self.rows {
            self[(i, j)] = c * &self[(i, j)];
        }
    }
}

fn det_rec(m: &RMatrix, cols: &[usize], row: usize) -> RingElement {
    if cols.is_empty() {
        return RingElement::one(m.ring);
    }
    let mut acc = RingElement::zero(m.ring);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[(row, c)];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &det_rec(m, &rest, row + 1);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

impl Index<(usize, usize)> for RMatrix {
    type Output = RingElement;
    fn index(&self, (i, j): (usize, usize)) -> &RingElement {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RingElement {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
