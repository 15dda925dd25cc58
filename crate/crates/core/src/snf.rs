//! Smith normal form over the supported Euclidean rings.

use alloc::vec::Vec;

use crate::matrix::RMatrix;
use crate::ring::RingElement;

/// `left · original · right = diag(diag)`, with `left`, `right` invertible over `R`.
///
/// `left_inv` is the inverse of `left`; its columns express the new basis of the
/// target space in the original coordinates.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub left: RMatrix,
    pub left_inv: RMatrix,
    pub right: RMatrix,
    /// Normalized, `diag[k] | diag[k+1]` among nonzero entries, zeros last.
    /// Has length `min(rows, cols)`.
    pub diag: Vec<RingElement>,
}

impl SnfDecomposition {
    /// Number of nonzero diagonal entries, i.e. the rank over the fraction field.
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }
}

/// Computes the Smith normal form of `m`.
///
/// Pivoting is deterministic: the nonzero entry of smallest norm in the active
/// submatrix, ties broken by row-major position.
pub fn smith_normal_form(m: &RMatrix) -> SnfDecomposition {
    let ring = m.ring();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = RMatrix::identity(ring, rows);
    let mut left_inv = RMatrix::identity(ring, rows);
    let mut right = RMatrix::identity(ring, cols);

    let row_op = |a: &mut RMatrix, l: &mut RMatrix, li: &mut RMatrix, t: usize, s: usize, c: &RingElement| {
        a.add_row_multiple(t, s, c);
        l.add_row_multiple(t, s, c);
        li.add_col_multiple(s, t, &-c);
    };

    let steps = rows.min(cols);
    'outer: for t in 0..steps {
        loop {
            let Some((pi, pj)) = find_pivot(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            left_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let (q, r) = a[(i, t)].div_rem(&a[(t, t)]).expect("pivot is nonzero");
                row_op(&mut a, &mut left, &mut left_inv, i, t, &-q);
                dirty |= !r.is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let (q, r) = a[(t, j)].div_rem(&a[(t, t)]).expect("pivot is nonzero");
                let c = -q;
                a.add_col_multiple(j, t, &c);
                right.add_col_multiple(j, t, &c);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // The pivot must divide the rest of the active block; otherwise fold in
            // an offending row and restart on the smaller remainder it creates.
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(t, t)].divides(&a[(i, j)])));
            match offending {
                Some(i) => row_op(&mut a, &mut left, &mut left_inv, t, i, &RingElement::one(ring)),
                None => break,
            }
        }
    }

    let mut diag = Vec::with_capacity(steps);
    for t in 0..steps {
        let (u, n) = a[(t, t)].normalize_associate();
        if !u.is_one() {
            let inv = u.unit_inverse().expect("normalizing factor is a unit");
            left.scale_row(t, &u);
            left_inv.scale_col(t, &inv);
        }
        diag.push(n);
    }
    SnfDecomposition { left, left_inv, right, diag }
}

fn find_pivot(a: &RMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), num_bigint::BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let e = &a[(i, j)];
            if e.is_zero() {
                continue;
            }
            let n = e.norm();
            if best.as_ref().is_none_or(|(_, bn)| n < *bn) {
                best = Some(((i, j), n));
            }
        }
    }
    best.map(|(p, _)| p)
}
