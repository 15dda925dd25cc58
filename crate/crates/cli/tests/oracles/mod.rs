//! Integer-matrix oracles written without the library's module theory: ranks by
//! rational elimination, determinants by Bareiss elimination, and the Tutte
//! polynomial by summing over subsets.

#![allow(dead_code)]

use std::collections::BTreeMap;

use matroid_torsion::{IntPoly, IntPoly2, RMatrix, RingKind};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Entries of an integer matrix, row-major.
pub fn integer_entries(m: &RMatrix) -> Vec<Vec<BigInt>> {
    assert_eq!(m.ring(), RingKind::Integers);
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.re().clone()).collect()).collect()
}

fn columns_of(a: &[Vec<BigInt>], cols: &[usize]) -> Vec<Vec<BigInt>> {
    a.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect()
}

pub fn rank(a: &[Vec<BigInt>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> =
        a.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &rows[rank][col];
                let pivot = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Bareiss fraction-free determinant.
pub fn determinant(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else { return BigInt::zero() };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// gcd of all `k × k` minors of `a`; 0 if there are none or all vanish.
pub fn gcd_of_minors(a: &[Vec<BigInt>], k: usize) -> BigInt {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut g = BigInt::zero();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect()).collect();
            g = g.gcd(&determinant(&sub));
        }
    }
    g.abs()
}

/// `(rank, |tor|)` of `Z^d / ⟨columns in S⟩`: the torsion order is the gcd of the
/// maximal nonvanishing minors.
pub fn subset_data(a: &[Vec<BigInt>], subset: &[usize]) -> (usize, BigInt) {
    let sub = columns_of(a, subset);
    let r = rank(&sub);
    let t = if r == 0 { BigInt::one() } else { gcd_of_minors(&sub, r) };
    (r, t)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |bits| (0..n).filter(|i| bits >> i & 1 == 1).collect())
}

fn binomial_expand(p: u32, q: u32, weight: &BigInt, out: &mut BTreeMap<(u32, u32), BigInt>) {
    // (x−1)^p (y−1)^q
    let row = |n: u32| -> Vec<BigInt> {
        let mut c = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::zero(); c.len() + 1];
            for (i, v) in c.iter().enumerate() {
                next[i + 1] += v;
                next[i] -= v;
            }
            c = next;
        }
        c
    };
    for (i, a) in row(p).iter().enumerate() {
        for (j, b) in row(q).iter().enumerate() {
            *out.entry((i as u32, j as u32)).or_insert_with(BigInt::zero) += a * b * weight;
        }
    }
}

fn to_poly2(terms: BTreeMap<(u32, u32), BigInt>) -> IntPoly2 {
    IntPoly2::from_terms(terms.into_iter().filter(|(_, c)| !c.is_zero()))
}

/// Corank-nullity Tutte polynomial `Σ_A (x−1)^{r−rk A} (y−1)^{|A|−rk A}`.
pub fn classical_tutte(a: &[Vec<BigInt>]) -> IntPoly2 {
    let n = a.first().map_or(0, Vec::len);
    let all: Vec<usize> = (0..n).collect();
    let r = rank(&columns_of(a, &all)) as u32;
    let mut out = BTreeMap::new();
    for s in subsets(n) {
        let rk = rank(&columns_of(a, &s)) as u32;
        binomial_expand(r - rk, s.len() as u32 - rk, &BigInt::one(), &mut out);
    }
    to_poly2(out)
}

/// `Σ_S m(S) (−1)^{|S|−rk S} (1+t)^{2(r−rk S)} t^{n−r+rk S}` with toric multiplicities
/// `m(S)` from minors, i.e. `t^n T(1 + (1+t)²/t, 0)` for the arithmetic Tutte polynomial.
pub fn toric_series(a: &[Vec<BigInt>]) -> IntPoly {
    let n = a.first().map_or(0, Vec::len);
    let all: Vec<usize> = (0..n).collect();
    let r = rank(&columns_of(a, &all));
    let mut coeffs = vec![BigInt::zero(); n + r + 1];
    for s in subsets(n) {
        let (rk, m) = subset_data(a, &s);
        let sign = if (s.len() - rk) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let k = 2 * (r - rk);
        let shift = n - r + rk;
        let mut binom = BigInt::one();
        for i in 0..=k {
            coeffs[shift + i] += &sign * &m * &binom;
            binom = binom * (k - i) / (i + 1);
        }
    }
    IntPoly::new(coeffs)
}
