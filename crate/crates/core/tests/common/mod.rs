#![allow(dead_code)]

use matroid_torsion::{RMatrix, RealizedMatroid, RingElement, RingKind};
use proptest::prelude::*;

pub fn any_ring() -> impl Strategy<Value = RingKind> {
    prop_oneof![Just(RingKind::Integers), Just(RingKind::Gaussian), Just(RingKind::Eisenstein)]
}

pub fn element_in(ring: RingKind, bound: i64) -> BoxedStrategy<RingElement> {
    match ring {
        RingKind::Integers => (-bound..=bound).prop_map(move |a| RingElement::new(ring, a, 0)).boxed(),
        _ => (-bound..=bound, -bound..=bound).prop_map(move |(a, b)| RingElement::new(ring, a, b)).boxed(),
    }
}

pub fn ring_and_elements(n: usize, bound: i64) -> impl Strategy<Value = (RingKind, Vec<RingElement>)> {
    any_ring().prop_flat_map(move |r| (Just(r), proptest::collection::vec(element_in(r, bound), n)))
}

pub fn matrix_in(ring: RingKind, rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = RMatrix> {
    proptest::collection::vec(proptest::collection::vec(element_in(ring, bound), cols), rows)
        .prop_map(move |rs| RMatrix::from_rows(ring, rs).unwrap())
}

/// Random matrix with `1..=max_rows` rows and `0..=max_cols` columns.
pub fn any_matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = RMatrix> {
    (any_ring(), 1..=max_rows, 0..=max_cols).prop_flat_map(move |(r, d, n)| matrix_in(r, d, n, bound))
}

pub fn matroid_of(m: &RMatrix) -> RealizedMatroid {
    RealizedMatroid::realize(m).unwrap()
}

pub fn gaussian(a: i64, b: i64) -> RingElement {
    RingElement::new(RingKind::Gaussian, a, b)
}

/// The 2×2 Gaussian matrix used as the worked example throughout.
pub fn running_example() -> RMatrix {
    RMatrix::from_rows(
        RingKind::Gaussian,
        vec![vec![gaussian(1, 0), gaussian(1, 1)], vec![gaussian(1, 1), gaussian(0, 0)]],
    )
    .unwrap()
}
