//! The 2×2 Gaussian example, checked end to end.

mod common;

use common::{gaussian, running_example};
use matroid_torsion::face::face_ideal;
use matroid_torsion::poset::{posets_isomorphic, verify_poset_against_matroid, PosetNode};
use matroid_torsion::{
    build_poset, check_deletion_contraction, check_tutte_f_identity, face_module_hilbert, grothendieck_tutte,
    numeric_f_h, poset_components, tutte::f_vector, tutte_numeric, verify_hilbert_tutte, verify_simplicial,
    HilbertSeries, IntPoly, ModuleClass, RealizedMatroid, RingKind, Subset, TorsionPoset,
};
use num_bigint::BigInt;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn matroid() -> RealizedMatroid {
    RealizedMatroid::realize(&running_example()).unwrap()
}

/// The Hasse diagram as drawn: 0̂; a, b0, b1; c0, d0, c1, d1.
fn drawn_poset() -> TorsionPoset {
    let node = |elements: &[usize]| PosetNode { set: Subset::from_elements(elements.iter().copied()), dual: vec![] };
    let nodes =
        vec![node(&[]), node(&[0]), node(&[1]), node(&[1]), node(&[0, 1]), node(&[0, 1]), node(&[0, 1]), node(&[0, 1])];
    let covers = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6), (1, 7), (2, 4), (2, 5), (3, 6), (3, 7)];
    TorsionPoset::from_parts(RingKind::Gaussian, vec![1, 2], nodes, &covers).unwrap()
}

#[test]
fn module_classes_of_the_square() {
    let m = matroid();
    let class = |a: &[usize]| m.subset_info(Subset::from_elements(a.iter().copied())).unwrap().0;
    assert_eq!(class(&[]), ModuleClass::free(2));
    assert_eq!(class(&[0]), ModuleClass::free(1));
    assert_eq!(class(&[1]), ModuleClass::from_cyclic(1, &[gaussian(1, 1)]).unwrap());
    assert_eq!(class(&[0, 1]), ModuleClass::from_cyclic(0, &[gaussian(2, 0)]).unwrap());
    assert_eq!(class(&[1]).to_string(), "[R ⊕ R/(1+i)]");
    assert_eq!(m.rank(), 2);
    assert_eq!(m.independents().len(), 4);
}

#[test]
fn tutte_and_f_vectors() {
    let m = matroid();
    assert_eq!(tutte_numeric(&m).unwrap().to_string(), "x^2 + x + 2");
    let t = grothendieck_tutte(&m).unwrap();
    assert_eq!(t.to_string(), "[0] x^2 + (-[0]+[R/(1+i)]) x + (-[R/(1+i)]+[R/2])");
    let (f, h) = numeric_f_h(&m).unwrap();
    assert_eq!(f, ints(&[1, 3, 4]));
    assert_eq!(h, ints(&[1, 1, 2]));
    let shown: Vec<String> = f_vector(&m).unwrap().entries().iter().map(ToString::to_string).collect();
    assert_eq!(shown, ["[0]", "[0]+[R/(1+i)]", "[R/2]"]);
    assert!(check_tutte_f_identity(&m).unwrap().passed());
    assert!(check_deletion_contraction(&m).unwrap().passed());
}

#[test]
fn poset_matches_the_drawing() {
    let m = matroid();
    let p = build_poset(&m).unwrap();
    assert_eq!(p.len(), 8);
    assert_eq!(poset_components(&p).len(), 1);
    assert_eq!(p.covers().len(), 11);
    assert_eq!(posets_isomorphic(&p, &drawn_poset()), Some(true));
    assert!(verify_simplicial(&p).passed());
    assert!(verify_poset_against_matroid(&m, &p).unwrap().passed());

    let mut labels: Vec<String> = (0..p.len()).map(|v| p.node_label(v)).collect();
    labels.sort();
    let mut expected = vec![
        "({} | e)",
        "({1} | e)",
        "({2} | 0)",
        "({2} | 1)",
        "({1,2} | 0)",
        "({1,2} | 1)",
        "({1,2} | i)",
        "({1,2} | 1+i)",
    ];
    expected.sort();
    assert_eq!(labels, expected);
}

#[test]
fn a_perturbed_drawing_is_not_isomorphic() {
    let p = build_poset(&matroid()).unwrap();
    let nodes = drawn_poset().nodes().to_vec();
    // b1 now also lies under c0
    let d = TorsionPoset::from_parts(
        RingKind::Gaussian,
        vec![1, 2],
        nodes,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6), (1, 7), (2, 4), (2, 5), (3, 4), (3, 6), (3, 7)],
    )
    .unwrap();
    assert_eq!(posets_isomorphic(&p, &d), Some(false));
}

#[test]
fn face_ring_and_hilbert_series() {
    let m = matroid();
    let p = build_poset(&m).unwrap();
    let series = face_module_hilbert(&p);
    assert_eq!(series, HilbertSeries::new(IntPoly::from_ints(&[1, 1, 2]), 2));
    assert_eq!(series.to_string(), "(1 + t + 2t^2)/(1-t)^2");
    assert!(verify_hilbert_tutte(&m).unwrap().passed());

    // x_a x_{b_i} - (x_{c_i} + x_{d_i}) twice, eleven monomials
    let ideal = face_ideal(&p);
    assert_eq!(ideal.relations.len(), 13);
    let sums = ideal.relations.iter().filter(|r| r.meet.is_some() && r.upper.len() == 2).count();
    let monomials = ideal.relations.iter().filter(|r| r.upper.is_empty()).count();
    assert_eq!((sums, monomials), (2, 11));
    let ranks: Vec<usize> = ideal.variables.iter().map(|v| v.0).collect();
    let mut sorted = ranks.clone();
    sorted.sort();
    assert_eq!(sorted, [0, 1, 1, 1, 2, 2, 2, 2]);
}
