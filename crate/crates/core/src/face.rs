//! Face ring of a simplicial poset: the ideal's generators, Hilbert series from the
//! h-vector, and the face module of a matroid.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::matroid::RealizedMatroid;
use crate::poly::{write_univariate, IntPoly, LaurentPoly};
use crate::poset::{build_poset, component_ids, poset_f_vector, TorsionPoset};
use crate::report::CheckReport;
use crate::subset::Subset;
use crate::tutte::{f_to_h, tutte_numeric};

/// `numerator / (1 − t)^exponent`, kept in lowest terms.
#[derive(Clone, Debug, Eq)]
pub struct HilbertSeries {
    numerator: IntPoly,
    exponent: usize,
}

impl HilbertSeries {
    pub fn new(numerator: IntPoly, exponent: usize) -> Self {
        let mut s = HilbertSeries { numerator, exponent };
        while s.exponent > 0 {
            match s.numerator.div_one_minus_t() {
                Some(q) if !s.numerator.is_zero() => {
                    s.numerator = q;
                    s.exponent -= 1;
                }
                _ => break,
            }
        }
        if s.numerator.is_zero() {
            s.exponent = 0;
        }
        s
    }

    /// `(h_0 + h_1 t + … + h_r t^r) / (1 − t)^r`.
    pub fn from_h_vector(h: &[BigInt]) -> Self {
        Self::new(IntPoly::new(h.to_vec()), h.len().saturating_sub(1))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.numerator.scale(k), self.exponent)
    }

    /// The first `terms` coefficients of the power series.
    pub fn expand(&self, terms: usize) -> Vec<BigInt> {
        // 1/(1−t)^e = Σ C(k+e−1, e−1) t^k
        let mut series: Vec<BigInt> = self.numerator.coeffs().iter().take(terms).cloned().collect();
        series.resize(terms, BigInt::from(0));
        for _ in 0..self.exponent {
            for k in 1..terms {
                let prev = series[k - 1].clone();
                series[k] += prev;
            }
        }
        series
    }
}

impl PartialEq for HilbertSeries {
    /// Cross-multiplied comparison of the two rational functions.
    fn eq(&self, other: &Self) -> bool {
        let lhs = &self.numerator * &IntPoly::one_minus_t_pow(other.exponent);
        let rhs = &other.numerator * &IntPoly::one_minus_t_pow(self.exponent);
        lhs == rhs
    }
}

impl fmt::Display for HilbertSeries {
    /// `(1 + t + 2t^2)/(1-t)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.numerator.coeffs().iter().cloned().enumerate();
        if self.exponent == 0 {
            return write_univariate(f, terms, "t");
        }
        let single = self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        if !single {
            f.write_str("(")?;
        }
        write_univariate(f, terms, "t")?;
        if !single {
            f.write_str(")")?;
        }
        match self.exponent {
            1 => f.write_str("/(1-t)"),
            e => write!(f, "/(1-t)^{e}"),
        }
    }
}

/// `x_a x_b − x_{a∧b} Σ_{c ∈ M(a,b)} x_c` for one incomparable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRelation {
    pub a: usize,
    pub b: usize,
    /// `None` when the meet does not exist.
    pub meet: Option<usize>,
    /// Minimal common upper bounds.
    pub upper: Vec<usize>,
}

impl fmt::Display for FaceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}*x{}", self.a, self.b)?;
        let Some(meet) = self.meet else { return Ok(()) };
        match self.upper.as_slice() {
            [] => Ok(()),
            [c] => write!(f, " - x{meet}*x{c}"),
            cs => {
                let sum: Vec<String> = cs.iter().map(|c| alloc::format!("x{c}")).collect();
                write!(f, " - x{meet}*({})", sum.join(" + "))
            }
        }
    }
}

/// Variables `x0, x1, …` (one per node, `x0` the minimum) and the generators of
/// the face ideal, including `x0 - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceIdealDescription {
    /// `(degree, node label)` of each variable.
    pub variables: Vec<(usize, String)>,
    pub relations: Vec<FaceRelation>,
}

impl fmt::Display for FaceIdealDescription {
    /// One generator per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "x0 - 1")?;
        for r in &self.relations {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Face ideal of a poset with a unique minimum (typically one component of `Gr M`).
/// Variable `xk` is the `k`-th node in the poset's own order.
pub fn face_ideal(p: &TorsionPoset) -> FaceIdealDescription {
    let n = p.len();
    let downs: Vec<Vec<usize>> = (0..n).map(|v| p.downset(v)).collect();
    let ups: Vec<Vec<usize>> = (0..n).map(|v| p.upset(v)).collect();
    let variables = (0..n).map(|v| (p.rank_of(v), p.node_label(v))).collect();
    let mut relations = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if downs[b].binary_search(&a).is_ok() || downs[a].binary_search(&b).is_ok() {
                continue;
            }
            let common_lower = intersect(&downs[a], &downs[b]);
            let maximal: Vec<usize> = common_lower
                .iter()
                .copied()
                .filter(|&w| !common_lower.iter().any(|&z| z != w && downs[z].binary_search(&w).is_ok()))
                .collect();
            let meet = (maximal.len() == 1).then(|| maximal[0]);
            let common_upper = intersect(&ups[a], &ups[b]);
            let upper: Vec<usize> = common_upper
                .iter()
                .copied()
                .filter(|&w| !common_upper.iter().any(|&z| z != w && ups[z].binary_search(&w).is_ok()))
                .collect();
            relations.push(FaceRelation { a, b, meet, upper });
        }
    }
    FaceIdealDescription { variables, relations }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// `A_P(t) = Σ h_i t^i / (1 − t)^r`, from the rank counts of `p`.
pub fn hilbert_series_face_ring(p: &TorsionPoset) -> HilbertSeries {
    HilbertSeries::from_h_vector(&f_to_h(&poset_f_vector(p)))
}

/// `N_M(t) = |tor(∅)| · A_L(t)`, `L` the component of the minimum `(∅, 0)`.
/// The number of minima of `Gr M` is `|tor(∅)|`.
pub fn face_module_hilbert(p: &TorsionPoset) -> HilbertSeries {
    let comps = component_ids(p);
    let zero_min = (0..p.len())
        .find(|&v| p.nodes()[v].set == Subset::EMPTY && p.nodes()[v].dual.iter().all(|x| x.is_zero()))
        .unwrap_or(0);
    let link = comps.iter().find(|ids| ids.contains(&zero_min)).map(|ids| p.subposet(ids));
    match link {
        Some(l) => hilbert_series_face_ring(&l).scale(&BigInt::from(comps.len())),
        None => HilbertSeries::new(IntPoly::zero(), 0),
    }
}

/// `N_M(t)` computed through the torsion-free quotient `M′`, as `|tor(∅)| · A_{Gr M′}(t)`.
pub fn face_module_hilbert_via_quotient(m: &RealizedMatroid) -> Result<HilbertSeries> {
    let (empty, _) = m.module_of(Subset::EMPTY)?;
    let quotient = m.torsion_free_quotient()?;
    let p = build_poset(&quotient)?;
    Ok(hilbert_series_face_ring(&p).scale(&empty.torsion_cardinality()))
}

/// `t^r T̃(1/t, 1) / (1 − t)^r`.
pub fn tutte_side_series(m: &RealizedMatroid) -> Result<HilbertSeries> {
    let t = tutte_numeric(m)?;
    let r = m.rank() as i64;
    let mut acc = LaurentPoly::zero();
    for (&(i, _), c) in t.terms() {
        acc = acc.add(&LaurentPoly::shifted(&IntPoly::constant(c.clone()), r - i as i64));
    }
    let numerator = acc
        .to_poly()
        .ok_or_else(|| crate::error::Error::Internal(String::from("t^r T(1/t, 1) has negative powers")))?;
    Ok(HilbertSeries::new(numerator, r as usize))
}

/// `N_M(t) = t^r / (1 − t)^r · T̃(1/t, 1)`, both sides exact.
pub fn verify_hilbert_tutte(m: &RealizedMatroid) -> Result<CheckReport> {
    let p = build_poset(m)?;
    let lhs = face_module_hilbert(&p);
    let rhs = tutte_side_series(m)?;
    let mut report = CheckReport::new("face module Hilbert series from the Tutte polynomial");
    report.expect("N_M(t) = t^r/(1-t)^r T(1/t,1)", lhs == rhs, || alloc::format!("N_M(t) = {lhs}, Tutte side = {rhs}"));
    let via_quotient = face_module_hilbert_via_quotient(m)?;
    report.expect("N_M(t) = |tor(∅)| A_{M'}(t)", lhs == via_quotient, || {
        alloc::format!("from the link {lhs}, from the quotient {via_quotient}")
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::RMatrix;
    use crate::poset::poset_components;
    use crate::ring::{RingElement, RingKind::*};
    use alloc::string::ToString;
    use alloc::vec;

    fn running_example() -> RealizedMatroid {
        let g = |a, b| RingElement::new(Gaussian, a, b);
        let m = RMatrix::from_rows(Gaussian, vec![vec![g(1, 0), g(1, 1)], vec![g(1, 1), g(0, 0)]]).unwrap();
        RealizedMatroid::realize(&m).unwrap()
    }

    #[test]
    fn running_example_series() {
        let m = running_example();
        let p = build_poset(&m).unwrap();
        let n = face_module_hilbert(&p);
        assert_eq!(n.to_string(), "(1 + t + 2t^2)/(1-t)^2");
        assert_eq!(n, HilbertSeries::new(IntPoly::from_ints(&[1, 1, 2]), 2));
        assert!(verify_hilbert_tutte(&m).unwrap().passed());
    }

    #[test]
    fn running_example_ideal() {
        let p = build_poset(&running_example()).unwrap();
        let ideal = face_ideal(&p);
        // C(8,2) pairs minus the 7 through the minimum and the 8 rank-one covers
        assert_eq!(ideal.relations.len(), 28 - 7 - 8);
        let with_sum = ideal.relations.iter().filter(|r| r.upper.len() == 2).count();
        assert_eq!(with_sum, 2);
        assert!(ideal.to_string().starts_with("x0 - 1\n"));
    }

    #[test]
    fn series_arithmetic() {
        let s = HilbertSeries::new(IntPoly::from_ints(&[1, -1]), 3);
        assert_eq!(s.exponent(), 2);
        assert_eq!(s.to_string(), "1/(1-t)^2");
        assert_eq!(s.expand(4), [1, 2, 3, 4].map(BigInt::from));
        assert_eq!(HilbertSeries::new(IntPoly::one(), 0).to_string(), "1");
    }

    #[test]
    fn point_and_boolean() {
        let m = RealizedMatroid::realize(&RMatrix::from_ints(Integers, &[&[0]]).unwrap()).unwrap();
        let p = build_poset(&m).unwrap();
        assert_eq!(hilbert_series_face_ring(&p), HilbertSeries::new(IntPoly::one(), 0));
        assert_eq!(face_ideal(&p).to_string(), "x0 - 1\n");
        let m = RealizedMatroid::realize(&RMatrix::identity(Integers, 2)).unwrap();
        let p = build_poset(&m).unwrap();
        assert_eq!(hilbert_series_face_ring(&p), HilbertSeries::new(IntPoly::one(), 2));
        assert_eq!(poset_components(&p).len(), 1);
    }

    #[test]
    fn torsion_at_empty_scales() {
        let mat = RMatrix::from_ints(Integers, &[&[1, 2], &[1, 0]]).unwrap();
        let m = RealizedMatroid::with_torsion_at_empty(&mat, &[RingElement::from_int(Integers, 3)]).unwrap();
        let report = verify_hilbert_tutte(&m).unwrap();
        assert!(report.passed(), "{report}");
        let q = m.torsion_free_quotient().unwrap();
        let direct = hilbert_series_face_ring(&build_poset(&q).unwrap());
        assert_eq!(face_module_hilbert(&build_poset(&m).unwrap()), direct.scale(&BigInt::from(3)));
    }
}
