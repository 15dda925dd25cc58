//! The Grothendieck-Tutte polynomial, f- and h-vectors, and the deletion-contraction
//! and specialization identities.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::groth::{phi, phi_tilde, GTPoly, GrothElement, IntPoly2};
use crate::matroid::{ElementKind, RealizedMatroid, SubsetTable};
use crate::module::ModuleClass;
use crate::report::{CheckReport, Outcome};

/// `[tor(A)^∨]`.
///
/// Over a PID, `Hom(R/I, Q(R)/R) ≅ R/I`, so the dual has the same class as the
/// torsion itself. This is the only place the identification is made; a ring
/// without that self-duality would need a real dual here.
pub(crate) fn dual_torsion_class(module: &ModuleClass) -> ModuleClass {
    module.torsion_part()
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn sign(e: u32) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Σ_A [tor(A)^∨] (x−1)^{r−rk A} (y−1)^{|A|−rk A}` from a precomputed table.
pub fn grothendieck_tutte_from_table(t: &SubsetTable) -> GTPoly {
    let r = t.rank() as u32;
    // collect the coefficient of each (p, q) first, then expand once per pair
    let mut by_exponent: alloc::collections::BTreeMap<(u32, u32), GrothElement> = Default::default();
    for (a, class, rk) in t.iter() {
        let p = r - rk as u32;
        let q = a.len() as u32 - rk as u32;
        by_exponent.entry((p, q)).or_default().add_term(dual_torsion_class(class), BigInt::one());
    }
    let mut out = GTPoly::zero();
    for ((p, q), coeff) in by_exponent {
        for i in 0..=p {
            let ci = binomial(p, i) * sign(p - i);
            for j in 0..=q {
                let cj = binomial(q, j) * sign(q - j);
                out.add_term((i, j), &coeff.scale(&(&ci * &cj)));
            }
        }
    }
    out
}

pub fn grothendieck_tutte(m: &RealizedMatroid) -> Result<GTPoly> {
    Ok(grothendieck_tutte_from_table(&SubsetTable::build(m)?))
}

/// `T̃ = φ̃(T)`; over `Z` this is the arithmetic Tutte polynomial.
pub fn tutte_numeric(m: &RealizedMatroid) -> Result<IntPoly2> {
    Ok(phi_tilde(&grothendieck_tutte(m)?))
}

/// `(f_{−1}, f_0, …, f_{r−1})` with `f_{i−1} = Σ_{A ∈ Δ, |A| = i} [tor(A)^∨]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothFVector {
    entries: Vec<GrothElement>,
}

impl GrothFVector {
    pub fn from_table(t: &SubsetTable) -> Self {
        let mut entries = alloc::vec![GrothElement::zero(); t.rank() + 1];
        for (a, class, rk) in t.iter() {
            if rk == a.len() {
                entries[a.len()].add_term(dual_torsion_class(class), BigInt::one());
            }
        }
        GrothFVector { entries }
    }

    /// Entry `k` is `f_{k−1}`.
    pub fn entries(&self) -> &[GrothElement] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn numeric(&self) -> Vec<BigInt> {
        self.entries.iter().map(phi).collect()
    }

    /// `Σ_i f_{i−1} (x−1)^{r−i}` as a polynomial in `x`.
    pub fn f_polynomial(&self) -> GTPoly {
        let r = self.rank() as u32;
        let mut out = GTPoly::zero();
        for (i, f) in self.entries.iter().enumerate() {
            let p = r - i as u32;
            for k in 0..=p {
                out.add_term((k, 0), &f.scale(&(binomial(p, k) * sign(p - k))));
            }
        }
        out
    }

    /// `(h_0, …, h_r)` with `Σ f_{i−1}(t−1)^{r−i} = Σ h_i t^{r−i}`.
    pub fn h_vector(&self) -> Vec<GrothElement> {
        let r = self.rank() as u32;
        (0..=r)
            .map(|i| {
                let mut h = GrothElement::zero();
                for j in 0..=i {
                    let c = binomial(r - j, r - i) * sign(i - j);
                    h.add_assign_ref(&self.entries[j as usize].scale(&c));
                }
                h
            })
            .collect()
    }
}

pub fn f_vector(m: &RealizedMatroid) -> Result<GrothFVector> {
    Ok(GrothFVector::from_table(&SubsetTable::build(m)?))
}

/// h-vector of a numeric f-vector `(f_{−1}, …, f_{r−1})`.
pub fn f_to_h(f: &[BigInt]) -> Vec<BigInt> {
    let r = f.len() as u32 - 1;
    (0..=r).map(|i| (0..=i).map(|j| &f[j as usize] * binomial(r - j, r - i) * sign(i - j)).sum()).collect()
}

/// Inverse of [`f_to_h`].
pub fn h_to_f(h: &[BigInt]) -> Vec<BigInt> {
    let r = h.len() as u32 - 1;
    (0..=r).map(|j| (0..=j).map(|i| &h[i as usize] * binomial(r - i, r - j)).sum()).collect()
}

/// Numeric `f` and `h` vectors, i.e. `φ` of the Grothendieck ones.
pub fn numeric_f_h(m: &RealizedMatroid) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let f = f_vector(m)?.numeric();
    let h = f_to_h(&f);
    Ok((f, h))
}

/// `T(t, 1) = Σ f_{i−1} (t−1)^{r−i}` in `L₀(R-mod)[t]`, plus the same after `φ`.
pub fn check_tutte_f_identity(m: &RealizedMatroid) -> Result<CheckReport> {
    let table = SubsetTable::build(m)?;
    let t = grothendieck_tutte_from_table(&table);
    let f = GrothFVector::from_table(&table);
    let lhs = t.at_y_one();
    let rhs = f.f_polynomial();
    let mut report = CheckReport::new("Tutte polynomial specializes to the f-polynomial");
    report.expect("T(t,1) = Σ f_{i-1} (t-1)^{r-i}", lhs == rhs, || {
        alloc::format!("T(t,1) = {lhs}, f-polynomial = {rhs}")
    });
    let numeric_lhs = phi_tilde(&lhs);
    let numeric_rhs = phi_tilde(&rhs);
    report.expect("numeric specialization", numeric_lhs == numeric_rhs, || {
        alloc::format!("{numeric_lhs} vs {numeric_rhs}")
    });
    let h = f.h_vector();
    let numeric_h: Vec<BigInt> = h.iter().map(phi).collect();
    report.expect("φ(h) = h(φ(f))", numeric_h == f_to_h(&f.numeric()), || alloc::format!("{numeric_h:?}"));
    Ok(report)
}

/// Deletion-contraction for every element. Loop and coloop branches are only
/// asserted under their hypotheses (`M(∅)` torsion-free, resp. `M(E) = 0`).
pub fn check_deletion_contraction(m: &RealizedMatroid) -> Result<CheckReport> {
    let t = grothendieck_tutte(m)?;
    let torsion_free = m.empty_is_torsion_free();
    let full_zero = m.full_is_zero();
    let mut report = CheckReport::new("deletion-contraction");
    for i in 0..m.len() {
        let label = m.labels()[i];
        match m.element_kind(i)? {
            ElementKind::Ordinary => {
                let d = grothendieck_tutte(&m.delete(i)?)?;
                let c = grothendieck_tutte(&m.contract(i)?)?;
                let sum = &d + &c;
                report.expect(alloc::format!("element {label}: T = T\\i + T/i"), t == sum, || {
                    alloc::format!("T = {t}, T\\i + T/i = {sum}")
                });
            }
            ElementKind::Loop if !torsion_free => {
                report.push(
                    alloc::format!("element {label} (loop)"),
                    Outcome::Skipped("hypothesis unmet, skipped: M(∅) has torsion".into()),
                );
            }
            ElementKind::Loop => {
                let d = grothendieck_tutte(&m.delete(i)?)?;
                let rhs = &GTPoly::y() * &d;
                report.expect(alloc::format!("element {label} (loop): T = y T\\i"), t == rhs, || {
                    alloc::format!("T = {t}, y T\\i = {rhs}")
                });
            }
            ElementKind::Coloop if !full_zero => {
                report.push(
                    alloc::format!("element {label} (coloop)"),
                    Outcome::Skipped("hypothesis unmet, skipped: M(E) ≠ 0".into()),
                );
            }
            ElementKind::Coloop => {
                let c = grothendieck_tutte(&m.contract(i)?)?;
                let rhs = &GTPoly::x() * &c;
                report.expect(alloc::format!("element {label} (coloop): T = x T/i"), t == rhs, || {
                    alloc::format!("T = {t}, x T/i = {rhs}")
                });
            }
        }
    }
    Ok(report)
}
