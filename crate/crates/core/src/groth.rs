//! The ring `L₀(R-mod)` of formal integer combinations of module classes, with
//! product given by direct sum, and bivariate polynomials over it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::module::ModuleClass;

/// `Σ c_k [N_k]`, zero coefficients never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrothElement {
    terms: BTreeMap<ModuleClass, BigInt>,
}

impl GrothElement {
    pub fn zero() -> Self {
        GrothElement::default()
    }

    /// `1 = [0]`, the class of the zero module.
    pub fn one() -> Self {
        Self::class(ModuleClass::zero_module())
    }

    pub fn class(c: ModuleClass) -> Self {
        Self::term(c, BigInt::one())
    }

    pub fn term(c: ModuleClass, coeff: BigInt) -> Self {
        let mut e = GrothElement::zero();
        e.add_term(c, coeff);
        e
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::term(ModuleClass::zero_module(), n.into())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ModuleClass, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &ModuleClass) -> BigInt {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, c: ModuleClass, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(c.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn add_assign_ref(&mut self, other: &GrothElement) {
        for (c, k) in &other.terms {
            self.add_term(c.clone(), k.clone());
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return GrothElement::zero();
        }
        GrothElement { terms: self.terms.iter().map(|(c, v)| (c.clone(), v * k)).collect() }
    }

    /// Whether every class occurring is the zero module.
    pub fn is_integer(&self) -> bool {
        self.terms.keys().all(ModuleClass::is_zero_module)
    }
}

impl<'a> Add<&'a GrothElement> for &'a GrothElement {
    type Output = GrothElement;
    fn add(self, rhs: &GrothElement) -> GrothElement {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a GrothElement> for &'a GrothElement {
    type Output = GrothElement;
    fn sub(self, rhs: &GrothElement) -> GrothElement {
        self + &-rhs
    }
}

impl Neg for &GrothElement {
    type Output = GrothElement;
    fn neg(self) -> GrothElement {
        GrothElement { terms: self.terms.iter().map(|(c, v)| (c.clone(), -v)).collect() }
    }
}

impl<'a> Mul<&'a GrothElement> for &'a GrothElement {
    type Output = GrothElement;
    fn mul(self, rhs: &GrothElement) -> GrothElement {
        let mut out = GrothElement::zero();
        for (c1, k1) in &self.terms {
            for (c2, k2) in &rhs.terms {
                out.add_term(c1.direct_sum(c2), k1 * k2);
            }
        }
        out
    }
}

impl fmt::Display for GrothElement {
    /// `2[R/2] - [0]`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, k)) in self.terms.iter().enumerate() {
            let mag = k.abs();
            match (idx, k.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str("-")?,
                (_, false) => f.write_str("+")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `φ`: free modules go to 1, torsion to its cardinality; `φ([N]) = |tor N|`.
pub fn phi(e: &GrothElement) -> BigInt {
    e.terms.iter().map(|(c, k)| k * c.torsion_cardinality()).sum()
}

/// Exponent pair `(i, j)` of `x^i y^j`.
pub type Monomial = (u32, u32);

/// A polynomial in `x, y` with coefficients in `L₀(R-mod)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GTPoly {
    terms: BTreeMap<Monomial, GrothElement>,
}

impl GTPoly {
    pub fn zero() -> Self {
        GTPoly::default()
    }

    pub fn constant(e: GrothElement) -> Self {
        Self::monomial(e, 0, 0)
    }

    pub fn monomial(e: GrothElement, i: u32, j: u32) -> Self {
        let mut p = GTPoly::zero();
        p.add_term((i, j), &e);
        p
    }

    pub fn x() -> Self {
        Self::monomial(GrothElement::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(GrothElement::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GrothElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> GrothElement {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, e: &GrothElement) {
        if e.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        slot.add_assign_ref(e);
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Substitutes `y = 1`, giving a polynomial in `x` only (stored with `j = 0`).
    pub fn at_y_one(&self) -> GTPoly {
        let mut out = GTPoly::zero();
        for (&(i, _), e) in &self.terms {
            out.add_term((i, 0), e);
        }
        out
    }

    /// Whether every coefficient is a plain integer multiple of `[0]`.
    pub fn has_unit_coefficients(&self) -> bool {
        self.terms.values().all(GrothElement::is_integer)
    }

    /// Terms in graded-lex order: total degree descending, then `x`-degree descending.
    pub fn sorted_terms(&self) -> Vec<(Monomial, &GrothElement)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, e)| (*m, e)).collect();
        v.sort_by_key(|(m, _)| core::cmp::Reverse(graded_lex(m)));
        v
    }
}

fn graded_lex(&(i, j): &Monomial) -> (u32, u32) {
    (i + j, i)
}

impl<'a> Add<&'a GTPoly> for &'a GTPoly {
    type Output = GTPoly;
    fn add(self, rhs: &GTPoly) -> GTPoly {
        let mut out = self.clone();
        for (m, e) in &rhs.terms {
            out.add_term(*m, e);
        }
        out
    }
}

impl<'a> Sub<&'a GTPoly> for &'a GTPoly {
    type Output = GTPoly;
    fn sub(self, rhs: &GTPoly) -> GTPoly {
        let mut out = self.clone();
        for (m, e) in &rhs.terms {
            out.add_term(*m, &-e);
        }
        out
    }
}

impl<'a> Mul<&'a GTPoly> for &'a GTPoly {
    type Output = GTPoly;
    fn mul(self, rhs: &GTPoly) -> GTPoly {
        let mut out = GTPoly::zero();
        for (&(i1, j1), e1) in &self.terms {
            for (&(i2, j2), e2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), &(e1 * e2));
            }
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, (i, j): Monomial) -> fmt::Result {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push(alloc::string::String::from("x")),
        _ => parts.push(alloc::format!("x^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push(alloc::string::String::from("y")),
        _ => parts.push(alloc::format!("y^{j}")),
    }
    f.write_str(&parts.join(" "))
}

impl fmt::Display for GTPoly {
    /// `([R/(1+i)]+2[R/2]) x^2 y + [0] x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, e)) in self.sorted_terms().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if e.len() > 1 {
                write!(f, "({e})")?;
            } else {
                write!(f, "{e}")?;
            }
            if m != (0, 0) {
                f.write_str(" ")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `x, y` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly2 {
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        IntPoly2::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = IntPoly2::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms.iter().map(|(&(i, j), c)| c * x.pow(i) * y.pow(j)).sum()
    }

    /// Largest `x`-degree, 0 for the zero polynomial.
    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }
}

impl<'a> Add<&'a IntPoly2> for &'a IntPoly2 {
    type Output = IntPoly2;
    fn add(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a IntPoly2> for &'a IntPoly2 {
    type Output = IntPoly2;
    fn mul(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut out = IntPoly2::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for IntPoly2 {
    /// `x^2 + x + 2`, `3x y - y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| core::cmp::Reverse(graded_lex(m)));
        for (idx, (&m, c)) in v.into_iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m == (0, 0) {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write_monomial(f, m)?;
        }
        Ok(())
    }
}

/// `φ̃`: `φ` applied coefficient-wise.
pub fn phi_tilde(p: &GTPoly) -> IntPoly2 {
    IntPoly2::from_terms(p.terms.iter().map(|(m, e)| (*m, phi(e))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{RingElement, RingKind::*};
    use alloc::string::ToString;

    fn zc(d: i64) -> ModuleClass {
        ModuleClass::from_cyclic(0, &[RingElement::from_int(Integers, d)]).unwrap()
    }

    fn gc(a: i64, b: i64) -> ModuleClass {
        ModuleClass::from_cyclic(0, &[RingElement::new(Gaussian, a, b)]).unwrap()
    }

    #[test]
    fn product_is_direct_sum() {
        let a = GrothElement::class(zc(2));
        let b = GrothElement::class(zc(3));
        assert_eq!(&a * &b, GrothElement::class(zc(6)));
        assert_eq!(&a * &GrothElement::one(), a);
        let c = GrothElement::class(zc(5));
        assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&GrothElement::class(ModuleClass::free(2))), BigInt::from(1));
        assert_eq!(phi(&GrothElement::class(gc(1, 1))), BigInt::from(2));
        let e = &GrothElement::class(gc(1, 1)) + &GrothElement::class(gc(2, 0));
        assert_eq!(phi(&e), BigInt::from(6));
    }

    #[test]
    fn rendering() {
        let coeff = &GrothElement::class(gc(1, 1)) + &GrothElement::term(gc(2, 0), BigInt::from(2));
        let p = &GTPoly::monomial(coeff, 2, 1) + &GTPoly::monomial(GrothElement::one(), 1, 0);
        assert_eq!(p.to_string(), "([R/(1+i)]+2[R/2]) x^2 y + [0] x");
        let q = IntPoly2::from_terms([((2, 0), BigInt::from(1)), ((1, 0), BigInt::from(1)), ((0, 0), BigInt::from(2))]);
        assert_eq!(q.to_string(), "x^2 + x + 2");
        let r = IntPoly2::from_terms([((1, 1), BigInt::from(3)), ((0, 2), BigInt::from(-1))]);
        assert_eq!(r.to_string(), "3x y - y^2");
        assert_eq!(phi_tilde(&GTPoly::zero()), IntPoly2::zero());
        assert_eq!(phi_tilde(&GTPoly::monomial(GrothElement::class(zc(2)), 1, 0)).to_string(), "2x");
    }
}
