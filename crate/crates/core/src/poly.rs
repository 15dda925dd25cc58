//! Dense univariate integer polynomials, plus Laurent polynomials for the
//! `t ↦ 1/t`-style substitutions.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `Σ coeffs[k] t^k`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(alloc::vec![c])
    }

    /// `c · t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(1 − t)^k`
    pub fn one_minus_t_pow(k: usize) -> Self {
        IntPoly::from_ints(&[1, -1]).pow(k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division by `1 − t`, if it divides.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // p(t) = (1 − t) q(t)  ⇔  q_k = Σ_{i≤k} p_i, with q of degree deg p − 1
        let n = self.coeffs.len();
        let mut q = Vec::with_capacity(n - 1);
        let mut acc = BigInt::zero();
        for c in &self.coeffs[..n - 1] {
            acc += c;
            q.push(acc.clone());
        }
        acc += &self.coeffs[n - 1];
        acc.is_zero().then(|| IntPoly::new(q))
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Writes `Σ c_k var^k` in descending degree, e.g. `2t^2 - t + 1`.
pub(crate) fn write_univariate(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, BigInt)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let show_coeff = k == 0 || !mag.is_one();
        if show_coeff {
            write!(f, "{mag}")?;
        }
        match k {
            0 => {}
            1 => f.write_str(var)?,
            _ => write!(f, "{var}^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, self.coeffs.iter().cloned().enumerate().rev(), "t")
    }
}

/// `t^low · Σ coeffs[k] t^k`, used where negative powers appear in intermediate steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        LaurentPoly { low: 0, coeffs: p.coeffs.clone() }.normalized()
    }

    /// `t^shift · p`
    pub fn shifted(p: &IntPoly, shift: i64) -> Self {
        LaurentPoly { low: shift, coeffs: p.coeffs.clone() }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    /// Smallest exponent with a nonzero coefficient; `None` for zero.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() {
            return other.clone();
        }
        if other.coeffs.is_empty() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let coeffs = (low..high).map(|e| self.coeff(e) + other.coeff(e)).collect();
        LaurentPoly { low, coeffs }.normalized()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.low;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// The polynomial part, if no negative exponent survives.
    pub fn to_poly(&self) -> Option<IntPoly> {
        if self.coeffs.is_empty() {
            return Some(IntPoly::zero());
        }
        if self.low < 0 {
            return None;
        }
        let mut coeffs = alloc::vec![BigInt::zero(); self.low as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Some(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_display() {
        let p = IntPoly::from_ints(&[2, 1, 1]);
        assert_eq!(p.to_string(), "t^2 + t + 2");
        assert_eq!(IntPoly::from_ints(&[0, -1, 3]).to_string(), "3t^2 - t");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::one_minus_t_pow(2), IntPoly::from_ints(&[1, -2, 1]));
        assert_eq!(p.eval(&BigInt::from(-1)), BigInt::from(2));
        assert_eq!(&p - &p, IntPoly::zero());
    }

    #[test]
    fn exact_division_by_one_minus_t() {
        let q = IntPoly::from_ints(&[3, 0, 5]);
        let p = &q * &IntPoly::from_ints(&[1, -1]);
        assert_eq!(p.div_one_minus_t(), Some(q));
        assert_eq!(IntPoly::from_ints(&[1, 1]).div_one_minus_t(), None);
    }

    #[test]
    fn laurent_cancellation() {
        let a = LaurentPoly::shifted(&IntPoly::from_ints(&[1, 2]), -1);
        let b = LaurentPoly::shifted(&IntPoly::from_ints(&[-1]), -1);
        let s = a.add(&b);
        assert_eq!(s.min_exponent(), Some(0));
        assert_eq!(s.to_poly(), Some(IntPoly::from_ints(&[2])));
        assert_eq!(a.to_poly(), None);
    }
}
