//! Exact arithmetic in ℤ, the Gaussian integers ℤ[i] and the Eisenstein integers ℤ[ω].
//!
//! Every supported ring is norm-Euclidean, so division with remainder, gcds and
//! canonical associates are all available without factoring. Elements carry their
//! ring; mixing rings in one operation is a programming error and panics.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The supported rings of integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingKind {
    /// ℤ.
    Integers,
    /// ℤ[i], with ω = i and ω² = −1.
    Gaussian,
    /// ℤ[ω], with ω a primitive cube root of unity: ω² = −1 − ω.
    Eisenstein,
}

impl RingKind {
    /// Instance-file name: `Z`, `Z[i]` or `Z[w]`.
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Integers => "Z",
            RingKind::Gaussian => "Z[i]",
            RingKind::Eisenstein => "Z[w]",
        }
    }

    /// Letter used for ω when rendering elements.
    pub fn symbol(self) -> Option<char> {
        match self {
            RingKind::Integers => None,
            RingKind::Gaussian => Some('i'),
            RingKind::Eisenstein => Some('w'),
        }
    }

    pub fn units(self) -> Vec<RingElement> {
        let e = |a: i64, b: i64| RingElement::new(self, a, b);
        match self {
            RingKind::Integers => alloc::vec![e(1, 0), e(-1, 0)],
            RingKind::Gaussian => alloc::vec![e(1, 0), e(0, 1), e(-1, 0), e(0, -1)],
            RingKind::Eisenstein => alloc::vec![e(1, 0), e(1, 1), e(0, 1), e(-1, 0), e(-1, -1), e(0, -1)],
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Z" => Ok(RingKind::Integers),
            "Z[i]" => Ok(RingKind::Gaussian),
            "Z[w]" => Ok(RingKind::Eisenstein),
            _ => Err(Error::Parse { input: s.to_string(), reason: "expected one of Z, Z[i], Z[w]" }),
        }
    }
}

/// An element `a + b·ω` of a supported ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement {
    ring: RingKind,
    a: BigInt,
    b: BigInt,
}

impl RingElement {
    /// Panics if `ring` is ℤ and `b ≠ 0`.
    pub fn new(ring: RingKind, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self::try_new(ring, a.into(), b.into()).expect("nonzero ω-coordinate in Z")
    }

    pub fn try_new(ring: RingKind, a: BigInt, b: BigInt) -> Result<Self> {
        if ring == RingKind::Integers && !b.is_zero() {
            return Err(Error::Parse { input: alloc::format!("({a}, {b})"), reason: "Z has no ω-coordinate" });
        }
        Ok(RingElement { ring, a, b })
    }

    pub fn from_int(ring: RingKind, a: impl Into<BigInt>) -> Self {
        RingElement { ring, a: a.into(), b: BigInt::zero() }
    }

    pub fn zero(ring: RingKind) -> Self {
        Self::from_int(ring, 0)
    }

    pub fn one(ring: RingKind) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn ring(&self) -> RingKind {
        self.ring
    }

    /// Rational coordinate.
    pub fn re(&self) -> &BigInt {
        &self.a
    }

    /// ω-coordinate.
    pub fn om(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// The absolute norm, which equals the cardinality of `R/(self)` for nonzero elements.
    pub fn norm(&self) -> BigInt {
        let (a, b) = (&self.a, &self.b);
        match self.ring {
            RingKind::Integers => a.abs(),
            RingKind::Gaussian => a * a + b * b,
            RingKind::Eisenstein => a * a - a * b + b * b,
        }
    }

    pub fn conj(&self) -> Self {
        let (a, b) = match self.ring {
            RingKind::Integers | RingKind::Gaussian => (self.a.clone(), -&self.b),
            RingKind::Eisenstein => (&self.a - &self.b, -&self.b),
        };
        RingElement { ring: self.ring, a, b }
    }

    /// `self · ω`, in coordinates. Only meaningful for the quadratic rings.
    fn times_omega(&self) -> Self {
        let (a, b) = match self.ring {
            RingKind::Integers => (BigInt::zero(), BigInt::zero()),
            RingKind::Gaussian => (-&self.b, self.a.clone()),
            RingKind::Eisenstein => (-&self.b, &self.a - &self.b),
        };
        RingElement { ring: self.ring, a, b }
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "ring mismatch in arithmetic");
    }

    /// Euclidean division: `self = q·d + r` with `N(r) < N(d)`.
    ///
    /// Over ℤ the remainder is the non-negative one. Over the quadratic rings the
    /// exact quotient `self/d` is rounded coordinate-wise to the nearest lattice point.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_ring(d);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = match self.ring {
            RingKind::Integers => {
                let r = self.a.mod_floor(&d.a.abs());
                RingElement::from_int(self.ring, (&self.a - r) / &d.a)
            }
            _ => {
                let num = self * &d.conj();
                let n = d.norm();
                RingElement { ring: self.ring, a: round_div(&num.a, &n), b: round_div(&num.b, &n) }
            }
        };
        let r = self - &(&q * d);
        debug_assert!(r.norm() < d.norm());
        Ok((q, r))
    }

    /// `Some(q)` with `self = q·d` if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return if self.is_zero() { Some(self.clone()) } else { None };
        }
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Normalized generator of the ideal `(self, other)`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_ring(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut x, mut y) = (self.clone(), other.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.normalize_associate().1)
    }

    /// Returns `(u, ā)` with `u` a unit and `ā = u·self` the canonical associate.
    ///
    /// Canonical associates: ℤ, positive; ℤ[i], `a > 0, b ≥ 0`; ℤ[ω], `a > b ≥ 0`
    /// (the sector of arguments `[0, π/3)`). Zero normalizes to itself with `u = 1`.
    pub fn normalize_associate(&self) -> (Self, Self) {
        if self.is_zero() {
            return (Self::one(self.ring), self.clone());
        }
        for u in self.ring.units() {
            let candidate = &u * self;
            if candidate.in_fundamental_sector() {
                return (u, candidate);
            }
        }
        unreachable!("every nonzero element has an associate in the fundamental sector")
    }

    pub fn normalized(&self) -> Self {
        self.normalize_associate().1
    }

    fn in_fundamental_sector(&self) -> bool {
        let zero = BigInt::zero();
        match self.ring {
            RingKind::Integers => self.a > zero,
            RingKind::Gaussian => self.a > zero && self.b >= zero,
            RingKind::Eisenstein => self.b >= zero && self.a > self.b,
        }
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.conj())
    }

    /// Parses the grammar produced by `Display`: `a`, `a+bi`, `-i`, `3-2w`, …
    pub fn parse(ring: RingKind, s: &str) -> Result<Self> {
        let err = |reason| Error::Parse { input: s.to_string(), reason };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty element"));
        }
        let symbol = ring.symbol();
        let mut re: Option<BigInt> = None;
        let mut om: Option<BigInt> = None;
        let bytes = compact.as_bytes();
        let mut start = 0;
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && bytes[end] != b'+' && bytes[end] != b'-' {
                end += 1;
            }
            let term = &compact[start..end];
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-1, &term[1..]),
                b'+' => (1, &term[1..]),
                _ => (1, term),
            };
            let is_omega = symbol.is_some_and(|c| body.ends_with(c));
            let digits = if is_omega { &body[..body.len() - 1] } else { body };
            let value = if digits.is_empty() {
                if !is_omega {
                    return Err(err("dangling sign"));
                }
                BigInt::one()
            } else {
                if !digits.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(err("unexpected character"));
                }
                digits.parse::<BigInt>().map_err(|_| err("bad integer"))?
            } * sign;
            let slot = if is_omega { &mut om } else { &mut re };
            if slot.replace(value).is_some() {
                return Err(err("repeated term"));
            }
            start = end;
        }
        Ok(RingElement { ring, a: re.unwrap_or_default(), b: om.unwrap_or_default() })
    }
}

/// Nearest integer to `p / n` for `n > 0`, ties rounded up.
fn round_div(p: &BigInt, n: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (p * &two + n).div_floor(&(n * two))
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(sym) = self.ring.symbol() else {
            return write!(f, "{}", self.a);
        };
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            f.write_str(if self.b.is_negative() { "-" } else { "+" })?;
        } else if self.b.is_negative() {
            f.write_str("-")?;
        }
        let mag = self.b.abs();
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        write!(f, "{sym}")
    }
}

impl<'a> Add<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.check_ring(rhs);
        RingElement { ring: self.ring, a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.check_ring(rhs);
        RingElement { ring: self.ring, a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.check_ring(rhs);
        let (a, b, c, d) = (&self.a, &self.b, &rhs.a, &rhs.b);
        let (re, om) = match self.ring {
            RingKind::Integers => (a * c, BigInt::zero()),
            RingKind::Gaussian => (a * c - b * d, a * d + b * c),
            // ω² = −1 − ω
            RingKind::Eisenstein => {
                let bd = b * d;
                (a * c - &bd, a * d + b * c - bd)
            }
        };
        RingElement { ring: self.ring, a: re, b: om }
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement { ring: self.ring, a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// Canonical representatives of `R/(d)` for nonzero `d`.
///
/// The ideal `(d)` is a full-rank sublattice of `R ≅ ℤ²` (coordinates `(a, b)` of
/// `a + bω`). Its Hermite basis `{(m, n₂), (n₁, 0)}` makes the box
/// `0 ≤ a < n₁, 0 ≤ b < n₂` a fundamental domain with exactly `N(d) = n₁n₂` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSystem {
    modulus: RingElement,
    first: BigInt,
    shear: BigInt,
    second: BigInt,
}

impl ResidueSystem {
    pub fn new(modulus: &RingElement) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = modulus.ring;
        let (first, shear, second) = if ring == RingKind::Integers {
            (modulus.a.abs(), BigInt::zero(), BigInt::one())
        } else {
            let v = (modulus.a.clone(), modulus.b.clone());
            let wm = modulus.times_omega();
            let w = (wm.a, wm.b);
            let eg = v.1.extended_gcd(&w.1);
            let g = eg.gcd.abs();
            // row1 = x·v + y·w = (s, ±g); row2 = (w₁/g)·v − (v₁/g)·w = (t, 0)
            let (s, g) = if eg.gcd.is_negative() {
                (-(&eg.x * &v.0 + &eg.y * &w.0), g)
            } else {
                (&eg.x * &v.0 + &eg.y * &w.0, g)
            };
            let t = (&w.1 / &g) * &v.0 - (&v.1 / &g) * &w.0;
            let first = t.abs();
            (first.clone(), s.mod_floor(&first), g)
        };
        debug_assert_eq!(&first * &second, modulus.norm());
        Ok(ResidueSystem { modulus: modulus.clone(), first, shear, second })
    }

    pub fn modulus(&self) -> &RingElement {
        &self.modulus
    }

    /// `|R/(d)|`.
    pub fn cardinality(&self) -> BigInt {
        &self.first * &self.second
    }

    /// The canonical representative of `x + (d)`.
    pub fn reduce(&self, x: &RingElement) -> RingElement {
        let b = x.b.mod_floor(&self.second);
        let k = (&x.b - &b) / &self.second;
        let a = (&x.a - k * &self.shear).mod_floor(&self.first);
        RingElement { ring: x.ring, a, b }
    }

    /// Position of a reduced representative in the enumeration order.
    pub fn index_of(&self, reduced: &RingElement) -> u64 {
        let idx = &reduced.a * &self.second + &reduced.b;
        idx.to_u64().expect("residue index fits in u64")
    }

    /// Inverse of [`ResidueSystem::index_of`].
    pub fn element(&self, index: u64) -> RingElement {
        let idx = BigInt::from(index);
        let (a, b) = idx.div_mod_floor(&self.second);
        RingElement { ring: self.modulus.ring, a, b }
    }

    /// All canonical representatives, in index order.
    pub fn iter(&self) -> impl Iterator<Item = RingElement> + '_ {
        let count = self.cardinality().to_u64().expect("residue count fits in u64");
        (0..count).map(move |i| self.element(i))
    }
}

/// An element of the fraction field `Q(R)`, kept in lowest terms with a
/// normalized denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingFraction {
    num: RingElement,
    den: RingElement,
}

impl RingFraction {
    pub fn new(num: RingElement, den: RingElement) -> Result<Self> {
        num.check_ring(&den);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            let ring = num.ring;
            return Ok(RingFraction { num, den: RingElement::one(ring) });
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let (u, den) = den.normalize_associate();
        Ok(RingFraction { num: &u * &num, den })
    }

    pub fn from_element(x: RingElement) -> Self {
        let ring = x.ring;
        RingFraction { num: x, den: RingElement::one(ring) }
    }

    pub fn numer(&self) -> &RingElement {
        &self.num
    }

    pub fn denom(&self) -> &RingElement {
        &self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_integral(&self) -> Option<RingElement> {
        self.is_integral().then(|| self.num.clone())
    }

    /// Canonical representative of the coset `self + R` in `Q(R)/R`.
    pub fn mod_one(&self) -> Self {
        let rs = ResidueSystem::new(&self.den).expect("denominator is nonzero");
        RingFraction { num: rs.reduce(&self.num), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        RingFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RingFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use RingKind::*;

    fn g(a: i64, b: i64) -> RingElement {
        RingElement::new(Gaussian, a, b)
    }

    fn z(a: i64) -> RingElement {
        RingElement::from_int(Integers, a)
    }

    #[test]
    fn gaussian_divmod_exact() {
        let (q, r) = g(2, 0).div_rem(&g(1, 1)).unwrap();
        assert_eq!(q, g(1, -1));
        assert!(r.is_zero());
    }

    #[test]
    fn integer_divmod() {
        assert_eq!(z(7).div_rem(&z(3)).unwrap(), (z(2), z(1)));
        assert_eq!(z(-7).div_rem(&z(3)).unwrap(), (z(-3), z(2)));
        assert_eq!(z(7).div_rem(&z(-3)).unwrap(), (z(-2), z(1)));
    }

    #[test]
    fn gaussian_divmod_remainder_in_small_set() {
        let a = g(3, 2);
        let b = g(1, 1);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        // brute force: every element of norm < 2 within a box
        let small: Vec<_> =
            (-2..=2).flat_map(|x| (-2..=2).map(move |y| g(x, y))).filter(|e| e.norm() < BigInt::from(2)).collect();
        assert_eq!(small.len(), 5);
        assert!(small.contains(&r));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(g(1, 0).div_rem(&g(0, 0)), Err(Error::DivisionByZero));
        assert_eq!(z(0).gcd(&z(0)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(z(12).gcd(&z(8)).unwrap(), z(4));
        assert_eq!(g(1, 1).gcd(&g(2, 0)).unwrap(), g(1, 1));
        assert_eq!(g(0, -3).gcd(&g(0, 0)).unwrap(), g(3, 0));
        assert_eq!(z(-5).gcd(&z(0)).unwrap(), z(5));
    }

    #[test]
    fn gcd_matches_bruteforce_divisors() {
        // every common divisor of norm ≤ 4 of 1+i and 2 divides the gcd
        let d = g(1, 1).gcd(&g(2, 0)).unwrap();
        for x in -2..=2 {
            for y in -2..=2 {
                let c = g(x, y);
                if c.is_zero() || c.norm() > BigInt::from(4) {
                    continue;
                }
                if c.divides(&g(1, 1)) && c.divides(&g(2, 0)) {
                    assert!(c.divides(&d), "{c} should divide {d}");
                }
            }
        }
    }

    #[test]
    fn normalization() {
        assert_eq!(z(-5).normalize_associate(), (z(-1), z(5)));
        assert_eq!(g(-1, 1).normalize_associate(), (g(0, -1), g(1, 1)));
        assert_eq!(g(0, 0).normalize_associate(), (g(1, 0), g(0, 0)));
        let e = RingElement::new(Eisenstein, 1, 1);
        assert!(e.is_unit());
        assert!(e.normalized().is_one());
    }

    #[test]
    fn eisenstein_arithmetic() {
        let w = RingElement::new(Eisenstein, 0, 1);
        // ω² = −1 − ω, ω³ = 1
        assert_eq!(&w * &w, RingElement::new(Eisenstein, -1, -1));
        assert!((&(&w * &w) * &w).is_one());
        let x = RingElement::new(Eisenstein, 3, -2);
        assert_eq!((&x * &x.conj()).re(), &x.norm());
        assert!((&x * &x.conj()).om().is_zero());
    }

    #[test]
    fn display_and_parse() {
        let cases = vec![
            (g(3, -2), "3-2i"),
            (g(1, 1), "1+i"),
            (g(0, -1), "-i"),
            (g(0, 4), "4i"),
            (g(-7, 0), "-7"),
            (g(0, 0), "0"),
            (RingElement::new(Eisenstein, 2, 1), "2+w"),
        ];
        for (e, s) in cases {
            assert_eq!(e.to_string(), s);
            assert_eq!(RingElement::parse(e.ring(), s).unwrap(), e);
        }
        assert_eq!(RingElement::parse(Gaussian, " 1 + i ").unwrap(), g(1, 1));
        assert!(RingElement::parse(Integers, "1+i").is_err());
        assert!(RingElement::parse(Gaussian, "1+").is_err());
        assert!(RingElement::parse(Gaussian, "i+i").is_err());
    }

    #[test]
    fn residue_systems() {
        let rs = ResidueSystem::new(&g(1, 1)).unwrap();
        let all: Vec<_> = rs.iter().collect();
        assert_eq!(all, vec![g(0, 0), g(1, 0)]);
        let rs = ResidueSystem::new(&g(2, 0)).unwrap();
        assert_eq!(rs.cardinality(), BigInt::from(4));
        // representatives are pairwise incongruent
        let reps: Vec<_> = rs.iter().collect();
        for (i, x) in reps.iter().enumerate() {
            assert_eq!(rs.reduce(x), *x);
            assert_eq!(rs.index_of(x), i as u64);
            for y in &reps[i + 1..] {
                assert!(!g(2, 0).divides(&(x - y)));
            }
        }
        assert_eq!(rs.reduce(&g(5, -3)), rs.reduce(&g(1, 1)));
    }

    #[test]
    fn fractions() {
        let half = RingFraction::new(g(1, 0), g(2, 0)).unwrap();
        let x = RingFraction::new(g(1, -1), g(2, 0)).unwrap();
        // (1-i)/2 = 1/(1+i)
        assert_eq!(x, RingFraction::new(g(1, 0), g(1, 1)).unwrap());
        assert!(half.add(&half).is_integral());
        assert_eq!(half.mul(&RingFraction::from_element(g(2, 0))).to_integral(), Some(g(1, 0)));
        let y = RingFraction::new(g(3, 0), g(2, 0)).unwrap().mod_one();
        assert_eq!(y, half);
        assert!(RingFraction::new(g(1, 0), g(0, 0)).is_err());
    }
}
