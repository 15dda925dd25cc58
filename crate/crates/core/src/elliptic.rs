//! Central elliptic arrangements `E^d → E` with endomorphism ring `Z`, `Z[i]` or `Z[w]`.

use alloc::string::String;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groth::IntPoly2;
use crate::matrix::RMatrix;
use crate::matroid::RealizedMatroid;
use crate::poly::{IntPoly, LaurentPoly};
use crate::ring::RingKind;
use crate::subset::Subset;
use crate::tutte::{binomial, tutte_numeric};

/// Column `i` of `matrix` is the isogeny `l_i : E^d → E`; hyperplanes are the kernels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticArrangement {
    matrix: RMatrix,
    matroid: RealizedMatroid,
}

impl EllipticArrangement {
    pub fn new(matrix: RMatrix) -> Result<Self> {
        let matroid = RealizedMatroid::realize(&matrix)?;
        Ok(EllipticArrangement { matrix, matroid })
    }

    pub fn endo_ring(&self) -> RingKind {
        self.matrix.ring()
    }

    pub fn ambient_power(&self) -> usize {
        self.matrix.rows()
    }

    pub fn len(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.cols() == 0
    }

    pub fn matroid(&self) -> &RealizedMatroid {
        &self.matroid
    }

    /// `m(S)`, the number of connected components of `∩_{i∈S} ker l_i`.
    pub fn multiplicity(&self, s: Subset) -> Result<BigInt> {
        Ok(self.matroid.module_of(s)?.0.torsion_cardinality())
    }
}

fn x_minus_one_pow(p: u32, q: u32) -> IntPoly2 {
    let sign = |e: u32| if e.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut out = IntPoly2::zero();
    for i in 0..=p {
        for j in 0..=q {
            out.add_term((i, j), binomial(p, i) * sign(p - i) * binomial(q, j) * sign(q - j));
        }
    }
    out
}

/// `T^e(x, y) = Σ_S m(S) (x−1)^{r′−rk S} (y−1)^{|S|−rk S}`.
///
/// Summed directly from the multiplicities and required to agree with the
/// Grothendieck-Tutte evaluation of the realized matroid.
pub fn elliptic_tutte(e: &EllipticArrangement) -> Result<IntPoly2> {
    let m = e.matroid();
    let r = m.rank() as u32;
    let mut total = IntPoly2::zero();
    for s in Subset::all(m.len()) {
        let rk = m.generic_rank(s)? as u32;
        let mult = e.multiplicity(s)?;
        let term = x_minus_one_pow(r - rk, s.len() as u32 - rk);
        total = &total + &(&term * &IntPoly2::from_terms([((0, 0), mult)]));
    }
    let via_groth = tutte_numeric(m)?;
    if total != via_groth {
        return Err(Error::Internal(alloc::format!(
            "elliptic Tutte polynomial {total} differs from the Grothendieck evaluation {via_groth}"
        )));
    }
    Ok(total)
}

/// `t^n T^e(1 + (1+t)^2/t, 0)`, a polynomial in `t`.
pub fn bibby_series(e: &EllipticArrangement) -> Result<IntPoly> {
    let t = elliptic_tutte(e)?;
    series_from_tutte(&t, e.len())
}

/// The substitution behind [`bibby_series`], for any `T` and ground size `n`.
pub fn series_from_tutte(t: &IntPoly2, n: usize) -> Result<IntPoly> {
    // x = (1 + 3t + t^2) / t
    let x_num = IntPoly::from_ints(&[1, 3, 1]);
    let mut acc = LaurentPoly::zero();
    for (&(i, j), c) in t.terms() {
        if j != 0 || c.is_zero() {
            continue;
        }
        let term = x_num.pow(i as usize).scale(c);
        acc = acc.add(&LaurentPoly::shifted(&term, n as i64 - i as i64));
    }
    acc.to_poly().ok_or_else(|| Error::Internal(String::from("negative powers of t survive in the series")))
}

/// Value of [`bibby_series`] at `t = −1`.
pub fn euler_characteristic(e: &EllipticArrangement) -> Result<BigInt> {
    Ok(bibby_series(e)?.eval(&BigInt::from(-1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{RingElement, RingKind::*};
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn running_example() {
        let g = |a, b| RingElement::new(Gaussian, a, b);
        let m = RMatrix::from_rows(Gaussian, vec![vec![g(1, 0), g(1, 1)], vec![g(1, 1), g(0, 0)]]).unwrap();
        let e = EllipticArrangement::new(m).unwrap();
        assert_eq!(elliptic_tutte(&e).unwrap().to_string(), "x^2 + x + 2");
        // (1+3t+t^2)^2 + t(1+3t+t^2) + 2t^2
        assert_eq!(bibby_series(&e).unwrap(), IntPoly::from_ints(&[1, 7, 16, 7, 1]));
        assert_eq!(euler_characteristic(&e).unwrap(), BigInt::from(4));
    }

    #[test]
    fn empty_and_coloop() {
        let e = EllipticArrangement::new(RMatrix::zeros(Integers, 1, 0)).unwrap();
        assert_eq!(bibby_series(&e).unwrap(), IntPoly::one());
        assert_eq!(euler_characteristic(&e).unwrap(), BigInt::one());
        let e = EllipticArrangement::new(RMatrix::from_ints(Integers, &[&[1]]).unwrap()).unwrap();
        assert_eq!(elliptic_tutte(&e).unwrap().to_string(), "x");
        assert_eq!(bibby_series(&e).unwrap(), IntPoly::from_ints(&[1, 3, 1]));
        assert_eq!(euler_characteristic(&e).unwrap(), BigInt::from(-1));
    }
}
