//! Exact rational arithmetic used for every DoF formula.
//!
//! Floating point never enters formula evaluation; floats appear only as a
//! convenience rendering next to the exact `num/den` pair.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

/// Builds `n/d` as an exact rational. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    BigRational::zero()
}

pub fn one() -> Rational {
    BigRational::one()
}

pub fn max(a: Rational, b: Rational) -> Rational {
    if a >= b {
        a
    } else {
        b
    }
}

pub fn min(a: Rational, b: Rational) -> Rational {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Serializable face of a rational: exact integer pair plus a convenience
/// float. Serialization fails only if the reduced terms exceed `i64`, which
/// does not happen at desk scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: i64,
    pub den: i64,
    pub value: f64,
}

impl RationalRepr {
    pub fn of(r: &Rational) -> Self {
        let num = r.numer().to_i64().unwrap_or_else(|| {
            panic!("rational numerator {} exceeds i64", r.numer());
        });
        let den = r.denom().to_i64().unwrap_or_else(|| {
            panic!("rational denominator {} exceeds i64", r.denom());
        });
        RationalRepr {
            num,
            den,
            value: to_f64(r),
        }
    }

    pub fn to_rational(&self) -> Rational {
        ratio(self.num, self.den)
    }
}

/// |a - b| <= tol * max(|b|, 1), evaluated in floats; used where a numeric
/// quantity is compared against an exact rational.
pub fn approx_eq_f64(a: f64, r: &Rational, tol: f64) -> bool {
    let b = to_f64(r);
    (a - b).abs() <= tol * b.abs().max(1.0)
}

/// Relative error of a float against an exact rational.
pub fn rel_err(a: f64, r: &Rational) -> f64 {
    let b = to_f64(r);
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
