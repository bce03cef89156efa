//! Coefficient types.
//!
//! Chain and tabloid combinations only need ring operations, so they are
//! generic over [`Coeff`]. Elimination and character inner products divide,
//! so they ask for a [`Scalar`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

/// Ring coefficients for formal linear combinations.
pub trait Coeff:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Zero test used when pruning terms.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    /// The value as an exact integer, if it is one.
    fn to_i64_exact(&self) -> Option<i64>;
}

/// A field of coefficients.
pub trait Scalar: Coeff {
    /// Whether arithmetic is exact. Verification code refuses inexact fields.
    const EXACT: bool;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_i64_exact(&self) -> Option<i64> {
        Some(*self)
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_i64_exact(&self) -> Option<i64> {
        self.to_i64()
    }
}

impl Coeff for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn to_i64_exact(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;
}

impl Coeff for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;
}

macro_rules! float_coeff {
    ($t:ty, $eps:expr) => {
        impl Coeff for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
            fn is_negligible(&self) -> bool {
                self.abs() < $eps
            }
            fn to_i64_exact(&self) -> Option<i64> {
                let r = self.round();
                ((self - r).abs() < $eps).then(|| r as i64)
            }
        }
        impl Scalar for $t {
            const EXACT: bool = false;
        }
    };
}

float_coeff!(f64, 1e-9);
float_coeff!(f32, 1e-4);

/// Renders a coefficient as `p` or `p/q`.
pub fn exact_string<C: Coeff>(c: &C) -> String {
    c.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_formatting() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(exact_string(&half), "1/2");
        assert_eq!(exact_string(&BigRational::from_i64(-3)), "-3");
    }

    #[test]
    fn integrality() {
        assert_eq!(Ratio::<i64>::new(4, 2).to_i64_exact(), Some(2));
        assert_eq!(Ratio::<i64>::new(1, 2).to_i64_exact(), None);
        assert_eq!(2.0f64.to_i64_exact(), Some(2));
        assert!(1e-12f64.is_negligible());
    }
}
