//! Scalar traits for exact linear algebra and class coefficients.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};
use std::fmt::Debug;

/// A ring of coefficients: anything num-traits calls a signed number.
pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug {}

impl<T: Num + Signed + Clone + PartialOrd + Debug> Scalar for T {}

/// A scalar field in which Gaussian elimination is exact.
pub trait Field: Scalar {
    fn is_integral(&self) -> bool;
    fn to_i64(&self) -> Option<i64>;
    fn from_i64(x: i64) -> Self;
}

impl<I> Field for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + ToPrimitive + From<i32> + TryFrom<i64>,
{
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
    fn from_i64(x: i64) -> Self {
        match I::try_from(x) {
            Ok(v) => Ratio::from_integer(v),
            Err(_) => panic!("{x} does not fit the scalar type"),
        }
    }
}
