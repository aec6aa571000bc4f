//! Field abstraction the simplex solver is generic over.

use std::fmt::Debug;

use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// An ordered field usable as LP data.
///
/// Exact types compare against zero exactly. Floating point types use a
/// small absolute tolerance, which is enough for the generic entry point but
/// gives no certificates.
pub trait LpScalar: Clone + Debug + PartialOrd + Num + Signed {
    fn is_exact() -> bool;

    fn is_zero_tol(&self) -> bool;

    fn is_positive_tol(&self) -> bool {
        !self.is_zero_tol() && self.is_positive()
    }

    fn is_negative_tol(&self) -> bool {
        !self.is_zero_tol() && self.is_negative()
    }
}

impl LpScalar for BigRational {
    fn is_exact() -> bool {
        true
    }

    fn is_zero_tol(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl LpScalar for Ratio<i64> {
    fn is_exact() -> bool {
        true
    }

    fn is_zero_tol(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

macro_rules! float_scalar {
    ($t:ty, $eps:expr) => {
        impl LpScalar for $t {
            fn is_exact() -> bool {
                false
            }

            fn is_zero_tol(&self) -> bool {
                self.abs() <= $eps
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-5);
