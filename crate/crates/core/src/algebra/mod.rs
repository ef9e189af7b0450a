//! Exact algebra: rationals, dense univariate polynomials over any coefficient
//! ring, the bivariate ring `Q[c][z]`, its fraction field, and the
//! fraction-free linear solver.
//!
//! Everything is generic over the coefficient ring through [`Ring`],
//! [`ExactDiv`] and [`GcdDomain`]. The concrete instantiations used by the
//! rest of the crate are [`Rat`], [`PolyC`] (`Q[c]`) and [`PolyZC`]
//! (`Q[c][z]`, stored as a polynomial in `z` whose coefficients are
//! polynomials in `c`).

mod bivariate;
mod gcd;
mod linsolve;
mod poly;
mod ratfunc;
mod series;

pub use bivariate::{bivar_gcd, Term};
pub use linsolve::{solve_fraction_free, solve_linear_system, solve_over_integers, FractionFreeSolution};
pub use poly::{falling_factorial_poly, Poly};
pub use ratfunc::RatFunc;
pub use series::series_coefficients;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Univariate polynomial in the color variable `c`.
pub type PolyC = Poly<Rat>;

/// Bivariate polynomial in `z` and `c`, viewed as univariate in `z`.
pub type PolyZC = Poly<PolyC>;

/// `Z[c]`: the integer-coefficient working form used inside elimination
/// and gcd, where coefficient arithmetic is much cheaper than over `Q`.
pub type IntPolyC = Poly<BigInt>;

/// `Z[c][z]`.
pub type IntPolyZC = Poly<IntPolyC>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("inexact division")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("singular system")]
    SingularSystem,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("denominator vanishes at z=0")]
    NoPowerSeries,
}

/// Commutative ring with identity. Blanket-implemented for every type with
/// the right operator set, so `f64`, `i64`, [`Rat`] and [`Poly<T>`] all
/// qualify.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + Debug + PartialEq + Zero + One + Neg<Output = T> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// Division that only succeeds when the quotient lies in the ring.
pub trait ExactDiv: Ring {
    fn exact_div(&self, rhs: &Self) -> Result<Self, AlgebraError>;
}

/// Integral domain with gcds and a choice of canonical associate.
pub trait GcdDomain: ExactDiv {
    /// A greatest common divisor, in unit-normal form. Zero iff both inputs
    /// are zero.
    fn gcd(&self, other: &Self) -> Self;

    /// The canonical associate of `self` (zero stays zero).
    fn unit_normal(&self) -> Self;
}

impl ExactDiv for Rat {
    fn exact_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
}

impl GcdDomain for Rat {
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            Rat::zero()
        } else {
            Rat::one()
        }
    }

    fn unit_normal(&self) -> Self {
        if self.is_zero() {
            Rat::zero()
        } else {
            Rat::one()
        }
    }
}

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (q, r) = self.div_rem(rhs);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }
}

impl GcdDomain for BigInt {
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn unit_normal(&self) -> Self {
        self.abs()
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}
