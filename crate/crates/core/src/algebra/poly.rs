use super::{rat, AlgebraError, ExactDiv, PolyC, Ring};
use num_traits::{One, Zero};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Dense univariate polynomial with coefficients in `T`, stored in ascending
/// degree order. The coefficient vector never ends in a zero, so the zero
/// polynomial is the empty vector and structural equality is mathematical
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(value: T) -> Self {
        Self::new(vec![value])
    }

    /// `coeff * x^degree`
    pub fn monomial(coeff: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree];
        coeffs.push(coeff);
        Self::new(coeffs)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> T {
        self.coeffs.get(degree).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * factor.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Keep only the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Pseudo-remainder: the `r` in `lc(rhs)^(deg self - deg rhs + 1) * self = q * rhs + r`.
    /// Needs no division in `T`.
    pub fn pseudo_rem(&self, rhs: &Self) -> Self {
        let dr = rhs.degree().expect("pseudo-remainder by zero polynomial");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dr {
            return self.clone();
        }
        let lead = rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut steps = ds - dr + 1;
        for top in (dr..=ds).rev() {
            let t = rem[top].clone();
            for a in rem.iter_mut().take(top + 1) {
                *a = a.clone() * lead.clone();
            }
            if !t.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    let idx = top - dr + j;
                    rem[idx] = rem[idx].clone() - t.clone() * b.clone();
                }
            }
            steps -= 1;
        }
        debug_assert_eq!(steps, 0);
        rem.truncate(dr);
        Self::new(rem)
    }
}

impl<T: ExactDiv> Poly<T> {
    /// Quotient and remainder of long division. Requires each leading-term
    /// division to be exact in `T` (always true over a field).
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self), AlgebraError> {
        let dr = rhs.degree().ok_or(AlgebraError::DivisionByZero)?;
        let Some(ds) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if ds < dr {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = rhs.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); ds - dr + 1];
        for top in (dr..=ds).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let q = rem[top].exact_div(lead)?;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let idx = top - dr + j;
                rem[idx] = rem[idx].clone() - q.clone() * b.clone();
            }
            quot[top - dr] = q;
        }
        rem.truncate(dr);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Divide every coefficient exactly by `d`.
    pub fn div_scalar(&self, d: &T) -> Result<Self, AlgebraError> {
        let coeffs = self.coeffs.iter().map(|a| a.exact_div(d)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }
}

impl<T: ExactDiv> ExactDiv for Poly<T> {
    fn exact_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if rhs.is_constant() {
            return self.div_scalar(&rhs.coeffs[0]);
        }
        let (q, r) = self.div_rem(rhs).map_err(|e| match e {
            AlgebraError::DivisionByZero => e,
            _ => AlgebraError::InexactDivision,
        })?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }
}

impl<T: Ring> From<T> for Poly<T> {
    fn from(value: T) -> Self {
        Self::constant(value)
    }
}

impl<'a, T: Ring> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a = a.clone() + b.clone();
        }
        Poly::new(coeffs)
    }
}

impl<'a, T: Ring> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(coeffs)
    }
}

impl<'a, T: Ring> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

macro_rules! forward_by_value {
    ($($tr:ident $method:ident),*) => {$(
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_by_value!(Add add, Sub sub, Mul mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring> AddAssign<&Poly<T>> for Poly<T> {
    fn add_assign(&mut self, rhs: &Poly<T>) {
        *self = &*self + rhs;
    }
}

impl<T: Ring> SubAssign<&Poly<T>> for Poly<T> {
    fn sub_assign(&mut self, rhs: &Poly<T>) {
        *self = &*self - rhs;
    }
}

impl PolyC {
    /// Build from integer coefficients in ascending degree order.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&a| rat(a)).collect())
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_integer())
    }

    pub fn eval_int(&self, c: i64) -> super::Rat {
        self.eval(&rat(c))
    }
}

/// `(c - s)(c - s - 1)...(c - s - gamma + 1)`, i.e. `gamma! * binom(c - s, gamma)`:
/// the number of ways to give `gamma` classes pairwise distinct colors drawn
/// from the `c - s` colors outside an `s`-color palette.
pub fn falling_factorial_poly(s: u32, gamma: u32) -> PolyC {
    (0..gamma).fold(PolyC::one(), |acc, i| {
        let offset = -(i64::from(s) + i64::from(i));
        &acc * &PolyC::from_ints(&[offset, 1])
    })
}
