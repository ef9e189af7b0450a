use super::{AlgebraError, ExactDiv, GcdDomain, PolyC, PolyZC, Rat};
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced quotient of two bivariate polynomials whose denominator has a
/// nonzero constant-in-`z` part, so it expands as a power series in `z`.
///
/// Normal form: numerator and denominator coprime; denominator with coprime
/// integer coefficients and a positive first term in `(z, c)` lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: PolyZC,
    den: PolyZC,
}

impl RatFunc {
    pub fn new(num: PolyZC, den: PolyZC) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        // reduce in Z[c][z]: num = fn * inum, den = fd * iden
        let (inum, fnum) = num.to_integer();
        let (iden, fden) = den.to_integer();
        let g = inum.gcd(&iden);
        let num = PolyZC::from_integer(&inum.exact_div(&g)?);
        let den = PolyZC::from_integer(&iden.exact_div(&g)?);
        if den.at_z0().is_zero() {
            return Err(AlgebraError::NoPowerSeries);
        }
        let (den, factor) = den.canonical_form();
        let num = num.scale_rat(&(fnum / fden / factor));
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: PolyZC) -> Self {
        RatFunc { num: p, den: PolyZC::one() }
    }

    pub fn numer(&self) -> &PolyZC {
        &self.num
    }

    pub fn denom(&self) -> &PolyZC {
        &self.den
    }

    pub fn into_parts(self) -> (PolyZC, PolyZC) {
        (self.num, self.den)
    }

    pub fn eval_at(&self, z: &Rat, c: &Rat) -> Option<Rat> {
        let d = self.den.eval_at(z, c);
        (!d.is_zero()).then(|| self.num.eval_at(z, c) / d)
    }

    /// `self` with every `z`-constant term of the expansion removed, i.e.
    /// `F - F(0, c)`. Requires `F(0, c)` to be a polynomial.
    pub fn drop_constant_term(&self) -> Result<Self, AlgebraError> {
        let head = self.num.at_z0().exact_div(&self.den.at_z0())?;
        Ok(self - &RatFunc::from_poly(PolyZC::constant(head)))
    }

    /// The `z^0` coefficient of the expansion, `F(0, c)`.
    pub fn constant_term(&self) -> Result<PolyC, AlgebraError> {
        self.num.at_z0().exact_div(&self.den.at_z0())
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: PolyZC::zero(), den: PolyZC::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(PolyZC::one())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("denominators nonzero at z=0")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominators nonzero at z=0")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn zc(rows: &[&[i64]]) -> PolyZC {
        PolyZC::new(rows.iter().map(|r| PolyC::from_ints(r)).collect())
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        // -(1+z)(1-cz) / -(1-cz)^2 * 3
        let d = zc(&[&[1], &[0, -1]]);
        let num = -&(&zc(&[&[1], &[1]]) * &d);
        let den = (&d * &d).scale_rat(&rat(-3));
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f.denom(), &d);
        assert_eq!(f.numer(), &zc(&[&[1], &[1]]).scale_rat(&Rat::new(1.into(), 3.into())));
    }

    #[test]
    fn rejects_denominator_vanishing_at_origin() {
        assert_eq!(RatFunc::new(PolyZC::one(), PolyZC::z()), Err(AlgebraError::NoPowerSeries));
        assert_eq!(RatFunc::new(PolyZC::one(), PolyZC::zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn sum_of_fractions() {
        // 1 + cz/(1-(c-1)z) = (1+z)/(1-(c-1)z)
        let d = zc(&[&[1], &[1, -1]]);
        let f = RatFunc::new(zc(&[&[], &[0, 1]]), d.clone()).unwrap();
        let g = &RatFunc::one() + &f;
        assert_eq!(g, RatFunc::new(zc(&[&[1], &[1]]), d).unwrap());
        assert_eq!(g.drop_constant_term().unwrap(), f);
        assert_eq!(g.constant_term().unwrap(), PolyC::one());
    }
}
