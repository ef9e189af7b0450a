use super::{AlgebraError, GcdDomain, IntPolyZC, PolyC, PolyZC, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// One nonzero term `coeff * z^z_deg * c^c_deg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub z_deg: usize,
    pub c_deg: usize,
    pub coeff: Rat,
}

impl PolyZC {
    /// The variable `z`.
    pub fn z() -> Self {
        Self::var()
    }

    /// The variable `c`, as a `z`-constant.
    pub fn c() -> Self {
        Self::constant(PolyC::var())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for t in terms {
            if rows.len() <= t.z_deg {
                rows.resize(t.z_deg + 1, Vec::new());
            }
            let row = &mut rows[t.z_deg];
            if row.len() <= t.c_deg {
                row.resize(t.c_deg + 1, Rat::zero());
            }
            row[t.c_deg] += t.coeff;
        }
        Self::new(rows.into_iter().map(PolyC::new).collect())
    }

    /// Nonzero terms in the canonical order: lexicographic by
    /// `(z_deg, c_deg)`, ascending.
    pub fn terms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        for (z_deg, row) in self.coeffs().iter().enumerate() {
            for (c_deg, coeff) in row.coeffs().iter().enumerate() {
                if !coeff.is_zero() {
                    out.push(Term { z_deg, c_deg, coeff: coeff.clone() });
                }
            }
        }
        out
    }

    /// The polynomial in `c` obtained by setting `z = 0`.
    pub fn at_z0(&self) -> PolyC {
        self.coeff(0)
    }

    pub fn c_degree(&self) -> Option<usize> {
        self.coeffs().iter().filter_map(|p| p.degree()).max()
    }

    pub fn eval_at(&self, z: &Rat, c: &Rat) -> Rat {
        self.coeffs().iter().rev().fold(Rat::zero(), |acc, row| acc * z + row.eval(c))
    }

    /// Multiply every coefficient by a rational.
    pub fn scale_rat(&self, factor: &Rat) -> Self {
        self.map(|row| row.scale(factor))
    }

    /// Positive rational `q` such that `self / q` has coprime integer
    /// coefficients. `None` for zero.
    pub fn rational_content(&self) -> Option<Rat> {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        let mut any = false;
        for row in self.coeffs() {
            for a in row.coeffs() {
                if a.is_zero() {
                    continue;
                }
                any = true;
                num = Integer::gcd(&num, a.numer());
                den = Integer::lcm(&den, a.denom());
            }
        }
        any.then(|| Rat::new(num, den))
    }

    /// Split as `factor * int_form` with `factor > 0` and `int_form` having
    /// coprime integer coefficients. Zero maps to `(0, 1)`.
    pub fn to_integer(&self) -> (IntPolyZC, Rat) {
        let Some(content) = self.rational_content() else {
            return (IntPolyZC::zero(), Rat::one());
        };
        let scaled = self.scale_rat(&content.recip());
        let int_form = scaled.map(|row| row.map(|a| a.to_integer()));
        (int_form, content)
    }

    pub fn from_integer(p: &IntPolyZC) -> Self {
        p.map(|row| row.map(|a| Rat::from_integer(a.clone())))
    }

    /// Coefficient of the first term in the canonical order.
    pub fn lowest_term_coeff(&self) -> Option<Rat> {
        self.terms().into_iter().next().map(|t| t.coeff)
    }

    /// Canonical associate: coprime integer coefficients, first term in
    /// canonical order positive. Also returns the rational that was divided
    /// out, so a companion polynomial can be rescaled consistently.
    pub fn canonical_form(&self) -> (Self, Rat) {
        let Some(content) = self.rational_content() else {
            return (Self::zero(), Rat::one());
        };
        let sign = if self.lowest_term_coeff().unwrap().is_negative() { -Rat::one() } else { Rat::one() };
        let factor = content * sign;
        (self.scale_rat(&factor.recip()), factor)
    }
}

/// Gcd of two bivariate polynomials, in canonical form (see
/// [`PolyZC::canonical_form`]).
pub fn bivar_gcd(a: &PolyZC, b: &PolyZC) -> Result<PolyZC, AlgebraError> {
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::GcdOfZeros);
    }
    let (ia, _) = a.to_integer();
    let (ib, _) = b.to_integer();
    Ok(PolyZC::from_integer(&ia.gcd(&ib)).canonical_form().0)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ExactDiv};
    use super::*;

    fn c(coeffs: &[i64]) -> PolyC {
        PolyC::from_ints(coeffs)
    }

    fn zc(rows: &[&[i64]]) -> PolyZC {
        PolyZC::new(rows.iter().map(|r| c(r)).collect())
    }

    /// Two polynomials are associates when each divides the other.
    fn associates(a: &PolyZC, b: &PolyZC) -> bool {
        a.exact_div(b).is_ok() && b.exact_div(a).is_ok()
    }

    #[test]
    fn common_factor_in_c() {
        let a = zc(&[&[], &[-1, 1]]);
        let b = zc(&[&[1, -2, 1]]);
        let g = bivar_gcd(&a, &b).unwrap();
        assert!(associates(&g, &zc(&[&[-1, 1]])));
        // canonical sign: first term (z^0 c^0) positive
        assert_eq!(g, zc(&[&[1, -1]]));
    }

    #[test]
    fn coprime_inputs() {
        let a = zc(&[&[1], &[1]]);
        let b = zc(&[&[1, 1]]);
        assert_eq!(bivar_gcd(&a, &b).unwrap(), PolyZC::one());
    }

    #[test]
    fn shared_denominator_factor() {
        // (1+z)(1-(c-1)z) and (1-(c-1)z)^2
        let d = zc(&[&[1], &[1, -1]]);
        let a = &zc(&[&[1], &[1]]) * &d;
        let b = &d * &d;
        let g = bivar_gcd(&a, &b).unwrap();
        assert_eq!(g, d);
        let ca = a.exact_div(&g).unwrap();
        let cb = b.exact_div(&g).unwrap();
        assert_eq!(bivar_gcd(&ca, &cb).unwrap(), PolyZC::one());
    }

    #[test]
    fn both_zero_is_error() {
        assert_eq!(bivar_gcd(&PolyZC::zero(), &PolyZC::zero()), Err(AlgebraError::GcdOfZeros));
    }

    #[test]
    fn canonical_form_clears_denominators() {
        let half = Rat::new(1.into(), 2.into());
        let p = PolyZC::from_terms([
            Term { z_deg: 0, c_deg: 0, coeff: -half.clone() },
            Term { z_deg: 1, c_deg: 2, coeff: rat(3) },
        ]);
        let (q, f) = p.canonical_form();
        assert_eq!(q, zc(&[&[1], &[0, 0, -6]]));
        assert_eq!(f, -half);
    }

    #[test]
    fn terms_are_lex_ordered() {
        let p = zc(&[&[1], &[1, -1]]);
        let keys: Vec<_> = p.terms().iter().map(|t| (t.z_deg, t.c_deg)).collect();
        assert_eq!(keys, vec![(0, 0), (1, 0), (1, 1)]);
        assert_eq!(PolyZC::from_terms(p.terms()), p);
    }
}
