//! Polynomial gcd over a gcd domain by the subresultant remainder sequence
//! with content stripping.

use super::{GcdDomain, Poly};
use num_traits::{One, Zero};

fn pow<T: GcdDomain>(base: &T, exp: usize) -> T {
    (0..exp).fold(T::one(), |acc, _| acc * base.clone())
}

impl<T: GcdDomain> Poly<T> {
    /// Gcd of the coefficients, unit-normal.
    pub fn content(&self) -> T {
        self.coeffs().iter().fold(T::zero(), |acc, a| if acc.is_one() { acc } else { acc.gcd(a) })
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.div_scalar(&self.content()).expect("content divides every coefficient")
    }

    fn subresultant_gcd_primitive(mut a: Self, mut b: Self) -> Self {
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = T::one();
        let mut h = T::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            if r.degree() == Some(0) {
                return Self::one();
            }
            let divisor = g.clone() * pow(&h, delta);
            a = b;
            b = r.div_scalar(&divisor).expect("subresultant division is exact");
            g = a.leading().unwrap().clone();
            if delta > 0 {
                h = pow(&g, delta).exact_div(&pow(&h, delta - 1)).expect("subresultant h update is exact");
            }
        }
    }
}

impl<T: GcdDomain> GcdDomain for Poly<T> {
    fn gcd(&self, other: &Self) -> Self {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Self::zero(),
            (true, false) => return other.unit_normal(),
            (false, true) => return self.unit_normal(),
            _ => {}
        }
        let d = self.content().gcd(&other.content());
        let g = Self::subresultant_gcd_primitive(self.primitive_part(), other.primitive_part());
        g.primitive_part().scale(&d).unit_normal()
    }

    fn unit_normal(&self) -> Self {
        let Some(lead) = self.leading() else {
            return Self::zero();
        };
        let unit = lead.unit_normal().exact_div(lead).expect("unit-normal associate differs by a unit");
        self.scale(&unit)
    }
}
