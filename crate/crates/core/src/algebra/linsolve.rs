//! Fraction-free (Bareiss) elimination for square systems over an integral
//! domain. Every intermediate value stays in the ring; the only divisions
//! are the exact Bareiss divisions by the previous pivot.

use super::{AlgebraError, ExactDiv, IntPolyZC, PolyZC, Rat, RatFunc};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

/// Solution of `A x = b` over the fraction field, as `x_i = numerators[i] / denominator`.
/// `denominator` is `±det(A)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionFreeSolution<T> {
    pub numerators: Vec<T>,
    pub denominator: T,
}

pub fn solve_fraction_free<T>(a: &[Vec<T>], b: &[T]) -> Result<FractionFreeSolution<T>, AlgebraError>
where
    T: ExactDiv + Send + Sync,
{
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::DimensionMismatch(format!("expected {n}x{n} matrix with {n}-vector")));
    }
    if n == 0 {
        return Ok(FractionFreeSolution { numerators: Vec::new(), denominator: T::one() });
    }

    let mut m: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut prev = T::one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(AlgebraError::SingularSystem)?;
        m.swap(k, pivot_row);

        let (top, rest) = m.split_at_mut(k + 1);
        let pivot = &top[k];
        rest.par_iter_mut().try_for_each(|row| -> Result<(), AlgebraError> {
            let factor = row[k].clone();
            for j in k + 1..=n {
                let cross = pivot[k].clone() * row[j].clone() - factor.clone() * pivot[j].clone();
                row[j] = cross.exact_div(&prev)?;
            }
            row[k] = T::zero();
            Ok(())
        })?;
        prev = m[k][k].clone();
    }

    let det = m[n - 1][n - 1].clone();
    let mut y: Vec<T> = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut acc = det.clone() * m[i][n].clone();
        for j in i + 1..n {
            acc = acc - m[i][j].clone() * y[j].clone();
        }
        y[i] = acc.exact_div(&m[i][i])?;
    }
    Ok(FractionFreeSolution { numerators: y, denominator: det })
}

/// Solve `A x = b` over `Q(z, c)`; each entry of the result is a reduced
/// [`RatFunc`].
pub fn solve_linear_system(a: &[Vec<PolyZC>], b: &[PolyZC]) -> Result<Vec<RatFunc>, AlgebraError> {
    let sol = solve_over_integers(a, b)?;
    sol.numerators.into_iter().map(|num| RatFunc::new(num, sol.denominator.clone())).collect()
}

/// Fraction-free solve of a rational system: each equation is scaled to
/// integer coefficients (which leaves the solution unchanged), eliminated
/// in `Z[c][z]`, and the result mapped back.
pub fn solve_over_integers(a: &[Vec<PolyZC>], b: &[PolyZC]) -> Result<FractionFreeSolution<PolyZC>, AlgebraError> {
    if b.len() != a.len() {
        return Err(AlgebraError::DimensionMismatch(format!("{} equations but {} right-hand sides", a.len(), b.len())));
    }
    let (ia, ib): (Vec<Vec<IntPolyZC>>, Vec<IntPolyZC>) = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let lcm = row
                .iter()
                .chain(std::iter::once(rhs))
                .flat_map(|p| p.coeffs().iter().flat_map(|r| r.coeffs().iter().map(|x| x.denom().clone())))
                .fold(BigInt::one(), |acc, d| acc.lcm(&d));
            let scale = Rat::from_integer(lcm);
            let to_int = |p: &PolyZC| p.scale_rat(&scale).map(|r| r.map(|x| x.to_integer()));
            (row.iter().map(to_int).collect(), to_int(rhs))
        })
        .unzip();
    let sol = solve_fraction_free(&ia, &ib)?;
    Ok(FractionFreeSolution {
        numerators: sol.numerators.iter().map(PolyZC::from_integer).collect(),
        denominator: PolyZC::from_integer(&sol.denominator),
    })
}
