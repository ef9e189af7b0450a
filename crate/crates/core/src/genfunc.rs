//! The rational generating function `F(z, c) = sum_n P_{M_n(G,C)}(c) z^n`.
//!
//! With transfer matrix `M` and single-layer vector `v`, the per-state
//! generating functions `f` satisfy `f = z v + z M^T f`, so
//! `(I - z M^T) f = z v` and `F = 1 + sum_T f_T`.

use crate::algebra::{series_coefficients, solve_over_integers, PolyC, PolyZC, RatFunc};
use crate::graphs::{Connector, Graph};
use crate::transfer::{initial_vector, transfer_matrix, TransferMatrix};
use crate::Error;
use num_traits::{One, Zero};

/// A generating function together with whether its `z^0` term (the empty
/// graph, one coloring) is included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFunc {
    pub value: RatFunc,
    pub includes_empty_term: bool,
}

impl GenFunc {
    /// The same series with the constant term `p_0 = 1` removed.
    pub fn without_empty_term(&self) -> Self {
        if !self.includes_empty_term {
            return self.clone();
        }
        GenFunc { value: &self.value - &RatFunc::one(), includes_empty_term: false }
    }

    /// `p_0..=p_order`.
    pub fn series(&self, order: usize) -> Result<Vec<PolyC>, Error> {
        Ok(series_coefficients(&self.value, order)?)
    }
}

/// Generating function for an already built transfer matrix.
pub fn generating_function_from_matrix(matrix: &TransferMatrix) -> Result<GenFunc, Error> {
    let n = matrix.size();
    let z = PolyZC::z();
    // row T, column S: delta(T, S) - z * M[S][T]
    let a: Vec<Vec<PolyZC>> = (0..n)
        .map(|t| {
            (0..n)
                .map(|s| {
                    let off = &z * &PolyZC::constant(matrix.entries[s][t].clone());
                    if s == t {
                        &PolyZC::one() - &off
                    } else {
                        -off
                    }
                })
                .collect()
        })
        .collect();
    let b: Vec<PolyZC> = initial_vector(&matrix.states).into_iter().map(|v| &z * &PolyZC::constant(v)).collect();

    let sol = solve_over_integers(&a, &b)?;
    let num = sol.numerators.iter().fold(sol.denominator.clone(), |acc, y| &acc + y);
    let value = RatFunc::new(num, sol.denominator)?;
    debug_assert!(!value.denom().is_zero());
    Ok(GenFunc { value, includes_empty_term: true })
}

pub fn generating_function(g: &Graph, connector: &Connector) -> Result<GenFunc, Error> {
    let matrix = transfer_matrix(g, connector)?;
    generating_function_from_matrix(&matrix)
}

/// `G x P_n` strips: the monogamy connector.
pub fn gf_cartesian(g: &Graph) -> Result<GenFunc, Error> {
    generating_function(g, &Connector::monogamy(g.m()))
}

/// Grid graphs `P_m x P_n` for fixed width `m`.
pub fn gf_grid(m: usize) -> Result<GenFunc, Error> {
    gf_cartesian(&Graph::path(m))
}
