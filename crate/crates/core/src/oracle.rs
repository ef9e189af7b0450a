//! Brute-force ground truth: count proper colorings of an explicit graph by
//! backtracking, then interpolate the chromatic polynomial through those
//! counts. Shares nothing with the transfer-matrix route beyond the graph
//! type and the polynomial container.

use crate::algebra::{rat, series_coefficients, Poly, PolyC, Ring};
use crate::genfunc::generating_function;
use crate::graphs::{build_layered_graph, Connector, Graph};
use crate::Error;
use num_traits::Zero;
use rayon::prelude::*;
use std::ops::Div;
use thiserror::Error;

/// Largest graph the oracle will interpolate.
pub const ORACLE_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle size limit: {vertices} vertices exceeds {ORACLE_MAX_VERTICES}")]
    SizeLimit { vertices: usize },
    #[error("interpolated polynomial is not monic with integer coefficients")]
    NotIntegral,
}

/// Number of maps `V(h) -> {1..=c0}` with no monochromatic edge.
///
/// Vertices are colored in index order. Colors never used so far are
/// interchangeable, so instead of branching on each of them the search
/// takes one representative and multiplies by how many there are.
pub fn count_proper_colorings(h: &Graph, c0: u32) -> u128 {
    let adj = h.adjacency();
    let back: Vec<Vec<usize>> =
        adj.iter().enumerate().map(|(v, ns)| ns.iter().copied().filter(|&u| u < v).collect()).collect();
    let mut colors = vec![0u32; h.m()];
    backtrack(&back, c0, &mut colors, 0, 0)
}

fn backtrack(back: &[Vec<usize>], c0: u32, colors: &mut [u32], v: usize, used: u32) -> u128 {
    if v == colors.len() {
        return 1;
    }
    let mut total = 0u128;
    for col in 1..=used {
        if back[v].iter().any(|&u| colors[u] == col) {
            continue;
        }
        colors[v] = col;
        total += backtrack(back, c0, colors, v + 1, used);
    }
    if used < c0 {
        colors[v] = used + 1;
        let unused = u128::from(c0 - used);
        total += unused * backtrack(back, c0, colors, v + 1, used + 1);
    }
    colors[v] = 0;
    total
}

/// Counts at `c0 = 0..=|V|`, i.e. the `ColoringCount` table.
pub fn coloring_counts(h: &Graph) -> Vec<u128> {
    (0..=h.m() as u32).into_par_iter().map(|c0| count_proper_colorings(h, c0)).collect()
}

/// Lagrange interpolation through `(xs[i], ys[i])` over any field.
pub fn lagrange_interpolate<T>(xs: &[T], ys: &[T]) -> Poly<T>
where
    T: Ring + Div<Output = T>,
{
    assert_eq!(xs.len(), ys.len());
    let mut result = Poly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::constant(T::one());
        let mut denom = T::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &Poly::new(vec![-xj.clone(), T::one()]);
            denom = denom * (xi.clone() - xj.clone());
        }
        result = &result + &basis.scale(&(yi.clone() / denom));
    }
    result
}

/// Chromatic polynomial of `h` by interpolating brute-force counts.
pub fn chromatic_poly_bruteforce(h: &Graph) -> Result<PolyC, OracleError> {
    if h.m() > ORACLE_MAX_VERTICES {
        return Err(OracleError::SizeLimit { vertices: h.m() });
    }
    let counts = coloring_counts(h);
    let xs: Vec<_> = (0..counts.len() as i64).map(rat).collect();
    let ys: Vec<_> = counts.iter().map(|&n| crate::algebra::Rat::from_integer(n.into())).collect();
    let p = lagrange_interpolate(&xs, &ys);
    if !p.has_integer_coeffs() || !p.is_monic() || p.degree() != Some(h.m()) {
        return Err(OracleError::NotIntegral);
    }
    Ok(p)
}

/// Per-layer-count comparison between the generating function and the
/// oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub n: usize,
    pub series: PolyC,
    pub oracle: PolyC,
}

impl VerificationRow {
    pub fn ok(&self) -> bool {
        self.series == self.oracle
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(VerificationRow::ok)
    }
}

/// Compare `p_1..=p_order` from the generating function against brute force
/// on `M_n(G, C)`.
pub fn verify_series(g: &Graph, connector: &Connector, order: usize) -> Result<VerificationReport, Error> {
    if g.m() * order > ORACLE_MAX_VERTICES {
        return Err(OracleError::SizeLimit { vertices: g.m() * order }.into());
    }
    let f = generating_function(g, connector)?;
    let series = series_coefficients(&f.value, order)?;
    let rows = (1..=order)
        .map(|n| -> Result<VerificationRow, Error> {
            let h = build_layered_graph(g, connector, n)?;
            Ok(VerificationRow { n, series: series[n].clone(), oracle: chromatic_poly_bruteforce(&h)? })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerificationReport { rows })
}
