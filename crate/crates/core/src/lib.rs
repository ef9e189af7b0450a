//! Exact generating functions for chromatic polynomials of layered strip
//! graphs.
//!
//! Given a per-layer graph `G` on `m` vertices and a connector `C` (ordered
//! pairs joining consecutive layers), [`generating_function`] returns the
//! rational function `F(z, c) = sum_n P_{M_n(G,C)}(c) z^n`, built from a
//! symbolic transfer matrix over canonical layer colorings. The [`oracle`]
//! module recomputes the same chromatic polynomials by brute force.
//!
//! ```
//! use chromgf_core::{gf_grid, PolyC};
//!
//! let f = gf_grid(2).unwrap();
//! let p = f.series(2).unwrap();
//! // the 4-cycle: c^4 - 4c^3 + 6c^2 - 3c
//! assert_eq!(p[2], PolyC::from_ints(&[0, -3, 6, -4, 1]));
//! ```

pub mod algebra;
pub mod genfunc;
pub mod graphs;
pub mod oracle;
pub mod states;
pub mod transfer;

pub use algebra::{AlgebraError, Poly, PolyC, PolyZC, Rat, RatFunc};
pub use genfunc::{generating_function, gf_cartesian, gf_grid, GenFunc};
pub use graphs::{build_layered_graph, Connector, Graph, GraphError};
pub use oracle::{chromatic_poly_bruteforce, count_proper_colorings, verify_series, OracleError};
pub use states::{canonicalize, enumerate_states, CanonState};
pub use transfer::{initial_vector, transfer_entry, transfer_matrix, TransferMatrix};

/// Univariate polynomial over `f64`, for approximate evaluation.
pub type PolyF64 = Poly<f64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
