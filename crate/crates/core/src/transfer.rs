//! Symbolic transfer matrix between canonical states of consecutive layers.
//!
//! For a previous layer in state `S` (with `s` colors) and a new layer in
//! pattern `T` (with `k` color classes), each class of `T` either reuses
//! one of the `s` old colors it is not forbidden from, or takes a color
//! unused by the previous layer (the fresh option). A choice for every class
//! is an atomic event; old colors chosen by different classes must differ,
//! and `gamma` fresh classes can be colored in `(c - s)(c - s - 1)...` ways.

use crate::algebra::{falling_factorial_poly, PolyC};
use crate::graphs::{Connector, Graph, GraphError};
use crate::states::{enumerate_states, CanonState};
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// One choice for a color class of the new layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ColorOption {
    /// Reuse this color of the previous layer (1-based label in `S`).
    Old(u32),
    /// A color not used by the previous layer.
    Fresh,
}

/// Per-class permitted colors for a transition `S -> T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptionSets {
    old_colors: u32,
    allowed_old: Vec<Vec<u32>>,
}

impl OptionSets {
    pub fn new(from: &CanonState, to: &CanonState, connector: &Connector) -> Self {
        let s = from.color_count();
        let allowed_old = forbidden_sets(from, to, connector)
            .into_iter()
            .map(|forb| (1..=s).filter(|a| !forb.contains(a)).collect())
            .collect();
        OptionSets { old_colors: s, allowed_old }
    }

    /// Number of colors in the previous layer.
    pub fn old_colors(&self) -> u32 {
        self.old_colors
    }

    pub fn class_count(&self) -> usize {
        self.allowed_old.len()
    }

    /// Options for 1-based class `t`; the fresh option is always last.
    pub fn options(&self, t: usize) -> Vec<ColorOption> {
        self.allowed_old[t - 1]
            .iter()
            .map(|&a| ColorOption::Old(a))
            .chain(std::iter::once(ColorOption::Fresh))
            .collect()
    }

    /// All atomic events: one option per class, with no old color used
    /// twice.
    pub fn events(&self) -> Vec<Vec<ColorOption>> {
        let mut out = Vec::new();
        let mut used = vec![false; self.old_colors as usize + 1];
        let mut current = Vec::with_capacity(self.class_count());
        self.walk(&mut used, &mut current, &mut |ev| out.push(ev.to_vec()));
        out
    }

    /// Number of events per fresh-class count `gamma`.
    pub fn event_counts_by_fresh(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.class_count() + 1];
        let mut used = vec![false; self.old_colors as usize + 1];
        let mut current = Vec::with_capacity(self.class_count());
        self.walk(&mut used, &mut current, &mut |ev| {
            let gamma = ev.iter().filter(|o| **o == ColorOption::Fresh).count();
            counts[gamma] += 1;
        });
        counts
    }

    fn walk(&self, used: &mut [bool], current: &mut Vec<ColorOption>, visit: &mut impl FnMut(&[ColorOption])) {
        let t = current.len();
        if t == self.class_count() {
            visit(current);
            return;
        }
        for &a in &self.allowed_old[t] {
            if used[a as usize] {
                continue;
            }
            used[a as usize] = true;
            current.push(ColorOption::Old(a));
            self.walk(used, current, visit);
            current.pop();
            used[a as usize] = false;
        }
        current.push(ColorOption::Fresh);
        self.walk(used, current, visit);
        current.pop();
    }
}

/// For each class `t` of `to` (index `t - 1`), the old colors `a_alpha` over
/// connector pairs `[alpha, beta]` whose target `beta` lies in class `t`.
pub fn forbidden_sets(from: &CanonState, to: &CanonState, connector: &Connector) -> Vec<BTreeSet<u32>> {
    let mut forb = vec![BTreeSet::new(); to.color_count() as usize];
    for &(alpha, beta) in connector.pairs() {
        forb[to.label(beta) as usize - 1].insert(from.label(alpha));
    }
    forb
}

/// Number of colorings of a new layer in pattern `to` compatible with a
/// fixed previous layer in state `from`, as a polynomial in `c`.
pub fn transfer_entry(from: &CanonState, to: &CanonState, connector: &Connector) -> PolyC {
    let options = OptionSets::new(from, to, connector);
    let s = options.old_colors();
    options.event_counts_by_fresh().into_iter().enumerate().filter(|&(_, n)| n > 0).fold(
        PolyC::zero(),
        |acc, (gamma, n)| {
            let ways = falling_factorial_poly(s, gamma as u32).scale(&crate::algebra::rat(n as i64));
            &acc + &ways
        },
    )
}

/// Square matrix of [`transfer_entry`] values; row = previous-layer state,
/// column = new-layer state, both in [`enumerate_states`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    pub states: Vec<CanonState>,
    pub entries: Vec<Vec<PolyC>>,
}

impl TransferMatrix {
    pub fn size(&self) -> usize {
        self.states.len()
    }

    pub fn entry(&self, from: &CanonState, to: &CanonState) -> Option<&PolyC> {
        let i = self.states.iter().position(|s| s == from)?;
        let j = self.states.iter().position(|s| s == to)?;
        Some(&self.entries[i][j])
    }
}

pub fn transfer_matrix(g: &Graph, connector: &Connector) -> Result<TransferMatrix, GraphError> {
    if g.m() != connector.m() {
        return Err(GraphError::SizeMismatch { graph: g.m(), connector: connector.m() });
    }
    let states = enumerate_states(g);
    let entries =
        states.par_iter().map(|from| states.iter().map(|to| transfer_entry(from, to, connector)).collect()).collect();
    Ok(TransferMatrix { states, entries })
}

/// Colorings of a single layer with canonical form `T`: `c(c-1)...(c-k+1)`.
pub fn initial_vector(states: &[CanonState]) -> Vec<PolyC> {
    states.iter().map(|t| falling_factorial_poly(0, t.color_count())).collect()
}
