//! Canonical colorings of the per-layer graph: restricted-growth sequences
//! that are proper colorings.

use crate::graphs::Graph;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

/// A restricted-growth label sequence `(a_1, ..., a_m)`: `a_1 = 1` and each
/// label is at most one more than the maximum before it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonState(Vec<u32>);

impl CanonState {
    /// Accepts only restricted-growth sequences.
    pub fn new(labels: Vec<u32>) -> Option<Self> {
        is_restricted_growth(&labels).then_some(CanonState(labels))
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct colors, which for a restricted-growth sequence is
    /// its maximum label.
    pub fn color_count(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Label of 1-based vertex `v`.
    pub fn label(&self, v: usize) -> u32 {
        self.0[v - 1]
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.0.len() == g.m() && g.edges().iter().all(|&(u, v)| self.label(u) != self.label(v))
    }
}

impl fmt::Display for CanonState {
    /// Digit string when every label is a single digit, comma-separated
    /// otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

pub fn is_restricted_growth(labels: &[u32]) -> bool {
    let mut max = 0;
    for &a in labels {
        if a == 0 || a > max + 1 {
            return false;
        }
        max = max.max(a);
    }
    !labels.is_empty()
}

/// Rename colors in order of first appearance: the i-th distinct value seen
/// becomes `i`. `351132 -> 123314`.
pub fn canonicalize<T: Eq + Hash>(coloring: &[T]) -> Vec<u32> {
    let mut names: HashMap<&T, u32> = HashMap::new();
    coloring
        .iter()
        .map(|x| {
            let next = names.len() as u32 + 1;
            *names.entry(x).or_insert(next)
        })
        .collect()
}

/// All canonical proper colorings of `g`, in lexicographic order.
pub fn enumerate_states(g: &Graph) -> Vec<CanonState> {
    let adj = g.adjacency();
    // earlier neighbours only: those are the ones already labelled
    let back: Vec<Vec<usize>> =
        adj.iter().enumerate().map(|(v, ns)| ns.iter().copied().filter(|&u| u < v).collect()).collect();
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(g.m());
    extend(&back, &mut labels, 0, &mut out);
    out
}

fn extend(back: &[Vec<usize>], labels: &mut Vec<u32>, max: u32, out: &mut Vec<CanonState>) {
    let v = labels.len();
    if v == back.len() {
        out.push(CanonState(labels.clone()));
        return;
    }
    for a in 1..=max + 1 {
        if back[v].iter().any(|&u| labels[u] == a) {
            continue;
        }
        labels.push(a);
        extend(back, labels, max.max(a), out);
        labels.pop();
    }
}
