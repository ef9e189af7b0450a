//! Per-layer graphs, connectors, their text formats, and the layered graph
//! `M_n(G, C)`.
//!
//! Vertices are 1-based. The text format is line oriented:
//!
//! ```text
//! # comment
//! m 3
//! e 1 2
//! e 2 3
//! ```
//!
//! Connector files use `p <alpha> <beta>` records instead of `e`.

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range 1..={m}")]
    OutOfRange { vertex: usize, m: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate connector pair [{0}, {1}]")]
    DuplicatePair(usize, usize),
    #[error("vertex count must be positive")]
    Empty,
    #[error("graph has {graph} vertices but connector has {connector}")]
    SizeMismatch { graph: usize, connector: usize },
    #[error("layer count must be positive")]
    NoLayers,
}

/// Simple undirected graph on vertices `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    m: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Validating constructor. Edges may be given in either orientation;
    /// an edge listed twice (in any orientation) is rejected.
    pub fn new(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if m == 0 {
            return Err(GraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            let e = Self::check_edge(m, u, v)?;
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph { m, edges: set })
    }

    fn check_edge(m: usize, u: usize, v: usize) -> Result<(usize, usize), GraphError> {
        for x in [u, v] {
            if x == 0 || x > m {
                return Err(GraphError::OutOfRange { vertex: x, m });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok((u.min(v), u.max(v)))
    }

    pub fn edgeless(m: usize) -> Self {
        assert!(m > 0, "graph needs at least one vertex");
        Graph { m, edges: BTreeSet::new() }
    }

    /// Path `1 - 2 - ... - m`.
    pub fn path(m: usize) -> Self {
        assert!(m > 0, "graph needs at least one vertex");
        Graph { m, edges: (1..m).map(|i| (i, i + 1)).collect() }
    }

    pub fn complete(m: usize) -> Self {
        assert!(m > 0, "graph needs at least one vertex");
        let edges = (1..=m).flat_map(|u| (u + 1..=m).map(move |v| (u, v))).collect();
        Graph { m, edges }
    }

    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3, "cycle needs at least three vertices");
        let mut g = Self::path(m);
        g.edges.insert((1, m));
        g
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// 0-based adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.m];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        adj
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let (m, records) = parse_records(text, 'e')?;
        let mut set = BTreeSet::new();
        for (line, u, v) in records {
            let e = Self::check_edge(m, u, v).map_err(|e| GraphError::Parse { line, message: e.to_string() })?;
            if !set.insert(e) {
                return Err(GraphError::Parse { line, message: GraphError::DuplicateEdge(e.0, e.1).to_string() });
            }
        }
        Ok(Graph { m, edges: set })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("m {}\n", self.m);
        for (u, v) in &self.edges {
            s.push_str(&format!("e {u} {v}\n"));
        }
        s
    }
}

/// Inter-layer connector: ordered pairs `[alpha, beta]`, each placing an edge
/// from vertex `alpha` of one layer to vertex `beta` of the next.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Connector {
    m: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl Connector {
    pub fn new(m: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if m == 0 {
            return Err(GraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            Self::check_pair(m, a, b)?;
            if !set.insert((a, b)) {
                return Err(GraphError::DuplicatePair(a, b));
            }
        }
        Ok(Connector { m, pairs: set })
    }

    fn check_pair(m: usize, a: usize, b: usize) -> Result<(), GraphError> {
        for x in [a, b] {
            if x == 0 || x > m {
                return Err(GraphError::OutOfRange { vertex: x, m });
            }
        }
        Ok(())
    }

    /// `{[i, i] : 1 <= i <= m}`; layering with it gives the Cartesian product
    /// with a path.
    pub fn monogamy(m: usize) -> Self {
        assert!(m > 0, "connector needs at least one vertex");
        Connector { m, pairs: (1..=m).map(|i| (i, i)).collect() }
    }

    pub fn empty(m: usize) -> Self {
        assert!(m > 0, "connector needs at least one vertex");
        Connector { m, pairs: BTreeSet::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let (m, records) = parse_records(text, 'p')?;
        let mut set = BTreeSet::new();
        for (line, a, b) in records {
            Self::check_pair(m, a, b).map_err(|e| GraphError::Parse { line, message: e.to_string() })?;
            if !set.insert((a, b)) {
                return Err(GraphError::Parse { line, message: GraphError::DuplicatePair(a, b).to_string() });
            }
        }
        Ok(Connector { m, pairs: set })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("m {}\n", self.m);
        for (a, b) in &self.pairs {
            s.push_str(&format!("p {a} {b}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(m={}, {{", self.m)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{u},{v}}}")?;
        }
        write!(f, "}})")
    }
}

type Record = (usize, usize, usize);

/// Shared line parser: header `m <int>`, then `<tag> <int> <int>` records.
fn parse_records(text: &str, tag: char) -> Result<(usize, Vec<Record>), GraphError> {
    let mut m = None;
    let mut records = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let bad = |message: String| GraphError::Parse { line, message };
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad(format!("expected a nonnegative integer, got `{s}`")));
        match (m, fields.as_slice()) {
            (None, ["m", count]) => {
                let count = int(count)?;
                if count == 0 {
                    return Err(bad("vertex count must be positive".into()));
                }
                m = Some(count);
            }
            (None, _) => return Err(bad(format!("expected `m <count>` header, got `{content}`"))),
            (Some(_), ["m", ..]) => return Err(bad("repeated `m` header".into())),
            (Some(_), [t, a, b]) if t.len() == 1 && t.starts_with(tag) => {
                records.push((line, int(a)?, int(b)?));
            }
            (Some(_), _) => return Err(bad(format!("expected `{tag} <a> <b>`, got `{content}`"))),
        }
    }
    let m =
        m.ok_or(GraphError::Parse { line: text.lines().count().max(1), message: "missing `m <count>` header".into() })?;
    Ok((m, records))
}

/// The layered graph `M_n(G, C)` on `m * n` vertices: layer `i` (0-based)
/// occupies vertices `i*m + 1 ..= i*m + m` and copies `G`; each pair
/// `[alpha, beta]` joins `alpha + i*m` to `beta + (i+1)*m`.
pub fn build_layered_graph(g: &Graph, c: &Connector, n: usize) -> Result<Graph, GraphError> {
    if g.m != c.m {
        return Err(GraphError::SizeMismatch { graph: g.m, connector: c.m });
    }
    if n == 0 {
        return Err(GraphError::NoLayers);
    }
    let m = g.m;
    let mut edges = BTreeSet::new();
    for i in 0..n {
        let base = i * m;
        edges.extend(g.edges.iter().map(|&(u, v)| (u + base, v + base)));
    }
    for i in 0..n - 1 {
        let base = i * m;
        edges.extend(c.pairs.iter().map(|&(a, b)| (a + base, b + base + m)));
    }
    Ok(Graph { m: m * n, edges })
}
