//! Undirected simple graphs, degree ordering, BFS distances and the
//! plain-text graph and colouring file formats.
//!
//! Vertices are `0..n` in memory. Files and printed reports use `1..=n`.
//! Edges keep the order in which they were supplied; an [`EdgeId`] is the
//! position of an edge in that order, and every colouring is indexed by it.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("self-loop at vertex {}", .0 + 1)]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{}, {}}}", .0 + 1, .1 + 1)]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("expected {expected} edge lines, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("colouring does not fit the graph: {0}")]
    ColouringMismatch(String),
}

/// Undirected simple graph with per-vertex adjacency sorted by neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs. Endpoints are stored with
    /// the smaller vertex first; edge ids follow the input order.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut list = Vec::new();
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x + 1, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = list.len();
            list.push((u.min(v), u.max(v)));
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0].0 == w[1].0) {
                let u = w[0].0;
                return Err(GraphError::DuplicateEdge(v.min(u), v.max(u)));
            }
        }
        Ok(Self { n, edges: list, adj })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// `(neighbour, edge id)` pairs, sorted by neighbour.
    pub fn adjacency(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let nbrs = &self.adj[u];
        nbrs.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| nbrs[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// Renames vertex `v` to `new_id[v]`. Edge ids are preserved, so a
    /// colouring of the relabelled graph is also a colouring of `self`.
    /// Linear time: adjacency comes out sorted because new ids are visited
    /// in increasing order.
    pub fn relabel(&self, new_id: &[Vertex]) -> Self {
        assert_eq!(new_id.len(), self.n);
        let mut old_id = vec![usize::MAX; self.n];
        for (v, &w) in new_id.iter().enumerate() {
            assert!(w < self.n && old_id[w] == usize::MAX, "relabelling must be a bijection");
            old_id[w] = v;
        }
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = self.adj.iter().map(|a| Vec::with_capacity(a.len())).collect();
        for (u, &old) in old_id.iter().enumerate() {
            for &(w, e) in &self.adj[old] {
                adj[new_id[w]].push((u, e));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (new_id[u], new_id[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Self { n: self.n, edges, adj }
    }

    /// Parses the edge-list format: `n m` then `m` lines `u v`, 1-based.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = data_lines(text);
        let (line_no, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            reason: "missing header".into(),
        })?;
        let [n, m] = parse_fields::<2>(line_no, header)?;
        let mut pairs = Vec::with_capacity(m);
        for (line_no, line) in lines {
            let [u, v] = parse_fields::<2>(line_no, line)?;
            pairs.push((vertex_index(u, n)?, vertex_index(v, n)?));
        }
        if pairs.len() != m {
            return Err(GraphError::CountMismatch {
                expected: m,
                found: pairs.len(),
            });
        }
        Self::from_edges(n, pairs)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub(crate) fn parse_fields<const N: usize>(line: usize, text: &str) -> Result<[usize; N], GraphError> {
    let mut out = [0usize; N];
    let mut fields = text.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields.next().ok_or_else(|| GraphError::Parse {
            line,
            reason: format!("expected {N} fields"),
        })?;
        *slot = tok.parse().map_err(|_| GraphError::Parse {
            line,
            reason: format!("not a non-negative integer: {tok:?}"),
        })?;
    }
    if fields.next().is_some() {
        return Err(GraphError::Parse {
            line,
            reason: format!("expected {N} fields"),
        });
    }
    Ok(out)
}

pub(crate) fn vertex_index(id: usize, n: usize) -> Result<Vertex, GraphError> {
    if id == 0 || id > n {
        Err(GraphError::OutOfRange { vertex: id, n })
    } else {
        Ok(id - 1)
    }
}

/// Degree sequence in non-increasing order together with the canonical
/// relabelling that realises it. Ties keep ascending original id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<usize>,
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl DegreeProfile {
    /// `d_1 ≥ … ≥ d_n`, indexed from 0.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Original vertex at canonical position `i`.
    pub fn vertex_at(&self, i: usize) -> Vertex {
        self.order[i]
    }

    /// Canonical position of original vertex `v`.
    pub fn position_of(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Old id → canonical id map, suitable for [`Graph::relabel`].
    pub fn relabelling(&self) -> &[usize] {
        &self.position
    }

    /// Smallest 0-based index `i` with `d_i ≤ i`, the split index; the
    /// clique side is `0..split_index`. Equals `n` only for the empty
    /// profile.
    pub fn split_index(&self) -> usize {
        self.degrees
            .iter()
            .enumerate()
            .find(|&(i, &d)| d <= i)
            .map_or(self.degrees.len(), |(i, _)| i)
    }

    pub fn pendant_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }
}

/// Counting sort on degrees, stable in vertex id.
pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let n = g.n();
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        buckets[g.degree(v)].push(v);
    }
    let order: Vec<Vertex> = buckets.into_iter().rev().flatten().collect();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let degrees = order.iter().map(|&v| g.degree(v)).collect();
    DegreeProfile {
        degrees,
        order,
        position,
    }
}

/// Hop distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for w in g.neighbours(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    bfs_distances(g, 0).iter().all(Option::is_some)
}

pub fn eccentricities(g: &Graph) -> Result<Vec<usize>, GraphError> {
    (0..g.n())
        .map(|v| {
            bfs_distances(g, v)
                .into_iter()
                .try_fold(0, |ecc, d| d.map(|d| ecc.max(d)))
                .ok_or(GraphError::Disconnected)
        })
        .collect()
}

pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    Ok(eccentricities(g)?.into_iter().max().unwrap_or(0))
}

pub fn pendant_vertices(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

/// Counts adjacency entries and edge slots touched by the colouring
/// algorithms, so their linear-time contracts can be checked directly.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct VisitCounter {
    pub edge_visits: u64,
}

impl VisitCounter {
    pub(crate) fn visit(&mut self, count: usize) {
        self.edge_visits += count as u64;
    }
}

/// Total assignment of colours `0..colour_count` to the edges of a graph,
/// indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    colour_count: usize,
    colours: Vec<usize>,
}

impl EdgeColouring {
    pub fn new(g: &Graph, colour_count: usize, colours: Vec<usize>) -> Result<Self, GraphError> {
        if colour_count == 0 {
            return Err(GraphError::ColouringMismatch("colour count must be positive".into()));
        }
        if colours.len() != g.m() {
            return Err(GraphError::ColouringMismatch(format!(
                "{} colours for {} edges",
                colours.len(),
                g.m()
            )));
        }
        if let Some(c) = colours.iter().find(|&&c| c >= colour_count) {
            return Err(GraphError::ColouringMismatch(format!(
                "colour {c} outside 0..{colour_count}"
            )));
        }
        Ok(Self { colour_count, colours })
    }

    pub fn colour_count(&self) -> usize {
        self.colour_count
    }

    pub fn colour(&self, e: EdgeId) -> usize {
        self.colours[e]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Number of colours that actually appear on some edge.
    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.colour_count];
        for &c in &self.colours {
            seen[c] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Colouring file: `n m c`, then `u v colour` per edge in edge-id order.
    pub fn to_file(&self, g: &Graph) -> String {
        let mut out = format!("{} {} {}\n", g.n(), g.m(), self.colour_count);
        for (&(u, v), c) in g.edges().iter().zip(&self.colours) {
            let _ = writeln!(out, "{} {} {}", u + 1, v + 1, c);
        }
        out
    }

    /// Reads a colouring file. The graph it describes is returned alongside
    /// the colouring.
    pub fn parse_file(text: &str) -> Result<(Graph, Self), GraphError> {
        let mut lines = data_lines(text);
        let (line_no, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            reason: "missing header".into(),
        })?;
        let [n, m, c] = parse_fields::<3>(line_no, header)?;
        let mut pairs = Vec::with_capacity(m);
        let mut colours = Vec::with_capacity(m);
        for (line_no, line) in lines {
            let [u, v, col] = parse_fields::<3>(line_no, line)?;
            pairs.push((vertex_index(u, n)?, vertex_index(v, n)?));
            colours.push(col);
        }
        if pairs.len() != m {
            return Err(GraphError::CountMismatch {
                expected: m,
                found: pairs.len(),
            });
        }
        let g = Graph::from_edges(n, pairs)?;
        let col = Self::new(&g, c, colours)?;
        Ok((g, col))
    }

    /// Reads a colouring file whose edges must appear in the same order as
    /// the edges of `g`.
    pub fn parse_for(g: &Graph, text: &str) -> Result<Self, GraphError> {
        let (h, col) = Self::parse_file(text)?;
        if h.n() != g.n() || h.edges() != g.edges() {
            return Err(GraphError::ColouringMismatch(
                "edge list differs from the graph file".into(),
            ));
        }
        Ok(col)
    }
}
