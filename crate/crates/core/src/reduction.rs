//! 3-uniform hypergraphs and the gadgets that turn hypergraph 3-colouring
//! into rainbow colouring of split graphs (`k = 3`) and chordal graphs of
//! diameter `k`.
//!
//! Given `H'`, the gadget is built on `H = H' ⊎ K_5^3`:
//!
//! ```text
//!   a0 ┐
//!   a1 ┼─ b_0 ─ b_1 ─ … ─ b_{k-3} ── every v ∈ V_H ── hyperedge vertices
//!   a2 ┘                              (V_H is a clique)
//! ```
//!
//! For `k = 3` the path is the single hub `b` and the graph is split.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::{parse_fields, vertex_index, EdgeColouring, Graph, GraphError, Vertex};
use crate::rainbow::{verify_rainbow, RainbowError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Parse(#[from] GraphError),
    #[error("hyperedge {0} must have three distinct vertices")]
    DegenerateHyperedge(usize),
    #[error("hyperedge {0} is repeated")]
    DuplicateHyperedge(usize),
    #[error("k must be at least 3, got {0}")]
    KTooSmall(usize),
    #[error("expected a colouring of {expected} vertices, got {found}")]
    ColouringSize { expected: usize, found: usize },
    #[error("vertex colour {0} outside 0..3")]
    ColourOutOfRange(usize),
    #[error("hyperedge {} is monochromatic", .0 + 1)]
    Improper(usize),
    #[error("colour class {0} is empty")]
    MissingColourClass(usize),
    #[error("3^{n} colourings exceed the budget of {budget}")]
    BudgetExceeded { n: usize, budget: u64 },
    #[error("colouring is not rainbow: no rainbow path between {} and {}", .0 + 1, .1 + 1)]
    NotRainbow(Vertex, Vertex),
    #[error("expected {expected} colours, got {found}")]
    WrongColourCount { expected: usize, found: usize },
    #[error("the {0} edges of the pendant tree do not carry distinct colours")]
    TreeNotRainbow(usize),
    #[error("extracted hypergraph colouring is improper at hyperedge {}", .0 + 1)]
    ExtractionImproper(usize),
    #[error("role map: {0}")]
    RoleMap(String),
    #[error(transparent)]
    Rainbow(#[from] RainbowError),
}

/// 3-uniform hypergraph on `0..n`; each hyperedge is stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n: usize, edges: Vec<[usize; 3]>) -> Result<Self, ReductionError> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(GraphError::OutOfRange { vertex: v + 1, n }.into());
            }
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(ReductionError::DegenerateHyperedge(i));
            }
            if sorted.contains(&e) {
                return Err(ReductionError::DuplicateHyperedge(i));
            }
            sorted.push(e);
        }
        Ok(Self { n, edges: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    /// `n m`, then `m` lines `u v w`, 1-based.
    pub fn parse(text: &str) -> Result<Self, ReductionError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (no, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            reason: "missing header".into(),
        })?;
        let [n, m] = parse_fields::<2>(no, header)?;
        let mut edges = Vec::with_capacity(m);
        for (no, line) in lines {
            let [u, v, w] = parse_fields::<3>(no, line)?;
            edges.push([vertex_index(u, n)?, vertex_index(v, n)?, vertex_index(w, n)?]);
        }
        if edges.len() != m {
            return Err(GraphError::CountMismatch {
                expected: m,
                found: edges.len(),
            }
            .into());
        }
        Self::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for [u, v, w] in &self.edges {
            let _ = writeln!(out, "{} {} {}", u + 1, v + 1, w + 1);
        }
        out
    }
}

/// Complete 3-uniform hypergraph on five vertices; its chromatic number is 3.
pub fn k5_3() -> Hypergraph3 {
    let mut edges = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                edges.push([a, b, c]);
            }
        }
    }
    Hypergraph3 { n: 5, edges }
}

/// Disjoint union; `h2`'s vertices are shifted above `h1`'s.
pub fn hypergraph_union(h1: &Hypergraph3, h2: &Hypergraph3) -> Hypergraph3 {
    let shift = h1.n;
    let edges = h1
        .edges
        .iter()
        .copied()
        .chain(h2.edges.iter().map(|e| e.map(|v| v + shift)))
        .collect();
    Hypergraph3 { n: h1.n + h2.n, edges }
}

/// Vertex colouring with colours `0..3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HColouring(Vec<usize>);

impl HColouring {
    pub fn new(colours: Vec<usize>) -> Result<Self, ReductionError> {
        if let Some(&c) = colours.iter().find(|&&c| c > 2) {
            return Err(ReductionError::ColourOutOfRange(c));
        }
        Ok(Self(colours))
    }

    pub fn colours(&self) -> &[usize] {
        &self.0
    }

    pub fn colour(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends the colouring `0, 0, 1, 1, 2` of a trailing `K_5^3`.
    pub fn extend_with_k5_3(&self) -> Self {
        let mut colours = self.0.clone();
        colours.extend([0, 0, 1, 1, 2]);
        Self(colours)
    }

    /// `n`, then one line `v colour` per vertex, 1-based vertices.
    pub fn parse(text: &str) -> Result<Self, ReductionError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (no, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            reason: "missing header".into(),
        })?;
        let [n] = parse_fields::<1>(no, header)?;
        let mut colours = vec![None; n];
        for (no, line) in lines {
            let [v, c] = parse_fields::<2>(no, line)?;
            let v = vertex_index(v, n)?;
            if colours[v].replace(c).is_some() {
                return Err(GraphError::Parse {
                    line: no,
                    reason: format!("vertex {} coloured twice", v + 1),
                }
                .into());
            }
        }
        let found = colours.iter().filter(|c| c.is_some()).count();
        if found != n {
            return Err(ReductionError::ColouringSize { expected: n, found });
        }
        Self::new(colours.into_iter().flatten().collect())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.0.len());
        for (v, c) in self.0.iter().enumerate() {
            let _ = writeln!(out, "{} {}", v + 1, c);
        }
        out
    }
}

/// Index of the first monochromatic hyperedge, if any.
fn first_monochromatic(h: &Hypergraph3, c: &HColouring) -> Option<usize> {
    h.edges
        .iter()
        .position(|&[u, v, w]| c.colour(u) == c.colour(v) && c.colour(v) == c.colour(w))
}

pub fn is_proper(h: &Hypergraph3, c: &HColouring) -> bool {
    c.len() == h.n && first_monochromatic(h, c).is_none()
}

/// Exhaustive search over all 3-colourings in lexicographic order.
pub fn brute_chi3(h: &Hypergraph3, budget: u64) -> Result<Option<HColouring>, ReductionError> {
    let too_big = || ReductionError::BudgetExceeded { n: h.n, budget };
    let total = 3u64.checked_pow(h.n as u32).ok_or_else(too_big)?;
    if total > budget {
        return Err(too_big());
    }
    let mut colours = vec![0; h.n];
    loop {
        let c = HColouring(colours.clone());
        if first_monochromatic(h, &c).is_none() {
            return Ok(Some(c));
        }
        // odometer increment, last vertex fastest
        let Some(i) = colours.iter().rposition(|&c| c < 2) else {
            return Ok(None);
        };
        colours[i] += 1;
        colours[i + 1..].fill(0);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Pendant `a_i`, `i ∈ {0, 1, 2}`.
    Pendant(usize),
    /// The hub `b` of the split gadget.
    Hub,
    /// `b_i` on the path of the chordal gadget.
    Path(usize),
    /// Hypergraph vertex.
    Vertex(usize),
    /// Hyperedge.
    Edge(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Pendant(i) => write!(f, "a{i}"),
            Role::Hub => f.write_str("b"),
            Role::Path(i) => write!(f, "b{i}"),
            Role::Vertex(v) => write!(f, "v{}", v + 1),
            Role::Edge(e) => write!(f, "e{}", e + 1),
        }
    }
}

/// The gadget graph together with the role of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetLayout {
    graph: Graph,
    roles: Vec<Role>,
    hypergraph: Hypergraph3,
    k: usize,
}

/// Vertex numbering: `a_0, a_1, a_2`, then `b_0..b_{k-3}`, then `V_H`, then
/// `E_H`.
const FIRST_B: Vertex = 3;

impl GadgetLayout {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Full hypergraph `H' ⊎ K_5^3` embedded in the gadget.
    pub fn hypergraph(&self) -> &Hypergraph3 {
        &self.hypergraph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: Vertex) -> Role {
        self.roles[v]
    }

    pub fn is_split_gadget(&self) -> bool {
        self.roles[FIRST_B] == Role::Hub
    }

    pub fn pendant(&self, i: usize) -> Vertex {
        i
    }

    /// `b_i`; `b_0` is the hub of the split gadget.
    pub fn path_vertex(&self, i: usize) -> Vertex {
        assert!(i + 3 <= self.k);
        FIRST_B + i
    }

    /// The path end adjacent to every hypergraph vertex.
    pub fn last_path_vertex(&self) -> Vertex {
        self.path_vertex(self.k - 3)
    }

    pub fn hyper_vertex(&self, v: usize) -> Vertex {
        FIRST_B + self.k - 2 + v
    }

    pub fn hyper_edge(&self, e: usize) -> Vertex {
        FIRST_B + self.k - 2 + self.hypergraph.n + e
    }

    /// One line `role vertex-id` per vertex; hyperedge roles carry their
    /// members as `e<j>:<u>,<v>,<w>`. All ids are 1-based.
    pub fn to_role_map(&self) -> String {
        let mut out = String::new();
        for (id, role) in self.roles.iter().enumerate() {
            match role {
                Role::Edge(e) => {
                    let [u, v, w] = self.hypergraph.edges[*e];
                    let _ = writeln!(out, "{role}:{},{},{} {}", u + 1, v + 1, w + 1, id + 1);
                }
                _ => {
                    let _ = writeln!(out, "{role} {}", id + 1);
                }
            }
        }
        out
    }

    /// Rebuilds a layout from its role map. The ids in the file must agree
    /// with the construction's numbering.
    pub fn parse_role_map(text: &str) -> Result<Self, ReductionError> {
        let bad = |msg: String| ReductionError::RoleMap(msg);
        let mut hub = false;
        let mut path = 0;
        let mut hyper_vertices = 0;
        let mut hyper_edges = Vec::new();
        let mut ids = Vec::new();
        for (no, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let mut fields = line.split_whitespace();
            let (Some(role), Some(id), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(bad(format!("line {}: expected `role vertex-id`", no + 1)));
            };
            let id: usize = id
                .parse()
                .map_err(|_| bad(format!("line {}: bad vertex id {id:?}", no + 1)))?;
            ids.push((role.to_string(), id));
            match role.as_bytes()[0] {
                b'b' if role == "b" => hub = true,
                b'b' => path += 1,
                b'v' => hyper_vertices += 1,
                b'e' => {
                    let members = role
                        .split_once(':')
                        .map(|(_, m)| m.split(',').map(str::parse::<usize>).collect::<Result<Vec<_>, _>>())
                        .and_then(Result::ok)
                        .filter(|m| m.len() == 3 && m.iter().all(|&x| x >= 1))
                        .ok_or_else(|| bad(format!("line {}: bad hyperedge role {role:?}", no + 1)))?;
                    hyper_edges.push([members[0] - 1, members[1] - 1, members[2] - 1]);
                }
                b'a' => {}
                _ => return Err(bad(format!("line {}: unknown role {role:?}", no + 1))),
            }
        }
        let h = Hypergraph3::new(hyper_vertices, hyper_edges)?;
        let layout = match (hub, path) {
            (true, 0) => build_gadget(h, 3, true),
            (false, p) if p >= 1 => build_gadget(h, p + 2, false),
            _ => return Err(bad("expected either `b` or `b0..` roles".into())),
        };
        let expected = layout.to_role_map();
        let expected: Vec<(&str, usize)> = expected
            .lines()
            .map(|l| {
                let (r, id) = l.split_once(' ').expect("role map line");
                (r, id.parse().expect("vertex id"))
            })
            .collect();
        let mut got: Vec<(&str, usize)> = ids.iter().map(|(r, id)| (r.as_str(), *id)).collect();
        got.sort_by_key(|&(_, id)| id);
        if got != expected {
            return Err(bad("vertex ids do not match the gadget construction".into()));
        }
        Ok(layout)
    }
}

fn build_gadget(h: Hypergraph3, k: usize, split: bool) -> GadgetLayout {
    debug_assert!(k >= 3 && (!split || k == 3));
    let path_len = k - 2;
    let first_v = FIRST_B + path_len;
    let first_e = first_v + h.n;
    let n = first_e + h.m();

    let mut roles: Vec<Role> = (0..3).map(Role::Pendant).collect();
    if split {
        roles.push(Role::Hub);
    } else {
        roles.extend((0..path_len).map(Role::Path));
    }
    roles.extend((0..h.n).map(Role::Vertex));
    roles.extend((0..h.m()).map(Role::Edge));

    let last_b = FIRST_B + path_len - 1;
    let mut edges = Vec::new();
    edges.extend((0..3).map(|i| (i, FIRST_B)));
    edges.extend((1..path_len).map(|i| (FIRST_B + i - 1, FIRST_B + i)));
    edges.extend((0..h.n).map(|v| (last_b, first_v + v)));
    for v in 0..h.n {
        edges.extend((v + 1..h.n).map(|w| (first_v + v, first_v + w)));
    }
    for (e, members) in h.edges.iter().enumerate() {
        edges.extend(members.iter().map(|&v| (first_v + v, first_e + e)));
    }
    let graph = Graph::from_edges(n, edges).expect("gadget is a simple graph");
    GadgetLayout {
        graph,
        roles,
        hypergraph: h,
        k,
    }
}

/// Split gadget on `H' ⊎ K_5^3`: clique `V_H ∪ {b}`, independent set
/// `E_H ∪ {a_0, a_1, a_2}`.
pub fn reduce_to_split(h_prime: &Hypergraph3) -> GadgetLayout {
    build_gadget(hypergraph_union(h_prime, &k5_3()), 3, true)
}

/// Chordal gadget of diameter `k`: the hub becomes the path
/// `b_0 … b_{k-3}` with the pendants on `b_0`.
pub fn reduce_to_chordal(h_prime: &Hypergraph3, k: usize) -> Result<GadgetLayout, ReductionError> {
    if k < 3 {
        return Err(ReductionError::KTooSmall(k));
    }
    Ok(build_gadget(hypergraph_union(h_prime, &k5_3()), k, false))
}

/// Incidence-edge colours for the members of one hyperedge (sorted ids).
///
/// Three colours: member `v` gets `c(v) + 1`. Two colours `(i, i, j)`: the
/// lower-id `i` member gets `i + 1`, the other `i + 2`, and the `j` member
/// gets the remaining colour of `Z_3 \ {i, j}`.
fn incidence_colours(members: [usize; 3], c: &HColouring) -> [usize; 3] {
    let col = members.map(|v| c.colour(v));
    let (i, j) = match col {
        [a, b, x] if a == b => (a, x),
        [a, x, b] if a == b => (a, x),
        [x, a, b] if a == b => (a, x),
        _ => return col.map(|x| (x + 1) % 3),
    };
    let other = 3 - i - j;
    let mut out = [0; 3];
    let mut next = 1;
    for (slot, &x) in out.iter_mut().zip(&col) {
        if x == i {
            *slot = (i + next) % 3;
            next += 1;
        } else {
            *slot = other;
        }
    }
    out
}

/// Rainbow colouring of the gadget with `k` colours from a proper
/// 3-colouring of the embedded hypergraph that uses every colour.
pub fn lift_colouring(layout: &GadgetLayout, c_h: &HColouring) -> Result<EdgeColouring, ReductionError> {
    let h = &layout.hypergraph;
    if c_h.len() != h.n {
        return Err(ReductionError::ColouringSize {
            expected: h.n,
            found: c_h.len(),
        });
    }
    if let Some(e) = first_monochromatic(h, c_h) {
        return Err(ReductionError::Improper(e));
    }
    if let Some(missing) = (0..3).find(|i| !c_h.colours().contains(i)) {
        return Err(ReductionError::MissingColourClass(missing));
    }

    let incidence: Vec<[usize; 3]> = h.edges.iter().map(|&e| incidence_colours(e, c_h)).collect();
    let g = &layout.graph;
    let colours = g
        .edges()
        .iter()
        .map(|&(u, v)| match (layout.role(u), layout.role(v)) {
            (Role::Pendant(i), _) => i,
            (Role::Path(i), Role::Path(_)) => 3 + i,
            (Role::Hub | Role::Path(_), Role::Vertex(x)) => c_h.colour(x),
            (Role::Vertex(x), Role::Vertex(y)) => match (c_h.colour(x), c_h.colour(y)) {
                (a, b) if a == b => a,
                (0, _) | (_, 0) => 2,
                _ => 0,
            },
            (Role::Vertex(x), Role::Edge(e)) => {
                let slot = h.edges[e].iter().position(|&m| m == x).expect("incident member");
                incidence[e][slot]
            }
            roles => unreachable!("no gadget edge joins {roles:?}"),
        })
        .collect();
    Ok(EdgeColouring::new(g, layout.k, colours).expect("colours below k"))
}

/// Reads a proper 3-colouring of the hypergraph off a rainbow `k`-colouring
/// of the gadget: rename colours so that `a_i b_0` has colour `i` and the
/// path edges have `3..k`, then `c(v) = min(colour(b_{k-3} v), 2)`.
pub fn extract_colouring(layout: &GadgetLayout, c_g: &EdgeColouring) -> Result<HColouring, ReductionError> {
    let g = &layout.graph;
    let k = layout.k;
    if c_g.colour_count() != k {
        return Err(ReductionError::WrongColourCount {
            expected: k,
            found: c_g.colour_count(),
        });
    }
    let verdict = verify_rainbow(g, c_g)?;
    if let Some((u, v)) = verdict.witness_failure {
        return Err(ReductionError::NotRainbow(u, v));
    }

    let b0 = layout.path_vertex(0);
    let tree_edges = (0..3)
        .map(|i| (layout.pendant(i), b0))
        .chain((1..=k - 3).map(|i| (layout.path_vertex(i - 1), layout.path_vertex(i))));
    let mut rename = vec![usize::MAX; k];
    for (target, (u, v)) in tree_edges.enumerate() {
        let e = g.edge_id(u, v).expect("tree edge present");
        let c = c_g.colour(e);
        if rename[c] != usize::MAX {
            return Err(ReductionError::TreeNotRainbow(k));
        }
        rename[c] = target;
    }

    let last = layout.last_path_vertex();
    let colours = (0..layout.hypergraph.n)
        .map(|x| {
            let e = g.edge_id(last, layout.hyper_vertex(x)).expect("hub edge present");
            rename[c_g.colour(e)].min(2)
        })
        .collect();
    let c_h = HColouring(colours);
    if let Some(e) = first_monochromatic(&layout.hypergraph, &c_h) {
        return Err(ReductionError::ExtractionImproper(e));
    }
    Ok(c_h)
}
