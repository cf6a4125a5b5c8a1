//! Optimal rainbow colouring of connected threshold graphs.
//!
//! Everything is decided by the degree sequence `d_1 ≥ … ≥ d_n`: with
//! `k = min{i : d_i ≤ i - 1}` and `p` the number of pendant vertices,
//! a clique needs one colour, a non-clique needs two exactly when
//! `Σ_{i≥k} 2^-d_i ≤ 1`, and `max{p, 3}` otherwise.
//!
//! The colourings work on the canonically relabelled graph, where the
//! independent vertex at position `i` is adjacent to exactly positions
//! `0..d_i`. Edge ids are shared with the input graph, so no translation
//! back is needed.

use std::fmt;

use thiserror::Error;

use crate::graph::{is_connected, EdgeColouring, Graph, VisitCounter};
use crate::kraft::{build_prefix_code, KraftError, KraftSum};
use crate::recognize::{is_threshold, neighbourhood_nesting_check, split_partition, SplitPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThresholdError {
    #[error("graph is not a threshold graph")]
    NotThreshold,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("degree sequence satisfies the Kraft inequality; use the two-colour case")]
    KraftSatisfied,
    #[error(transparent)]
    Kraft(#[from] KraftError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdCase {
    /// Single vertex: no pairs to connect.
    Degenerate,
    Clique,
    KraftTwo,
    PendantThree,
}

impl fmt::Display for ThresholdCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThresholdCase::Degenerate => "degenerate",
            ThresholdCase::Clique => "clique",
            ThresholdCase::KraftTwo => "kraft_two",
            ThresholdCase::PendantThree => "pendant_three",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdRcReport {
    pub rc: usize,
    pub case: ThresholdCase,
    /// 1-based split index.
    pub k: usize,
    pub p: usize,
    /// `Σ_{i=k}^{n} 2^-d_i`.
    pub kraft_sum: KraftSum,
}

impl fmt::Display for ThresholdRcReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "case={} k={} p={} kraft={} rc={}",
            self.case, self.k, self.p, self.kraft_sum, self.rc
        )
    }
}

/// Canonical form shared by the rc formula and the colourings.
struct Canonical {
    part: SplitPartition,
    graph: Graph,
    kraft_sum: KraftSum,
}

impl Canonical {
    fn new(g: &Graph) -> Result<Self, ThresholdError> {
        if !is_connected(g) {
            return Err(ThresholdError::Disconnected);
        }
        is_threshold(g).ok_or(ThresholdError::NotThreshold)?;
        let part = split_partition(g).ok_or(ThresholdError::NotThreshold)?;
        if !neighbourhood_nesting_check(g, &part) {
            return Err(ThresholdError::NotThreshold);
        }
        let graph = g.relabel(part.profile().relabelling());
        let kraft_sum = if g.n() == 1 {
            KraftSum::of(&[])?
        } else {
            KraftSum::of(independent_degrees(&part))?
        };
        Ok(Self { part, graph, kraft_sum })
    }

    fn degrees(&self) -> &[usize] {
        self.part.profile().degrees()
    }

    fn report(&self) -> ThresholdRcReport {
        let n = self.graph.n();
        let p = self.part.profile().pendant_count();
        let (case, rc) = if n == 1 {
            (ThresholdCase::Degenerate, 0)
        } else if self.graph.is_complete() {
            (ThresholdCase::Clique, 1)
        } else if self.kraft_sum.is_satisfied() {
            (ThresholdCase::KraftTwo, 2)
        } else {
            (ThresholdCase::PendantThree, p.max(3))
        };
        ThresholdRcReport {
            rc,
            case,
            k: self.part.k(),
            p,
            kraft_sum: self.kraft_sum.clone(),
        }
    }
}

fn independent_degrees(part: &SplitPartition) -> &[usize] {
    &part.profile().degrees()[part.clique_size()..]
}

/// The rc value and the quantities it is read from.
pub fn threshold_rc(g: &Graph) -> Result<ThresholdRcReport, ThresholdError> {
    Ok(Canonical::new(g)?.report())
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdWork {
    /// Adjacency entries and edge slots touched while assigning colours.
    pub edges: VisitCounter,
    /// Tree edges walked while building the prefix code.
    pub code_steps: usize,
}

fn case1(c: &Canonical, work: &mut ThresholdWork) -> Result<EdgeColouring, ThresholdError> {
    let h = &c.graph;
    let n = h.n();
    if n == 1 {
        return Ok(EdgeColouring::new(h, 1, Vec::new()).expect("no edges"));
    }
    let s = c.part.clique_size();
    // Positions n-1, n-2, …, s have non-decreasing degrees.
    let lengths: Vec<usize> = c.degrees()[s..].iter().rev().copied().collect();
    let code = build_prefix_code(&lengths)?;
    work.code_steps += code.tree_steps();
    let word = |pos: usize| code.codeword(n - 1 - pos);
    let longest = word(s);

    let mut colours = vec![0; h.m()];
    for v in s..n {
        let b = word(v);
        for &(w, e) in h.adjacency(v) {
            colours[e] = usize::from(b[w]);
        }
        work.edges.visit(h.degree(v));
    }
    for v in 0..s {
        for &(w, e) in h.adjacency(v).iter().take_while(|&&(w, _)| w < v) {
            colours[e] = usize::from(longest[w]);
            work.edges.visit(1);
        }
    }
    let count = if h.is_complete() { 1 } else { 2 };
    Ok(EdgeColouring::new(h, count, colours).expect("binary colours"))
}

fn case2(c: &Canonical, work: &mut ThresholdWork) -> EdgeColouring {
    let h = &c.graph;
    let n = h.n();
    let p = c.part.profile().pendant_count();
    let count = p.max(3);
    let mut colours: Vec<Option<usize>> = vec![None; h.m()];

    // Pendants occupy the last p positions; each hangs off position 0.
    for (i, v) in (n - p..n).enumerate() {
        let (w, e) = h.adjacency(v)[0];
        debug_assert_eq!(w, 0);
        colours[e] = Some(i);
        work.edges.visit(1);
    }
    if p + 1 < n {
        let (_, e01) = h.adjacency(1)[0];
        colours[e01] = Some(0);
        work.edges.visit(1);
        for v in 2..n - p {
            let adj = h.adjacency(v);
            debug_assert!(adj[0].0 == 0 && adj[1].0 == 1);
            colours[adj[0].1] = Some(1);
            colours[adj[1].1] = Some(2);
            work.edges.visit(2);
        }
        for slot in colours.iter_mut() {
            slot.get_or_insert(0);
        }
        work.edges.visit(h.m());
    }
    let colours = colours
        .into_iter()
        .map(|c| c.expect("star edges are all pendant"))
        .collect();
    EdgeColouring::new(h, count, colours).expect("colours below max(p, 3)")
}

/// Two-colouring from a prefix-free code whose lengths are the degrees of
/// the independent vertices.
pub fn colour_threshold_case1(g: &Graph) -> Result<EdgeColouring, ThresholdError> {
    let c = Canonical::new(g)?;
    case1(&c, &mut ThresholdWork::default())
}

/// `max{p, 3}`-colouring for graphs violating the Kraft inequality.
pub fn colour_threshold_case2(g: &Graph) -> Result<EdgeColouring, ThresholdError> {
    let c = Canonical::new(g)?;
    if c.kraft_sum.is_satisfied() {
        return Err(ThresholdError::KraftSatisfied);
    }
    Ok(case2(&c, &mut ThresholdWork::default()))
}

/// Optimal rainbow colouring of a connected threshold graph.
pub fn colour_threshold(g: &Graph) -> Result<(EdgeColouring, ThresholdRcReport), ThresholdError> {
    colour_threshold_counted(g, &mut ThresholdWork::default())
}

pub fn colour_threshold_counted(
    g: &Graph,
    work: &mut ThresholdWork,
) -> Result<(EdgeColouring, ThresholdRcReport), ThresholdError> {
    let c = Canonical::new(g)?;
    let col = if c.kraft_sum.is_satisfied() {
        case1(&c, work)?
    } else {
        case2(&c, work)
    };
    Ok((col, c.report()))
}
