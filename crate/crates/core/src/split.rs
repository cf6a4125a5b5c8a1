//! Linear-time rainbow colouring of connected split graphs using at most
//! one colour more than optimal, and the matching rc bounds.

use std::fmt;

use thiserror::Error;

use crate::graph::{diameter, is_connected, EdgeColouring, Graph, VisitCounter};
use crate::recognize::{split_partition, SplitPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("graph is not a split graph")]
    NotSplit,
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitColouringReport {
    pub colours_used: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    /// Pendant vertices on the independent side.
    pub p: usize,
    pub d: usize,
}

impl fmt::Display for SplitColouringReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "colours_used={} lower_bound={} upper_bound={} p={} d={}",
            self.colours_used, self.lower_bound, self.upper_bound, self.p, self.d
        )
    }
}

/// Clique edges get 0, the pendant edges of the independent side get
/// `1..=p` by ascending pendant id, and every other independent vertex gets
/// colour 1 on the edge to its lowest-id neighbour and 2 on the rest.
pub fn colour_split(g: &Graph, part: &SplitPartition) -> Result<EdgeColouring, SplitError> {
    colour_split_counted(g, part, &mut VisitCounter::default())
}

pub fn colour_split_counted(
    g: &Graph,
    part: &SplitPartition,
    visits: &mut VisitCounter,
) -> Result<EdgeColouring, SplitError> {
    if !is_connected(g) {
        return Err(SplitError::Disconnected);
    }
    if g.is_complete() {
        visits.visit(g.m());
        return Ok(EdgeColouring::new(g, 1, vec![0; g.m()]).expect("single colour"));
    }
    debug_assert!(
        part.clique().iter().all(|&v| g.degree(v) > 1),
        "pendant clique vertices only occur in K_2"
    );

    let mut colours = vec![0; g.m()];
    // clique edges keep colour 0
    visits.visit(g.m());

    let mut p = 0;
    for v in (0..g.n()).filter(|&v| !part.in_clique(v)) {
        let adj = g.adjacency(v);
        if let [(_, e)] = adj {
            p += 1;
            colours[*e] = p;
        } else {
            colours[adj[0].1] = 1;
            for &(_, e) in &adj[1..] {
                colours[e] = 2;
            }
        }
        visits.visit(adj.len());
    }
    Ok(EdgeColouring::new(g, p.max(2) + 1, colours).expect("colours within 0..=max(p, 2)"))
}

/// Colours the graph and reports `max{p, d} ≤ rc ≤ max{p + 1, 3}`.
pub fn split_rc_bounds(g: &Graph) -> Result<SplitColouringReport, SplitError> {
    if !is_connected(g) {
        return Err(SplitError::Disconnected);
    }
    let part = split_partition(g).ok_or(SplitError::NotSplit)?;
    let col = colour_split(g, &part)?;
    let d = diameter(g).map_err(|_| SplitError::Disconnected)?;
    let p = part.independent().iter().filter(|&&v| g.degree(v) == 1).count();
    Ok(SplitColouringReport {
        colours_used: col.colours_used(),
        lower_bound: p.max(d),
        upper_bound: (p + 1).max(3),
        p,
        d,
    })
}
