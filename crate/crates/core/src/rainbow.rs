//! Rainbow connectivity: the verifier, the diameter and pendant lower
//! bounds, and an exhaustive search for the rainbow connection number.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{diameter, is_connected, EdgeColouring, Graph, GraphError, Vertex};

/// Colour sets are `u64` bit masks.
pub const MAX_COLOURS: usize = 64;

/// Default cap on `k^m` for the exhaustive search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} colours exceeds the {MAX_COLOURS}-colour limit")]
    TooManyColours(usize),
    #[error("at least one colour is required")]
    NoColours,
    #[error("search space {k}^{m} exceeds the budget of {budget} states")]
    BudgetExceeded { k: usize, m: usize, budget: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowVerdict {
    pub connected: bool,
    /// First pair `(u, v)`, `u < v`, with no rainbow path.
    pub witness_failure: Option<(Vertex, Vertex)>,
    /// Vertex pairs confirmed to have a rainbow path.
    pub paths_checked: usize,
    /// Longest rainbow walk explored by the search; never above the colour
    /// count.
    pub max_depth: usize,
}

/// Breadth-first search over `(vertex, used colours, wildcard edges)`.
///
/// Uncoloured edges (`None`) are wildcards that may take any colour not
/// already on the walk, so a walk is admissible while
/// `|used| + wildcards ≤ limit`. With a total colouring this is exactly the
/// rainbow-path relation.
struct RainbowSearch<'a> {
    g: &'a Graph,
    colours: &'a [Option<usize>],
    limit: usize,
}

impl RainbowSearch<'_> {
    fn reach(&self, source: Vertex, max_depth: &mut usize) -> Vec<bool> {
        let n = self.g.n();
        let mut reached = vec![false; n];
        reached[source] = true;
        let mut remaining = n - 1;
        // Antichain of non-dominated states seen at each vertex.
        let mut seen: Vec<Vec<(u64, usize)>> = vec![Vec::new(); n];
        seen[source].push((0, 0));
        let mut queue = VecDeque::from([(source, 0u64, 0usize, 0usize)]);
        while let Some((v, mask, wild, depth)) = queue.pop_front() {
            if remaining == 0 {
                break;
            }
            for &(w, e) in self.g.adjacency(v) {
                let (next_mask, next_wild) = match self.colours[e] {
                    Some(c) => {
                        let bit = 1u64 << c;
                        if mask & bit != 0 {
                            continue;
                        }
                        (mask | bit, wild)
                    }
                    None => (mask, wild + 1),
                };
                if next_mask.count_ones() as usize + next_wild > self.limit {
                    continue;
                }
                let states = &mut seen[w];
                if states.iter().any(|&(m, x)| m & next_mask == m && x <= next_wild) {
                    continue;
                }
                states.retain(|&(m, x)| !(m & next_mask == next_mask && x >= next_wild));
                states.push((next_mask, next_wild));
                if !reached[w] {
                    reached[w] = true;
                    remaining -= 1;
                }
                *max_depth = (*max_depth).max(depth + 1);
                queue.push_back((w, next_mask, next_wild, depth + 1));
            }
        }
        reached
    }

    /// First pair without an admissible walk, scanning sources in order.
    fn first_failure(&self, checked: &mut usize, max_depth: &mut usize) -> Option<(Vertex, Vertex)> {
        let n = self.g.n();
        for u in 0..n {
            let reached = self.reach(u, max_depth);
            for (v, &ok) in reached.iter().enumerate().skip(u + 1) {
                if !ok {
                    return Some((u, v));
                }
                *checked += 1;
            }
        }
        None
    }
}

fn check_colour_count(c: usize) -> Result<(), RainbowError> {
    if c == 0 {
        Err(RainbowError::NoColours)
    } else if c > MAX_COLOURS {
        Err(RainbowError::TooManyColours(c))
    } else {
        Ok(())
    }
}

/// Decides whether every pair of vertices is joined by a path with pairwise
/// distinct edge colours.
pub fn verify_rainbow(g: &Graph, col: &EdgeColouring) -> Result<RainbowVerdict, RainbowError> {
    if col.len() != g.m() {
        return Err(GraphError::ColouringMismatch(format!("{} colours for {} edges", col.len(), g.m())).into());
    }
    check_colour_count(col.colour_count())?;
    if !is_connected(g) {
        return Err(RainbowError::Disconnected);
    }
    let colours: Vec<Option<usize>> = col.colours().iter().copied().map(Some).collect();
    let search = RainbowSearch {
        g,
        colours: &colours,
        limit: col.colour_count(),
    };
    let mut paths_checked = 0;
    let mut max_depth = 0;
    let witness_failure = search.first_failure(&mut paths_checked, &mut max_depth);
    Ok(RainbowVerdict {
        connected: witness_failure.is_none(),
        witness_failure,
        paths_checked,
        max_depth,
    })
}

/// Number of distinct pendant edges. Two pendant edges can never share a
/// colour, and for `K_2` the two pendant vertices share a single edge.
pub fn pendant_edge_count(g: &Graph) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| g.degree(u) == 1 || g.degree(v) == 1)
        .count()
}

/// `max(diam, p)`.
pub fn rc_lower_bound(g: &Graph) -> Result<usize, RainbowError> {
    let d = diameter(g).map_err(|_| RainbowError::Disconnected)?;
    Ok(d.max(pendant_edge_count(g)))
}

fn check_budget(k: usize, m: usize, budget: u64) -> Result<(), RainbowError> {
    let mut states: u128 = 1;
    for _ in 0..m {
        states = states.saturating_mul(k as u128);
        if states > budget as u128 {
            return Err(RainbowError::BudgetExceeded { k, m, budget });
        }
    }
    Ok(())
}

/// Edge order for the backtracking search: breadth-first from vertex 0, so
/// that pairs get fully decided early.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.m());
    let mut taken = vec![false; g.m()];
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.adjacency(v) {
            if !taken[e] {
                taken[e] = true;
                order.push(e);
            }
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

struct Backtrack<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    colours: Vec<Option<usize>>,
}

impl Backtrack<'_> {
    fn feasible(&self) -> bool {
        let search = RainbowSearch {
            g: self.g,
            colours: &self.colours,
            limit: self.k,
        };
        search.first_failure(&mut 0, &mut 0).is_none()
    }

    /// Colours are introduced in order (the next edge may use at most one
    /// colour beyond those already used), which removes colour permutations
    /// and in particular fixes colour 0 on the first edge.
    fn run(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let e = self.order[pos];
        for c in 0..self.k.min(used + 1) {
            self.colours[e] = Some(c);
            if self.feasible() && self.run(pos + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colours[e] = None;
        false
    }
}

/// Exhaustive search for a rainbow colouring with colours `0..k`.
pub fn is_k_rainbow_colourable(g: &Graph, k: usize, budget: u64) -> Result<Option<EdgeColouring>, RainbowError> {
    check_colour_count(k)?;
    if !is_connected(g) {
        return Err(RainbowError::Disconnected);
    }
    check_budget(k, g.m(), budget)?;
    let mut search = Backtrack {
        g,
        k,
        order: search_order(g),
        colours: vec![None; g.m()],
    };
    if !search.run(0, 0) {
        return Ok(None);
    }
    let colours = search
        .colours
        .into_iter()
        .map(|c| c.expect("every edge coloured"))
        .collect();
    let col = EdgeColouring::new(g, k, colours)?;
    debug_assert!(verify_rainbow(g, &col).map(|v| v.connected).unwrap_or(false));
    Ok(Some(col))
}

/// Smallest `k` admitting a rainbow colouring, with a witness. A single
/// vertex needs no colours and yields `(0, None)`.
pub fn rc_exact_with_witness(g: &Graph, budget: u64) -> Result<(usize, Option<EdgeColouring>), RainbowError> {
    let lower = rc_lower_bound(g)?;
    if g.m() == 0 {
        return Ok((0, None));
    }
    for k in lower.max(1)..=g.m() {
        if let Some(col) = is_k_rainbow_colourable(g, k, budget)? {
            return Ok((k, Some(col)));
        }
    }
    unreachable!("a spanning tree with distinct colours is always rainbow")
}

pub fn rc_exact(g: &Graph, budget: u64) -> Result<usize, RainbowError> {
    rc_exact_with_witness(g, budget).map(|(k, _)| k)
}
