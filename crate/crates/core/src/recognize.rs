//! Split, threshold and chordal recognition.

use std::cmp::Ordering;

use crate::graph::{degree_profile, DegreeProfile, Graph, Vertex};

/// Clique / independent-set partition read off the degree sequence.
///
/// In canonical order the clique is the prefix `0..clique_size` and the
/// independent set is the rest. A vertex with `d_i = i - 1` (1-based) sits on
/// the boundary and is put on the independent side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    profile: DegreeProfile,
    clique_size: usize,
}

impl SplitPartition {
    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    pub fn clique_size(&self) -> usize {
        self.clique_size
    }

    /// 1-based canonical index of the first independent vertex, the `k`
    /// of `k = min{i : d_i ≤ i - 1}`.
    pub fn k(&self) -> usize {
        self.clique_size + 1
    }

    /// Clique vertices (original ids) in canonical order.
    pub fn clique(&self) -> &[Vertex] {
        &self.profile.order()[..self.clique_size]
    }

    /// Independent vertices (original ids) in canonical order.
    pub fn independent(&self) -> &[Vertex] {
        &self.profile.order()[self.clique_size..]
    }

    pub fn in_clique(&self, v: Vertex) -> bool {
        self.profile.position_of(v) < self.clique_size
    }
}

/// Returns the degree-based partition when it is a valid split partition,
/// `None` when the graph is not split.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let profile = degree_profile(g);
    let clique_size = profile.split_index();
    let part = SplitPartition { profile, clique_size };
    for &v in part.clique() {
        let inside = g.neighbours(v).filter(|&w| part.in_clique(w)).count();
        if inside != clique_size - 1 {
            return None;
        }
    }
    for &v in part.independent() {
        if !g.neighbours(v).all(|w| part.in_clique(w)) {
            return None;
        }
    }
    Some(part)
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Addition {
    Isolated,
    Dominating,
}

impl Addition {
    pub fn symbol(self) -> char {
        match self {
            Addition::Isolated => 'I',
            Addition::Dominating => 'D',
        }
    }
}

/// Creation sequence of a threshold graph: `steps[t]` is the vertex added at
/// time `t` and whether it arrived isolated or dominating. The first step is
/// always recorded as isolated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CreationSequence {
    pub steps: Vec<(Vertex, Addition)>,
}

impl CreationSequence {
    /// Rebuilds the graph the sequence describes, on the original ids.
    pub fn build(&self) -> Graph {
        let n = self.steps.len();
        let mut edges = Vec::new();
        for (t, &(v, kind)) in self.steps.iter().enumerate() {
            if kind == Addition::Dominating {
                edges.extend(self.steps[..t].iter().map(|&(u, _)| (u, v)));
            }
        }
        Graph::from_edges(n, edges).expect("creation sequence over distinct vertices")
    }
}

/// Peels isolated or dominating vertices until the graph is empty. Returns
/// the reversed peeling order as a creation sequence, or `None` when the
/// peeling gets stuck.
pub fn is_threshold(g: &Graph) -> Option<CreationSequence> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut removed = Vec::with_capacity(n);
    for size in (1..=n).rev() {
        let mut pick = None;
        for d in [0, size - 1] {
            while let Some(v) = buckets[d].pop() {
                if alive[v] && deg[v] == d {
                    pick = Some(v);
                    break;
                }
            }
            if pick.is_some() {
                break;
            }
        }
        let v = pick?;
        alive[v] = false;
        let kind = if deg[v] == 0 {
            Addition::Isolated
        } else {
            Addition::Dominating
        };
        removed.push((v, kind));
        for w in g.neighbours(v) {
            if alive[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
            }
        }
    }
    removed.reverse();
    if let Some(first) = removed.first_mut() {
        first.1 = Addition::Isolated;
    }
    Some(CreationSequence { steps: removed })
}

/// True when every independent vertex at canonical position `i` has exactly
/// the neighbours at positions `0..d_i`.
pub fn neighbourhood_nesting_check(g: &Graph, part: &SplitPartition) -> bool {
    let profile = part.profile();
    part.independent().iter().all(|&v| {
        let d = g.degree(v);
        g.neighbours(v).all(|w| profile.position_of(w) < d)
    })
}

/// Lexicographic breadth-first search order. Ties go to the smallest id.
pub fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .reduce(|best, v| match labels[v].cmp(&labels[best]) {
                Ordering::Greater => v,
                _ => best,
            })
            .expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbours(v) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// Checks that the reverse of a LexBFS order is a perfect elimination
/// ordering.
pub fn is_chordal(g: &Graph) -> bool {
    let order = lex_bfs(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let earlier: Vec<Vertex> = g.neighbours(v).filter(|&w| pos[w] < pos[v]).collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) else {
            return true;
        };
        earlier.iter().all(|&w| w == parent || g.has_edge(w, parent))
    })
}
