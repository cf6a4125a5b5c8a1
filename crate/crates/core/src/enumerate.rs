//! Small-graph generators: threshold graphs from creation sequences and all
//! graphs on a few vertices as adjacency bit masks.

use thiserror::Error;

use crate::graph::{is_connected, Graph};
use crate::recognize::Addition;

/// Largest order accepted by [`enumerate_threshold`].
pub const MAX_THRESHOLD_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {0} exceeds the limit of {MAX_THRESHOLD_ORDER}")]
    TooLarge(usize),
}

/// Threshold graph on `0..=additions.len()`: vertex 0 comes first, vertex
/// `t` is the `t`-th addition.
pub fn threshold_from_sequence(additions: &[Addition]) -> Graph {
    let n = additions.len() + 1;
    let mut edges = Vec::new();
    for (t, &kind) in additions.iter().enumerate() {
        if kind == Addition::Dominating {
            edges.extend((0..=t).map(|u| (u, t + 1)));
        }
    }
    Graph::from_edges(n, edges).expect("distinct endpoints")
}

/// One connected threshold graph per creation sequence whose last addition
/// is dominating, for every order `2..=max_n`: `2^(n-2)` graphs of order
/// `n`. Different sequences may give isomorphic graphs.
pub fn enumerate_threshold(max_n: usize) -> Result<Vec<(Vec<Addition>, Graph)>, EnumerateError> {
    if max_n > MAX_THRESHOLD_ORDER {
        return Err(EnumerateError::TooLarge(max_n));
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        let free = n - 2;
        for bits in 0..1usize << free {
            // bit j (from the top) set means the (j+1)-th addition dominates
            let mut seq: Vec<Addition> = (0..free)
                .map(|j| {
                    if bits >> (free - 1 - j) & 1 == 1 {
                        Addition::Dominating
                    } else {
                        Addition::Isolated
                    }
                })
                .collect();
            seq.push(Addition::Dominating);
            let g = threshold_from_sequence(&seq);
            out.push((seq, g));
        }
    }
    Ok(out)
}

pub fn sequence_string(additions: &[Addition]) -> String {
    additions.iter().map(|a| a.symbol()).collect()
}

/// Vertex pairs `(u, v)`, `u < v`, in the bit order used by
/// [`graph_from_mask`].
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Graph whose edge set is the pairs selected by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("pairs are distinct")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut current, &mut all);
    all
}

fn heap_permute(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, current, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        current.swap(j, k - 1);
    }
    heap_permute(k - 1, current, out);
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices: the graph of the smallest edge mask in the class.
/// Practical up to `n = 6`.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "order {n} out of range");
    let pairs = pair_list(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    // for each permutation, where each pair bit moves to
    let moves: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index[p[u]][p[v]]).collect())
        .collect();
    let apply = |mask: u64, mv: &[usize]| {
        mv.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(0u64, |acc, (_, &j)| acc | 1 << j)
    };
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        // keep the mask only if it is the smallest in its orbit
        if moves.iter().any(|mv| apply(mask, mv) < mask) {
            continue;
        }
        let g = graph_from_mask(n, mask);
        if is_connected(&g) {
            out.push(g);
        }
    }
    out
}
