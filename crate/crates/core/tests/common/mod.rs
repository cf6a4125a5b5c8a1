#![allow(dead_code)]

use rainbow_core::graph::{EdgeColouring, Graph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Adjacency bit masks.
pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.n()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Split by trying every bipartition into a clique and an independent set.
pub fn brute_is_split(adj: &[u32]) -> bool {
    let n = adj.len();
    let all = (1u32 << n) - 1;
    (0..=all).any(|clique| {
        (0..n).all(|v| {
            let bit = 1 << v;
            if clique & bit != 0 {
                clique & !bit & !adj[v] == 0
            } else {
                adj[v] & !clique == 0
            }
        })
    })
}

/// Connected vertex set inducing a 2-regular graph, i.e. an induced cycle.
fn induces_cycle(adj: &[u32], set: u32) -> bool {
    let mut v = set.trailing_zeros() as usize;
    if (0..adj.len()).any(|x| set >> x & 1 == 1 && (adj[x] & set).count_ones() != 2) {
        return false;
    }
    // walk the cycle from its lowest vertex
    let (start, mut prev, mut len) = (v, usize::MAX, 0);
    loop {
        let next = (0..adj.len())
            .find(|&w| set >> w & adj[v] >> w & 1 == 1 && w != prev)
            .expect("degree two");
        prev = v;
        v = next;
        len += 1;
        if v == start {
            return len == set.count_ones();
        }
    }
}

/// Chordal iff no vertex set of size at least four induces a cycle.
pub fn brute_is_chordal(adj: &[u32]) -> bool {
    let n = adj.len();
    (0u32..1 << n)
        .filter(|s| s.count_ones() >= 4)
        .all(|s| !induces_cycle(adj, s))
}

/// Threshold iff no 4-set induces `P_4`, `C_4` or `2K_2`, recognised by
/// their induced degree sequences `1,1,2,2`, `2,2,2,2` and `1,1,1,1`.
pub fn brute_is_threshold(adj: &[u32]) -> bool {
    let n = adj.len();
    for s in (0u32..1 << n).filter(|s| s.count_ones() == 4) {
        let mut degrees: Vec<u32> = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| (adj[v] & s).count_ones())
            .collect();
        degrees.sort_unstable();
        if matches!(degrees.as_slice(), [1, 1, 2, 2] | [2, 2, 2, 2] | [1, 1, 1, 1]) {
            return false;
        }
    }
    true
}

/// Rainbow connectivity by listing every simple path of every pair.
pub struct PathOracle {
    /// `paths[pair]` holds the edge-id sets of the simple paths of one pair.
    paths: Vec<Vec<Vec<usize>>>,
    m: usize,
}

impl PathOracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut paths = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let mut found = Vec::new();
                let mut on_path = vec![false; n];
                on_path[u] = true;
                collect_paths(g, u, v, &mut on_path, &mut Vec::new(), &mut found);
                paths.push(found);
            }
        }
        Self { paths, m: g.m() }
    }

    pub fn is_rainbow(&self, colours: &[usize]) -> bool {
        self.paths.iter().all(|pair| {
            pair.iter().any(|path| {
                let mut seen = 0u64;
                path.iter().all(|&e| {
                    let bit = 1u64 << colours[e];
                    let fresh = seen & bit == 0;
                    seen |= bit;
                    fresh
                })
            })
        })
    }

    /// Smallest `k` admitting a rainbow colouring, trying colourings in
    /// restricted-growth form (each edge uses at most one new colour).
    pub fn rc(&self) -> usize {
        if self.m == 0 {
            return 0;
        }
        (1..=self.m)
            .find(|&k| {
                let mut colours = vec![0; self.m];
                self.search(&mut colours, 0, 0, k)
            })
            .expect("distinct colours on every edge work")
    }

    fn search(&self, colours: &mut Vec<usize>, pos: usize, used: usize, k: usize) -> bool {
        if pos == self.m {
            return self.is_rainbow(colours);
        }
        for c in 0..k.min(used + 1) {
            colours[pos] = c;
            if self.search(colours, pos + 1, used.max(c + 1), k) {
                return true;
            }
        }
        false
    }
}

fn collect_paths(
    g: &Graph,
    at: usize,
    target: usize,
    on_path: &mut [bool],
    edges: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if at == target {
        out.push(edges.clone());
        return;
    }
    for &(w, e) in g.adjacency(at) {
        if !on_path[w] {
            on_path[w] = true;
            edges.push(e);
            collect_paths(g, w, target, on_path, edges, out);
            edges.pop();
            on_path[w] = false;
        }
    }
}

/// Random connected split graph: a clique of `c` vertices and `i` further
/// vertices, each joined to a non-empty random subset of the clique.
pub fn random_split(rng: &mut StdRng, c: usize, i: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for x in c..c + i {
        let anchor = rng.gen_range(0..c);
        for u in 0..c {
            if u == anchor || rng.gen_bool(density) {
                edges.push((u, x));
            }
        }
    }
    shuffle_labels(rng, c + i, edges)
}

/// Random connected threshold graph from a creation sequence whose last
/// step is dominating.
pub fn random_threshold(rng: &mut StdRng, n: usize, p_dominating: f64) -> Graph {
    let mut edges = Vec::new();
    for t in 1..n {
        if t == n - 1 || rng.gen_bool(p_dominating) {
            edges.extend((0..t).map(|u| (u, t)));
        }
    }
    shuffle_labels(rng, n, edges)
}

/// Relabels vertices and shuffles the edge order.
pub fn shuffle_labels(rng: &mut StdRng, n: usize, mut edges: Vec<(usize, usize)>) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    edges.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

pub fn uses_at_most(col: &EdgeColouring, k: usize) -> bool {
    col.colours().iter().all(|&c| c < k)
}
