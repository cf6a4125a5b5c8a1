//! Exact rainbow connection numbers of small classic graphs.

use rainbow_core::graph::{diameter, Graph};
use rainbow_core::rainbow::{rc_exact_with_witness, rc_lower_bound, DEFAULT_BUDGET};

fn main() {
    let graphs = [
        ("K_5", Graph::complete(5)),
        ("P_5", Graph::path(5)),
        ("C_4", Graph::cycle(4)),
        ("C_5", Graph::cycle(5)),
        ("C_6", Graph::cycle(6)),
        ("K_{1,4}", Graph::star(4)),
        ("wheel W_5", {
            let mut edges: Vec<(usize, usize)> = (1..=5).map(|i| (0, i)).collect();
            edges.extend((1..=5).map(|i| (i, i % 5 + 1)));
            Graph::from_edges(6, edges).unwrap()
        }),
    ];
    for (name, g) in graphs {
        let (rc, witness) = rc_exact_with_witness(&g, DEFAULT_BUDGET).unwrap();
        println!(
            "{name}: diameter {}, lower bound {}, rc {rc}, witness {:?}",
            diameter(&g).unwrap(),
            rc_lower_bound(&g).unwrap(),
            witness.map(|c| c.colours().to_vec()).unwrap_or_default()
        );
    }
}
