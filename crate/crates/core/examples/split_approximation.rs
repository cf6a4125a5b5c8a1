//! The +1 split colouring next to the exact rc from the oracle.

use rainbow_core::graph::Graph;
use rainbow_core::rainbow::{rc_exact, DEFAULT_BUDGET};
use rainbow_core::recognize::split_partition;
use rainbow_core::split::{colour_split, split_rc_bounds};

fn main() {
    // clique {1,2,3,4}; 5 ~ {1,2}; 6 ~ {3}; 7 ~ {2,3,4}
    let g = Graph::from_edges(
        7,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 0),
            (4, 1),
            (5, 2),
            (6, 1),
            (6, 2),
            (6, 3),
        ],
    )
    .unwrap();
    let part = split_partition(&g).expect("split graph");
    let one_based = |vs: &[usize]| vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    println!("clique: {}", one_based(part.clique()));
    println!("independent: {}", one_based(part.independent()));

    let col = colour_split(&g, &part).unwrap();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        println!("  {{{}, {}}} -> {}", u + 1, v + 1, col.colour(e));
    }
    println!("{}", split_rc_bounds(&g).unwrap());
    println!("rc (exhaustive) = {}", rc_exact(&g, DEFAULT_BUDGET).unwrap());
}
