//! Optimal colourings of a few threshold graphs, one per case.

use rainbow_core::graph::Graph;
use rainbow_core::rainbow::verify_rainbow;
use rainbow_core::threshold::colour_threshold;

fn main() {
    let graphs = [
        ("K_5", Graph::complete(5)),
        // triangle {1,2,3} plus a vertex joined to 1 and 2
        (
            "paw plus",
            Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1)]).unwrap(),
        ),
        ("star with 5 leaves", Graph::star(5)),
        // three pendants hanging off one corner of a triangle
        (
            "triangle with 3 pendants",
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5)]).unwrap(),
        ),
    ];
    for (name, g) in graphs {
        let (col, report) = colour_threshold(&g).expect("connected threshold graph");
        let verdict = verify_rainbow(&g, &col).expect("verifiable");
        println!("{name}: {report}");
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            println!("  {{{}, {}}} -> {}", u + 1, v + 1, col.colour(e));
        }
        println!("  rainbow: {}", verdict.connected);
    }
}
