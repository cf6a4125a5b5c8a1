//! Split, threshold and chordal recognition with their certificates.

use rainbow_core::graph::Graph;
use rainbow_core::recognize::{is_chordal, is_threshold, lex_bfs, split_partition};

fn main() {
    let graphs = [
        ("P_4", Graph::path(4)),
        ("C_4", Graph::cycle(4)),
        ("paw", Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()),
        ("K_{1,3}", Graph::star(3)),
    ];
    let one_based = |vs: &[usize]| vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",");
    for (name, g) in graphs {
        println!("{name}:");
        match split_partition(&g) {
            Some(p) => println!(
                "  split, clique {} independent {}",
                one_based(p.clique()),
                one_based(p.independent())
            ),
            None => println!("  not split"),
        }
        match is_threshold(&g) {
            Some(seq) => {
                let steps: Vec<String> = seq
                    .steps
                    .iter()
                    .map(|&(v, a)| format!("{}{}", v + 1, a.symbol()))
                    .collect();
                println!("  threshold, creation sequence {}", steps.join(" "));
            }
            None => println!("  not threshold"),
        }
        println!(
            "  chordal: {} (LexBFS order {})",
            is_chordal(&g),
            one_based(&lex_bfs(&g))
        );
    }
}
