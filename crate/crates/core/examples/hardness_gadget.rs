//! Builds the split and chordal gadgets for a small hypergraph and carries
//! a 3-colouring across them and back.

use rainbow_core::graph::diameter;
use rainbow_core::rainbow::verify_rainbow;
use rainbow_core::reduction::{
    brute_chi3, extract_colouring, lift_colouring, reduce_to_chordal, reduce_to_split, Hypergraph3,
};

fn main() {
    let h = Hypergraph3::new(4, vec![[0, 1, 2], [1, 2, 3]]).unwrap();
    let layouts = [
        reduce_to_split(&h),
        reduce_to_chordal(&h, 4).unwrap(),
        reduce_to_chordal(&h, 6).unwrap(),
    ];
    for layout in layouts {
        let g = layout.graph();
        let kind = if layout.is_split_gadget() { "split" } else { "chordal" };
        println!(
            "{kind} gadget, k = {}: n = {}, m = {}, diameter = {}",
            layout.k(),
            g.n(),
            g.m(),
            diameter(g).unwrap()
        );
        let c_h = brute_chi3(layout.hypergraph(), 1 << 20).unwrap().expect("3-colourable");
        let col = lift_colouring(&layout, &c_h).unwrap();
        let verdict = verify_rainbow(g, &col).unwrap();
        println!(
            "  lifted colouring uses {} colours, rainbow: {}",
            col.colours_used(),
            verdict.connected
        );
        let back = extract_colouring(&layout, &col).unwrap();
        println!("  hypergraph colouring {:?} -> {:?}", c_h.colours(), back.colours());
    }
}
