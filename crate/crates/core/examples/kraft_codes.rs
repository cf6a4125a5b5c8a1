//! Kraft sums and the prefix codes built from them.

use rainbow_core::kraft::{build_prefix_code, codeword_string, KraftSum};

fn main() {
    for lengths in [
        vec![1, 2, 2],
        vec![2, 2, 3, 3, 3],
        vec![1, 3, 3, 3, 4, 4],
        vec![1, 1, 2],
        vec![3; 9],
    ] {
        let sum = KraftSum::of(&lengths).unwrap();
        print!("{lengths:?}: sum = {sum}");
        match build_prefix_code(&lengths) {
            Ok(code) => {
                let words: Vec<String> = code.codewords().iter().map(|c| codeword_string(c)).collect();
                println!(", code {} ({} tree steps)", words.join(" "), code.tree_steps());
            }
            Err(e) => println!(", {e}"),
        }
    }
}
