//! Bidirected orientations and the acyclic ones.
//!
//!     cargo run --example orientations

use sgchrom::graph::{Mode, Sign, SignedGraph};
use sgchrom::orient::{count_acyclic, enumerate_orientations, is_acyclic};

fn main() {
    // negative digon plus a positive pendant link
    let mut g = SignedGraph::new(Mode::Signed, 3);
    g.add_link(0, 1, Sign::Neg).unwrap();
    g.add_link(0, 1, Sign::Neg).unwrap();
    g.add_link(1, 2, Sign::Pos).unwrap();

    let all = enumerate_orientations(&g).unwrap();
    for eta in &all {
        let sym = |x: i8| if x > 0 { '+' } else { '-' };
        let ends: Vec<String> = eta
            .ends()
            .iter()
            .map(|e| format!("{}{}", sym(e.first), e.second.map(sym).unwrap_or(' ')))
            .collect();
        println!("{} {}", if is_acyclic(&g, eta).unwrap() { "acyclic" } else { "cyclic " }, ends.join(" "));
    }
    println!("{} orientations, {} acyclic", all.len(), count_acyclic(&g).unwrap());
}
