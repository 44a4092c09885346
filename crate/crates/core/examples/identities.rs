//! Independence and antibalance polynomials next to the chromatic
//! polynomial, and the full `verify` report for one graph.
//!
//!     cargo run --example identities

use sgchrom::count::{antibalance_poly, independence_poly};
use sgchrom::dc::DcEngine;
use sgchrom::graph::{Mode, Sign, SignedGraph};
use sgchrom::verify::verify_graph;

fn main() {
    let mut g = SignedGraph::new(Mode::Signed, 3);
    g.add_link(0, 1, Sign::Neg).unwrap();
    g.add_link(1, 2, Sign::Neg).unwrap();
    g.add_link(0, 2, Sign::Neg).unwrap();

    println!("independence: {}", independence_poly(&g).display_in("x"));
    println!("antibalance: {}", antibalance_poly(&g).display_with("x", "y"));
    println!("zero-free: {}", DcEngine::new().zero_free(&g).poly);
    println!();
    println!("{}", verify_graph(&g, 2, 2, &DcEngine::new()).unwrap());
}
