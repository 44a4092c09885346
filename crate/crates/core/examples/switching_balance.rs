//! Switching, balance and contraction on a small signed graph.
//!
//!     cargo run --example switching_balance

use sgchrom::dc::DcEngine;
use sgchrom::graph::{Mode, Sign, SignedGraph, Switching};

fn main() {
    // 4-cycle with two negative edges: balanced
    let mut g = SignedGraph::new(Mode::Signed, 4);
    g.add_link(0, 1, Sign::Neg).unwrap();
    g.add_link(1, 2, Sign::Pos).unwrap();
    g.add_link(2, 3, Sign::Neg).unwrap();
    let last = g.add_link(3, 0, Sign::Pos).unwrap();
    println!("balanced: {}, antibalanced: {}", g.is_balanced(), g.is_antibalanced());

    // switching at vertices 2 and 3 makes every edge positive
    let s = Switching::new(vec![Sign::Pos, Sign::Neg, Sign::Neg, Sign::Pos]);
    let h = g.switch(&s).unwrap();
    let signs: Vec<char> = h.edges().iter().map(|e| e.sign().unwrap().symbol()).collect();
    println!("after switching: {signs:?}");

    let engine = DcEngine::new();
    assert_eq!(engine.signed(&g).poly, engine.signed(&h).poly);
    println!("signed polynomial (switching invariant): {}", engine.signed(&g).poly);

    // flipping one sign breaks balance
    let mut odd = g.delete_edge(last).unwrap();
    odd.add_link(3, 0, Sign::Neg).unwrap();
    println!("one more negative edge: balanced {}", odd.is_balanced());

    let c = odd.contract_edge(odd.edges()[0].id).unwrap();
    println!("contracting the first edge leaves {} vertices and {} edges", c.vertex_count(), c.edge_count());
}
