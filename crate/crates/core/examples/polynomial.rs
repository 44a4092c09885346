//! Bivariate chromatic polynomials of a small signed graph in all three
//! conventions, computed three independent ways.
//!
//!     cargo run --example polynomial

use sgchrom::dc::{poly_interpolated, poly_subset, Convention, DcEngine};
use sgchrom::graph::{Mode, Sign, SignedGraph};

fn main() {
    // path 1 -(-)- 2 -(+)- 3 with a halfedge at 3
    let mut g = SignedGraph::new(Mode::Signed, 3);
    g.add_link(0, 1, Sign::Neg).unwrap();
    g.add_link(1, 2, Sign::Pos).unwrap();
    g.add_halfedge(2).unwrap();

    let engine = DcEngine::new();
    for conv in [Convention::Signed, Convention::ZeroFree] {
        let dc = engine.compute(&g, conv).unwrap();
        assert_eq!(dc.poly, poly_subset(&g, conv).unwrap().poly);
        assert_eq!(dc.poly, poly_interpolated(&g, conv).unwrap().poly);
        println!("{}\n  {}", conv.header(), dc.poly);
    }

    // the underlying unsigned graph drops signs and halfedges
    let u = g.underlying_unsigned();
    let p = engine.unsigned(&u).unwrap();
    println!("{}\n  {}", Convention::Unsigned.header(), p.poly);
    println!("P(k = 2, l = 1) = {}", p.eval_kl(2, 1));
}
