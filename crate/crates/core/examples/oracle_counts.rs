//! Evaluations of the polynomial against brute-force coloring counts.
//!
//!     cargo run --example oracle_counts

use num_bigint::BigInt;
use sgchrom::count::{count_signed, count_unsigned, count_zero_free};
use sgchrom::dc::DcEngine;
use sgchrom::graph::{Mode, Sign, SignedGraph};

fn main() {
    // triangle with one positive edge
    let mut g = SignedGraph::new(Mode::Signed, 3);
    g.add_link(0, 1, Sign::Neg).unwrap();
    g.add_link(1, 2, Sign::Neg).unwrap();
    g.add_link(0, 2, Sign::Pos).unwrap();
    let u = g.underlying_unsigned();

    let engine = DcEngine::new();
    let (s, z, un) = (engine.signed(&g), engine.zero_free(&g), engine.unsigned(&u).unwrap());
    println!(" k  l   signed  zero-free  unsigned");
    for k in 0..=3u32 {
        for l in 0..=2u32 {
            let counts = [count_signed(&g, k, l), count_zero_free(&g, k, l), count_unsigned(&u, k, l).unwrap()];
            let evals = [&s, &z, &un].map(|p| p.eval_kl(k as i64, l as i64));
            for (c, e) in counts.iter().zip(&evals) {
                assert_eq!(BigInt::from(*c), *e);
            }
            println!("{k:>2} {l:>2} {:>8} {:>10} {:>9}", counts[0], counts[1], counts[2]);
        }
    }
}
