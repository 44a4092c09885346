//! Reciprocity at negative arguments: both sides for the unsigned triangle,
//! with unit and with induced weights on colorings above k.
//!
//!     cargo run --example reciprocity

use sgchrom::graph::{Mode, Sign, SignedGraph};
use sgchrom::orient::{
    check_reciprocity_with, reciprocity_rhs_unsigned_with, stanley_special, zaslavsky_special, OuterWeight,
};

fn main() {
    let mut k3 = SignedGraph::new(Mode::Unsigned, 3);
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        k3.add_link(a, b, Sign::Pos).unwrap();
    }

    for (k, l) in [(1, 1), (2, 1), (3, 2)] {
        for w in [OuterWeight::One, OuterWeight::Induced] {
            let v = check_reciprocity_with(&k3, k, l, Mode::Unsigned, w).unwrap();
            let r = reciprocity_rhs_unsigned_with(&k3, k, l, w).unwrap();
            println!(
                "k={k} l={l} {w:?}: lhs {} rhs {} (inside {}, outside {} colorings weighing {}) {}",
                v.lhs,
                v.rhs,
                r.inner_total(),
                r.outer_count,
                r.outer_weight,
                if v.passed() { "agree" } else { "differ" }
            );
        }
    }

    let v = stanley_special(&k3).unwrap();
    println!("(-1)^n P(-1, 0) = {}, acyclic orientations = {}", v.lhs, v.rhs);
    let signed = k3.with_mode(Mode::Signed).unwrap();
    let v = zaslavsky_special(&signed).unwrap();
    println!("signed: (-1)^n P(-1, 0) = {}, acyclic orientations = {}", v.lhs, v.rhs);
}
