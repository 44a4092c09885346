//! Small-graph families for exhaustive and sampled testing.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Mode, Sign, SignedGraph};

/// Edge types available to the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeType {
    Link(usize, usize, Sign),
    Loop(usize, Sign),
    Halfedge(usize),
}

fn build(mode: Mode, n: usize, edges: &[EdgeType]) -> SignedGraph {
    let mut g = SignedGraph::new(mode, n);
    for &e in edges {
        match e {
            EdgeType::Link(a, b, s) => g.add_link(a, b, s),
            EdgeType::Loop(v, s) => g.add_loop(v, s),
            EdgeType::Halfedge(v) => g.add_halfedge(v),
        }
        .expect("generated edge is valid");
    }
    g
}

/// Every link, loop and halfedge type on `n` vertices, in a fixed order.
pub fn all_edge_types(n: usize, links: bool, loops: bool, halfedges: bool) -> Vec<EdgeType> {
    let mut out = Vec::new();
    for s in [Sign::Pos, Sign::Neg] {
        if links {
            for a in 0..n {
                for b in a + 1..n {
                    out.push(EdgeType::Link(a, b, s));
                }
            }
        }
        if loops {
            out.extend((0..n).map(|v| EdgeType::Loop(v, s)));
        }
    }
    if halfedges {
        out.extend((0..n).map(EdgeType::Halfedge));
    }
    out
}

/// All multisets of at most `max_size` items from `0..types`, as
/// nondecreasing index lists, ordered by size then lexicographically.
pub fn multisets(types: usize, max_size: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_size {
        let mut next = Vec::new();
        for m in &layer {
            let start = m.last().copied().unwrap_or(0) as usize;
            for t in start..types {
                let mut ext = m.clone();
                ext.push(t as u8);
                next.push(ext);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Every signed graph on exactly `n` vertices with at most `max_edges`
/// edges drawn from `types` (parallel edges allowed).
pub fn exhaustive(mode: Mode, n: usize, types: &[EdgeType], max_edges: usize) -> Vec<SignedGraph> {
    multisets(types.len(), max_edges)
        .into_iter()
        .map(|m| {
            let edges: Vec<EdgeType> = m.iter().map(|&i| types[i as usize]).collect();
            build(mode, n, &edges)
        })
        .collect()
}

/// The seeded test family: all graphs on at most one vertex, then an equal
/// seeded sample from each larger vertex count, over edge types link±,
/// loop± and halfedge with at most `max_edges` edges; `cap` graphs in total.
pub fn sampled_family(max_vertices: usize, max_edges: usize, cap: usize, seed: u64) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in 0..=max_vertices.min(1) {
        out.extend(exhaustive(Mode::Signed, n, &all_edge_types(n, true, true, true), max_edges));
    }
    out.truncate(cap);
    if max_vertices < 2 {
        return out;
    }
    let strata = max_vertices - 1;
    let room = cap - out.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 2..=max_vertices {
        // the largest vertex count takes the remainder
        let share = if n == max_vertices { cap - out.len() } else { room / strata };
        let types = all_edge_types(n, true, true, true);
        let all = multisets(types.len(), max_edges);
        let mut picked: Vec<usize> = if all.len() <= share {
            (0..all.len()).collect()
        } else {
            sample(&mut rng, all.len(), share).into_vec()
        };
        picked.sort_unstable();
        for i in picked {
            let edges: Vec<EdgeType> = all[i].iter().map(|&t| types[t as usize]).collect();
            out.push(build(Mode::Signed, n, &edges));
        }
    }
    out
}

/// All link-only signed graphs with at most `max_vertices` vertices and
/// `max_edges` links, parallel links included.
pub fn link_only_signed(max_vertices: usize, max_edges: usize) -> Vec<SignedGraph> {
    (0..=max_vertices)
        .flat_map(|n| exhaustive(Mode::Signed, n, &all_edge_types(n, true, false, false), max_edges))
        .collect()
}

/// All labelled simple unsigned graphs with at most `max_vertices` vertices.
pub fn simple_unsigned(max_vertices: usize) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in 0..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u64..1 << pairs.len() {
            let mut g = SignedGraph::new(Mode::Unsigned, n);
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_link(a, b, Sign::Pos).unwrap();
                }
            }
            out.push(g);
        }
    }
    out
}
