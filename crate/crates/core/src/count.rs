//! Brute-force ground truth: proper-coloring counts by exhaustive
//! enumeration, plus the independence and antibalance polynomials by subset
//! enumeration.
//!
//! Nothing here is clever. Every count is a literal walk over the palette
//! product in row-major vertex order.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{EdgeKind, SignedGraph, Sign};
use crate::poly::{BivarPoly, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("coloring assigns {got} colors to a graph with {expected} vertices")]
    NotTotal { expected: usize, got: usize },
    #[error("color {color} at vertex {vertex} is outside the palette")]
    OutOfRange { vertex: usize, color: i64 },
    #[error("unsigned colorings need a graph without halfedges, loose edges or negative edges")]
    NotUnsigned,
}

/// Which colors a palette of size parameter `k + l` contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PaletteKind {
    /// `[-(k+l), k+l]`
    Signed,
    /// `[-(k+l), k+l]` without 0
    ZeroFree,
    /// `[1, k+l]`
    Unsigned,
}

impl PaletteKind {
    pub fn colors(self, bound: u32) -> Vec<i64> {
        let b = bound as i64;
        match self {
            PaletteKind::Signed => (-b..=b).collect(),
            PaletteKind::ZeroFree => (-b..=b).filter(|&c| c != 0).collect(),
            PaletteKind::Unsigned => (1..=b).collect(),
        }
    }

    pub fn contains(self, bound: u32, c: i64) -> bool {
        let b = bound as i64;
        match self {
            PaletteKind::Signed => (-b..=b).contains(&c),
            PaletteKind::ZeroFree => c != 0 && (-b..=b).contains(&c),
            PaletteKind::Unsigned => (1..=b).contains(&c),
        }
    }
}

/// A total vertex coloring drawn from the palette of size parameter `bound`
/// (which is `k + l`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<i64>,
    pub palette: PaletteKind,
    pub bound: u32,
}

impl Coloring {
    pub fn new(colors: Vec<i64>, palette: PaletteKind, bound: u32) -> Self {
        Coloring { colors, palette, bound }
    }
}

#[derive(Clone, Copy)]
enum Constraint {
    Link(usize, usize, i64),
    Loop(usize, i64),
    NonZero(usize),
    Never,
}

fn signed_constraints(g: &SignedGraph) -> Vec<Constraint> {
    g.edges()
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Link { a, b, sign } => Constraint::Link(a, b, sign.as_i64()),
            EdgeKind::Loop { v, sign } => Constraint::Loop(v, sign.as_i64()),
            EdgeKind::Halfedge { v } => Constraint::NonZero(v),
            EdgeKind::Loose => Constraint::Never,
        })
        .collect()
}

fn unsigned_constraints(g: &SignedGraph) -> Result<Vec<Constraint>, CountError> {
    g.edges()
        .iter()
        .map(|e| match e.kind {
            EdgeKind::Link { a, b, sign: Sign::Pos } => Ok(Constraint::Link(a, b, 1)),
            EdgeKind::Loop { v, sign: Sign::Pos } => Ok(Constraint::Loop(v, 1)),
            _ => Err(CountError::NotUnsigned),
        })
        .collect()
}

/// Signed rule: an edge `vw` fails only when `x_v = σ x_w` with `|x_v| <= k`.
/// The unsigned rule is the same test with every sign positive, since the
/// unsigned palette has no negative colors.
fn passes(c: Constraint, x: &[i64], k: i64) -> bool {
    match c {
        Constraint::Link(a, b, s) => x[a] != s * x[b] || x[a].abs() > k,
        Constraint::Loop(v, s) => x[v] != s * x[v] || x[v].abs() > k,
        Constraint::NonZero(v) => x[v] != 0,
        Constraint::Never => false,
    }
}

/// Checks the proper `(k, l)`-coloring condition edge by edge.
///
/// Signed palettes: a link or loop `vw` passes iff `x_v != σ x_w` or
/// `|x_v| = |x_w| > k`; a halfedge at `v` passes iff `x_v != 0`; a loose edge
/// never passes. Unsigned palette: `vw` passes iff `x_v != x_w` or
/// `x_v = x_w > k`, and halfedges are rejected.
pub fn is_proper(g: &SignedGraph, x: &Coloring, k: u32) -> Result<bool, CountError> {
    if x.colors.len() != g.vertex_count() {
        return Err(CountError::NotTotal {
            expected: g.vertex_count(),
            got: x.colors.len(),
        });
    }
    if let Some((vertex, &color)) = x
        .colors
        .iter()
        .enumerate()
        .find(|(_, &c)| !x.palette.contains(x.bound, c))
    {
        return Err(CountError::OutOfRange { vertex, color });
    }
    let constraints = match x.palette {
        PaletteKind::Unsigned => unsigned_constraints(g)?,
        _ => signed_constraints(g),
    };
    Ok(constraints.into_iter().all(|c| passes(c, &x.colors, k as i64)))
}

/// Calls `f` on every coloring in `palette^n`, row-major in vertex order,
/// splitting the outermost vertex across rayon workers and summing.
fn sum_over_colorings<F>(n: usize, palette: &[i64], f: F) -> u64
where
    F: Fn(&[i64]) -> u64 + Sync,
{
    if n == 0 {
        return f(&[]);
    }
    if palette.is_empty() {
        return 0;
    }
    palette
        .par_iter()
        .map(|&first| {
            let mut x = vec![palette[0]; n];
            x[0] = first;
            let mut idx = vec![0usize; n];
            let mut total = 0u64;
            loop {
                total += f(&x);
                // odometer over vertices 1..n, last vertex fastest
                let mut pos = n;
                loop {
                    if pos == 1 {
                        return total;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < palette.len() {
                        x[pos] = palette[idx[pos]];
                        break;
                    }
                    idx[pos] = 0;
                    x[pos] = palette[0];
                }
            }
        })
        .sum()
}

/// Sequential walk over `palette^n` in row-major vertex order.
pub(crate) fn for_each_coloring(n: usize, palette: &[i64], mut f: impl FnMut(&[i64])) {
    if n == 0 {
        f(&[]);
        return;
    }
    if palette.is_empty() {
        return;
    }
    let mut x = vec![palette[0]; n];
    let mut idx = vec![0usize; n];
    loop {
        f(&x);
        let mut pos = n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < palette.len() {
                x[pos] = palette[idx[pos]];
                break;
            }
            idx[pos] = 0;
            x[pos] = palette[0];
        }
    }
}

fn count_with(g: &SignedGraph, constraints: &[Constraint], palette: PaletteKind, k: u32, l: u32) -> u64 {
    let colors = palette.colors(k + l);
    let k = k as i64;
    sum_over_colorings(g.vertex_count(), &colors, |x| {
        constraints.iter().all(|&c| passes(c, x, k)) as u64
    })
}

/// Number of proper `(k, l)`-colorings in `[-(k+l), k+l]^V`.
pub fn count_signed(g: &SignedGraph, k: u32, l: u32) -> u64 {
    count_with(g, &signed_constraints(g), PaletteKind::Signed, k, l)
}

/// Number of proper `(k, l)`-colorings avoiding color 0.
pub fn count_zero_free(g: &SignedGraph, k: u32, l: u32) -> u64 {
    count_with(g, &signed_constraints(g), PaletteKind::ZeroFree, k, l)
}

/// Number of proper `(k, l)`-colorings in `[1, k+l]^V` of an unsigned graph.
pub fn count_unsigned(g: &SignedGraph, k: u32, l: u32) -> Result<u64, CountError> {
    let constraints = unsigned_constraints(g)?;
    Ok(count_with(g, &constraints, PaletteKind::Unsigned, k, l))
}

/// Zaslavsky's chromatic polynomial at `2k + 1`: the `l = 0` signed count.
pub fn zaslavsky(g: &SignedGraph, k: u32) -> u64 {
    count_signed(g, k, 0)
}

/// Zaslavsky's zero-free chromatic polynomial at `2k`.
pub fn zaslavsky_zero_free(g: &SignedGraph, k: u32) -> u64 {
    count_zero_free(g, k, 0)
}

/// Counts for every `(k, l)` with `k + l <= max_bound`, from one pass over
/// `palette(max_bound)^V`.
///
/// Each coloring is classified by its largest absolute color `m` and by the
/// smallest `|x_v|` among edges it holds with equality (`x_v = σ x_w`). It is
/// proper for `k` exactly when that smallest value exceeds `k`, and it lies in
/// the `k + l` palette when `m <= k + l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    max_bound: u32,
    // hist[t][m]; t = max_bound + 1 stands for "no equality edge"
    hist: Vec<Vec<u64>>,
}

impl CountTable {
    pub fn new(g: &SignedGraph, palette: PaletteKind, max_bound: u32) -> Result<Self, CountError> {
        let constraints = match palette {
            PaletteKind::Unsigned => unsigned_constraints(g)?,
            _ => signed_constraints(g),
        };
        let colors = palette.colors(max_bound);
        let width = max_bound as usize + 2;
        let cells = width * width;
        let hist_flat: Vec<u64> = if g.vertex_count() == 0 {
            let mut h = vec![0u64; cells];
            if !constraints.iter().any(|c| matches!(c, Constraint::Never)) {
                h[(width - 1) * width] = 1;
            }
            h
        } else {
            colors
                .par_iter()
                .map(|&first| {
                    let mut h = vec![0u64; cells];
                    let n = g.vertex_count();
                    let mut x = vec![colors[0]; n];
                    x[0] = first;
                    let mut idx = vec![0usize; n];
                    loop {
                        if let Some(t) = equality_threshold(&constraints, &x, max_bound) {
                            let m = x.iter().map(|c| c.unsigned_abs()).max().unwrap() as usize;
                            h[t * width + m] += 1;
                        }
                        let mut pos = n;
                        loop {
                            if pos == 1 {
                                return h;
                            }
                            pos -= 1;
                            idx[pos] += 1;
                            if idx[pos] < colors.len() {
                                x[pos] = colors[idx[pos]];
                                break;
                            }
                            idx[pos] = 0;
                            x[pos] = colors[0];
                        }
                    }
                })
                .reduce(
                    || vec![0u64; cells],
                    |mut a, b| {
                        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                        a
                    },
                )
        };
        Ok(CountTable {
            max_bound,
            hist: hist_flat.chunks(width).map(|c| c.to_vec()).collect(),
        })
    }

    pub fn max_bound(&self) -> u32 {
        self.max_bound
    }

    /// The count at `(k, l)`, or `None` when `k + l` exceeds the table.
    pub fn get(&self, k: u32, l: u32) -> Option<u64> {
        if k + l > self.max_bound {
            return None;
        }
        let mut total = 0;
        for t in (k as usize + 1)..self.hist.len() {
            total += self.hist[t][..=(k + l) as usize].iter().sum::<u64>();
        }
        Some(total)
    }
}

/// `None` if some constraint fails independently of `k` (halfedge at a zero,
/// loose edge); otherwise the smallest `|x_v|` over equality edges, capped
/// at `max_bound + 1`.
fn equality_threshold(constraints: &[Constraint], x: &[i64], max_bound: u32) -> Option<usize> {
    let mut t = max_bound as usize + 1;
    for &c in constraints {
        match c {
            Constraint::Link(a, b, s) => {
                if x[a] == s * x[b] {
                    t = t.min(x[a].unsigned_abs() as usize);
                }
            }
            Constraint::Loop(v, s) => {
                if x[v] == s * x[v] {
                    t = t.min(x[v].unsigned_abs() as usize);
                }
            }
            Constraint::NonZero(v) => {
                if x[v] == 0 {
                    return None;
                }
            }
            Constraint::Never => return None,
        }
    }
    Some(t)
}

/// `Σ x^{|V - W|}` over vertex sets `W` containing no link with both ends in
/// `W`. Loops and halfedges do not make a vertex self-adjacent here.
pub fn independence_poly(g: &SignedGraph) -> UniPoly {
    let n = g.vertex_count();
    let links: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|e| match e.kind {
            EdgeKind::Link { a, b, .. } => Some((a, b)),
            _ => None,
        })
        .collect();
    let mut coeffs = vec![BigInt::default(); n + 1];
    for mask in 0u64..1 << n {
        let inside = |v: usize| mask >> v & 1 == 1;
        if links.iter().all(|&(a, b)| !(inside(a) && inside(b))) {
            coeffs[n - mask.count_ones() as usize] += 1;
        }
    }
    UniPoly::from_coeffs(coeffs)
}

/// `Σ x^{|V(S)|} y^{c(S)}` over the induced subgraphs `S = G - W` that are
/// antibalanced. `x` occupies the first variable slot and `y` the second;
/// render with `display_with("x", "y")`.
pub fn antibalance_poly(g: &SignedGraph) -> BivarPoly {
    let n = g.vertex_count();
    let mut out = BivarPoly::zero();
    for mask in 0u64..1 << n {
        let removed: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let s = g.induced_delete(&removed).expect("vertices in range");
        if s.is_antibalanced() {
            let size = s.vertex_count() as u32;
            let comps = s.components().len() as u32;
            out = &out + &BivarPoly::monomial(BigInt::one(), size, comps);
        }
    }
    out
}
