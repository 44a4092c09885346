//! Orientations of signed graphs and the reciprocity checks built on them.
//!
//! An orientation is an incidence function η on edge ends: `η = +1` when the
//! arrow at that end points into the vertex, `-1` when it points away. A link
//! or loop `e` with sign σ satisfies `σ = -η_first · η_second`; unsigned graphs
//! are the all-positive case, where each edge has one head and one tail.
//!
//! Acyclicity is decided on link-only graphs. An orientation is acyclic when
//! it admits no coherent closed walk, i.e. a closed walk that at every vertex
//! it passes through enters by one end and leaves by an end of the opposite
//! direction. For unsigned graphs this is the absence of a directed cycle;
//! for signed graphs it also rules out coherent positive circles and
//! handcuffs, while a lone negative circle is never coherent. Equivalently the
//! open cone `{y : η_first y_a + η_second y_b > 0 for every link}` is
//! nonempty, which is how acyclic orientations label the regions of the
//! signed graphic arrangement.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::count::{for_each_coloring, PaletteKind};
use crate::dc::{DcEngine, DcError};
use crate::graph::{EdgeId, EdgeKind, Mode, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientError {
    #[error("graph contains a loose edge, which has no ends to orient")]
    LooseEdge,
    #[error("acyclicity is only decided for link-only graphs")]
    NotLinkOnly,
    #[error("reciprocity needs k >= 1")]
    KTooSmall,
    #[error("{expected} reciprocity requested for a {found} graph")]
    ModeMismatch { expected: Mode, found: Mode },
    #[error("orientation does not match the graph's edges")]
    Mismatch,
    #[error(transparent)]
    Dc(#[from] DcError),
}

/// η at the ends of one edge. `second` is `None` for halfedges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EndSigns {
    pub edge: EdgeId,
    pub first: i8,
    pub second: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    ends: Vec<EndSigns>,
}

impl Orientation {
    /// Ends in the order of the graph's edge list.
    pub fn ends(&self) -> &[EndSigns] {
        &self.ends
    }

    fn aligned(&self, g: &SignedGraph) -> Result<(), OrientError> {
        if self.ends.len() == g.edge_count()
            && self.ends.iter().zip(g.edges()).all(|(s, e)| s.edge == e.id)
        {
            Ok(())
        } else {
            Err(OrientError::Mismatch)
        }
    }
}

/// All `2^|E|` orientations: each edge chooses η at its first end, which fixes
/// the second end through the sign constraint.
pub fn enumerate_orientations(g: &SignedGraph) -> Result<Vec<Orientation>, OrientError> {
    if g.has_loose_edge() {
        return Err(OrientError::LooseEdge);
    }
    let m = g.edge_count();
    let out = (0u64..1 << m)
        .map(|mask| Orientation {
            ends: g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let first: i8 = if mask >> i & 1 == 0 { 1 } else { -1 };
                    let second = e.sign().map(|s| -(s.as_i64() as i8) * first);
                    EndSigns { edge: e.id, first, second }
                })
                .collect(),
        })
        .collect();
    Ok(out)
}

/// True if the orientation has no coherent closed walk.
pub fn is_acyclic(g: &SignedGraph, eta: &Orientation) -> Result<bool, OrientError> {
    if !g.is_link_only() {
        return Err(OrientError::NotLinkOnly);
    }
    eta.aligned(g)?;
    // state 2v + d: standing at v, must leave through an end with η = +1 (d=1) or -1 (d=0)
    let state = |v: usize, s: i8| 2 * v + usize::from(s > 0);
    let n = g.vertex_count();
    let mut next: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for (e, s) in g.edges().iter().zip(&eta.ends) {
        if let EdgeKind::Link { a, b, .. } = e.kind {
            let (ea, eb) = (s.first, s.second.expect("links have two ends"));
            next[state(a, ea)].push(state(b, -eb));
            next[state(b, eb)].push(state(a, -ea));
        }
    }
    Ok(!has_directed_cycle(&next))
}

fn has_directed_cycle(next: &[Vec<usize>]) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let mut mark = vec![Mark::New; next.len()];
    for root in 0..next.len() {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Active;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if let Some(&w) = next[u].get(*i) {
                *i += 1;
                match mark[w] {
                    Mark::Active => return true,
                    Mark::New => {
                        mark[w] = Mark::Active;
                        stack.push((w, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[u] = Mark::Done;
                stack.pop();
            }
        }
    }
    false
}

/// Compatibility of a coloring with an orientation: every link has
/// `η_first x_a + η_second x_b >= 0`, every halfedge or negative loop has
/// `η x_v >= 0`. Positive loops impose nothing. For unsigned graphs this reads
/// `x_v <= x_w` along every edge directed from `v` to `w`.
pub fn is_compatible(g: &SignedGraph, eta: &Orientation, x: &[i64]) -> Result<bool, OrientError> {
    eta.aligned(g)?;
    Ok(g.edges().iter().zip(&eta.ends).all(|(e, s)| match e.kind {
        EdgeKind::Link { a, b, .. } => {
            s.first as i64 * x[a] + s.second.unwrap_or(0) as i64 * x[b] >= 0
        }
        EdgeKind::Loop { v, sign } if sign.as_i64() < 0 => s.first as i64 * x[v] >= 0,
        EdgeKind::Halfedge { v } => s.first as i64 * x[v] >= 0,
        _ => true,
    }))
}

pub fn acyclic_orientations(g: &SignedGraph) -> Result<Vec<Orientation>, OrientError> {
    let mut out = Vec::new();
    for eta in enumerate_orientations(g)? {
        if is_acyclic(g, &eta)? {
            out.push(eta);
        }
    }
    Ok(out)
}

pub fn count_acyclic(g: &SignedGraph) -> Result<u64, OrientError> {
    Ok(acyclic_orientations(g)?.len() as u64)
}

/// How a coloring that leaves the `k`-cube is weighted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OuterWeight {
    /// Weight 1, as the bivariate reciprocity law is usually stated.
    One,
    /// The number of compatible acyclic orientations of the subgraph induced
    /// on the vertices whose colors stay inside the cube (1 if none remain).
    Induced,
}

/// Weighted coloring count on the right-hand side of a reciprocity law.
///
/// Colorings inside the `k`-cube weigh the number of compatible acyclic
/// orientations; those are listed individually in `inner`. Colorings with
/// some `|x_v| > k` are weighed according to `weighting`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub k: u32,
    pub l: u32,
    pub weighting: OuterWeight,
    pub inner: Vec<(Vec<i64>, u64)>,
    pub outer_count: u64,
    pub outer_weight: u64,
}

impl MultiplicityReport {
    pub fn inner_total(&self) -> u64 {
        self.inner.iter().map(|(_, m)| m).sum()
    }

    pub fn total(&self) -> u64 {
        self.inner_total() + self.outer_weight
    }
}

fn compatible_count(g: &SignedGraph, acyclic: &[Orientation], x: &[i64]) -> Result<u64, OrientError> {
    let mut m = 0;
    for eta in acyclic {
        if is_compatible(g, eta, x)? {
            m += 1;
        }
    }
    Ok(m)
}

/// The subgraph induced on the vertices in `low`, its acyclic orientations
/// and the original index of each of its vertices.
type LowPart = (SignedGraph, Vec<Orientation>, Vec<usize>);

fn rhs(
    g: &SignedGraph,
    k: u32,
    l: u32,
    palette: PaletteKind,
    weighting: OuterWeight,
) -> Result<MultiplicityReport, OrientError> {
    if k == 0 {
        return Err(OrientError::KTooSmall);
    }
    let acyclic = acyclic_orientations(g)?;
    let colors = palette.colors(k + l);
    let n = g.vertex_count();
    let mut parts: HashMap<u64, LowPart> = HashMap::new();
    let mut report = MultiplicityReport { k, l, weighting, inner: Vec::new(), outer_count: 0, outer_weight: 0 };
    let mut failure = None;
    let mut visit = |x: &[i64]| -> Result<(), OrientError> {
        let high: u64 = (0..n).filter(|&v| x[v].unsigned_abs() > k as u64).fold(0, |m, v| m | 1 << v);
        if high == 0 {
            report.inner.push((x.to_vec(), compatible_count(g, &acyclic, x)?));
            return Ok(());
        }
        report.outer_count += 1;
        report.outer_weight += match weighting {
            OuterWeight::One => 1,
            OuterWeight::Induced => {
                if let Entry::Vacant(slot) = parts.entry(high) {
                    let removed: Vec<usize> = (0..n).filter(|&v| high >> v & 1 == 1).collect();
                    let kept: Vec<usize> = (0..n).filter(|&v| high >> v & 1 == 0).collect();
                    let sub = g.induced_delete(&removed).map_err(DcError::from)?;
                    let orients = acyclic_orientations(&sub)?;
                    slot.insert((sub, orients, kept));
                }
                let (sub, orients, kept) = &parts[&high];
                let y: Vec<i64> = kept.iter().map(|&v| x[v]).collect();
                compatible_count(sub, orients, &y)?
            }
        };
        Ok(())
    };
    for_each_coloring(n, &colors, |x| {
        if failure.is_none() {
            if let Err(e) = visit(x) {
                failure = Some(e);
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// Colorings in `[1, k+l]^V`, weighted as in the unsigned bivariate
/// reciprocity law.
pub fn reciprocity_rhs_unsigned(g: &SignedGraph, k: u32, l: u32) -> Result<MultiplicityReport, OrientError> {
    reciprocity_rhs_unsigned_with(g, k, l, OuterWeight::One)
}

pub fn reciprocity_rhs_unsigned_with(
    g: &SignedGraph,
    k: u32,
    l: u32,
    weighting: OuterWeight,
) -> Result<MultiplicityReport, OrientError> {
    let g = g.with_mode(Mode::Unsigned).map_err(DcError::from)?;
    rhs(&g, k, l, PaletteKind::Unsigned, weighting)
}

/// Colorings in `[-(k+l), k+l]^V`, weighted as in the signed bivariate
/// reciprocity law.
pub fn reciprocity_rhs_signed(g: &SignedGraph, k: u32, l: u32) -> Result<MultiplicityReport, OrientError> {
    reciprocity_rhs_signed_with(g, k, l, OuterWeight::One)
}

pub fn reciprocity_rhs_signed_with(
    g: &SignedGraph,
    k: u32,
    l: u32,
    weighting: OuterWeight,
) -> Result<MultiplicityReport, OrientError> {
    rhs(g, k, l, PaletteKind::Signed, weighting)
}

/// Both sides of an identity and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn parity(n: usize) -> BigInt {
    BigInt::from(if n % 2 == 0 { 1 } else { -1 })
}

/// `(-1)^|V| P(-k, -l)` against the weighted coloring count, where `P` is the
/// signed polynomial (evaluated at λ = -(2k+1), μ = -2l) in signed mode and
/// the unsigned one (λ = -k, μ = -l) in unsigned mode.
pub fn check_reciprocity(g: &SignedGraph, k: u32, l: u32, mode: Mode) -> Result<Verdict, OrientError> {
    check_reciprocity_with(g, k, l, mode, OuterWeight::One)
}

/// `check_reciprocity` with a choice of weighting for colorings that leave
/// the `k`-cube.
pub fn check_reciprocity_with(
    g: &SignedGraph,
    k: u32,
    l: u32,
    mode: Mode,
    weighting: OuterWeight,
) -> Result<Verdict, OrientError> {
    if g.mode() != mode {
        return Err(OrientError::ModeMismatch { expected: mode, found: g.mode() });
    }
    let engine = DcEngine::new();
    let (k, l) = (k as i64, l as i64);
    let (value, report) = match mode {
        Mode::Signed => {
            let p = engine.signed(g).poly;
            let value = p.eval(&BigInt::from(-(2 * k + 1)), &BigInt::from(-2 * l));
            (value, reciprocity_rhs_signed_with(g, k as u32, l as u32, weighting)?)
        }
        Mode::Unsigned => {
            let p = engine.unsigned(g)?.poly;
            let value = p.eval(&BigInt::from(-k), &BigInt::from(-l));
            (value, reciprocity_rhs_unsigned_with(g, k as u32, l as u32, weighting)?)
        }
    };
    Ok(Verdict {
        lhs: parity(g.vertex_count()) * value,
        rhs: BigInt::from(report.total()),
    })
}

/// `(-1)^|V| P(λ = -1, μ = 0)` against the number of acyclic orientations of
/// a link-only signed graph.
pub fn zaslavsky_special(g: &SignedGraph) -> Result<Verdict, OrientError> {
    let g = g.with_mode(Mode::Signed).map_err(DcError::from)?;
    let p = DcEngine::new().signed(&g).poly;
    let value = p.eval(&BigInt::from(-1), &BigInt::from(0));
    Ok(Verdict {
        lhs: parity(g.vertex_count()) * value,
        rhs: BigInt::from(count_acyclic(&g)?),
    })
}

/// `(-1)^|V| c_Γ(-1, 0)` against the number of acyclic orientations of an
/// unsigned graph.
pub fn stanley_special(g: &SignedGraph) -> Result<Verdict, OrientError> {
    let p = DcEngine::new().unsigned(g)?.poly;
    let value = p.eval(&BigInt::from(-1), &BigInt::from(0));
    Ok(Verdict {
        lhs: parity(g.vertex_count()) * value,
        rhs: BigInt::from(count_acyclic(g)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Sign, Switching};

    fn graph(mode: Mode, n: usize, links: &[(usize, usize, Sign)]) -> SignedGraph {
        let mut g = SignedGraph::new(mode, n);
        for &(a, b, s) in links {
            g.add_link(a, b, s).unwrap();
        }
        g
    }

    fn triangle(mode: Mode, s: Sign) -> SignedGraph {
        graph(mode, 3, &[(0, 1, s), (1, 2, s), (0, 2, s)])
    }

    /// Acyclic iff some integer point strictly satisfies every link
    /// inequality; searched in a box.
    fn acyclic_by_cone_search(g: &SignedGraph, eta: &Orientation) -> bool {
        let box_colors: Vec<i64> = (-6..=6).collect();
        let mut found = false;
        for_each_coloring(g.vertex_count(), &box_colors, |y| {
            if found {
                return;
            }
            found = g.edges().iter().zip(eta.ends()).all(|(e, s)| match e.kind {
                EdgeKind::Link { a, b, .. } => s.first as i64 * y[a] + s.second.unwrap() as i64 * y[b] > 0,
                _ => unreachable!(),
            });
        });
        found
    }

    #[test]
    fn orientation_counts() {
        let k2 = graph(Mode::Signed, 2, &[(0, 1, Sign::Pos)]);
        assert_eq!(enumerate_orientations(&k2).unwrap().len(), 2);

        let mut h = SignedGraph::new(Mode::Signed, 1);
        h.add_halfedge(0).unwrap();
        let hs = enumerate_orientations(&h).unwrap();
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().all(|o| o.ends()[0].second.is_none()));

        let mut l = SignedGraph::new(Mode::Signed, 1);
        l.add_loop(0, Sign::Neg).unwrap();
        let ls = enumerate_orientations(&l).unwrap();
        assert_eq!(ls.len(), 2);
        assert!(ls.iter().all(|o| o.ends()[0].first == o.ends()[0].second.unwrap()));

        let mut c = SignedGraph::new(Mode::Signed, 1);
        let e = c.add_halfedge(0).unwrap();
        c.add_halfedge(0).unwrap();
        let loose = c.contract_edge(e).unwrap();
        assert_eq!(enumerate_orientations(&loose), Err(OrientError::LooseEdge));
    }

    #[test]
    fn acyclicity_examples() {
        let k2 = graph(Mode::Signed, 2, &[(0, 1, Sign::Pos)]);
        for eta in enumerate_orientations(&k2).unwrap() {
            assert!(is_acyclic(&k2, &eta).unwrap());
        }
        assert_eq!(count_acyclic(&triangle(Mode::Unsigned, Sign::Pos)).unwrap(), 6);

        let signed = triangle(Mode::Signed, Sign::Pos);
        let unsigned = triangle(Mode::Unsigned, Sign::Pos);
        let a: Vec<bool> = enumerate_orientations(&signed)
            .unwrap()
            .iter()
            .map(|o| is_acyclic(&signed, o).unwrap())
            .collect();
        let b: Vec<bool> = enumerate_orientations(&unsigned)
            .unwrap()
            .iter()
            .map(|o| is_acyclic(&unsigned, o).unwrap())
            .collect();
        assert_eq!(a, b);
        assert_eq!(a.iter().filter(|&&x| x).count(), 6);

        let mut lp = SignedGraph::new(Mode::Signed, 1);
        lp.add_loop(0, Sign::Pos).unwrap();
        let o = &enumerate_orientations(&lp).unwrap()[0];
        assert_eq!(is_acyclic(&lp, o), Err(OrientError::NotLinkOnly));
    }

    #[test]
    fn coherent_walks_match_cone_feasibility() {
        let cases = [
            triangle(Mode::Signed, Sign::Neg),
            triangle(Mode::Signed, Sign::Pos),
            graph(Mode::Signed, 2, &[(0, 1, Sign::Pos), (0, 1, Sign::Neg)]),
            graph(Mode::Signed, 2, &[(0, 1, Sign::Pos), (0, 1, Sign::Pos)]),
            // tight handcuff: two negative digons sharing vertex 1
            graph(
                Mode::Signed,
                3,
                &[(0, 1, Sign::Pos), (0, 1, Sign::Neg), (1, 2, Sign::Pos), (1, 2, Sign::Neg)],
            ),
            graph(Mode::Signed, 3, &[(0, 1, Sign::Neg), (1, 2, Sign::Pos), (0, 2, Sign::Pos), (0, 2, Sign::Neg)]),
        ];
        for g in &cases {
            for eta in enumerate_orientations(g).unwrap() {
                assert_eq!(is_acyclic(g, &eta).unwrap(), acyclic_by_cone_search(g, &eta), "{g:?}");
            }
        }
    }

    #[test]
    fn compatibility_examples() {
        let k2 = graph(Mode::Unsigned, 2, &[(0, 1, Sign::Pos)]);
        let os = enumerate_orientations(&k2).unwrap();
        // first orientation: η = +1 at vertex 0 (head), so directed 1 -> 0
        let into_0 = &os[0];
        let into_1 = &os[1];
        assert!(is_compatible(&k2, into_1, &[1, 2]).unwrap());
        assert!(!is_compatible(&k2, into_0, &[1, 2]).unwrap());
        assert!(is_compatible(&k2, into_0, &[1, 1]).unwrap());
        assert!(is_compatible(&k2, into_1, &[1, 1]).unwrap());

        let neg = graph(Mode::Signed, 2, &[(0, 1, Sign::Neg)]);
        let both_in = enumerate_orientations(&neg)
            .unwrap()
            .into_iter()
            .find(|o| o.ends()[0].first == 1)
            .unwrap();
        assert_eq!(both_in.ends()[0].second, Some(1));
        assert!(is_compatible(&neg, &both_in, &[1, 1]).unwrap());
    }

    #[test]
    fn rhs_examples() {
        let mut u2 = SignedGraph::new(Mode::Unsigned, 2);
        u2.add_link(0, 1, Sign::Pos).unwrap();
        assert_eq!(reciprocity_rhs_unsigned(&u2, 1, 1).unwrap().total(), 5);
        assert_eq!(reciprocity_rhs_unsigned(&u2, 1, 0).unwrap().total(), 2);
        let u1 = SignedGraph::new(Mode::Unsigned, 1);
        assert_eq!(reciprocity_rhs_unsigned(&u1, 2, 0).unwrap().total(), 2);

        let s1 = SignedGraph::new(Mode::Signed, 1);
        assert_eq!(reciprocity_rhs_signed(&s1, 1, 0).unwrap().total(), 3);
        let r = reciprocity_rhs_signed(&s1, 1, 1).unwrap();
        assert_eq!((r.outer_count, r.inner_total()), (2, 3));

        let k2 = graph(Mode::Signed, 2, &[(0, 1, Sign::Pos)]);
        let p = DcEngine::new().signed(&k2).poly;
        let lhs = p.eval(&BigInt::from(-3), &BigInt::from(-2));
        assert_eq!(BigInt::from(reciprocity_rhs_signed(&k2, 1, 1).unwrap().total()), lhs);

        assert_eq!(reciprocity_rhs_signed(&k2, 0, 1), Err(OrientError::KTooSmall));
    }

    #[test]
    fn unit_outer_weight_undercounts_the_triangle() {
        let k3 = graph(Mode::Unsigned, 3, &[(0, 1, Sign::Pos), (1, 2, Sign::Pos), (0, 2, Sign::Pos)]);
        // P = λ^3 + 3λ^2μ + 3λμ^2 + μ^3 - 3λ^2 - 3λμ + 2λ at (-3, -2), negated
        let unit = check_reciprocity(&k3, 3, 2, Mode::Unsigned).unwrap();
        assert_eq!((unit.lhs.clone(), unit.rhs), (BigInt::from(176), BigInt::from(158)));
        let r = reciprocity_rhs_unsigned_with(&k3, 3, 2, OuterWeight::Induced).unwrap();
        assert_eq!((r.outer_count, r.inner_total(), r.total()), (98, 60, 176));
        let s3 = graph(Mode::Signed, 3, &[(0, 1, Sign::Neg), (1, 2, Sign::Neg), (0, 2, Sign::Pos)]);
        assert!(!check_reciprocity(&s3, 1, 1, Mode::Signed).unwrap().passed());
        assert!(check_reciprocity_with(&s3, 1, 1, Mode::Signed, OuterWeight::Induced).unwrap().passed());
    }

    #[test]
    fn weightings_agree_on_two_vertices() {
        for s in [Sign::Pos, Sign::Neg] {
            let g = graph(Mode::Signed, 2, &[(0, 1, s), (0, 1, Sign::Pos)]);
            for (k, l) in [(1, 0), (1, 2), (2, 1)] {
                let a = reciprocity_rhs_signed(&g, k, l).unwrap();
                let b = reciprocity_rhs_signed_with(&g, k, l, OuterWeight::Induced).unwrap();
                assert_eq!(a.total(), b.total());
                assert_eq!(a.outer_count, a.outer_weight);
            }
        }
    }

    #[test]
    fn check_reciprocity_examples() {
        let mut u2 = SignedGraph::new(Mode::Unsigned, 2);
        u2.add_link(0, 1, Sign::Pos).unwrap();
        let v = check_reciprocity(&u2, 1, 1, Mode::Unsigned).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (BigInt::from(5), BigInt::from(5)));
        assert!(v.passed());

        let k3 = triangle(Mode::Unsigned, Sign::Pos);
        let v = check_reciprocity(&k3, 1, 0, Mode::Unsigned).unwrap();
        assert_eq!(v.lhs, BigInt::from(6));
        assert!(v.passed());

        let s1 = SignedGraph::new(Mode::Signed, 1);
        for (k, l) in [(1, 0), (2, 3)] {
            let v = check_reciprocity(&s1, k, l, Mode::Signed).unwrap();
            assert_eq!(v.lhs, BigInt::from(2 * (k + l) + 1));
            assert!(v.passed());
        }

        assert!(matches!(
            check_reciprocity(&u2, 1, 1, Mode::Signed),
            Err(OrientError::ModeMismatch { .. })
        ));
    }

    #[test]
    fn special_cases() {
        let k2 = graph(Mode::Signed, 2, &[(0, 1, Sign::Pos)]);
        assert_eq!(count_acyclic(&k2).unwrap(), 2);
        let neg3 = triangle(Mode::Signed, Sign::Neg);
        let v = zaslavsky_special(&neg3).unwrap();
        assert!(v.passed(), "{v:?}");
        let v = stanley_special(&triangle(Mode::Unsigned, Sign::Pos)).unwrap();
        assert_eq!(v.rhs, BigInt::from(6));
        assert!(v.passed());
    }

    #[test]
    fn acyclic_count_is_switching_invariant() {
        let g = graph(
            Mode::Signed,
            3,
            &[(0, 1, Sign::Neg), (1, 2, Sign::Pos), (0, 2, Sign::Pos), (0, 2, Sign::Neg)],
        );
        let base = count_acyclic(&g).unwrap();
        for mask in 0..8 {
            let s = g.switch(&Switching::from_mask(3, mask)).unwrap();
            assert_eq!(count_acyclic(&s).unwrap(), base);
        }
    }

    #[test]
    fn strict_proper_colorings_have_multiplicity_one() {
        let g = triangle(Mode::Unsigned, Sign::Pos);
        let r = reciprocity_rhs_unsigned(&g, 3, 0).unwrap();
        for (x, m) in &r.inner {
            if x[0] != x[1] && x[1] != x[2] && x[0] != x[2] {
                assert_eq!(*m, 1, "{x:?}");
            }
        }
    }

    #[test]
    fn every_inner_coloring_has_a_compatible_orientation() {
        let g = graph(Mode::Signed, 3, &[(0, 1, Sign::Neg), (1, 2, Sign::Pos), (0, 2, Sign::Neg)]);
        let all = enumerate_orientations(&g).unwrap();
        for_each_coloring(3, &PaletteKind::Signed.colors(2), |x| {
            assert!(all.iter().any(|o| is_compatible(&g, o, x).unwrap()));
        });
    }
}
