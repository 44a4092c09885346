//! The identity suite: every way of computing the polynomial must agree with
//! the others and with the brute-force counts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::count::{count_signed, count_unsigned, count_zero_free, independence_poly, antibalance_poly};
use crate::dc::{chromatic_univariate, poly_interpolated, poly_subset, Convention, DcEngine, DcError};
use crate::graph::{Mode, SignedGraph, Switching};
use crate::orient::{check_reciprocity_with, stanley_special, zaslavsky_special, OuterWeight};
use crate::poly::{interpolate_univariate, BivarPoly, UniPoly};

/// Largest vertex count for which `verify_graph` tries every switching.
pub const MAX_SWITCHING_VERTICES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skipped, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.status, self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    /// True when no check failed; skipped checks do not count against it.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let fails = self.failures().count();
        if fails == 0 {
            write!(f, "result: PASS ({} checks)", self.checks.len())
        } else {
            write!(f, "result: FAIL ({fails} of {} checks failed)", self.checks.len())
        }
    }
}

/// The graph each convention is computed on: unsigned graphs are counted in
/// the signed conventions as all-positive signed graphs.
fn view(g: &SignedGraph, conv: Convention) -> Result<SignedGraph, DcError> {
    Ok(match conv {
        Convention::Unsigned => g.with_mode(Mode::Unsigned)?,
        _ => g.with_mode(Mode::Signed)?,
    })
}

/// Brute-force count matching a convention.
pub fn oracle_count(g: &SignedGraph, conv: Convention, k: u32, l: u32) -> Result<u64, DcError> {
    let g = view(g, conv)?;
    Ok(match conv {
        Convention::Signed => count_signed(&g, k, l),
        Convention::ZeroFree => count_zero_free(&g, k, l),
        Convention::Unsigned => count_unsigned(&g, k, l)?,
    })
}

/// Deletion–contraction, subset expansion and interpolation agree.
pub fn check_three_way(g: &SignedGraph, conv: Convention, engine: &DcEngine) -> Result<Check, DcError> {
    let dc = engine.compute(g, conv)?.poly;
    let subset = poly_subset(g, conv)?.poly;
    let interp = poly_interpolated(g, conv)?.poly;
    let name = format!("three-way agreement ({conv})");
    Ok(if dc == subset && dc == interp {
        Check::new(name, true, format!("dc = subset = interpolation = {dc}"))
    } else {
        Check::new(name, false, format!("dc = {dc}; subset = {subset}; interpolation = {interp}"))
    })
}

/// The polynomial evaluated at `(k, l)` equals the brute-force count for
/// every `k <= kmax`, `l <= lmax`.
pub fn check_oracle(
    g: &SignedGraph,
    conv: Convention,
    engine: &DcEngine,
    kmax: u32,
    lmax: u32,
) -> Result<Check, DcError> {
    let p = engine.compute(g, conv)?;
    let name = format!("oracle evaluations ({conv})");
    for k in 0..=kmax {
        for l in 0..=lmax {
            let count = oracle_count(g, conv, k, l)?;
            let value = p.eval_kl(k as i64, l as i64);
            if value != BigInt::from(count) {
                return Ok(Check::new(name, false, format!("k={k}, l={l}: polynomial {value}, count {count}")));
            }
        }
    }
    Ok(Check::new(name, true, format!("k in 0..={kmax}, l in 0..={lmax}")))
}

/// `P(λ, 0)` equals the chromatic polynomial fitted to the `l = 0` counts.
pub fn check_l0_slice(g: &SignedGraph, conv: Convention, engine: &DcEngine) -> Result<Check, DcError> {
    let n = g.vertex_count();
    let slice = engine.compute(g, conv)?.poly.slice_mu(&BigInt::zero());
    let mut points = Vec::with_capacity(n + 1);
    for k in 0..=n as u32 {
        points.push((conv.lambda(k as i64), BigInt::from(oracle_count(g, conv, k, 0)?)));
    }
    let fitted = interpolate_univariate(points, n)?;
    let recursive = chromatic_univariate(&view(g, conv)?, conv);
    let name = format!("l = 0 slice ({conv})");
    let shown = slice.display_in("λ");
    Ok(if slice == fitted && slice == recursive {
        Check::new(name, true, shown)
    } else {
        Check::new(
            name,
            false,
            format!("slice {shown}; fitted {}; recursive {}", fitted.display_in("λ"), recursive.display_in("λ")),
        )
    })
}

/// `dP/dμ = Σ_v P(G - v)`.
pub fn check_derivative(g: &SignedGraph, conv: Convention, engine: &DcEngine) -> Result<Check, DcError> {
    let lhs = engine.compute(g, conv)?.poly.d_dmu();
    let mut rhs = BivarPoly::zero();
    for v in 0..g.vertex_count() {
        rhs = &rhs + &engine.compute(&g.delete_vertex(v)?, conv)?.poly;
    }
    let name = format!("derivative in μ ({conv})");
    Ok(if lhs == rhs {
        Check::new(name, true, format!("dP/dμ = {lhs}"))
    } else {
        Check::new(name, false, format!("dP/dμ = {lhs}; sum over vertex deletions = {rhs}"))
    })
}

/// Both sides of the antibalance identity as polynomials in μ: the zero-free
/// polynomial at λ = 2, and `Σ μ^{|W|} 2^{c(G-W)}` over `W` with `G - W`
/// antibalanced.
pub fn antibalance_sides(g: &SignedGraph, engine: &DcEngine) -> Result<(UniPoly, UniPoly), DcError> {
    let g = view(g, Convention::ZeroFree)?;
    let n = g.vertex_count() as u32;
    let lhs = engine.zero_free(&g).poly.slice_lambda(&BigInt::from(2));
    let two = UniPoly::from_coeffs(vec![BigInt::from(2)]);
    let mut rhs = UniPoly::zero();
    for ((size, comps), coeff) in antibalance_poly(&g).terms() {
        let term = &UniPoly::from_coeffs(vec![coeff.clone()])
            * &(&UniPoly::x().pow((n - size) as usize) * &two.pow(comps as usize));
        rhs = &rhs + &term;
    }
    Ok((lhs, rhs))
}

pub fn check_antibalance(g: &SignedGraph, engine: &DcEngine) -> Result<Check, DcError> {
    let (lhs, rhs) = antibalance_sides(g, engine)?;
    let name = "antibalance (zero-free, λ = 2)";
    Ok(if lhs == rhs {
        Check::new(name, true, lhs.display_in("μ"))
    } else {
        let mut detail = format!("P*(2, μ) = {}; antibalanced sum = {}", lhs.display_in("μ"), rhs.display_in("μ"));
        if g.has_halfedge() {
            detail.push_str("; halfedges make every subgraph they touch non-antibalanced");
        }
        Check::new(name, false, detail)
    })
}

/// `P(λ = 1, μ)` equals the independence polynomial in μ. Only decided for
/// link-only graphs.
pub fn check_independence(g: &SignedGraph, engine: &DcEngine) -> Result<Check, DcError> {
    let name = "independence polynomial (signed, λ = 1)";
    if !g.is_link_only() {
        return Ok(Check::skipped(name, "graph has loops or halfedges"));
    }
    let g = view(g, Convention::Signed)?;
    let lhs = engine.signed(&g).poly.slice_lambda(&BigInt::one());
    let rhs = independence_poly(&g);
    Ok(if lhs == rhs {
        Check::new(name, true, lhs.display_in("μ"))
    } else {
        Check::new(name, false, format!("P(1, μ) = {}; i(μ) = {}", lhs.display_in("μ"), rhs.display_in("μ")))
    })
}

/// Every switching leaves the signed polynomial and `count_signed(1, 1)`
/// unchanged.
pub fn check_switching(g: &SignedGraph, engine: &DcEngine) -> Result<Check, DcError> {
    let name = "switching invariance (signed)";
    let g = view(g, Convention::Signed)?;
    let n = g.vertex_count();
    if n > MAX_SWITCHING_VERTICES {
        return Ok(Check::skipped(name, format!("more than {MAX_SWITCHING_VERTICES} vertices")));
    }
    let p = engine.signed(&g).poly;
    let c = count_signed(&g, 1, 1);
    for mask in 0u64..1 << n {
        let s = Switching::from_mask(n, mask);
        let h = g.switch(&s)?;
        if engine.signed(&h).poly != p || count_signed(&h, 1, 1) != c {
            return Ok(Check::new(name, false, format!("switching mask {mask:#b} changes the result")));
        }
    }
    Ok(Check::new(name, true, format!("{} switchings", 1u64 << n)))
}

/// Reciprocity at every `1 <= k <= kmax`, `l <= lmax` in the given mode.
/// Needs a link-only graph.
pub fn check_reciprocity_grid(
    g: &SignedGraph,
    mode: Mode,
    weighting: OuterWeight,
    kmax: u32,
    lmax: u32,
) -> Result<Check, DcError> {
    let name = match weighting {
        OuterWeight::One => format!("reciprocity ({mode})"),
        OuterWeight::Induced => format!("reciprocity, induced weights ({mode})"),
    };
    if !g.is_link_only() {
        return Ok(Check::skipped(name, "graph has loops or halfedges"));
    }
    if kmax == 0 {
        return Ok(Check::skipped(name, "needs kmax >= 1"));
    }
    let g = g.with_mode(mode)?;
    for k in 1..=kmax {
        for l in 0..=lmax {
            let v = check_reciprocity_with(&g, k, l, mode, weighting).map_err(orient_to_dc)?;
            if !v.passed() {
                return Ok(Check::new(name, false, format!("k={k}, l={l}: lhs {}, rhs {}", v.lhs, v.rhs)));
            }
        }
    }
    Ok(Check::new(name, true, format!("k in 1..={kmax}, l in 0..={lmax}")))
}

/// The acyclic-orientation count at `λ = -1, μ = 0`.
pub fn check_acyclic_count(g: &SignedGraph, mode: Mode) -> Result<Check, DcError> {
    let name = format!("acyclic orientations ({mode})");
    if !g.is_link_only() {
        return Ok(Check::skipped(name, "graph has loops or halfedges"));
    }
    let v = match mode {
        Mode::Signed => zaslavsky_special(g),
        Mode::Unsigned => stanley_special(&g.with_mode(Mode::Unsigned)?),
    }
    .map_err(orient_to_dc)?;
    Ok(Check::new(name, v.passed(), format!("(-1)^n P(-1, 0) = {}, acyclic = {}", v.lhs, v.rhs)))
}

fn orient_to_dc(e: crate::orient::OrientError) -> DcError {
    match e {
        crate::orient::OrientError::Dc(d) => d,
        other => panic!("orientation check on a link-only graph failed: {other}"),
    }
}

/// Runs the full suite. Signed graphs are checked in the signed and zero-free
/// conventions; unsigned graphs additionally in the unsigned one.
pub fn verify_graph(g: &SignedGraph, kmax: u32, lmax: u32, engine: &DcEngine) -> Result<Report, DcError> {
    let mut conventions = vec![Convention::Signed, Convention::ZeroFree];
    if g.mode() == Mode::Unsigned {
        conventions.insert(0, Convention::Unsigned);
    }
    let mut checks = Vec::new();
    for &conv in &conventions {
        checks.push(check_three_way(g, conv, engine)?);
        checks.push(check_oracle(g, conv, engine, kmax, lmax)?);
        checks.push(check_l0_slice(g, conv, engine)?);
        checks.push(check_derivative(g, conv, engine)?);
    }
    checks.push(check_antibalance(g, engine)?);
    checks.push(check_independence(g, engine)?);
    checks.push(check_switching(g, engine)?);
    if g.mode() == Mode::Unsigned {
        for w in [OuterWeight::One, OuterWeight::Induced] {
            checks.push(check_reciprocity_grid(g, Mode::Unsigned, w, kmax, lmax)?);
        }
        checks.push(check_acyclic_count(g, Mode::Unsigned)?);
    }
    for w in [OuterWeight::One, OuterWeight::Induced] {
        checks.push(check_reciprocity_grid(g, Mode::Signed, w, kmax, lmax)?);
    }
    checks.push(check_acyclic_count(g, Mode::Signed)?);
    Ok(Report { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn path() -> SignedGraph {
        let mut g = SignedGraph::new(Mode::Signed, 3);
        g.add_link(0, 1, Sign::Neg).unwrap();
        g.add_link(1, 2, Sign::Pos).unwrap();
        g.add_halfedge(2).unwrap();
        g
    }

    #[test]
    fn triangle_fails_only_unit_weight_reciprocity() {
        let mut g = SignedGraph::new(Mode::Signed, 3);
        g.add_link(0, 1, Sign::Neg).unwrap();
        g.add_link(1, 2, Sign::Neg).unwrap();
        g.add_link(0, 2, Sign::Pos).unwrap();
        let r = verify_graph(&g, 2, 2, &DcEngine::new()).unwrap();
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["reciprocity (signed)"], "{r}");
        assert!(r.checks.iter().all(|c| c.status != Status::Skipped), "{r}");
    }

    #[test]
    fn path_reciprocity_needs_induced_weights() {
        // x = (2, 1, 1) on the path 1-2-3 at k = 1 leaves an improper edge
        let mut g = SignedGraph::new(Mode::Unsigned, 3);
        g.add_link(0, 1, Sign::Pos).unwrap();
        g.add_link(1, 2, Sign::Pos).unwrap();
        assert_eq!(check_reciprocity_grid(&g, Mode::Unsigned, OuterWeight::One, 1, 1).unwrap().status, Status::Fail);
        assert_eq!(check_reciprocity_grid(&g, Mode::Unsigned, OuterWeight::Induced, 3, 2).unwrap().status, Status::Pass);
    }

    #[test]
    fn unsigned_k2_passes_everything() {
        let mut g = SignedGraph::new(Mode::Unsigned, 2);
        g.add_link(0, 1, Sign::Pos).unwrap();
        let r = verify_graph(&g, 2, 2, &DcEngine::new()).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checks.iter().any(|c| c.name == "reciprocity (unsigned)" && c.status == Status::Pass));
    }

    #[test]
    fn halfedge_breaks_only_antibalance() {
        let r = verify_graph(&path(), 2, 2, &DcEngine::new()).unwrap();
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["antibalance (zero-free, λ = 2)"], "{r}");
    }

    #[test]
    fn antibalance_sides_examples() {
        let engine = DcEngine::new();
        // single vertex: P* = λ + μ, so P*(2, μ) = μ + 2
        let (lhs, rhs) = antibalance_sides(&SignedGraph::new(Mode::Signed, 1), &engine).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, UniPoly::from_coeffs(vec![BigInt::from(2), BigInt::one()]));
        // a halfedge is vacuous for zero-free colorings but not antibalanced
        let mut h = SignedGraph::new(Mode::Signed, 1);
        h.add_halfedge(0).unwrap();
        let (lhs, rhs) = antibalance_sides(&h, &engine).unwrap();
        assert_eq!(lhs, UniPoly::from_coeffs(vec![BigInt::from(2), BigInt::one()]));
        assert_eq!(rhs, UniPoly::x());
    }

    #[test]
    fn oracle_count_dispatch() {
        let mut g = SignedGraph::new(Mode::Unsigned, 2);
        g.add_link(0, 1, Sign::Pos).unwrap();
        assert_eq!(oracle_count(&g, Convention::Unsigned, 6, 4).unwrap(), 94);
        assert_eq!(oracle_count(&g, Convention::Signed, 1, 1).unwrap(), 22);
        assert_eq!(oracle_count(&g, Convention::ZeroFree, 1, 1).unwrap(), 14);
    }

    #[test]
    fn report_format() {
        let r = Report {
            checks: vec![
                Check::new("a", true, "fine"),
                Check::skipped("b", "n/a"),
                Check::new("c", false, "bad"),
            ],
        };
        assert!(!r.passed());
        assert_eq!(r.to_string(), "PASS a: fine\nSKIP b: n/a\nFAIL c: bad\nresult: FAIL (1 of 3 checks failed)");
    }
}
