//! Bivariate chromatic polynomials as exact [`BivarPoly`] values.
//!
//! Three independent producers are provided for every convention:
//!
//! * deletion–contraction with a shared memo ([`DcEngine`]),
//! * the subset expansion `Σ_W μ^{|W|} Z_{G-W}(λ)` over univariate chromatic
//!   polynomials ([`poly_signed_subset`] and friends),
//! * exact interpolation of brute-force counts ([`poly_interpolated`]).

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::RwLock;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::count::{CountError, CountTable, PaletteKind};
use crate::graph::{CanonicalKey, EdgeKind, GraphError, Mode, Sign, SignedGraph};
use crate::poly::{interpolate_grid, BivarPoly, PolyError, UniPoly};

/// Environment variable bounding the number of memo entries.
pub const MEMO_CAP_ENV: &str = "SGCHROM_MEMO_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DcError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Which counting arguments the formal variables stand for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// λ = 2k+1, μ = 2l; counts colorings in `[-(k+l), k+l]`.
    Signed,
    /// λ = 2k, μ = 2l; counts colorings in `[-(k+l), k+l] \ {0}`.
    ZeroFree,
    /// λ = k, μ = l; counts colorings in `[1, k+l]`.
    Unsigned,
}

impl Convention {
    pub fn lambda(self, k: i64) -> BigInt {
        BigInt::from(match self {
            Convention::Signed => 2 * k + 1,
            Convention::ZeroFree => 2 * k,
            Convention::Unsigned => k,
        })
    }

    pub fn mu(self, l: i64) -> BigInt {
        BigInt::from(match self {
            Convention::Signed | Convention::ZeroFree => 2 * l,
            Convention::Unsigned => l,
        })
    }

    pub fn palette(self) -> PaletteKind {
        match self {
            Convention::Signed => PaletteKind::Signed,
            Convention::ZeroFree => PaletteKind::ZeroFree,
            Convention::Unsigned => PaletteKind::Unsigned,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::Signed => "signed",
            Convention::ZeroFree => "zero-free",
            Convention::Unsigned => "unsigned",
        }
    }

    /// Header line describing the substitution.
    pub fn header(self) -> &'static str {
        match self {
            Convention::Signed => "convention: signed (λ = 2k+1, μ = 2l)",
            Convention::ZeroFree => "convention: zero-free (λ = 2k, μ = 2l)",
            Convention::Unsigned => "convention: unsigned (λ = k, μ = l)",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    DeletionContraction,
    SubsetExpansion,
    Interpolation,
}

/// A polynomial together with the convention its variables use and the
/// method that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyResult {
    pub poly: BivarPoly,
    pub convention: Convention,
    pub provenance: Provenance,
}

impl PolyResult {
    fn new(poly: BivarPoly, convention: Convention, provenance: Provenance, n: usize) -> Self {
        let n = n as u32;
        debug_assert!(poly.deg_lambda().unwrap_or(0) <= n);
        debug_assert!(poly.deg_mu().unwrap_or(0) <= n);
        debug_assert!(poly.total_degree().unwrap_or(0) <= n);
        PolyResult { poly, convention, provenance }
    }

    /// Value at the counting arguments `(k, l)`, which may be negative.
    pub fn eval_kl(&self, k: i64, l: i64) -> BigInt {
        self.poly
            .eval(&self.convention.lambda(k), &self.convention.mu(l))
    }
}

/// How deletion–contraction picks the next edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Links, then positive loops, then halfedges and negative loops; ties by
    /// edge id.
    Fixed,
    /// A pseudo-random edge derived from the seed and the graph's key.
    Scrambled(u64),
}

/// Cache of computed polynomials keyed by graph structure and convention.
///
/// Readers proceed concurrently; inserts are atomic. Two threads may compute
/// the same entry, which is harmless since both produce the same value.
#[derive(Debug, Default)]
pub struct Memo {
    map: RwLock<HashMap<(CanonicalKey, Convention), BivarPoly>>,
    cap: Option<usize>,
}

impl Memo {
    pub fn new(cap: Option<usize>) -> Self {
        Memo {
            map: RwLock::default(),
            cap,
        }
    }

    /// Cap taken from `SGCHROM_MEMO_CAP` when set to a valid integer.
    pub fn from_env() -> Self {
        let cap = std::env::var(MEMO_CAP_ENV).ok().and_then(|v| v.trim().parse().ok());
        Memo::new(cap)
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &(CanonicalKey, Convention)) -> Option<BivarPoly> {
        self.map.read().unwrap().get(key).cloned()
    }

    fn insert(&self, key: (CanonicalKey, Convention), value: BivarPoly) {
        let mut map = self.map.write().unwrap();
        if self.cap.is_none_or(|cap| map.len() < cap) {
            map.insert(key, value);
        }
    }
}

/// Deletion–contraction evaluator.
#[derive(Debug)]
pub struct DcEngine {
    order: EdgeOrder,
    memo: Option<Memo>,
}

impl Default for DcEngine {
    fn default() -> Self {
        DcEngine::new()
    }
}

impl DcEngine {
    /// Fixed edge order with an unbounded memo.
    pub fn new() -> Self {
        DcEngine {
            order: EdgeOrder::Fixed,
            memo: Some(Memo::new(None)),
        }
    }

    pub fn without_memo() -> Self {
        DcEngine {
            order: EdgeOrder::Fixed,
            memo: None,
        }
    }

    pub fn with_memo(memo: Memo) -> Self {
        DcEngine {
            order: EdgeOrder::Fixed,
            memo: Some(memo),
        }
    }

    pub fn order(mut self, order: EdgeOrder) -> Self {
        self.order = order;
        self
    }

    pub fn memo(&self) -> Option<&Memo> {
        self.memo.as_ref()
    }

    /// `c_Σ(2k+1, 2l)` in λ = 2k+1, μ = 2l.
    pub fn signed(&self, g: &SignedGraph) -> PolyResult {
        let g = signed_view(g);
        let p = self.eval(&g, Convention::Signed);
        PolyResult::new(p, Convention::Signed, Provenance::DeletionContraction, g.vertex_count())
    }

    /// `c*_Σ(2k, 2l)` in λ = 2k, μ = 2l.
    pub fn zero_free(&self, g: &SignedGraph) -> PolyResult {
        let g = signed_view(g);
        let p = self.eval(&g, Convention::ZeroFree);
        PolyResult::new(p, Convention::ZeroFree, Provenance::DeletionContraction, g.vertex_count())
    }

    /// `c_Γ(k, l)` in λ = k, μ = l. Fails if the graph has halfedges or
    /// negative edges.
    pub fn unsigned(&self, g: &SignedGraph) -> Result<PolyResult, DcError> {
        let g = g.with_mode(Mode::Unsigned)?;
        let p = self.eval(&g, Convention::Unsigned);
        Ok(PolyResult::new(
            p,
            Convention::Unsigned,
            Provenance::DeletionContraction,
            g.vertex_count(),
        ))
    }

    pub fn compute(&self, g: &SignedGraph, convention: Convention) -> Result<PolyResult, DcError> {
        match convention {
            Convention::Signed => Ok(self.signed(g)),
            Convention::ZeroFree => Ok(self.zero_free(g)),
            Convention::Unsigned => self.unsigned(g),
        }
    }

    fn pick_edge(&self, g: &SignedGraph, key: &CanonicalKey) -> usize {
        match self.order {
            EdgeOrder::Fixed => {
                let rank = |k: &EdgeKind| match k {
                    EdgeKind::Link { .. } => 0,
                    EdgeKind::Loop { sign: Sign::Pos, .. } => 1,
                    _ => 2,
                };
                g.edges()
                    .iter()
                    .min_by_key(|e| (rank(&e.kind), e.id))
                    .map(|e| e.id)
                    .expect("graph has edges")
            }
            EdgeOrder::Scrambled(seed) => {
                let mut h = DefaultHasher::new();
                seed.hash(&mut h);
                key.hash(&mut h);
                let i = (h.finish() % g.edge_count() as u64) as usize;
                g.edges()[i].id
            }
        }
    }

    fn eval(&self, g: &SignedGraph, conv: Convention) -> BivarPoly {
        if g.has_loose_edge() {
            return BivarPoly::zero();
        }
        if g.is_edgeless() {
            return (&BivarPoly::lambda() + &BivarPoly::mu()).pow(g.vertex_count() as u32);
        }
        let key = (g.canonical_key(), conv);
        if let Some(p) = self.memo.as_ref().and_then(|m| m.get(&key)) {
            return p;
        }

        let id = self.pick_edge(g, &key.0);
        let edge = *g.edge(id).expect("picked edge exists");
        let deleted = g.delete_edge(id).expect("edge exists");
        let vertex_constraint = matches!(
            edge.kind,
            EdgeKind::Halfedge { .. } | EdgeKind::Loop { sign: Sign::Neg, .. }
        );
        let p = if vertex_constraint {
            if conv == Convention::ZeroFree {
                // no zero color, so the constraint is vacuous
                self.eval(&deleted, conv)
            } else {
                let contracted = g.contract_edge(id).expect("contractible");
                &self.eval(&deleted, conv) - &self.eval(&contracted, conv)
            }
        } else {
            let (contracted, v) = g.contract_edge_with_vertex(id).expect("contractible");
            let v = v.expect("links and positive loops contract to a vertex");
            let removed = contracted.delete_vertex(v).expect("vertex exists");
            let high = &BivarPoly::mu() * &self.eval(&removed, conv);
            &(&self.eval(&deleted, conv) - &self.eval(&contracted, conv)) + &high
        };

        if let Some(m) = &self.memo {
            m.insert(key, p.clone());
        }
        p
    }
}

/// Unsigned-mode graphs are all-positive signed graphs; the signed
/// conventions count them with the signed palette.
fn signed_view(g: &SignedGraph) -> SignedGraph {
    match g.mode() {
        Mode::Signed => g.clone(),
        Mode::Unsigned => g.with_mode(Mode::Signed).expect("signed mode accepts any graph"),
    }
}

pub fn poly_signed_dc(g: &SignedGraph) -> PolyResult {
    DcEngine::new().signed(g)
}

pub fn poly_zero_free_dc(g: &SignedGraph) -> PolyResult {
    DcEngine::new().zero_free(g)
}

pub fn poly_unsigned_dc(g: &SignedGraph) -> Result<PolyResult, DcError> {
    DcEngine::new().unsigned(g)
}

/// Univariate chromatic polynomial in λ at `l = 0`: Zaslavsky's polynomial
/// (signed or zero-free), or the classical one for unsigned graphs.
pub fn chromatic_univariate(g: &SignedGraph, conv: Convention) -> UniPoly {
    let mut memo = HashMap::new();
    univariate(g, conv, &mut memo)
}

fn univariate(g: &SignedGraph, conv: Convention, memo: &mut HashMap<CanonicalKey, UniPoly>) -> UniPoly {
    if g.has_loose_edge() {
        return UniPoly::zero();
    }
    if g.is_edgeless() {
        return UniPoly::x().pow(g.vertex_count());
    }
    let key = g.canonical_key();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let e = g.edges()[0];
    let deleted = g.delete_edge(e.id).expect("edge exists");
    let vacuous = conv == Convention::ZeroFree
        && matches!(e.kind, EdgeKind::Halfedge { .. } | EdgeKind::Loop { sign: Sign::Neg, .. });
    let p = if vacuous {
        univariate(&deleted, conv, memo)
    } else {
        let contracted = g.contract_edge(e.id).expect("contractible");
        &univariate(&deleted, conv, memo) - &univariate(&contracted, conv, memo)
    };
    memo.insert(key, p.clone());
    p
}

fn subset_expansion(g: &SignedGraph, conv: Convention) -> BivarPoly {
    let n = g.vertex_count();
    let mut out = BivarPoly::zero();
    for mask in 0u64..1 << n {
        let w: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let rest = g.induced_delete(&w).expect("vertices in range");
        let z = chromatic_univariate(&rest, conv).in_lambda();
        out = &out + &(&BivarPoly::mu().pow(w.len() as u32) * &z);
    }
    out
}

/// Signed polynomial via `Σ_W μ^{|W|} Z_{G-W}(λ)`.
pub fn poly_signed_subset(g: &SignedGraph) -> PolyResult {
    let g = signed_view(g);
    let p = subset_expansion(&g, Convention::Signed);
    PolyResult::new(p, Convention::Signed, Provenance::SubsetExpansion, g.vertex_count())
}

/// Zero-free polynomial via `Σ_W μ^{|W|} Z*_{G-W}(λ)`.
pub fn poly_zero_free_subset(g: &SignedGraph) -> PolyResult {
    let g = signed_view(g);
    let p = subset_expansion(&g, Convention::ZeroFree);
    PolyResult::new(p, Convention::ZeroFree, Provenance::SubsetExpansion, g.vertex_count())
}

/// Unsigned polynomial via `Σ_W μ^{|W|} χ_{Γ-W}(λ)`.
pub fn poly_unsigned_subset(g: &SignedGraph) -> Result<PolyResult, DcError> {
    let g = g.with_mode(Mode::Unsigned)?;
    let p = subset_expansion(&g, Convention::Unsigned);
    Ok(PolyResult::new(p, Convention::Unsigned, Provenance::SubsetExpansion, g.vertex_count()))
}

pub fn poly_subset(g: &SignedGraph, conv: Convention) -> Result<PolyResult, DcError> {
    match conv {
        Convention::Signed => Ok(poly_signed_subset(g)),
        Convention::ZeroFree => Ok(poly_zero_free_subset(g)),
        Convention::Unsigned => poly_unsigned_subset(g),
    }
}

/// Fits the brute-force counts on `k, l ∈ 0..=n` (with `n = |V|`) and
/// interpolates exactly.
pub fn poly_interpolated(g: &SignedGraph, conv: Convention) -> Result<PolyResult, DcError> {
    let g = match conv {
        Convention::Unsigned => g.with_mode(Mode::Unsigned)?,
        _ => signed_view(g),
    };
    let n = g.vertex_count();
    let table = CountTable::new(&g, conv.palette(), 2 * n as u32)?;
    let mut points = Vec::with_capacity((n + 1) * (n + 1));
    for k in 0..=n as u32 {
        for l in 0..=n as u32 {
            let v = table.get(k, l).expect("within table");
            points.push((conv.lambda(k as i64), conv.mu(l as i64), BigInt::from(v)));
        }
    }
    let p = interpolate_grid(points, n)?;
    Ok(PolyResult::new(p, conv, Provenance::Interpolation, n))
}
