//! Signed graphs with links, loops, halfedges and loose edges.
//!
//! Vertices are dense indices `0..n`; each carries the original label it was
//! created with so results can be reported in the caller's numbering. Every
//! structural operation returns a new graph and leaves its input untouched.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Mul, Neg};

use thiserror::Error;

/// Edge sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i64(x: i64) -> Option<Sign> {
        match x {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Neg
    }
}

/// Whether a graph is counted with the signed palette `[-(k+l), k+l]` or the
/// unsigned palette `[1, k+l]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Signed,
    Unsigned,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Signed => "signed",
            Mode::Unsigned => "unsigned",
        })
    }
}

pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Edge between two distinct vertices.
    Link { a: usize, b: usize, sign: Sign },
    Loop { v: usize, sign: Sign },
    /// Edge with a single endpoint; carries no sign.
    Halfedge { v: usize },
    /// Edge with no endpoints. Only produced by contraction.
    Loose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub kind: EdgeKind,
}

impl Edge {
    /// True if `v` is an endpoint of this edge.
    pub fn touches(&self, v: usize) -> bool {
        match self.kind {
            EdgeKind::Link { a, b, .. } => a == v || b == v,
            EdgeKind::Loop { v: u, .. } | EdgeKind::Halfedge { v: u } => u == v,
            EdgeKind::Loose => false,
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self.kind {
            EdgeKind::Link { sign, .. } | EdgeKind::Loop { sign, .. } => Some(sign),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("link endpoints must differ (vertex {0}); use a loop")]
    SelfLink(usize),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(u32),
    #[error("switching must assign a sign to all {expected} vertices, got {got}")]
    PartialSwitching { expected: usize, got: usize },
    #[error("edge {0} is a loose edge and cannot be contracted")]
    NotContractible(EdgeId),
    #[error("unsigned graphs admit only positive links and loops")]
    NotUnsigned,
}

/// A vertex sign assignment used for switching.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Switching(Vec<Sign>);

impl Switching {
    pub fn new(signs: Vec<Sign>) -> Self {
        Switching(signs)
    }

    pub fn identity(n: usize) -> Self {
        Switching(vec![Sign::Pos; n])
    }

    /// Switching whose signs are read from the low `n` bits of `mask`
    /// (bit set means negative).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Switching(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { Sign::Neg } else { Sign::Pos })
                .collect(),
        )
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }
}

/// Structural identity of a graph, ignoring vertex labels and edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    mode: Mode,
    n: usize,
    edges: Vec<(u8, usize, usize, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    mode: Mode,
    labels: Vec<u32>,
    edges: Vec<Edge>,
    next_id: EdgeId,
}

impl SignedGraph {
    /// Edgeless graph on `n` vertices labelled `1..=n`.
    pub fn new(mode: Mode, n: usize) -> Self {
        SignedGraph {
            mode,
            labels: (1..=n as u32).collect(),
            edges: Vec::new(),
            next_id: 0,
        }
    }

    /// Edgeless graph whose dense indices follow the sorted order of `labels`.
    pub fn with_labels(mode: Mode, labels: impl IntoIterator<Item = u32>) -> Result<Self, GraphError> {
        let mut labels: Vec<u32> = labels.into_iter().collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateLabel(w[0]));
        }
        Ok(SignedGraph {
            mode,
            labels,
            edges: Vec::new(),
            next_id: 0,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_loose_edge(&self) -> bool {
        self.edges.iter().any(|e| e.kind == EdgeKind::Loose)
    }

    pub fn has_halfedge(&self) -> bool {
        self.edges
            .iter()
            .any(|e| matches!(e.kind, EdgeKind::Halfedge { .. }))
    }

    /// True if every edge is a link.
    pub fn is_link_only(&self) -> bool {
        self.edges
            .iter()
            .all(|e| matches!(e.kind, EdgeKind::Link { .. }))
    }

    /// Link-only with no two links joining the same pair.
    pub fn is_simple(&self) -> bool {
        if !self.is_link_only() {
            return false;
        }
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|e| match e.kind {
                EdgeKind::Link { a, b, .. } => Some((a.min(b), a.max(b))),
                _ => None,
            })
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    fn push(&mut self, kind: EdgeKind) -> EdgeId {
        let id = self.next_id;
        self.next_id += 1;
        self.edges.push(Edge { id, kind });
        id
    }

    pub fn add_link(&mut self, a: usize, b: usize, sign: Sign) -> Result<EdgeId, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfLink(a));
        }
        if self.mode == Mode::Unsigned && sign == Sign::Neg {
            return Err(GraphError::NotUnsigned);
        }
        Ok(self.push(EdgeKind::Link { a, b, sign }))
    }

    pub fn add_loop(&mut self, v: usize, sign: Sign) -> Result<EdgeId, GraphError> {
        self.check_vertex(v)?;
        if self.mode == Mode::Unsigned && sign == Sign::Neg {
            return Err(GraphError::NotUnsigned);
        }
        Ok(self.push(EdgeKind::Loop { v, sign }))
    }

    pub fn add_halfedge(&mut self, v: usize) -> Result<EdgeId, GraphError> {
        self.check_vertex(v)?;
        if self.mode == Mode::Unsigned {
            return Err(GraphError::NotUnsigned);
        }
        Ok(self.push(EdgeKind::Halfedge { v }))
    }

    /// Same structure viewed in another counting mode.
    pub fn with_mode(&self, mode: Mode) -> Result<Self, GraphError> {
        if mode == Mode::Unsigned
            && self.edges.iter().any(|e| {
                matches!(e.kind, EdgeKind::Halfedge { .. } | EdgeKind::Loose)
                    || e.sign() == Some(Sign::Neg)
            })
        {
            return Err(GraphError::NotUnsigned);
        }
        Ok(SignedGraph {
            mode,
            ..self.clone()
        })
    }

    /// The underlying unsigned graph: halfedges and loose edges dropped,
    /// every link and loop made positive.
    pub fn underlying_unsigned(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let kind = match e.kind {
                    EdgeKind::Link { a, b, .. } => EdgeKind::Link { a, b, sign: Sign::Pos },
                    EdgeKind::Loop { v, .. } => EdgeKind::Loop { v, sign: Sign::Pos },
                    _ => return None,
                };
                Some(Edge { id: e.id, kind })
            })
            .collect();
        SignedGraph {
            mode: Mode::Unsigned,
            labels: self.labels.clone(),
            edges,
            next_id: self.next_id,
        }
    }

    pub fn delete_edge(&self, id: EdgeId) -> Result<Self, GraphError> {
        let pos = self
            .edges
            .iter()
            .position(|e| e.id == id)
            .ok_or(GraphError::UnknownEdge(id))?;
        let mut g = self.clone();
        g.edges.remove(pos);
        Ok(g)
    }

    /// Removes `v` together with every edge incident to it. Remaining vertices
    /// keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        Ok(self.remove_vertices(&[v]))
    }

    /// Removes every vertex of `w` and all edges incident to them.
    pub fn induced_delete(&self, w: &[usize]) -> Result<Self, GraphError> {
        for &v in w {
            self.check_vertex(v)?;
        }
        Ok(self.remove_vertices(w))
    }

    fn remove_vertices(&self, w: &[usize]) -> Self {
        let n = self.vertex_count();
        let mut removed = vec![false; n];
        for &v in w {
            removed[v] = true;
        }
        let mut map = vec![usize::MAX; n];
        let mut labels = Vec::with_capacity(n);
        for v in 0..n {
            if !removed[v] {
                map[v] = labels.len();
                labels.push(self.labels[v]);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let kind = match e.kind {
                    EdgeKind::Link { a, b, sign } => {
                        if removed[a] || removed[b] {
                            return None;
                        }
                        EdgeKind::Link { a: map[a], b: map[b], sign }
                    }
                    EdgeKind::Loop { v, sign } => {
                        if removed[v] {
                            return None;
                        }
                        EdgeKind::Loop { v: map[v], sign }
                    }
                    EdgeKind::Halfedge { v } => {
                        if removed[v] {
                            return None;
                        }
                        EdgeKind::Halfedge { v: map[v] }
                    }
                    EdgeKind::Loose => EdgeKind::Loose,
                };
                Some(Edge { id: e.id, kind })
            })
            .collect();
        SignedGraph {
            mode: self.mode,
            labels,
            edges,
            next_id: self.next_id,
        }
    }

    /// Applies `s`: each link `vw` gets sign `s_v * sigma * s_w`. Loops,
    /// halfedges and loose edges are unaffected.
    pub fn switch(&self, s: &Switching) -> Result<Self, GraphError> {
        if s.0.len() != self.vertex_count() {
            return Err(GraphError::PartialSwitching {
                expected: self.vertex_count(),
                got: s.0.len(),
            });
        }
        let mut g = self.clone();
        for e in &mut g.edges {
            if let EdgeKind::Link { a, b, sign } = e.kind {
                e.kind = EdgeKind::Link { a, b, sign: s.0[a] * sign * s.0[b] };
            }
        }
        if g.mode == Mode::Unsigned && g.edges.iter().any(|e| e.sign() == Some(Sign::Neg)) {
            g.mode = Mode::Signed;
        }
        Ok(g)
    }

    /// Flips the sign of every link and loop. The result is always in
    /// signed mode.
    pub fn negate(&self) -> Self {
        let mut g = self.clone();
        g.mode = Mode::Signed;
        for e in &mut g.edges {
            e.kind = match e.kind {
                EdgeKind::Link { a, b, sign } => EdgeKind::Link { a, b, sign: -sign },
                EdgeKind::Loop { v, sign } => EdgeKind::Loop { v, sign: -sign },
                k => k,
            };
        }
        g
    }

    pub fn contract_edge(&self, id: EdgeId) -> Result<Self, GraphError> {
        self.contract_edge_with_vertex(id).map(|(g, _)| g)
    }

    /// Contracts edge `id` and also returns the vertex of the result that the
    /// edge collapsed to, or `None` when the contraction removed its vertex
    /// (negative loops and halfedges).
    pub fn contract_edge_with_vertex(&self, id: EdgeId) -> Result<(Self, Option<usize>), GraphError> {
        let edge = *self.edge(id).ok_or(GraphError::UnknownEdge(id))?;
        match edge.kind {
            EdgeKind::Loose => Err(GraphError::NotContractible(id)),
            EdgeKind::Loop { v, sign: Sign::Pos } => Ok((self.delete_edge(id)?, Some(v))),
            EdgeKind::Link { a, b, sign } => {
                let keep = a.min(b);
                let gone = a.max(b);
                // switching at `gone` makes e positive when it was negative
                let flip = sign == Sign::Neg;
                let relocate = |u: usize| if u == gone { keep } else { u };
                let mut g = self.clone();
                g.edges.retain(|e| e.id != id);
                for e in &mut g.edges {
                    e.kind = match e.kind {
                        EdgeKind::Link { a: x, b: y, sign: s } => {
                            let s = if flip && ((x == gone) != (y == gone)) { -s } else { s };
                            let (x, y) = (relocate(x), relocate(y));
                            if x == y {
                                EdgeKind::Loop { v: x, sign: s }
                            } else {
                                EdgeKind::Link { a: x, b: y, sign: s }
                            }
                        }
                        EdgeKind::Loop { v, sign: s } => EdgeKind::Loop { v: relocate(v), sign: s },
                        EdgeKind::Halfedge { v } => EdgeKind::Halfedge { v: relocate(v) },
                        EdgeKind::Loose => EdgeKind::Loose,
                    };
                }
                Ok((g.remove_vertices(&[gone]), Some(keep)))
            }
            EdgeKind::Loop { v, sign: Sign::Neg } | EdgeKind::Halfedge { v } => {
                let mut g = self.clone();
                g.edges.retain(|e| e.id != id);
                for e in &mut g.edges {
                    e.kind = match e.kind {
                        EdgeKind::Link { a, b, .. } if a == v => EdgeKind::Halfedge { v: b },
                        EdgeKind::Link { a, b, .. } if b == v => EdgeKind::Halfedge { v: a },
                        EdgeKind::Loop { v: u, .. } | EdgeKind::Halfedge { v: u } if u == v => {
                            EdgeKind::Loose
                        }
                        k => k,
                    };
                }
                // halfedges only exist on signed graphs
                g.mode = Mode::Signed;
                Ok((g.remove_vertices(&[v]), None))
            }
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex. Isolated vertices form their own components; loose edges
    /// belong to none.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let adj = self.link_adjacency();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn link_adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            if let EdgeKind::Link { a, b, sign } = e.kind {
                adj[a].push((b, sign));
                adj[b].push((a, sign));
            }
        }
        adj
    }

    /// Balance of each component of [`components`](Self::components), in the
    /// same order.
    pub fn component_balance(&self) -> Vec<bool> {
        let n = self.vertex_count();
        let adj = self.link_adjacency();
        let mut potential: Vec<Option<Sign>> = vec![None; n];
        let mut ok_vertex = vec![true; n];
        for e in &self.edges {
            match e.kind {
                EdgeKind::Loop { v, sign: Sign::Neg } | EdgeKind::Halfedge { v } => {
                    ok_vertex[v] = false
                }
                _ => {}
            }
        }
        self.components()
            .into_iter()
            .map(|comp| {
                let root = comp[0];
                potential[root] = Some(Sign::Pos);
                let mut queue = VecDeque::from([root]);
                let mut balanced = comp.iter().all(|&v| ok_vertex[v]);
                while let Some(u) = queue.pop_front() {
                    let pu = potential[u].unwrap();
                    for &(w, sign) in &adj[u] {
                        let want = pu * sign;
                        match potential[w] {
                            None => {
                                potential[w] = Some(want);
                                queue.push_back(w);
                            }
                            Some(pw) if pw != want => balanced = false,
                            Some(_) => {}
                        }
                    }
                }
                balanced
            })
            .collect()
    }

    /// True if every component is balanced and there are no loose edges.
    pub fn is_balanced(&self) -> bool {
        !self.has_loose_edge() && self.component_balance().into_iter().all(|b| b)
    }

    pub fn is_antibalanced(&self) -> bool {
        self.negate().is_balanced()
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        let mut edges: Vec<(u8, usize, usize, i8)> = self
            .edges
            .iter()
            .map(|e| match e.kind {
                EdgeKind::Link { a, b, sign } => (0, a.min(b), a.max(b), sign.as_i64() as i8),
                EdgeKind::Loop { v, sign } => (1, v, v, sign.as_i64() as i8),
                EdgeKind::Halfedge { v } => (2, v, v, 0),
                EdgeKind::Loose => (3, 0, 0, 0),
            })
            .collect();
        edges.sort_unstable();
        CanonicalKey {
            mode: self.mode,
            n: self.vertex_count(),
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2(sign: Sign) -> SignedGraph {
        let mut g = SignedGraph::new(Mode::Signed, 2);
        g.add_link(0, 1, sign).unwrap();
        g
    }

    fn path3() -> SignedGraph {
        let mut g = SignedGraph::new(Mode::Signed, 3);
        g.add_link(0, 1, Sign::Pos).unwrap();
        g.add_link(1, 2, Sign::Pos).unwrap();
        g
    }

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        let mut g = SignedGraph::new(Mode::Signed, 3);
        g.add_link(0, 1, signs[0]).unwrap();
        g.add_link(1, 2, signs[1]).unwrap();
        g.add_link(0, 2, signs[2]).unwrap();
        g
    }

    /// Balance by brute force: some vertex sign assignment satisfies every
    /// link, no negative loops, no halfedges.
    fn balanced_by_search(g: &SignedGraph) -> bool {
        if g.edges().iter().any(|e| {
            matches!(
                e.kind,
                EdgeKind::Halfedge { .. } | EdgeKind::Loose | EdgeKind::Loop { sign: Sign::Neg, .. }
            )
        }) {
            return false;
        }
        let n = g.vertex_count();
        (0..1u64 << n).any(|mask| {
            let s = Switching::from_mask(n, mask);
            g.edges().iter().all(|e| match e.kind {
                EdgeKind::Link { a, b, sign } => s.signs()[a] * s.signs()[b] == sign,
                _ => true,
            })
        })
    }

    #[test]
    fn delete_edge_examples() {
        let g = k2(Sign::Pos).delete_edge(0).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.is_edgeless());

        let mut h = SignedGraph::new(Mode::Signed, 1);
        let e = h.add_halfedge(0).unwrap();
        let h2 = h.delete_edge(e).unwrap();
        assert_eq!(h2.vertex_count(), 1);
        assert!(h2.is_edgeless());
        assert_eq!(h.edge_count(), 1);

        let p = path3().delete_edge(1).unwrap();
        assert_eq!(p.edges().len(), 1);
        assert_eq!(p.components(), vec![vec![0, 1], vec![2]]);

        assert_eq!(k2(Sign::Pos).delete_edge(7), Err(GraphError::UnknownEdge(7)));
    }

    #[test]
    fn delete_vertex_examples() {
        let g = k2(Sign::Pos).delete_vertex(0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.is_edgeless());
        assert_eq!(g.labels(), &[2]);

        let t = triangle([Sign::Pos; 3]).delete_vertex(1).unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.edges().len(), 1);
        assert!(matches!(t.edges()[0].kind, EdgeKind::Link { a: 0, b: 1, .. }));

        let mut l = SignedGraph::new(Mode::Signed, 1);
        l.add_loop(0, Sign::Neg).unwrap();
        let e = l.delete_vertex(0).unwrap();
        assert_eq!(e.vertex_count(), 0);
        assert!(e.is_edgeless());

        assert_eq!(l.delete_vertex(3), Err(GraphError::UnknownVertex(3)));
    }

    #[test]
    fn switching_examples() {
        let t = triangle([Sign::Pos, Sign::Neg, Sign::Pos]);
        assert_eq!(t.switch(&Switching::identity(3)).unwrap(), t);

        let s = Switching::new(vec![Sign::Pos, Sign::Neg]);
        let g = k2(Sign::Neg).switch(&s).unwrap();
        assert_eq!(g.edges()[0].sign(), Some(Sign::Pos));

        let mut l = SignedGraph::new(Mode::Signed, 1);
        l.add_loop(0, Sign::Neg).unwrap();
        let l2 = l.switch(&Switching::new(vec![Sign::Neg])).unwrap();
        assert_eq!(l2.edges()[0].sign(), Some(Sign::Neg));

        assert_eq!(
            t.switch(&Switching::identity(2)),
            Err(GraphError::PartialSwitching { expected: 3, got: 2 })
        );
    }

    #[test]
    fn contract_examples() {
        let g = k2(Sign::Pos).contract_edge(0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.is_edgeless());

        // triangle with two negative links and a positive base link e
        let mut t = SignedGraph::new(Mode::Signed, 3);
        t.add_link(0, 1, Sign::Neg).unwrap();
        t.add_link(1, 2, Sign::Neg).unwrap();
        let e = t.add_link(0, 2, Sign::Pos).unwrap();
        let (c, v) = t.contract_edge_with_vertex(e).unwrap();
        assert_eq!(v, Some(0));
        assert_eq!(c.vertex_count(), 2);
        let kinds: Vec<_> = c.edges().iter().map(|e| e.kind).collect();
        assert_eq!(
            kinds,
            vec![
                EdgeKind::Link { a: 0, b: 1, sign: Sign::Neg },
                EdgeKind::Link { a: 1, b: 0, sign: Sign::Neg },
            ]
        );

        // negative loop at v with pendant link v-w
        let mut h = SignedGraph::new(Mode::Signed, 2);
        let lp = h.add_loop(0, Sign::Neg).unwrap();
        h.add_link(0, 1, Sign::Pos).unwrap();
        let (c, v) = h.contract_edge_with_vertex(lp).unwrap();
        assert_eq!(v, None);
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.labels(), &[2]);
        assert_eq!(c.edges().len(), 1);
        assert_eq!(c.edges()[0].kind, EdgeKind::Halfedge { v: 0 });
    }

    #[test]
    fn contract_negative_link_switches_first() {
        // -link 0-1 with a +link 1-2: contracting switches at 1, so 1-2 becomes -
        let mut g = SignedGraph::new(Mode::Signed, 3);
        let e = g.add_link(0, 1, Sign::Neg).unwrap();
        g.add_link(1, 2, Sign::Pos).unwrap();
        g.add_loop(1, Sign::Pos).unwrap();
        let c = g.contract_edge(e).unwrap();
        let kinds: Vec<_> = c.edges().iter().map(|e| e.kind).collect();
        assert_eq!(
            kinds,
            vec![
                EdgeKind::Link { a: 0, b: 1, sign: Sign::Neg },
                EdgeKind::Loop { v: 0, sign: Sign::Pos },
            ]
        );
    }

    #[test]
    fn contract_halfedge_makes_loose_edges() {
        let mut g = SignedGraph::new(Mode::Signed, 1);
        let h = g.add_halfedge(0).unwrap();
        g.add_halfedge(0).unwrap();
        g.add_loop(0, Sign::Pos).unwrap();
        let c = g.contract_edge(h).unwrap();
        assert_eq!(c.vertex_count(), 0);
        assert_eq!(c.edges().len(), 2);
        assert!(c.edges().iter().all(|e| e.kind == EdgeKind::Loose));
        let loose = c.edges()[0].id;
        assert_eq!(c.contract_edge(loose), Err(GraphError::NotContractible(loose)));
    }

    #[test]
    fn positive_loop_contraction_is_deletion() {
        let mut g = SignedGraph::new(Mode::Signed, 2);
        let lp = g.add_loop(1, Sign::Pos).unwrap();
        g.add_link(0, 1, Sign::Neg).unwrap();
        let (c, v) = g.contract_edge_with_vertex(lp).unwrap();
        assert_eq!(v, Some(1));
        assert_eq!(c, g.delete_edge(lp).unwrap());
    }

    #[test]
    fn balance_examples() {
        let g = SignedGraph::new(Mode::Signed, 3);
        assert!(g.is_balanced());
        assert!(g.is_antibalanced());

        let t = triangle([Sign::Pos, Sign::Pos, Sign::Neg]);
        assert!(!t.is_balanced());
        assert_eq!(t.is_balanced(), balanced_by_search(&t));
        assert_eq!(t.is_antibalanced(), balanced_by_search(&t.negate()));
        // negation has two negative links: positive cycle
        assert!(t.is_antibalanced());

        let mut l = SignedGraph::new(Mode::Signed, 1);
        l.add_loop(0, Sign::Neg).unwrap();
        assert!(!l.is_balanced());
        assert!(l.is_antibalanced());

        let mut h = SignedGraph::new(Mode::Signed, 1);
        h.add_halfedge(0).unwrap();
        assert!(!h.is_balanced());
        assert!(!h.is_antibalanced());
    }

    #[test]
    fn balance_matches_search_on_all_triangles() {
        for mask in 0..8u64 {
            let s = Switching::from_mask(3, mask);
            let t = triangle([s.signs()[0], s.signs()[1], s.signs()[2]]);
            assert_eq!(t.is_balanced(), balanced_by_search(&t));
            assert_eq!(t.is_antibalanced(), balanced_by_search(&t.negate()));
        }
    }

    #[test]
    fn component_balance_is_per_component() {
        let mut g = SignedGraph::new(Mode::Signed, 3);
        g.add_loop(2, Sign::Neg).unwrap();
        g.add_link(0, 1, Sign::Neg).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2]]);
        assert_eq!(g.component_balance(), vec![true, false]);
    }

    #[test]
    fn induced_delete_examples() {
        let p = path3().induced_delete(&[1]).unwrap();
        assert_eq!(p.vertex_count(), 2);
        assert_eq!(p.components().len(), 2);

        let e = path3().induced_delete(&[0, 1, 2]).unwrap();
        assert_eq!(e.components().len(), 0);

        let t = triangle([Sign::Pos; 3]).induced_delete(&[2]).unwrap();
        assert_eq!(t.components().len(), 1);
        assert_eq!(t.edge_count(), 1);

        assert_eq!(path3().induced_delete(&[5]), Err(GraphError::UnknownVertex(5)));
    }

    #[test]
    fn canonical_key_examples() {
        let t = triangle([Sign::Pos, Sign::Neg, Sign::Pos]);
        assert_eq!(t.canonical_key(), t.clone().canonical_key());
        assert_ne!(t.canonical_key(), t.delete_edge(0).unwrap().canonical_key());
        // labels do not matter, only dense structure
        let mut r = SignedGraph::with_labels(Mode::Signed, [40, 10, 20]).unwrap();
        r.add_link(0, 1, Sign::Pos).unwrap();
        r.add_link(2, 1, Sign::Neg).unwrap();
        r.add_link(0, 2, Sign::Pos).unwrap();
        assert_eq!(r.canonical_key(), t.canonical_key());
    }

    #[test]
    fn unsigned_mode_rejects_signed_features() {
        let mut g = SignedGraph::new(Mode::Unsigned, 2);
        assert_eq!(g.add_link(0, 1, Sign::Neg), Err(GraphError::NotUnsigned));
        assert_eq!(g.add_halfedge(0), Err(GraphError::NotUnsigned));
        assert_eq!(g.add_link(1, 1, Sign::Pos), Err(GraphError::SelfLink(1)));
        assert!(g.add_loop(0, Sign::Pos).is_ok());
    }

    #[test]
    fn labels_are_sorted_and_unique() {
        let g = SignedGraph::with_labels(Mode::Signed, [7, 3, 5]).unwrap();
        assert_eq!(g.labels(), &[3, 5, 7]);
        assert_eq!(
            SignedGraph::with_labels(Mode::Signed, [1, 1]),
            Err(GraphError::DuplicateLabel(1))
        );
    }
}
