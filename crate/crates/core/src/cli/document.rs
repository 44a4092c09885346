//! The graph file format.
//!
//! ```text
//! # a signed path with a halfedge at its end
//! signed
//! vertices 3
//! edge 1 2 -
//! edge 2 3 +
//! halfedge 3
//! ```
//!
//! Vertices are numbered from 1 in files and from 0 in [`SignedGraph`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Mode, Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// One edge declaration. Vertices are 1-based, as written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decl {
    Edge(usize, usize, Sign),
    Loop(usize, Sign),
    Halfedge(usize),
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Decl::Edge(v, w, s) => write!(f, "edge {v} {w} {}", s.symbol()),
            Decl::Loop(v, s) => write!(f, "loop {v} {}", s.symbol()),
            Decl::Halfedge(v) => write!(f, "halfedge {v}"),
        }
    }
}

/// An edge declaration and the line it came from.
#[derive(Clone, Copy, Debug)]
pub struct EdgeDecl {
    pub decl: Decl,
    pub line: usize,
}

/// A parsed graph file. Equality compares the graph content only; source
/// lines are provenance.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub mode: Mode,
    pub vertices: usize,
    pub edges: Vec<EdgeDecl>,
}

impl PartialEq for GraphDocument {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode
            && self.vertices == other.vertices
            && self.edges.len() == other.edges.len()
            && self.edges.iter().zip(&other.edges).all(|(a, b)| a.decl == b.decl)
    }
}

impl Eq for GraphDocument {}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    match tok.parse::<usize>() {
        Ok(v) if (1..=n).contains(&v) => Ok(v),
        Ok(v) => fail(line, format!("vertex {v} out of range 1..={n}")),
        Err(_) => fail(line, format!("expected a vertex number, found `{tok}`")),
    }
}

fn parse_sign(tok: &str, mode: Mode, line: usize) -> Result<Sign, ParseError> {
    match (tok, mode) {
        ("+", _) => Ok(Sign::Pos),
        ("-", Mode::Signed) => Ok(Sign::Neg),
        ("-", Mode::Unsigned) => fail(line, "negative sign in an unsigned graph"),
        _ => fail(line, format!("expected `+` or `-`, found `{tok}`")),
    }
}

fn arity(toks: &[&str], want: usize, usage: &str, line: usize) -> Result<(), ParseError> {
    if toks.len() == want {
        Ok(())
    } else {
        fail(line, format!("expected `{usage}`"))
    }
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut mode = None;
        let mut vertices = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            let Some(&keyword) = toks.first() else { continue };
            let Some(m) = mode else {
                mode = Some(match keyword {
                    "signed" => Mode::Signed,
                    "unsigned" => Mode::Unsigned,
                    _ => return fail(line, format!("expected `signed` or `unsigned`, found `{keyword}`")),
                });
                arity(&toks, 1, keyword, line)?;
                continue;
            };
            let Some(n) = vertices else {
                if keyword != "vertices" {
                    return fail(line, format!("expected `vertices <n>`, found `{keyword}`"));
                }
                arity(&toks, 2, "vertices <n>", line)?;
                match toks[1].parse::<usize>() {
                    Ok(n) => vertices = Some(n),
                    Err(_) => return fail(line, format!("expected a vertex count, found `{}`", toks[1])),
                }
                continue;
            };
            let decl = match keyword {
                "edge" => {
                    arity(&toks, 4, "edge <v> <w> <+|->", line)?;
                    let v = parse_vertex(toks[1], n, line)?;
                    let w = parse_vertex(toks[2], n, line)?;
                    if v == w {
                        return fail(line, format!("`edge {v} {v}` joins a vertex to itself; use `loop {v}`"));
                    }
                    Decl::Edge(v, w, parse_sign(toks[3], m, line)?)
                }
                "loop" => {
                    arity(&toks, 3, "loop <v> <+|->", line)?;
                    Decl::Loop(parse_vertex(toks[1], n, line)?, parse_sign(toks[2], m, line)?)
                }
                "halfedge" => {
                    if toks.len() == 3 && matches!(toks[2], "+" | "-") {
                        return fail(line, "a halfedge takes no sign");
                    }
                    arity(&toks, 2, "halfedge <v>", line)?;
                    if m == Mode::Unsigned {
                        return fail(line, "halfedge in an unsigned graph");
                    }
                    Decl::Halfedge(parse_vertex(toks[1], n, line)?)
                }
                "vertices" => return fail(line, "vertex count declared twice"),
                "signed" | "unsigned" => return fail(line, "mode declared twice"),
                _ => return fail(line, format!("unknown keyword `{keyword}`")),
            };
            edges.push(EdgeDecl { decl, line });
        }
        let last = text.lines().count().max(1);
        let Some(mode) = mode else { return fail(last, "missing `signed` or `unsigned` header") };
        let Some(vertices) = vertices else { return fail(last, "missing `vertices <n>` line") };
        Ok(GraphDocument { mode, vertices, edges })
    }

    /// The graph with 0-based vertices, edges in declaration order.
    pub fn to_graph(&self) -> SignedGraph {
        let mut g = SignedGraph::new(self.mode, self.vertices);
        for e in &self.edges {
            match e.decl {
                Decl::Edge(v, w, s) => g.add_link(v - 1, w - 1, s),
                Decl::Loop(v, s) => g.add_loop(v - 1, s),
                Decl::Halfedge(v) => g.add_halfedge(v - 1),
            }
            .expect("parser only admits valid edges");
        }
        g
    }
}

impl FromStr for GraphDocument {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphDocument::parse(s)
    }
}

impl fmt::Display for GraphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.mode)?;
        writeln!(f, "vertices {}", self.vertices)?;
        for e in &self.edges {
            writeln!(f, "{}", e.decl)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn err_line(text: &str) -> (usize, String) {
        let e = GraphDocument::parse(text).unwrap_err();
        (e.line, e.message)
    }

    #[test]
    fn examples() {
        let d = GraphDocument::parse("signed\nvertices 1\nloop 1 -\n").unwrap();
        let g = d.to_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 1));
        assert_eq!(g.edges()[0].sign(), Some(Sign::Neg));

        let d = GraphDocument::parse("unsigned\nvertices 2\nedge 1 2 +\n").unwrap();
        assert_eq!(d.mode, Mode::Unsigned);
        assert_eq!(d.edges[0].decl, Decl::Edge(1, 2, Sign::Pos));

        let text = "# path\nsigned\n\nvertices 3  # three\nedge 1 2 -\nedge 2 3 +\nhalfedge 3\n";
        let d = GraphDocument::parse(text).unwrap();
        assert_eq!(d.edges.iter().map(|e| e.line).collect::<Vec<_>>(), [5, 6, 7]);
        assert!(d.to_graph().has_halfedge());
    }

    #[test]
    fn diagnostics() {
        assert_eq!(err_line("signed\nvertices 2\nedge 1 1 +\n").0, 3);
        assert!(err_line("signed\nvertices 2\nedge 1 1 +\n").1.contains("loop 1"));
        assert_eq!(err_line("signed\nvertices 2\nedge 1 3 +\n"), (3, "vertex 3 out of range 1..=2".into()));
        assert_eq!(err_line("signed\nvertices 2\nhalfedge 1 -\n"), (3, "a halfedge takes no sign".into()));
        assert_eq!(err_line("signed\nvertices 2\n\nbridge 1 2\n"), (4, "unknown keyword `bridge`".into()));
        assert_eq!(err_line("unsigned\nvertices 2\nedge 1 2 -\n").0, 3);
        assert_eq!(err_line("unsigned\nvertices 2\nhalfedge 2\n").0, 3);
        assert_eq!(err_line("vertices 2\n").0, 1);
        assert_eq!(err_line("signed\nedge 1 2 +\n").0, 2);
        assert_eq!(err_line("signed\nvertices 2\nedge 1 2\n").0, 3);
        assert_eq!(err_line("signed\nvertices x\n").0, 2);
        assert_eq!(err_line("signed\nvertices 2\nloop 0 +\n").0, 3);
        assert_eq!(err_line("# nothing\n").0, 1);
        assert_eq!(err_line("signed\n").0, 1);
    }

    fn arb_document() -> impl Strategy<Value = GraphDocument> {
        (any::<bool>(), 2usize..6).prop_flat_map(|(signed, n)| {
            let mode = if signed { Mode::Signed } else { Mode::Unsigned };
            let sign = if signed { prop_oneof![Just(Sign::Pos), Just(Sign::Neg)].boxed() } else { Just(Sign::Pos).boxed() };
            let v = 1..=n;
            let link = (v.clone(), v.clone(), sign.clone())
                .prop_filter("distinct ends", |(a, b, _)| a != b)
                .prop_map(|(a, b, s)| Decl::Edge(a, b, s));
            let lp = (v.clone(), sign).prop_map(|(a, s)| Decl::Loop(a, s));
            let decl = if signed {
                prop_oneof![link, lp, v.prop_map(Decl::Halfedge)].boxed()
            } else {
                prop_oneof![link, lp].boxed()
            };
            prop::collection::vec(decl, 0..8).prop_map(move |ds| GraphDocument {
                mode,
                vertices: n,
                edges: ds.into_iter().map(|decl| EdgeDecl { decl, line: 0 }).collect(),
            })
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(d in arb_document()) {
            let text = d.to_string();
            let back = GraphDocument::parse(&text).unwrap();
            prop_assert_eq!(&back, &d);
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(back.to_graph().canonical_key(), d.to_graph().canonical_key());
        }
    }
}
