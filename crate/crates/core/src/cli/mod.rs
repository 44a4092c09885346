//! The `sgchrom` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 when the input
//! cannot be read or parsed or the request does not apply to the graph.

mod document;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use document::{Decl, EdgeDecl, GraphDocument, ParseError};

use crate::count::{antibalance_poly, independence_poly};
use crate::dc::{poly_interpolated, poly_subset, Convention, DcEngine, Memo, PolyResult};
use crate::graph::{EdgeKind, Mode, SignedGraph};
use crate::orient::{acyclic_orientations, check_reciprocity_with, enumerate_orientations, Orientation, OuterWeight};
use crate::verify::{oracle_count, verify_graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sgchrom", version, about = "Bivariate chromatic polynomials of signed graphs")]
struct Args {
    /// Disable the deletion–contraction memo
    #[arg(long, global = true)]
    no_memo: bool,
    /// Bound the number of memo entries (overrides SGCHROM_MEMO_CAP)
    #[arg(long, global = true, value_name = "N")]
    memo_cap: Option<usize>,
    /// Worker threads for parallel enumeration
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the bivariate chromatic polynomial
    Poly {
        file: PathBuf,
        /// Use the zero-free convention (λ = 2k, μ = 2l)
        #[arg(long)]
        zero_free: bool,
        #[arg(long, value_enum, default_value_t = Method::Dc)]
        method: Method,
        /// Print the terms as JSON
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the polynomial at (k, l)
    Eval {
        file: PathBuf,
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'l')]
        l: u32,
        /// Use the zero-free convention (λ = 2k, μ = 2l)
        #[arg(long)]
        zero_free: bool,
        /// Also count colorings by brute force
        #[arg(long)]
        oracle: bool,
    },
    /// Print the independence polynomial
    Independence { file: PathBuf },
    /// Print the antibalance polynomial
    Antibalance { file: PathBuf },
    /// List orientations
    Orientations {
        file: PathBuf,
        /// Only list the acyclic ones
        #[arg(long)]
        acyclic: bool,
    },
    /// Check the bivariate reciprocity law at (k, l)
    Reciprocity {
        file: PathBuf,
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'l')]
        l: u32,
        /// Weight of colorings that use a color above k
        #[arg(long, value_enum, default_value_t = Weights::Unit)]
        weights: Weights,
    },
    /// Run the identity suite
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long, default_value_t = 3)]
        lmax: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Dc,
    Subset,
    Interp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Weights {
    Unit,
    Induced,
}

#[derive(Serialize)]
struct JsonTerm {
    i: u32,
    j: u32,
    coeff: String,
}

#[derive(Serialize)]
struct JsonPoly {
    convention: Convention,
    terms: Vec<JsonTerm>,
}

/// Polynomial as the `--json` object: terms in display order, coefficients
/// as decimal strings.
pub fn poly_json(p: &PolyResult) -> String {
    let terms = p
        .poly
        .display_terms()
        .into_iter()
        .map(|((i, j), c)| JsonTerm { i, j, coeff: c.to_string() })
        .collect();
    serde_json::to_string(&JsonPoly { convention: p.convention, terms }).expect("plain data serializes")
}

struct Failure {
    code: i32,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

fn load(path: &PathBuf) -> Result<GraphDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    GraphDocument::parse(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn convention(mode: Mode, zero_free: bool) -> Convention {
    match (mode, zero_free) {
        (_, true) => Convention::ZeroFree,
        (Mode::Signed, false) => Convention::Signed,
        (Mode::Unsigned, false) => Convention::Unsigned,
    }
}

fn engine(args: &Args) -> DcEngine {
    if args.no_memo {
        DcEngine::without_memo()
    } else if let Some(cap) = args.memo_cap {
        DcEngine::with_memo(Memo::new(Some(cap)))
    } else {
        DcEngine::with_memo(Memo::from_env())
    }
}

fn describe_edge(kind: &EdgeKind) -> String {
    match *kind {
        EdgeKind::Link { a, b, sign } => format!("edge {} {} {}", a + 1, b + 1, sign.symbol()),
        EdgeKind::Loop { v, sign } => format!("loop {} {}", v + 1, sign.symbol()),
        EdgeKind::Halfedge { v } => format!("halfedge {}", v + 1),
        EdgeKind::Loose => "loose".into(),
    }
}

fn describe_orientation(g: &SignedGraph, eta: &Orientation) -> String {
    let sym = |s: i8| if s > 0 { '+' } else { '-' };
    g.edges()
        .iter()
        .zip(eta.ends())
        .map(|(e, s)| match e.kind {
            EdgeKind::Link { a, b, .. } => {
                format!("{}{} {}{}", a + 1, sym(s.first), b + 1, sym(s.second.unwrap_or(0)))
            }
            EdgeKind::Loop { v, .. } => format!("{}{} {}{}", v + 1, sym(s.first), v + 1, sym(s.second.unwrap_or(0))),
            EdgeKind::Halfedge { v } => format!("{}{}", v + 1, sym(s.first)),
            EdgeKind::Loose => String::new(),
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn execute(args: &Args, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure { code: EXIT_INPUT, message: e.to_string() };
    let dc = engine(args);
    match &args.command {
        Command::Poly { file, zero_free, method, json } => {
            let doc = load(file)?;
            let g = doc.to_graph();
            let conv = convention(doc.mode, *zero_free);
            let p = match method {
                Method::Dc => dc.compute(&g, conv),
                Method::Subset => poly_subset(&g, conv),
                Method::Interp => poly_interpolated(&g, conv),
            }
            .map_err(|e| input_error(e.to_string()))?;
            if *json {
                writeln!(out, "{}", poly_json(&p)).map_err(io)?;
            } else {
                writeln!(out, "{}", conv.header()).map_err(io)?;
                writeln!(out, "{}", p.poly).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Eval { file, k, l, zero_free, oracle } => {
            let doc = load(file)?;
            let g = doc.to_graph();
            let conv = convention(doc.mode, *zero_free);
            let p = dc.compute(&g, conv).map_err(|e| input_error(e.to_string()))?;
            let value = p.eval_kl(*k as i64, *l as i64);
            writeln!(out, "{}", conv.header()).map_err(io)?;
            writeln!(out, "{value}").map_err(io)?;
            if *oracle {
                let count = oracle_count(&g, conv, *k, *l).map_err(|e| input_error(e.to_string()))?;
                let agree = value == count.into();
                writeln!(out, "oracle: {count} ({})", if agree { "agree" } else { "DISAGREE" }).map_err(io)?;
                if !agree {
                    return Ok(EXIT_FAILED);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Independence { file } => {
            let g = load(file)?.to_graph();
            writeln!(out, "{}", independence_poly(&g).display_in("x")).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Antibalance { file } => {
            let g = load(file)?.to_graph();
            writeln!(out, "{}", antibalance_poly(&g).display_with("x", "y")).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Orientations { file, acyclic } => {
            let g = load(file)?.to_graph();
            let list = if *acyclic { acyclic_orientations(&g) } else { enumerate_orientations(&g) }
                .map_err(|e| input_error(e.to_string()))?;
            let edges: Vec<String> = g.edges().iter().map(|e| describe_edge(&e.kind)).collect();
            writeln!(out, "edges: {}", edges.join(" | ")).map_err(io)?;
            for eta in &list {
                writeln!(out, "{}", describe_orientation(&g, eta)).map_err(io)?;
            }
            let what = if *acyclic { "acyclic orientations" } else { "orientations" };
            writeln!(out, "{what}: {}", list.len()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Reciprocity { file, k, l, weights } => {
            let doc = load(file)?;
            let g = doc.to_graph();
            let weighting = match weights {
                Weights::Unit => OuterWeight::One,
                Weights::Induced => OuterWeight::Induced,
            };
            let v = check_reciprocity_with(&g, *k, *l, doc.mode, weighting).map_err(|e| input_error(e.to_string()))?;
            writeln!(out, "mode: {}", doc.mode).map_err(io)?;
            writeln!(out, "weights: {}", if *weights == Weights::Unit { "unit" } else { "induced" }).map_err(io)?;
            writeln!(out, "LHS: {}", v.lhs).map_err(io)?;
            writeln!(out, "RHS: {}", v.rhs).map_err(io)?;
            writeln!(out, "verdict: {}", if v.passed() { "PASS" } else { "FAIL" }).map_err(io)?;
            Ok(if v.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Verify { file, kmax, lmax } => {
            let g = load(file)?.to_graph();
            let report = verify_graph(&g, *kmax, *lmax, &dc).map_err(|e| input_error(e.to_string()))?;
            writeln!(out, "{report}").map_err(io)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

/// Runs the command line with explicit arguments (the first is the program
/// name) and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match args.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&args, &mut buf)),
            Err(e) => Err(input_error(e.to_string())),
        },
        None => execute(&args, &mut buf),
    };
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_INPUT;
    }
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(text: &str) -> tempfile_path::TempFile {
        tempfile_path::TempFile::new(text)
    }

    /// A file under the target directory removed on drop.
    mod tempfile_path {
        use std::path::PathBuf;
        use std::sync::atomic::{AtomicUsize, Ordering};

        static NEXT: AtomicUsize = AtomicUsize::new(0);

        pub struct TempFile(pub PathBuf);

        impl TempFile {
            pub fn new(text: &str) -> Self {
                let i = NEXT.fetch_add(1, Ordering::Relaxed);
                let p = std::env::temp_dir().join(format!("sgchrom-cli-{}-{i}.graph", std::process::id()));
                std::fs::write(&p, text).unwrap();
                TempFile(p)
            }
        }

        impl Drop for TempFile {
            fn drop(&mut self) {
                let _ = std::fs::remove_file(&self.0);
            }
        }
    }

    fn call(args: &[&str], file: &tempfile_path::TempFile) -> (i32, String, String) {
        let mut argv = vec!["sgchrom".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        argv.push(file.0.display().to_string());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spec_examples() {
        let single = fixture("signed\nvertices 1\n");
        let (code, out, _) = call(&["eval", "-k", "1", "-l", "1"], &single);
        assert_eq!((code, out.lines().last().unwrap()), (0, "5"));

        let k2 = fixture("unsigned\nvertices 2\nedge 1 2 +\n");
        let (code, out, _) = call(&["reciprocity", "-k", "1", "-l", "1"], &k2);
        assert_eq!(code, 0);
        assert!(out.ends_with("LHS: 5\nRHS: 5\nverdict: PASS\n"), "{out}");

        let lp = fixture("signed\nvertices 1\nloop 1 +\n");
        let (code, out, _) = call(&["poly"], &lp);
        assert_eq!((code, out.as_str()), (0, "convention: signed (λ = 2k+1, μ = 2l)\n1*μ^1\n"));
    }

    #[test]
    fn parse_errors_exit_2_with_line() {
        let bad = fixture("signed\nvertices 2\nedge 1 1 +\n");
        let (code, out, err) = call(&["poly"], &bad);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("line 3"), "{err}");
    }

    #[test]
    fn json_and_methods_agree() {
        let tri = fixture("signed\nvertices 3\nedge 1 2 -\nedge 2 3 -\nedge 1 3 +\n");
        let (_, a, _) = call(&["poly", "--json"], &tri);
        for extra in [["--method", "subset"], ["--method", "interp"]] {
            let (_, b, _) = call(&["poly", "--json", extra[0], extra[1]], &tri);
            assert_eq!(a, b);
        }
        let (_, c, _) = call(&["--no-memo", "poly", "--json"], &tri);
        assert_eq!(a, c);
        assert!(a.starts_with("{\"convention\":\"signed\",\"terms\":[{\"i\":3,\"j\":0,\"coeff\":\"1\"}"), "{a}");
    }

    #[test]
    fn oracle_flag_and_zero_free() {
        let h = fixture("signed\nvertices 1\nhalfedge 1\n");
        let (code, out, _) = call(&["eval", "-k", "2", "-l", "1", "--oracle"], &h);
        assert_eq!((code, out.lines().nth(1), out.lines().nth(2)), (0, Some("6"), Some("oracle: 6 (agree)")));
        let (_, out, _) = call(&["poly", "--zero-free"], &h);
        assert_eq!(out, "convention: zero-free (λ = 2k, μ = 2l)\n1*λ^1 + 1*μ^1\n");
    }

    #[test]
    fn orientations_listing() {
        let k2 = fixture("signed\nvertices 2\nedge 1 2 -\n");
        let (code, out, _) = call(&["orientations"], &k2);
        assert_eq!(code, 0);
        assert_eq!(out, "edges: edge 1 2 -\n1+ 2+\n1- 2-\norientations: 2\n");
        let h = fixture("signed\nvertices 1\nhalfedge 1\n");
        let (code, _, err) = call(&["orientations", "--acyclic"], &h);
        assert_eq!(code, 2);
        assert!(err.contains("link-only"), "{err}");
    }

    #[test]
    fn verify_exit_codes() {
        let k2 = fixture("unsigned\nvertices 2\nedge 1 2 +\n");
        let (code, out, _) = call(&["verify", "--kmax", "2", "--lmax", "2"], &k2);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("result: PASS (21 checks)\n"), "{out}");
        let h = fixture("signed\nvertices 1\nhalfedge 1\n");
        let (code, out, _) = call(&["verify"], &h);
        assert_eq!(code, 1, "{out}");
    }

    #[test]
    fn help_goes_to_stdout() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["sgchrom", "--help"], &mut out, &mut err), 0);
        assert!(String::from_utf8(out).unwrap().contains("verify"));
        assert_eq!(run(["sgchrom", "bogus"], &mut Vec::new(), &mut err), 2);
    }
}
