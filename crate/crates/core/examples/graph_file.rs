//! The plain-text graph format used by the command line tool.
//!
//!     cargo run --example graph_file

use sgchrom::cli::GraphDocument;
use sgchrom::dc::DcEngine;

const TEXT: &str = "\
# handcuff: two digons joined at vertex 2
signed
vertices 3
edge 1 2 +
edge 1 2 -
edge 2 3 +
edge 2 3 -
";

fn main() {
    let doc: GraphDocument = TEXT.parse().unwrap();
    print!("{doc}");
    let g = doc.to_graph();
    println!("=> {}", DcEngine::new().signed(&g).poly);

    for bad in ["signed\nvertices 2\nedge 1 1 +\n", "unsigned\nvertices 1\nhalfedge 1\n"] {
        println!("error: {}", GraphDocument::parse(bad).unwrap_err());
    }
}
