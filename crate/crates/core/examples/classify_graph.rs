//! Classify a few small graphs and print why each lands where it does.
//!
//! ```text
//! cargo run --example classify_graph
//! ```

use vwc::io::parse_edge_list;
use vwc::{classify, Graph};

fn main() -> vwc::Result<()> {
    let graphs = [
        ("C4", "a b\nb c\nc d\nd a\n"),
        ("P4", "a b\nb c\nc d\n"),
        ("C5", "a b\nb c\nc d\nd e\ne a\n"),
        ("whiskered triangle", "x1 x2\nx1 x3\nx2 x3\nx1 y1\nx2 y2\nx3 y3\n"),
        ("K2 plus isolated vertex", "a b\nc\n"),
    ];
    for (name, text) in graphs {
        let g: Graph = parse_edge_list(text)?;
        let c = classify(&g);
        println!("{name}: {:?} (height {})", c.status, c.height);
        if let Some(lab) = &c.labeling {
            println!("  labeling {:?}", lab.label_pairs(&g));
        }
        for v in &c.violations {
            println!("  {v:?}");
        }
    }
    Ok(())
}
