//! Associated primes from antichains, next to the minimal vertex covers.

use vwc::graph::minimal_vertex_covers;
use vwc::reduction::{antichain_regularity, associated_primes};
use vwc::{classify, Graph};

fn main() -> vwc::Result<()> {
    let g = Graph::from_edges(
        &["x1", "x2", "x3", "y1", "y2", "y3"],
        &[("x1", "x2"), ("x1", "x3"), ("x2", "x3"), ("x1", "y1"), ("x2", "y2"), ("x3", "y3")],
    )?;
    let lab = classify(&g).labeling.expect("whiskered graphs are unmixed");
    for p in associated_primes(&g, &lab)? {
        println!("prime {:?}", g.set_labels(p.vertex_cover(&lab)));
    }
    for c in minimal_vertex_covers(&g) {
        println!("cover {:?}", g.set_labels(c));
    }
    let ar = antichain_regularity(&g, &lab)?;
    println!("antichain maximum {} (witness {:?})", ar.value, ar.witness);
    Ok(())
}
