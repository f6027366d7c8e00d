//! `a(G)`, the largest pairwise 3-disjoint edge set, on a path and a cycle.

use vwc::graph::{max_3disjoint, three_disjoint, EdgePair};
use vwc::Graph;

fn main() -> vwc::Result<()> {
    let p6 = Graph::from_edges(
        &["1", "2", "3", "4", "5", "6"],
        &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6")],
    )?;
    let e = (0, 1);
    let f = (4, 5);
    println!("12 and 56 3-disjoint in P6: {}", three_disjoint(&p6, &EdgePair::new(e, f)?)?);
    println!("12 and 34 3-disjoint in P6: {}", three_disjoint(&p6, &EdgePair::new(e, (2, 3))?)?);

    for g in [p6, Graph::from_edges(&["a", "b", "c", "d", "e", "f"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "a")])?] {
        let w = max_3disjoint(&g);
        let edges: Vec<String> = w.edges.iter().map(|&(u, v)| format!("{}{}", g.label(u), g.label(v))).collect();
        println!("a(G) = {} via {}", w.size, edges.join(", "));
    }
    Ok(())
}
