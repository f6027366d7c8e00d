//! Semidirected graph, strong components and the acyclic reduction of a
//! graph whose pairs form a directed 2-cycle.

use vwc::io::{write_edge_list, write_semidigraph};
use vwc::reduction::{acyclic_reduction, build_semidigraph, is_transitively_closed};
use vwc::{classify, Graph, VwcLabeling};

fn main() -> vwc::Result<()> {
    // C4 glued to a third pair: x1 y2 and x2 y1 make 1 and 2 mutually reachable.
    let g = Graph::from_edges(
        &["x1", "x2", "x3", "y1", "y2", "y3"],
        &[("x1", "y1"), ("x2", "y2"), ("x3", "y3"), ("x1", "y2"), ("x2", "y1"), ("x1", "y3"), ("x2", "y3")],
    )?;
    let lab = VwcLabeling::from_labels(&g, &[("x1", "y1"), ("x2", "y2"), ("x3", "y3")])?;
    println!("status {:?}", classify(&g).status);

    let d = build_semidigraph(&g, &lab)?;
    print!("semidirected graph\n{}", write_semidigraph(&d));
    println!("transitively closed: {}", is_transitively_closed(&d).closed);

    let red = acyclic_reduction(&g, &lab)?;
    println!("components {:?}", red.partition.components);
    print!("reduction\n{}", write_edge_list(&red.ghat));
    print!("its semidirected graph\n{}", write_semidigraph(&red.dhat));
    println!("reduction status {:?}", classify(&red.ghat).status);
    Ok(())
}
