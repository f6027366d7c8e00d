//! Vertex decomposability with its shedding certificate, and a shelling order.

use vwc::complexes::{independence_complex, is_pure_shellable, is_vertex_decomposable, Shelling};
use vwc::io::write_facets;
use vwc::Graph;

fn main() -> vwc::Result<()> {
    let p4 = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])?;
    let c4 = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])?;
    for (name, g) in [("P4", p4), ("C4", c4)] {
        let c = independence_complex(&g);
        print!("{name} facets\n{}", write_facets(&c));
        let vd = is_vertex_decomposable(&c);
        println!("vertex decomposable: {}", vd.decomposable);
        println!("{}", serde_json::to_string(&vd.certificate).expect("serializable"));
        match is_pure_shellable(&c) {
            Shelling::Shellable { order } => {
                let order: Vec<_> = order.iter().map(|&f| c.face_labels(f).join("")).collect();
                println!("shelling {}", order.join(" < "));
            }
            other => println!("{other:?}"),
        }
    }
    Ok(())
}
