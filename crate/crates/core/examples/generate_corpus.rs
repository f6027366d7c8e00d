//! Every generator, writing edge lists.

use vwc::generators::{bipartite_from_poset, enumerate_vwc, random_vwc, whisker, GeneratorConfig};
use vwc::io::write_edge_list;
use vwc::{classify, Graph};

fn main() -> vwc::Result<()> {
    for (k, g) in enumerate_vwc(2)?.enumerate() {
        print!("# enumerated {k}: {:?}\n{}", classify(&g).status, write_edge_list(&g));
    }
    let g = random_vwc(&GeneratorConfig::random(4, 7, 0.3))?;
    print!("# random n=4 seed=7\n{}", write_edge_list(&g));

    let tri = Graph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])?;
    print!("# whiskered triangle\n{}", write_edge_list(&whisker(&tri)?));

    print!("# poset 1<2\n{}", write_edge_list(&bipartite_from_poset(2, &[(1, 2)])?));
    Ok(())
}
