//! Regularity three ways: Hochster's formula, `a(G)`, and the antichain
//! maximum. They agree on very well-covered graphs.

use vwc::generators::{random_vwc, GeneratorConfig};
use vwc::graph::max_3disjoint;
use vwc::homology::{betti_table_hochster, Field, DEFAULT_CAP};
use vwc::reduction::antichain_regularity;
use vwc::classify;

fn main() -> vwc::Result<()> {
    for seed in 0..5 {
        let g = random_vwc(&GeneratorConfig::random(4, seed, 0.3))?;
        let lab = classify(&g).labeling.expect("generated graphs are unmixed");
        let table = betti_table_hochster(&g, Field::Rationals, DEFAULT_CAP)?;
        let a = max_3disjoint(&g).size;
        let ar = antichain_regularity(&g, &lab)?;
        println!("seed {seed}: {} edges, reg {}, a {a}, antichain {}", g.edge_count(), table.regularity(), ar.value);
        if seed == 0 {
            print!("{}", table.to_text());
        }
    }
    Ok(())
}
