//! Cover ideals, Alexander duality and the splitting identities.

use vwc::complexes::{cover_ideal, cover_ideal_splitting_check, SquarefreeMonomialIdeal};
use vwc::generators::bipartite_from_poset;
use vwc::classify;

fn main() -> vwc::Result<()> {
    // Chain 1 < 2 < 3.
    let g = bipartite_from_poset(3, &[(1, 2), (2, 3), (1, 3)])?;
    let i = SquarefreeMonomialIdeal::edge_ideal(&g);
    let j = cover_ideal(&g);
    println!("I(G)   {:?}", i.generator_labels());
    println!("I(G)^v {:?}", j.generator_labels());
    println!("dual of dual is I(G): {}", j.alexander_dual() == i);

    let lab = classify(&g).labeling.expect("poset graphs are Cohen-Macaulay");
    println!("splitting identities hold: {}", cover_ideal_splitting_check(&g, &lab)?);
    Ok(())
}
