//! Reduced homology over GF(2) and Q, and Reisner's criterion.
//!
//! The six-vertex projective plane has torsion, so the two fields disagree.

use vwc::complexes::{independence_complex, SimplicialComplex};
use vwc::homology::{is_cohen_macaulay_reisner, reduced_homology_ranks, Field};
use vwc::Graph;

fn main() -> vwc::Result<()> {
    let hollow = SimplicialComplex::from_label_facets(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]])?;
    println!("hollow triangle: {:?}", reduced_homology_ranks(&hollow, Field::Gf2));

    let rp2 = SimplicialComplex::from_label_facets(
        &["1", "2", "3", "4", "5", "6"],
        &[
            &["1", "2", "3"], &["1", "3", "4"], &["1", "4", "5"], &["1", "5", "6"], &["1", "2", "6"],
            &["2", "3", "5"], &["3", "4", "6"], &["2", "4", "5"], &["2", "4", "6"], &["3", "5", "6"],
        ],
    )?;
    for f in Field::BOTH {
        println!("RP2 over {}: {:?}, CM {}", f.name(), reduced_homology_ranks(&rp2, f), is_cohen_macaulay_reisner(&rp2, f));
    }

    let c4 = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])?;
    let p4 = Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])?;
    for (name, g) in [("C4", c4), ("P4", p4)] {
        let c = independence_complex(&g);
        println!("{name}: ranks {:?}, CM {}", reduced_homology_ranks(&c, Field::Gf2), is_cohen_macaulay_reisner(&c, Field::Gf2));
    }
    Ok(())
}
