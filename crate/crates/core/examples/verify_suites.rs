//! Runs every property suite over a small seeded corpus.

use vwc::generators::{enumerate_vwc, random_graph_batch, random_vwc_batch};
use vwc::verify::{run_suite, CheckOptions, Suite};
use vwc::Graph;

fn main() -> vwc::Result<()> {
    let mut vwc: Vec<Graph> = enumerate_vwc(2)?.collect();
    vwc.extend(random_vwc_batch(4, 100, 7)?);
    let any = random_graph_batch(7, 100, 7)?;
    let opts = CheckOptions::default();
    for suite in Suite::ALL {
        let corpus = if suite.any_graph() { &any } else { &vwc };
        let s = run_suite(suite, corpus, &opts);
        println!(
            "{suite:<10} {} checked, {} passed, {} skipped, {} failed",
            s.checked,
            s.passed,
            s.skipped,
            s.failures.len()
        );
    }
    Ok(())
}
