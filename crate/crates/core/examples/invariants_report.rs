//! The JSON invariants report for a graph read from standard input, or for
//! the whiskered triangle when nothing is piped in.
//!
//! ```text
//! echo "x1 y1" | cargo run --example invariants_report
//! ```

use std::io::{IsTerminal, Read};

use vwc::homology::{Field, DEFAULT_CAP};
use vwc::io::parse_edge_list;
use vwc::report::{build_report, ReportOptions};

fn main() -> vwc::Result<()> {
    let mut text = String::new();
    if !std::io::stdin().is_terminal() {
        std::io::stdin().read_to_string(&mut text).expect("readable stdin");
    }
    if text.trim().is_empty() {
        text = "x1 x2\nx1 x3\nx2 x3\nx1 y1\nx2 y2\nx3 y3\n".into();
    }
    let g = parse_edge_list(&text)?;
    let report = build_report(&g, &ReportOptions { fields: Field::BOTH.to_vec(), cap: DEFAULT_CAP })?;
    print!("{}", report.to_json());
    Ok(())
}
