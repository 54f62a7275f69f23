//! Sweep every connected graph up to a given order (default 6) and tabulate
//! the folding number, the chromatic number, and the largest complete folding.
//!
//! ```text
//! cargo run --release --example enumeration_sweep -- 7
//! ```

use std::collections::BTreeMap;

use folding::families::connected_classes;
use folding::{max_complete_folding, verify_theorem};

fn main() -> folding::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order must be an integer"))
        .unwrap_or(6);

    for n in 1..=max_n {
        let classes = connected_classes(n)?;
        let mut by_chi: BTreeMap<usize, usize> = BTreeMap::new();
        let mut spread = 0;
        let mut mismatches = 0;
        for g in &classes {
            let report = verify_theorem(g)?;
            if !report.equal {
                mismatches += 1;
            }
            *by_chi.entry(report.chi).or_default() += 1;
            if max_complete_folding(g)?.value > report.f {
                spread += 1;
            }
        }
        let hist: Vec<String> = by_chi.iter().map(|(k, c)| format!("chi={k}:{c}")).collect();
        println!(
            "n = {n}: {:>5} classes, {mismatches} with f != chi, {spread:>5} with several complete foldings, {}",
            classes.len(),
            hist.join(" ")
        );
    }
    Ok(())
}
