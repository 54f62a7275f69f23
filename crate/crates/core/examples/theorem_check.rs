//! Compare the folding number with the chromatic number on named graphs,
//! printing the folding that achieves the minimum.
//!
//! ```text
//! cargo run --example theorem_check
//! ```

use folding::families::mycielskian;
use folding::{generate, verify_theorem, FamilySpec};

fn main() -> folding::Result<()> {
    let specs = [
        FamilySpec::Cycle(5),
        FamilySpec::Cycle(8),
        FamilySpec::Wheel(6),
        FamilySpec::Petersen,
        FamilySpec::CompleteBipartite(3, 3),
        FamilySpec::Gnp { n: 12, p: 0.35, seed: 42 },
    ];
    let mut graphs: Vec<(String, _)> = specs
        .iter()
        .map(|s| generate(s).map(|g| (s.to_string(), g)))
        .collect::<Result<_, _>>()?;
    graphs.push(("grotzsch".into(), mycielskian(&generate(&FamilySpec::Cycle(5))?)));

    for (name, g) in &graphs {
        let report = verify_theorem(g)?;
        let mark = if report.equal { "ok" } else { "MISMATCH" };
        println!(
            "{name}: n = {}, m = {}, f = {}, chi = {}  [{mark}]",
            report.n, report.m, report.f, report.chi
        );
        if let Some(certs) = &report.certificates {
            for step in certs.folding.steps() {
                println!("    {step}");
            }
            let blocks: Vec<String> = certs
                .folding
                .provenance()
                .iter()
                .map(|b| {
                    let ids: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                    format!("{{{}}}", ids.join(","))
                })
                .collect();
            println!("    colour classes {}", blocks.join(" "));
        }
    }
    Ok(())
}
