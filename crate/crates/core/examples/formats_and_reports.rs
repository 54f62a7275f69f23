//! Read and write graph6 and DIMACS, then build a small report and render it
//! as JSON and CSV.
//!
//! ```text
//! cargo run --example formats_and_reports
//! ```

use folding::io::report::{PolicyResult, Report, ReportFormat, ReportRow};
use folding::io::{dimacs, graph6, read_graph};
use folding::{canonical_key, chromatic_number, folding_number, run_policy, Policy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // House graph: a square with a roof.
    let house = dimacs::parse_dimacs(
        "c house\np edge 5 6\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 1 5\ne 2 5\n",
    )?;
    let g6 = graph6::encode(&house)?;
    println!("graph6: {g6}");
    assert_eq!(graph6::decode(&g6)?, house);
    print!("dimacs:\n{}", dimacs::write_dimacs(&house));

    let dir = std::env::temp_dir().join(format!("folding-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("house.g6");
    std::fs::write(&path, format!(">>graph6<<{g6}\n"))?;
    let g = read_graph(&path)?;

    let policies = [Policy::MaxCommonNeighbours, Policy::LexFirst, Policy::Random { seed: 4 }];
    let policy_results = policies
        .iter()
        .map(|&p| {
            let run = run_policy(&g, p)?;
            let order = run.final_graph().order();
            Ok(PolicyResult {
                policy: p.name().into(),
                seed: p.seed(),
                final_order: order,
                colours_used: order,
            })
        })
        .collect::<folding::Result<Vec<_>>>()?;
    let chi = chromatic_number(&g).chi;
    let f = folding_number(&g)?.value;

    let mut report = Report::new("formats_and_reports", Some(4));
    report.rows.push(ReportRow {
        graph_id: canonical_key(&g).to_hex(),
        source: "house".into(),
        n: g.order(),
        m: g.edge_count(),
        chi: Some(chi),
        f: Some(f),
        equal: Some(chi == f),
        policy_results,
        runtime_ms: 0,
    });
    print!("\ncsv:\n{}", report.render(ReportFormat::Csv));
    println!("\njson:\n{}", report.render(ReportFormat::Json));
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
