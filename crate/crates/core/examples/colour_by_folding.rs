//! Colour graphs by folding them down to a complete graph, one policy at a time.
//!
//! ```text
//! cargo run --example colour_by_folding
//! ```

use folding::families::mycielskian;
use folding::{
    chromatic_number, extract_colouring, generate, run_policy, verify_proper, FamilySpec, Policy,
};

fn main() -> folding::Result<()> {
    let graphs = [
        ("petersen", generate(&FamilySpec::Petersen)?),
        ("grotzsch", mycielskian(&generate(&FamilySpec::Cycle(5))?)),
        ("c7", generate(&FamilySpec::Cycle(7))?),
        ("k3,4", generate(&FamilySpec::CompleteBipartite(3, 4))?),
        ("gnp(14, 0.3)", generate(&FamilySpec::Gnp { n: 14, p: 0.3, seed: 5 })?),
    ];
    let policies = [
        Policy::MaxCommonNeighbours,
        Policy::LexFirst,
        Policy::Random { seed: 1 },
        Policy::Random { seed: 2 },
    ];

    println!("{:<14} {:>3}  colours per policy", "graph", "chi");
    for (name, g) in &graphs {
        let chi = chromatic_number(g).chi;
        let mut cells = Vec::new();
        for policy in policies {
            let run = run_policy(g, policy)?;
            let colouring = extract_colouring(&run)?;
            assert_eq!(verify_proper(g, &colouring), Ok(true));
            let label = match policy.seed() {
                Some(s) => format!("{}#{s}", policy.name()),
                None => policy.name().to_string(),
            };
            cells.push(format!("{label}={}", colouring.num_colours()));
        }
        println!("{name:<14} {chi:>3}  {}", cells.join("  "));
    }

    // The steps of one run, and the colour classes they produce.
    let c6 = generate(&FamilySpec::Cycle(6))?;
    let run = run_policy(&c6, Policy::MaxCommonNeighbours)?;
    println!("\nc6 with max-common:");
    for step in run.steps() {
        println!("  {step}");
    }
    for (colour, class) in extract_colouring(&run)?.classes().iter().enumerate() {
        let ids: Vec<String> = class.iter().map(|v| v.to_string()).collect();
        println!("  colour {colour}: {}", ids.join(" "));
    }
    Ok(())
}
