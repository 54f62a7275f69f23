//! Folding number against the Hadwiger number (largest complete minor).
//!
//! ```text
//! cargo run --release --example hadwiger
//! ```

use folding::families::mycielskian;
use folding::{folding_number, generate, hadwiger_number, FamilySpec};

fn main() -> folding::Result<()> {
    let mut graphs = vec![];
    for spec in [
        FamilySpec::Cycle(7),
        FamilySpec::CompleteBipartite(3, 3),
        FamilySpec::CompleteBipartite(2, 5),
        FamilySpec::Wheel(8),
        FamilySpec::Petersen,
        FamilySpec::Gnp { n: 11, p: 0.3, seed: 3 },
    ] {
        graphs.push((spec.to_string(), generate(&spec)?));
    }
    graphs.push(("grotzsch".into(), mycielskian(&generate(&FamilySpec::Cycle(5))?)));

    for (name, g) in &graphs {
        let f = folding_number(g)?.value;
        let h = hadwiger_number(g)?;
        let model = h.certificate.as_minor().expect("minor model");
        assert!(model.is_valid_for(g));
        println!("{name}: f = {f}, hadwiger = {}", h.value);
        for block in model.blocks() {
            let ids: Vec<String> = block.iter().map(|v| v.to_string()).collect();
            println!("    {{{}}}", ids.join(","));
        }
    }
    Ok(())
}
