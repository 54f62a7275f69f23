//! Fold along monochromatic distance-2 pairs of an optimal colouring. The
//! chromatic number stays fixed at every step, so the run ends at K_chi.
//!
//! ```text
//! cargo run --example proof_guided
//! ```

use folding::families::mycielskian;
use folding::{
    chromatic_number, generate, optimal_colouring_with_mono_pair, proof_guided_fold,
    run_policy, FamilySpec, Multigraph, Policy,
};

fn trace(name: &str, g: &Multigraph) -> folding::Result<()> {
    let run = proof_guided_fold(g, &optimal_colouring_with_mono_pair)?;
    let chis: Vec<usize> = run.prefix_graphs().iter().map(|h| chromatic_number(h).chi).collect();
    let greedy = run_policy(g, Policy::LexFirst)?.final_graph().order();
    println!(
        "{name}: {} steps, final order {}, chi along the run {chis:?}, lex policy reaches {greedy}",
        run.steps().len(),
        run.final_graph().order(),
    );
    Ok(())
}

fn main() -> folding::Result<()> {
    let wheel = generate(&FamilySpec::Wheel(6))?;
    let (colouring, (u, v)) = optimal_colouring_with_mono_pair(&wheel)?;
    let pairs: Vec<String> = colouring.iter().map(|(v, c)| format!("{v}:{c}")).collect();
    println!("wheel(6) optimal colouring {}", pairs.join(" "));
    println!("first monochromatic pair at distance 2: {u} {v}\n");

    trace("wheel(6)", &wheel)?;
    trace("c9", &generate(&FamilySpec::Cycle(9))?)?;
    trace("petersen", &generate(&FamilySpec::Petersen)?)?;
    trace("grotzsch", &mycielskian(&generate(&FamilySpec::Cycle(5))?))?;
    trace("gnp(16, 0.25)", &generate(&FamilySpec::Gnp { n: 16, p: 0.25, seed: 9 })?)?;
    Ok(())
}
