//! Folding numbers of wheels and fans, and the largest complete graph a wheel
//! folds onto.
//!
//! ```text
//! cargo run --release --example wheels_and_fans
//! ```

use folding::{chromatic_number, folding_number, generate, max_complete_folding, FamilySpec};

fn main() -> folding::Result<()> {
    println!(
        "{:>3}  {:>8} {:>8} {:>9}  {:>6} {:>10}",
        "n", "f(wheel)", "max", "sqrt(n/2)", "f(fan)", "chi(wheel)"
    );
    for n in 4..=14usize {
        let wheel = generate(&FamilySpec::Wheel(n))?;
        let fan = generate(&FamilySpec::Fan(n))?;
        let f_wheel = folding_number(&wheel)?.value;
        let max = max_complete_folding(&wheel)?;
        let f_fan = folding_number(&fan)?.value;
        assert_eq!(f_wheel, chromatic_number(&wheel).chi);
        assert_eq!(f_fan, chromatic_number(&fan).chi);
        println!(
            "{n:>3}  {f_wheel:>8} {:>8} {:>9.2}  {f_fan:>6} {:>10}",
            max.value,
            (n as f64 / 2.0).sqrt(),
            chromatic_number(&wheel).chi,
        );
    }

    let w = generate(&FamilySpec::Wheel(12))?;
    let max = max_complete_folding(&w)?;
    let run = max.certificate.as_folding().expect("folding certificate");
    println!("\nwheel(12) folds onto K{} via:", max.value);
    for step in run.steps() {
        println!("  {step}");
    }
    println!("  ({} states, {} memo hits)", max.states_visited, max.memo_hits);
    Ok(())
}
