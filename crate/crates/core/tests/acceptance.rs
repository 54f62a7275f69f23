//! Acceptance suite. Every criterion prints one `PASS`/`FAIL` line; the test
//! fails if any criterion does.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see timings.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use ::folding::cli::{run, EXIT_OK};
use ::folding::families::connected_classes_up_to;
use ::folding::io::report::Report;
use ::folding::io::{dimacs, graph6};
use ::folding::search::{folding_number_with, max_complete_folding_with};
use ::folding::*;
use common::{random_connected, random_connected_bipartite, rng};
use rand::Rng;

/// Wall-clock budget for the n <= 6 sweep.
const SWEEP_6_BUDGET: Duration = Duration::from_secs(60);
/// Wall-clock budget for the n <= 7 stretch sweep.
const SWEEP_7_BUDGET: Duration = Duration::from_secs(15 * 60);
const CLASSES_UP_TO_6: usize = 143;
const CLASSES_UP_TO_7: usize = 996;
const BIPARTITE_SAMPLES: usize = 500;
const BIPARTITE_MAX_ORDER: usize = 40;
const MONOTONE_RUNS: usize = 1000;
const MONOTONE_MAX_ORDER: usize = 8;
const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["folding"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(max_n: usize, classes: usize, budget: Duration) -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("verify.json");
    let max = max_n.to_string();
    let start = Instant::now();
    let (code, _, err) = cli(&["verify", "--max-n", &max, "--out", path.to_str().unwrap()]);
    let elapsed = start.elapsed();
    ensure(code == EXIT_OK, || format!("exit {code}: {err}"))?;
    let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    let report = Report::from_json(&text).map_err(|e| e.to_string())?;
    ensure(report.rows.len() == classes, || {
        format!("{} rows, expected {classes}", report.rows.len())
    })?;
    let unequal = report
        .rows
        .iter()
        .filter(|r| r.equal != Some(true) || r.f != r.chi)
        .count();
    ensure(unequal == 0, || format!("{unequal} rows with f != chi"))?;
    ensure(elapsed <= budget, || format!("took {elapsed:?}, budget {budget:?}"))?;
    Ok(format!("{classes} classes, f = chi for all, {elapsed:.2?}"))
}

fn theorem_sweep() -> Outcome {
    let six = sweep(6, CLASSES_UP_TO_6, SWEEP_6_BUDGET)?;
    let seven = sweep(7, CLASSES_UP_TO_7, SWEEP_7_BUDGET)?;
    Ok(format!("n <= 6: {six}; n <= 7: {seven}"))
}

fn solver_independence() -> Outcome {
    let source = include_str!("../src/search/exact.rs");
    for banned in ["chromatic_number", "dsatur", "optimal_colouring", "greedy_colouring"] {
        ensure(!source.contains(banned), || {
            format!("folding search source mentions {banned}")
        })?;
    }
    ensure(source.contains("clique_number"), || {
        "folding search does not use the clique bound".into()
    })?;
    let bare = SearchOptions {
        memoize: false,
        prune: false,
    };
    let graphs = connected_classes_up_to(6).map_err(|e| e.to_string())?;
    for g in &graphs {
        let pairs = [
            (folding_number(g), folding_number_with(g, bare)),
            (max_complete_folding(g), max_complete_folding_with(g, bare)),
        ];
        for (fast, slow) in pairs {
            let (fast, slow) = (fast.map_err(|e| e.to_string())?, slow.map_err(|e| e.to_string())?);
            ensure(fast.value == slow.value, || {
                format!("{:?}: {} vs {}", g.edges(), fast.value, slow.value)
            })?;
        }
    }
    Ok(format!(
        "{} graphs, identical values without memo and pruning",
        graphs.len()
    ))
}

fn policies(seed: u64) -> [Policy; 3] {
    [
        Policy::MaxCommonNeighbours,
        Policy::LexFirst,
        Policy::Random { seed },
    ]
}

fn bipartite_claim() -> Outcome {
    let mut rng = rng(SEED);
    let mut runs = 0;
    for k in 0..BIPARTITE_SAMPLES {
        let n = rng.random_range(2..=BIPARTITE_MAX_ORDER);
        let p = rng.random_range(0.05..0.5);
        let g = random_connected_bipartite(&mut rng, n, p);
        ensure(g.classify().bipartite, || format!("sample {k} is not bipartite"))?;
        for policy in policies(k as u64) {
            let run = run_policy(&g, policy).map_err(|e| e.to_string())?;
            let fin = run.final_graph();
            ensure(fin.order() == 2 && fin.is_complete(), || {
                format!("sample {k}, {}: ended at order {}", policy.name(), fin.order())
            })?;
            let c = extract_colouring(&run).map_err(|e| e.to_string())?;
            ensure(c.num_colours() == 2 && verify_proper(&g, &c) == Ok(true), || {
                format!("sample {k}, {}: bad colouring", policy.name())
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs ended at K2 with a proper 2-colouring"))
}

fn wheels_and_fans() -> Outcome {
    let mut checked = 0;
    for n in 3..=12 {
        let mut cases = vec![(FamilySpec::Fan(n), 3)];
        if n >= 4 {
            let rim = n - 1;
            cases.push((FamilySpec::Wheel(n), if rim % 2 == 1 { 4 } else { 3 }));
        }
        for (spec, expected) in cases {
            let g = generate(&spec).map_err(|e| e.to_string())?;
            let f = folding_number(&g).map_err(|e| e.to_string())?;
            let chi = chromatic_number(&g).chi;
            let run = f.certificate.as_folding().ok_or("missing certificate")?;
            ensure(f.value == expected && chi == expected, || {
                format!("{spec}: f = {}, chi = {chi}, expected {expected}", f.value)
            })?;
            ensure(run.verify_replay() == Ok(true), || format!("{spec}: bad certificate"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} wheels and fans, f = chi = expected"))
}

fn wheel_max_folding() -> Outcome {
    let mut values = Vec::new();
    for n in 6..=14usize {
        let g = generate(&FamilySpec::Wheel(n)).map_err(|e| e.to_string())?;
        let r = max_complete_folding(&g).map_err(|e| e.to_string())?;
        let bound = (n / 2).isqrt();
        ensure(r.value >= bound, || format!("wheel({n}): {} < {bound}", r.value))?;
        let run = r.certificate.as_folding().ok_or("missing certificate")?;
        let replayed = FoldingRun::replay(
            run.initial(),
            run.steps().iter().map(|s| (s.first, s.second)),
        )
        .map_err(|e| e.to_string())?;
        ensure(
            replayed.final_graph().is_complete() && replayed.final_graph().order() == r.value,
            || format!("wheel({n}): certificate does not replay"),
        )?;
        values.push(format!("{n}:{}", r.value));
    }
    Ok(format!("max folding by order {}", values.join(" ")))
}

fn proof_guided() -> Outcome {
    let graphs = connected_classes_up_to(6).map_err(|e| e.to_string())?;
    for g in &graphs {
        let chi = chromatic_number(g).chi;
        let run = proof_guided_fold(g, &optimal_colouring_with_mono_pair)
            .map_err(|e| format!("{:?}: {e}", g.edges()))?;
        ensure(run.final_graph().order() == chi, || {
            format!("{:?}: final order {} != chi {chi}", g.edges(), run.final_graph().order())
        })?;
    }
    Ok(format!("{} graphs folded to K_chi", graphs.len()))
}

fn hadwiger_bound() -> Outcome {
    let graphs = connected_classes_up_to(6).map_err(|e| e.to_string())?;
    let mut strict = 0;
    for g in &graphs {
        let f = folding_number(g).map_err(|e| e.to_string())?.value;
        let h = hadwiger_number(g).map_err(|e| e.to_string())?;
        let model = h.certificate.as_minor().ok_or("missing minor model")?;
        ensure(model.is_valid_for(g), || format!("{:?}: invalid minor", g.edges()))?;
        ensure(f <= h.value, || format!("{:?}: f = {f} > h = {}", g.edges(), h.value))?;
        if f < h.value {
            strict += 1;
        }
    }
    Ok(format!("{} graphs, {strict} with f strictly below", graphs.len()))
}

fn monotonicity() -> Outcome {
    let mut rng = rng(SEED ^ 0x5eed);
    let mut steps = 0;
    for k in 0..MONOTONE_RUNS {
        let n = rng.random_range(2..=MONOTONE_MAX_ORDER);
        let p = rng.random_range(0.1..0.7);
        let g = random_connected(&mut rng, n, p);
        let policy = policies(k as u64)[k % 3];
        let run = run_policy(&g, policy).map_err(|e| e.to_string())?;
        let chis: Vec<usize> = run
            .prefix_graphs()
            .iter()
            .map(|h| chromatic_number(h).chi)
            .collect();
        ensure(chis.windows(2).all(|w| w[0] <= w[1]), || {
            format!("run {k}: chi sequence {chis:?}")
        })?;
        let c = extract_colouring(&run).map_err(|e| e.to_string())?;
        ensure(
            verify_proper(&g, &c) == Ok(true) && c.num_colours() == run.final_graph().order(),
            || format!("run {k}: extracted colouring is wrong"),
        )?;
        steps += run.steps().len();
    }
    Ok(format!("{MONOTONE_RUNS} runs, {steps} folds, chi never decreased"))
}

fn round_trips() -> Outcome {
    let graphs = connected_classes_up_to(6).map_err(|e| e.to_string())?;
    for g in &graphs {
        let text = graph6::encode(g).map_err(|e| e.to_string())?;
        ensure(graph6::decode(&text).as_ref() == Ok(g), || format!("graph6 {text}"))?;
        let col = dimacs::write_dimacs(g);
        ensure(dimacs::parse_dimacs(&col).as_ref() == Ok(g), || format!("dimacs {col}"))?;
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..3 {
        let verify = dir.path().join(format!("verify{i}.csv"));
        let (code, _, err) = cli(&[
            "verify", "--max-n", "6", "--format", "csv", "--jobs", "4", "--out",
            verify.to_str().unwrap(),
        ]);
        ensure(code == EXIT_OK, || err.clone())?;
        let bench = dir.path().join(format!("bench{i}.csv"));
        let (code, _, err) = cli(&[
            "bench", "--family", "gnp", "--range", "5..12", "--seed", "7", "--format", "csv",
            "--out", bench.to_str().unwrap(),
        ]);
        ensure(code == EXIT_OK, || err.clone())?;
        outputs.push((
            std::fs::read(&verify).map_err(|e| e.to_string())?,
            std::fs::read(&bench).map_err(|e| e.to_string())?,
        ));
    }
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
        "CSV differs between identical runs".into()
    })?;
    Ok(format!(
        "{} graphs round-trip; verify and bench CSV byte-identical over 3 runs",
        graphs.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 theorem sweep", theorem_sweep),
        ("2 solver independence", solver_independence),
        ("3 bipartite graphs fold to K2", bipartite_claim),
        ("4 wheels and fans", wheels_and_fans),
        ("5 wheel max folding >= floor(sqrt(n/2))", wheel_max_folding),
        ("6 proof-guided schedule", proof_guided),
        ("7 f <= hadwiger", hadwiger_bound),
        ("8 chi monotone along foldings", monotonicity),
        ("9 format and report round trips", round_trips),
    ];
    // Written straight to stdout so the lines survive libtest's capture.
    let mut stdout = std::io::stdout();
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let line = match check() {
            Ok(detail) => format!("PASS  {name}: {detail}\n"),
            Err(why) => {
                failed.push(name);
                format!("FAIL  {name}: {why}\n")
            }
        };
        stdout.write_all(line.as_bytes()).unwrap();
        stdout.flush().unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
