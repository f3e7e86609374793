// The randomized verification driver behind `smod verify`: pick a
// theorem, point it at corpus files, and get a deterministic JSON report
// of per-trial outcomes at sampled certified points.

use std::path::PathBuf;

use smod::cli::verify::{run_verification, REGISTRY};

fn corpus(rel: &str) -> PathBuf {
    PathBuf::from(format!("{}/corpus/{rel}", env!("CARGO_MANIFEST_DIR")))
}

fn main() -> smod::Result<()> {
    println!("registered theorems:");
    for task in REGISTRY {
        println!("  {}  {}", task.theorem, task.blurb);
    }

    let inputs = [corpus("complexes/koszul_u2.cx")];
    let report = run_verification("exactness_1_5", &inputs, 5, 0, 7, None)?;
    for trial in &report.trials {
        println!(
            "alpha = ({}): {} ({})",
            trial.alpha.join(","),
            if trial.pass { "pass" } else { "FAIL" },
            trial.detail
        );
    }
    assert!(report.all_passed());
    println!("{}", report.to_json());
    Ok(())
}
