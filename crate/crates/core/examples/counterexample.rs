use std::time::Instant;

use polefiber::experiments::verify_counterexample;
use polefiber::homotopy::TrackerConfig;

fn main() -> polefiber::Result<()> {
    let started = Instant::now();
    let report = verify_counterexample(&TrackerConfig::default())?;
    println!(
        "paths: {} tracked, {} diverged, {} failed",
        report.paths_tracked, report.paths_diverged, report.paths_failed
    );
    for check in &report.checks {
        let tag = if check.passed { "PASS" } else { "FAIL" };
        println!("{tag}  {}: {}", check.name, check.detail);
    }
    println!("elapsed {:.2?}", started.elapsed());
    Ok(())
}
