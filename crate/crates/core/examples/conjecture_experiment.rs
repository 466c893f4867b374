//! Runs a small seeded experiment: generate leveled instances, measure
//! the nilpotency index g* of JH, and check that every sequence
//! terminates by step (3^(g*-1)+1)/2 with inverse degree at most
//! 3^(g*-1).
//!
//! ```bash
//! cargo run --example conjecture_experiment
//! ```

use keller::conjecture::{run_experiment, ExperimentOptions};
use keller::druzkowski::GeneratorConfig;
use keller::rational::frac;

fn main() {
    // g = 3 is a theorem: every trial must come out CONSISTENT
    let config = GeneratorConfig::with_default_pool(5, 3, 1, frac(1, 2))
        .expect("valid generator config");
    let report = run_experiment(&config, ExperimentOptions::new(10));
    println!("{}", report.to_report_text());
    println!("g=3: {}\n", report.summary_line());

    // g = 4 is open territory; the harness reports whatever it finds
    let config = GeneratorConfig::with_default_pool(6, 4, 1, frac(1, 2))
        .expect("valid generator config");
    let report = run_experiment(&config, ExperimentOptions::new(5));
    for (i, r) in report.records.iter().enumerate() {
        println!(
            "g=4 trial {i}: g*={} step_bound={:?} deg_g={:?} verdict={}",
            r.measured_index, r.step_bound, r.inverse_degree, r.verdict
        );
    }
    println!("g=4: {}", report.summary_line());
}
