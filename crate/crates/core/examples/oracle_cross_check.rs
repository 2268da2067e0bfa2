//! Compares the dense kernel against the brute-force sum over coin histories.

use qwalk::oracle::{path_sum_evolve, MAX_ORACLE_STEPS};
use qwalk::{initial_state, PotentialProfile};
use std::f64::consts::PI;

fn main() -> qwalk::Result<()> {
    let n = MAX_ORACLE_STEPS;
    for q in 1..=5 {
        let mut worst: f64 = 0.0;
        for k in 0..=24 {
            let profile = PotentialProfile::new(q, k as f64 * PI / 12.0)?;
            let start = initial_state(n)?;
            let reference = path_sum_evolve(&start, &profile, n)?;
            let mut state = start;
            state.evolve(&profile, n)?;
            worst = worst.max(reference.max_abs_diff(&state));
        }
        println!("q = {q}: {n} steps, 25 angles, max amplitude error {worst:.2e}");
    }
    Ok(())
}
