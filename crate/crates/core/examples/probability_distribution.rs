//! Distribution after 100 steps for the plain Hadamard walk and for the
//! period-4 potential at θ = π/6, printed as a coarse text histogram.

use qwalk::{distribution, initial_state, moments, symmetry_residual, PotentialProfile};
use std::f64::consts::PI;

fn main() -> qwalk::Result<()> {
    let steps = 100;
    for (label, q, theta) in [("Hadamard walk", 1, PI / 4.0), ("q = 4, theta = pi/6", 4, PI / 6.0)] {
        let profile = PotentialProfile::new(q, theta)?;
        let mut state = initial_state(steps)?;
        state.evolve(&profile, steps)?;
        let dist = distribution(&state);
        let m = moments(&dist);
        println!("{label}: sigma = {:.4}, symmetry residual = {:.1e}", m.sigma, symmetry_residual(&dist));

        // Even sites only; odd sites are empty after an even number of steps.
        for (x, p) in dist.iter().filter(|(x, _)| x % 10 == 0) {
            println!("{x:>5} {:<60} {p:.4}", "#".repeat((p * 600.0).round() as usize));
        }
        println!();
    }
    Ok(())
}
