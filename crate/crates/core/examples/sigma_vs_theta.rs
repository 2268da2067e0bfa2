//! σ after 100 steps over θ ∈ [0, 2π] for several periods, and the q = 1
//! versus q = 2 comparison over θ ∈ (0, π/4) at 200 steps.

use qwalk::experiments::{default_theta_grid, pi_fraction_grid, sweep_sigma_vs_theta};
use std::f64::consts::PI;

fn main() -> qwalk::Result<()> {
    let grid = default_theta_grid();
    let periods = [1, 2, 3, 4, 5];
    let sweeps = periods
        .iter()
        .map(|&q| sweep_sigma_vs_theta(q, &grid, 100))
        .collect::<qwalk::Result<Vec<_>>>()?;

    print!("{:>10}", "theta/pi");
    for q in periods {
        print!("{:>9}", format!("q={q}"));
    }
    println!();
    for (i, theta) in grid.iter().enumerate().step_by(2) {
        print!("{:>10.4}", theta / PI);
        for sweep in &sweeps {
            print!("{:>9.3}", sweep.sigma[i]);
        }
        println!();
    }

    println!("\nN = 200, theta in (0, pi/4):");
    let low = pi_fraction_grid(1..=5);
    let one = sweep_sigma_vs_theta(1, &low, 200)?;
    let two = sweep_sigma_vs_theta(2, &low, 200)?;
    for ((theta, a), b) in low.iter().zip(&one.sigma).zip(&two.sigma) {
        println!("theta = {:.4} pi  q=1 {a:>8.3}  q=2 {b:>8.3}  rel diff {:.3}", theta / PI, (a - b).abs() / a);
    }
    Ok(())
}
