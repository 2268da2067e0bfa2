//! Growth of σ with the number of steps for several periods, at θ = π/6 and π/3.

use qwalk::experiments::sweep_sigma_vs_steps;
use std::f64::consts::PI;

fn main() -> qwalk::Result<()> {
    let checkpoints: Vec<usize> = (25..=200).step_by(25).collect();
    for (name, theta) in [("pi/6", PI / 6.0), ("pi/3", PI / 3.0)] {
        println!("theta = {name}");
        print!("{:>4}", "N");
        for n in &checkpoints {
            print!("{n:>9}");
        }
        println!("{:>12}{:>10}", "slope", "r^2");
        for q in [1, 2, 3, 5, 10] {
            let sweep = sweep_sigma_vs_steps(q, theta, &checkpoints)?;
            let fit = sweep.fit()?;
            print!("q={q:<2}");
            for s in &sweep.sigma {
                print!("{s:>9.3}");
            }
            println!("{:>12.4}{:>10.5}", fit.slope, fit.r_squared);
        }
        println!();
    }
    Ok(())
}
