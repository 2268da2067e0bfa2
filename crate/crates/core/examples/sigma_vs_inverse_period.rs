//! σ after 200 steps against 1/q, with a least-squares line for each angle.

use qwalk::experiments::sweep_sigma_vs_inverse_period;
use std::f64::consts::PI;

fn main() -> qwalk::Result<()> {
    let below: Vec<u32> = (2..=10).collect();
    let above: Vec<u32> = (1..=10).collect();
    let cases = [
        ("pi/12", PI / 12.0, &below),
        ("pi/6", PI / 6.0, &below),
        ("pi/5", PI / 5.0, &below),
        ("7pi/24", 7.0 * PI / 24.0, &above),
        ("pi/3", PI / 3.0, &above),
        ("5pi/12", 5.0 * PI / 12.0, &above),
    ];
    for (name, theta, periods) in cases {
        let sweep = sweep_sigma_vs_inverse_period(theta, periods, 200)?;
        let fit = sweep.fit()?;
        println!(
            "theta = {name:<7} slope {:>8.3}  intercept {:>7.3}  r^2 {:.4}",
            fit.slope, fit.intercept, fit.r_squared
        );
        for (inv_q, sigma) in sweep.rows() {
            println!("    1/q = {inv_q:.4}  sigma = {sigma:.3}");
        }
    }
    Ok(())
}
