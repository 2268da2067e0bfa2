//! Every site scatters (q = 1): compare σ²/N² with 1 - |cos θ|.

use qwalk::experiments::{check_q1_closed_form, pi_fraction_grid};
use std::f64::consts::PI;

fn main() -> qwalk::Result<()> {
    let rows = check_q1_closed_form(&pi_fraction_grid(1..=47), 200)?;
    println!("{:>10} {:>14} {:>14} {:>12}", "theta/pi", "sigma^2/N^2", "1-|cos|", "residual");
    for row in &rows {
        println!(
            "{:>10.4} {:>14.6} {:>14.6} {:>12.3e}",
            row.theta / PI,
            row.sigma2_over_n2,
            row.law,
            row.residual
        );
    }
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    println!("max residual {worst:.3e}");
    Ok(())
}
