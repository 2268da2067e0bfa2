//! Recomputes the frozen thresholds used by the trend checks and prints the
//! raw numbers behind each of them.

use qwalk::experiments::{
    check_q1_closed_form, linear_fit, pi_fraction_grid, relative_spread, sweep_sigma_vs_inverse_period,
    sweep_sigma_vs_steps, sweep_sigma_vs_theta,
};
use std::f64::consts::PI;

fn main() -> qwalk::Result<()> {
    let q1 = check_q1_closed_form(&pi_fraction_grid(1..=47), 200)?;
    let worst = q1.iter().max_by(|a, b| a.residual.total_cmp(&b.residual)).expect("non-empty grid");
    println!("q=1 N=200 max residual {:.6e} at theta = {:.4} pi", worst.residual, worst.theta / PI);

    let window = pi_fraction_grid(6..=18);
    for q in [1, 2, 3, 4, 5, 10] {
        let r = sweep_sigma_vs_theta(q, &window, 100)?;
        println!("q={q:<2} N=100 relative spread over [pi/4, 3pi/4] = {:.6e}", relative_spread(&r.sigma));
    }

    for theta in [PI / 6.0, PI / 3.0] {
        let sig: Vec<f64> = [2, 3, 5, 10]
            .iter()
            .map(|&q| qwalk::experiments::sigma_after(q, theta, 200))
            .collect::<qwalk::Result<_>>()?;
        println!("theta={:.4} pi sigma(q=2,3,5,10) = {sig:?}", theta / PI);
    }

    let ns: Vec<usize> = (50..=200).collect();
    for (q, theta) in [(2, PI / 6.0), (10, PI / 6.0), (2, PI / 3.0), (10, PI / 3.0)] {
        let r = sweep_sigma_vs_steps(q, theta, &ns)?;
        println!("q={q} theta={:.4} pi sigma-vs-N fit {:?}", theta / PI, r.fit()?);
    }

    for (theta, qs) in [
        (PI / 12.0, (2..=10).collect::<Vec<u32>>()),
        (PI / 6.0, (2..=10).collect()),
        (PI / 5.0, (2..=10).collect()),
        (PI / 4.0 + PI / 24.0, (1..=10).collect()),
        (PI / 3.0, (1..=10).collect()),
        (5.0 * PI / 12.0, (1..=10).collect()),
    ] {
        let r = sweep_sigma_vs_inverse_period(theta, &qs, 200)?;
        let fit = linear_fit(&r.independent, &r.sigma)?;
        println!("theta={:.4} pi sigma-vs-1/q fit {fit:?}", theta / PI);
    }
    Ok(())
}
