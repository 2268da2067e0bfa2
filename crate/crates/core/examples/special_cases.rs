//! Limits of the potential: θ = π/4 reproduces the Hadamard walk, q = 1 with
//! θ = π/2 propagates freely, θ = 0 traps the walker between walls q apart.

use qwalk::{distribution, initial_state, moments, CoinDirection, PotentialProfile};
use std::f64::consts::PI;

fn main() -> qwalk::Result<()> {
    let mut hadamard = initial_state(200)?;
    hadamard.evolve(&PotentialProfile::new(1, PI / 4.0)?, 200)?;
    for q in [2, 5, 10] {
        let mut s = initial_state(200)?;
        s.evolve(&PotentialProfile::new(q, PI / 4.0)?, 200)?;
        println!("theta = pi/4, q = {q:>2}: max amplitude difference to Hadamard walk {:.1e}", s.max_abs_diff(&hadamard));
    }

    let n = 100;
    let mut free = initial_state(n)?;
    free.evolve(&PotentialProfile::new(1, PI / 2.0)?, n)?;
    println!(
        "\nq = 1, theta = pi/2, N = {n}: amp(-N, down) = {:.6}, amp(+N, up) = {:.6}, sigma = {:.6}",
        free.amplitude(-(n as i64), CoinDirection::Down),
        free.amplitude(n as i64, CoinDirection::Up),
        moments(&distribution(&free)).sigma
    );

    println!();
    for q in [1, 3, 6] {
        let mut trapped = initial_state(n)?;
        trapped.evolve(&PotentialProfile::new(q, 0.0)?, n)?;
        let dist = distribution(&trapped);
        let reach = dist.iter().filter(|(_, p)| *p > 1e-12).map(|(x, _)| x.abs()).max().unwrap_or(0);
        println!("theta = 0, q = {q}: walker confined to |x| <= {reach} after {n} steps");
    }
    Ok(())
}
