//! Position statistics of a walk state. The coin is always traced out.

use serde::{Deserialize, Serialize};

use crate::state::WalkState;

/// Probability by position. Zero-probability sites inside the spread are kept.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    pub positions: Vec<i64>,
    pub probabilities: Vec<f64>,
    pub n_steps: usize,
}

impl Distribution {
    /// Builds a distribution from `(position, probability)` pairs sorted by position.
    pub fn from_pairs(pairs: &[(i64, f64)], n_steps: usize) -> Self {
        Self {
            positions: pairs.iter().map(|p| p.0).collect(),
            probabilities: pairs.iter().map(|p| p.1).collect(),
            n_steps,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.positions.iter().copied().zip(self.probabilities.iter().copied())
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    pub fn probability(&self, x: i64) -> f64 {
        self.positions
            .binary_search(&x)
            .map_or(0.0, |i| self.probabilities[i])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub mean: f64,
    pub second_moment: f64,
    pub sigma: f64,
}

/// Distribution over every position in `[-N, N]` (widened to the occupied window if larger).
pub fn distribution(state: &WalkState) -> Distribution {
    let n = state.steps_taken() as i64;
    let (lo, hi) = match state.window() {
        Some(w) => ((-n).min(*w.start()), n.max(*w.end())),
        None => (-n, n),
    };
    let pairs: Vec<(i64, f64)> = (lo..=hi).map(|x| (x, state.probability_at(x))).collect();
    Distribution::from_pairs(&pairs, state.steps_taken())
}

pub fn moments(dist: &Distribution) -> Moments {
    let mean: f64 = dist.iter().map(|(x, p)| x as f64 * p).sum();
    let second_moment: f64 = dist.iter().map(|(x, p)| (x as f64).powi(2) * p).sum();
    // Central form avoids cancellation in <x^2> - <x>^2.
    let variance: f64 = dist.iter().map(|(x, p)| (x as f64 - mean).powi(2) * p).sum();
    Moments { mean, second_moment, sigma: variance.max(0.0).sqrt() }
}

/// Standard deviation of the position of `state`.
pub fn sigma(state: &WalkState) -> f64 {
    moments(&distribution(state)).sigma
}

/// Closed-form estimate `sqrt(1 - |cos θ|) N` for the every-site-scatters walk.
pub fn q1_law(theta: f64, n_steps: usize) -> f64 {
    (1.0 - theta.cos().abs()).sqrt() * n_steps as f64
}

/// `max_x |P(x) - P(-x)|`.
pub fn symmetry_residual(dist: &Distribution) -> f64 {
    dist.iter()
        .map(|(x, p)| (p - dist.probability(-x)).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::PotentialProfile;
    use crate::state::initial_state;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn initial_distribution_is_a_point() {
        let d = distribution(&initial_state(100).unwrap());
        assert_eq!(d.positions, vec![0]);
        assert_eq!(d.probabilities.len(), 1);
        assert!((d.probabilities[0] - 1.0).abs() < 1e-15);
        let m = moments(&d);
        assert_eq!(m.mean, 0.0);
        assert_eq!(m.sigma, 0.0);
    }

    #[test]
    fn ballistic_distribution_keeps_zero_sites() {
        let profile = PotentialProfile::new(1, PI / 2.0).unwrap();
        let mut s = initial_state(5).unwrap();
        s.evolve(&profile, 5).unwrap();
        let d = distribution(&s);
        assert_eq!(d.positions, (-5..=5).collect::<Vec<_>>());
        assert!((d.probability(-5) - 0.5).abs() < 1e-15);
        assert!((d.probability(5) - 0.5).abs() < 1e-15);
        assert!(d.probabilities[1..10].iter().all(|&p| p < 1e-30));
        assert!((moments(&d).sigma - 5.0).abs() < 1e-12);
    }

    #[test]
    fn hand_computed_moments() {
        let m = moments(&Distribution::from_pairs(&[(-1, 0.5), (1, 0.5)], 1));
        assert_eq!((m.mean, m.second_moment, m.sigma), (0.0, 1.0, 1.0));
        let m = moments(&Distribution::from_pairs(&[(0, 0.25), (2, 0.75)], 2));
        assert!((m.mean - 1.5).abs() < 1e-15);
        assert!((m.second_moment - 3.0).abs() < 1e-15);
        assert!((m.sigma - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn symmetry_residual_examples() {
        assert_eq!(symmetry_residual(&Distribution::from_pairs(&[(-1, 0.5), (1, 0.5)], 1)), 0.0);
        assert_eq!(symmetry_residual(&Distribution::from_pairs(&[(-1, 0.3), (0, 0.4), (1, 0.3)], 2)), 0.0);
        let lopsided = Distribution::from_pairs(&[(-1, 0.2), (1, 0.8)], 1);
        assert!((symmetry_residual(&lopsided) - 0.6).abs() < 1e-15);
    }

    #[test]
    fn period_four_distribution_is_symmetric() {
        let profile = PotentialProfile::new(4, PI / 6.0).unwrap();
        let mut s = initial_state(100).unwrap();
        s.evolve(&profile, 100).unwrap();
        let d = distribution(&s);
        assert!((d.total() - 1.0).abs() < 1e-12);
        assert!(symmetry_residual(&d) < 1e-12);
    }

    #[test]
    fn q1_law_values() {
        assert!((q1_law(PI / 2.0, 100) - 100.0).abs() < 1e-12);
        assert_eq!(q1_law(0.0, 37), 0.0);
        let expected = 200.0 * (1.0 - FRAC_1_SQRT_2).sqrt();
        assert!((q1_law(PI / 4.0, 200) - expected).abs() < 1e-12);
        assert!((q1_law(PI / 4.0, 200) - 108.25).abs() < 0.02);
    }

    #[test]
    fn hadamard_sigma_golden() {
        let profile = PotentialProfile::new(1, PI / 4.0).unwrap();
        let mut s = initial_state(200).unwrap();
        s.evolve(&profile, 200).unwrap();
        let ratio = sigma(&s) / 200.0;
        assert!((ratio - (1.0 - FRAC_1_SQRT_2).sqrt()).abs() < 0.03);
        assert!((ratio - HADAMARD_SIGMA_OVER_N_200).abs() < 1e-12, "{ratio:.17}");
    }

    /// σ/N of the Hadamard walk after 200 steps from the symmetric start.
    const HADAMARD_SIGMA_OVER_N_200: f64 = 0.541_207_695_076_678_5;

    proptest::proptest! {
        #[test]
        fn variance_identity(q in 1u32..6, theta in -4.0f64..4.0, n in 1usize..80) {
            let profile = PotentialProfile::new(q, theta).unwrap();
            let mut s = initial_state(n).unwrap();
            s.evolve(&profile, n).unwrap();
            let d = distribution(&s);
            let m = moments(&d);
            proptest::prop_assert!((d.total() - 1.0).abs() < 1e-12);
            proptest::prop_assert!(d.probabilities.iter().all(|&p| p >= 0.0));
            proptest::prop_assert!(d.positions.windows(2).all(|w| w[0] < w[1]));
            proptest::prop_assert!((m.sigma.powi(2) - (m.second_moment - m.mean.powi(2))).abs() < 1e-10);
        }
    }
}
