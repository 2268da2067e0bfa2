//! Brute-force path-sum reference for the walk.
//!
//! Every coin history is followed explicitly: at each visited site the walker
//! either keeps its direction or flips it, picking up the transmit/reflect
//! amplitude of that site (or the Hadamard entry off the potential). The
//! contributions of all `2^N` histories are summed at their endpoints. This
//! shares no code with the dense kernel beyond the profile parameters, and is
//! only meant for cross-checking it.

use num_complex::Complex64;
use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::coin::CoinDirection;
use crate::error::{Result, WalkError};
use crate::potential::PotentialProfile;
use crate::state::WalkState;

pub const MAX_ORACLE_STEPS: usize = 14;

#[derive(Debug, Clone, PartialEq)]
pub struct PathSumResult {
    pub amplitudes: BTreeMap<(i64, CoinDirection), Complex64>,
    pub n_steps: usize,
}

impl PathSumResult {
    pub fn amplitude(&self, x: i64, dir: CoinDirection) -> Complex64 {
        self.amplitudes.get(&(x, dir)).copied().unwrap_or_default()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    /// Largest amplitude difference against a dense state, over the union of supports.
    pub fn max_abs_diff(&self, state: &WalkState) -> f64 {
        let from_oracle = self
            .amplitudes
            .iter()
            .map(|(&(x, d), &a)| (a - state.amplitude(x, d)).norm());
        let from_state = state
            .iter()
            .filter(|(x, d, _)| !self.amplitudes.contains_key(&(*x, *d)))
            .map(|(_, _, a)| a.norm());
        from_oracle.chain(from_state).fold(0.0, f64::max)
    }
}

struct BranchRule {
    period: i64,
    transmit: f64,
    reflect: f64,
}

impl BranchRule {
    /// Amplitude for leaving site `x` in direction `to` having arrived moving `from`.
    fn amplitude(&self, x: i64, from: CoinDirection, to: CoinDirection) -> f64 {
        use CoinDirection::*;
        let scattering = x.rem_euclid(self.period) == 0;
        match (scattering, from, to) {
            (true, Down, Down) => self.transmit,
            (true, Up, Up) => -self.transmit,
            (true, _, _) => self.reflect,
            (false, Up, Up) => -FRAC_1_SQRT_2,
            (false, _, _) => FRAC_1_SQRT_2,
        }
    }
}

fn accumulate(
    rule: &BranchRule,
    remaining: usize,
    x: i64,
    dir: CoinDirection,
    amp: Complex64,
    out: &mut BTreeMap<(i64, CoinDirection), Complex64>,
) {
    if remaining == 0 {
        *out.entry((x, dir)).or_default() += amp;
        return;
    }
    for next in [dir, dir.flipped()] {
        let a = amp * rule.amplitude(x, dir, next);
        accumulate(rule, remaining - 1, x + next.displacement(), next, a, out);
    }
}

/// Amplitudes after `n_steps`, summed over every coin history.
pub fn path_sum_evolve(
    initial: &WalkState,
    profile: &PotentialProfile,
    n_steps: usize,
) -> Result<PathSumResult> {
    if n_steps > MAX_ORACLE_STEPS {
        return Err(WalkError::TooManyPaths { requested: n_steps, limit: MAX_ORACLE_STEPS });
    }
    let rule = BranchRule {
        period: profile.period() as i64,
        transmit: profile.theta().sin(),
        reflect: profile.theta().cos(),
    };
    let mut amplitudes = BTreeMap::new();
    for (x, dir, amp) in initial.iter() {
        if amp != Complex64::default() {
            accumulate(&rule, n_steps, x, dir, amp, &mut amplitudes);
        }
    }
    Ok(PathSumResult { amplitudes, n_steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::initial_state;
    use std::f64::consts::PI;

    #[test]
    fn zero_steps_returns_initial() {
        let s = initial_state(3).unwrap();
        let profile = PotentialProfile::new(2, 0.3).unwrap();
        let r = path_sum_evolve(&s, &profile, 0).unwrap();
        assert_eq!(r.amplitude(0, CoinDirection::Down), s.amplitude(0, CoinDirection::Down));
        assert_eq!(r.amplitude(0, CoinDirection::Up), s.amplitude(0, CoinDirection::Up));
        assert_eq!(r.max_abs_diff(&s), 0.0);
    }

    #[test]
    fn single_scattering_step() {
        let s = WalkState::localized(1, 0, CoinDirection::Down).unwrap();
        let profile = PotentialProfile::new(1, PI / 6.0).unwrap();
        let r = path_sum_evolve(&s, &profile, 1).unwrap();
        assert!((r.amplitude(-1, CoinDirection::Down).re - 0.5).abs() < 1e-15);
        assert!((r.amplitude(1, CoinDirection::Up).re - (PI / 6.0).cos()).abs() < 1e-15);
        assert_eq!(r.amplitude(-1, CoinDirection::Up), Complex64::default());
    }

    #[test]
    fn refuses_deep_walks() {
        let s = initial_state(20).unwrap();
        let profile = PotentialProfile::new(2, 0.3).unwrap();
        assert_eq!(
            path_sum_evolve(&s, &profile, 15),
            Err(WalkError::TooManyPaths { requested: 15, limit: 14 })
        );
    }

    #[test]
    fn matches_kernel_at_ten_steps() {
        let profile = PotentialProfile::new(3, PI / 3.0).unwrap();
        let mut s = initial_state(10).unwrap();
        let r = path_sum_evolve(&s, &profile, 10).unwrap();
        s.evolve(&profile, 10).unwrap();
        assert!(r.max_abs_diff(&s) < 1e-10);
        assert!((r.norm_sqr() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn unitarity_from_path_sum_at_fourteen_steps() {
        let profile = PotentialProfile::new(2, 0.9).unwrap();
        let s = initial_state(14).unwrap();
        let r = path_sum_evolve(&s, &profile, 14).unwrap();
        assert!((r.norm_sqr() - 1.0).abs() < 1e-10);
    }
}
