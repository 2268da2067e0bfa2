use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::coin::{hadamard_coin, scattering_coin, CoinMatrix};
use crate::error::{Result, WalkError};

/// Periodic potential: scattering coin `C(θ)` at every site `x = n q`
/// (`n` any integer, so `x = 0` always scatters), Hadamard coin elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawProfile", into = "RawProfile")]
pub struct PotentialProfile {
    period_q: u32,
    theta: f64,
    #[serde(skip)]
    scattering: CoinMatrix,
    #[serde(skip)]
    hadamard: CoinMatrix,
}

#[derive(Serialize, Deserialize)]
struct RawProfile {
    period_q: u32,
    theta: f64,
}

impl TryFrom<RawProfile> for PotentialProfile {
    type Error = WalkError;

    fn try_from(raw: RawProfile) -> Result<Self> {
        PotentialProfile::new(raw.period_q, raw.theta)
    }
}

impl From<PotentialProfile> for RawProfile {
    fn from(p: PotentialProfile) -> Self {
        RawProfile { period_q: p.period_q, theta: p.theta }
    }
}

impl PotentialProfile {
    pub fn new(period_q: u32, theta: f64) -> Result<Self> {
        if period_q < 1 {
            return Err(WalkError::InvalidInput("period q must be at least 1".into()));
        }
        Ok(Self {
            period_q,
            theta,
            scattering: scattering_coin(theta)?,
            hadamard: hadamard_coin(),
        })
    }

    pub fn period(&self) -> u32 {
        self.period_q
    }

    /// The angle exactly as supplied; no reduction is applied.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// θ reduced into `[0, 2π)`, for display.
    pub fn theta_reduced(&self) -> f64 {
        self.theta.rem_euclid(TAU)
    }

    pub fn transmission(&self) -> f64 {
        self.theta.sin()
    }

    pub fn reflection(&self) -> f64 {
        self.theta.cos()
    }

    #[inline]
    pub fn is_scattering_site(&self, x: i64) -> bool {
        x.rem_euclid(self.period_q as i64) == 0
    }

    /// Coin acting at position `x` (before the shift).
    #[inline]
    pub fn coin_at(&self, x: i64) -> &CoinMatrix {
        if self.is_scattering_site(x) {
            &self.scattering
        } else {
            &self.hadamard
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn negative_multiples_scatter() {
        let p = PotentialProfile::new(4, PI / 6.0).unwrap();
        assert!(p.is_scattering_site(-8));
        assert_eq!(*p.coin_at(-8), scattering_coin(PI / 6.0).unwrap());
        assert_eq!(*p.coin_at(3), hadamard_coin());
        assert_eq!(*p.coin_at(-3), hadamard_coin());
        assert!(p.is_scattering_site(0));
    }

    #[test]
    fn period_one_scatters_everywhere() {
        let p = PotentialProfile::new(1, 1.1).unwrap();
        for x in -20..=20 {
            assert_eq!(*p.coin_at(x), scattering_coin(1.1).unwrap());
        }
    }

    #[test]
    fn rejects_zero_period_and_bad_theta() {
        assert!(PotentialProfile::new(0, 0.5).is_err());
        assert!(PotentialProfile::new(2, f64::NAN).is_err());
    }

    #[test]
    fn theta_is_not_reduced() {
        let p = PotentialProfile::new(3, 7.0).unwrap();
        assert_eq!(p.theta(), 7.0);
        assert!((p.theta_reduced() - (7.0 - TAU)).abs() < 1e-15);
        let (t, r) = (p.transmission(), p.reflection());
        assert!((t * t + r * r - 1.0).abs() < 1e-15);
    }

    #[test]
    fn serde_round_trip_validates() {
        let p = PotentialProfile::new(5, 0.25).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"period_q":5,"theta":0.25}"#);
        let back: PotentialProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<PotentialProfile>(r#"{"period_q":0,"theta":0.25}"#).is_err());
    }
}
