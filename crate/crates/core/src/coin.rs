//! Coin space and the 2x2 coin operators.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::Mul;

use crate::error::{Result, WalkError};

/// Internal direction of the walker. `Down` moves to `x - 1`, `Up` to `x + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CoinDirection {
    Down,
    Up,
}

impl CoinDirection {
    pub const ALL: [CoinDirection; 2] = [CoinDirection::Down, CoinDirection::Up];

    #[inline]
    pub fn index(self) -> usize {
        match self {
            CoinDirection::Down => 0,
            CoinDirection::Up => 1,
        }
    }

    /// Lattice displacement produced by the shift.
    #[inline]
    pub fn displacement(self) -> i64 {
        match self {
            CoinDirection::Down => -1,
            CoinDirection::Up => 1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            CoinDirection::Down => CoinDirection::Up,
            CoinDirection::Up => CoinDirection::Down,
        }
    }
}

/// A 2x2 operator on the coin space, basis order (Down, Up).
///
/// `m_ab` is the amplitude sent to new direction `a` from old direction `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinMatrix {
    pub m_dd: Complex64,
    pub m_du: Complex64,
    pub m_ud: Complex64,
    pub m_uu: Complex64,
}

impl CoinMatrix {
    pub fn new(m_dd: Complex64, m_du: Complex64, m_ud: Complex64, m_uu: Complex64) -> Self {
        Self { m_dd, m_du, m_ud, m_uu }
    }

    pub fn from_real(m_dd: f64, m_du: f64, m_ud: f64, m_uu: f64) -> Self {
        Self::new(m_dd.into(), m_du.into(), m_ud.into(), m_uu.into())
    }

    pub fn identity() -> Self {
        Self::from_real(1.0, 0.0, 0.0, 1.0)
    }

    /// Matrix element `<to|M|from>`.
    pub fn entry(&self, to: CoinDirection, from: CoinDirection) -> Complex64 {
        match (to, from) {
            (CoinDirection::Down, CoinDirection::Down) => self.m_dd,
            (CoinDirection::Down, CoinDirection::Up) => self.m_du,
            (CoinDirection::Up, CoinDirection::Down) => self.m_ud,
            (CoinDirection::Up, CoinDirection::Up) => self.m_uu,
        }
    }

    /// Applies the coin to a `[down, up]` amplitude pair.
    #[inline]
    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.m_dd * v[0] + self.m_du * v[1],
            self.m_ud * v[0] + self.m_uu * v[1],
        ]
    }

    pub fn adjoint(&self) -> Self {
        Self::new(self.m_dd.conj(), self.m_ud.conj(), self.m_du.conj(), self.m_uu.conj())
    }

    /// Largest absolute entry-wise difference.
    pub fn max_abs_diff(&self, other: &CoinMatrix) -> f64 {
        [
            self.m_dd - other.m_dd,
            self.m_du - other.m_du,
            self.m_ud - other.m_ud,
            self.m_uu - other.m_uu,
        ]
        .iter()
        .map(|d| d.norm())
        .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (*self * self.adjoint()).max_abs_diff(&CoinMatrix::identity()) < tol
    }
}

impl Mul for CoinMatrix {
    type Output = CoinMatrix;

    fn mul(self, rhs: CoinMatrix) -> CoinMatrix {
        CoinMatrix::new(
            self.m_dd * rhs.m_dd + self.m_du * rhs.m_ud,
            self.m_dd * rhs.m_du + self.m_du * rhs.m_uu,
            self.m_ud * rhs.m_dd + self.m_uu * rhs.m_ud,
            self.m_ud * rhs.m_du + self.m_uu * rhs.m_uu,
        )
    }
}

/// The Hadamard coin `(1/sqrt 2) [[1, 1], [1, -1]]`.
pub fn hadamard_coin() -> CoinMatrix {
    CoinMatrix::from_real(FRAC_1_SQRT_2, FRAC_1_SQRT_2, FRAC_1_SQRT_2, -FRAC_1_SQRT_2)
}

/// Scattering coin with transmission `sin θ` and reflection `cos θ`:
/// `[[sin θ, cos θ], [cos θ, -sin θ]]`.
///
/// A walker arriving along `Down` keeps going down with amplitude `t` and
/// bounces back up with amplitude `r`.
pub fn scattering_coin(theta: f64) -> Result<CoinMatrix> {
    if !theta.is_finite() {
        return Err(WalkError::InvalidInput(format!("theta must be finite, got {theta}")));
    }
    let (t, r) = theta.sin_cos();
    Ok(CoinMatrix::from_real(t, r, r, -t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn hadamard_on_basis_vectors() {
        let h = hadamard_coin();
        let down = h.apply([c(1.0), c(0.0)]);
        assert!((down[0] - c(FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!((down[1] - c(FRAC_1_SQRT_2)).norm() < 1e-15);
        let up = h.apply([c(0.0), c(1.0)]);
        assert!((up[0] - c(FRAC_1_SQRT_2)).norm() < 1e-15);
        assert!((up[1] + c(FRAC_1_SQRT_2)).norm() < 1e-15);
    }

    #[test]
    fn hadamard_is_involution() {
        let h = hadamard_coin();
        assert!((h * h).max_abs_diff(&CoinMatrix::identity()) < 1e-15);
    }

    #[test]
    fn scattering_special_angles() {
        let quarter = scattering_coin(PI / 4.0).unwrap();
        assert!(quarter.max_abs_diff(&hadamard_coin()) < 1e-15);

        let transmit = scattering_coin(PI / 2.0).unwrap();
        assert!(transmit.max_abs_diff(&CoinMatrix::from_real(1.0, 0.0, 0.0, -1.0)) < 1e-15);

        let reflect = scattering_coin(0.0).unwrap();
        assert_eq!(reflect, CoinMatrix::from_real(0.0, 1.0, 1.0, -0.0));
    }

    #[test]
    fn scattering_rejects_non_finite() {
        assert!(scattering_coin(f64::NAN).is_err());
        assert!(scattering_coin(f64::INFINITY).is_err());
    }

    #[test]
    fn entry_matches_fields() {
        let m = scattering_coin(0.3).unwrap();
        assert_eq!(m.entry(CoinDirection::Up, CoinDirection::Down), m.m_ud);
        assert_eq!(m.entry(CoinDirection::Down, CoinDirection::Up), m.m_du);
    }

    proptest::proptest! {
        #[test]
        fn scattering_coin_is_unitary(theta in -50.0f64..50.0) {
            let m = scattering_coin(theta).unwrap();
            proptest::prop_assert!(m.is_unitary(1e-12));
            let (t, r) = (theta.sin(), theta.cos());
            proptest::prop_assert!((t * t + r * r - 1.0).abs() < 1e-15);
        }
    }
}
