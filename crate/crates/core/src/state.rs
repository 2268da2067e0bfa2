//! Dense state vector of the walker and its evolution.
//!
//! The amplitude table covers positions `-capacity..=capacity`, allocated once.
//! Each step applies the coin chosen by the pre-shift position, then moves the
//! `Down` component one site left and the `Up` component one site right. Only
//! the occupied window is touched, so cells outside the support stay exactly
//! zero.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::RangeInclusive;

use crate::coin::CoinDirection;
use crate::error::{Result, WalkError};
use crate::potential::PotentialProfile;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone)]
pub struct WalkState {
    capacity: usize,
    /// `[down, up]` per lattice index; index `capacity` is position 0.
    cells: Vec<[Complex64; 2]>,
    scratch: Vec<[Complex64; 2]>,
    steps_taken: usize,
    /// Inclusive range of positions that may hold nonzero amplitude.
    window: Option<(i64, i64)>,
}

impl PartialEq for WalkState {
    fn eq(&self, other: &Self) -> bool {
        self.capacity == other.capacity
            && self.steps_taken == other.steps_taken
            && self.cells == other.cells
    }
}

/// The point-localized start `(|0,↓⟩ + i|0,↑⟩)/√2`, sized for `capacity_steps` steps.
pub fn initial_state(capacity_steps: usize) -> Result<WalkState> {
    let mut state = WalkState::new(capacity_steps)?;
    state.set_amplitude(0, CoinDirection::Down, Complex64::new(FRAC_1_SQRT_2, 0.0))?;
    state.set_amplitude(0, CoinDirection::Up, Complex64::new(0.0, FRAC_1_SQRT_2))?;
    Ok(state)
}

impl WalkState {
    /// All-zero table for positions `-capacity..=capacity`.
    pub fn new(capacity: usize) -> Result<Self> {
        if capacity < 1 {
            return Err(WalkError::InvalidInput("capacity must be at least one step".into()));
        }
        let len = 2 * capacity + 1;
        Ok(Self {
            capacity,
            cells: vec![[ZERO; 2]; len],
            scratch: vec![[ZERO; 2]; len],
            steps_taken: 0,
            window: None,
        })
    }

    /// Basis state `|x, dir⟩`.
    pub fn localized(capacity: usize, x: i64, dir: CoinDirection) -> Result<Self> {
        let mut state = Self::new(capacity)?;
        state.set_amplitude(x, dir, Complex64::new(1.0, 0.0))?;
        Ok(state)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Lattice index of position 0.
    pub fn origin_offset(&self) -> usize {
        self.capacity
    }

    pub fn steps_taken(&self) -> usize {
        self.steps_taken
    }

    /// Positions that may carry amplitude, or `None` for the zero state.
    pub fn window(&self) -> Option<RangeInclusive<i64>> {
        self.window.map(|(lo, hi)| lo..=hi)
    }

    #[inline]
    fn index(&self, x: i64) -> Option<usize> {
        let idx = x + self.capacity as i64;
        (0..self.cells.len() as i64).contains(&idx).then_some(idx as usize)
    }

    pub fn amplitude(&self, x: i64, dir: CoinDirection) -> Complex64 {
        self.index(x).map_or(ZERO, |i| self.cells[i][dir.index()])
    }

    pub fn set_amplitude(&mut self, x: i64, dir: CoinDirection, amp: Complex64) -> Result<()> {
        if !(amp.re.is_finite() && amp.im.is_finite()) {
            return Err(WalkError::InvalidInput(format!("non-finite amplitude {amp}")));
        }
        let idx = self.index(x).ok_or_else(|| {
            WalkError::InvalidInput(format!(
                "position {x} outside table -{0}..={0}",
                self.capacity
            ))
        })?;
        self.cells[idx][dir.index()] = amp;
        self.window = Some(match self.window {
            Some((lo, hi)) => (lo.min(x), hi.max(x)),
            None => (x, x),
        });
        Ok(())
    }

    /// Total probability at `x`, coin traced out.
    pub fn probability_at(&self, x: i64) -> f64 {
        self.index(x)
            .map_or(0.0, |i| self.cells[i][0].norm_sqr() + self.cells[i][1].norm_sqr())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.window().map_or(0.0, |w| w.map(|x| self.probability_at(x)).sum())
    }

    /// `(position, direction, amplitude)` for every cell inside the window.
    pub fn iter(&self) -> impl Iterator<Item = (i64, CoinDirection, Complex64)> + '_ {
        self.window()
            .into_iter()
            .flatten()
            .flat_map(move |x| CoinDirection::ALL.into_iter().map(move |d| (x, d, self.amplitude(x, d))))
    }

    /// Largest `|a - b|` over all positions and directions.
    pub fn max_abs_diff(&self, other: &WalkState) -> f64 {
        let lo = [&self.window, &other.window].iter().filter_map(|w| w.map(|w| w.0)).min();
        let hi = [&self.window, &other.window].iter().filter_map(|w| w.map(|w| w.1)).max();
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return 0.0;
        };
        (lo..=hi)
            .flat_map(|x| CoinDirection::ALL.map(|d| (x, d)))
            .map(|(x, d)| (self.amplitude(x, d) - other.amplitude(x, d)).norm())
            .fold(0.0, f64::max)
    }

    /// One application of the walk operator.
    pub fn step(&mut self, profile: &PotentialProfile) -> Result<()> {
        let Some((lo, hi)) = self.window else {
            self.steps_taken += 1;
            return Ok(());
        };
        let cap = self.capacity as i64;
        if lo - 1 < -cap || hi + 1 > cap {
            let needed = if hi + 1 > cap { hi + 1 } else { lo - 1 };
            return Err(WalkError::CapacityExhausted { capacity: self.capacity, needed });
        }

        let base = (lo + cap) as usize;
        let end = (hi + cap) as usize;
        for cell in &mut self.scratch[base - 1..=end + 1] {
            *cell = [ZERO; 2];
        }
        for (offset, x) in (lo..=hi).enumerate() {
            let i = base + offset;
            let [down, up] = profile.coin_at(x).apply(self.cells[i]);
            self.scratch[i - 1][0] = down;
            self.scratch[i + 1][1] = up;
        }
        std::mem::swap(&mut self.cells, &mut self.scratch);
        // Cells left behind in the old buffer must not leak into a later window.
        for cell in &mut self.scratch[base..=end] {
            *cell = [ZERO; 2];
        }

        self.window = Some((lo - 1, hi + 1));
        self.steps_taken += 1;
        Ok(())
    }

    pub fn evolve(&mut self, profile: &PotentialProfile, n_steps: usize) -> Result<()> {
        self.evolve_observed(profile, n_steps, |_| {})
    }

    /// Like [`evolve`](Self::evolve), calling `observe` after every step.
    pub fn evolve_observed<F>(&mut self, profile: &PotentialProfile, n_steps: usize, mut observe: F) -> Result<()>
    where
        F: FnMut(&WalkState),
    {
        for _ in 0..n_steps {
            self.step(profile)?;
            observe(self);
        }
        Ok(())
    }
}
