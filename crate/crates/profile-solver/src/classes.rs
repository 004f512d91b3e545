//! Tail shape classes for the profile corrections and the defect
//! measurements that decide whether a grid function conforms.

use numerics_core::{derivative, GridFunction};

/// Behavior demanded of each tail. `Y` decays exponentially on both
/// sides; `Z0` settles to constants on both sides; `Z0Minus` settles on
/// the left and decays on the right; `Z1Minus` may grow linearly on the
/// left and decays on the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecayClass {
    Y,
    Z0,
    Z0Minus,
    Z1Minus,
}

impl DecayClass {
    /// Largest violation of the class shape on the outer windows of
    /// width `margin`: decaying tails bound the value, constant limits
    /// bound the slope, linear growth bounds the curvature. `Z1Minus`
    /// fields grow with the domain half-width, so their defect is
    /// measured relative to the global magnitude; the other classes are
    /// order one and measured absolutely.
    pub fn defect(self, f: &GridFunction, margin: f64) -> crate::Result<f64> {
        let d1 = derivative(f, 1)?;
        let d2 = derivative(f, 2)?;
        let (left, right) = match self {
            DecayClass::Y => (window_sup(f, true, margin), window_sup(f, false, margin)),
            DecayClass::Z0 => (window_sup(&d1, true, margin), window_sup(&d1, false, margin)),
            DecayClass::Z0Minus => (window_sup(&d1, true, margin), window_sup(f, false, margin)),
            DecayClass::Z1Minus => (window_sup(&d2, true, margin), window_sup(f, false, margin)),
        };
        let scale = match self {
            DecayClass::Z1Minus => {
                1.0 + f.values().iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
            }
            _ => 1.0,
        };
        Ok(left.max(right) / scale)
    }
}

/// Sup of |f| on the left (or right) window of the given width.
fn window_sup(f: &GridFunction, left: bool, margin: f64) -> f64 {
    let grid = f.grid();
    let mut worst: f64 = 0.0;
    for (i, y) in grid.points().enumerate() {
        let inside = if left { y <= grid.x_min() + margin } else { y >= grid.x_max() - margin };
        if inside {
            worst = worst.max(f.values()[i].abs());
        }
    }
    worst
}

/// Sup of |f| over |y| ≥ from_abs.
pub fn outer_sup(f: &GridFunction, from_abs: f64) -> f64 {
    let grid = f.grid();
    let mut worst: f64 = 0.0;
    for (i, y) in grid.points().enumerate() {
        if y.abs() >= from_abs {
            worst = worst.max(f.values()[i].abs());
        }
    }
    worst
}
