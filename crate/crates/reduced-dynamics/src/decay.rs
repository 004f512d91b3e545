//! The homogeneous b model b_s = −((2α+1)/α) s^{−1} b, whose solution is
//! the pure power law b(s) = b₀ (s/s₀)^{−(2α+1)/α}. The integrator result
//! is compared against the closed form and the decay exponent is fitted
//! from the numerical endpoints.

use crate::{BlowupParameters, Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct BDecayReport {
    /// b(s_end) from RK4 integration.
    pub endpoint: f64,
    /// b₀ (s_end/s₀)^{−(2α+1)/α}.
    pub closed_form: f64,
    /// −d log|b| / d log|s| fitted from the integrated endpoints; equals
    /// (2α+1)/α for the exact solution. NaN when b₀ = 0.
    pub fitted_exponent: f64,
}

pub fn b_decay_model(
    b0: f64,
    s0: f64,
    s_end: f64,
    params: &BlowupParameters,
) -> Result<BDecayReport> {
    if !(s0 < 0.0) {
        return Err(Error::Cone("s0", s0));
    }
    if !(s_end < 0.0) {
        return Err(Error::Cone("s_end", s_end));
    }
    let rate = (2.0 * params.alpha + 1.0) / params.alpha;
    let rhs = |s: f64, b: f64| -rate * b / s;
    let direction = (s_end - s0).signum();
    let step_scale = 1e-4;
    let mut s = s0;
    let mut b = b0;
    while (s_end - s) * direction > 0.0 {
        let mut ds = direction * step_scale * s.abs();
        if (s + ds - s_end) * direction > 0.0 {
            ds = s_end - s;
        }
        let k1 = rhs(s, b);
        let k2 = rhs(s + 0.5 * ds, b + 0.5 * ds * k1);
        let k3 = rhs(s + 0.5 * ds, b + 0.5 * ds * k2);
        let k4 = rhs(s + ds, b + ds * k3);
        b += ds / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        s += ds;
    }
    let closed_form = b0 * (s_end / s0).powf(-rate);
    let fitted_exponent = -((b / b0).abs().ln()) / (s_end / s0).ln();
    Ok(BDecayReport { endpoint: b, closed_form, fitted_exponent })
}
