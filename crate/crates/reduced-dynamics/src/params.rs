//! Constants derived from α alone plus the matched constant c₂ from the
//! profile pipeline. All closed forms live here; everything downstream
//! reads them from the struct instead of recomputing powers of α.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BlowupParameters {
    pub alpha: f64,
    /// Blowup rate exponent ν = (2α+1)/(4α+3), in (3/7, 1/2) for α > 1.
    pub nu: f64,
    /// β = 1/(4α+3); satisfies 1 − β = 2ν.
    pub beta: f64,
    /// κ_τ = (4α+3)^{−1} (2α)^{−(4α+3)/(2α)}.
    pub kappa_tau: f64,
    /// κ_σ = (2α)^{−1/(2α)}.
    pub kappa_sigma: f64,
    /// κ_λ = (2α)^{−(2α+1)/(2α)}.
    pub kappa_lambda: f64,
    /// c₁ = −(2α+1).
    pub c1: f64,
    /// Matched constant of the third-order profile; negative for the α
    /// range covered here.
    pub c2: f64,
    /// c_α = (4α+3)^{−(2α+1)/4} (2α+1) ∫Q.
    pub c_alpha: f64,
    /// λ₀ = (4α+3)^{ν/(1−3ν)}.
    pub lambda0: f64,
    /// m₀ = (1/4)∫Q.
    pub m0: f64,
}

impl BlowupParameters {
    /// Closed forms only; c₂, ∫Q and m₀ are supplied by the caller. Use
    /// `derived_constants` to obtain them from the profile pipeline.
    pub fn with_c2(alpha: f64, c2: f64, integral_q: f64) -> Result<Self> {
        if !(alpha > 1.0) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let nu = (2.0 * alpha + 1.0) / (4.0 * alpha + 3.0);
        let beta = 1.0 / (4.0 * alpha + 3.0);
        let p = Self {
            alpha,
            nu,
            beta,
            kappa_tau: (4.0 * alpha + 3.0).recip()
                * (2.0 * alpha).powf(-(4.0 * alpha + 3.0) / (2.0 * alpha)),
            kappa_sigma: (2.0 * alpha).powf(-1.0 / (2.0 * alpha)),
            kappa_lambda: (2.0 * alpha).powf(-(2.0 * alpha + 1.0) / (2.0 * alpha)),
            c1: -(2.0 * alpha + 1.0),
            c2,
            c_alpha: (4.0 * alpha + 3.0).powf(-(2.0 * alpha + 1.0) / 4.0)
                * (2.0 * alpha + 1.0)
                * integral_q,
            lambda0: (4.0 * alpha + 3.0).powf(nu / (1.0 - 3.0 * nu)),
            m0: integral_q / 4.0,
        };
        assert!((1.0 - p.beta - 2.0 * p.nu).abs() <= 1e-15);
        assert!(p.nu > 3.0 / 7.0 && p.nu < 0.5);
        Ok(p)
    }
}

/// Full derivation: builds the profile pipeline on the production grid to
/// obtain c₂ and the soliton integrals, then fills in the closed forms.
pub fn derived_constants(alpha: f64) -> Result<BlowupParameters> {
    if !(alpha > 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let field = soliton::SolitonField::standard().map_err(profile_solver::Error::from)?;
    let set = profile_solver::ProfileSet::build(&field, alpha)?;
    BlowupParameters::with_c2(alpha, set.c2, field.integral_q())
}
