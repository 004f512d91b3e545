//! The formal parameter flow. Without the correction the system is
//! λ_s = (2α+1)λ^{3/2}σ^{α−1/2}, σ_s = λ; the corrected version replaces
//! the λ equation by λ_s/λ = −c₁λ^{1/2}σ^{α−1/2} − c₂λσ^{2α−1}, which
//! reduces to the first one when c₂ = 0 since −c₁ = 2α+1. Original time
//! rides along through τ_s = λ³.

use crate::{BlowupParameters, Error, ModulationState, Result};

/// Returns (λ_s, σ_s, τ_s) at the given state.
pub fn formal_field(
    state: &ModulationState,
    params: &BlowupParameters,
    with_c2: bool,
) -> Result<[f64; 3]> {
    let (lambda, sigma) = (state.lambda, state.sigma);
    if !(lambda > 0.0) {
        return Err(Error::Cone("lambda", lambda));
    }
    if !(sigma > 0.0) {
        return Err(Error::Cone("sigma", sigma));
    }
    let alpha = params.alpha;
    let mut log_rate = -params.c1 * lambda.sqrt() * sigma.powf(alpha - 0.5);
    if with_c2 {
        log_rate -= params.c2 * lambda * sigma.powf(2.0 * alpha - 1.0);
    }
    Ok([lambda * log_rate, lambda, lambda.powi(3)])
}
