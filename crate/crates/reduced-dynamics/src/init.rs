//! Initialization of the parameters at the blowup time T_n. σ(T_n)
//! solves a transcendental equation whose log coefficient is
//! c₂/(3α+1/2), and λ(T_n) is chosen so the corrected conserved quantity
//! g̃ vanishes. With c₂ = 0 both collapse to the self-similar closed
//! forms σ = (2αn)^{−1/(2α)}, λ = σ^{2α+1}.

use crate::{g_tilde, BlowupParameters, Error, ModulationState, Result};

/// T_n = (4α+3)^{−1} (2αn)^{−(4α+3)/(2α)}.
#[allow(non_snake_case)]
pub fn blowup_time_Tn(n: u64, params: &BlowupParameters) -> f64 {
    let a = params.alpha;
    (2.0 * a * n as f64).powf(-(4.0 * a + 3.0) / (2.0 * a)) / (4.0 * a + 3.0)
}

/// State at s = −n, τ = T_n, b = 0, with σ from the transcendental
/// equation (1/(2α))σ^{−2α} − (c₂/(3α+1/2)) log σ = n solved by
/// bisection then Newton polish, and λ from g̃ = 0.
#[allow(non_snake_case)]
pub fn init_at_Tn(n: u64, params: &BlowupParameters) -> Result<ModulationState> {
    let a = params.alpha;
    let c_log = params.c2 / (3.0 * a + 0.5);
    let target = n as f64;
    let f = |sigma: f64| sigma.powf(-2.0 * a) / (2.0 * a) - c_log * sigma.ln() - target;
    let df = |sigma: f64| -sigma.powf(-2.0 * a - 1.0) - c_log / sigma;

    // f → +∞ as σ → 0⁺ (the power beats the log); a sign change before
    // σ = 1 requires n to dominate the value there.
    let (mut lo, mut hi) = (1e-12, 1.0);
    if !(f(lo) > 0.0 && f(hi) < 0.0) {
        return Err(Error::Bracket);
    }
    while hi - lo > 1e-6 * lo.max(1e-3) {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut sigma = 0.5 * (lo + hi);
    for _ in 0..60 {
        let step = f(sigma) / df(sigma);
        sigma -= step;
        if step.abs() <= 1e-13 * sigma {
            break;
        }
    }

    let lambda_sqrt =
        sigma.powf(a + 0.5) - 0.5 * params.c2 / (3.0 * a + 0.5) * sigma.powf(3.0 * a + 0.5);
    if !(lambda_sqrt > 0.0) {
        return Err(Error::Cone("lambda", lambda_sqrt));
    }
    let state = ModulationState {
        s: -target,
        tau: blowup_time_Tn(n, params),
        lambda: lambda_sqrt * lambda_sqrt,
        sigma,
        b: 0.0,
    };
    state.validate()?;
    debug_assert!(g_tilde(&state, params).abs() < 1e-15);
    Ok(state)
}
