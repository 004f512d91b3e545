//! Log-stepped RK4 integration of the parameter flow. Every quantity is
//! a power law in |s|, so the step is ds = step_scale·|s| in the travel
//! direction; relative accuracy is then uniform across decades.

use crate::{formal_field, BlowupParameters, Error, ModulationState, Result};

/// g = λ^{1/2} − σ^{α+1/2}; conserved exactly by the uncorrected flow.
pub fn g(state: &ModulationState, params: &BlowupParameters) -> f64 {
    state.lambda.sqrt() - state.sigma.powf(params.alpha + 0.5)
}

/// g̃ = g + (c₂/2)(3α+1/2)^{−1} σ^{3α+1/2}; the corrected flow keeps it
/// near zero with a drift two and a half orders below the leading terms.
pub fn g_tilde(state: &ModulationState, params: &BlowupParameters) -> f64 {
    g(state, params)
        + 0.5 * params.c2 / (3.0 * params.alpha + 0.5)
            * state.sigma.powf(3.0 * params.alpha + 0.5)
}

#[derive(Debug, Clone, Copy)]
pub struct AsymptoticErrors {
    /// |σ/(κ_σ|s|^{−1/(2α)}) − 1|.
    pub sigma_rel: f64,
    /// |λ/(κ_λ|s|^{−(2α+1)/(2α)}) − 1|.
    pub lambda_rel: f64,
    /// |(4α+3)τ − (2α|s|)^{−(4α+3)/(2α)}| / τ.
    pub tau_rel: f64,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub params: BlowupParameters,
    pub with_c2: bool,
    pub states: Vec<ModulationState>,
}

impl Trajectory {
    pub fn first(&self) -> &ModulationState {
        self.states.first().expect("trajectory never empty")
    }

    pub fn last(&self) -> &ModulationState {
        self.states.last().expect("trajectory never empty")
    }

    /// Largest |g(s) − g(s₀)| along the trajectory.
    pub fn g_drift(&self) -> f64 {
        let g0 = g(self.first(), &self.params);
        self.states
            .iter()
            .map(|st| (g(st, &self.params) - g0).abs())
            .fold(0.0, f64::max)
    }

    pub fn asymptotic_errors(&self, state: &ModulationState) -> AsymptoticErrors {
        let p = &self.params;
        let a = p.alpha;
        let abs_s = -state.s;
        AsymptoticErrors {
            sigma_rel: (state.sigma / (p.kappa_sigma * abs_s.powf(-1.0 / (2.0 * a))) - 1.0).abs(),
            lambda_rel: (state.lambda
                / (p.kappa_lambda * abs_s.powf(-(2.0 * a + 1.0) / (2.0 * a)))
                - 1.0)
                .abs(),
            tau_rel: ((4.0 * a + 3.0) * state.tau
                - (2.0 * a * abs_s).powf(-(4.0 * a + 3.0) / (2.0 * a)))
            .abs()
                / state.tau,
        }
    }

    /// Least-squares slope of log λ against log τ. On the self-similar
    /// locus λ = (4α+3)^ν τ^ν, so the slope estimates ν.
    pub fn nu_fit(&self) -> f64 {
        fit_slope(self.states.iter().map(|st| (st.tau.ln(), st.lambda.ln())))
    }
}

/// Least-squares slope of y against x.
pub(crate) fn fit_slope(points: impl Iterator<Item = (f64, f64)>) -> f64 {
    let pts: Vec<(f64, f64)> = points.collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in pts {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}

/// Integrate from state0 to s = s_end (either direction). `step_scale` is
/// the relative step ds/|s|; the final step is clamped to land exactly on
/// s_end. b rides along with the homogeneous law b_s = −((2α+1)/α)s^{−1}b.
pub fn integrate(
    state0: &ModulationState,
    params: &BlowupParameters,
    s_end: f64,
    step_scale: f64,
    with_c2: bool,
) -> Result<Trajectory> {
    state0.validate()?;
    if !(s_end < 0.0) {
        return Err(Error::Cone("s_end", s_end));
    }
    if !(step_scale > 0.0 && step_scale < 1.0) {
        return Err(Error::StepScale(step_scale));
    }
    let direction = (s_end - state0.s).signum();
    let mut states = vec![*state0];
    let mut st = *state0;
    while (s_end - st.s) * direction > 0.0 {
        let mut ds = direction * step_scale * st.s.abs();
        if (st.s + ds - s_end) * direction > 0.0 {
            ds = s_end - st.s;
        }
        st = rk4_step(&st, params, ds, with_c2)?;
        st.validate()?;
        states.push(st);
    }
    Ok(Trajectory { params: *params, with_c2, states })
}

fn rk4_step(
    st: &ModulationState,
    params: &BlowupParameters,
    ds: f64,
    with_c2: bool,
) -> Result<ModulationState> {
    let k1 = slope(st, params, with_c2)?;
    let k2 = slope(&advance(st, 0.5 * ds, &k1), params, with_c2)?;
    let k3 = slope(&advance(st, 0.5 * ds, &k2), params, with_c2)?;
    let k4 = slope(&advance(st, ds, &k3), params, with_c2)?;
    let mut k = [0.0; 4];
    for i in 0..4 {
        k[i] = (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) / 6.0;
    }
    Ok(advance(st, ds, &k))
}

/// Extended derivative (λ_s, σ_s, τ_s, b_s).
fn slope(st: &ModulationState, params: &BlowupParameters, with_c2: bool) -> Result<[f64; 4]> {
    let [lambda_s, sigma_s, tau_s] = formal_field(st, params, with_c2)?;
    let b_s = -(2.0 * params.alpha + 1.0) / params.alpha * st.b / st.s;
    Ok([lambda_s, sigma_s, tau_s, b_s])
}

fn advance(st: &ModulationState, ds: f64, k: &[f64; 4]) -> ModulationState {
    ModulationState {
        s: st.s + ds,
        lambda: st.lambda + ds * k[0],
        sigma: st.sigma + ds * k[1],
        tau: st.tau + ds * k[2],
        b: st.b + ds * k[3],
    }
}
