//! Trajectory CSV and fitted-summary JSON artifacts.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::{b_decay_model, g, g_tilde, Result, Trajectory};

/// Fitted exponents and asymptotic-law errors of one integration run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReducedSummary {
    pub alpha: f64,
    pub nu: f64,
    pub nu_fit: f64,
    pub b_exponent: f64,
    pub b_exponent_closed: f64,
    pub sigma_rel_error: f64,
    pub lambda_rel_error: f64,
    pub tau_rel_error: f64,
    pub g_drift: f64,
}

impl ReducedSummary {
    /// Measures the trajectory at its final state. The b exponent comes
    /// from a separate unit-b₀ run over the same s range.
    pub fn measure(traj: &Trajectory) -> Result<Self> {
        let p = traj.params;
        let errs = traj.asymptotic_errors(traj.last());
        let decay = b_decay_model(1.0, traj.first().s, traj.last().s, &p)?;
        Ok(ReducedSummary {
            alpha: p.alpha,
            nu: p.nu,
            nu_fit: traj.nu_fit(),
            b_exponent: decay.fitted_exponent,
            b_exponent_closed: (2.0 * p.alpha + 1.0) / p.alpha,
            sigma_rel_error: errs.sigma_rel,
            lambda_rel_error: errs.lambda_rel,
            tau_rel_error: errs.tau_rel,
            g_drift: traj.g_drift(),
        })
    }
}

/// Columns: s, tau, lambda, sigma, b, g, g_tilde.
pub fn write_trajectory_csv(traj: &Trajectory, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["s", "tau", "lambda", "sigma", "b", "g", "g_tilde"])?;
    for st in &traj.states {
        w.serialize((
            st.s,
            st.tau,
            st.lambda,
            st.sigma,
            st.b,
            g(st, &traj.params),
            g_tilde(st, &traj.params),
        ))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary_json(summary: &ReducedSummary, path: &Path) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(summary)?)?;
    Ok(())
}
