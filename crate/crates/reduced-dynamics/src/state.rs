//! Modulation state at one rescaled time s. The admissible cone keeps
//! λ, τ, σ positive and s negative throughout integration.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulationState {
    pub s: f64,
    pub tau: f64,
    pub lambda: f64,
    pub sigma: f64,
    pub b: f64,
}

impl ModulationState {
    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0) {
            return Err(Error::Cone("lambda", self.lambda));
        }
        if !(self.sigma > 0.0) {
            return Err(Error::Cone("sigma", self.sigma));
        }
        if !(self.tau > 0.0) {
            return Err(Error::Cone("tau", self.tau));
        }
        if !(self.s < 0.0) {
            return Err(Error::Cone("s", self.s));
        }
        Ok(())
    }
}
