//! The reduced modulation dynamics behind the t^{−ν} blowup rate: the
//! derived constants ν, β, κ_τ, κ_σ, κ_λ, c_α, λ₀, the formal (λ, σ)
//! flow with and without the c₂ correction, its conserved quantities,
//! the b decay model, and the initialization at the blowup times T_n.

mod decay;
mod export;
mod field;
mod init;
mod integrate;
mod params;
mod state;

pub use decay::{b_decay_model, BDecayReport};
pub use export::{write_summary_json, write_trajectory_csv, ReducedSummary};
pub use field::formal_field;
pub use init::init_at_Tn;
pub use integrate::{g, g_tilde, integrate, AsymptoticErrors, Trajectory};
pub use params::{derived_constants, BlowupParameters};
pub use state::ModulationState;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alpha must exceed 1, got {0}")]
    AlphaOutOfRange(f64),
    #[error("state left the admissible cone: {0} = {1:.3e}")]
    Cone(&'static str, f64),
    #[error("n too small: sigma equation has no root in (0, 1)")]
    Bracket,
    #[error("step scale must lie in (0, 1), got {0}")]
    StepScale(f64),
    #[error(transparent)]
    Profile(#[from] profile_solver::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
