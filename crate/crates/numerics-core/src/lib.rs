//! Shared numerical substrate for the gKdV blowup laboratory.
//!
//! Everything downstream (soliton identities, profile inversions, the
//! background residue, modulation ODEs, the pseudo-spectral solver) runs on
//! the primitives defined here: uniform grids with sampled real fields,
//! composite quadrature, order-4 finite differences, banded boundary-value
//! solves, explicit Runge–Kutta stepping, smooth cutoff functions, and the
//! differential-inequality bound used by the weighted-energy tests.
//!
//! All types are immutable after construction and operations are pure
//! functions, so values can be shared freely across threads.

mod banded;
mod bvp;
mod cutoff;
mod derivative;
mod eigen;
mod grid;
mod interp;
mod ode;
mod quadrature;

pub use banded::{BandedLu, BandedMatrix};
pub use bvp::{solve_bvp, BoundaryCondition};
pub use cutoff::{CutoffFamily, CutoffKind};
pub use derivative::{derivative, fd_weights};
pub use eigen::{constrained_min_eig, smallest_eigenpairs, ConstrainedEig};
pub use grid::{Grid, GridFunction};
pub use interp::Interpolant;
pub use ode::{gronwall_bound, ode_step};
pub use quadrature::{cumulative_quadrature, inner_product, quadrature, weighted_inner_product};

/// Numerical tolerances shared by every verification suite.
///
/// Acceptance checks read these from one place so that a run is fully
/// described by its configuration; the defaults are the values the shipped
/// test suites are calibrated against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative interior residual allowed for a linear boundary-value solve.
    pub linear_residual: f64,
    /// Absolute tolerance for scalar identities such as (P,Q) = m0^2.
    pub identity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { linear_residual: 1e-8, identity: 1e-6 }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("non-finite field")]
    NonFiniteField,
    #[error("non-finite vector field component {0}")]
    NonFiniteComponent(usize),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("derivative order {0} outside 1..=4")]
    DerivativeOrder(usize),
    #[error("operator not invertible under given boundary conditions")]
    NotInvertible,
    #[error("eigen iteration did not converge after {0} iterations")]
    EigenNoConvergence(usize),
    #[error("argument outside admissible range: {0}")]
    OutOfRange(String),
    #[error("interpolation point {0} outside grid")]
    OutsideGrid(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
