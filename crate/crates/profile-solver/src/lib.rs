//! Profile corrections for the blowup ansatz: inversions of the
//! linearized operator 𝓛 with decay-class boundary conditions, the
//! forcing fields F₂, F₂*, F₃, Ω they feed, the compatibility constant
//! c₂, and the scalar identities tying everything together.

mod classes;
mod export;
mod forcing;
mod profiles;
mod set;

pub use classes::{outer_sup, DecayClass};
pub use export::{
    load_golden_constants, load_profile_csv, write_golden_constants, write_profile_csv,
    write_profile_header, GoldenConstants, GoldenEntry, GridMeta, ProfileHeader, ToleranceBlock,
};
pub use forcing::{build_F2_pair, build_F_and_Omega, solve_c2_and_A3, Forcings};
pub use profiles::{build_A1, build_A2_A2star, build_P, build_R, c1, kappa_alpha};
pub use set::{ClassifiedProfile, ProfileSet};

use numerics_core::{inner_product, BoundaryCondition, GridFunction};
use soliton::SolitonField;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alpha must exceed 1, got {0}")]
    AlphaOutOfRange(f64),
    #[error("far-field inconsistent: antiderivative reaches {0:.3e} at +L instead of 0")]
    FarField(f64),
    #[error("parity defect {0:.3e} signals inconsistent P or R")]
    Parity(f64),
    #[error("F not mean-compatible: antiderivative at +L is {0:.3e}")]
    MeanCompatible(f64),
    #[error("non-degeneracy failed: |(Omega, Q)| = {0:.3e}")]
    NonDegeneracy(f64),
    #[error("residual {0:.3e} after enforcing symmetry exceeds {1:.0e}")]
    Residual(f64, f64),
    #[error(transparent)]
    Numerics(#[from] numerics_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Solve 𝓛f = rhs on the soliton grid with the given endpoint values and
/// remove the kernel component, so that (f, Q′) = 0. Roundoff keeps the
/// discrete kernel level of the factorization above zero; the solve stays
/// backward-stable and the projection strips whatever the near-null
/// direction amplified.
#[allow(non_snake_case)]
pub fn solve_L(
    field: &SolitonField,
    rhs: &GridFunction,
    left: BoundaryCondition,
    right: BoundaryCondition,
) -> Result<GridFunction> {
    let potential = field.q().map(|q| 5.0 * q.powi(4));
    let f = numerics_core::solve_bvp(&potential, rhs, left, right)?;
    remove_kernel_component(field, &f)
}

/// f minus its (f, Q′)/(Q′, Q′) multiple of Q′.
pub fn remove_kernel_component(field: &SolitonField, f: &GridFunction) -> Result<GridFunction> {
    let dq = field.dq();
    let c = inner_product(f, dq)? / inner_product(dq, dq)?;
    Ok(f.add_scaled(-c, dq)?)
}

/// Sup norm over the points with x_min + margin ≤ y ≤ x_max − margin;
/// equation residuals are judged away from the endpoint rows.
pub(crate) fn interior_sup(f: &GridFunction, margin: f64) -> f64 {
    let grid = f.grid();
    let mut worst: f64 = 0.0;
    for (i, y) in grid.points().enumerate() {
        if y >= grid.x_min() + margin && y <= grid.x_max() - margin {
            worst = worst.max(f.values()[i].abs());
        }
    }
    worst
}

/// Pointwise y·f(y).
pub(crate) fn times_y(f: &GridFunction) -> GridFunction {
    let grid = f.grid();
    let mut out = f.clone();
    for (i, v) in out.values_mut().iter_mut().enumerate() {
        *v *= grid.point(i);
    }
    out
}

/// Σ cᵢ·fᵢ over matching grids.
pub(crate) fn combine(terms: &[(f64, &GridFunction)]) -> Result<GridFunction> {
    let mut out = GridFunction::zeros(terms[0].1.grid());
    for (c, f) in terms {
        out = out.add_scaled(*c, f)?;
    }
    Ok(out)
}
