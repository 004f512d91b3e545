//! The explicit solitary-wave profile Q(y) = (3 sech²(2y))^{1/4} for the
//! quintic gKdV equation, together with the scaling operators Λ_j, the
//! linearized operator 𝓛 = −∂² + 1 − 5Q⁴, the weighted solitonic norm and
//! the spectral checks (ground level −8, kernel Q′, coercivity probe).

mod field;
pub mod golden;
mod lambda;
mod spectrum;

pub use field::{eval_Q, SolitonField};
pub use lambda::{apply_Lambda, LambdaOperator};
pub use spectrum::{
    coercivity_probe, essential_gap_probe, smallest_eigenvalue_L, spectrum_L, CoercivityReport,
    EigenpairL,
};

use numerics_core::{derivative, inner_product, quadrature, GridFunction, Result};

/// 𝓛f = −f″ + f − 5Q⁴f on the soliton grid.
#[allow(non_snake_case)]
pub fn apply_L(field: &SolitonField, f: &GridFunction) -> Result<GridFunction> {
    f.same_grid(field.q())?;
    let d2 = derivative(f, 2)?;
    let q4 = field.q().map(|q| q.powi(4));
    let mut out = d2.scale(-1.0);
    for i in 0..f.grid().n() {
        out.values_mut()[i] += (1.0 - 5.0 * q4.values()[i]) * f.values()[i];
    }
    out.assert_finite()?;
    Ok(out)
}

/// Weighted norm (∫ f² e^{−|y|/10} dy)^{1/2}.
#[allow(non_snake_case)]
pub fn norm_L2sol(f: &GridFunction) -> Result<f64> {
    let w = f.zip_with(&GridFunction::from_fn(f.grid(), |y| (-y.abs() / 10.0).exp()), |a, b| {
        a * a * b
    })?;
    Ok(quadrature(&w)?.max(0.0).sqrt())
}

/// H¹ norm squared ∫(f² + f′²).
#[allow(non_snake_case)]
pub fn norm_H1_sq(f: &GridFunction) -> Result<f64> {
    let df = derivative(f, 1)?;
    Ok(inner_product(f, f)? + inner_product(&df, &df)?)
}
