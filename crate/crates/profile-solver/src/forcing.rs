//! Forcing fields of the third-order expansion: F₂ and F₂* drive the
//! second-order corrections, F₃ and Ω fix the compatibility constant c₂,
//! and A₃ closes the hierarchy.

use numerics_core::{
    cumulative_quadrature, derivative, inner_product, BoundaryCondition, GridFunction,
};
use soliton::{apply_Lambda, SolitonField};

use crate::profiles::{c1, far_field_clamp, kappa_alpha};
use crate::{combine, solve_L, times_y, Error, Result};

/// The four forcing fields for a fixed α.
#[derive(Debug, Clone)]
pub struct Forcings {
    pub f2: GridFunction,
    pub f2star: GridFunction,
    pub f3: GridFunction,
    pub omega: GridFunction,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 1.0 {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// F₂ = c₁²(10(Q³A₁²)′ + Λ₁A₁) and F₂* = c₁(−yΛQ + 3A₁″ + 5Q⁴A₁).
/// Both are odd and decay on both sides, so their antiderivatives are
/// even and invertible.
#[allow(non_snake_case)]
pub fn build_F2_pair(
    field: &SolitonField,
    alpha: f64,
    a1: &GridFunction,
) -> Result<(GridFunction, GridFunction)> {
    check_alpha(alpha)?;
    let c = c1(alpha);
    let q = field.q();

    let q3_a1_sq = q.zip_with(a1, |qv, av| qv.powi(3) * av * av)?;
    let f2 = combine(&[
        (10.0 * c * c, &derivative(&q3_a1_sq, 1)?),
        (c * c, &apply_Lambda(1, a1)?),
    ])?;

    let y_lam_q = times_y(&field.lambda_q());
    let q4_a1 = q.zip_with(a1, |qv, av| qv.powi(4) * av)?;
    let f2star = combine(&[
        (-c, &y_lam_q),
        (3.0 * c, &derivative(a1, 2)?),
        (5.0 * c, &q4_a1),
    ])?;
    // Both fields are odd and exponentially decaying; enforce the parity
    // and the tail class exactly.
    let f2 = far_field_clamp(&f2.symmetrize(false), Some(0.0), Some(0.0));
    let f2star = far_field_clamp(&f2star.symmetrize(false), Some(0.0), Some(0.0));
    Ok((f2, f2star))
}

/// All four forcing fields. F₂ and F₂* depend only on A₁; F₃ needs the
/// second-order pair, and Ω needs P. The c₂-independent split is what
/// lets the compatibility constant be solved for afterwards.
#[allow(non_snake_case)]
pub fn build_F_and_Omega(
    field: &SolitonField,
    alpha: f64,
    p: &GridFunction,
    a1: &GridFunction,
    a2: &GridFunction,
    a2star: &GridFunction,
) -> Result<Forcings> {
    check_alpha(alpha)?;
    let c = c1(alpha);
    let am = alpha - 0.5;
    let am3 = alpha - 1.5;
    let q = field.q();
    let lam_q = field.lambda_q();
    let (f2, f2star) = build_F2_pair(field, alpha, a1)?;

    // F₃, term by term. The quadratic weight multiplies ΛQ pointwise.
    let kappa = kappa_alpha(alpha);
    let grid = q.grid();
    let weighted_lam_q = {
        let mut g = lam_q.clone();
        for (i, v) in g.values_mut().iter_mut().enumerate() {
            let y = grid.point(i);
            *v *= kappa + 0.5 * am * am3 * y * y;
        }
        g
    };
    let y_lambda1_a1 = times_y(&apply_Lambda(1, a1)?);
    let q2_a1_cubed = q.zip_with(a1, |qv, av| qv * qv * av.powi(3))?;
    let q3_a1_a2 = three_product(q, 3, a1, a2)?;
    let q3_a1_sq = q.zip_with(a1, |qv, av| qv.powi(3) * av * av)?;
    let q4_a2 = q.zip_with(a2, |qv, av| qv.powi(4) * av)?;
    let q3_a1_a2star = three_product(q, 3, a1, a2star)?;
    let q4_a2star = q.zip_with(a2star, |qv, av| qv.powi(4) * av)?;
    let f3 = combine(&[
        (c, &weighted_lam_q),
        (-c * c * am, &y_lambda1_a1),
        (10.0 * c.powi(3), &derivative(&q2_a1_cubed, 1)?),
        (20.0 * c, &derivative(&q3_a1_a2, 1)?),
        (6.0 * am, &derivative(a2, 2)?),
        (20.0 * c * c * am, &q3_a1_sq),
        (10.0 * am, &q4_a2),
        (20.0 * c * am, &derivative(&q3_a1_a2star, 1)?),
        (3.0 * c * am * am3, &derivative(a1, 1)?),
        (3.0 * am * am3, &derivative(a2star, 2)?),
        (5.0 * am * am3, &q4_a2star),
        (c, &apply_Lambda(2, a2)?),
        (c * am, &apply_Lambda(3, a2star)?),
    ])?;

    // Ω = −2(α−½)yΛQ + 20c₁(Q³A₁P)′ + 2(α−½)(3P″+5Q⁴P) + c₁Λ₁A₁ + c₁Λ₂P.
    let q3_a1_p = three_product(q, 3, a1, p)?;
    let q4_p = q.zip_with(p, |qv, pv| qv.powi(4) * pv)?;
    let omega = combine(&[
        (-2.0 * am, &times_y(&lam_q)),
        (20.0 * c, &derivative(&q3_a1_p, 1)?),
        (6.0 * am, &derivative(p, 2)?),
        (10.0 * am, &q4_p),
        (c, &apply_Lambda(1, a1)?),
        (c, &apply_Lambda(2, p)?),
    ])?;

    // F₃ is even and decaying; Ω settles to (2α+1)m₀ on the left and
    // decays on the right. Impose the classes exactly.
    let f3 = far_field_clamp(&f3.symmetrize(true), Some(0.0), Some(0.0));
    let omega = far_field_clamp(&omega, Some(-c * field.m0()), Some(0.0));

    Ok(Forcings { f2, f2star, f3, omega })
}

/// Pointwise Q^k · a · b.
fn three_product(
    q: &GridFunction,
    k: i32,
    a: &GridFunction,
    b: &GridFunction,
) -> Result<GridFunction> {
    let qa = q.zip_with(a, |qv, av| qv.powi(k) * av)?;
    Ok(qa.zip_with(b, |qav, bv| qav * bv)?)
}

/// c₂ = −(F₃,Q)/(Ω,Q), then A₃ with (𝓛A₃)′ = c₂Ω + F₃. The antiderivative
/// anchored at +∞ grows linearly to the left; its orthogonality to Q′
/// is exactly the (c₂Ω + F₃, Q) = 0 choice, so the inversion is solvable
/// and lands in the linear-left decaying-right class.
#[allow(non_snake_case)]
pub fn solve_c2_and_A3(
    field: &SolitonField,
    f3: &GridFunction,
    omega: &GridFunction,
) -> Result<(f64, GridFunction)> {
    let q = field.q();
    let omega_q = inner_product(omega, q)?;
    if omega_q.abs() < 1e-4 {
        return Err(Error::NonDegeneracy(omega_q.abs()));
    }
    let c2 = -inner_product(f3, q)? / omega_q;
    let s = f3.add_scaled(c2, omega)?;
    let cum = cumulative_quadrature(&s)?;
    let total = *cum.values().last().expect("grid is non-empty");
    let g = cum.map(|v| v - total);
    // Left boundary value from the two-term far-field inversion of
    // −∂²+1 on the slowly varying antiderivative: f ≈ g + g″, g″ = S′.
    let s1 = derivative(&s, 1)?;
    let left = g.values()[0] + s1.values()[0];
    let a3 = solve_L(
        field,
        &g,
        BoundaryCondition::Dirichlet(left),
        BoundaryCondition::Dirichlet(0.0),
    )?;
    Ok((c2, a3))
}
