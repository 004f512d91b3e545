use crate::{Error, Result};

/// One classical RK4 step of state' = field(s, state); local error O(ds⁵).
/// Negative ds integrates backwards.
pub fn ode_step(
    state: &[f64],
    field: &mut impl FnMut(f64, &[f64]) -> Vec<f64>,
    s: f64,
    ds: f64,
) -> Result<Vec<f64>> {
    assert!(ds != 0.0, "ode_step needs a nonzero step");
    let n = state.len();
    let check = |k: &[f64]| -> Result<()> {
        debug_assert_eq!(k.len(), n);
        match k.iter().position(|v| !v.is_finite()) {
            Some(i) => Err(Error::NonFiniteComponent(i)),
            None => Ok(()),
        }
    };
    let shift = |base: &[f64], c: f64, k: &[f64]| -> Vec<f64> {
        base.iter().zip(k).map(|(b, ki)| b + c * ki).collect()
    };

    let k1 = field(s, state);
    check(&k1)?;
    let k2 = field(s + 0.5 * ds, &shift(state, 0.5 * ds, &k1));
    check(&k2)?;
    let k3 = field(s + 0.5 * ds, &shift(state, 0.5 * ds, &k2));
    check(&k3)?;
    let k4 = field(s + ds, &shift(state, ds, &k3));
    check(&k4)?;

    Ok((0..n)
        .map(|i| state[i] + ds / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect())
}

/// Bound shape Cbound·((∫₀ᵗ f)² + t^{κ₂}) for comparing measured functionals
/// on (0, 1] against their expected growth.
pub fn gronwall_bound(f_integral: f64, kappa2: f64, t: f64, c_bound: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfRange(format!("t = {t} outside [0,1]")));
    }
    assert!(f_integral >= 0.0 && kappa2 >= 0.0 && c_bound >= 0.0);
    Ok(c_bound * (f_integral * f_integral + t.powf(kappa2)))
}
