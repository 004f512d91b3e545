use numerics_core::{quadrature, Error, Grid, GridFunction, Result};

/// The soliton Q with its first two derivatives and the integrals every
/// downstream identity needs.
///
/// dQ and d2Q are the analytic expressions Q′ = −tanh(2y)·Q and
/// Q″ = Q − Q⁵ (the profile equation); finite-difference cross-checks live
/// in the tests, so the two derivative routes stay independent.
#[derive(Debug, Clone)]
pub struct SolitonField {
    grid: Grid,
    q: GridFunction,
    dq: GridFunction,
    d2q: GridFunction,
    integral_q: f64,
    integral_q2: f64,
    m0: f64,
}

/// Pointwise soliton profile (3 sech²(2y))^{1/4}.
pub fn q_profile(y: f64) -> f64 {
    (3.0 / (2.0 * y).cosh().powi(2)).powf(0.25)
}

/// Build the soliton field on a symmetric grid.
#[allow(non_snake_case)]
pub fn eval_Q(grid: Grid) -> Result<SolitonField> {
    if !grid.is_symmetric() {
        return Err(Error::InvalidGrid("soliton grid must be symmetric about 0".into()));
    }
    let q = GridFunction::from_fn(grid, q_profile);
    let dq = GridFunction::from_fn(grid, |y| -(2.0 * y).tanh() * q_profile(y));
    let d2q = q.map(|v| v - v.powi(5));
    let integral_q = quadrature(&q)?;
    let q2 = q.map(|v| v * v);
    let integral_q2 = quadrature(&q2)?;
    Ok(SolitonField { grid, q, dq, d2q, integral_q, integral_q2, m0: integral_q / 4.0 })
}

impl SolitonField {
    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn q(&self) -> &GridFunction {
        &self.q
    }

    pub fn dq(&self) -> &GridFunction {
        &self.dq
    }

    pub fn d2q(&self) -> &GridFunction {
        &self.d2q
    }

    pub fn integral_q(&self) -> f64 {
        self.integral_q
    }

    pub fn integral_q2(&self) -> f64 {
        self.integral_q2
    }

    pub fn m0(&self) -> f64 {
        self.m0
    }

    /// ΛQ = Q/2 + y·Q′ from the analytic derivative.
    pub fn lambda_q(&self) -> GridFunction {
        let mut out = self.q.scale(0.5);
        for (i, y) in self.grid.points().enumerate() {
            out.values_mut()[i] += y * self.dq.values()[i];
        }
        out
    }

    /// Default production grid: [−40, 40] with h = 0.005. The Q tails sit
    /// below 1e−17 at the boundary, so no integral feels the truncation.
    pub fn default_grid() -> Grid {
        Grid::symmetric(40.0, 16001).expect("static grid parameters are valid")
    }

    pub fn standard() -> Result<SolitonField> {
        eval_Q(Self::default_grid())
    }
}
