/// Smooth transition families built from the exp(−1/t) bump glue, with the
/// plateau values clamped so sampling the flat regions is bit-exact.
///
/// chi rises 0→1 across [1, 2]; chi_L rises 0→1 across [−1, −1/2];
/// chi_R falls 1→0 across [1/2, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutoffKind {
    Chi,
    ChiL,
    ChiR,
}

#[derive(Debug, Clone, Copy)]
pub struct CutoffFamily {
    kind: CutoffKind,
    /// Transition window [a, b]; outside it the value is exactly 0 or 1.
    a: f64,
    b: f64,
    /// +1 rises across the window, −1 falls.
    sign: f64,
}

/// e^{−1/t} for t > 0, else 0: the classic smooth step ingredient.
fn glue(t: f64) -> f64 {
    if t > 0.0 {
        (-1.0 / t).exp()
    } else {
        0.0
    }
}

/// Smooth monotone step: 0 for t ≤ 0, 1 for t ≥ 1.
fn smooth_step(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else if t >= 1.0 {
        1.0
    } else {
        let g0 = glue(t);
        g0 / (g0 + glue(1.0 - t))
    }
}

impl CutoffFamily {
    pub fn new(kind: CutoffKind) -> Self {
        match kind {
            CutoffKind::Chi => Self { kind, a: 1.0, b: 2.0, sign: 1.0 },
            CutoffKind::ChiL => Self { kind, a: -1.0, b: -0.5, sign: 1.0 },
            CutoffKind::ChiR => Self { kind, a: 0.5, b: 1.0, sign: -1.0 },
        }
    }

    pub fn chi() -> Self {
        Self::new(CutoffKind::Chi)
    }

    pub fn chi_l() -> Self {
        Self::new(CutoffKind::ChiL)
    }

    pub fn chi_r() -> Self {
        Self::new(CutoffKind::ChiR)
    }

    pub fn kind(&self) -> CutoffKind {
        self.kind
    }

    pub fn eval(&self, y: f64) -> f64 {
        let t = (y - self.a) / (self.b - self.a);
        if self.sign > 0.0 {
            smooth_step(t)
        } else {
            1.0 - smooth_step(t)
        }
    }

    /// m-th derivative by a centered difference confined to the transition
    /// window; exact zero on the plateaus.
    pub fn eval_derivative(&self, y: f64, m: usize) -> f64 {
        assert!((1..=4).contains(&m));
        // The plateaus are flat to every order; clamp their derivatives
        // rather than differencing across the joint.
        let margin = 1e-3 * (self.b - self.a);
        if y <= self.a - margin || y >= self.b + margin {
            return 0.0;
        }
        let e = 1e-3 * (self.b - self.a);
        let f = |x: f64| self.eval(x);
        match m {
            1 => (8.0 * (f(y + e) - f(y - e)) - (f(y + 2.0 * e) - f(y - 2.0 * e))) / (12.0 * e),
            2 => {
                (16.0 * (f(y + e) + f(y - e)) - 30.0 * f(y) - (f(y + 2.0 * e) + f(y - 2.0 * e)))
                    / (12.0 * e * e)
            }
            3 => {
                (f(y + 3.0 * e) - 8.0 * f(y + 2.0 * e) + 13.0 * f(y + e) - 13.0 * f(y - e)
                    + 8.0 * f(y - 2.0 * e)
                    - f(y - 3.0 * e))
                    / (8.0 * e * e * e)
            }
            _ => {
                (-(f(y + 3.0 * e) + f(y - 3.0 * e)) + 12.0 * (f(y + 2.0 * e) + f(y - 2.0 * e))
                    - 39.0 * (f(y + e) + f(y - e))
                    + 56.0 * f(y))
                    / (6.0 * e.powi(4))
            }
        }
    }

    /// Transition window endpoints (a, b).
    pub fn window(&self) -> (f64, f64) {
        (self.a, self.b)
    }
}
