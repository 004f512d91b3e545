use numerics_core::{derivative, GridFunction, Result};

/// Scaling generator Λ_j f = ((1−j)/2)·f + y·f′; Λ = Λ₀ generates the
/// L²-critical scaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaOperator {
    pub j: usize,
}

impl LambdaOperator {
    pub fn new(j: usize) -> Self {
        Self { j }
    }

    pub fn coefficient(&self) -> f64 {
        (1.0 - self.j as f64) / 2.0
    }

    pub fn apply(&self, f: &GridFunction) -> Result<GridFunction> {
        let df = derivative(f, 1)?;
        let c = self.coefficient();
        let mut out = f.scale(c);
        for (i, y) in f.grid().points().enumerate() {
            out.values_mut()[i] += y * df.values()[i];
        }
        out.assert_finite()?;
        Ok(out)
    }
}

/// Λ_j f with the finite-difference derivative.
#[allow(non_snake_case)]
pub fn apply_Lambda(j: usize, f: &GridFunction) -> Result<GridFunction> {
    LambdaOperator::new(j).apply(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::SolitonField;
    use numerics_core::{inner_product, Grid};

    #[test]
    fn lambda1_is_pure_scaling_term() {
        // (1−1)/2 = 0, so Λ₁f = y·f′; on f = y² that is 2y².
        let g = Grid::symmetric(5.0, 1001).unwrap();
        let f = GridFunction::from_fn(g, |y| y * y);
        let lf = apply_Lambda(1, &f).unwrap();
        for (v, y) in lf.values().iter().zip(g.points()) {
            if y.abs() < 4.5 {
                assert!((v - 2.0 * y * y).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn q_is_orthogonal_to_lambda_q() {
        // (Q, ΛQ) = (1/2)d/dλ‖λ^{1/2}Q(λy)‖² at λ=1 = 0 by criticality.
        let f = SolitonField::standard().unwrap();
        let lq = apply_Lambda(0, f.q()).unwrap();
        let ip = inner_product(f.q(), &lq).unwrap();
        assert!(ip.abs() < 1e-8, "(Q, ΛQ) = {ip:.3e}");
    }

    #[test]
    fn lambda_q_analytic_route_matches() {
        let f = SolitonField::standard().unwrap();
        let via_fd = apply_Lambda(0, f.q()).unwrap();
        let analytic = f.lambda_q();
        let mut worst = 0.0_f64;
        for (a, b) in via_fd.values().iter().zip(analytic.values()) {
            worst = worst.max((a - b).abs());
        }
        assert!(worst < 1e-7, "ΛQ route mismatch {worst:.3e}");
    }

    #[test]
    fn lambda3_maps_linear_growth_to_bounded() {
        // f = y/(1+e^y) grows linearly to the left and decays to the right;
        // Λ₃f = −f + y f′ = −y²e^y/(1+e^y)² decays on both ends, so the
        // sample exhibits the class mapping (linear-left inputs to
        // decaying outputs).
        let g = Grid::symmetric(30.0, 6001).unwrap();
        let f = GridFunction::from_fn(g, |y| y / (1.0 + y.exp()));
        let l3 = apply_Lambda(3, &f).unwrap();
        for (v, y) in l3.values().iter().zip(g.points()) {
            if y.abs() > 10.0 {
                assert!(v.abs() < 5.0 * (-y.abs() / 2.0).exp(), "slow tail at y = {y}");
            }
            let exact = -y * y * y.exp() / (1.0 + y.exp()).powi(2);
            if y < 25.0 {
                assert!((v - exact).abs() < 1e-7, "Λ₃ defect at y = {y}");
            }
        }
    }
}
