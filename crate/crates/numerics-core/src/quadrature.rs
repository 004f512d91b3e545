use crate::grid::GridFunction;
use crate::{Error, Result};

/// Integral of f over its grid by composite Simpson's rule, O(h⁴).
///
/// Simpson needs an even number of intervals; when n−1 is odd the last three
/// intervals are closed with a Simpson 3/8 block so the order is preserved.
/// Accumulation is compensated (Kahan), keeping the roundoff near
/// eps·∫|f| independently of n; odd integrands on symmetric grids then
/// cancel far below the 1e−12·‖f‖_∞ budget.
pub fn quadrature(f: &GridFunction) -> Result<f64> {
    f.assert_finite()?;
    let v = f.values();
    let h = f.grid().h();
    let n = v.len();
    let intervals = n - 1;

    // Index one past the part handled by plain Simpson pairs.
    let simpson_end = if intervals % 2 == 0 { n - 1 } else { n - 4 };

    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut add = |sum: &mut f64, term: f64| {
        let y = term - comp;
        let t = *sum + y;
        comp = (t - *sum) - y;
        *sum = t;
    };
    let mut i = 0;
    while i < simpson_end {
        add(&mut sum, h / 3.0 * (v[i] + 4.0 * v[i + 1] + v[i + 2]));
        i += 2;
    }
    if intervals % 2 == 1 {
        let j = n - 4;
        add(&mut sum, 3.0 * h / 8.0 * (v[j] + 3.0 * v[j + 1] + 3.0 * v[j + 2] + v[j + 3]));
    }
    Ok(sum)
}

/// L² inner product ∫ f·g over the common grid.
pub fn inner_product(f: &GridFunction, g: &GridFunction) -> Result<f64> {
    quadrature(&f.zip_with(g, |a, b| a * b)?)
}

/// Weighted inner product ∫ f·g·w.
pub fn weighted_inner_product(f: &GridFunction, g: &GridFunction, w: &GridFunction) -> Result<f64> {
    let fg = f.zip_with(g, |a, b| a * b)?;
    quadrature(&fg.zip_with(w, |a, b| a * b)?)
}

/// Cumulative integral F(x_i) = ∫_{x_0}^{x_i} f, with F(x_0) = 0, O(h⁸).
///
/// Interior increments integrate the septic through f_{i−3}..f_{i+4} over
/// the single cell [x_i, x_{i+1}]; three one-sided septic closures handle
/// the cells at each end. The error density is smooth (≈ 6.9e−4·h⁸·f⁽⁸⁾),
/// so the derivative of F − ∫f is also O(h⁸), and the increments are
/// accumulated with compensation so the running sum does not pick up a
/// random-walk roundoff component.
pub fn cumulative_quadrature(f: &GridFunction) -> Result<GridFunction> {
    f.assert_finite()?;
    let v = f.values();
    let h = f.grid().h();
    let n = v.len();
    if n < 8 {
        return Err(Error::InvalidGrid("cumulative quadrature needs n >= 8".into()));
    }
    let s = h / 120960.0;
    // Each row integrates the septic through eight consecutive samples over
    // one cell; every weight row sums to 120960.
    let dot = |w: [f64; 8], a: &[f64]| -> f64 {
        w.iter().zip(a).map(|(wi, ai)| wi * ai).sum()
    };
    const HEAD0: [f64; 8] =
        [36799.0, 139849.0, -121797.0, 123133.0, -88547.0, 41499.0, -11351.0, 1375.0];
    const HEAD1: [f64; 8] =
        [-1375.0, 47799.0, 101349.0, -44797.0, 26883.0, -11547.0, 2999.0, -351.0];
    const HEAD2: [f64; 8] =
        [351.0, -4183.0, 57627.0, 81693.0, -20227.0, 7227.0, -1719.0, 191.0];

    let mut out = vec![0.0; n];
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut push = |sum: &mut f64, inc: f64| {
        let y = inc - comp;
        let t = *sum + y;
        comp = (t - *sum) - y;
        *sum = t;
    };
    push(&mut sum, s * dot(HEAD0, &v[..8]));
    out[1] = sum;
    push(&mut sum, s * dot(HEAD1, &v[..8]));
    out[2] = sum;
    push(&mut sum, s * dot(HEAD2, &v[..8]));
    out[3] = sum;
    for i in 3..n - 4 {
        let inc = -191.0 * (v[i - 3] + v[i + 4]) + 1879.0 * (v[i - 2] + v[i + 3])
            - 9531.0 * (v[i - 1] + v[i + 2])
            + 68323.0 * (v[i] + v[i + 1]);
        push(&mut sum, s * inc);
        out[i + 1] = sum;
    }
    // Mirrored closures: sample order reversed, so each rule integrates the
    // matching cell measured from the right end.
    let tail: Vec<f64> = v[n - 8..].iter().rev().copied().collect();
    push(&mut sum, s * dot(HEAD2, &tail));
    out[n - 3] = sum;
    push(&mut sum, s * dot(HEAD1, &tail));
    out[n - 2] = sum;
    push(&mut sum, s * dot(HEAD0, &tail));
    out[n - 1] = sum;

    GridFunction::new(f.grid(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use approx::assert_relative_eq;

    #[test]
    fn simpson_is_exact_on_cubics() {
        for n in [9, 10, 901, 1000] {
            let g = Grid::new(-1.0, 2.0, n).unwrap();
            let f = GridFunction::from_fn(g, |x| 2.0 * x * x * x - x * x + 5.0);
            // ∫_{-1}^{2} (2x³ − x² + 5) dx = 7.5 − 3 + 15 = 19.5
            assert_relative_eq!(quadrature(&f).unwrap(), 19.5, max_relative = 1e-13);
        }
    }

    #[test]
    fn simpson_fourth_order_on_smooth_integrand() {
        let exact = 1.0 - (-2.0_f64).exp();
        let err = |n: usize| {
            let g = Grid::new(0.0, 2.0, n).unwrap();
            let f = GridFunction::from_fn(g, |x| (-x).exp());
            (quadrature(&f).unwrap() - exact).abs()
        };
        let (e1, e2) = (err(41), err(81));
        let order = (e1 / e2).log2();
        assert!(order > 3.7, "observed order {order}");
    }

    #[test]
    fn odd_integrand_on_symmetric_grid_cancels() {
        let g = Grid::symmetric(10.0, 4097).unwrap();
        let f = GridFunction::from_fn(g, |x| x * (-x.abs()).exp());
        assert!(quadrature(&f).unwrap().abs() < 1e-14);
    }

    #[test]
    fn cumulative_matches_antiderivative() {
        let g = Grid::new(0.0, 3.0, 301).unwrap();
        let f = GridFunction::from_fn(g, |x| x.cos());
        let cum = cumulative_quadrature(&f).unwrap();
        for (i, x) in g.points().enumerate() {
            assert_relative_eq!(cum.values()[i], x.sin(), epsilon = 1e-9);
        }
    }

    #[test]
    fn cumulative_eighth_order() {
        let err = |n: usize| {
            let g = Grid::new(0.0, 2.0, n).unwrap();
            let f = GridFunction::from_fn(g, |x| 1.0 / (1.0 + x));
            let cum = cumulative_quadrature(&f).unwrap();
            (cum.values()[n - 1] - 3.0_f64.ln()).abs()
        };
        let (e1, e2) = (err(51), err(101));
        assert!((e1 / e2).log2() > 7.0, "observed order {}", (e1 / e2).log2());
    }

    #[test]
    fn cumulative_is_exact_on_septics() {
        let g = Grid::new(-1.0, 1.5, 11).unwrap();
        let f = GridFunction::from_fn(g, |x| x.powi(7) - 2.0 * x.powi(3) + x);
        let exact = |x: f64| x.powi(8) / 8.0 - x.powi(4) / 2.0 + x * x / 2.0;
        let cum = cumulative_quadrature(&f).unwrap();
        for (i, x) in g.points().enumerate() {
            assert_relative_eq!(cum.values()[i], exact(x) - exact(-1.0), epsilon = 1e-12);
        }
    }

    #[test]
    fn inner_product_symmetry() {
        let g = Grid::symmetric(5.0, 201).unwrap();
        let a = GridFunction::from_fn(g, |x| (-x * x).exp());
        let b = GridFunction::from_fn(g, |x| x.sin() + 1.0);
        assert_eq!(inner_product(&a, &b).unwrap(), inner_product(&b, &a).unwrap());
    }
}
