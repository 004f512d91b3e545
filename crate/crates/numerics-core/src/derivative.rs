use crate::grid::GridFunction;
use crate::{Error, Result};

/// Finite-difference weights (Fornberg recursion).
///
/// Returns weights w such that f^(m)(z) ≈ Σ_k w[k]·f(x[k]) for the nodes `x`,
/// exact on polynomials of degree x.len()−1.
pub fn fd_weights(z: f64, x: &[f64], m: usize) -> Vec<f64> {
    let n = x.len();
    assert!(n > m, "need more nodes than the derivative order");
    // c[j][k]: weight of node j for derivative order k.
    let mut c = vec![vec![0.0; m + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

/// Stencil width used for an interior derivative of order m: O(h⁸) for
/// first and second derivatives, O(h⁴) for third and fourth.
pub(crate) fn interior_width(m: usize) -> usize {
    if m <= 2 {
        9
    } else {
        7
    }
}

/// One-sided stencil width matching the interior order at the boundary.
/// Wider one-sided rows amplify roundoff by Σ|w|·h^{−m}, so the higher
/// order is only worth it where the interior is O(h⁸) too.
pub(crate) fn boundary_width(m: usize) -> usize {
    if m <= 2 {
        m + 8
    } else {
        m + 4
    }
}

/// m-th derivative of f on its grid, m ∈ 1..=4: eighth-order accurate for
/// m ≤ 2 and fourth-order for m ∈ {3, 4}, including one-sided boundary
/// closures of the same order.
pub fn derivative(f: &GridFunction, m: usize) -> Result<GridFunction> {
    if !(1..=4).contains(&m) {
        return Err(Error::DerivativeOrder(m));
    }
    f.assert_finite()?;
    let n = f.grid().n();
    let h = f.grid().h();
    let wi = interior_width(m);
    let wb = boundary_width(m).max(wi);
    if n < wb {
        return Err(Error::InvalidGrid(format!("grid too small for order-{m} derivative")));
    }
    let v = f.values();
    let scale = h.powi(-(m as i32));

    // Normalized nodes 0..w−1; one weight row per evaluation offset.
    let nodes_i: Vec<f64> = (0..wi).map(|k| k as f64).collect();
    let nodes_b: Vec<f64> = (0..wb).map(|k| k as f64).collect();
    let half = wi / 2;
    let interior = fd_weights(half as f64, &nodes_i, m);

    let mut out = vec![0.0; n];
    for i in 0..n {
        if i >= half && i + half < n {
            let j0 = i - half;
            let mut acc = 0.0;
            for k in 0..wi {
                acc += interior[k] * v[j0 + k];
            }
            out[i] = acc * scale;
        } else {
            // Boundary point: widen the window and evaluate off-center.
            let j0 = if i < half { 0 } else { n - wb };
            let w = fd_weights((i - j0) as f64, &nodes_b, m);
            let mut acc = 0.0;
            for k in 0..wb {
                acc += w[k] * v[j0 + k];
            }
            out[i] = acc * scale;
        }
    }
    GridFunction::new(f.grid(), out)
}
