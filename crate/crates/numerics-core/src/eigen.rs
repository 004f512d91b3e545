use crate::banded::{BandedLu, BandedMatrix};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Result of a constrained minimal-eigenvalue computation.
#[derive(Debug, Clone)]
pub struct ConstrainedEig {
    pub value: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Orthonormalize the constraint set (modified Gram–Schmidt); near-dependent
/// directions are rejected because a rank-deficient border makes the
/// bordered solve meaningless.
fn orthonormal_basis(constraints: &[Vec<f64>], n: usize) -> Result<Vec<Vec<f64>>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(constraints.len());
    for c in constraints {
        if c.len() != n {
            return Err(Error::GridMismatch("constraint length differs from matrix size".into()));
        }
        let mut v = c.clone();
        let original = norm(&v).max(1e-300);
        for b in &basis {
            let p = dot(&v, b);
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi -= p * bi;
            }
        }
        let r = norm(&v);
        if r < 1e-10 * original {
            return Err(Error::OutOfRange("dependent constraint set".into()));
        }
        for vi in v.iter_mut() {
            *vi /= r;
        }
        basis.push(v);
    }
    Ok(basis)
}

fn project_out(v: &mut [f64], basis: &[Vec<f64>]) {
    for b in basis {
        let p = dot(v, b);
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi -= p * bi;
        }
    }
}

/// One bordered inverse-iteration sweep: w = (A − σ)⁻¹(v − Cμ) with μ chosen
/// so that Cᵀw = 0. The border solves X = (A − σ)⁻¹C are done once per
/// factorization and reused.
struct BorderedSolver<'a> {
    lu: BandedLu,
    basis: &'a [Vec<f64>],
    x_cols: Vec<Vec<f64>>,
    // Small Gram matrix CᵀX, dense row-major.
    gram: Vec<f64>,
}

impl<'a> BorderedSolver<'a> {
    fn new(mat: &BandedMatrix, sigma: f64, basis: &'a [Vec<f64>]) -> Result<Self> {
        let n = mat.n();
        let mut shifted = mat.clone();
        for i in 0..n {
            shifted.add(i, i, -sigma);
        }
        let lu = shifted.factor()?;
        let m = basis.len();
        let x_cols: Vec<Vec<f64>> = basis.iter().map(|c| lu.solve(c)).collect();
        let mut gram = vec![0.0; m * m];
        for (i, c) in basis.iter().enumerate() {
            for (j, x) in x_cols.iter().enumerate() {
                gram[i * m + j] = dot(c, x);
            }
        }
        Ok(Self { lu, basis, x_cols, gram })
    }

    fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        let m = self.basis.len();
        let mut w = self.lu.solve(v);
        if m == 0 {
            return Ok(w);
        }
        // Solve (CᵀX)·μ = Cᵀw by small dense elimination.
        let mut g = self.gram.clone();
        let mut rhs: Vec<f64> = self.basis.iter().map(|c| dot(c, &w)).collect();
        for j in 0..m {
            let p = (j..m).max_by(|&r, &s| g[r * m + j].abs().total_cmp(&g[s * m + j].abs())).unwrap();
            if g[p * m + j].abs() < 1e-300 {
                return Err(Error::NotInvertible);
            }
            if p != j {
                for k in 0..m {
                    g.swap(j * m + k, p * m + k);
                }
                rhs.swap(j, p);
            }
            for i in j + 1..m {
                let f = g[i * m + j] / g[j * m + j];
                for k in j..m {
                    g[i * m + k] -= f * g[j * m + k];
                }
                rhs[i] -= f * rhs[j];
            }
        }
        for i in (0..m).rev() {
            for k in i + 1..m {
                rhs[i] -= g[i * m + k] * rhs[k];
            }
            rhs[i] /= g[i * m + i];
        }
        for (mu, x) in rhs.iter().zip(&self.x_cols) {
            for (wi, xi) in w.iter_mut().zip(x) {
                *wi -= mu * xi;
            }
        }
        Ok(w)
    }
}

/// Smallest eigenvalue of the symmetric matrix `mat` restricted to the
/// orthogonal complement of `constraints`, by inverse iteration with
/// Rayleigh-quotient shift updates. `shift` must start below the constrained
/// spectrum.
pub fn constrained_min_eig(
    mat: &BandedMatrix,
    constraints: &[Vec<f64>],
    shift: f64,
    tol: f64,
    seed: u64,
) -> Result<ConstrainedEig> {
    let n = mat.n();
    let basis = orthonormal_basis(constraints, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    project_out(&mut v, &basis);
    let nv = norm(&v).max(1e-300);
    v.iter_mut().for_each(|x| *x /= nv);

    let mut sigma = shift;
    let mut solver = BorderedSolver::new(mat, sigma, &basis)
        .or_else(|_| BorderedSolver::new(mat, sigma - 1e-8 * (1.0 + sigma.abs()), &basis))?;
    let mut rho = sigma;
    let max_iter = 500;
    for it in 1..=max_iter {
        let mut w = solver.apply(&v)?;
        // Re-project: the bordered solve enforces the constraints only up to
        // roundoff, and drift compounds over iterations.
        project_out(&mut w, &basis);
        let nw = norm(&w);
        if !nw.is_finite() || nw == 0.0 {
            return Err(Error::EigenNoConvergence(it));
        }
        w.iter_mut().for_each(|x| *x /= nw);

        let aw = mat.matvec(&w);
        rho = dot(&w, &aw);
        let mut resid: Vec<f64> = aw.iter().zip(&w).map(|(a, b)| a - rho * b).collect();
        project_out(&mut resid, &basis);
        let r = norm(&resid);
        v = w;
        if r <= tol * rho.abs().max(1.0) {
            return Ok(ConstrainedEig { value: rho, vector: v, iterations: it });
        }
        // Rayleigh update once the iterate has settled near one eigenvector;
        // moving the shift too early can lock onto an interior eigenvalue.
        if it >= 3 && r <= 1e-2 * rho.abs().max(1.0) && (rho - sigma).abs() > 10.0 * tol {
            sigma = rho;
            solver = match BorderedSolver::new(mat, sigma, &basis) {
                Ok(s) => s,
                // σ landed on an eigenvalue of the unconstrained matrix.
                Err(_) => BorderedSolver::new(mat, sigma - 1e-6 * (1.0 + sigma.abs()), &basis)?,
            };
        }
    }
    let _ = rho;
    Err(Error::EigenNoConvergence(max_iter))
}

/// The `count` smallest eigenpairs of the symmetric matrix `mat`, found by
/// repeated constrained minimization with the previously found eigenvectors
/// as deflation constraints.
pub fn smallest_eigenpairs(
    mat: &BandedMatrix,
    count: usize,
    shift: f64,
    tol: f64,
    seed: u64,
) -> Result<Vec<(f64, Vec<f64>)>> {
    let mut pairs: Vec<(f64, Vec<f64>)> = Vec::with_capacity(count);
    let mut sigma = shift;
    for k in 0..count {
        let constraints: Vec<Vec<f64>> = pairs.iter().map(|(_, v)| v.clone()).collect();
        let eig = constrained_min_eig(mat, &constraints, sigma, tol, seed.wrapping_add(k as u64))?;
        sigma = eig.value;
        pairs.push((eig.value, eig.vector));
    }
    Ok(pairs)
}
