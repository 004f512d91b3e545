use crate::{Error, Result};

/// General banded matrix with kl subdiagonals and ku superdiagonals, stored
/// in LAPACK band layout (column-major, ldab = 2·kl + ku + 1 rows) so that an
/// in-place LU with partial pivoting has room for fill-in.
///
/// Entry A(i,j) lives at storage row kl + ku + i − j of column j.
#[derive(Debug, Clone)]
pub struct BandedMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    ldab: usize,
    ab: Vec<f64>,
}

impl BandedMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        assert!(n > 0 && kl < n && ku < n);
        let ldab = 2 * kl + ku + 1;
        Self { n, kl, ku, ldab, ab: vec![0.0; ldab * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.n);
        debug_assert!(j <= i + self.ku && i <= j + self.kl, "entry ({i},{j}) outside band");
        j * self.ldab + (self.kl + self.ku + i - j)
    }

    pub fn in_band(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && j <= i + self.ku && i <= j + self.kl
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        if self.in_band(i, j) {
            self.ab[self.idx(i, j)]
        } else {
            0.0
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let k = self.idx(i, j);
        self.ab[k] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let k = self.idx(i, j);
        self.ab[k] += v;
    }

    /// Clear every stored entry of matrix row i.
    pub fn zero_row(&mut self, i: usize) {
        let lo = i.saturating_sub(self.kl);
        let hi = (i + self.ku).min(self.n - 1);
        for j in lo..=hi {
            let k = self.idx(i, j);
            self.ab[k] = 0.0;
        }
    }

    /// y = A·x.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for j in 0..self.n {
            let xj = x[j];
            if xj == 0.0 {
                continue;
            }
            let lo = j.saturating_sub(self.ku);
            let hi = (j + self.kl).min(self.n - 1);
            for i in lo..=hi {
                y[i] += self.ab[j * self.ldab + (self.kl + self.ku + i - j)] * xj;
            }
        }
        y
    }

    pub fn one_norm(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for j in 0..self.n {
            let lo = j.saturating_sub(self.ku);
            let hi = (j + self.kl).min(self.n - 1);
            let col: f64 = (lo..=hi)
                .map(|i| self.ab[j * self.ldab + (self.kl + self.ku + i - j)].abs())
                .sum();
            worst = worst.max(col);
        }
        worst
    }

    /// LU factorization with partial pivoting; the original matrix is kept.
    pub fn factor(&self) -> Result<BandedLu> {
        let n = self.n;
        let (kl, ku, ldab) = (self.kl, self.ku, self.ldab);
        let kv = kl + ku;
        let mut ab = self.ab.clone();
        let mut piv = vec![0usize; n];
        let mut ju = 0usize;

        let at = |ab: &Vec<f64>, r: usize, j: usize| ab[j * ldab + r];
        for j in 0..n {
            let km = kl.min(n - 1 - j);
            let mut jp = 0usize;
            let mut pmax = at(&ab, kv, j).abs();
            for p in 1..=km {
                let a = at(&ab, kv + p, j).abs();
                if a > pmax {
                    pmax = a;
                    jp = p;
                }
            }
            piv[j] = j + jp;
            if pmax == 0.0 {
                return Err(Error::NotInvertible);
            }
            ju = ju.max((j + ku + jp).min(n - 1));
            if jp != 0 {
                for k in j..=ju {
                    // Rows j and j+jp of the matrix within column k.
                    let r1 = k * ldab + (kv + j - k);
                    let r2 = k * ldab + (kv + j + jp - k);
                    ab.swap(r1, r2);
                }
            }
            if km > 0 {
                let pivot = ab[j * ldab + kv];
                for p in 1..=km {
                    ab[j * ldab + kv + p] /= pivot;
                }
                for k in (j + 1)..=ju {
                    let top = ab[k * ldab + (kv + j - k)];
                    if top != 0.0 {
                        for p in 1..=km {
                            ab[k * ldab + (kv + j + p - k)] -= ab[j * ldab + kv + p] * top;
                        }
                    }
                }
            }
        }
        Ok(BandedLu { n, kl, ku, ldab, ab, piv })
    }

    /// Solve A·x = b, checking the residual against `tol`·‖b‖_∞ (skipped when
    /// `tol` is infinite).
    pub fn solve(&self, b: &[f64], tol: f64) -> Result<Vec<f64>> {
        let lu = self.factor()?;
        let x = lu.solve(b);
        if tol.is_finite() {
            let r = self.matvec(&x);
            let bnorm = b.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(1e-300);
            let rnorm = r
                .iter()
                .zip(b)
                .fold(0.0_f64, |m, (ri, bi)| m.max((ri - bi).abs()));
            if !(rnorm <= tol * bnorm) {
                return Err(Error::NotInvertible);
            }
        }
        Ok(x)
    }
}

/// Factored form of a [`BandedMatrix`].
#[derive(Debug, Clone)]
pub struct BandedLu {
    n: usize,
    kl: usize,
    ku: usize,
    ldab: usize,
    ab: Vec<f64>,
    piv: Vec<usize>,
}

impl BandedLu {
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        assert_eq!(b.len(), self.n);
        let (n, kl, ldab) = (self.n, self.kl, self.ldab);
        let kv = kl + self.ku;
        let mut x = b.to_vec();
        // Forward: apply P and the unit-lower multipliers.
        for j in 0..n.saturating_sub(1) {
            let jp = self.piv[j];
            if jp != j {
                x.swap(j, jp);
            }
            let km = kl.min(n - 1 - j);
            let xj = x[j];
            if xj != 0.0 {
                for p in 1..=km {
                    x[j + p] -= self.ab[j * ldab + kv + p] * xj;
                }
            }
        }
        // Backward: U has bandwidth kv after pivoting.
        for i in (0..n).rev() {
            let mut acc = x[i];
            let hi = (i + kv).min(n - 1);
            for k in (i + 1)..=hi {
                acc -= self.ab[k * ldab + (kv + i - k)] * x[k];
            }
            x[i] = acc / self.ab[i * ldab + kv];
        }
        x
    }

    /// Hager-style estimate of ‖A⁻¹‖₁ (lower bound, usually tight).
    pub fn inverse_norm_est(&self) -> f64 {
        let n = self.n;
        let mut x = vec![1.0 / n as f64; n];
        let mut est = 0.0;
        for _ in 0..5 {
            let y = self.solve(&x);
            let y1: f64 = y.iter().map(|v| v.abs()).sum();
            if y1 <= est {
                break;
            }
            est = y1;
            let xi: Vec<f64> = y.iter().map(|v| if *v >= 0.0 { 1.0 } else { -1.0 }).collect();
            let z = self.solve_transpose(&xi);
            let (mut jbest, mut zbest) = (0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if zj.abs() > zbest {
                    zbest = zj.abs();
                    jbest = j;
                }
            }
            if zbest <= z.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>().abs() {
                break;
            }
            x = vec![0.0; n];
            x[jbest] = 1.0;
        }
        est
    }

    /// Solve Aᵀ·x = b via the stored factorization (Uᵀ then Lᵀ then Pᵀ).
    pub fn solve_transpose(&self, b: &[f64]) -> Vec<f64> {
        assert_eq!(b.len(), self.n);
        let (n, kl, ldab) = (self.n, self.kl, self.ldab);
        let kv = kl + self.ku;
        let mut x = b.to_vec();
        // Uᵀ is lower triangular with bandwidth kv; U(k,i) lives at storage
        // row kv + k − i of column i.
        for i in 0..n {
            let lo = i.saturating_sub(kv);
            let mut acc = x[i];
            for k in lo..i {
                acc -= self.ab[i * ldab + (kv + k) - i] * x[k];
            }
            x[i] = acc / self.ab[i * ldab + kv];
        }
        // Lᵀ unit upper triangular, then permutation in reverse.
        for j in (0..n.saturating_sub(1)).rev() {
            let km = kl.min(n - 1 - j);
            let mut acc = x[j];
            for p in 1..=km {
                acc -= self.ab[j * ldab + kv + p] * x[j + p];
            }
            x[j] = acc;
            let jp = self.piv[j];
            if jp != j {
                x.swap(j, jp);
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dense_solve(a: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
        let n = b.len();
        let mut m: Vec<Vec<f64>> = a.to_vec();
        let mut x = b.to_vec();
        for j in 0..n {
            let p = (j..n).max_by(|&r, &s| m[r][j].abs().total_cmp(&m[s][j].abs())).unwrap();
            m.swap(j, p);
            x.swap(j, p);
            for i in j + 1..n {
                let f = m[i][j] / m[j][j];
                for k in j..n {
                    m[i][k] -= f * m[j][k];
                }
                x[i] -= f * x[j];
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                x[i] -= m[i][k] * x[k];
            }
            x[i] /= m[i][i];
        }
        x
    }

    fn random_banded(rng: &mut impl Rng, n: usize, kl: usize, ku: usize) -> (BandedMatrix, Vec<Vec<f64>>) {
        let mut band = BandedMatrix::zeros(n, kl, ku);
        let mut dense = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                if band.in_band(i, j) {
                    let v: f64 = rng.gen_range(-1.0..1.0);
                    let v = if i == j { v + 4.0 } else { v };
                    band.set(i, j, v);
                    dense[i][j] = v;
                }
            }
        }
        (band, dense)
    }

    #[test]
    fn matches_dense_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &(n, kl, ku) in &[(12, 1, 1), (30, 5, 5), (57, 3, 6), (64, 6, 2)] {
            let (band, dense) = random_banded(&mut rng, n, kl, ku);
            let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let x = band.solve(&b, 1e-10).unwrap();
            let xd = dense_solve(&dense, &b);
            for (a, c) in x.iter().zip(&xd) {
                assert_relative_eq!(a, c, epsilon = 1e-9, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn transpose_solve_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (band, dense) = random_banded(&mut rng, 40, 4, 3);
        let b: Vec<f64> = (0..40).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let lu = band.factor().unwrap();
        let x = lu.solve_transpose(&b);
        // Check Aᵀ x = b directly against the dense matrix.
        for i in 0..40 {
            let ai: f64 = (0..40).map(|j| dense[j][i] * x[j]).sum();
            assert_relative_eq!(ai, b[i], epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn pivoting_handles_zero_diagonal() {
        // A = [[0, 1], [1, 0]] padded into a larger identity block.
        let n = 10;
        let mut band = BandedMatrix::zeros(n, 1, 1);
        for i in 2..n {
            band.set(i, i, 1.0);
        }
        band.set(0, 1, 1.0);
        band.set(1, 0, 1.0);
        let mut b = vec![0.0; n];
        b[0] = 3.0;
        b[1] = -2.0;
        let x = band.solve(&b, 1e-12).unwrap();
        assert_relative_eq!(x[0], -2.0, epsilon = 1e-14);
        assert_relative_eq!(x[1], 3.0, epsilon = 1e-14);
    }

    #[test]
    fn singular_matrix_is_reported() {
        let mut band = BandedMatrix::zeros(8, 1, 1);
        for i in 0..7 {
            band.set(i, i, 1.0);
        }
        // Last row identically zero.
        assert!(matches!(band.factor(), Err(Error::NotInvertible)));
    }

    #[test]
    fn condition_estimate_order_of_magnitude() {
        let n = 50;
        let mut band = BandedMatrix::zeros(n, 1, 1);
        for i in 0..n {
            band.set(i, i, 2.0);
            if i > 0 {
                band.set(i, i - 1, -1.0);
                band.set(i - 1, i, -1.0);
            }
        }
        // 1D Laplacian: cond_1 grows like n²; the estimate must see that.
        let lu = band.factor().unwrap();
        let cond = band.one_norm() * lu.inverse_norm_est();
        assert!(cond > 300.0 && cond < 1e5, "cond estimate {cond:.3e}");
    }
}
