use crate::{Error, Result};

/// Uniform one-dimensional grid on [x_min, x_max] with n points.
///
/// The spacing h = (x_max − x_min)/(n − 1) is stored once and the endpoints
/// are re-derived from it, so point(0) and point(n−1) equal the stored
/// endpoints bit-exactly. A grid recognized as symmetric (odd n, mirrored
/// endpoints) is addressed from its center index, making point(i) the exact
/// negation of point(n−1−i).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n: usize,
    h: f64,
    mid: Option<usize>,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(Error::InvalidGrid("non-finite endpoints".into()));
        }
        if n < 8 {
            return Err(Error::InvalidGrid(format!("n = {n} < 8")));
        }
        if x_max <= x_min {
            return Err(Error::InvalidGrid("x_max <= x_min".into()));
        }
        if n % 2 == 1 && x_min == -x_max {
            return Self::symmetric(x_max, n);
        }
        let h = (x_max - x_min) / (n - 1) as f64;
        let x_max = x_min + (n - 1) as f64 * h;
        Ok(Self { x_min, x_max, n, h, mid: None })
    }

    /// Symmetric grid on [−l, l]; `n` must be odd so that 0 is a grid point.
    pub fn symmetric(l: f64, n: usize) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::InvalidGrid("symmetric grid needs odd n".into()));
        }
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::InvalidGrid("half-width must be finite and positive".into()));
        }
        if n < 8 {
            return Err(Error::InvalidGrid(format!("n = {n} < 8")));
        }
        let mid = (n - 1) / 2;
        let h = l / mid as f64;
        let x_max = mid as f64 * h;
        Ok(Self { x_min: -x_max, x_max, n, h, mid: Some(mid) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        match self.mid {
            Some(m) => (i as f64 - m as f64) * self.h,
            None => self.x_min + i as f64 * self.h,
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|i| self.point(i))
    }

    /// Whether the grid is symmetric about 0, i.e. point(i) = −point(n−1−i)
    /// exactly in floating point.
    pub fn is_symmetric(&self) -> bool {
        self.mid.is_some()
    }

    /// Index of the grid point nearest to x (clamped to the grid).
    pub fn nearest_index(&self, x: f64) -> usize {
        let t = (x - self.x_min) / self.h;
        (t.round().max(0.0) as usize).min(self.n - 1)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.x_min && x <= self.x_max
    }
}

/// A real field sampled on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::GridMismatch(format!(
                "{} values on a grid of {} points",
                values.len(),
                grid.n()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        Self { grid, values: vec![0.0; grid.n()] }
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.points().map(f).collect();
        Self { grid, values }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    pub fn assert_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFiniteField)
        }
    }

    pub fn same_grid(&self, other: &GridFunction) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch("fields live on different grids".into()))
        }
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> GridFunction {
        GridFunction { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// Pointwise combination c = f(a, b) of two fields on the same grid.
    pub fn zip_with(&self, other: &GridFunction, f: impl Fn(f64, f64) -> f64) -> Result<GridFunction> {
        self.same_grid(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(GridFunction { grid: self.grid, values })
    }

    pub fn scale(&self, c: f64) -> GridFunction {
        self.map(|v| c * v)
    }

    /// self + c·other.
    pub fn add_scaled(&self, c: f64, other: &GridFunction) -> Result<GridFunction> {
        self.zip_with(other, |a, b| a + c * b)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }

    /// Largest |f(y) − f(−y)| over the grid; zero for an even field.
    pub fn even_defect(&self) -> f64 {
        self.reflect_defect(1.0)
    }

    /// Largest |f(y) + f(−y)| over the grid; zero for an odd field.
    pub fn odd_defect(&self) -> f64 {
        self.reflect_defect(-1.0)
    }

    fn reflect_defect(&self, sign: f64) -> f64 {
        assert!(self.grid.is_symmetric(), "parity defect needs a symmetric grid");
        let n = self.grid.n();
        let mut worst: f64 = 0.0;
        for i in 0..n / 2 {
            worst = worst.max((self.values[i] - sign * self.values[n - 1 - i]).abs());
        }
        worst
    }

    /// Replace f by its even part (f(y)+f(−y))/2 or odd part (f(y)−f(−y))/2.
    pub fn symmetrize(&self, even: bool) -> GridFunction {
        assert!(self.grid.is_symmetric(), "symmetrization needs a symmetric grid");
        let n = self.grid.n();
        let sign = if even { 1.0 } else { -1.0 };
        let mut values = self.values.clone();
        for i in 0..=(n - 1) / 2 {
            let j = n - 1 - i;
            let a = 0.5 * (self.values[i] + sign * self.values[j]);
            values[i] = a;
            values[j] = sign * a;
        }
        GridFunction { grid: self.grid, values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_rejects_degenerate_inputs() {
        assert!(Grid::new(0.0, 1.0, 4).is_err());
        assert!(Grid::new(1.0, 1.0, 16).is_err());
        assert!(Grid::new(f64::NAN, 1.0, 16).is_err());
        assert!(Grid::symmetric(1.0, 16).is_err());
    }

    #[test]
    fn symmetric_grid_pairs_exactly() {
        let g = Grid::symmetric(40.0, 16001).unwrap();
        assert!(g.is_symmetric());
        for i in 0..g.n() {
            assert_eq!(g.point(i), -g.point(g.n() - 1 - i));
        }
        assert_eq!(g.point(8000), 0.0);
        assert_eq!(g.point(0), g.x_min());
        assert_eq!(g.point(16000), g.x_max());
    }

    #[test]
    fn mirrored_new_delegates_to_symmetric() {
        let a = Grid::new(-5.0, 5.0, 101).unwrap();
        let b = Grid::symmetric(5.0, 101).unwrap();
        assert_eq!(a, b);
        assert!(a.is_symmetric());
        // Even point count cannot center on 0.
        assert!(!Grid::new(-5.0, 5.0, 100).unwrap().is_symmetric());
    }

    #[test]
    fn parity_helpers() {
        let g = Grid::symmetric(5.0, 101).unwrap();
        let even = GridFunction::from_fn(g, |x| x * x);
        let odd = GridFunction::from_fn(g, |x| x * x * x);
        assert_eq!(even.even_defect(), 0.0);
        assert_eq!(odd.odd_defect(), 0.0);
        assert!(odd.even_defect() > 1.0);
        let sym = odd.symmetrize(false);
        assert_eq!(sym.odd_defect(), 0.0);
    }

    #[test]
    fn nearest_index_snaps_and_clamps() {
        let g = Grid::new(0.0, 1.0, 11).unwrap();
        assert_eq!(g.nearest_index(0.51), 5);
        assert_eq!(g.nearest_index(-3.0), 0);
        assert_eq!(g.nearest_index(7.0), 10);
    }
}
