//! Natural cubic-spline tabulations.
//!
//! Tabulated profiles interpolate between grid points with a cubic spline;
//! evaluation outside the grid is an error, never an extrapolation.

use crate::error::{CoreError, Result};

/// A sampled function on a strictly increasing grid with spline coefficients.
#[derive(Debug, Clone)]
pub struct Tabulation {
    grid: Vec<f64>,
    values: Vec<f64>,
    /// Second derivatives at the knots (natural boundary conditions).
    second: Vec<f64>,
}

impl Tabulation {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Tabulation> {
        if grid.len() != values.len() {
            return Err(CoreError::InvalidParameter(format!(
                "grid/value length mismatch: {} vs {}",
                grid.len(),
                values.len()
            )));
        }
        if grid.len() < 2 {
            return Err(CoreError::InvalidParameter(
                "tabulation needs at least two points".into(),
            ));
        }
        if !grid.windows(2).all(|w| w[1] > w[0]) {
            return Err(CoreError::InvalidParameter(
                "tabulation grid must be strictly increasing".into(),
            ));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(CoreError::InvalidParameter(
                "tabulated values must be finite".into(),
            ));
        }
        let second = natural_spline_second_derivatives(&grid, &values);
        Ok(Tabulation {
            grid,
            values,
            second,
        })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn lo(&self) -> f64 {
        self.grid[0]
    }

    pub fn hi(&self) -> f64 {
        *self.grid.last().unwrap()
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if x < self.lo() || x > self.hi() {
            return Err(CoreError::OutsideGrid {
                at: x,
                lo: self.lo(),
                hi: self.hi(),
            });
        }
        // Binary search for the containing interval.
        let i = match self
            .grid
            .binary_search_by(|g| g.partial_cmp(&x).unwrap())
        {
            Ok(i) => return Ok(self.values[i]),
            Err(i) => i - 1,
        };
        let h = self.grid[i + 1] - self.grid[i];
        let a = (self.grid[i + 1] - x) / h;
        let b = (x - self.grid[i]) / h;
        Ok(a * self.values[i]
            + b * self.values[i + 1]
            + ((a * a * a - a) * self.second[i] + (b * b * b - b) * self.second[i + 1]) * h * h
                / 6.0)
    }

    /// Evaluate, treating points beyond the grid end as fully decayed.
    /// Only used by profiles that choose their own grid to cover the
    /// support of the function down to tolerance.
    pub(crate) fn eval_or_zero_beyond(&self, x: f64) -> Result<f64> {
        if x > self.hi() {
            return Ok(0.0);
        }
        self.eval(x)
    }
}

fn natural_spline_second_derivatives(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut m = vec![0.0; n];
    if n == 2 {
        return m;
    }
    // Tridiagonal solve, Thomas algorithm with natural BCs m[0] = m[n-1] = 0.
    let mut c_prime = vec![0.0; n];
    let mut d_prime = vec![0.0; n];
    for i in 1..n - 1 {
        let h0 = x[i] - x[i - 1];
        let h1 = x[i + 1] - x[i];
        let a = h0 / 6.0;
        let b = (h0 + h1) / 3.0;
        let c = h1 / 6.0;
        let d = (y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0;
        let denom = b - a * c_prime[i - 1];
        c_prime[i] = c / denom;
        d_prime[i] = (d - a * d_prime[i - 1]) / denom;
    }
    for i in (1..n - 1).rev() {
        m[i] = d_prime[i] - c_prime[i] * m[i + 1];
    }
    m
}

/// Uniform grid from `a` to `b` inclusive with approximately `step` spacing.
pub fn uniform_grid(a: f64, b: f64, step: f64) -> Vec<f64> {
    assert!(b > a && step > 0.0);
    let n = ((b - a) / step).round().max(1.0) as usize;
    (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect()
}
