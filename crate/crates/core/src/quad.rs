//! Composite Gauss-Legendre quadrature.
//!
//! All integrals in the crate go through fixed panel subdivisions of the
//! integration interval with a 6-point Gauss rule per panel. Panels are
//! always summed left to right, so a result never depends on evaluation
//! order or thread count.

use std::sync::OnceLock;

/// Points per panel used everywhere in the crate.
pub const GAUSS_ORDER: usize = 6;

/// Truncation and resolution parameters for the quadrature-backed operations.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct QuadratureScheme {
    /// Panels per unit length of the integration variable.
    pub panels_per_unit: u32,
    /// Default radial truncation for profiles of unknown decay.
    pub t_max: f64,
    /// Default spectral truncation.
    pub lambda_max: f64,
    /// Absolute tail tolerance used when choosing truncation radii.
    pub abs_tol: f64,
    /// Relative tolerance for truncation-convergence checks.
    pub rel_tol: f64,
}

impl Default for QuadratureScheme {
    fn default() -> Self {
        QuadratureScheme {
            panels_per_unit: 16,
            t_max: 40.0,
            lambda_max: 12.0,
            abs_tol: 1e-12,
            rel_tol: 1e-9,
        }
    }
}

impl QuadratureScheme {
    pub fn validate(&self) -> crate::Result<()> {
        if self.panels_per_unit == 0 {
            return Err(crate::CoreError::InvalidParameter(
                "panels_per_unit must be positive".into(),
            ));
        }
        if !(self.t_max >= 1.0) || !(self.lambda_max >= 1.0) {
            return Err(crate::CoreError::InvalidParameter(
                "t_max and lambda_max must be >= 1".into(),
            ));
        }
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(crate::CoreError::InvalidParameter(
                "tolerances must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Spectral truncation adequate for the heat time `t`: the spectral
    /// Gaussian `e^{-t lambda^2}` must be negligible past the cut.
    pub fn lambda_max_for_heat(&self, time: f64) -> f64 {
        self.lambda_max.max(8.0 / time.sqrt())
    }
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// by Newton iteration on the Legendre polynomial.
fn gauss_legendre_raw(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev-like initial guess, refined by Newton.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gauss_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre_raw(GAUSS_ORDER))
}

/// A fixed quadrature grid on `[a, b]`: all panel nodes in ascending order
/// with their weights.
#[derive(Debug, Clone)]
pub struct PanelGrid {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl PanelGrid {
    /// Subdivide `[a, b]` into `ceil((b - a) * panels_per_unit)` panels.
    pub fn new(a: f64, b: f64, panels_per_unit: u32) -> PanelGrid {
        assert!(b > a, "empty integration interval [{a}, {b}]");
        let n_panels = ((b - a) * panels_per_unit as f64).ceil().max(1.0) as usize;
        let (gx, gw) = gauss_rule();
        let width = (b - a) / n_panels as f64;
        let mut nodes = Vec::with_capacity(n_panels * GAUSS_ORDER);
        let mut weights = Vec::with_capacity(n_panels * GAUSS_ORDER);
        for p in 0..n_panels {
            let lo = a + p as f64 * width;
            let mid = lo + 0.5 * width;
            let half = 0.5 * width;
            for (x, w) in gx.iter().zip(gw.iter()) {
                nodes.push(mid + half * x);
                weights.push(half * w);
            }
        }
        PanelGrid { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate a function over the grid, summing panels left to right.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(self.weights.iter()) {
            acc += w * f(x);
        }
        acc
    }

    /// Weighted sum of precomputed node values, left to right.
    pub fn sum_weighted(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.nodes.len());
        self.nodes
            .iter()
            .zip(self.weights.iter())
            .zip(values.iter())
            .fold(0.0, |acc, ((_, &w), &v)| acc + w * v)
    }
}

/// One-shot integral of `f` over `[a, b]`.
pub fn integrate(a: f64, b: f64, panels_per_unit: u32, f: impl FnMut(f64) -> f64) -> f64 {
    PanelGrid::new(a, b, panels_per_unit).integrate(f)
}

/// Radius past which `e^{-rate x^2 + drift x} x^poly_deg < tol`, with a
/// safety margin. Used to choose truncation radii for Gaussian-type tails.
pub fn gaussian_support_bound(rate: f64, drift: f64, poly_deg: f64, tol: f64) -> f64 {
    assert!(rate > 0.0 && tol > 0.0);
    let log_tol = -tol.ln();
    // Solve rate x^2 - drift x = L, then account for the polynomial factor once.
    let solve = |l: f64| (drift + (drift * drift + 4.0 * rate * l).sqrt()) / (2.0 * rate);
    let x0 = solve(log_tol).max(1.0);
    let l = log_tol + poly_deg.max(0.0) * (2.0 + x0).ln();
    solve(l) + 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss_rule_integrates_polynomials_exactly() {
        // Degree 2n-1 = 11 is exact for the 6-point rule.
        let g = PanelGrid::new(0.0, 1.0, 1);
        for k in 0..=11u32 {
            let v = g.integrate(|x| x.powi(k as i32));
            assert_relative_eq!(v, 1.0 / (k as f64 + 1.0), max_relative = 1e-14);
        }
    }

    #[test]
    fn composite_panels_handle_oscillation() {
        let g = PanelGrid::new(0.0, 10.0, 16);
        let v = g.integrate(|x| (8.0 * x).sin());
        let exact = (1.0 - (80.0f64).cos()) / 8.0;
        assert_relative_eq!(v, exact, epsilon = 1e-12);
    }

    #[test]
    fn integration_is_deterministic() {
        let g = PanelGrid::new(0.0, 5.0, 16);
        let a = g.integrate(|x| (-x * x).exp());
        let b = g.integrate(|x| (-x * x).exp());
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn support_bound_controls_tail() {
        let b = gaussian_support_bound(1.0, 2.0 * 5.0, 7.0, 1e-18);
        // Past the bound the integrand really is below tolerance.
        let v = (-b * b + 10.0 * b).exp() * (1.0 + b * b).powf(3.5);
        assert!(v < 1e-18, "tail value {v} at bound {b}");
    }

    #[test]
    fn scheme_validation_rejects_bad_fields() {
        let mut q = QuadratureScheme::default();
        q.validate().unwrap();
        q.panels_per_unit = 0;
        assert!(q.validate().is_err());
        let mut q = QuadratureScheme::default();
        q.t_max = 0.5;
        assert!(q.validate().is_err());
    }
}
