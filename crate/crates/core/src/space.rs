//! Structure constants and radial geometry of rank-1 noncompact symmetric
//! spaces.
//!
//! A space is described entirely by the multiplicities `(m_gamma, m_2gamma)`
//! of the simple restricted root and its double. The radial coordinate `t`
//! is the coordinate on the one-dimensional flat dual to the simple root;
//! all radii in the crate are in this unit.

use crate::error::{CoreError, Result};

/// Multiplicities and every derived structure constant of a rank-1 space.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SpaceParams {
    /// Multiplicity of the simple root. Always >= 1.
    pub m_gamma: u32,
    /// Multiplicity of the doubled root.
    pub m_2gamma: u32,
    /// Half-sum of positive roots: `(m_gamma + 2 m_2gamma) / 2`.
    pub rho: f64,
    /// Manifold dimension: `m_gamma + m_2gamma + 1`.
    pub d_x: u32,
    /// First Jacobi parameter `(m_gamma + m_2gamma - 1) / 2`.
    pub jacobi_a: f64,
    /// Second Jacobi parameter `(m_2gamma - 1) / 2`.
    pub jacobi_b: f64,
    pub name: String,
}

/// Build a space from its root multiplicities.
///
/// Rejects `m_gamma = 0`: the root system would be degenerate.
pub fn make_space(m_gamma: u32, m_2gamma: u32, name: &str) -> Result<SpaceParams> {
    if m_gamma == 0 {
        return Err(CoreError::InvalidParameter(
            "m_gamma must be >= 1 (degenerate root system)".into(),
        ));
    }
    Ok(SpaceParams {
        m_gamma,
        m_2gamma,
        rho: (m_gamma as f64 + 2.0 * m_2gamma as f64) / 2.0,
        d_x: m_gamma + m_2gamma + 1,
        jacobi_a: (m_gamma as f64 + m_2gamma as f64 - 1.0) / 2.0,
        jacobi_b: (m_2gamma as f64 - 1.0) / 2.0,
        name: name.to_string(),
    })
}

impl SpaceParams {
    /// True when the multiplicities are `(2, 0)`: the space carries the
    /// elementary closed forms `phi_lambda(t) = sin(lambda t)/(lambda sinh t)`
    /// and `mu(lambda) = lambda^2`.
    pub fn has_closed_forms(&self) -> bool {
        self.m_gamma == 2 && self.m_2gamma == 0
    }

    /// Normalization constant of the radial volume density, fixed by the
    /// flat limit: as `t -> 0` the density must approach the Euclidean
    /// polar density `vol(S^{d-1}) t^{d-1}`. On the `(2, 0)` space this
    /// gives `pi`, the value forced by the classical heat-kernel closed
    /// form having unit mass.
    pub fn c_x(&self) -> f64 {
        let d = self.d_x;
        // vol(S^{d-1}) = 2 pi^{d/2} / Gamma(d/2), Gamma at (half-)integers.
        let omega = 2.0 * std::f64::consts::PI.powf(d as f64 / 2.0) / gamma_half_integer(d);
        omega / 2f64.powi((self.m_gamma + 2 * self.m_2gamma) as i32)
    }
}

/// `Gamma(n/2)` for a positive integer `n`, exactly via factorials.
fn gamma_half_integer(n: u32) -> f64 {
    if n % 2 == 0 {
        // Gamma(k) = (k-1)!
        let k = n / 2;
        (1..k).map(|i| i as f64).product()
    } else {
        // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
        let k = (n - 1) / 2;
        let mut v = std::f64::consts::PI.sqrt();
        for i in 1..=k {
            v *= i as f64 - 0.5;
        }
        v
    }
}

/// The model spaces exposed by the command line and the test registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelSpace {
    /// The three-dimensional model with all closed forms.
    H3,
    RealHyperbolic(u32),
    ComplexHyperbolic(u32),
    QuaternionicHyperbolic(u32),
}

/// Multiplicity table for the model families. Only the `(2, 0)` space is
/// pinned down by the closed forms used elsewhere in the crate; the other
/// rows are standard rank-1 structure data, not derivable from anything
/// in this crate.
pub fn model_space(model: ModelSpace) -> Result<SpaceParams> {
    match model {
        ModelSpace::H3 => make_space(2, 0, "h3"),
        ModelSpace::RealHyperbolic(n) => {
            require_dim(n)?;
            make_space(n - 1, 0, &format!("real_hyperbolic({n})"))
        }
        ModelSpace::ComplexHyperbolic(n) => {
            require_dim(n)?;
            make_space(2 * (n - 1), 1, &format!("complex_hyperbolic({n})"))
        }
        ModelSpace::QuaternionicHyperbolic(n) => {
            require_dim(n)?;
            make_space(4 * (n - 1), 3, &format!("quaternionic_hyperbolic({n})"))
        }
    }
}

fn require_dim(n: u32) -> Result<()> {
    if n < 2 {
        return Err(CoreError::InvalidParameter(format!(
            "parametrized families need n >= 2, got {n}"
        )));
    }
    Ok(())
}

/// Parse a space name as used by the CLI: `h3`, `real_hyperbolic(n)`,
/// `complex_hyperbolic(n)`, `quaternionic_hyperbolic(n)`.
pub fn parse_space(name: &str) -> Result<SpaceParams> {
    let name = name.trim();
    if name == "h3" {
        return model_space(ModelSpace::H3);
    }
    for (prefix, ctor) in [
        (
            "real_hyperbolic",
            ModelSpace::RealHyperbolic as fn(u32) -> ModelSpace,
        ),
        ("complex_hyperbolic", ModelSpace::ComplexHyperbolic),
        ("quaternionic_hyperbolic", ModelSpace::QuaternionicHyperbolic),
    ] {
        if let Some(rest) = name.strip_prefix(prefix) {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| {
                    CoreError::InvalidParameter(format!("malformed space name {name:?}"))
                })?;
            let n: u32 = inner.parse().map_err(|_| {
                CoreError::InvalidParameter(format!("malformed space parameter {inner:?}"))
            })?;
            return model_space(ctor(n));
        }
    }
    Err(CoreError::InvalidParameter(format!(
        "unknown space {name:?}"
    )))
}

/// The finite registry the test suites sweep over.
pub fn registry() -> Vec<SpaceParams> {
    vec![
        model_space(ModelSpace::H3).unwrap(),
        model_space(ModelSpace::RealHyperbolic(2)).unwrap(),
        model_space(ModelSpace::RealHyperbolic(4)).unwrap(),
        model_space(ModelSpace::ComplexHyperbolic(2)).unwrap(),
        model_space(ModelSpace::QuaternionicHyperbolic(2)).unwrap(),
    ]
}

/// Radial volume density `c_X (2 sinh t)^{m_gamma} (2 sinh 2t)^{m_2gamma}`.
pub fn volume_density(space: &SpaceParams, t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    space.c_x() * unnormalized_density(space, t)
}

pub(crate) fn unnormalized_density(space: &SpaceParams, t: f64) -> f64 {
    (2.0 * t.sinh()).powi(space.m_gamma as i32)
        * (2.0 * (2.0 * t).sinh()).powi(space.m_2gamma as i32)
}

/// Logarithm of the volume density, stable for large `t`.
pub(crate) fn log_volume_density(space: &SpaceParams, t: f64) -> f64 {
    if t == 0.0 {
        return f64::NEG_INFINITY;
    }
    // log(2 sinh t) = t + log(1 - e^{-2t})
    let ls1 = t + (-(2.0 * t).exp()).ln_1p();
    let ls2 = 2.0 * t + (-(4.0 * t).exp()).ln_1p();
    space.c_x().ln() + space.m_gamma as f64 * ls1 + space.m_2gamma as f64 * ls2
}

/// Index `(p, q)` of a class-one K-type. Valid pairs have `p >= 0` and
/// `p + q`, `p - q` both nonnegative and even; the trivial type is `(0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct KTypeIndex {
    pub p: u32,
    pub q: i32,
}

impl KTypeIndex {
    pub fn new(p: u32, q: i32) -> Result<KTypeIndex> {
        if !Self::is_valid(p as i64, q as i64) {
            return Err(CoreError::InvalidKType {
                p: p as i64,
                q: q as i64,
            });
        }
        Ok(KTypeIndex { p, q })
    }

    pub fn is_valid(p: i64, q: i64) -> bool {
        p >= 0 && p + q >= 0 && p - q >= 0 && (p + q) % 2 == 0 && (p - q) % 2 == 0
    }

    pub fn trivial() -> KTypeIndex {
        KTypeIndex { p: 0, q: 0 }
    }

    pub fn is_trivial(&self) -> bool {
        self.p == 0 && self.q == 0
    }
}

/// All valid K-type indices with `p < bound`, ordered by `(p, q)`.
pub fn ktypes_below(bound: f64) -> Vec<KTypeIndex> {
    let mut out = Vec::new();
    if bound <= 0.0 {
        return out;
    }
    let p_top = (bound.ceil() as i64).max(0);
    for p in 0..=p_top {
        if (p as f64) >= bound {
            continue;
        }
        for q in -p..=p {
            if KTypeIndex::is_valid(p, q) {
                out.push(KTypeIndex {
                    p: p as u32,
                    q: q as i32,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn derived_fields_match_formulas() {
        let s = make_space(1, 0, "rh2").unwrap();
        assert_eq!((s.rho, s.d_x), (0.5, 2));
        assert_eq!((s.jacobi_a, s.jacobi_b), (0.0, -0.5));

        let s = make_space(4, 3, "qh2").unwrap();
        assert_eq!((s.rho, s.d_x), (5.0, 8));
        assert_eq!((s.jacobi_a, s.jacobi_b), (3.0, 1.0));

        let s = make_space(2, 0, "h3").unwrap();
        assert_eq!((s.rho, s.d_x), (1.0, 3));
        assert!(s.has_closed_forms());
    }

    #[test]
    fn derived_fields_exact_over_multiplicity_box() {
        for m in 1..=8u32 {
            for m2 in 0..=4u32 {
                let s = make_space(m, m2, "x").unwrap();
                assert_eq!(s.rho, (m as f64 + 2.0 * m2 as f64) / 2.0);
                assert_eq!(s.d_x, m + m2 + 1);
                assert_eq!(s.jacobi_a, (m as f64 + m2 as f64 - 1.0) / 2.0);
                assert_eq!(s.jacobi_b, (m2 as f64 - 1.0) / 2.0);
                assert!(s.jacobi_a >= s.jacobi_b);
            }
        }
    }

    #[test]
    fn degenerate_multiplicity_rejected() {
        assert!(make_space(0, 2, "bad").is_err());
    }

    #[test]
    fn registry_table() {
        let h3 = model_space(ModelSpace::H3).unwrap();
        assert_eq!((h3.m_gamma, h3.m_2gamma, h3.rho), (2, 0, 1.0));
        let rh2 = model_space(ModelSpace::RealHyperbolic(2)).unwrap();
        assert_eq!((rh2.m_gamma, rh2.m_2gamma, rh2.rho), (1, 0, 0.5));
        let qh2 = model_space(ModelSpace::QuaternionicHyperbolic(2)).unwrap();
        assert_eq!((qh2.m_gamma, qh2.m_2gamma, qh2.rho), (4, 3, 5.0));
        let ch2 = model_space(ModelSpace::ComplexHyperbolic(2)).unwrap();
        assert_eq!((ch2.m_gamma, ch2.m_2gamma), (2, 1));
        assert!(model_space(ModelSpace::RealHyperbolic(1)).is_err());
    }

    #[test]
    fn parse_space_names() {
        assert_eq!(parse_space("h3").unwrap().name, "h3");
        assert_eq!(parse_space("real_hyperbolic(4)").unwrap().m_gamma, 3);
        assert!(parse_space("real_hyperbolic(").is_err());
        assert!(parse_space("so_weird").is_err());
    }

    #[test]
    fn volume_density_values() {
        let h3 = model_space(ModelSpace::H3).unwrap();
        assert_eq!(volume_density(&h3, 0.0), 0.0);
        // (2 sinh 1)^2 up to the calibration constant pi.
        assert_relative_eq!(
            unnormalized_density(&h3, 1.0),
            5.5243913821672629,
            max_relative = 1e-14
        );
        assert_relative_eq!(h3.c_x(), std::f64::consts::PI, max_relative = 1e-14);
    }

    #[test]
    fn volume_density_exponential_growth_rate() {
        // density * e^{-2 rho t} settles to a constant.
        for s in registry() {
            let r: Vec<f64> = [10.0, 20.0, 40.0]
                .iter()
                .map(|&t| (log_volume_density(&s, t) - 2.0 * s.rho * t).exp())
                .collect();
            assert_relative_eq!(r[0], r[1], max_relative = 1e-6);
            assert_relative_eq!(r[1], r[2], max_relative = 1e-6);
            assert!(r[2] > 0.0);
            // Large-t growth within a factor 2 of e^{2 rho t} on h3.
            if s.has_closed_forms() {
                for t in [5.0, 8.0, 12.0] {
                    let ratio = volume_density(&s, t) / (2.0 * s.rho * t).exp();
                    assert!(ratio > 0.5 * s.c_x() && ratio < 2.0 * s.c_x());
                }
            }
        }
    }

    #[test]
    fn log_density_matches_direct() {
        let qh2 = model_space(ModelSpace::QuaternionicHyperbolic(2)).unwrap();
        for t in [0.3, 1.0, 4.0] {
            assert_relative_eq!(
                log_volume_density(&qh2, t).exp(),
                volume_density(&qh2, t),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn ktype_validation_exhaustive() {
        for p in -10i64..=10 {
            for q in -10i64..=10 {
                let expected =
                    p >= 0 && p + q >= 0 && p - q >= 0 && (p + q) % 2 == 0 && (p - q) % 2 == 0;
                assert_eq!(KTypeIndex::is_valid(p, q), expected, "p={p} q={q}");
                if p >= 0 {
                    assert_eq!(KTypeIndex::new(p as u32, q as i32).is_ok(), expected);
                }
            }
        }
        assert!(KTypeIndex::new(2, 2).is_ok());
        assert!(KTypeIndex::new(1, 1).is_ok());
        assert!(KTypeIndex::new(1, 0).is_err());
        assert!(KTypeIndex::new(2, 3).is_err());
    }

    #[test]
    fn ktype_enumeration_matches_brute_force() {
        for bound in [0.0, 1.0, 1.5, 3.5, 7.0] {
            let fast = ktypes_below(bound);
            let mut brute = Vec::new();
            for p in 0..=20i64 {
                for q in -20i64..=20 {
                    if KTypeIndex::is_valid(p, q) && (p as f64) < bound {
                        brute.push(KTypeIndex {
                            p: p as u32,
                            q: q as i32,
                        });
                    }
                }
            }
            brute.sort();
            assert_eq!(fast, brute, "bound {bound}");
        }
    }

    #[test]
    fn gamma_half_integer_values() {
        assert_abs_diff_eq!(gamma_half_integer(2), 1.0);
        assert_abs_diff_eq!(gamma_half_integer(8), 6.0);
        assert_abs_diff_eq!(
            gamma_half_integer(3),
            0.5 * std::f64::consts::PI.sqrt(),
            epsilon = 1e-15
        );
        // vol(S^2)/4 = pi for the (2,0) space is pinned by the closed forms.
        assert_abs_diff_eq!(
            gamma_half_integer(5),
            1.5 * 0.5 * std::f64::consts::PI.sqrt(),
            epsilon = 1e-15
        );
    }
}
