//! Standard normal distribution helpers.

use libm::erfc;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Upper tail `1 - Φ(x)`, evaluated without cancellation for large `x`.
pub fn normal_sf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    0.5 * erfc(x / std::f64::consts::SQRT_2)
}

/// Standard normal quantile `Φ⁻¹(q)` for `q` in the open unit interval.
pub fn normal_quantile(q: f64) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!(
            "normal quantile requires 0 < q < 1, got {q}"
        )));
    }
    let standard = Normal::standard();
    let mut x = standard.inverse_cdf(q);
    // Two Newton steps on the CDF polish the last few ulps.
    for _ in 0..2 {
        let err = if q < 0.5 {
            normal_cdf(x) - q
        } else {
            (1.0 - q) - normal_sf(x)
        };
        let density = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
        if density > 0.0 {
            x -= err / density;
        }
    }
    Ok(x)
}

/// Upper critical value `z_α` with `P(Z > z_α) = α`.
pub fn upper_critical_value(alpha: f64) -> Result<f64> {
    normal_quantile(1.0 - alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdf_at_zero_is_half() {
        assert_eq!(normal_cdf(0.0), 0.5);
    }

    #[test]
    fn symmetry() {
        for &x in &[0.1, 0.7, 1.3, 2.5, 4.0, 7.5] {
            assert!((normal_cdf(-x) - (1.0 - normal_cdf(x))).abs() < 1e-15);
            assert!((normal_sf(x) - normal_cdf(-x)).abs() < 1e-16);
        }
    }

    #[test]
    fn quantile_domain() {
        assert!(normal_quantile(0.0).is_err());
        assert!(normal_quantile(1.0).is_err());
        assert!(normal_quantile(f64::NAN).is_err());
    }

    #[test]
    fn round_trip() {
        let mut q = 1e-12;
        while q < 1.0 {
            let x = normal_quantile(q).unwrap();
            assert!((normal_cdf(x) - q).abs() < 1e-12, "q={q}");
            q = if q < 0.01 { q * 3.7 } else { q + 0.0137 };
        }
    }
}
