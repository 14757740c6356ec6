//! Moment matching for one recursion step.
//!
//! Every step replaces the stage-two part of a statistic by one with the same conditional
//! mean and variance. Working with reciprocal weights `u = 1/w`, each step reduces to two
//! groups of `m1` and `m2` observations entering with signs `s1`, `s2`:
//!
//! ```text
//! s1·m1·u1 + s2·m2·u2 = λ
//!    m1·u1² +  m2·u2² = η
//! ```
//!
//! Eliminating `u2` gives `m1(m1+m2)·u1² − 2·s1·m1·λ·u1 + (λ² − m2·η) = 0` with discriminant
//! `4·m1·m2·D`, `D = (m1+m2)η − λ²`. Of the two roots we take the larger reciprocal
//! `u1 = (s1·m1·λ + √(m1·m2·D)) / (m1(m1+m2))`: when the previous weights already solve the
//! system this root reproduces them, and it is the branch that yields the published worked
//! examples in every step type.

/// Outcome of a step that cannot be completed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveFailure {
    /// Negative discriminant: no real weights match both moments.
    Imaginary,
    /// A group is empty or the inputs are not finite.
    Degenerate,
}

/// Relative tolerance below which a negative discriminant is treated as a double root.
pub const DISCRIMINANT_TOLERANCE: f64 = 1e-9;

/// Solve the two-group system for reciprocal weights `(u1, u2)`.
pub fn solve_two_group(
    lambda: f64,
    eta: f64,
    (m1, s1): (usize, f64),
    (m2, s2): (usize, f64),
) -> Result<(f64, f64), SolveFailure> {
    if m1 == 0 || m2 == 0 || !lambda.is_finite() || !eta.is_finite() {
        return Err(SolveFailure::Degenerate);
    }
    let (m1, m2) = (m1 as f64, m2 as f64);
    let scale = (m1 + m2) * eta;
    let mut d = scale - lambda * lambda;
    if d < 0.0 {
        if d > -DISCRIMINANT_TOLERANCE * scale.max(lambda * lambda) {
            d = 0.0;
        } else {
            return Err(SolveFailure::Imaginary);
        }
    }
    let root = (m1 * m2 * d).sqrt();
    let b = s1 * m1 * lambda;
    // Avoid cancellation in b + root when b < 0 by dividing the root product by the other root.
    let u1 = if b >= 0.0 {
        (b + root) / (m1 * (m1 + m2))
    } else {
        let other = b - root;
        if other == 0.0 {
            0.0
        } else {
            (lambda * lambda - m2 * eta) / other
        }
    };
    let u2 = s2 * (lambda - s1 * m1 * u1) / m2;
    Ok((u1, u2))
}

/// Residuals of the two moment equations, relative to the size of their terms.
pub fn residuals(
    lambda: f64,
    eta: f64,
    (m1, s1): (usize, f64),
    (m2, s2): (usize, f64),
    (u1, u2): (f64, f64),
) -> (f64, f64) {
    let (m1, m2) = (m1 as f64, m2 as f64);
    let mean_terms = (m1 * u1).abs() + (m2 * u2).abs() + lambda.abs();
    let var_terms = m1 * u1 * u1 + m2 * u2 * u2 + eta.abs();
    let r_mean = (s1 * m1 * u1 + s2 * m2 * u2 - lambda).abs() / mean_terms.max(f64::MIN_POSITIVE);
    let r_var = (m1 * u1 * u1 + m2 * u2 * u2 - eta).abs() / var_terms.max(f64::MIN_POSITIVE);
    (r_mean, r_var)
}
