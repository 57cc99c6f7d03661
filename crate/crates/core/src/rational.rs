//! Exact rational numbers used for slopes and slope comparisons.

use num_rational::Ratio;

/// An exact rational number, always stored reduced with positive denominator.
pub type Rational = Ratio<i128>;

/// Builds `n / d`. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Ratio::new(n as i128, d as i128)
}

/// Embeds an integer.
pub fn int(n: i64) -> Rational {
    Ratio::from_integer(n as i128)
}
