//! Exact rational arithmetic for every exposed probability.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (the underlying `Ratio` type maintains both invariants).
pub type Rational = num_rational::Ratio<BigInt>;

/// Rational from a signed numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Lossy conversion for reports and limit comparisons.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Exact rational representation of an `f64` (used to compare exact values
/// against user-supplied tolerances without rounding).
pub fn from_f64_exact(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float required")
}

/// Formats as `p/q`, or just `p` for integers.
pub fn format_ratio(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `|a - b| < tol`, all exact.
pub fn within(a: &Rational, b: &Rational, tol: &Rational) -> bool {
    (a - b).abs() < *tol
}

/// Sum of a slice of rationals.
pub fn sum(values: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for v in values {
        acc += v;
    }
    acc
}
