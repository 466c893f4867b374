//! Exact rational coefficients.
//!
//! Every coefficient in the system is an arbitrary-precision fraction,
//! stored normalized (reduced, denominator positive, zero as `0/1`).
//! [`num_rational::BigRational`] already maintains exactly those
//! invariants, so we use it directly rather than rolling our own.

use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// Parses `p`, `-p` or `p/q`; rejects zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    #[test]
    fn stored_normalized() {
        let r = frac(2, -4);
        assert_eq!(r, frac(-1, 2));
        assert!(r.denom().is_positive());
        let z = frac(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational("-3/6").unwrap(), frac(-1, 2));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
