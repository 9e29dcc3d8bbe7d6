//! Parsing and formatting of exact rationals.
//!
//! The textual form is `"p/q"` or `"p"`, always in lowest terms with a
//! positive denominator. `Display` on `BigRational` already prints that
//! form, so only parsing needs care here.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(num_str)
        .map_err(|e| Error::Parse(format!("bad numerator in {s:?}: {e}")))?;
    let denom = BigInt::from_str(den_str)
        .map_err(|e| Error::Parse(format!("bad denominator in {s:?}: {e}")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Lowest-terms rendering; integers print without the `/1`.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(
            parse_rational("-4/6").unwrap(),
            BigRational::new((-2).into(), 3.into())
        );
        assert_eq!(parse_rational(" 1/2 ").unwrap() * BigRational::from_integer(2.into()), BigRational::one());
    }

    #[test]
    fn rejects_zero_denominator_and_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn formats_in_lowest_terms() {
        assert_eq!(format_rational(&BigRational::new(4.into(), 2.into())), "2");
        assert_eq!(format_rational(&BigRational::new(1.into(), (-2).into())), "-1/2");
    }
}
