//! Exact scalars.
//!
//! Every quantity in the crate is a [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

/// Parses `p` or `p/q` with `q > 0`. Returns `None` on anything else.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let (num, den) = match token.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (token, None),
    };
    let num: BigInt = parse_int(num)?;
    let den: BigInt = match den {
        Some(q) => {
            if q.starts_with(['+', '-']) {
                return None;
            }
            parse_int(q)?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
