//! Small helpers on top of `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// Converts an integral rational to `i64`, panicking on overflow.
///
/// Only used where the value is an integer by construction (e.g. `chi` of an
/// integral cycle).
pub fn to_i64(x: &Rational) -> i64 {
    assert!(x.is_integer(), "expected an integer, got {x}");
    x.to_integer()
        .to_i64()
        .unwrap_or_else(|| panic!("integer {x} does not fit in i64"))
}

pub fn floor_i64(x: &Rational) -> i64 {
    to_i64(&x.floor())
}

pub fn ceil_i64(x: &Rational) -> i64 {
    to_i64(&x.ceil())
}

pub fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Renders `p/q` in lowest terms, or just `p` for integers.
pub fn render(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, `p/q` with `q != 0`. Returns a message on failure.
pub fn parse(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator `{num}`"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator `{den}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(n, d))
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}
