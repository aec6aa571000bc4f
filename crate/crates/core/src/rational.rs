//! Exact rationals and their `p/q` text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds `num/den` in lowest terms. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p/q` or `p` (optionally signed) into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let text = text.trim();
    let bad = || ParseError::Rational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `p/q` in lowest terms, or `p` alone when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty input).
pub fn common_denominator<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Smallest integer not below `value`.
pub fn ceil_to_int(value: &Rational) -> BigInt {
    value.ceil().to_integer()
}

/// Parses per-vertex values, one `vertex p/q` pair per line; vertices that
/// are not listed get zero.
pub fn parse_vertex_values(text: &str, n: usize) -> Result<Vec<Rational>, ParseError> {
    let mut values = vec![Rational::zero(); n];
    let mut seen = vec![false; n];
    for (idx, raw) in text.lines().enumerate() {
        let err = |msg: String| ParseError::VertexValues { line: idx + 1, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (vertex, value) = match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            [v, q] => (*v, *q),
            _ => return Err(err("expected `vertex p/q`".into())),
        };
        let vertex: usize = vertex
            .parse()
            .map_err(|_| err(format!("bad vertex `{vertex}`")))?;
        if vertex >= n {
            return Err(err(format!("vertex {vertex} out of range for {n} vertices")));
        }
        if std::mem::replace(&mut seen[vertex], true) {
            return Err(err(format!("vertex {vertex} listed twice")));
        }
        values[vertex] = parse_rational(value).map_err(|_| err(format!("bad value `{value}`")))?;
    }
    Ok(values)
}

pub(crate) fn is_in_unit_interval(value: &Rational) -> bool {
    !value.is_negative() && *value <= Rational::one()
}
