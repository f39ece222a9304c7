//! Exact rational scalars used for every weight coordinate.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{LieError, Result};

/// Weight coordinates are small rationals (denominators divide the lattice
/// index of the ambient realization), so 64-bit numerators are plenty.
pub type Rat = Ratio<i64>;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

pub fn half() -> Rat {
    Rat::new(1, 2)
}

/// Converts a slice of integers into a rational coordinate vector.
pub fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().copied().map(int).collect()
}

pub fn is_integer(q: &Rat) -> bool {
    q.is_integer()
}

/// True for elements of `1/2 + Z`.
pub fn is_half_odd(q: &Rat) -> bool {
    (q * int(2)).is_integer() && !q.is_integer()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], k: Rat) -> Vec<Rat> {
    a.iter().map(|x| x * k).collect()
}

/// Returns the integer value of `q`, or an error naming `what`.
pub fn to_i64(q: &Rat, what: &str) -> Result<i64> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(LieError::InvalidInput(format!(
            "{what}: expected an integer, got {q}"
        )))
    }
}

/// Parses `3`, `-1/2`, `+2` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim().trim_start_matches('+');
    t.parse::<Rat>()
        .map_err(|_| LieError::InvalidInput(format!("not a rational number: {s:?}")))
}

/// Comma separated list of rationals, surrounding parentheses or brackets optional.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    let t = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(parse_rat).collect()
}

pub fn fmt_list(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|q| q.to_string()).collect();
    parts.join(",")
}

pub fn sign_of(q: &Rat) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub fn abs(q: &Rat) -> Rat {
    q.abs()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn zero() -> Rat {
    Rat::zero()
}
