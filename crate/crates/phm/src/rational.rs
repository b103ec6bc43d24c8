//! Exact rationals as `"p"` or `"p/q"` strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use phm_core::Scalar;

/// Formats in lowest terms; integers drop the denominator.
pub fn format(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Accepts `p` or `p/q` with `q > 0` and `gcd(p, q) = 1`.
pub fn parse(s: &str) -> Option<Scalar> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let p = parse_int(p)?;
    let Some(q) = q else {
        return Some(Scalar::from_integer(p));
    };
    let q = parse_int(q)?;
    if !q.is_positive() {
        return None;
    }
    let x = Scalar::new(p.clone(), q.clone());
    (x.numer() == &p && x.denom() == &q).then_some(x)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}
