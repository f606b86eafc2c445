//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `"p/q"` in lowest terms with `q > 0`, always including the denominator.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"p/q"` or a bare integer.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = |pos: usize| Error::Parse {
        pos,
        msg: format!("not a rational: {s:?}"),
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad(0))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad(n.to_string().len() + 1))?;
            if d.is_zero() {
                return Err(bad(s.len()));
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad(0))?)),
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        assert_eq!(format_q(&q(6, -4)), "-3/2");
        assert_eq!(format_q(&qi(5)), "5/1");
        assert_eq!(format_q(&qi(0)), "0/1");
        assert_eq!(parse_q("-3/2").unwrap(), q(-3, 2));
        assert_eq!(parse_q("7").unwrap(), qi(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }
}
