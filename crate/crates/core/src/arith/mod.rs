//! Exact arithmetic kernel: integer polynomials, sparse Laurent polynomials
//! in `q`, the rational-function field, exact rationals, and rational
//! reconstruction from point samples.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

mod intpoly;
mod laurent;
mod ratfun;
mod reconstruct;

pub use intpoly::IntPoly;
pub use laurent::Laurent;
pub use ratfun::RatFun;
pub use reconstruct::rational_reconstruct;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

/// Exact scalar: an arbitrary-precision rational, always stored reduced.
pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("need at least {need} samples at distinct points, got {got}")]
    NotEnoughSamples { need: usize, got: usize },
    #[error("sample points are not distinct")]
    DuplicateSamplePoint,
    #[error("samples are inconsistent with the degree bound: residual {residual} at point {point}")]
    InconsistentSamples { point: BigRational, residual: BigRational },
    #[error("invalid rational literal `{0}`")]
    BadRationalLiteral(String),
}

/// Parse a rational from `p`, `-p`, or `p/q` decimal-free notation.
pub fn parse_rational(s: &str) -> Result<Scalar, ArithError> {
    let bad = || ArithError::BadRationalLiteral(s.to_string());
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(BigRational::from(num)),
        Some(d) => {
            let den: BigInt = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(ArithError::ZeroDenominator);
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// `x^e` for a signed exponent; `x` must be nonzero when `e < 0`.
pub fn rat_pow(x: &Scalar, e: i64) -> Scalar {
    let mut base = if e < 0 {
        assert!(!x.is_zero(), "negative power of zero");
        x.recip()
    } else {
        x.clone()
    };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::from(BigInt::from(1));
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

/// If `value = u^k` for some integer `k` with `|k| <= bound`, return `k`.
pub fn u_exponent_of(value: &Scalar, u: &Scalar, bound: i64) -> Option<i64> {
    for k in -bound..=bound {
        if &rat_pow(u, k) == value {
            return Some(k);
        }
    }
    None
}
