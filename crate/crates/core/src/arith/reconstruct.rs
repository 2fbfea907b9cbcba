//! Cauchy interpolation: recover a rational function from exact point
//! samples.
//!
//! Given samples `(x_i, y_i)` and a degree bound `d`, we look for
//! `N(x)/D(x)` with `deg N, deg D <= d` and `N(x_i) = y_i D(x_i)` for every
//! sample. That condition is linear in the unknown coefficients, so a
//! nullspace computation over the rationals finds the candidate, and a final
//! re-evaluation pass certifies it against every sample.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::intpoly::IntPoly;
use super::ratfun::RatFun;
use super::{ArithError, Scalar};
use crate::linalg::nullspace;

/// Reconstruct the unique rational function of numerator and denominator
/// degree at most `degree_bound` through all samples.
///
/// Requires at least `2 * degree_bound + 2` samples at pairwise distinct
/// points. Fails with the offending residual when no such function exists.
pub fn rational_reconstruct(
    samples: &[(Scalar, Scalar)],
    degree_bound: usize,
) -> Result<RatFun, ArithError> {
    let need = 2 * degree_bound + 2;
    if samples.len() < need {
        return Err(ArithError::NotEnoughSamples {
            need,
            got: samples.len(),
        });
    }
    {
        let mut pts: Vec<&Scalar> = samples.iter().map(|(x, _)| x).collect();
        pts.sort();
        if pts.windows(2).any(|w| w[0] == w[1]) {
            return Err(ArithError::DuplicateSamplePoint);
        }
    }

    // Unknowns: coefficients of N (degree_bound + 1) then of D.
    let cols = 2 * (degree_bound + 1);
    let mut rows = Vec::with_capacity(samples.len());
    for (x, y) in samples {
        let mut row = Vec::with_capacity(cols);
        let mut xp = BigRational::one();
        for _ in 0..=degree_bound {
            row.push(xp.clone());
            xp *= x;
        }
        let mut xp = BigRational::one();
        for _ in 0..=degree_bound {
            row.push(-(y * &xp));
            xp *= x;
        }
        rows.push(row);
    }

    let kernel = nullspace(&rows);
    let inconsistent = |point: &Scalar, residual: Scalar| ArithError::InconsistentSamples {
        point: point.clone(),
        residual,
    };
    let Some(vec) = kernel.into_iter().find(|v| {
        // a usable kernel vector has a nonzero denominator part
        v[degree_bound + 1..].iter().any(|c| !c.is_zero())
    }) else {
        // No rational function of this degree interpolates: report the
        // residual of the best-effort zero function at the first sample
        // with nonzero value.
        let (point, value) = samples
            .iter()
            .find(|(_, y)| !y.is_zero())
            .unwrap_or(&samples[0]);
        return Err(inconsistent(point, value.clone()));
    };

    let to_intpoly = |coeffs: &[Scalar]| -> IntPoly {
        // clear denominators over the slice
        let mut lcm = BigInt::one();
        for c in coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        IntPoly::new(
            coeffs
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        )
    };
    let scale = {
        let mut lcm = BigInt::one();
        for c in &vec {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        lcm
    };
    let scaled: Vec<Scalar> = vec
        .iter()
        .map(|c| c * BigRational::from(scale.clone()))
        .collect();
    let num = to_intpoly(&scaled[..=degree_bound]);
    let den = to_intpoly(&scaled[degree_bound + 1..]);
    let f = RatFun::new(num, den)?;

    // Certify against every sample, including ones beyond the minimum count.
    for (x, y) in samples {
        match f.eval(x) {
            Some(v) if &v == y => {}
            Some(v) => return Err(inconsistent(x, v - y)),
            None => return Err(inconsistent(x, y.clone())),
        }
    }
    Ok(f)
}
