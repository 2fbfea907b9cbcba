//! Fusion construction of evaluation modules for general partitions: the
//! submodule of a tensor product of vector evaluation modules at
//! content-shifted points generated by a finite highest-weight vector.
//!
//! The shift of the factor for box `k` is `z * u^(+-c_k)` with `c_k` the
//! content of the box in the row-reading standard tableau. The sign is not
//! a convention choice here: it is fixed by requiring the generated finite
//! submodule to be stable under the affine generators, which is checked
//! exactly, and the sign that passes is recorded on the result.

use num_traits::Zero;

use crate::arith::{rat_pow, Scalar};
use crate::hecke::QMat;
use crate::linalg::SpanBuilder;
use crate::partitions::Partition;

use super::{fundamental_eval_module, tensor, AffineModule, QAffineParams, RMatrixError};

/// An evaluation module cut out of a tensor power of the vector module.
#[derive(Clone, Debug)]
pub struct FusedModule {
    pub module: AffineModule,
    /// +1 when factor k sits at `z * u^{c_k}`, -1 for `z * u^{-c_k}`
    pub shift_sign: i8,
    /// index of the highest-weight vector in the module basis
    pub highest: usize,
}

/// Contents of the boxes in row-reading order.
fn row_reading_contents(lambda: &Partition) -> Vec<i64> {
    let mut out = Vec::with_capacity(lambda.size());
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 1..=p as i64 {
            out.push(j - 1 - i as i64);
        }
    }
    out
}

fn ambient_module(
    params: &QAffineParams,
    z: &Scalar,
    contents: &[i64],
    sign: i8,
) -> Result<AffineModule, RMatrixError> {
    let u = params.u();
    let mut factors = contents.iter().map(|&c| {
        let shift = rat_pow(&u, sign as i64 * c);
        fundamental_eval_module(params, &(z * shift))
    });
    let mut acc = factors.next().expect("nonempty partition")?;
    for f in factors {
        acc = tensor(params, &acc, &f?);
    }
    Ok(acc)
}

/// Highest-weight vectors of finite weight `lambda` inside a module: killed
/// by every finite raising operator, with the prescribed `k`-eigenvalues.
fn finite_highest_vectors(
    params: &QAffineParams,
    m: &AffineModule,
    lambda: &Partition,
) -> Vec<Vec<Scalar>> {
    let n = params.rank();
    let target: Vec<i64> = (1..n)
        .map(|i| lambda.part(i - 1) as i64 - lambda.part(i) as i64)
        .collect();
    // basis vectors of the right weight
    let coords: Vec<usize> = (0..m.dim)
        .filter(|&b| (1..n).all(|i| m.weights[b][i] == target[i - 1]))
        .collect();
    if coords.is_empty() {
        return Vec::new();
    }
    // rows: for each finite e_i, the map restricted to the weight subspace
    let mut rows = Vec::new();
    for i in 1..n {
        for r in 0..m.dim {
            let row: Vec<Scalar> = coords.iter().map(|&c| m.e[i].at(r, c).clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        // whole weight space
        (0..coords.len())
            .map(|i| {
                let mut v = vec![Scalar::zero(); coords.len()];
                v[i] = Scalar::from(num_bigint::BigInt::from(1));
                v
            })
            .collect()
    } else {
        crate::linalg::nullspace(&rows)
    };
    kernel
        .into_iter()
        .map(|loc| {
            let mut v = vec![Scalar::zero(); m.dim];
            for (k, c) in loc.into_iter().enumerate() {
                v[coords[k]] = c;
            }
            v
        })
        .collect()
}

/// Closure of a vector under the finite lowering operators.
fn finite_closure(params: &QAffineParams, m: &AffineModule, seed: &[Scalar]) -> Vec<Vec<Scalar>> {
    let mut span = SpanBuilder::<Scalar>::new(m.dim, false);
    let mut worklist = Vec::new();
    if span.insert(seed.to_vec()) {
        worklist.push(seed.to_vec());
    }
    while let Some(v) = worklist.pop() {
        for i in 1..params.rank() {
            let w = m.f[i].apply(&v);
            if span.insert(w.clone()) {
                worklist.push(w);
            }
        }
    }
    span.rows().to_vec()
}

fn subspace_contains(basis: &[Vec<Scalar>], dim: usize, v: &[Scalar]) -> bool {
    let mut span = SpanBuilder::<Scalar>::new(dim, false);
    for b in basis {
        span.insert(b.clone());
    }
    span.contains(v)
}

/// Build the evaluation module of a partition by fusion.
pub fn fused_module(
    lambda: &Partition,
    params: &QAffineParams,
    z: &Scalar,
) -> Result<FusedModule, RMatrixError> {
    if z.is_zero() {
        return Err(RMatrixError::ZeroSpectralParameter);
    }
    if lambda.len() > params.rank() {
        return Err(RMatrixError::TooManyRows);
    }
    if lambda.size() == 1 {
        let module = fundamental_eval_module(params, z)?;
        return Ok(FusedModule {
            module,
            shift_sign: 1,
            highest: 0,
        });
    }
    let contents = row_reading_contents(lambda);
    let want = lambda.ssyt_count(params.rank());
    let mut failure = RMatrixError::NoAffineSubmodule;
    for sign in [1i8, -1] {
        let ambient = ambient_module(params, z, &contents, sign)?;
        let hw = finite_highest_vectors(params, &ambient, lambda);
        // candidate generators: highest-weight basis vectors and small pencils
        let mut candidates: Vec<Vec<Scalar>> = hw.clone();
        for a in 0..hw.len() {
            for b in (a + 1)..hw.len() {
                for t in [1i64, -1, 2, -2] {
                    let tv = Scalar::from(num_bigint::BigInt::from(t));
                    candidates.push(
                        hw[a]
                            .iter()
                            .zip(hw[b].iter())
                            .map(|(x, y)| x + &tv * y)
                            .collect(),
                    );
                }
            }
        }
        for cand in &candidates {
            let basis = finite_closure(params, &ambient, cand);
            if basis.len() != want {
                failure = RMatrixError::FusionRankMismatch {
                    got: basis.len(),
                    want,
                };
                continue;
            }
            // affine stability, checked exactly
            let stable = basis.iter().all(|b| {
                subspace_contains(&basis, ambient.dim, &ambient.e[0].apply(b))
                    && subspace_contains(&basis, ambient.dim, &ambient.f[0].apply(b))
            });
            if !stable {
                continue;
            }
            // restrict all generators; the seed is the first basis row
            let restrict = |g: &QMat| g.restrict(&basis).expect("stable subspace");
            let n = params.rank();
            let e: Vec<QMat> = (0..n).map(|i| restrict(&ambient.e[i])).collect();
            let f: Vec<QMat> = (0..n).map(|i| restrict(&ambient.f[i])).collect();
            let k: Vec<QMat> = (0..n).map(|i| restrict(&ambient.k[i])).collect();
            let kinv: Vec<QMat> = (0..n).map(|i| restrict(&ambient.kinv[i])).collect();
            // each echelon basis row is a weight vector: its pivot coordinate
            // determines the ambient weight
            let weights: Vec<Vec<i64>> = basis
                .iter()
                .map(|b| {
                    let pivot = b.iter().position(|c| !c.is_zero()).expect("nonzero row");
                    ambient.weights[pivot].clone()
                })
                .collect();
            let module = AffineModule {
                dim: basis.len(),
                e,
                f,
                k,
                kinv,
                weights,
            };
            module.verify(params)?;
            // the seed was inserted first, so basis row 0 spans the
            // highest-weight line
            return Ok(FusedModule {
                module,
                shift_sign: sign,
                highest: 0,
            });
        }
    }
    Err(failure)
}
