//! Evaluation modules of the quantum affine algebra of sl_N at exact
//! rational parameters, their tensor products, and trigonometric
//! intertwiners as rational functions of the spectral parameter.
//!
//! Generators are indexed cyclically `0..N-1` with node 0 the affine one.
//! On the vector representation the finite generators act by matrix units
//! with `v`-weights and the affine pair acts by the corner units scaled by
//! `z^{+-1}`. Higher evaluation modules are built by fusion in
//! [`fusion`]; intertwiners and singularity scans live in [`scan`].
//!
//! Every module verifies the full set of quantum affine relations exactly
//! at its numeric parameters, including the quantum Serre relations with
//! the doubled bond of rank 2.

pub mod fusion;
pub mod scan;

pub use fusion::{fused_module, FusedModule};
pub use scan::{rcheck_solve, singularity_scan, RCheck, ScanOptions, SingularityReport};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{rat_pow, Scalar};
use crate::hecke::QMat;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RMatrixError {
    #[error("rank must be at least 2")]
    BadRank,
    #[error("deformation parameter {0} is zero or a root of unity up to order {1}")]
    BadParameter(Scalar, u32),
    #[error("spectral parameter must be nonzero")]
    ZeroSpectralParameter,
    #[error("quantum affine relation `{0}` fails; construction bug")]
    RelationViolation(&'static str),
    #[error("partition has more than rank rows")]
    TooManyRows,
    #[error("fused submodule has rank {got}, expected {want}")]
    FusionRankMismatch { got: usize, want: usize },
    #[error("no highest-weight vector generates an affine-stable submodule")]
    NoAffineSubmodule,
    #[error("intertwiner space has dimension {0} at this sample; degenerate point")]
    Degenerate(usize),
    #[error("intertwiner does not fix the highest-weight line")]
    BadNormalization,
    #[error("not enough usable sample points below the degree cap")]
    SampleExhaustion,
    #[error("arithmetic failure: {0}")]
    Arith(#[from] crate::arith::ArithError),
}

const ROOT_OF_UNITY_PROBE: u32 = 24;

/// Parameters of the quantum affine algebra: the rank `N` of sl_N and the
/// deformation parameter `v` (so that `u = v^2` indexes singular ratios).
#[derive(Clone, PartialEq, Debug)]
pub struct QAffineParams {
    rank: usize,
    v: Scalar,
}

impl QAffineParams {
    pub fn new(rank: usize, v: Scalar) -> Result<Self, RMatrixError> {
        if rank < 2 {
            return Err(RMatrixError::BadRank);
        }
        if v.is_zero() {
            return Err(RMatrixError::BadParameter(v, ROOT_OF_UNITY_PROBE));
        }
        let mut p = Scalar::one();
        for _ in 1..=ROOT_OF_UNITY_PROBE {
            p *= &v;
            if p.is_one() {
                return Err(RMatrixError::BadParameter(v, ROOT_OF_UNITY_PROBE));
            }
        }
        Ok(QAffineParams { rank, v })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn v(&self) -> &Scalar {
        &self.v
    }

    /// `u = v^2`.
    pub fn u(&self) -> Scalar {
        &self.v * &self.v
    }

    /// Affine Cartan matrix entry for nodes `i, j` in `0..rank`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            return 2;
        }
        if self.rank == 2 {
            return -2; // doubled bond
        }
        let n = self.rank;
        let d = (i + n - j) % n;
        if d == 1 || d == n - 1 {
            -1
        } else {
            0
        }
    }

    /// Symmetric quantum integer `[k]_v` as an exact rational.
    pub fn qint(&self, k: i64) -> Scalar {
        let v = &self.v;
        (rat_pow(v, k) - rat_pow(v, -k)) / (v - rat_pow(v, -1))
    }

    fn qfact(&self, k: i64) -> Scalar {
        (1..=k).fold(Scalar::one(), |acc, j| acc * self.qint(j))
    }

    fn qbinom(&self, n: i64, k: i64) -> Scalar {
        self.qfact(n) / (self.qfact(k) * self.qfact(n - k))
    }
}

/// Module of the quantum affine algebra with explicit generator matrices,
/// indices `0..rank-1` (node 0 affine).
#[derive(Clone, Debug)]
pub struct AffineModule {
    pub dim: usize,
    pub e: Vec<QMat>,
    pub f: Vec<QMat>,
    pub k: Vec<QMat>,
    pub kinv: Vec<QMat>,
    /// `v`-weight exponent of each basis vector under each `k_i`; every
    /// basis vector here is a `k`-eigenvector with eigenvalue a `v`-power.
    pub weights: Vec<Vec<i64>>,
}

impl AffineModule {
    /// Verify the quantum affine relations exactly.
    pub fn verify(&self, params: &QAffineParams) -> Result<(), RMatrixError> {
        let n = params.rank();
        let id = QMat::identity(self.dim);
        for i in 0..n {
            if self.k[i].mul(&self.kinv[i]) != id {
                return Err(RMatrixError::RelationViolation("k_i k_i^{-1} = 1"));
            }
            for j in 0..n {
                if self.k[i].mul(&self.k[j]) != self.k[j].mul(&self.k[i]) {
                    return Err(RMatrixError::RelationViolation("k_i k_j = k_j k_i"));
                }
                // k_i e_j k_i^{-1} = v^{a_ij} e_j
                let a = params.cartan(i, j);
                let lhs = self.k[i].mul(&self.e[j]).mul(&self.kinv[i]);
                if lhs != self.e[j].scale(&rat_pow(params.v(), a)) {
                    return Err(RMatrixError::RelationViolation("k e k^{-1} = v^a e"));
                }
                let lhs = self.k[i].mul(&self.f[j]).mul(&self.kinv[i]);
                if lhs != self.f[j].scale(&rat_pow(params.v(), -a)) {
                    return Err(RMatrixError::RelationViolation("k f k^{-1} = v^{-a} f"));
                }
                // [e_i, f_j] = delta_ij (k_i - k_i^{-1})/(v - v^{-1})
                let comm = self.e[i].mul(&self.f[j]).sub(&self.f[j].mul(&self.e[i]));
                if i == j {
                    let denom = params.v() - rat_pow(params.v(), -1);
                    let rhs = self.k[i]
                        .sub(&self.kinv[i])
                        .scale(&(Scalar::one() / denom));
                    if comm != rhs {
                        return Err(RMatrixError::RelationViolation(
                            "[e_i, f_i] = (k_i - k_i^{-1})/(v - v^{-1})",
                        ));
                    }
                } else if !comm.is_zero() {
                    return Err(RMatrixError::RelationViolation("[e_i, f_j] = 0"));
                }
            }
        }
        // quantum Serre relations
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = 1 - params.cartan(i, j);
                for (gens, name) in [(&self.e, "Serre(e)"), (&self.f, "Serre(f)")] {
                    let mut acc = QMat::zeros(self.dim, self.dim);
                    for r in 0..=m {
                        let mut term = QMat::identity(self.dim);
                        for _ in 0..(m - r) {
                            term = term.mul(&gens[i]);
                        }
                        term = term.mul(&gens[j]);
                        for _ in 0..r {
                            term = term.mul(&gens[i]);
                        }
                        let sign = if r % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                        acc = acc.add(&term.scale(&(sign * params.qbinom(m, r))));
                    }
                    if !acc.is_zero() {
                        return Err(RMatrixError::RelationViolation(name));
                    }
                }
            }
        }
        // weight table consistency
        for (b, w) in self.weights.iter().enumerate() {
            for i in 0..n {
                if self.k[i].at(b, b) != &rat_pow(params.v(), w[i]) {
                    return Err(RMatrixError::RelationViolation("weight table"));
                }
            }
        }
        Ok(())
    }
}

/// The vector evaluation module: finite generators by matrix units with
/// `v`-weights, affine pair by the corner units scaled by `z^{+-1}`.
pub fn fundamental_eval_module(
    params: &QAffineParams,
    z: &Scalar,
) -> Result<AffineModule, RMatrixError> {
    if z.is_zero() {
        return Err(RMatrixError::ZeroSpectralParameter);
    }
    let n = params.rank();
    let v = params.v();
    let mut e = vec![QMat::zeros(n, n); n];
    let mut f = vec![QMat::zeros(n, n); n];
    let mut k = vec![QMat::identity(n); n];
    let mut kinv = vec![QMat::identity(n); n];
    for i in 1..n {
        // e_i: basis_{i+1} -> basis_i (0-based: column i, row i-1)
        *e[i].at_mut(i - 1, i) = Scalar::one();
        *f[i].at_mut(i, i - 1) = Scalar::one();
        *k[i].at_mut(i - 1, i - 1) = v.clone();
        *k[i].at_mut(i, i) = Scalar::one() / v;
        *kinv[i].at_mut(i - 1, i - 1) = Scalar::one() / v;
        *kinv[i].at_mut(i, i) = v.clone();
    }
    // affine node: e_0 = z E_{N,1}, f_0 = z^{-1} E_{1,N},
    // k_0 = (k_1 ... k_{N-1})^{-1}
    *e[0].at_mut(n - 1, 0) = z.clone();
    *f[0].at_mut(0, n - 1) = Scalar::one() / z;
    *k[0].at_mut(0, 0) = Scalar::one() / v;
    *k[0].at_mut(n - 1, n - 1) = v.clone();
    *kinv[0].at_mut(0, 0) = v.clone();
    *kinv[0].at_mut(n - 1, n - 1) = Scalar::one() / v;
    let weights: Vec<Vec<i64>> = (0..n)
        .map(|b| {
            (0..n)
                .map(|i| {
                    if i == 0 {
                        match b {
                            0 => -1,
                            x if x == n - 1 => 1,
                            _ => 0,
                        }
                    } else if b == i - 1 {
                        1
                    } else if b == i {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let module = AffineModule {
        dim: n,
        e,
        f,
        k,
        kinv,
        weights,
    };
    module.verify(params)?;
    Ok(module)
}

fn kron(a: &QMat, b: &QMat) -> QMat {
    let mut out = QMat::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.at(i, j);
            if x.is_zero() {
                continue;
            }
            for p in 0..b.rows() {
                for q in 0..b.cols() {
                    let y = b.at(p, q);
                    if !y.is_zero() {
                        *out.at_mut(i * b.rows() + p, j * b.cols() + q) = x * y;
                    }
                }
            }
        }
    }
    out
}

/// Tensor product via the coproduct `e -> e ⊗ 1 + k ⊗ e`,
/// `f -> f ⊗ k^{-1} + 1 ⊗ f`, `k -> k ⊗ k`.
pub fn tensor(params: &QAffineParams, a: &AffineModule, b: &AffineModule) -> AffineModule {
    let n = params.rank();
    let ida = QMat::identity(a.dim);
    let idb = QMat::identity(b.dim);
    let mut e = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    let mut k = Vec::with_capacity(n);
    let mut kinv = Vec::with_capacity(n);
    for i in 0..n {
        e.push(kron(&a.e[i], &idb).add(&kron(&a.k[i], &b.e[i])));
        f.push(kron(&a.f[i], &b.kinv[i]).add(&kron(&ida, &b.f[i])));
        k.push(kron(&a.k[i], &b.k[i]));
        kinv.push(kron(&a.kinv[i], &b.kinv[i]));
    }
    let mut weights = Vec::with_capacity(a.dim * b.dim);
    for wa in &a.weights {
        for wb in &b.weights {
            weights.push((0..n).map(|i| wa[i] + wb[i]).collect());
        }
    }
    AffineModule {
        dim: a.dim * b.dim,
        e,
        f,
        k,
        kinv,
        weights,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn params(n: usize) -> QAffineParams {
        QAffineParams::new(n, parse_rational("2").unwrap()).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(QAffineParams::new(1, parse_rational("2").unwrap()).is_err());
        assert!(QAffineParams::new(2, parse_rational("1").unwrap()).is_err());
        assert!(QAffineParams::new(2, parse_rational("-1").unwrap()).is_err());
        assert!(QAffineParams::new(3, parse_rational("1/2").unwrap()).is_ok());
    }

    #[test]
    fn fundamental_relations_hold() {
        // rank 2 at z = 5: constructor runs the full verification
        let p = params(2);
        let z = parse_rational("5").unwrap();
        let m = fundamental_eval_module(&p, &z).unwrap();
        assert_eq!(m.dim, 2);
        // e_0 is the lower corner scaled by z, f_0 the upper scaled by 1/z
        assert_eq!(m.e[0].at(1, 0), &z);
        assert_eq!(m.f[0].at(0, 1), &(Scalar::one() / &z));
        // k_1 spectrum {v, v^{-1}}
        assert_eq!(m.k[1].at(0, 0), p.v());
        assert_eq!(m.k[1].at(1, 1), &(Scalar::one() / p.v()));
        for n in [3usize, 4] {
            fundamental_eval_module(&params(n), &z).unwrap();
        }
        assert!(fundamental_eval_module(&p, &Scalar::zero()).is_err());
    }

    #[test]
    fn tensor_of_fundamentals_satisfies_relations() {
        let p = params(2);
        let a = fundamental_eval_module(&p, &parse_rational("5").unwrap()).unwrap();
        let b = fundamental_eval_module(&p, &parse_rational("7").unwrap()).unwrap();
        let t = tensor(&p, &a, &b);
        t.verify(&p).unwrap();
        let p3 = params(3);
        let a = fundamental_eval_module(&p3, &parse_rational("5").unwrap()).unwrap();
        let b = fundamental_eval_module(&p3, &parse_rational("1/3").unwrap()).unwrap();
        tensor(&p3, &a, &b).verify(&p3).unwrap();
    }

    #[test]
    fn cyclic_cartan_matrix() {
        let p = params(4);
        assert_eq!(p.cartan(0, 1), -1);
        assert_eq!(p.cartan(0, 3), -1);
        assert_eq!(p.cartan(0, 2), 0);
        assert_eq!(p.cartan(2, 2), 2);
        let p2 = params(2);
        assert_eq!(p2.cartan(0, 1), -2);
    }
}
