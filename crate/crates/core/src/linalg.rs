//! Exact dense linear algebra over an abstract field.
//!
//! Instantiated with [`Scalar`](crate::arith::Scalar) for module-theoretic
//! computations and with [`RatFun`](crate::arith::RatFun) for solves over the
//! rational-function field. Everything is plain Gaussian elimination with
//! exact arithmetic; sizes in this crate are small enough that no pivoting
//! heuristics are required beyond skipping zeros.

use crate::arith::{RatFun, Scalar};
use num_traits::Zero;

/// Minimal field interface for the solvers in this module.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Division by a nonzero element; callers guarantee `rhs != 0`.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Scalar {
    fn zero() -> Self {
        <Scalar as Zero>::zero()
    }
    fn one() -> Self {
        Scalar::from(num_bigint::BigInt::from(1))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFun::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFun::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFun::mul(self, rhs)
    }
    fn div(&self, rhs: &Self) -> Self {
        RatFun::div(self, rhs).expect("division by zero in field")
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
}

/// Incremental row-echelon span with optional tracking of how each echelon
/// row decomposes over the inserted vectors.
pub struct SpanBuilder<F: Field> {
    ncols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    track: bool,
    /// combos[r][k] = coefficient of inserted vector k in echelon row r.
    combos: Vec<Vec<F>>,
    inserted: usize,
}

impl<F: Field> SpanBuilder<F> {
    pub fn new(ncols: usize, track: bool) -> Self {
        SpanBuilder {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            track,
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    fn reduce_tracked(&self, v: &mut Vec<F>, combo: &mut Vec<F>) {
        for (r, row) in self.rows.iter().enumerate() {
            let p = self.pivots[r];
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for j in 0..self.ncols {
                if !row[j].is_zero() {
                    v[j] = v[j].sub(&factor.mul(&row[j]));
                }
            }
            if self.track && !combo.is_empty() {
                for (k, c) in self.combos[r].iter().enumerate() {
                    if !c.is_zero() {
                        combo[k] = combo[k].sub(&factor.mul(c));
                    }
                }
            }
        }
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut combo = if self.track {
            let mut c = vec![F::zero(); self.inserted + 1];
            c[self.inserted] = F::one();
            c
        } else {
            Vec::new()
        };
        if self.track {
            for existing in self.combos.iter_mut() {
                existing.push(F::zero());
            }
        }
        self.inserted += 1;
        self.reduce_tracked(&mut v, &mut combo);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].clone();
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = c.div(&inv);
            }
        }
        if self.track {
            for c in combo.iter_mut() {
                *c = c.div(&inv);
            }
        }
        // back-substitute to keep reduced echelon form
        let rowv = v;
        for (r, row) in self.rows.iter_mut().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for j in 0..self.ncols {
                if !rowv[j].is_zero() {
                    row[j] = row[j].sub(&factor.mul(&rowv[j]));
                }
            }
            if self.track {
                let combo_new: Vec<F> = self.combos[r]
                    .iter()
                    .zip(combo.iter())
                    .map(|(a, b)| a.sub(&factor.mul(b)))
                    .collect();
                self.combos[r] = combo_new;
            }
        }
        self.rows.push(rowv);
        self.pivots.push(p);
        self.combos.push(combo);
        true
    }

    /// True when `v` already lies in the span.
    pub fn contains(&self, v: &[F]) -> bool {
        let mut v = v.to_vec();
        let mut combo = Vec::new();
        self.reduce_tracked(&mut v, &mut combo);
        v.iter().all(|c| c.is_zero())
    }

    /// Express `v` over the inserted vectors. Requires tracking, and that
    /// every insertion enlarged the span (the inserted family is a basis).
    pub fn express(&self, v: &[F]) -> Option<Vec<F>> {
        assert!(self.track, "span built without tracking");
        let mut v = v.to_vec();
        let mut combo = vec![F::zero(); self.inserted];
        self.reduce_tracked(&mut v, &mut combo);
        if v.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(combo.iter().map(|c| c.neg()).collect())
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(sel) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = rows[rank][col].clone();
        for c in rows[rank].iter_mut() {
            if !c.is_zero() {
                *c = c.div(&inv);
            }
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for j in col..ncols {
                    if !rows[rank][j].is_zero() {
                        let t = factor.mul(&rows[rank][j]);
                        rows[r][j] = rows[r][j].sub(&t);
                    }
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}` where `rows` are the rows of `A`.
pub fn nullspace<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = m[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b`; returns one solution if any exists.
pub fn solve<F: Field>(rows: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    assert_eq!(rows.len(), b.len());
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<F>> = rows
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&ncols) {
        return None; // inconsistent: pivot in the augmented column
    }
    let mut x = vec![F::zero(); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if it is invertible.
pub fn invert<F: Field>(mat: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = mat.len();
    let mut m: Vec<Vec<F>> = mat
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert_eq!(r.len(), n);
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}
