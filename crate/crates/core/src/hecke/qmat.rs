//! Dense matrices over the exact rationals with zero-skipping products.
//!
//! Module matrices here are sparse in practice (seminormal generators touch
//! at most two basis vectors per column), so skipping zero entries in the
//! inner loop keeps exact products fast without a separate sparse type.

use num_traits::Zero;

use crate::arith::Scalar;
use crate::linalg::{self, SpanBuilder};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat {
    rows: usize,
    cols: usize,
    a: Vec<Scalar>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            a: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::from(num_bigint::BigInt::from(1));
        }
        m
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut m = QMat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.a[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.a[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = QMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        let prod = aik * b;
                        *out.at_mut(i, j) += prod;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(rhs.a.iter()) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(rhs.a.iter()) {
            *x -= y;
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> QMat {
        let mut out = self.clone();
        for x in out.a.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            *self.at_mut(i, j) = v[i].clone();
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> QMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = QMat::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, x) in row.into_iter().enumerate() {
                *m.at_mut(i, j) = x;
            }
        }
        m
    }

    /// Columns spanning the kernel.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        linalg::nullspace(&self.to_rows())
    }

    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        linalg::invert(&self.to_rows()).map(QMat::from_rows)
    }

    /// The matrix of this action restricted to the span of `basis`
    /// (column-coordinate vectors): solves `self * basis = basis * R`.
    /// `None` when the span is not invariant.
    pub fn restrict(&self, basis: &[Vec<Scalar>]) -> Option<QMat> {
        let mut span = SpanBuilder::<Scalar>::new(self.rows, true);
        for b in basis {
            assert!(span.insert(b.clone()), "restriction basis is dependent");
        }
        let mut out = QMat::zeros(basis.len(), basis.len());
        for (j, b) in basis.iter().enumerate() {
            let img = self.apply(b);
            let coords = span.express(&img)?;
            for (i, c) in coords.into_iter().enumerate() {
                *out.at_mut(i, j) = c;
            }
        }
        Some(out)
    }
}
