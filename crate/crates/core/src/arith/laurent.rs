//! Sparse Laurent polynomials in `q` with integer coefficients.
//!
//! Exponents range over all of Z, so the representation is a map from
//! exponent to coefficient with no zero coefficients stored. This is the
//! coefficient ring of canonical-basis transition matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial `sum c_e q^e` with `c_e` arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, BigInt::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Laurent::monomial(1, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut t = BTreeMap::new();
        if !coeff.is_zero() {
            t.insert(exp, coeff);
        }
        Laurent { terms: t }
    }

    pub fn from_i64(c: i64) -> Self {
        Laurent::monomial(0, BigInt::from(c))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut out = Laurent::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// The bar involution `q -> q^{-1}`: negates every exponent.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Specialization at `q = 1`: the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True when the element lies in `q N[q]`: all exponents positive and all
    /// coefficients nonnegative.
    pub fn in_q_nonneg(&self) -> bool {
        self.terms.iter().all(|(e, c)| *e >= 1 && !c.is_negative())
    }

    /// True when `bar(x) = -x`, i.e. the coefficient of `q^-e` is minus the
    /// coefficient of `q^e` for every `e` (so the constant term vanishes).
    pub fn is_bar_antisymmetric(&self) -> bool {
        self.bar() == self.neg()
    }

    /// The positive-exponent part; for a bar-antisymmetric element `x`,
    /// `pos - bar(pos) = x` where `pos` is this truncation.
    pub fn positive_part(&self) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// The symmetric quantum integer `[k] = q^{k-1} + q^{k-3} + ... + q^{1-k}`.
    pub fn quantum_int(k: u64) -> Self {
        let mut out = Laurent::zero();
        let k = k as i64;
        let mut e = k - 1;
        while e >= 1 - k {
            out.add_term(e, BigInt::one());
            e -= 2;
        }
        out
    }

    /// `[k]! = [1][2]...[k]`.
    pub fn quantum_factorial(k: u64) -> Self {
        let mut out = Laurent::one();
        for j in 1..=k {
            out = out.mul(&Laurent::quantum_int(j));
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = *e == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if *e != 0 {
                if show_coeff {
                    out.push('*');
                }
                if *e == 1 {
                    out.push('q');
                } else {
                    out.push_str(&format!("q^{}", e));
                }
            }
        }
        write!(f, "{}", out)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(pairs: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn bar_examples() {
        // q + q^-1 is bar-symmetric
        let sym = l(&[(1, 1), (-1, 1)]);
        assert_eq!(sym.bar(), sym);
        assert_eq!(l(&[(2, 1)]).bar(), l(&[(-2, 1)]));
        assert_eq!(l(&[(0, 1), (1, 1)]).bar(), l(&[(0, 1), (-1, 1)]));
    }

    #[test]
    fn eval_one_examples() {
        assert_eq!(l(&[(1, 1), (-1, 1)]).eval_one(), BigInt::from(2));
        assert_eq!(Laurent::zero().eval_one(), BigInt::zero());
        assert_eq!(l(&[(0, 1), (1, -1)]).eval_one(), BigInt::zero());
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(Laurent::quantum_int(2), l(&[(1, 1), (-1, 1)]));
        assert_eq!(Laurent::quantum_int(1), Laurent::one());
        // [3] = q^2 + 1 + q^-2
        assert_eq!(Laurent::quantum_int(3), l(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(
            Laurent::quantum_factorial(3),
            Laurent::quantum_int(2).mul(&Laurent::quantum_int(3))
        );
    }

    #[test]
    fn positive_part_splits_antisymmetric() {
        let x = l(&[(2, 3), (-2, -3), (1, -1), (-1, 1)]);
        assert!(x.is_bar_antisymmetric());
        let p = x.positive_part();
        assert_eq!(p.sub(&p.bar()), x);
    }

    #[test]
    fn display_form() {
        assert_eq!(l(&[(1, 1), (0, -1), (-3, 2)]).to_string(), "q - 1 + 2*q^-3");
    }
}
