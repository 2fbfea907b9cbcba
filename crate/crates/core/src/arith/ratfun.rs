//! The field of rational functions in one variable over the rationals,
//! represented as a reduced fraction of integer polynomials.
//!
//! Normalization convention: numerator and denominator share no polynomial
//! factor, the pair carries no common integer content, and the denominator
//! has positive leading coefficient. This makes the representation unique,
//! so equality is plain comparison.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::laurent::Laurent;
use super::ArithError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    /// Build and normalize `num / den`. Fails on a zero denominator.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(RatFun::normalized(num, den))
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFun {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.divide_exact(&g).expect("gcd divides numerator");
        let mut den = den.divide_exact(&g).expect("gcd divides denominator");
        let content = num.content().gcd(&den.content());
        if !content.is_one() {
            num = num.divide_exact(&IntPoly::constant(content.clone())).unwrap();
            den = den.divide_exact(&IntPoly::constant(content)).unwrap();
        }
        if den.leading().map_or(false, |l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFun { num, den }
    }

    pub fn zero() -> Self {
        RatFun {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn var() -> Self {
        RatFun {
            num: IntPoly::var(),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFun {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_i64(c: i64) -> Self {
        RatFun::from_poly(IntPoly::from_i64(c))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFun::normalized(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RatFun::normalized(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RatFun::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// Evaluate at a rational point; `None` when the point is a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// The substitution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let mut num = self.num.reverse();
        let mut den = self.den.reverse();
        if dd >= dn {
            num = num.mul_x(dd - dn);
        } else {
            den = den.mul_x(dn - dd);
        }
        RatFun::normalized(num, den)
    }

    /// Convert to a Laurent polynomial with integer coefficients, when the
    /// denominator divides the numerator up to a power of `q`.
    pub fn to_laurent(&self) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let k = self.den.trailing_zeros();
        let reduced_den = self
            .den
            .divide_exact(&IntPoly::monomial(k, BigInt::one()))
            .expect("x^k divides");
        let quot = self.num.divide_exact(&reduced_den)?;
        Some(Laurent::from_terms(
            quot.coeffs()
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64 - k as i64, c.clone())),
        ))
    }

    pub fn from_laurent(l: &Laurent) -> Self {
        if l.is_zero() {
            return RatFun::zero();
        }
        let min = l.min_exp().unwrap();
        let max = l.max_exp().unwrap();
        let shift = (-min).max(0);
        let mut v = vec![BigInt::zero(); (max + shift) as usize + 1];
        for (e, c) in l.terms() {
            v[(e + shift) as usize] = c.clone();
        }
        RatFun::normalized(IntPoly::new(v), IntPoly::monomial(shift as usize, BigInt::one()))
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.to_string_var(var)
        } else {
            format!(
                "({})/({})",
                self.num.to_string_var(var),
                self.den.to_string_var(var)
            )
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("q"))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn normalize_common_factor() {
        // (q^2 - 1)/(q - 1) = (q + 1)/1
        let f = RatFun::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f.num, p(&[1, 1]));
        assert_eq!(f.den, IntPoly::one());
    }

    #[test]
    fn normalize_zero_and_content() {
        let z = RatFun::new(IntPoly::zero(), p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(z, RatFun::zero());
        // (2q)/4 = q/2
        let f = RatFun::new(p(&[0, 2]), p(&[4])).unwrap();
        assert_eq!(f.num, p(&[0, 1]));
        assert_eq!(f.den, p(&[2]));
    }

    #[test]
    fn normalize_scale_invariance() {
        let a = RatFun::new(p(&[1, 3]), p(&[2, 0, 1])).unwrap();
        let s = p(&[-7, 5]);
        let b = RatFun::new(p(&[1, 3]).mul(&s), p(&[2, 0, 1]).mul(&s)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFun::new(p(&[1]), IntPoly::zero()).is_err());
    }

    #[test]
    fn sign_convention() {
        let f = RatFun::new(p(&[1]), p(&[1, -1])).unwrap();
        assert!(f.den.leading().unwrap() > &BigInt::zero());
        assert_eq!(f.num, p(&[-1]));
    }

    #[test]
    fn field_ops() {
        let x = RatFun::var();
        let one = RatFun::one();
        // x/(x+1) + 1/(x+1) = 1
        let d = RatFun::new(p(&[1]), p(&[1, 1])).unwrap();
        let e = RatFun::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(d.add(&e), one);
        assert_eq!(x.mul(&x.inverse().unwrap()), one);
    }

    #[test]
    fn bar_involution() {
        let f = RatFun::new(p(&[1, 2]), p(&[3, 0, 1])).unwrap();
        assert_eq!(f.bar().bar(), f);
        // bar(q) = 1/q
        assert_eq!(
            RatFun::var().bar(),
            RatFun::new(p(&[1]), p(&[0, 1])).unwrap()
        );
    }

    #[test]
    fn laurent_round_trip() {
        let l = Laurent::from_terms(vec![
            (-2, BigInt::from(3)),
            (0, BigInt::from(-1)),
            (1, BigInt::from(2)),
        ]);
        let f = RatFun::from_laurent(&l);
        assert_eq!(f.to_laurent(), Some(l));
        // (q+1)/(q-1) is not Laurent
        let g = RatFun::new(p(&[1, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(g.to_laurent(), None);
    }
}
