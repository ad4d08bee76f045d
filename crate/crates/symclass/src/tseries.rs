//! Truncated formal power series in t with exact rational coefficients.
//!
//! A series carries its own truncation order; arithmetic truncates at the
//! tighter of the two operands. `UNTRUNCATED` marks exact polynomials
//! (e.g. scalars lifted from the rationals).

use num::bigint::BigInt;
use crate::scalar::{factorial, rint, Rat, Scalar};

pub const UNTRUNCATED: usize = usize::MAX;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSeries {
    trunc: usize,
    coeffs: Vec<Rat>, // coefficient of t^i at index i, trailing zeros trimmed
}

impl TSeries {
    pub fn zero_trunc(trunc: usize) -> Self {
        TSeries { trunc, coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        let mut s = TSeries { trunc: UNTRUNCATED, coeffs: vec![c] };
        s.normalize();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>, trunc: usize) -> Self {
        let mut s = TSeries { trunc, coeffs };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.trunc != UNTRUNCATED && self.coeffs.len() > self.trunc + 1 {
            self.coeffs.truncate(self.trunc + 1);
        }
        while self.coeffs.last().map_or(false, |c| Scalar::is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or(rint(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(coeffs, trunc)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        if self.is_zero() || other.is_zero() {
            return Self::zero_trunc(trunc);
        }
        let cap = if trunc == UNTRUNCATED {
            self.coeffs.len() + other.coeffs.len() - 1
        } else {
            (self.coeffs.len() + other.coeffs.len() - 1).min(trunc + 1)
        };
        let mut coeffs = vec![rint(0); cap];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Scalar::is_zero(a) || i >= cap {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= cap {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs, trunc)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TSeries {
            trunc: self.trunc,
            coeffs: if Scalar::is_zero(c) {
                vec![]
            } else {
                self.coeffs.iter().map(|k| k * c).collect()
            },
        }
    }

    /// exp(a t) truncated at order `trunc`.
    pub fn exp_linear(a: i64, trunc: usize) -> Self {
        let mut coeffs = Vec::with_capacity(trunc + 1);
        let mut pw = rint(1);
        let a = Rat::from_integer(BigInt::from(a));
        for j in 0..=trunc {
            coeffs.push(&pw / factorial(j));
            pw *= &a;
        }
        Self::from_coeffs(coeffs, trunc)
    }
}

impl Scalar for TSeries {
    fn zero() -> Self {
        TSeries::zero_trunc(UNTRUNCATED)
    }
    fn one() -> Self {
        TSeries::constant(rint(1))
    }
    fn is_zero(&self) -> bool {
        TSeries::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        TSeries::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        TSeries::sub(self, other)
    }
    fn neg(&self) -> Self {
        TSeries::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        TSeries::mul(self, other)
    }
    fn from_rat(r: &Rat) -> Self {
        TSeries::constant(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::QLaurent;
    use crate::scalar::{rfrac, rint};

    #[test]
    fn exp_series() {
        let e = TSeries::exp_linear(1, 4);
        assert_eq!(e.coeff(0), rint(1));
        assert_eq!(e.coeff(3), rfrac(1, 6));
        assert_eq!(e.coeff(4), rfrac(1, 24));
    }

    #[test]
    fn truncation_is_consistent() {
        let a = TSeries::exp_linear(1, 3);
        let b = TSeries::exp_linear(-1, 5);
        let p = a.mul(&b);
        assert_eq!(p.trunc(), 3);
        assert_eq!(p, TSeries::from_coeffs(vec![rint(1)], 3));
    }

    #[test]
    fn laurent_substitution_inversion() {
        // substituting q = e^t after q -> q^{-1} agrees with substituting e^{-t}
        let f = QLaurent::q_diff(3, -2).scale(&rfrac(2, 5));
        let lhs = f.invert_q().subst_exp(6);
        let mut rhs = TSeries::zero_trunc(6);
        for (e, c) in f.terms() {
            rhs = rhs.add(&TSeries::exp_linear(-e, 6).scale(c));
        }
        assert_eq!(lhs, rhs);
    }
}
