//! Laurent polynomials in a formal variable q with exact rational coefficients.

use std::collections::BTreeMap;

use crate::scalar::{rpow, Rat, Scalar};
use crate::tseries::TSeries;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, Rat>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { terms: BTreeMap::new() }
    }

    pub fn monomial(exp: i64, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !Scalar::is_zero(&coeff) {
            terms.insert(exp, coeff);
        }
        QLaurent { terms }
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// q^e
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, crate::scalar::rint(1))
    }

    /// q^a - q^b
    pub fn q_diff(a: i64, b: i64) -> Self {
        Self::q_pow(a).sub(&Self::q_pow(b))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rat> {
        &self.terms
    }

    pub fn coeff(&self, e: i64) -> Rat {
        self.terms.get(&e).cloned().unwrap_or(crate::scalar::rint(0))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_add(terms: &mut BTreeMap<i64, Rat>, e: i64, c: Rat) {
        if Scalar::is_zero(&c) {
            return;
        }
        let entry = terms.entry(e).or_insert_with(|| crate::scalar::rint(0));
        *entry += c;
        if Scalar::is_zero(entry) {
            terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_add(&mut terms, *e, c.clone());
        }
        QLaurent { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                Self::insert_add(&mut terms, e1 + e2, c1 * c2);
            }
        }
        QLaurent { terms }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if Scalar::is_zero(c) {
            return Self::zero();
        }
        QLaurent {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; None if the divisor does not divide exactly.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both to ordinary polynomials and long-divide.
        let smin = self.min_exp().unwrap();
        let dmin = divisor.min_exp().unwrap();
        let mut rem = self.terms.clone();
        let dmax = divisor.max_exp().unwrap();
        let dlead = divisor.coeff(dmax);
        let mut quo: BTreeMap<i64, Rat> = BTreeMap::new();
        while let Some((&rmax, _)) = rem.iter().next_back() {
            let rlead = rem[&rmax].clone();
            let qe = rmax - dmax;
            // Degrees below the reachable range mean inexact division.
            if qe < smin - dmin {
                return None;
            }
            let qc = rlead / &dlead;
            Self::insert_add(&mut quo, qe, qc.clone());
            for (e, c) in &divisor.terms {
                Self::insert_add(&mut rem, e + qe, -(c * &qc));
            }
        }
        Some(QLaurent { terms: quo })
    }

    /// Evaluate at an exact rational point q = a (a != 0 if negative exponents occur).
    pub fn eval(&self, a: &Rat) -> Rat {
        let mut acc = crate::scalar::rint(0);
        for (e, c) in &self.terms {
            acc += c * rpow(a, *e);
        }
        acc
    }

    /// q -> q^{-1}
    pub fn invert_q(&self) -> Self {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute q = e^t, truncated at order `trunc`.
    pub fn subst_exp(&self, trunc: usize) -> TSeries {
        let mut out = TSeries::zero_trunc(trunc);
        for (e, c) in &self.terms {
            out = out.add(&TSeries::exp_linear(*e, trunc).scale(c));
        }
        out
    }
}

impl Scalar for QLaurent {
    fn zero() -> Self {
        QLaurent::zero()
    }
    fn one() -> Self {
        QLaurent::one()
    }
    fn is_zero(&self) -> bool {
        QLaurent::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QLaurent::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QLaurent::sub(self, other)
    }
    fn neg(&self) -> Self {
        QLaurent::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        QLaurent::mul(self, other)
    }
    fn from_rat(r: &Rat) -> Self {
        QLaurent::constant(r.clone())
    }
}

impl std::fmt::Display for QLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})q", c)?,
                _ => write!(f, "({})q^{}", c, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rfrac, rint};

    #[test]
    fn arithmetic_basics() {
        let f = QLaurent::q_pow(1).add(&QLaurent::q_pow(-1));
        let g = f.mul(&f);
        assert_eq!(g.coeff(2), rint(1));
        assert_eq!(g.coeff(0), rint(2));
        assert_eq!(g.coeff(-2), rint(1));
    }

    #[test]
    fn exact_division() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = QLaurent::q_diff(2, 0);
        let den = QLaurent::q_pow(1).sub(&QLaurent::one());
        let quo = num.div_exact(&den).unwrap();
        assert_eq!(quo, QLaurent::q_pow(1).add(&QLaurent::one()));
        // (1 - q^{-3}) divisible by (1 - q^{-1})
        let num = QLaurent::one().sub(&QLaurent::q_pow(-3));
        let den = QLaurent::one().sub(&QLaurent::q_pow(-1));
        let quo = num.div_exact(&den).unwrap();
        assert_eq!(quo.mul(&den), num);
        // q^2 + 1 not divisible by q - 1
        let num = QLaurent::q_pow(2).add(&QLaurent::one());
        assert!(num.div_exact(&den.clone()).is_none());
    }

    #[test]
    fn eval_point() {
        let f = QLaurent::q_diff(2, -1).scale(&rfrac(1, 2));
        assert_eq!(f.eval(&rint(2)), rfrac(7, 4));
    }
}
