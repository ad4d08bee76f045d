//! Exact scalar tower: arbitrary-precision rationals, Bernoulli numbers,
//! and the ring interface shared by Laurent polynomials and truncated series.

use std::sync::Mutex;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::sync::OnceLock;

pub type Rat = BigRational;

pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rfrac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer power with negative exponents allowed (base must be nonzero then).
pub fn rpow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num::pow::pow(base.clone(), exp as usize)
    } else {
        num::pow::pow(base.clone(), (-exp) as usize).recip()
    }
}

pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return rint(0);
    }
    let mut acc = rint(1);
    for i in 0..k {
        acc *= rint((n - i) as i64);
        acc /= rint((i + 1) as i64);
    }
    acc
}

/// Falling factorial (n)_k = n(n-1)...(n-k+1).
pub fn falling(n: i64, k: usize) -> Rat {
    let mut acc = rint(1);
    for i in 0..k {
        acc *= rint(n - i as i64);
    }
    acc
}

pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Memoized Bernoulli numbers, convention B_1 = -1/2
/// (generating function t/(e^t - 1)).
pub struct BernoulliCache {
    vals: Vec<Rat>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache { vals: vec![rint(1)] }
    }

    pub fn get(&mut self, k: usize) -> Rat {
        while self.vals.len() <= k {
            let m = self.vals.len();
            // sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1
            let mut s = rint(0);
            for j in 0..m {
                s += binomial(m + 1, j) * &self.vals[j];
            }
            self.vals.push(-s / binomial(m + 1, m));
        }
        self.vals[k].clone()
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

static BERNOULLI: OnceLock<Mutex<BernoulliCache>> = OnceLock::new();

pub fn bernoulli(k: usize) -> Rat {
    let m = BERNOULLI.get_or_init(|| Mutex::new(BernoulliCache::new()));
    m.lock().unwrap().get(k)
}

/// Common interface of the coefficient rings (rationals, Laurent
/// polynomials in q, truncated series in t).
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_rat(r: &Rat) -> Self;
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), rint(1));
        assert_eq!(bernoulli(1), rfrac(-1, 2));
        assert_eq!(bernoulli(2), rfrac(1, 6));
        assert_eq!(bernoulli(3), rint(0));
        assert_eq!(bernoulli(8), rfrac(-1, 30));
    }

    #[test]
    fn falling_values() {
        assert_eq!(falling(5, 3), rint(60));
        assert_eq!(falling(7, 0), rint(1));
        assert_eq!(falling(2, 4), rint(0));
    }

    #[test]
    fn rat_round_trip() {
        let r = rfrac(-6, 4);
        assert_eq!(rat_string(&r), "-3/2");
        assert_eq!(parse_rat("-3/2").unwrap(), r);
        assert_eq!(parse_rat("7").unwrap(), rint(7));
        assert!(parse_rat("1/0").is_none());
    }
}
