//! Sparse symmetric functions in the power-sum basis, over any scalar ring
//! in the tower.

use std::collections::BTreeMap;

use crate::partition::{z_of, Partition};
use crate::scalar::{Rat, Scalar};

/// Finite linear combination of power-sum monomials p_mu.
#[derive(Clone, PartialEq, Debug)]
pub struct SymF<S: Scalar> {
    terms: BTreeMap<Partition, S>,
}

impl<S: Scalar> SymF<S> {
    pub fn zero() -> Self {
        SymF { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), S::one())
    }

    pub fn monomial(mu: Partition, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mu, c);
        }
        SymF { terms }
    }

    pub fn p(k: u32) -> Self {
        Self::monomial(Partition::new(vec![k]), S::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Partition, S)>) -> Self {
        let mut f = Self::zero();
        for (mu, c) in it {
            f.add_term(mu, c);
        }
        f
    }

    pub fn terms(&self) -> &BTreeMap<Partition, S> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> S {
        self.terms.get(mu).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&mu);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mu, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SymF {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (mu, k) in &self.terms {
            out.add_term(mu.clone(), k.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                out.add_term(mu.union(nu), a.mul(b));
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Highest degree among stored monomials; None when zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|mu| mu.weight()).max()
    }

    pub fn graded_piece(&self, d: usize) -> Self {
        SymF {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.weight() == d)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate_degree(&self, d: usize) -> Self {
        SymF {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.weight() <= d)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SymF<T> {
        let mut out = SymF::zero();
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), f(c));
        }
        out
    }

    /// Hall scalar product: <p_lambda, p_mu> = z_lambda delta.
    pub fn scalar_product(&self, other: &Self) -> S {
        let mut acc = S::zero();
        for (mu, a) in &self.terms {
            if let Some(b) = other.terms.get(mu) {
                acc = acc.add(&a.mul(b).mul(&S::from_rat(&z_of(mu))));
            }
        }
        acc
    }

    /// D_{p_nu} applied to self: each part k of nu acts as k d/dp_k.
    pub fn skew_by_monomial(&self, nu: &Partition) -> Self {
        let mut out = Self::zero();
        'term: for (lam, c) in &self.terms {
            let mut coeff = Rat::one();
            for (&k, &a) in &nu.mults() {
                let m = lam.mult(k);
                if a > m {
                    continue 'term;
                }
                // a applications of k d/dp_k: k^a * m (m-1) ... (m-a+1)
                for i in 0..a {
                    coeff *= crate::scalar::rint(k as i64) * crate::scalar::rint((m - i) as i64);
                }
            }
            let rest = lam.remove_multiset(nu).expect("multiplicities checked");
            out.add_term(rest, c.mul(&S::from_rat(&coeff)));
        }
        out
    }

    /// D_f applied to self, f = sum of monomials; adjoint of multiplication by f.
    pub fn skew(f: &Self, g: &Self) -> Self {
        let mut out = Self::zero();
        for (nu, c) in &f.terms {
            out = out.add(&g.skew_by_monomial(nu).scale(c));
        }
        out
    }

    /// Ring morphism p_k -> w(k) p_k.
    pub fn reweight(&self, w: &dyn Fn(u32) -> S) -> Self {
        let mut out = Self::zero();
        for (mu, c) in &self.terms {
            let mut coeff = c.clone();
            for &k in mu.parts() {
                coeff = coeff.mul(&w(k));
            }
            out.add_term(mu.clone(), coeff);
        }
        out
    }

    /// Ring morphism p_k -> p_k + c(k).
    pub fn shift_alphabet(&self, c: &dyn Fn(u32) -> S) -> Self {
        let mut out = Self::zero();
        for (mu, coeff) in &self.terms {
            let mut expanded = Self::monomial(Partition::empty(), coeff.clone());
            for &k in mu.parts() {
                let factor = Self::p(k).add(&Self::monomial(Partition::empty(), c(k)));
                expanded = expanded.mul(&factor);
            }
            out = out.add(&expanded);
        }
        out
    }
}

/// Complete homogeneous function h_m in the power-sum basis:
/// h_m = sum_{mu |- m} p_mu / z_mu.
pub fn h_in_p<S: Scalar>(m: usize) -> SymF<S> {
    let mut out = SymF::zero();
    for mu in crate::partition::partitions_of(m) {
        let z = z_of(&mu);
        out.add_term(mu, S::from_rat(&(Rat::one() / z)));
    }
    out
}

/// Elementary function e_m = sum_{mu |- m} (-1)^{m - l(mu)} p_mu / z_mu.
pub fn e_in_p<S: Scalar>(m: usize) -> SymF<S> {
    let mut out = SymF::zero();
    for mu in crate::partition::partitions_of(m) {
        let sign = if (m - mu.len()) % 2 == 0 { 1 } else { -1 };
        let c = crate::scalar::rint(sign) / z_of(&mu);
        out.add_term(mu, S::from_rat(&c));
    }
    out
}

impl<S: Scalar> std::fmt::Display for SymF<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{:?}*p{}", c, mu)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::QLaurent;
    use crate::scalar::{rfrac, rint};

    fn p(parts: &[u32]) -> SymF<Rat> {
        SymF::monomial(Partition::new(parts.to_vec()), Rat::one())
    }

    #[test]
    fn product_of_monomials() {
        assert_eq!(p(&[2]).mul(&p(&[2, 1])), p(&[2, 2, 1]));
        let f = p(&[1]).add(&p(&[2]));
        let sq = f.mul(&f);
        let expect = p(&[1, 1]).add(&p(&[2, 1]).scale(&rint(2))).add(&p(&[2, 2]));
        assert_eq!(sq, expect);
    }

    #[test]
    fn scalar_product_p_basis() {
        assert_eq!(p(&[2, 1]).scalar_product(&p(&[2, 1])), rint(2));
        assert_eq!(p(&[3]).scalar_product(&p(&[1, 1, 1])), rint(0));
    }

    #[test]
    fn skew_examples() {
        assert_eq!(
            p(&[2, 2, 1]).skew_by_monomial(&Partition::new(vec![2])),
            p(&[2, 1]).scale(&rint(4))
        );
        assert!(p(&[2]).skew_by_monomial(&Partition::new(vec![1])).is_zero());
        assert_eq!(
            p(&[1, 1, 1]).skew_by_monomial(&Partition::new(vec![1, 1])),
            p(&[1]).scale(&rint(6))
        );
    }

    #[test]
    fn adjointness_small() {
        // <D_f g, h> = <g, f h> on p-monomials
        let pool: Vec<SymF<Rat>> = vec![p(&[1]), p(&[2]), p(&[2, 1]), p(&[3, 1]), p(&[1, 1])];
        for f in &pool {
            for g in &pool {
                for h in &pool {
                    let lhs = SymF::skew(f, g).scalar_product(h);
                    let rhs = g.scalar_product(&f.mul(h));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn reweight_h2() {
        // h_2 = (p_11 + p_2)/2 with w_k = q^k - 1
        let h2: SymF<QLaurent> = h_in_p(2);
        let rw = h2.reweight(&|k| QLaurent::q_diff(k as i64, 0));
        let qm1 = QLaurent::q_diff(1, 0);
        let expect = SymF::monomial(Partition::new(vec![1, 1]), qm1.mul(&qm1).scale(&rfrac(1, 2)))
            .add(&SymF::monomial(
                Partition::new(vec![2]),
                QLaurent::q_diff(2, 0).scale(&rfrac(1, 2)),
            ));
        assert_eq!(rw, expect);
        // w = 1 leaves f unchanged; w = 0 keeps only the constant term
        assert_eq!(h2.reweight(&|_| QLaurent::one()), h2);
        let f = h2.add(&SymF::one());
        assert_eq!(f.reweight(&|_| QLaurent::zero()), SymF::one());
    }

    #[test]
    fn reweight_composes_pointwise() {
        let f: SymF<Rat> = h_in_p(4);
        let w1 = |k: u32| rint(k as i64);
        let w2 = |k: u32| rint(k as i64 + 1);
        let a = f.reweight(&w1).reweight(&w2);
        let b = f.reweight(&|k| w1(k) * w2(k));
        assert_eq!(a, b);
    }

    #[test]
    fn shift_alphabet_examples() {
        let one = |k: u32| if k == 1 { Rat::one() } else { Rat::zero() };
        assert_eq!(p(&[2]).shift_alphabet(&one), p(&[2]));
        assert_eq!(p(&[1]).shift_alphabet(&one), p(&[1]).add(&SymF::one()));
        // h_2 at A + E = h_2(A) + p_1(A) + 1/2
        let h2: SymF<Rat> = h_in_p(2);
        let shifted = h2.shift_alphabet(&one);
        let expect = h2
            .add(&p(&[1]))
            .add(&SymF::monomial(Partition::empty(), rfrac(1, 2)));
        assert_eq!(shifted, expect);
    }
}
