//! Brute-force exact computation in the group algebras of symmetric groups:
//! class sums, convolution, Jucys-Murphy elements, the Frobenius map,
//! structure constants, and cycle-erasure maps. This module is the ground
//! truth the differential-operator constructions are checked against, so it
//! stays independent of any character-theoretic code path.

use std::collections::BTreeMap;

use crate::partition::{z_of, Partition};
use crate::perm::{all_perms, Perm};
use crate::scalar::{factorial, rfrac, rint, Rat, Scalar};
use crate::symfunc::SymF;

/// Default brute-force bound; 8! = 40320 is permitted behind an explicit
/// opt-in at the call site.
pub const DEFAULT_MAX_N: usize = 7;

/// Sparse element of the rational group algebra of the symmetric group of
/// degree n.
#[derive(Clone, PartialEq, Debug)]
pub struct GAElem {
    n: usize,
    terms: BTreeMap<Perm, Rat>,
}

impl GAElem {
    pub fn zero(n: usize) -> Self {
        GAElem { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Perm::identity(n))
    }

    pub fn from_perm(p: Perm) -> Self {
        let n = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, rint(1));
        GAElem { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Rat> {
        &self.terms
    }

    pub fn coeff(&self, p: &Perm) -> Rat {
        self.terms.get(p).cloned().unwrap_or(rint(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, p: Perm, c: Rat) {
        assert_eq!(p.degree(), self.n, "degree mismatch");
        if Scalar::is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert(rint(0));
        *entry += c;
        if Scalar::is_zero(entry) {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rint(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if Scalar::is_zero(c) {
            return Self::zero(self.n);
        }
        GAElem {
            n: self.n,
            terms: self.terms.iter().map(|(p, k)| (p.clone(), k * c)).collect(),
        }
    }

    /// Convolution product, bilinear extension of (s t)(i) = s(t(i)).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut out = Self::zero(self.n);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Linear map sending a permutation of cycle type mu to p_mu.
    pub fn frobenius(&self) -> SymF<Rat> {
        let mut out = SymF::zero();
        for (p, c) in &self.terms {
            out.add_term(p.cycle_type(), c.clone());
        }
        out
    }

    pub fn is_central(&self) -> bool {
        for i in 0..self.n.saturating_sub(1) {
            let t = GAElem::from_perm(Perm::transposition(self.n, i, i + 1));
            if self.mul(&t) != t.mul(self) {
                return false;
            }
        }
        true
    }

    /// Decompose a central element as a combination of class sums, keyed by
    /// cycle type. Fails if any class has inconsistent coefficients.
    pub fn decompose_central(&self) -> Option<BTreeMap<Partition, Rat>> {
        let mut out = BTreeMap::new();
        for (p, c) in &self.terms {
            let ty = p.cycle_type();
            match out.get(&ty) {
                None => {
                    out.insert(ty, c.clone());
                }
                Some(existing) => {
                    if existing != c {
                        return None;
                    }
                }
            }
        }
        // Every member of each supported class must be present.
        let mut total = 0usize;
        for ty in out.keys() {
            let size = factorial(self.n) / z_of(ty);
            total += rat_to_usize(&size);
        }
        if total != self.terms.len() {
            return None;
        }
        Some(out)
    }
}

fn rat_to_usize(r: &Rat) -> usize {
    use num::traits::ToPrimitive;
    r.to_integer().to_usize().expect("count fits in usize")
}

/// Sum of all permutations of cycle type mu padded with 1s to weight n.
pub fn class_sum(n: usize, mu: &Partition) -> GAElem {
    assert!(mu.weight() <= n, "class type heavier than the group degree");
    let padded = mu.pad_to(n);
    let mut out = GAElem::zero(n);
    for p in all_perms(n) {
        if p.cycle_type() == padded {
            out.add_term(p, rint(1));
        }
    }
    out
}

/// Sum of all permutations of degree n with exactly c cycles.
pub fn sum_with_cycle_count(n: usize, c: usize) -> GAElem {
    let mut out = GAElem::zero(n);
    for p in all_perms(n) {
        if p.num_cycles() == c {
            out.add_term(p, rint(1));
        }
    }
    out
}

/// The Jucys-Murphy element xi_j = sum_{i<j} (i, j), 1-based j.
pub fn jm_element(n: usize, j: usize) -> GAElem {
    assert!(j >= 1 && j <= n);
    let mut out = GAElem::zero(n);
    for i in 1..j {
        out.add_term(Perm::transposition(n, i - 1, j - 1), rint(1));
    }
    out
}

/// All Jucys-Murphy elements xi_1..xi_n.
pub fn jm_tuple(n: usize) -> Vec<GAElem> {
    (1..=n).map(|j| jm_element(n, j)).collect()
}

/// p_k of the Jucys-Murphy elements, with p_0 = n * identity.
pub fn jm_power_sum(n: usize, k: usize) -> GAElem {
    if k == 0 {
        return GAElem::identity(n).scale(&rint(n as i64));
    }
    let mut out = GAElem::zero(n);
    for xi in jm_tuple(n) {
        out = out.add(&xi.pow(k));
    }
    out
}

/// e_k of the Jucys-Murphy elements, via the column DP
/// e_k^{(j)} = e_k^{(j-1)} + xi_j e_{k-1}^{(j-1)}.
pub fn jm_elementary(n: usize, k: usize) -> GAElem {
    if k > n {
        return GAElem::zero(n);
    }
    let mut e: Vec<GAElem> = (0..=k)
        .map(|i| {
            if i == 0 {
                GAElem::identity(n)
            } else {
                GAElem::zero(n)
            }
        })
        .collect();
    for xi in jm_tuple(n) {
        for i in (1..=k).rev() {
            let bump = xi.mul(&e[i - 1]);
            e[i] = e[i].add(&bump);
        }
    }
    e[k].clone()
}

/// Structure constants of the class algebra: C_alpha C_beta = sum c^gamma C_gamma.
/// alpha, beta are given as types of weight <= n and padded with 1s.
pub fn structure_constants(n: usize, alpha: &Partition, beta: &Partition) -> BTreeMap<Partition, Rat> {
    let prod = class_sum(n, alpha).mul(&class_sum(n, beta));
    prod.decompose_central()
        .expect("product of class sums must be central")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DeltaVariant {
    Prime,
    DoublePrime,
    Full,
}

/// Cycle-erasure maps from degree n to degree n - k: the top k letters
/// n, n-1, ..., n-k+1 are erased from the cycle decomposition, with weights
/// depending on how they sit in the cycles.
///
/// The single-cycle weight 1/((l-1)...(l-k)) is undefined at l = k; that
/// degenerate case is assigned 1/(k-1)! so that single fixed-point erasure
/// carries weight 1.
pub fn delta_map(u: &GAElem, k: usize, variant: DeltaVariant) -> GAElem {
    assert!(k >= 1 && u.n() >= k, "need n >= k >= 1");
    let n = u.n();
    let mut out = GAElem::zero(n - k);
    for (p, c) in u.terms() {
        match variant {
            DeltaVariant::Prime => delta_prime_perm(p, k, c, &mut out),
            DeltaVariant::DoublePrime => delta_double_prime_perm(p, k, c, &mut out),
            DeltaVariant::Full => {
                delta_prime_perm(p, k, c, &mut out);
                delta_double_prime_perm(p, k, c, &mut out);
            }
        }
    }
    out
}

/// Erase all letters >= keep from the cycle notation, keeping cyclic order.
fn erase_top(p: &Perm, keep: usize) -> Perm {
    let cycles: Vec<Vec<usize>> = p
        .cycles()
        .into_iter()
        .map(|c| c.into_iter().filter(|&x| x < keep).collect())
        .filter(|c: &Vec<usize>| !c.is_empty())
        .collect();
    Perm::from_cycles(keep, &cycles)
}

fn delta_prime_perm(p: &Perm, k: usize, c: &Rat, out: &mut GAElem) {
    let n = p.degree();
    let top: Vec<usize> = (n - k..n).collect(); // 0-based letters n-k+1..n
    let cycles = p.cycles();
    let home = cycles.iter().find(|cyc| cyc.contains(&top[0]));
    let home = match home {
        Some(h) => h,
        None => return,
    };
    if !top.iter().all(|t| home.contains(t)) {
        return;
    }
    let l = home.len();
    let weight = if l == k {
        factorial(k - 1).recip()
    } else {
        let mut w = rint(1);
        for i in 1..=k {
            w *= rint((l - i) as i64);
        }
        w.recip()
    };
    out.add_term(erase_top(p, n - k), c * weight);
}

fn delta_double_prime_perm(p: &Perm, k: usize, c: &Rat, out: &mut GAElem) {
    let n = p.degree();
    let top: Vec<usize> = (n - k..n).collect();
    let cycles = p.cycles();
    // The erased letters must constitute exactly two cycles.
    let touched: Vec<&Vec<usize>> = cycles
        .iter()
        .filter(|cyc| cyc.iter().any(|x| top.contains(x)))
        .collect();
    if touched.len() != 2 {
        return;
    }
    let total: usize = touched.iter().map(|c| c.len()).sum();
    if total != k || !touched.iter().all(|cyc| cyc.iter().all(|x| top.contains(x))) {
        return;
    }
    let (la, lb) = (touched[0].len(), touched[1].len());
    // Sum over ordered pairs (i, j) with i + j = k matching the two lengths.
    let mut matches = 0i64;
    for i in 1..k {
        let j = k - i;
        if (i == la && j == lb) || (i == lb && j == la) {
            matches += (i * j) as i64;
        }
    }
    if matches == 0 {
        return;
    }
    let weight = rfrac(matches, 2) / factorial(k);
    out.add_term(erase_top(p, n - k), c * weight);
}

/// The element ch(a_{kappa;n}) scaled back into the group algebra:
/// a_{kappa;n} = (z_{kappa,1^{n-k}} / (n-k)!) C_{kappa,1^{n-k}}, zero for n < k.
pub fn a_class(kappa: &Partition, n: usize) -> GAElem {
    let k = kappa.weight();
    if n < k {
        return GAElem::zero(n);
    }
    let padded = kappa.pad_to(n);
    let coeff = z_of(&padded) / factorial(n - k);
    class_sum(n, kappa).scale(&coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::schur::times_product;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn class_sum_sizes() {
        assert_eq!(class_sum(3, &part(&[2])).support_size(), 3);
        assert_eq!(class_sum(4, &part(&[2, 2])).support_size(), 3);
        assert_eq!(class_sum(4, &part(&[4])).support_size(), 6);
    }

    #[test]
    fn class_product_s3() {
        // C_21 * C_21 = 3 C_111 + 3 C_3
        let c = class_sum(3, &part(&[2]));
        let prod = c.mul(&c);
        let expect = GAElem::identity(3)
            .scale(&rint(3))
            .add(&class_sum(3, &part(&[3])).scale(&rint(3)));
        assert_eq!(prod, expect);
        let u = class_sum(3, &part(&[3]));
        assert_eq!(GAElem::identity(3).mul(&u), u);
    }

    #[test]
    fn class_product_s4_matches_known_element() {
        // C_211^2 = 6 C_1111 + 3 C_31 + 2 C_22
        let c = class_sum(4, &part(&[2]));
        let d = c.mul(&c).decompose_central().unwrap();
        assert_eq!(d[&part(&[1, 1, 1, 1])], rint(6));
        assert_eq!(d[&part(&[3, 1])], rint(3));
        assert_eq!(d[&part(&[2, 2])], rint(2));
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn structure_constant_examples() {
        let sc = structure_constants(3, &part(&[2]), &part(&[2]));
        assert_eq!(sc[&part(&[1, 1, 1])], rint(3));
        let sc = structure_constants(4, &part(&[2]), &part(&[2]));
        assert_eq!(sc[&part(&[3, 1])], rint(3));
        // identity class acts as identity
        let sc = structure_constants(4, &Partition::empty(), &part(&[3]));
        assert_eq!(sc.len(), 1);
        assert_eq!(sc[&part(&[3, 1])], rint(1));
    }

    #[test]
    fn jm_basics() {
        assert!(jm_element(3, 1).is_zero());
        // e_1(Xi_3) = C_21
        assert_eq!(jm_elementary(3, 1), class_sum(3, &part(&[2])));
        // p_2(Xi_3) = C_3 + 3 C_111
        let expect = class_sum(3, &part(&[3])).add(&GAElem::identity(3).scale(&rint(3)));
        assert_eq!(jm_power_sum(3, 2), expect);
    }

    #[test]
    fn jm_pairwise_commute() {
        let xs = jm_tuple(5);
        for a in &xs {
            for b in &xs {
                assert_eq!(a.mul(b), b.mul(a));
            }
        }
    }

    #[test]
    fn jucys_theorem_small() {
        for n in 1..=5 {
            for k in 0..n {
                assert_eq!(
                    jm_elementary(n, k),
                    sum_with_cycle_count(n, n - k),
                    "n={} k={}",
                    n,
                    k
                );
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let t = GAElem::from_perm(Perm::transposition(3, 0, 1));
        assert_eq!(t.frobenius(), SymF::monomial(part(&[2, 1]), rint(1)));
        let c = class_sum(3, &part(&[2]));
        assert_eq!(c.frobenius(), SymF::monomial(part(&[2, 1]), rint(3)));
    }

    #[test]
    fn frobenius_intertwines_products() {
        let c = class_sum(3, &part(&[2]));
        let lhs = c.mul(&c).frobenius();
        let rhs = times_product(&c.frobenius(), &c.frobenius());
        assert_eq!(lhs, rhs);
        let expect = SymF::monomial(part(&[1, 1, 1]), rint(3))
            .add(&SymF::monomial(part(&[3]), rint(6)));
        assert_eq!(lhs, expect);
    }

    #[test]
    fn frobenius_intertwines_all_classes() {
        for n in 1..=5 {
            for alpha in partitions_of(n) {
                for beta in partitions_of(n) {
                    let (a, _) = alpha.strip_ones();
                    let (b, _) = beta.strip_ones();
                    let ca = class_sum(n, &a);
                    let cb = class_sum(n, &b);
                    let lhs = ca.mul(&cb).frobenius();
                    let rhs = times_product(&ca.frobenius(), &cb.frobenius());
                    assert_eq!(lhs, rhs, "n={} {} {}", n, alpha, beta);
                }
            }
        }
    }

    #[test]
    fn centrality_of_generators() {
        for n in 2..=5 {
            assert!(class_sum(n, &part(&[2])).is_central());
            assert!(jm_power_sum(n, 2).is_central());
            assert!(jm_elementary(n, 2).is_central());
        }
    }

    #[test]
    fn delta_examples() {
        // delta'_1 on the 3-cycle (123): weight 1/2, erased to (12)
        let p = Perm::from_one_line(&[2, 3, 1]);
        let got = delta_map(&GAElem::from_perm(p), 1, DeltaVariant::Prime);
        let expect = GAElem::from_perm(Perm::transposition(2, 0, 1)).scale(&rfrac(1, 2));
        assert_eq!(got, expect);
        // delta''_1 is identically zero
        let got = delta_map(&class_sum(4, &part(&[3])), 1, DeltaVariant::DoublePrime);
        assert!(got.is_zero());
        // delta''_2 on (12)(3)(4): both top letters fixed, weight 1/4
        let p = Perm::from_one_line(&[2, 1, 3, 4]);
        let got = delta_map(&GAElem::from_perm(p), 2, DeltaVariant::DoublePrime);
        let expect = GAElem::from_perm(Perm::transposition(2, 0, 1)).scale(&rfrac(1, 4));
        assert_eq!(got, expect);
    }

    #[test]
    fn delta_prime_fixed_point_erasure_weight_one() {
        // k = 1, top letter a fixed point: degenerate l = k case, weight 1
        let p = Perm::from_one_line(&[2, 1, 3]);
        let got = delta_map(&GAElem::from_perm(p), 1, DeltaVariant::Prime);
        assert_eq!(got, GAElem::from_perm(Perm::transposition(2, 0, 1)));
    }

    #[test]
    fn a_class_examples() {
        // a_{(2);3} = 2 C_21, frobenius 6 p_21
        let a = a_class(&part(&[2]), 3);
        assert_eq!(a, class_sum(3, &part(&[2])).scale(&rint(2)));
        assert_eq!(a.frobenius(), SymF::monomial(part(&[2, 1]), rint(6)));
        assert!(a_class(&part(&[3]), 2).is_zero());
    }
}
