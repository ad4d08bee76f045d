//! Integer partitions: the indexing objects for conjugacy classes and
//! power-sum monomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::qlaurent::QLaurent;
use crate::scalar::{factorial, rint, Rat};

/// Weakly decreasing list of positive parts; the empty list is the unique
/// partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of the part k.
    pub fn mult(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    pub fn mults(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    pub fn add_part(&self, k: u32) -> Self {
        assert!(k > 0);
        let mut parts = self.0.clone();
        parts.push(k);
        Partition::new(parts)
    }

    /// Remove the multiset `other`; None if it is not contained.
    pub fn remove_multiset(&self, other: &Self) -> Option<Self> {
        let mut m = self.mults();
        for (&k, &c) in &other.mults() {
            let have = m.get_mut(&k)?;
            if *have < c {
                return None;
            }
            *have -= c;
        }
        let mut parts = vec![];
        for (k, c) in m {
            parts.extend(std::iter::repeat(k).take(c));
        }
        Some(Partition::new(parts))
    }

    /// Pad with parts equal to 1 up to total weight n.
    pub fn pad_to(&self, n: usize) -> Self {
        let w = self.weight();
        assert!(w <= n, "cannot pad partition of {} to weight {}", w, n);
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat(1).take(n - w));
        Partition::new(parts)
    }

    /// Drop all parts equal to 1; returns (reduced partition, number dropped).
    pub fn strip_ones(&self) -> (Partition, usize) {
        let kept: Vec<u32> = self.0.iter().copied().filter(|&p| p > 1).collect();
        let dropped = self.0.len() - kept.len();
        (Partition(kept), dropped)
    }

    /// No part equal to 1.
    pub fn is_reduced(&self) -> bool {
        self.0.last().map_or(true, |&p| p > 1)
    }
}

/// Ordered by weight, then reverse lexicographically within a weight
/// ((n) first, (1^n) last). This is the canonical iteration order of every
/// association table keyed by partitions.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(other.0.iter()) {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                self.0.len().cmp(&other.0.len())
            })
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// All partitions of n in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = vec![];
    let mut current: Vec<u32> = vec![];
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p as u32);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// z_mu = prod_i i^{m_i} m_i!; the centralizer order of a permutation of
/// cycle type mu, so |C_mu| = n!/z_mu.
pub fn z_of(mu: &Partition) -> Rat {
    let mut z = rint(1);
    for (&k, &m) in &mu.mults() {
        z *= num::pow::pow(rint(k as i64), m) * factorial(m);
    }
    z
}

/// Multiset of contents l - k over cells (k, l) of the diagram, row by row.
pub fn contents(lam: &Partition) -> Vec<i64> {
    let mut out = vec![];
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row as i64 {
            out.push(j - i as i64);
        }
    }
    out
}

/// Power sum of the contents, with p_0 = |lambda|.
pub fn content_power_sum(lam: &Partition, k: usize) -> Rat {
    let mut s = rint(0);
    for c in contents(lam) {
        s += rpow_int(c, k);
    }
    s
}

fn rpow_int(base: i64, exp: usize) -> Rat {
    num::pow::pow(rint(base), exp)
}

/// Sum of q^{c} over the cells of lambda.
pub fn content_generating(lam: &Partition) -> QLaurent {
    let mut g = QLaurent::zero();
    for c in contents(lam) {
        g = g.add(&QLaurent::q_pow(c));
    }
    g
}

/// The closed form (q/(q-1)) sum_i (q^{lambda_i - i} - q^{-i}), by exact
/// Laurent division; equals `content_generating`.
pub fn content_generating_closed(lam: &Partition) -> QLaurent {
    let mut num = QLaurent::zero();
    for (i, &row) in lam.parts().iter().enumerate() {
        let i = (i + 1) as i64;
        num = num.add(&QLaurent::q_diff(row as i64 - i, -i));
    }
    let num = num.mul(&QLaurent::q_pow(1));
    num.div_exact(&QLaurent::q_diff(1, 0))
        .expect("content generating function numerator is divisible by q-1")
}
