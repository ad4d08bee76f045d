//! Gaussian matrix-integral machinery: truncated polynomial rings in the
//! eigenvalue variables of two diagonal matrices, Wick perfect-matching
//! enumeration with exact propagators, the closed-form evaluation of
//! <p_rho(AZBZ*)>, and the differential operators H_rho implementing
//! multiplication by padded conjugacy classes.

use std::collections::BTreeMap;

use crate::diffop::PolyDiffOp;
use crate::partition::{z_of, Partition};
use crate::perm::{all_perms, Perm};
use crate::scalar::{rint, Rat, Scalar};

/// Polynomial in a_1..a_M, b_1..b_M with a total-degree cap. Exponent vectors
/// have length 2M: a-variables first, then b-variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    cap: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(m: usize, cap: usize) -> Self {
        MPoly { nvars: 2 * m, cap, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, cap: usize, c: Rat) -> Self {
        let mut p = Self::zero(m, cap);
        p.add_term(vec![0; 2 * m], c);
        p
    }

    pub fn one(m: usize, cap: usize) -> Self {
        Self::constant(m, cap, rint(1))
    }

    /// The variable a_i (1-based) for `star == false`, b_i for `star == true`.
    pub fn var(m: usize, cap: usize, star: bool, i: usize) -> Self {
        assert!(1 <= i && i <= m);
        let mut e = vec![0; 2 * m];
        e[if star { m + i - 1 } else { i - 1 }] = 1;
        let mut p = Self::zero(m, cap);
        p.add_term(e, rint(1));
        p
    }

    /// The power sum p_k in the a-variables (`star == false`) or b-variables.
    pub fn power_sum(m: usize, cap: usize, star: bool, k: usize) -> Self {
        let mut p = Self::zero(m, cap);
        if k == 0 {
            return Self::constant(m, cap, rint(m as i64));
        }
        for i in 1..=m {
            let mut e = vec![0; 2 * m];
            e[if star { m + i - 1 } else { i - 1 }] = k as u32;
            p.add_term(e, rint(1));
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(|| rint(0))
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        assert_eq!(e.len(), self.nvars);
        if e.iter().map(|&x| x as usize).sum::<usize>() > self.cap || Scalar::is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(|| rint(0));
        *entry += c;
        if Scalar::is_zero(entry) {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly {
            nvars: self.nvars,
            cap: self.cap.min(other.cap),
            terms: self.terms.clone(),
        };
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rint(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if Scalar::is_zero(c) {
            return Self::zero(self.nvars / 2, self.cap);
        }
        MPoly {
            nvars: self.nvars,
            cap: self.cap,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly {
            nvars: self.nvars,
            cap: self.cap.min(other.cap),
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Self::one(self.nvars / 2, self.cap);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Swap the a- and b-variable blocks.
    pub fn swap_ab(&self) -> Self {
        let m = self.nvars / 2;
        let mut out = Self::zero(m, self.cap);
        for (e, c) in &self.terms {
            let mut f = e[m..].to_vec();
            f.extend_from_slice(&e[..m]);
            out.add_term(f, c.clone());
        }
        out
    }
}

/// One symbol of a Wick word: z_{ij} (`star == false`) or z*_{ij}. Indices are
/// 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WickSymbol {
    pub star: bool,
    pub i: usize,
    pub j: usize,
}

pub fn z(i: usize, j: usize) -> WickSymbol {
    WickSymbol { star: false, i, j }
}

pub fn zs(i: usize, j: usize) -> WickSymbol {
    WickSymbol { star: true, i, j }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MeasureKind {
    /// Identity covariance: <z_ij z*_kl> = 2 delta_il delta_jk.
    Nu,
    /// Deformed covariance: <z_ij z*_kl> = 2 delta_il delta_jk / (1 - a_i b_j),
    /// expanded geometrically up to the degree cap.
    Mu,
}

/// Propagator for a pairing of z_{ij} with z*_{kl}; None means the pairing
/// vanishes identically.
fn propagator(kind: MeasureKind, m: usize, cap: usize, s: WickSymbol, t: WickSymbol) -> Option<MPoly> {
    debug_assert!(!s.star && t.star);
    if s.i != t.j || s.j != t.i {
        return None;
    }
    match kind {
        MeasureKind::Nu => Some(MPoly::constant(m, cap, rint(2))),
        MeasureKind::Mu => {
            // 2 sum_{k >= 0} (a_i b_j)^k
            let mut p = MPoly::zero(m, cap);
            let mut k = 0usize;
            loop {
                if 2 * k > cap {
                    break;
                }
                let mut e = vec![0; 2 * m];
                e[s.i - 1] = k as u32;
                e[m + s.j - 1] = k as u32;
                p.add_term(e, rint(2));
                k += 1;
            }
            Some(p)
        }
    }
}

/// Sum over perfect matchings of z-symbols with z*-symbols, each matching
/// weighted by the product of its propagators. Odd or unbalanced words give 0.
pub fn wick_expectation(word: &[WickSymbol], kind: MeasureKind, m: usize, cap: usize) -> MPoly {
    wick_expectation_with(word, &|s, t| propagator(kind, m, cap, s, t), m, cap)
}

/// Generic version over an arbitrary propagator table.
pub fn wick_expectation_with(
    word: &[WickSymbol],
    prop: &dyn Fn(WickSymbol, WickSymbol) -> Option<MPoly>,
    m: usize,
    cap: usize,
) -> MPoly {
    let plain: Vec<WickSymbol> = word.iter().copied().filter(|s| !s.star).collect();
    let starred: Vec<WickSymbol> = word.iter().copied().filter(|s| s.star).collect();
    let mut out = MPoly::zero(m, cap);
    if plain.len() != starred.len() {
        return out;
    }
    let k = plain.len();
    // Each matching is a bijection plain -> starred.
    for perm in all_perms(k) {
        let mut weight = MPoly::one(m, cap);
        let mut dead = false;
        for (idx, s) in plain.iter().enumerate() {
            match prop(*s, starred[perm.image(idx)]) {
                Some(p) => weight = weight.mul(&p),
                None => {
                    dead = true;
                    break;
                }
            }
        }
        if !dead {
            out = out.add(&weight);
        }
    }
    out
}

/// The distinguished permutation of cycle type rho:
/// (1 2 .. rho_1)(rho_1+1 .. rho_1+rho_2) ...
pub fn sigma_of(rho: &Partition) -> Perm {
    let r = rho.weight();
    let mut cycles = Vec::new();
    let mut next = 0usize;
    let mut parts = rho.parts().to_vec();
    parts.reverse(); // largest first, matching the explicit layout
    for &p in &parts {
        cycles.push((next..next + p as usize).collect::<Vec<_>>());
        next += p as usize;
    }
    Perm::from_cycles(r, &cycles)
}

/// Brute-force normalized expectation <p_rho(AZBZ*)> at finite matrix size m,
/// truncated at total degree cap.
pub fn p_expectation(rho: &Partition, kind: MeasureKind, m: usize, cap: usize) -> MPoly {
    p_expectation_sigma(rho, &sigma_of(rho), kind, m, cap)
}

/// Same, with an explicit choice of the permutation of cycle type rho.
pub fn p_expectation_sigma(
    rho: &Partition,
    sigma: &Perm,
    kind: MeasureKind,
    m: usize,
    cap: usize,
) -> MPoly {
    let r = rho.weight();
    assert_eq!(sigma.cycle_type(), *rho);
    let mut out = MPoly::zero(m, cap);
    let mut idx = vec![1usize; 2 * r]; // i_1..i_r, j_1..j_r
    loop {
        let iv = &idx[..r];
        let jv = &idx[r..];
        let mut word = Vec::with_capacity(2 * r);
        for k in 0..r {
            word.push(z(iv[k], jv[k]));
        }
        // z*_{kl} is the (k,l) entry of the conjugate-transpose matrix, so the
        // trace of (AZBZ*)-cycles contributes z*_{j_k, i_{sigma(k)}}.
        for k in 0..r {
            word.push(zs(jv[k], iv[sigma.image(k)]));
        }
        let w = wick_expectation(&word, kind, m, cap);
        if !w.is_zero() {
            let mut pref = MPoly::one(m, cap);
            for k in 0..r {
                pref = pref.mul(&MPoly::var(m, cap, false, iv[k]));
                pref = pref.mul(&MPoly::var(m, cap, true, jv[k]));
            }
            out = out.add(&pref.mul(&w));
        }
        // odometer over [1, m]^{2r}
        let mut pos = 0;
        loop {
            if pos == 2 * r {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] <= m {
                break;
            }
            idx[pos] = 1;
            pos += 1;
        }
    }
}

/// p_L^tau = product over cycles gamma of tau of p_{sum of l over gamma},
/// evaluated in the a-variables (`star == false`) or b-variables.
fn p_l_tau(m: usize, cap: usize, star: bool, tau: &Perm, l: &[u32]) -> MPoly {
    let mut out = MPoly::one(m, cap);
    for cyc in tau.cycles() {
        let s: u32 = cyc.iter().map(|&i| l[i]).sum();
        out = out.mul(&MPoly::power_sum(m, cap, star, s as usize));
    }
    out
}

/// The same cycle-summed power-sum monomial as an abstract partition.
fn p_l_tau_partition(tau: &Perm, l: &[u32]) -> Partition {
    Partition::new(
        tau.cycles()
            .iter()
            .map(|cyc| cyc.iter().map(|&i| l[i]).sum())
            .collect(),
    )
}

/// Enumerate vectors (l_1..l_r) with l_i >= 1 and sum <= max, calling f on each.
fn for_each_l(r: usize, max: usize, f: &mut dyn FnMut(&[u32])) {
    if r == 0 {
        if max != usize::MAX {
            f(&[]);
        }
        return;
    }
    let mut l = vec![1u32; r];
    if r > max {
        return;
    }
    loop {
        if l.iter().map(|&x| x as usize).sum::<usize>() <= max {
            f(&l);
        }
        // odometer with pruning: advance the first coordinate that keeps the sum feasible
        let mut pos = 0;
        loop {
            if pos == r {
                return;
            }
            l[pos] += 1;
            let min_rest: usize = (r - pos - 1) + l[..=pos].iter().map(|&x| x as usize).sum::<usize>();
            if min_rest <= max {
                break;
            }
            l[pos] = 1;
            pos += 1;
        }
    }
}

/// Closed form: <p_rho> = 2^r sum_{L, |L| <= cap/2} sum_tau p_L^{sigma tau}(a) p_L^tau(b).
pub fn p_expectation_closed(rho: &Partition, m: usize, cap: usize) -> MPoly {
    let r = rho.weight();
    let sigma = sigma_of(rho);
    let taus = all_perms(r);
    let mut out = MPoly::zero(m, cap);
    let two_r = rint(1 << r);
    for_each_l(r, cap / 2, &mut |l| {
        for tau in &taus {
            let st = sigma.compose(tau);
            let term = p_l_tau(m, cap, false, &st, l).mul(&p_l_tau(m, cap, true, tau, l));
            out = out.add(&term.scale(&two_r));
        }
    });
    out
}

/// The total mass Z = prod_{i,j} 1/(1 - a_i b_j), truncated.
pub fn partition_function(m: usize, cap: usize) -> MPoly {
    let mut out = MPoly::one(m, cap);
    for i in 1..=m {
        for j in 1..=m {
            let mut geo = MPoly::zero(m, cap);
            let mut k = 0usize;
            while 2 * k <= cap {
                let mut e = vec![0; 2 * m];
                e[i - 1] = k as u32;
                e[m + j - 1] = k as u32;
                geo.add_term(e, rint(1));
                k += 1;
            }
            out = out.mul(&geo);
        }
    }
    out
}

/// The differential operator H_rho = (1/z_rho) sum_{L} sum_{tau in S_r}
/// p_L^{sigma tau} D_{p_L^tau}, truncated to terms with |L| <= n and exact on
/// inputs of degree <= n. Requires rho reduced (no part 1).
pub fn gps_operator(rho: &Partition, n: usize) -> PolyDiffOp<Rat> {
    assert!(rho.is_reduced(), "H_rho requires a reduced partition");
    let r = rho.weight();
    let sigma = sigma_of(rho);
    let taus = all_perms(r);
    let w = z_of(rho).recip();
    let mut op = PolyDiffOp::zero();
    for_each_l(r, n, &mut |l| {
        for tau in &taus {
            let st = sigma.compose(tau);
            op.add_term(p_l_tau_partition(&st, l), p_l_tau_partition(tau, l), w.clone());
        }
    });
    op.with_exact_degree(n)
}
