//! Normal-ordered polynomial differential operators on symmetric functions
//! in the power-sum basis: bosons, composition by free-boson contraction,
//! commutators, the Euler operator, and the partial Virasoro operators.

use std::collections::BTreeMap;

use crate::partition::Partition;
use crate::scalar::{binomial, factorial, rint, Rat, Scalar};
use crate::symfunc::SymF;
use crate::tseries::UNTRUNCATED;

/// Exactness degree of an operator that is exact on inputs of every degree.
pub const EXACT: usize = UNTRUNCATED;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum OpError {
    #[error("input degree {degree} exceeds the operator's exactness degree {exact}")]
    DegreeExceeded { degree: usize, exact: usize },
}

/// A finite sum of terms c · p_mu · D_{p_nu}, all multiplications to the left
/// of all derivations. `exact_degree` is the largest input degree on which the
/// operator's action is guaranteed exact; apply-output is truncated to it.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyDiffOp<S: Scalar> {
    terms: BTreeMap<(Partition, Partition), S>,
    exact_degree: usize,
}

impl<S: Scalar> PolyDiffOp<S> {
    pub fn zero() -> Self {
        PolyDiffOp { terms: BTreeMap::new(), exact_degree: EXACT }
    }

    pub fn identity() -> Self {
        Self::from_term(Partition::empty(), Partition::empty(), S::one())
    }

    pub fn from_term(mu: Partition, nu: Partition, c: S) -> Self {
        let mut op = Self::zero();
        op.add_term(mu, nu, c);
        op
    }

    pub fn from_terms(
        it: impl IntoIterator<Item = (Partition, Partition, S)>,
        exact_degree: usize,
    ) -> Self {
        let mut op = Self::zero();
        for (mu, nu, c) in it {
            op.add_term(mu, nu, c);
        }
        op.exact_degree = exact_degree;
        op
    }

    /// The boson: positive index k gives D_{p_k} = k d/dp_k, negative index
    /// gives multiplication by p_{-k}.
    pub fn alpha(k: i64) -> Self {
        assert!(k != 0, "boson index must be nonzero");
        if k > 0 {
            Self::from_term(Partition::empty(), Partition::new(vec![k as u32]), S::one())
        } else {
            Self::from_term(Partition::new(vec![(-k) as u32]), Partition::empty(), S::one())
        }
    }

    /// Multiplication by p_mu.
    pub fn mul_by(mu: Partition) -> Self {
        Self::from_term(mu, Partition::empty(), S::one())
    }

    /// The Euler (degree) operator, truncated so it is exact on inputs of
    /// degree <= n_max.
    pub fn euler(n_max: usize) -> Self {
        Self::from_terms(
            (1..=n_max as u32)
                .map(|k| (Partition::new(vec![k]), Partition::new(vec![k]), S::one())),
            n_max,
        )
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), S> {
        &self.terms
    }

    pub fn exact_degree(&self) -> usize {
        self.exact_degree
    }

    pub fn with_exact_degree(mut self, n: usize) -> Self {
        self.exact_degree = n;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, nu: Partition, c: S) {
        if c.is_zero() {
            return;
        }
        let key = (mu, nu);
        let entry = self.terms.entry(key.clone()).or_insert_with(S::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.exact_degree = self.exact_degree.min(other.exact_degree);
        for ((mu, nu), c) in &other.terms {
            out.add_term(mu.clone(), nu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&S::one().neg()))
    }

    pub fn neg(&self) -> Self {
        self.scale(&S::one().neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return PolyDiffOp { terms: BTreeMap::new(), exact_degree: self.exact_degree };
        }
        PolyDiffOp {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.mul(c)))
                .collect(),
            exact_degree: self.exact_degree,
        }
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> PolyDiffOp<T> {
        let mut out = PolyDiffOp::zero();
        for ((mu, nu), c) in &self.terms {
            out.add_term(mu.clone(), nu.clone(), f(c));
        }
        out.exact_degree = self.exact_degree;
        out
    }

    /// Largest degree shift |mu| - |nu| over the terms (how much the operator
    /// can raise degree). Zero for the zero operator.
    fn max_shift(&self) -> i64 {
        self.terms
            .keys()
            .map(|(mu, nu)| mu.weight() as i64 - nu.weight() as i64)
            .max()
            .unwrap_or(0)
    }

    /// Apply to a symmetric function. Errors if the input degree exceeds the
    /// exactness degree; the output is truncated back to the exactness degree.
    pub fn apply(&self, f: &SymF<S>) -> Result<SymF<S>, OpError> {
        if let Some(d) = f.degree() {
            if self.exact_degree != EXACT && d > self.exact_degree {
                return Err(OpError::DegreeExceeded { degree: d, exact: self.exact_degree });
            }
        }
        let deg = f.degree().unwrap_or(0);
        let mut out = SymF::zero();
        for ((mu, nu), c) in &self.terms {
            if nu.weight() > deg {
                continue;
            }
            let skewed = f.skew_by_monomial(nu);
            if skewed.is_zero() {
                continue;
            }
            let piece = skewed.mul(&SymF::monomial(mu.clone(), c.clone()));
            out = out.add(&piece);
        }
        Ok(out)
    }

    /// Normal-ordered product: every derivation of `self` is moved past every
    /// multiplication of `other`, summing over multiset contractions. A
    /// contraction of j_k pairs in size k carries weight
    /// k^{j_k} C(r_k, j_k) C(s_k, j_k) j_k!.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((mu_a, nu_a), ca) in &self.terms {
            for ((mu_b, nu_b), cb) in &other.terms {
                let base = ca.mul(cb);
                for (weight, mu_rest, nu_rest) in contractions(nu_a, mu_b) {
                    let c = base.mul(&S::from_rat(&weight));
                    out.add_term(mu_a.union(&mu_rest), nu_rest.union(nu_b), c);
                }
            }
        }
        out.exact_degree = if other.exact_degree == EXACT && self.exact_degree == EXACT {
            EXACT
        } else {
            let shift = other.max_shift();
            let adjusted = if self.exact_degree == EXACT {
                EXACT
            } else {
                let v = self.exact_degree as i64 - shift;
                if v < 0 {
                    0
                } else {
                    v as usize
                }
            };
            other.exact_degree.min(adjusted)
        };
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Equality of the actions on inputs of degree <= n: a term contributes
    /// on such inputs exactly when |nu| <= n.
    pub fn eq_on_degree(&self, other: &Self, n: usize) -> bool {
        let filt = |op: &Self| -> BTreeMap<(Partition, Partition), S> {
            op.terms
                .iter()
                .filter(|((_, nu), _)| nu.weight() <= n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect()
        };
        filt(self) == filt(other)
    }
}

/// All multiset contractions between the derivation type `nu` and the
/// multiplication type `mu`: yields (weight, mu-remainder, nu-remainder).
fn contractions(nu: &Partition, mu: &Partition) -> Vec<(Rat, Partition, Partition)> {
    let nmults = nu.mults();
    let mmults = mu.mults();
    let shared: Vec<u32> = nmults.keys().filter(|k| mmults.contains_key(k)).copied().collect();
    let mut out = Vec::new();
    // Iterate over all choices j_k in 0..=min(r_k, s_k) for each shared size.
    let caps: Vec<usize> = shared
        .iter()
        .map(|k| nmults[k].min(mmults[k]))
        .collect();
    let mut choice = vec![0usize; shared.len()];
    loop {
        let mut weight = rint(1);
        let mut mu_rest: Vec<u32> = Vec::new();
        let mut nu_rest: Vec<u32> = Vec::new();
        for (idx, &k) in shared.iter().enumerate() {
            let j = choice[idx];
            let r = nmults[&k];
            let s = mmults[&k];
            weight *= crate::scalar::rpow(&rint(k as i64), j as i64)
                * binomial(r, j)
                * binomial(s, j)
                * factorial(j);
            for _ in 0..(s - j) {
                mu_rest.push(k);
            }
            for _ in 0..(r - j) {
                nu_rest.push(k);
            }
        }
        for (&k, &s) in &mmults {
            if !shared.contains(&k) {
                for _ in 0..s {
                    mu_rest.push(k);
                }
            }
        }
        for (&k, &r) in &nmults {
            if !shared.contains(&k) {
                for _ in 0..r {
                    nu_rest.push(k);
                }
            }
        }
        out.push((weight, Partition::new(mu_rest), Partition::new(nu_rest)));
        // Next choice vector.
        let mut i = 0;
        loop {
            if i == shared.len() {
                return out;
            }
            if choice[i] < caps[i] {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VirasoroVariant {
    Prime,
    DoublePrime,
    Full,
}

/// The operators d'_k = sum_{j>=0} p_j D_{p_{j+k}} (with p_0 = 1),
/// d''_k = (1/2) sum_{i+j=k, i,j>=1} D_{p_i} D_{p_j}, and d_k = d'_k + d''_k,
/// truncated so the action is exact on inputs of degree <= n.
pub fn virasoro_d<S: Scalar>(k: usize, variant: VirasoroVariant, n: usize) -> PolyDiffOp<S> {
    assert!(k >= 1);
    let mut op = PolyDiffOp::zero();
    let lowering = matches!(variant, VirasoroVariant::Prime | VirasoroVariant::Full);
    if lowering {
        for j in 0..=n.saturating_sub(k) {
            let mu = if j == 0 {
                Partition::empty()
            } else {
                Partition::new(vec![j as u32])
            };
            let nu = Partition::new(vec![(j + k) as u32]);
            op.add_term(mu, nu, S::one());
        }
    }
    if matches!(variant, VirasoroVariant::DoublePrime | VirasoroVariant::Full) {
        for i in 1..k {
            let j = k - i;
            let nu = Partition::new(vec![i as u32, j as u32]);
            op.add_term(
                Partition::empty(),
                nu,
                S::from_rat(&crate::scalar::rfrac(1, 2)),
            );
        }
    }
    op.with_exact_degree(n)
}
