//! Normalized conjugacy classes a_{kappa;n}, the phi_kappa(t) series, the
//! n-independent expansions of power sums of Jucys-Murphy elements, the
//! two-alphabet generating function for products against the a-basis, and
//! a-basis structure constants.

use std::collections::BTreeMap;

use crate::partition::{partitions_of, z_of, Partition};
use crate::qlaurent::QLaurent;
use crate::scalar::{factorial, falling, rint, Rat, Scalar};
use crate::schur::times_product;
use crate::symfunc::SymF;
use crate::tseries::TSeries;

/// A finite expansion in the a-basis, keyed by the partition kappa.
pub type ARow = BTreeMap<Partition, Rat>;

/// a_{kappa;n} = (n)_k p_{kappa,1^{n-k}} as a symmetric function; zero when
/// n < k = |kappa|.
pub fn a_sym(kappa: &Partition, n: usize) -> SymF<Rat> {
    let k = kappa.weight();
    if n < k {
        return SymF::zero();
    }
    let padded = kappa.pad_to(n);
    SymF::monomial(padded, falling(n as i64, k))
}

/// phi_kappa(t) = ((1-q^{-1})^{k-1}/(k! z_kappa)) prod_i (q^{kappa_i}-1)/(q-1),
/// computed exactly in the Laurent ring, then q = e^t truncated at order t_ord.
pub fn phi_series(kappa: &Partition, t_ord: usize) -> TSeries {
    assert!(!kappa.is_empty(), "phi is defined for nonempty kappa");
    let k = kappa.weight();
    let mut num = QLaurent::one().sub(&QLaurent::q_pow(-1)).pow(k - 1);
    for &part in kappa.parts() {
        num = num.mul(&QLaurent::q_diff(part as i64, 0));
    }
    let exact = num
        .div_exact(&QLaurent::q_diff(1, 0))
        .expect("phi numerator must be divisible by q - 1");
    exact
        .subst_exp(t_ord)
        .scale(&(factorial(k) * z_of(kappa)).recip())
}

/// The coefficient phi_{kappa;m} = m! [t^m] phi_kappa(t).
pub fn phi_coeff(kappa: &Partition, m: usize) -> Rat {
    phi_series(kappa, m).coeff(m) * factorial(m)
}

/// The n-independent expansion ch(p_m(Xi_n)) = sum_kappa phi_{kappa;m} a_{kappa;n}.
/// Support: |kappa| <= m+1 and len(kappa) <= m - |kappa| + 2.
pub fn jm_in_a(m: usize) -> ARow {
    assert!(m >= 1);
    let mut out = ARow::new();
    for k in 1..=m + 1 {
        for kappa in partitions_of(k) {
            if kappa.len() + k > m + 2 {
                continue;
            }
            let c = phi_coeff(&kappa, m);
            if !Scalar::is_zero(&c) {
                out.insert(kappa, c);
            }
        }
    }
    out
}

/// Evaluate an a-basis row at a given n, as a symmetric function of degree n.
pub fn row_at(row: &ARow, n: usize) -> SymF<Rat> {
    let mut out = SymF::zero();
    for (kappa, c) in row {
        out = out.add(&a_sym(kappa, n).scale(c));
    }
    out
}

/// All sub-multisets of a partition, as (subset, complement) pairs.
fn sub_multisets(kappa: &Partition) -> Vec<(Partition, Partition)> {
    let parts = kappa.parts();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << parts.len()) {
        let mut inside = Vec::new();
        let mut outside = Vec::new();
        for (i, &p) in parts.iter().enumerate() {
            if mask & (1 << i) != 0 {
                inside.push(p);
            } else {
                outside.push(p);
            }
        }
        let pair = (Partition::new(inside), Partition::new(outside));
        if seen.insert(pair.clone()) {
            out.push(pair);
        }
    }
    out
}

/// The coefficients d^mu_{kappa;m} of p_m(Xi_n) a_{kappa;n} = sum_mu d a_{mu;n},
/// read off the closed-form generating function
/// sigma_1(AB) sum_{r>=1} h_r((q-1)A) h_r((1-q^{-1})(B+E)) / ((q-1)(1-q^{-1}))
/// and cross-checked against the group-algebra oracle at two values of n
/// (panics on mismatch).
pub fn product_in_a(m: usize, kappa: &Partition) -> ARow {
    assert!(m >= 1);
    let row = product_in_a_closed(m, kappa);
    // Oracle cross-check: the frobenius image of p_m(Xi_n) a_{kappa;n} is the
    // x-product of the frobenius images.
    let k = kappa.weight();
    let n_hi = (k + m + 1).min(7).max(k.max(1));
    for n in [n_hi.saturating_sub(1).max(1), n_hi] {
        let jm = crate::oracle::jm_power_sum(n, m).frobenius();
        let expect = times_product(&jm, &a_sym(kappa, n));
        let got = row_at(&row, n);
        assert_eq!(
            got, expect,
            "closed-form product row disagrees with the oracle at n = {}",
            n
        );
    }
    row
}

fn product_in_a_closed(m: usize, kappa: &Partition) -> ARow {
    let db = kappa.weight();
    let r_max = db + m + 1;
    let divisor = QLaurent::q_diff(1, 0).mul(&QLaurent::one().sub(&QLaurent::q_pow(-1)));
    // Accumulate the coefficient of p_kappa(B): QLaurent-valued, keyed by the
    // A-side partition.
    let mut acc: BTreeMap<Partition, QLaurent> = BTreeMap::new();
    for (rho, nu) in sub_multisets(kappa) {
        // rho comes from sigma_1(AB), nu from h_s((1-q^{-1})B).
        let s = nu.weight();
        let mut right_base = QLaurent::constant((z_of(&rho) * z_of(&nu)).recip());
        for &p in nu.parts() {
            right_base = right_base.mul(&QLaurent::one().sub(&QLaurent::q_pow(-(p as i64))));
        }
        for u in 0..=m + 1 {
            let r = s + u;
            if r < 1 || r > r_max {
                continue;
            }
            let right = right_base
                .mul(&QLaurent::one().sub(&QLaurent::q_pow(-1)).pow(u))
                .scale(&factorial(u).recip());
            for mu in partitions_of(r) {
                let mut c = right.scale(&z_of(&mu).recip());
                for &p in mu.parts() {
                    c = c.mul(&QLaurent::q_diff(p as i64, 0));
                }
                let c = c
                    .div_exact(&divisor)
                    .expect("generating-function term must be divisible");
                let a_part = mu.union(&rho);
                let entry = acc.entry(a_part).or_insert_with(QLaurent::zero);
                *entry = entry.add(&c);
            }
        }
    }
    let zk = z_of(kappa);
    let mf = factorial(m);
    let mut out = ARow::new();
    for (mu, c) in acc {
        let v = c.subst_exp(m).coeff(m) * &mf * &zk;
        if !Scalar::is_zero(&v) {
            out.insert(mu, v);
        }
    }
    out
}

/// Exact Gaussian elimination for a (possibly overdetermined) rational
/// system. Returns None if inconsistent or underdetermined.
pub fn solve_exact(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !Scalar::is_zero(&a[r][col])) else {
            return None; // underdetermined column
        };
        a.swap(pivot_row, r);
        b.swap(pivot_row, r);
        let inv = a[pivot_row][col].clone().recip();
        for v in a[pivot_row].iter_mut() {
            *v *= &inv;
        }
        b[pivot_row] *= &inv;
        for r2 in 0..rows {
            if r2 != pivot_row && !Scalar::is_zero(&a[r2][col]) {
                let f = a[r2][col].clone();
                for c2 in 0..cols {
                    let t = &a[pivot_row][c2] * &f;
                    a[r2][c2] -= t;
                }
                let t = &b[pivot_row] * &f;
                b[r2] -= t;
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    if pivots.len() < cols {
        return None;
    }
    // Consistency of the remaining rows.
    for r in pivots.len()..rows {
        if !Scalar::is_zero(&b[r]) {
            return None;
        }
    }
    let mut x = vec![rint(0); cols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = b[i].clone();
    }
    Some(x)
}

/// Structure constants of the a-basis: a_{alpha;n} x a_{beta;n} =
/// sum_gamma g a_{gamma;n}, with g independent of n. Computed from oracle
/// products at all n <= 7 by solving for the coefficients grouped by reduced
/// type, and verified against every available n. Panics if no consistent
/// n-independent solution exists.
pub fn a_structure(alpha: &Partition, beta: &Partition) -> ARow {
    let w = alpha.weight() + beta.weight();
    assert!(w <= 7, "oracle range exceeded");
    let n_max = 7usize;
    let prods: Vec<SymF<Rat>> = (0..=n_max)
        .map(|n| times_product(&a_sym(alpha, n), &a_sym(beta, n)))
        .collect();
    // Candidate reduced types from every support partition.
    let mut reduced = std::collections::BTreeSet::new();
    for p in &prods {
        for lam in p.terms().keys() {
            reduced.insert(lam.strip_ones().0);
        }
    }
    let mut out = ARow::new();
    for gt in reduced {
        let k = gt.weight();
        if k > w {
            panic!("support beyond total weight: no n-independent expansion");
        }
        let jmax = w - k;
        let mut mat = Vec::new();
        let mut rhs = Vec::new();
        for n in k..=n_max {
            let lam = gt.pad_to(n);
            mat.push(
                (0..=jmax)
                    .map(|j| falling(n as i64, k + j))
                    .collect::<Vec<_>>(),
            );
            rhs.push(prods[n].coeff(&lam));
        }
        let x = solve_exact(mat, rhs)
            .expect("a-basis structure constants are not n-independent");
        for (j, c) in x.into_iter().enumerate() {
            if !Scalar::is_zero(&c) {
                let mut parts = gt.parts().to_vec();
                parts.extend(std::iter::repeat(1).take(j));
                out.insert(Partition::new(parts), c);
            }
        }
    }
    out
}
