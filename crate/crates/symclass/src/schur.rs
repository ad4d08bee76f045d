//! Irreducible characters of symmetric groups via the Murnaghan-Nakayama
//! recursion, Schur expansions in the power-sum basis, and the graded
//! product transported from central convolution.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::partition::{partitions_of, z_of, Partition};
use crate::scalar::{rint, Rat, Scalar};
use crate::symfunc::SymF;

/// Character value chi^lambda_mu. Both partitions must have the same weight.
pub fn char_value(lam: &Partition, mu: &Partition) -> Rat {
    assert_eq!(lam.weight(), mu.weight(), "character arguments must have equal weight");
    static MEMO: OnceLock<Mutex<HashMap<(Partition, Partition), Rat>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = memo.lock().unwrap().get(&(lam.clone(), mu.clone())) {
        return v.clone();
    }
    let v = char_rec(lam, mu);
    memo.lock()
        .unwrap()
        .insert((lam.clone(), mu.clone()), v.clone());
    v
}

// Recursion strips a border strip of size mu_1 (largest part first),
// working on the beta-set b_i = lam_i + (L - i).
fn char_rec(lam: &Partition, mu: &Partition) -> Rat {
    if mu.is_empty() {
        return rint(1);
    }
    let m = mu.parts()[0] as i64;
    let rest = Partition::new(mu.parts()[1..].to_vec());
    let l = lam.len();
    let beta: Vec<i64> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (l - 1 - i) as i64)
        .collect();
    let mut total = rint(0);
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - m;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        // height of the strip = number of beta entries strictly between
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[idx] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (l - 1 - i) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        let new_lam = Partition::new(parts);
        let sign = if height % 2 == 0 { rint(1) } else { rint(-1) };
        total += sign * char_value(&new_lam, &rest);
    }
    total
}

/// Dimension f^lambda = chi^lambda at the identity class.
pub fn dim_f(lam: &Partition) -> Rat {
    let n = lam.weight();
    let ones = Partition::empty().pad_to(n);
    char_value(lam, &ones)
}

/// s_lambda = sum_mu chi^lambda_mu p_mu / z_mu.
pub fn schur_in_p(lam: &Partition) -> SymF<Rat> {
    let mut out = SymF::zero();
    for mu in partitions_of(lam.weight()) {
        let c = char_value(lam, &mu) / z_of(&mu);
        out.add_term(mu, c);
    }
    out
}

/// Schur expansion of a homogeneous degree-n piece: coeff_lambda = <f, s_lambda>.
pub fn in_schur_basis(f: &SymF<Rat>, n: usize) -> Vec<(Partition, Rat)> {
    let piece = f.graded_piece(n);
    partitions_of(n)
        .into_iter()
        .map(|lam| {
            let c = piece.scalar_product(&schur_in_p(&lam));
            (lam, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// The graded product transported from convolution in the group algebra
/// centers: s_lambda * s_mu = delta/f^lambda s_lambda, zero across degrees.
pub fn times_product(f: &SymF<Rat>, g: &SymF<Rat>) -> SymF<Rat> {
    let mut out = SymF::zero();
    let dmax = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => a.min(b),
        _ => return out,
    };
    for n in 0..=dmax {
        let fs = in_schur_basis(f, n);
        let gs: HashMap<Partition, Rat> = in_schur_basis(g, n).into_iter().collect();
        for (lam, a) in fs {
            if let Some(b) = gs.get(&lam) {
                let c = a * b / dim_f(&lam);
                out = out.add(&schur_in_p(&lam).scale(&c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rfrac;
    use crate::symfunc::h_in_p;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn p_mono(parts: &[u32]) -> SymF<Rat> {
        SymF::monomial(part(parts), Rat::one())
    }

    #[test]
    fn schur_small() {
        let s2 = schur_in_p(&part(&[2]));
        let expect = p_mono(&[1, 1]).scale(&rfrac(1, 2)).add(&p_mono(&[2]).scale(&rfrac(1, 2)));
        assert_eq!(s2, expect);
        let s11 = schur_in_p(&part(&[1, 1]));
        let expect = p_mono(&[1, 1]).scale(&rfrac(1, 2)).sub(&p_mono(&[2]).scale(&rfrac(1, 2)));
        assert_eq!(s11, expect);
        let s21 = schur_in_p(&part(&[2, 1]));
        let expect = p_mono(&[1, 1, 1]).scale(&rfrac(1, 3)).sub(&p_mono(&[3]).scale(&rfrac(1, 3)));
        assert_eq!(s21, expect);
    }

    #[test]
    fn char_21_row() {
        assert_eq!(char_value(&part(&[2, 1]), &part(&[1, 1, 1])), rint(2));
        assert_eq!(char_value(&part(&[2, 1]), &part(&[2, 1])), rint(0));
        assert_eq!(char_value(&part(&[2, 1]), &part(&[3])), rint(-1));
        assert_eq!(dim_f(&part(&[2, 1])), rint(2));
    }

    #[test]
    fn dims_square_sum() {
        // sum of (f^lambda)^2 = n!
        for n in 1..=7 {
            let total: Rat = partitions_of(n)
                .iter()
                .map(|lam| {
                    let d = dim_f(lam);
                    &d * &d
                })
                .sum();
            assert_eq!(total, crate::scalar::factorial(n));
        }
    }

    #[test]
    fn schur_orthonormal() {
        for n in 0..=7 {
            let ps = partitions_of(n);
            for a in &ps {
                for b in &ps {
                    let ip = schur_in_p(a).scalar_product(&schur_in_p(b));
                    let expect = if a == b { rint(1) } else { rint(0) };
                    assert_eq!(ip, expect, "<s{}, s{}>", a, b);
                }
            }
        }
    }

    #[test]
    fn pieri_cross_check() {
        // s_2 * s_1 = s_3 + s_21 (ordinary product)
        let prod = schur_in_p(&part(&[2])).mul(&schur_in_p(&part(&[1])));
        let expect = schur_in_p(&part(&[3])).add(&schur_in_p(&part(&[2, 1])));
        assert_eq!(prod, expect);
    }

    #[test]
    fn times_product_examples() {
        // s_21 x s_21 = (1/2) s_21
        let s21 = schur_in_p(&part(&[2, 1]));
        assert_eq!(times_product(&s21, &s21), s21.scale(&rfrac(1, 2)));
        // p_2 x p_11 = p_2 (both degree 2)
        let got = times_product(&p_mono(&[2]), &p_mono(&[1, 1]));
        assert_eq!(got, p_mono(&[2]));
        // cross-degree products vanish
        let got = times_product(&p_mono(&[1, 1]), &p_mono(&[2, 1]));
        assert!(got.is_zero());
    }

    #[test]
    fn times_product_assoc_comm() {
        let pool = vec![p_mono(&[2, 1]), p_mono(&[3]), p_mono(&[1, 1, 1]), schur_in_p(&part(&[2, 1]))];
        for f in &pool {
            for g in &pool {
                assert_eq!(times_product(f, g), times_product(g, f));
                for h in &pool {
                    let a = times_product(&times_product(f, g), h);
                    let b = times_product(f, &times_product(g, h));
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn h_is_sum_of_schurs_of_row_shape() {
        // h_n = s_(n)
        for n in 1..=6 {
            assert_eq!(h_in_p::<Rat>(n), schur_in_p(&part(&[n as u32])));
        }
    }
}
