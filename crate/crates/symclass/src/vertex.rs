//! The vertex operator V(z;q), its modes, the associated W- and T-operators,
//! the multiplication operators for power sums of Jucys-Murphy elements, and
//! shifted power-sum eigenvalues.

use crate::diffop::PolyDiffOp;
use crate::partition::{partitions_of, Partition};
use crate::qlaurent::QLaurent;
use crate::scalar::{binomial, bernoulli, factorial, rint, rpow, Rat, Scalar};
use crate::symfunc::SymF;

/// The mode V_m of the vertex operator, truncated to
/// V_m = sum_{a-b=m, 0<=a,b<=N} h_a((q-1)A) D_{h_b((1-q^{-1})A)}.
/// Generic over the representation of powers of q so the same construction
/// yields both formal-Laurent operators and operators at exact rational
/// points. Exact on inputs of degree <= N - max(m, 0).
fn vertex_mode_generic<S: Scalar>(m: i64, n: usize, q_pow: &dyn Fn(i64) -> S) -> PolyDiffOp<S> {
    let mut op = PolyDiffOp::zero();
    for b in 0..=n {
        let a = b as i64 - m;
        if a < 0 || a as usize > n {
            continue;
        }
        let a = a as usize;
        for mu in partitions_of(a) {
            // h_a((q-1)A) coefficient of p_mu: (1/z_mu) prod (q^{mu_i} - 1)
            let mut left = S::from_rat(&crate::partition::z_of(&mu).recip());
            for &part in mu.parts() {
                left = left.mul(&q_pow(part as i64).sub(&S::one()));
            }
            for nu in partitions_of(b) {
                // D of h_b((1-q^{-1})A): (1/z_nu) prod (1 - q^{-nu_j}) D_{p_nu}
                let mut c = left.mul(&S::from_rat(&crate::partition::z_of(&nu).recip()));
                for &part in nu.parts() {
                    c = c.mul(&S::one().sub(&q_pow(-(part as i64))));
                }
                op.add_term(mu.clone(), nu.clone(), c);
            }
        }
    }
    op.with_exact_degree(n - (((-m).max(0)) as usize).min(n))
}

/// V_m over the formal Laurent ring in q.
pub fn vertex_mode(m: i64, n: usize) -> PolyDiffOp<QLaurent> {
    vertex_mode_generic(m, n, &QLaurent::q_pow)
}

/// V_m with q evaluated at an exact rational point.
pub fn vertex_mode_at(m: i64, n: usize, q: &Rat) -> PolyDiffOp<Rat> {
    vertex_mode_generic(m, n, &|e| rpow(q, e))
}

/// Divide every coefficient of an operator exactly by a Laurent polynomial.
/// Panics on inexact division, which signals a truncation bug upstream.
fn div_coeffs(op: &PolyDiffOp<QLaurent>, d: &QLaurent) -> PolyDiffOp<QLaurent> {
    op.map_scalars(|c| {
        c.div_exact(d)
            .expect("coefficient not divisible: truncation bug")
    })
}

/// The q-deformed Jucys-Murphy multiplication operator
/// D = (V_0 - 1)/((q-1)(1-q^{-1})) - E, exact on degree <= N.
pub fn d_q_operator(n: usize) -> PolyDiffOp<QLaurent> {
    let v0 = vertex_mode(0, n);
    let divisor = QLaurent::q_diff(1, 0).mul(&QLaurent::constant(rint(1)).sub(&QLaurent::q_pow(-1)));
    let core = div_coeffs(&v0.sub(&PolyDiffOp::identity()), &divisor);
    core.sub(&PolyDiffOp::euler(n))
}

/// D_k: multiplication by p_k of the Jucys-Murphy elements, as the
/// coefficient of t^k/k! of D under q = e^t. D_0 is the Euler operator.
pub fn d_operator(k: usize, n: usize) -> PolyDiffOp<Rat> {
    if k == 0 {
        return PolyDiffOp::euler(n);
    }
    let dq = d_q_operator(n);
    let kf = factorial(k);
    dq.map_scalars(|c| c.subst_exp(k).coeff(k) * &kf)
}

/// T_k(q) = -q^{-1}(V_k - delta_{k,0})/(1 - q^{-1}).
pub fn t_operator(k: i64, n: usize) -> PolyDiffOp<QLaurent> {
    let mut v = vertex_mode(k, n);
    if k == 0 {
        v = v.sub(&PolyDiffOp::identity());
    }
    let divisor = QLaurent::constant(rint(1)).sub(&QLaurent::q_pow(-1));
    div_coeffs(&v, &divisor).scale(&QLaurent::monomial(-1, rint(-1)))
}

/// T_k evaluated at an exact rational point q = a (a != 1).
pub fn t_operator_at(k: i64, n: usize, a: &Rat) -> PolyDiffOp<Rat> {
    let mut v = vertex_mode_at(k, n, a);
    if k == 0 {
        v = v.sub(&PolyDiffOp::identity());
    }
    let denom = rint(1) - rpow(a, -1);
    v.scale(&(-rpow(a, -1) / denom))
}

/// T_{k,n} = n! [t^n] T_k(e^t).
pub fn t_kn(k: i64, ord: usize, n: usize) -> PolyDiffOp<Rat> {
    let t = t_operator(k, n);
    let f = factorial(ord);
    t.map_scalars(|c| c.subst_exp(ord).coeff(ord) * &f)
}

/// Assembly of D_k from the T_{0,j} and Bernoulli numbers:
/// D_k = sum_{j=0}^{k} (-1)^{j-1} C(k,j) B_j T_{0,k+1-j}/(k+1-j).
pub fn d_operator_bernoulli(k: usize, n: usize) -> PolyDiffOp<Rat> {
    assert!(k >= 1);
    let t0 = t_operator(0, n);
    let mut out = PolyDiffOp::zero().with_exact_degree(n);
    for j in 0..=k {
        let ord = k + 1 - j;
        let tk = {
            let f = factorial(ord);
            t0.map_scalars(|c| c.subst_exp(ord).coeff(ord) * &f)
        };
        let sign = if j % 2 == 1 { rint(1) } else { rint(-1) };
        let coeff = sign * binomial(k, j) * bernoulli(j) / rint(ord as i64);
        out = out.add(&tk.scale(&coeff));
    }
    out
}

/// The shifted power sum sum_j [(lambda_j - j + 1)^k - (1 - j)^k].
pub fn shifted_eigen(lam: &Partition, k: usize) -> Rat {
    let mut out = rint(0);
    for (idx, &part) in lam.parts().iter().enumerate() {
        let j = idx as i64 + 1;
        out += rpow(&rint(part as i64 - j + 1), k as i64) - rpow(&rint(1 - j), k as i64);
    }
    out
}

/// Shifted power sums expand in content power sums with binomial
/// coefficients: shifted_eigen(lambda, n) = sum_{k<n} C(n,k) p_k(contents),
/// with p_0 = |lambda|.
pub fn pn_relation_check(lam: &Partition, n: usize) -> bool {
    let lhs = shifted_eigen(lam, n);
    let mut rhs = rint(0);
    for k in 0..n {
        rhs += binomial(n, k) * crate::partition::content_power_sum(lam, k);
    }
    lhs == rhs
}

/// Check that two operators act identically on every p_lambda with
/// |lambda| <= n (requires both to be exact there).
pub fn actions_agree<S: Scalar>(a: &PolyDiffOp<S>, b: &PolyDiffOp<S>, n: usize) -> bool {
    for d in 0..=n {
        for lam in partitions_of(d) {
            let f = SymF::monomial(lam, S::one());
            if a.apply(&f).unwrap() != b.apply(&f).unwrap() {
                return false;
            }
        }
    }
    true
}

/// The action of the commutator [a, b] on f, computed without composing the
/// operators (both applications must stay inside the exactness domains).
pub fn bracket_action<S: Scalar>(
    a: &PolyDiffOp<S>,
    b: &PolyDiffOp<S>,
    f: &SymF<S>,
) -> SymF<S> {
    let ab = a.apply(&b.apply(f).unwrap()).unwrap();
    let ba = b.apply(&a.apply(f).unwrap()).unwrap();
    ab.sub(&ba)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{class_sum, jm_power_sum};
    use crate::schur::schur_in_p;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn vertex_mode_on_constants() {
        let v0 = vertex_mode(0, 6);
        assert_eq!(v0.apply(&SymF::one()).unwrap(), SymF::one());
        // V_0 p_1 = (q - 1 + q^{-1}) p_1
        let got = v0.apply(&SymF::monomial(part(&[1]), QLaurent::one())).unwrap();
        let c = QLaurent::q_pow(1)
            .sub(&QLaurent::one())
            .add(&QLaurent::q_pow(-1));
        assert_eq!(got, SymF::monomial(part(&[1]), c));
    }

    #[test]
    fn mode_generation() {
        for k in [-2i64, -1, 1, 2] {
            let n = 8;
            let v0 = vertex_mode(0, n + 2);
            let br = v0.commutator(&PolyDiffOp::alpha(k));
            let rhs = vertex_mode(k, n).scale(&QLaurent::one().sub(&QLaurent::q_pow(k)));
            assert!(br.eq_on_degree(&rhs, 6), "k={}", k);
        }
    }

    #[test]
    fn t_operator_examples() {
        let n = 8;
        assert!(t_kn(0, 0, n).is_zero());
        let e: PolyDiffOp<Rat> = PolyDiffOp::euler(n);
        assert!(t_kn(0, 1, n).eq_on_degree(&e.neg(), n));
        // The constant term of T_k(e^t) is -alpha_k.
        for k in [-2i64, -1, 1, 2] {
            let expect: PolyDiffOp<Rat> = PolyDiffOp::alpha(k).neg();
            assert!(t_kn(k, 0, n).eq_on_degree(&expect, 6), "k={}", k);
        }
    }

    #[test]
    fn d_operator_examples() {
        let d1 = d_operator(1, 8);
        assert_eq!(
            d1.apply(&SymF::monomial(part(&[1, 1]), rint(1))).unwrap(),
            SymF::monomial(part(&[2]), rint(1))
        );
        assert_eq!(
            d1.apply(&SymF::monomial(part(&[1, 1, 1]), rint(1))).unwrap(),
            SymF::monomial(part(&[2, 1]), rint(3))
        );
        assert!(d1.apply(&SymF::one()).unwrap().is_zero());
        // D_2 s_{21} = p_2(contents) s_{21} = 2 s_{21}
        let s21 = schur_in_p(&part(&[2, 1]));
        let got = d_operator(2, 8).apply(&s21).unwrap();
        assert_eq!(got, s21.scale(&rint(2)));
    }

    #[test]
    fn eigenvalue_law_small() {
        for size in 0..=5usize {
            for lam in partitions_of(size) {
                let s = schur_in_p(&lam);
                for k in 1..=3usize {
                    let got = d_operator(k, 6).apply(&s).unwrap();
                    let ev = crate::partition::content_power_sum(&lam, k);
                    assert_eq!(got, s.scale(&ev), "lam={} k={}", lam, k);
                }
            }
        }
    }

    #[test]
    fn oracle_law_small() {
        for n in 1..=5usize {
            let ones = SymF::monomial(Partition::new(vec![1; n]), rint(1));
            for k in 1..=4usize {
                let got = d_operator(k, 6).apply(&ones).unwrap();
                assert_eq!(got, jm_power_sum(n, k).frobenius(), "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn d1_equals_class_multiplication() {
        // D_1 p_{1^4} = frobenius(C_{2,1,1}) in the group algebra of degree 4
        let got = d_operator(1, 8)
            .apply(&SymF::monomial(part(&[1, 1, 1, 1]), rint(1)))
            .unwrap();
        assert_eq!(got, class_sum(4, &part(&[2])).frobenius());
    }

    #[test]
    fn bernoulli_assembly_matches_direct() {
        for k in 1..=3usize {
            let a = d_operator_bernoulli(k, 8);
            let b = d_operator(k, 8);
            assert!(a.eq_on_degree(&b, 6), "k={}", k);
        }
    }

    #[test]
    fn goulden_closed_form() {
        // D_1 = (1/2) sum_{i,j>=1} [(i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d²/(dp_i dp_j)]
        let n = 8;
        let mut closed: PolyDiffOp<Rat> = PolyDiffOp::zero();
        for i in 1..=n as u32 {
            for j in 1..=n as u32 {
                if (i + j) as usize > n {
                    continue;
                }
                // (i+j) p_i p_j d/dp_{i+j} = p_i p_j D_{p_{i+j}}
                closed.add_term(part(&[i, j]), part(&[i + j]), crate::scalar::rfrac(1, 2));
                // i j p_{i+j} d²/(dp_i dp_j) = p_{i+j} D_{p_i} D_{p_j}
                closed.add_term(part(&[i + j]), part(&[i, j]), crate::scalar::rfrac(1, 2));
            }
        }
        let closed = closed.with_exact_degree(n);
        assert!(d_operator(1, n).eq_on_degree(&closed, 6));
    }

    #[test]
    fn bracket_law_single_point() {
        // [T_k(a), T_l(b)] = (a^l - b^k) T_{k+l}(ab) + delta_{k,-l} (a^{-k} - b^{-l})/(1 - ab)
        let (a, b) = (rint(2), rint(3));
        let n = 10;
        for (k, l) in [(1i64, 1i64), (2, -1), (1, -1)] {
            let tk = t_operator_at(k, n, &a);
            let tl = t_operator_at(l, n, &b);
            let ab = &a * &b;
            let tkl = t_operator_at(k + l, n, &ab);
            let coeff = rpow(&a, l) - rpow(&b, k);
            for d in 0..=4usize {
                for lam in partitions_of(d) {
                    let f = SymF::monomial(lam.clone(), rint(1));
                    let lhs = bracket_action(&tk, &tl, &f);
                    let mut rhs = tkl.apply(&f).unwrap().scale(&coeff);
                    if k == -l {
                        let c = (rpow(&a, -k) - rpow(&b, -l)) / (rint(1) - &a * &b);
                        rhs = rhs.add(&f.scale(&c));
                    }
                    assert_eq!(lhs, rhs, "k={} l={} lam={}", k, l, lam);
                }
            }
        }
    }

    #[test]
    fn shifted_eigen_examples() {
        let lam = part(&[2, 1]);
        assert_eq!(shifted_eigen(&lam, 2), rint(3));
        assert_eq!(shifted_eigen(&lam, 3), rint(9));
        assert_eq!(shifted_eigen(&Partition::empty(), 4), rint(0));
        for n in 1..=5 {
            assert!(pn_relation_check(&lam, n));
            assert!(pn_relation_check(&part(&[3, 2, 2, 1]), n));
            assert!(pn_relation_check(&Partition::empty(), n));
        }
    }
}
