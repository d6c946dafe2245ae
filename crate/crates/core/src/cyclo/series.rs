use std::collections::BTreeMap;

use crate::error::Result;
use crate::exactalg::{qpow, LaurentPoly, QFraction, TruncatedSeries};
use crate::params::{HeckeParams, Param};
use crate::qcombo::{alpha, cyclotomic_c, qbrace};

use super::a_coef;

/// `q^{2N} t1^{-1} + q^{-2N} t1`, the λ-free part of `γ_N`.
pub fn gamma_const(n: i32, params: &HeckeParams) -> LaurentPoly {
    &qpow(2 * n) * &params.t_inv(1) + &qpow(-2 * n) * &params.t(1)
}

/// `λ γ_N = -1 + (q^{2N} t1^{-1} + q^{-2N} t1) λ - λ^2`
pub fn lambda_gamma(n: i32, params: &HeckeParams, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(
        vec![
            QFraction::from_poly(LaurentPoly::constant(-1)),
            QFraction::from_poly(gamma_const(n, params)),
            QFraction::from_poly(LaurentPoly::constant(-1)),
        ],
        order,
    )
}

/// Sub-diagonal entry `b_{N,m}`: `-t̄1({N+m} - {N-m})` for `N - m` even,
/// `t̄2({N+m} - {N-m})` for `N - m` odd.
pub fn b_entry(n: i32, m: i32, params: &HeckeParams) -> LaurentPoly {
    let diff = qbrace(n + m) - qbrace(n - m);
    let sel = if (n - m).rem_euclid(2) == 0 { 1 } else { 2 };
    let signed = &diff * &params.tbar(sel);
    if sel == 1 {
        -signed
    } else {
        signed
    }
}

fn lambda_shift(s: &TruncatedSeries) -> TruncatedSeries {
    let mut coeffs = vec![QFraction::zero()];
    coeffs.extend_from_slice(&s.coeffs()[..s.order()]);
    TruncatedSeries::from_coeffs(coeffs, s.order())
}

/// Forward substitution for `F_N = F(-q^{2N}, -λ)`, `1 <= N <= nmax`:
/// `(λγ_N) F_N = -λ({2N} + Σ_{m<N} b_{N,m} F_m)`.
fn solve_all(nmax: usize, order: usize, params: &HeckeParams) -> Result<Vec<TruncatedSeries>> {
    let mut f = vec![TruncatedSeries::zero(order)];
    for n in 1..=nmax as i32 {
        let mut rhs = TruncatedSeries::constant(QFraction::from_poly(qbrace(2 * n)), order);
        for m in 1..n {
            let b = QFraction::from_poly(b_entry(n, m, params));
            if !b.is_zero() {
                rhs = rhs.add(&f[m as usize].scale(&b));
            }
        }
        let rhs = lambda_shift(&rhs).scale(&QFraction::from_poly(LaurentPoly::constant(-1)));
        let inv = lambda_gamma(n, params, order).invert()?;
        f.push(inv.mul(&rhs).reduce());
    }
    Ok(f)
}

/// Truncated series `F(-q^{2N}, -λ)` for each requested `N`.
pub fn solve_f(
    ns: &[usize],
    order: usize,
    params: &HeckeParams,
) -> Result<BTreeMap<usize, TruncatedSeries>> {
    let top = ns.iter().copied().max().unwrap_or(0);
    let all = solve_all(top, order, params)?;
    Ok(ns.iter().map(|&n| (n, all[n].clone())).collect())
}

/// `G_i(λ) = {2}^{-1} Σ_k α_k^{(i)} F(-q^{2(2k-1)}, -λ)`; its `λ^n` coefficient is `ĉ_{n,i-1}`.
pub fn tildec_series(i: usize, order: usize, params: &HeckeParams) -> Result<TruncatedSeries> {
    assert!(i >= 1, "tildec_series needs i >= 1");
    let all = solve_all(2 * i - 1, order, params)?;
    let mut g = TruncatedSeries::zero(order);
    for k in 1..=i {
        let a = QFraction::from_poly(alpha(i as i32, k as i32)?);
        g = g.add(&all[2 * k - 1].scale(&a));
    }
    Ok(g.map(|c| c.clone().div_brace(2)).reduce())
}

/// Closed form at `t2 = 1`:
/// `G_i = λ^i c_{i,i-1} ∏_{k=2}^i A_k / ∏_{k=1}^i (1 - (y_k + y_k^{-1})λ + λ^2)`,
/// `y_k = q^{4k-2} t1^{-1}`.
pub fn tildec_t2one_series(i: usize, order: usize, t1: Param) -> Result<TruncatedSeries> {
    let params = HeckeParams::new(t1, Param::One);
    let mut lead = QFraction::from_poly(cyclotomic_c(i as i32, i as i32)?);
    for k in 2..=i as i32 {
        lead = &lead * &a_coef(k, &params);
    }
    let mut num = vec![QFraction::zero(); i];
    num.push(lead.reduce());
    let mut series = TruncatedSeries::from_coeffs(num, order);
    for k in 1..=i as i32 {
        let y = &qpow(4 * k - 2) * &params.t_inv(1) + &qpow(2 - 4 * k) * &params.t(1);
        let den = TruncatedSeries::from_coeffs(
            vec![QFraction::one(), QFraction::from_poly(-y), QFraction::one()],
            order,
        );
        series = series.mul(&den.invert()?);
    }
    Ok(series.reduce())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::ATable;
    use crate::qcombo::cyclotomic_c;

    #[test]
    fn f_constant_and_linear_terms() {
        let p = HeckeParams::formal();
        let f = solve_f(&[1, 3, 5], 3, &p).unwrap();
        for s in f.values() {
            assert!(s.coeff(0).is_zero());
        }
        assert!(f[&1].coeff(1) == &QFraction::from_poly(qbrace(2)));
    }

    #[test]
    fn classical_f1_is_unknot() {
        let f = solve_f(&[1], 6, &HeckeParams::classical()).unwrap();
        for n in 1..=6 {
            let expect = &qbrace(2) * &cyclotomic_c(n, 1).unwrap();
            assert!(
                f[&1].coeff(n as usize) == &QFraction::from_poly(expect),
                "n={n}"
            );
        }
    }

    #[test]
    fn series_matches_sum() {
        let p = HeckeParams::formal();
        let t = ATable::build(5, &p);
        for i in 1..=3 {
            let g = tildec_series(i, 5, &p).unwrap();
            for n in 0..i {
                assert!(g.coeff(n).is_zero());
            }
            for n in i..=5 {
                let expect = QFraction::from_poly(t.tildec_sum(n, i).unwrap());
                assert!(g.coeff(n) == &expect, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn closed_form_matches_series_at_t2_one() {
        let p = HeckeParams::new(Param::Formal, Param::One);
        for i in 1..=3 {
            let a = tildec_series(i, 6, &p).unwrap();
            let b = tildec_t2one_series(i, 6, Param::Formal).unwrap();
            assert!(a.agrees_with(&b), "i={i}");
        }
    }
}
