//! Rank-one Macdonald (Rogers) polynomials `p_n(x; β | Q)` and their
//! renormalization `C_n`, with `β` and `Q` integer powers of `q`.

use crate::error::{Error, Result};
use crate::exactalg::{qpow, LaurentPoly, Monomial, QFraction, TruncatedSeries, Var};
use crate::qcombo::{gauss_binom, qpochhammer};

/// Symmetric Laurent polynomial in `x` with q-brace-fraction coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct MacPoly {
    pub n: usize,
    pub beta_exp: i32,
    pub base_exp: i32,
    pub value: QFraction,
}

fn x(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::SmallX, e)
}

/// `1 - q^e` as `-q^{e/2}·{e/2}`; `None` when `e = 0`.
fn one_minus_split(e: i32) -> Result<Option<i32>> {
    if e % 2 != 0 {
        return Err(Error::UnsupportedExponent(format!(
            "1 - q^{e} needs an even exponent"
        )));
    }
    Ok(if e == 0 { None } else { Some(e / 2) })
}

/// Recurrence coefficient
/// `b_n = (1 - Q^n)(1 - β²Q^{n-1}) / ((1 - βQ^{n-1})(1 - βQ^n))`.
pub fn recurrence_coeff(n: usize, beta_exp: i32, base_exp: i32) -> Result<QFraction> {
    let n_i = n as i32;
    let nums = [base_exp * n_i, 2 * beta_exp + base_exp * (n_i - 1)];
    let dens = [beta_exp + base_exp * (n_i - 1), beta_exp + base_exp * n_i];
    let mut num = LaurentPoly::one();
    for e in nums {
        match one_minus_split(e)? {
            None => return Ok(QFraction::zero()),
            Some(h) => num = &num * &(-(&qpow(h) * &(qpow(h) - qpow(-h)))),
        }
    }
    let mut out = QFraction::from_poly(num);
    for e in dens {
        match one_minus_split(e)? {
            None => return Err(Error::DegenerateRecurrence { n }),
            Some(h) => {
                out = out
                    .mul_monomial(&Monomial::var(Var::Q, -h))
                    .div_brace(h)
                    .scale_i64(-1)
            }
        }
    }
    Ok(out.reduce())
}

/// `p_0, ..., p_nmax` from `(x + x^{-1}) p_n = p_{n+1} + b_n p_{n-1}`.
pub fn mac_p_table(nmax: usize, beta_exp: i32, base_exp: i32) -> Result<Vec<MacPoly>> {
    let wrap = |n: usize, value: QFraction| MacPoly {
        n,
        beta_exp,
        base_exp,
        value,
    };
    let sym = QFraction::from_poly(x(1) + x(-1));
    let mut vals = vec![QFraction::one(), sym.clone()];
    for n in 1..nmax {
        let b = recurrence_coeff(n, beta_exp, base_exp)?;
        let next = (&(&sym * &vals[n]) - &(&b * &vals[n - 1])).reduce();
        vals.push(next);
    }
    vals.truncate(nmax + 1);
    Ok(vals
        .into_iter()
        .enumerate()
        .map(|(n, v)| wrap(n, v))
        .collect())
}

pub fn mac_p(n: usize, beta_exp: i32, base_exp: i32) -> Result<MacPoly> {
    Ok(mac_p_table(n, beta_exp, base_exp)?
        .pop()
        .expect("table is nonempty"))
}

/// `C_n(x; q^{4i} | q^4) = Σ_k [k+i-1, i-1]·[n-k+i-1, i-1]·x^{n-2k}` with
/// Gaussian binomials in `q^4`.
pub fn rogers_c(n: usize, i: usize) -> MacPoly {
    assert!(i >= 1, "rogers_c needs i >= 1");
    let (n_i, i_i) = (n as i32, i as i32);
    let value: LaurentPoly = (0..=n_i)
        .map(|k| {
            let w =
                &gauss_binom(k + i_i - 1, i_i - 1, 4) * &gauss_binom(n_i - k + i_i - 1, i_i - 1, 4);
            &w * &x(n_i - 2 * k)
        })
        .sum();
    MacPoly {
        n,
        beta_exp: 4 * i_i,
        base_exp: 4,
        value: QFraction::from_poly(value),
    }
}

/// `C_n = ((β; Q)_n / (Q; Q)_n) p_n` for `β = q^{4i}`, `Q = q^4`.
pub fn rogers_from_recurrence(n: usize, i: usize) -> Result<QFraction> {
    let p = mac_p(n, 4 * i as i32, 4)?;
    let mut out = p.value.mul_poly(&qpochhammer(4 * i as i32, 4, n as u32));
    // (q^4; q^4)_n = ∏_{k=1}^n -q^{2k} {2k}
    for k in 1..=n as i32 {
        out = out
            .mul_monomial(&Monomial::var(Var::Q, -2 * k))
            .div_brace(2 * k)
            .scale_i64(-1);
    }
    Ok(out.reduce())
}

/// Compare `Σ_n C_n z^n` with `∏_{k<i} (1 - q^{4k} z x)^{-1} (1 - q^{4k} z x^{-1})^{-1}`
/// through `z^order`.
pub fn mac_genfun_check(i: usize, order: usize) -> bool {
    let mut prod = TruncatedSeries::one(order);
    for k in 0..i as i32 {
        for s in [1, -1] {
            let w = -(&qpow(4 * k) * &x(s));
            let factor = TruncatedSeries::from_coeffs(
                vec![QFraction::one(), QFraction::from_poly(w)],
                order,
            );
            match factor.invert() {
                Ok(inv) => prod = prod.mul(&inv),
                Err(_) => return false,
            }
        }
    }
    (0..=order).all(|n| prod.coeff(n) == &rogers_c(n, i).value)
}
