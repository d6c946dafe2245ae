//! q-combinatorial building blocks: braces, balanced and Gaussian
//! q-binomials, q-Pochhammer symbols, Chebyshev polynomials, the classical
//! cyclotomic coefficients and the `α^{(i)}_k` / `P^{(i)}` pair.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{qpow, LaurentPoly, Monomial, QFraction, Var};

/// `{n}_q = q^n - q^{-n}`
pub fn qbrace(n: i32) -> LaurentPoly {
    qpow(n) - qpow(-n)
}

/// Balanced q-integer in the variable `v = q^base`: `Σ_{j<n} v^{n-1-2j}`,
/// which equals `{base·n}_q / {base}_q`.
pub fn qint(n: u32, base: i32) -> LaurentPoly {
    assert!(base > 0, "q-integer base must be positive");
    let n = n as i32;
    (0..n).map(|j| qpow(base * (n - 1 - 2 * j))).sum()
}

/// Balanced q-binomial `[n choose m]` in `v = q^base`, built with the
/// q-Pascal rule `[n,m] = v^{-m}[n-1,m] + v^{n-m}[n-1,m-1]`.
/// Zero outside `0 <= m <= n`.
pub fn qbinom(n: i32, m: i32, base: i32) -> LaurentPoly {
    assert!(base > 0, "q-binomial base must be positive");
    if n < 0 || m < 0 || m > n {
        return LaurentPoly::zero();
    }
    let (n, m) = (n as usize, m as usize);
    // row[k] = [r choose k] for the current r, k <= m
    let mut row = vec![LaurentPoly::zero(); m + 1];
    row[0] = LaurentPoly::one();
    for r in 1..=n {
        for k in (1..=m.min(r)).rev() {
            let keep = row[k].mul_monomial(&Monomial::var(Var::Q, -base * k as i32));
            let shift = row[k - 1].mul_monomial(&Monomial::var(Var::Q, base * (r - k) as i32));
            row[k] = keep + shift;
        }
    }
    row[m].clone()
}

/// Gaussian binomial in `Q = q^base`: a polynomial with nonnegative powers,
/// from `G(n,m) = G(n-1,m-1) + Q^m G(n-1,m)`. Zero outside `0 <= m <= n`.
pub fn gauss_binom(n: i32, m: i32, base: i32) -> LaurentPoly {
    if n < 0 || m < 0 || m > n {
        return LaurentPoly::zero();
    }
    let (n, m) = (n as usize, m as usize);
    let mut row = vec![LaurentPoly::zero(); m + 1];
    row[0] = LaurentPoly::one();
    for r in 1..=n {
        for k in (1..=m.min(r)).rev() {
            row[k] = &row[k - 1] + &(&row[k] * &qpow(base * k as i32));
        }
    }
    row[m].clone()
}

/// `(q^a; q^b)_n = ∏_{k<n} (1 - q^{a + k b})`
pub fn qpochhammer(a_qexp: i32, base_exp: i32, n: u32) -> LaurentPoly {
    (0..n as i32)
        .map(|k| LaurentPoly::one() - qpow(a_qexp + k * base_exp))
        .product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    /// `T_0 = 2, T_1 = x`
    T,
    /// `S_0 = 1, S_1 = u`
    S,
}

/// Integer coefficients (ascending powers of the argument) of `T_n` or `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebCoeffs {
    pub kind: ChebKind,
    pub n: usize,
    pub coeffs: Vec<BigInt>,
}

impl ChebCoeffs {
    /// Horner evaluation at a Laurent-polynomial argument.
    pub fn eval(&self, arg: &LaurentPoly) -> LaurentPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(LaurentPoly::zero(), |acc, c| {
                &(&acc * arg) + &LaurentPoly::monomial(c.clone(), Monomial::ONE)
            })
    }
}

fn shift_sub(prev: &[BigInt], prev2: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); prev.len() + 1];
    for (k, c) in prev.iter().enumerate() {
        out[k + 1] += c;
    }
    for (k, c) in prev2.iter().enumerate() {
        out[k] -= c;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

pub fn chebyshev(kind: ChebKind, n: usize) -> ChebCoeffs {
    let c0 = match kind {
        ChebKind::T => vec![BigInt::from(2)],
        ChebKind::S => vec![BigInt::from(1)],
    };
    let c1 = vec![BigInt::zero(), BigInt::from(1)];
    let coeffs = match n {
        0 => c0,
        _ => {
            let (mut a, mut b) = (c0, c1);
            for _ in 1..n {
                let next = shift_sub(&b, &a);
                a = b;
                b = next;
            }
            b
        }
    };
    ChebCoeffs { kind, n, coeffs }
}

/// Classical cyclotomic coefficient
/// `c_{n,i-1} = {2}^{-1} ∏_{p=n-i+1}^{n+i-1} {2p}`, for `1 <= i <= n`.
pub fn cyclotomic_c(n: i32, i: i32) -> Result<LaurentPoly> {
    if i < 1 || i > n {
        return Err(Error::Index(format!(
            "c_{{n,i-1}} needs 1 <= i <= n, got n={n}, i={i}"
        )));
    }
    let prod: LaurentPoly = cyclotomic_braces(n, i).into_iter().map(qbrace).product();
    QFraction::new(prod, [2]).to_poly().ok_or_else(|| {
        Error::IntegralityViolation(format!("c_{{{n},{}}} not divisible by {{2}}", i - 1))
    })
}

/// Brace indices `2p`, `n-i+1 <= p <= n+i-1`, whose product over `{2}` is `c_{n,i-1}`.
pub fn cyclotomic_braces(n: i32, i: i32) -> Vec<i32> {
    (n - i + 1..=n + i - 1).map(|p| 2 * p).collect()
}

/// [`cyclotomic_c`] extended by zero to `p < i`.
pub fn cyclotomic_c_ext(p: i32, i: i32) -> LaurentPoly {
    if i >= 1 && p < i {
        LaurentPoly::zero()
    } else {
        cyclotomic_c(p, i).expect("index checked")
    }
}

/// `α^{(i)}_k = (-1)^{i-k} [2i-1 choose i-k]_{q^2}`, for `1 <= k <= i`.
pub fn alpha(i: i32, k: i32) -> Result<LaurentPoly> {
    if k < 1 || k > i {
        return Err(Error::Index(format!(
            "alpha needs 1 <= k <= i, got i={i}, k={k}"
        )));
    }
    let b = qbinom(2 * i - 1, i - k, 2);
    Ok(if (i - k) % 2 == 0 { b } else { -b })
}

/// `P^{(i)}(X) = ∏_{k=1}^{i-1} (q^{-2k}X - q^{2k}X^{-1})(q^{2k}X - q^{-2k}X^{-1})`
pub fn p_poly(i: i32) -> LaurentPoly {
    let qx = |qe: i32, xe: i32| {
        LaurentPoly::monomial(
            BigInt::from(1),
            Monomial::from_pairs(&[(Var::Q, qe), (Var::X, xe)]),
        )
    };
    (1..i)
        .map(|k| (qx(-2 * k, 1) - qx(2 * k, -1)) * (qx(2 * k, 1) - qx(-2 * k, -1)))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SignedMonomial;

    fn q(e: i32) -> LaurentPoly {
        qpow(e)
    }

    #[test]
    fn brace_values() {
        assert_eq!(qbrace(2), q(2) - q(-2));
        assert!(qbrace(0).is_zero());
        assert_eq!(qbrace(-3), -(q(3) - q(-3)));
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(2, 2), q(2) + q(-2));
        assert_eq!(qint(3, 2), q(4) + LaurentPoly::one() + q(-4));
        assert!(qint(1, 6).is_one());
        for n in 1..8 {
            assert_eq!(
                QFraction::new(qbrace(2 * n), [2]).to_poly(),
                Some(qint(n as u32, 2))
            );
        }
    }

    #[test]
    fn qbinom_small() {
        assert!(qbinom(3, 0, 2).is_one());
        assert_eq!(qbinom(2, 1, 2), q(2) + q(-2));
    }

    #[test]
    fn qbinom_pascal_matches_product_formula() {
        // [4 choose 2] in base 4 as ∏ [n-k+1]/[m-k+1], cleared of denominators
        let lhs = &qbinom(4, 2, 4) * &(&qint(1, 4) * &qint(2, 4));
        let rhs = &qint(4, 4) * &qint(3, 4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn qbinom_other_pascal_rule() {
        // [n,m] = v^{m}[n-1,m] + v^{-(n-m)}[n-1,m-1] as well (symmetry)
        for n in 1..=12 {
            for m in 1..n {
                let v = |e: i32| q(2 * e);
                let rhs = &v(m) * &qbinom(n - 1, m, 2) + &v(-(n - m)) * &qbinom(n - 1, m - 1, 2);
                assert_eq!(qbinom(n, m, 2), rhs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn gauss_vs_balanced() {
        for n in 0..=10 {
            for m in 0..=n {
                let g = gauss_binom(n, m, 4);
                let b = &qbinom(n, m, 2) * &q(2 * m * (n - m));
                assert_eq!(g, b, "n={n} m={m}");
                assert!(g.min_exp(Var::Q).unwrap() >= 0);
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        assert!(qpochhammer(4, 4, 0).is_one());
        assert_eq!(qpochhammer(4, 4, 1), LaurentPoly::one() - q(4));
        assert_eq!(
            qpochhammer(4, 4, 2),
            (LaurentPoly::one() - q(4)) * (LaurentPoly::one() - q(8))
        );
    }

    #[test]
    fn chebyshev_small() {
        let to_i = |c: &ChebCoeffs| c.coeffs.iter().map(|b| b.to_string()).collect::<Vec<_>>();
        assert_eq!(to_i(&chebyshev(ChebKind::T, 0)), ["2"]);
        assert_eq!(to_i(&chebyshev(ChebKind::T, 1)), ["0", "1"]);
        assert_eq!(to_i(&chebyshev(ChebKind::T, 2)), ["-2", "0", "1"]);
        assert_eq!(to_i(&chebyshev(ChebKind::S, 2)), ["-1", "0", "1"]);
    }

    #[test]
    fn chebyshev_s_substitution_identity() {
        let z = |e: i32| LaurentPoly::var_pow(Var::X, e);
        let arg = z(1) + z(-1);
        for n in 1..=12 {
            let s = chebyshev(ChebKind::S, n - 1).eval(&arg);
            assert_eq!(&s * &(z(1) - z(-1)), z(n as i32) - z(-(n as i32)), "n={n}");
        }
    }

    #[test]
    fn chebyshev_t_substitution_identity() {
        let z = |e: i32| LaurentPoly::var_pow(Var::X, e);
        for n in 0..=10 {
            let t = chebyshev(ChebKind::T, n).eval(&(z(1) + z(-1)));
            assert_eq!(t, z(n as i32) + z(-(n as i32)), "n={n}");
        }
    }

    #[test]
    fn cyclotomic_small() {
        assert!(cyclotomic_c(1, 1).unwrap().is_one());
        for n in 1..8 {
            assert_eq!(cyclotomic_c(n, 1).unwrap(), qint(n as u32, 2));
        }
        assert_eq!(cyclotomic_c(2, 2).unwrap(), qbrace(4) * qbrace(6));
        assert!(cyclotomic_c(2, 3).is_err());
        assert!(cyclotomic_c(2, 0).is_err());
        assert!(cyclotomic_c_ext(2, 3).is_zero());
    }

    #[test]
    fn cyclotomic_integral_up_to_16() {
        for n in 1..=16 {
            for i in 1..=n {
                cyclotomic_c(n, i).unwrap();
            }
        }
    }

    #[test]
    fn alpha_values() {
        for i in 1..6 {
            assert!(alpha(i, i).unwrap().is_one());
        }
        assert_eq!(alpha(2, 1).unwrap(), -(q(4) + LaurentPoly::one() + q(-4)));
        assert!(alpha(2, 3).is_err());
    }

    #[test]
    fn p_poly_small() {
        assert!(p_poly(1).is_one());
        let qx = |qe: i32, xe: i32| {
            LaurentPoly::monomial(
                BigInt::from(1),
                Monomial::from_pairs(&[(Var::Q, qe), (Var::X, xe)]),
            )
        };
        let expect = (qx(-2, 1) - qx(2, -1)) * (qx(2, 1) - qx(-2, -1));
        assert_eq!(p_poly(2), expect);
        for i in 1..6 {
            assert!(p_poly(i).is_symmetric_in(Var::X));
        }
    }

    #[test]
    fn alpha_p_identity() {
        let x = |e: i32| LaurentPoly::var_pow(Var::X, e);
        for i in 1..=6 {
            let lhs = &(x(1) - x(-1)) * &p_poly(i);
            let rhs: LaurentPoly = (1..=i)
                .map(|k| &alpha(i, k).unwrap() * &(x(2 * k - 1) - x(1 - 2 * k)))
                .sum();
            assert_eq!(lhs, rhs, "i={i}");
        }
    }

    #[test]
    fn p_poly_as_eigen_product() {
        // P^{(i)} evaluated at X = -q^{-2p} reproduces the brace product of the
        // cyclotomic coefficient with the {2p} factor removed.
        for i in 1..=4 {
            for p in i..i + 3 {
                let img = SignedMonomial::neg(Monomial::var(Var::Q, -2 * p));
                let val = p_poly(i).substitute(Var::X, &img);
                let prod: LaurentPoly = (1..i)
                    .map(|j| qbrace(2 * (p - j)) * qbrace(2 * (p + j)))
                    .product();
                assert_eq!(val, prod, "i={i} p={p}");
            }
        }
    }
}
