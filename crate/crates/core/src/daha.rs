//! Right actions on `C[U^{±1}]` (quantum torus generators and the
//! Dunkl–Cherednik operator `Y_{t1,t2}`), the polynomial representation
//! operators `T1`, `T3` on `C[X^{±1}]`, and the operator oracle for `a_{n,p}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::{qpow, LaurentPoly, Monomial, QFraction, SignedMonomial, Var};
use crate::params::HeckeParams;
use crate::qcombo::{chebyshev, ChebKind};

/// Laurent polynomial in `U` with [`QFraction`] coefficients, stored by `U`-exponent.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct UModuleElem {
    coeffs: BTreeMap<i32, QFraction>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basic {
    X,
    Y,
    S,
}

impl UModuleElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(k: i32, c: QFraction) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn u_pow(k: i32) -> Self {
        Self::monomial(k, QFraction::one())
    }

    /// The distinguished element `U - U^{-1}`.
    pub fn empty_diagram() -> Self {
        let mut out = Self::u_pow(1);
        out.add_term(-1, -QFraction::one());
        out
    }

    /// Read a `LaurentPoly` with a `U` grading; the other variables become coefficients.
    pub fn from_poly(p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.split_by(Var::U) {
            out.add_term(k, QFraction::from_poly(c));
        }
        out
    }

    pub fn coeffs(&self) -> &BTreeMap<i32, QFraction> {
        &self.coeffs
    }

    pub fn coeff(&self, k: i32) -> QFraction {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, k: i32, c: QFraction) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.coeffs {
            out.add_term(k, -c);
        }
        out
    }

    pub fn reduce(&self) -> Self {
        let mut out = Self::zero();
        for (&k, c) in &self.coeffs {
            let r = c.reduce();
            if !r.is_zero() {
                out.coeffs.insert(k, r);
            }
        }
        out
    }

    /// `f(-q^{2N})`
    pub fn eval_at(&self, n: i32) -> QFraction {
        self.coeffs
            .iter()
            .map(|(&k, c)| {
                let v = c.mul_monomial(&Monomial::var(Var::Q, 2 * n * k));
                if k % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum::<QFraction>()
            .reduce()
    }

    /// Whether `f(U^{-1}) = -f(U)`.
    pub fn is_skew(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&k, c)| k != 0 && c == &-self.coeff(-k))
    }

    fn map_terms<F: Fn(i32, &QFraction) -> Vec<(i32, QFraction)>>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (&k, c) in &self.coeffs {
            for (e, v) in f(k, c) {
                out.add_term(e, v);
            }
        }
        out
    }

    /// `f·Y = f U^{-1}`, `f·X = -f(q^2 U)`, `f·s = -f(U^{-1})`.
    pub fn act_basic(&self, g: Basic) -> Self {
        match g {
            Basic::Y => self.map_terms(|k, c| vec![(k - 1, c.clone())]),
            Basic::X => {
                self.map_terms(|k, c| vec![(k, -c.mul_monomial(&Monomial::var(Var::Q, 2 * k)))])
            }
            Basic::S => self.map_terms(|k, c| vec![(-k, -c)]),
        }
    }

    /// Right action of `Y_{t1,t2}` or, with `inverse`, of `Y_{t1,t2}^{-1}`.
    pub fn act_y_dunkl(&self, params: &HeckeParams, inverse: bool) -> Self {
        let t1 = QFraction::from_poly(params.t(1));
        let tb1 = QFraction::from_poly(params.tbar(1));
        self.map_terms(|k, c| {
            if inverse {
                let b = y_inv_scalar(k, params);
                vec![
                    (k + 1, (c * &(&t1 - &b)).reduce()),
                    (-k, (c * &(&tb1 - &b)).reduce()),
                ]
            } else {
                let a = a_at_eigen(k, params);
                vec![
                    (k - 1, (c * &(&t1 - &a)).reduce()),
                    (-k, -(c * &a).reduce()),
                ]
            }
        })
    }

    /// Right action of `Z = Y_{t1,t2} + Y_{t1,t2}^{-1}`.
    pub fn act_z(&self, params: &HeckeParams) -> Self {
        self.act_y_dunkl(params, false)
            .add(&self.act_y_dunkl(params, true))
            .reduce()
    }
}

/// `a(X) = (q t̄1 X^{-1} + t̄2) / (q X^{-1} - q^{-1} X)` at the eigenvalue `X = -q^{2k}`.
pub fn a_at_eigen(k: i32, params: &HeckeParams) -> QFraction {
    let num = params.tbar(2) - &qpow(1 - 2 * k) * &params.tbar(1);
    QFraction::new(num, [2 * k - 1])
}

/// Scalar `b_k = (q^{2k+1} t̄1 - t̄2) / {2k+1}` in
/// `U^k · Y^{-1} = (t1 - b_k) U^{k+1} + (t̄1 - b_k) U^{-k}`.
pub fn y_inv_scalar(k: i32, params: &HeckeParams) -> QFraction {
    let num = &qpow(2 * k + 1) * &params.tbar(1) - params.tbar(2);
    QFraction::new(num, [2 * k + 1])
}

fn coeffs_of_skew(w: &UModuleElem, n: usize) -> Result<Vec<QFraction>> {
    if !w.is_skew() {
        return Err(Error::NotSkewSymmetric { n });
    }
    if w.coeffs.keys().any(|&k| k.unsigned_abs() as usize > n) {
        return Err(Error::NotSkewSymmetric { n });
    }
    Ok((0..=n as i32).map(|p| w.coeff(p)).collect())
}

/// `a_{n,p}` for `p = 0..=n` (entry 0 is zero) from the expansion of
/// `(U - U^{-1})·S_{n-1}(Z)` in the basis `U^p - U^{-p}`.
pub fn oracle_a(n: usize, params: &HeckeParams) -> Result<Vec<QFraction>> {
    assert!(n >= 1, "oracle_a needs n >= 1");
    let cheb = chebyshev(ChebKind::S, n - 1);
    let mut power = UModuleElem::empty_diagram();
    let mut acc = UModuleElem::zero();
    for (j, c) in cheb.coeffs.iter().enumerate() {
        if j > 0 {
            power = power.act_z(params);
        }
        let c = QFraction::from_poly(LaurentPoly::monomial(c.clone(), Monomial::ONE));
        for (&k, v) in &power.coeffs {
            acc.add_term(k, v * &c);
        }
    }
    coeffs_of_skew(&acc.reduce(), n)
}

/// All rows `1..=nmax` of [`oracle_a`], computed by `w_{n+1} = w_n·Z - w_{n-1}`.
/// Row 0 is the zero row.
pub fn oracle_a_rows(nmax: usize, params: &HeckeParams) -> Result<Vec<Vec<QFraction>>> {
    let mut rows = vec![vec![QFraction::zero()]];
    let mut prev = UModuleElem::zero();
    let mut cur = UModuleElem::empty_diagram();
    for n in 1..=nmax {
        rows.push(coeffs_of_skew(&cur, n)?);
        let next = cur.act_z(params).sub(&prev).reduce();
        prev = cur;
        cur = next;
    }
    Ok(rows)
}

/// Closed evaluation of `[f·Z]` at `U = -q^{2N}` in terms of values of `f`.
pub fn eval_z_closed(f: &UModuleElem, n: i32, params: &HeckeParams) -> QFraction {
    let lead = (&params.t(1) * &qpow(-2 * n)) + (&params.t_inv(1) * &qpow(2 * n));
    let mut out = -(&QFraction::from_poly(lead) * &f.eval_at(n));
    let tb1 = QFraction::from_poly(params.tbar(1));
    let tb2 = QFraction::from_poly(params.tbar(2));
    for p in 0..n {
        let br = |m: i32| QFraction::from_poly(qpow(m) - qpow(-m));
        out = &out + &(&tb1 * &(&br(2 * p) * &f.eval_at(2 * p - n)));
        out = &out - &(&tb2 * &(&br(2 * p + 1) * &f.eval_at(2 * p - n + 1)));
    }
    out.reduce()
}

/// Laurent polynomial in `X` acted on by the polynomial representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModuleElem {
    value: LaurentPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeGen {
    T1,
    T3,
}

/// Two models of `C[X^{±1}]`: the polynomial representation with
/// `s·f = f(X^{-1})`, and the unknot skein module with `s·f = -f(X^{-1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    Polynomial,
    UnknotSkein,
}

impl XModuleElem {
    pub fn new(value: LaurentPoly) -> Self {
        Self { value }
    }

    pub fn x_pow(n: i32) -> Self {
        Self::new(LaurentPoly::var_pow(Var::X, n))
    }

    pub fn value(&self) -> &LaurentPoly {
        &self.value
    }

    pub fn act(&self, g: HeckeGen, params: &HeckeParams, rep: Representation) -> Result<Self> {
        let mut out = LaurentPoly::zero();
        for (n, c) in self.value.split_by(Var::X) {
            out += &(&c * &polyrep_monomial(n, g, params, rep)?);
        }
        Ok(Self::new(out))
    }
}

fn qx(qe: i32, xe: i32) -> LaurentPoly {
    LaurentPoly::monomial(
        1.into(),
        Monomial::from_pairs(&[(Var::Q, qe), (Var::X, xe)]),
    )
}

/// `(1 - (qX)^{2n}) / (1 - (qX)^2)` as a Laurent polynomial, for any integer `n`.
fn geometric_qx(n: i32) -> LaurentPoly {
    if n >= 0 {
        (0..n).map(|j| qx(2 * j, 2 * j)).sum()
    } else {
        -(n..0).map(|j| qx(2 * j, 2 * j)).sum::<LaurentPoly>()
    }
}

fn polyrep_monomial(
    n: i32,
    g: HeckeGen,
    params: &HeckeParams,
    rep: Representation,
) -> Result<LaurentPoly> {
    let x = |e: i32| LaurentPoly::var_pow(Var::X, e);
    match g {
        HeckeGen::T1 => {
            let head = &params.t(1) * &qx(-2 * n, -n);
            let inner = &(&params.tbar(1) * &qx(2, 2)) + &(&params.tbar(2) * &qx(1, 1));
            Ok(head + &(&qx(-2 * n, -n) * &inner) * &geometric_qx(n))
        }
        HeckeGen::T3 => {
            let (sign, top) = match rep {
                Representation::Polynomial => (1, x(n) - x(-n)),
                Representation::UnknotSkein => (-1, x(n) + x(-n)),
            };
            // top / (1 - X^2) = -top / (X^2 - 1)
            let bar = &params.tbar(3) + &(&params.tbar(4) * &x(1));
            let head = (&params.t(3) * &x(-n)).scale_i64(sign);
            if bar.is_zero() {
                return Ok(head);
            }
            let quot = top.div_binomial(Var::X, 2).ok_or_else(|| {
                Error::NonPolynomialResult(format!("T3 on X^{n} leaves an X-denominator"))
            })?;
            Ok(head - &bar * &quot)
        }
    }
}

/// `T·f` in the chosen model.
pub fn polyrep_act(
    f: &XModuleElem,
    g: HeckeGen,
    params: &HeckeParams,
    rep: Representation,
) -> Result<XModuleElem> {
    f.act(g, params, rep)
}

/// Image of `X^n` under `(T - t)(T + t^{-1})` for `T = T1` or `T3`.
pub fn hecke_defect(
    n: i32,
    g: HeckeGen,
    params: &HeckeParams,
    rep: Representation,
) -> Result<LaurentPoly> {
    let idx = match g {
        HeckeGen::T1 => 1,
        HeckeGen::T3 => 3,
    };
    let f = XModuleElem::x_pow(n);
    let inner = f.act(g, params, rep)?.value + &params.t_inv(idx) * f.value();
    let inner = XModuleElem::new(inner);
    Ok(inner.act(g, params, rep)?.value - &params.t(idx) * inner.value())
}

/// `f(-q^{2k})` for a Laurent polynomial `f` in `X`.
pub fn eval_x_at_eigen(f: &LaurentPoly, k: i32) -> LaurentPoly {
    f.substitute(Var::X, &SignedMonomial::neg(Monomial::var(Var::Q, 2 * k)))
}
