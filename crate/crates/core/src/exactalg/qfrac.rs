use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::monomial::{Monomial, Var};
use super::poly::{LaurentPoly, SignedMonomial};

/// A Laurent polynomial over a product of q-braces `{m}_q = q^m - q^{-m}`.
///
/// `den` maps `m >= 1` to its multiplicity. Every denominator that occurs in
/// the cyclotomic machinery is of this shape, so no general GCD is needed.
#[derive(Clone, Debug, Default)]
pub struct QFraction {
    num: LaurentPoly,
    den: BTreeMap<u32, u32>,
}

fn brace(m: u32) -> LaurentPoly {
    let m = m as i32;
    LaurentPoly::var_pow(Var::Q, m) - LaurentPoly::var_pow(Var::Q, -m)
}

fn den_product<'a, I: IntoIterator<Item = (&'a u32, &'a u32)>>(factors: I) -> LaurentPoly {
    factors
        .into_iter()
        .fold(LaurentPoly::one(), |acc, (&m, &k)| acc * brace(m).pow(k))
}

impl QFraction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: BTreeMap::new(),
        }
    }

    /// `num / ∏ {m}_q` over the given (nonzero) indices; negative `m` flips the sign.
    pub fn new<I: IntoIterator<Item = i32>>(num: LaurentPoly, den: I) -> Self {
        let mut out = Self::from_poly(num);
        for m in den {
            out = out.div_brace(m);
        }
        out
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    /// Denominator factors as a flat, sorted list with repetition.
    pub fn den_factors(&self) -> Vec<u32> {
        self.den
            .iter()
            .flat_map(|(&m, &k)| std::iter::repeat_n(m, k as usize))
            .collect()
    }

    pub fn den_poly(&self) -> LaurentPoly {
        den_product(self.den.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is empty (call [`reduce`](Self::reduce) first
    /// for a meaningful answer).
    pub fn is_poly(&self) -> bool {
        self.den.is_empty()
    }

    /// Divide by `{m}_q`.
    pub fn div_brace(mut self, m: i32) -> Self {
        assert!(m != 0, "division by {{0}}_q");
        if m < 0 {
            self.num = -self.num;
        }
        *self.den.entry(m.unsigned_abs()).or_insert(0) += 1;
        self
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    /// Multiply by `∏ {k}_q`, cancelling each `{k}` against a denominator
    /// factor `{m}` with `m | k` before expanding.
    pub fn mul_braces<I: IntoIterator<Item = i32>>(&self, ks: I) -> Self {
        let mut den = self.den.clone();
        let mut factor = LaurentPoly::one();
        for k in ks {
            assert!(k != 0, "{{0}}_q is zero");
            let a = k.unsigned_abs();
            let hit = den.keys().rev().copied().find(|m| a % m == 0);
            let piece = match hit {
                Some(m) => {
                    let cnt = den.get_mut(&m).unwrap();
                    *cnt -= 1;
                    if *cnt == 0 {
                        den.remove(&m);
                    }
                    // {a}/{m} = Σ_{j<r} q^{m(r-1-2j)}, r = a/m
                    let (m, r) = (m as i32, (a / m) as i32);
                    (0..r)
                        .map(|j| LaurentPoly::var_pow(Var::Q, m * (r - 1 - 2 * j)))
                        .sum()
                }
                None => brace(a),
            };
            factor = &factor * &piece;
            if k < 0 {
                factor = -factor;
            }
        }
        Self {
            num: &self.num * &factor,
            den,
        }
    }

    /// Cancel denominator factors that divide the numerator exactly, to a fixpoint.
    /// Never changes the value.
    pub fn reduce(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        if num.is_zero() {
            return Self::zero();
        }
        loop {
            let mut progress = false;
            let keys: Vec<u32> = den.keys().rev().copied().collect();
            for m in keys {
                while den.get(&m).copied().unwrap_or(0) > 0 {
                    match num.div_qbrace(m as i32) {
                        Some(quot) => {
                            num = quot;
                            let k = den.get_mut(&m).unwrap();
                            *k -= 1;
                            if *k == 0 {
                                den.remove(&m);
                            }
                            progress = true;
                        }
                        None => break,
                    }
                }
            }
            if !progress || den.is_empty() {
                break;
            }
        }
        Self { num, den }
    }

    /// Reduce and return the polynomial if the denominator cancels completely.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        let r = self.reduce();
        if r.den.is_empty() {
            Some(r.num)
        } else {
            None
        }
    }

    /// Inverse of a unit: `±w / ∏{m}` becomes `±w^{-1} ∏{m}`.
    pub fn try_inverse(&self) -> Option<Self> {
        let (m, c) = self.num.single_term()?;
        if !c.abs().is_one() {
            return None;
        }
        let inv = LaurentPoly::monomial(c.clone(), m.inverse());
        Some(Self::from_poly(inv * self.den_poly()))
    }

    /// Substitute a non-`q` variable; `q` carries the denominator and is excluded.
    pub fn substitute(&self, v: Var, image: &SignedMonomial) -> Self {
        assert!(v != Var::Q, "cannot substitute q inside a q-brace fraction");
        Self {
            num: self.num.substitute(v, image),
            den: self.den.clone(),
        }
    }

    pub fn specialize_one(&self, v: Var) -> Self {
        self.substitute(v, &SignedMonomial::one())
    }

    pub fn mul_monomial(&self, w: &Monomial) -> Self {
        Self {
            num: self.num.mul_monomial(w),
            den: self.den.clone(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        Self {
            num: self.num.scale(&BigInt::from(k)),
            den: self.den.clone(),
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let (lift_a, lift_b, den) = lcm_lifts(&self.den, &other.den);
        let a = &self.num * &lift_a;
        let b = &other.num * &lift_b;
        let num = if negate { a - b } else { a + b };
        Self { num, den }
    }
}

/// Common multiset denominator and the factors lifting each side onto it.
fn lcm_lifts(
    a: &BTreeMap<u32, u32>,
    b: &BTreeMap<u32, u32>,
) -> (LaurentPoly, LaurentPoly, BTreeMap<u32, u32>) {
    if a == b {
        return (LaurentPoly::one(), LaurentPoly::one(), a.clone());
    }
    let mut den = a.clone();
    for (&m, &k) in b {
        let e = den.entry(m).or_insert(0);
        *e = (*e).max(k);
    }
    let missing = |have: &BTreeMap<u32, u32>| -> BTreeMap<u32, u32> {
        den.iter()
            .filter_map(|(&m, &k)| {
                let h = have.get(&m).copied().unwrap_or(0);
                (k > h).then_some((m, k - h))
            })
            .collect()
    };
    let lift_a = den_product(missing(a).iter());
    let lift_b = den_product(missing(b).iter());
    (lift_a, lift_b, den)
}

impl PartialEq for QFraction {
    /// Value equality (cross-multiplication over the multiset lcm).
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let (lift_a, lift_b, _) = lcm_lifts(&self.den, &other.den);
        &self.num * &lift_a == &other.num * &lift_b
    }
}

impl From<LaurentPoly> for QFraction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Neg for QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        QFraction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        -(self.clone())
    }
}

impl Add<&QFraction> for &QFraction {
    type Output = QFraction;
    fn add(self, rhs: &QFraction) -> QFraction {
        self.add_impl(rhs, false)
    }
}

impl Sub<&QFraction> for &QFraction {
    type Output = QFraction;
    fn sub(self, rhs: &QFraction) -> QFraction {
        self.add_impl(rhs, true)
    }
}

impl Mul<&QFraction> for &QFraction {
    type Output = QFraction;
    fn mul(self, rhs: &QFraction) -> QFraction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return QFraction::zero();
        }
        let mut den = self.den.clone();
        for (&m, &k) in &rhs.den {
            *den.entry(m).or_insert(0) += k;
        }
        QFraction {
            num: &self.num * &rhs.num,
            den,
        }
    }
}

impl Add for QFraction {
    type Output = QFraction;
    fn add(self, rhs: QFraction) -> QFraction {
        &self + &rhs
    }
}

impl Sub for QFraction {
    type Output = QFraction;
    fn sub(self, rhs: QFraction) -> QFraction {
        &self - &rhs
    }
}

impl Mul for QFraction {
    type Output = QFraction;
    fn mul(self, rhs: QFraction) -> QFraction {
        &self * &rhs
    }
}

impl std::iter::Sum for QFraction {
    fn sum<I: Iterator<Item = QFraction>>(iter: I) -> Self {
        iter.fold(QFraction::zero(), |a, b| &a + &b)
    }
}
