use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::{Monomial, Var};

/// Sparse Laurent polynomial over the integers in the fixed variable set.
///
/// Terms are kept sorted by monomial (canonical order) with no zero
/// coefficients, so structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, BigInt)>,
}

/// `±w` for a power product `w`; the image allowed by [`LaurentPoly::substitute`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub negative: bool,
    pub mono: Monomial,
}

impl SignedMonomial {
    pub fn pos(mono: Monomial) -> Self {
        Self {
            negative: false,
            mono,
        }
    }

    pub fn neg(mono: Monomial) -> Self {
        Self {
            negative: true,
            mono,
        }
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::pos(Monomial::ONE)
    }

    /// `(±w)^e`
    fn pow(&self, e: i32) -> (bool, Monomial) {
        (self.negative && e.rem_euclid(2) == 1, self.mono.pow(e))
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(BigInt::one(), Monomial::var(v, 1))
    }

    /// `v^e`
    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::monomial(BigInt::one(), Monomial::var(v, e))
    }

    pub fn monomial(c: BigInt, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(m, c)],
            }
        }
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in iter {
            *acc.entry(m).or_default() += c;
        }
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn from_hash(acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    /// The sole term, if there is exactly one.
    pub fn single_term(&self) -> Option<(&Monomial, &BigInt)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    /// True if no term involves `v`.
    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.iter().all(|(m, _)| m.exp(v) == 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| !self.is_free_of(v))
            .collect()
    }

    pub fn min_exp(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).min()
    }

    pub fn max_exp(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exp(v)).max()
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, e: i32) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == e)
                .map(|(m, c)| (m.without(v), c.clone()))
                .collect(),
        }
    }

    /// Group terms by the exponent of `v`.
    pub fn split_by(&self, v: Var) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v))
                .or_default()
                .push((m.without(v), c.clone()));
        }
        out.into_iter()
            .map(|(e, terms)| (e, LaurentPoly { terms }))
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> LaurentPoly {
        self.scale(&BigInt::from(k))
    }

    /// Multiply by a power product; ordering is preserved so no re-sort is needed.
    pub fn mul_monomial(&self, w: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(w), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replace every `v^e` by `(±w)^e`. Negative `e` is fine since the image is a unit.
    pub fn substitute(&self, v: Var, image: &SignedMonomial) -> LaurentPoly {
        let mut acc = HashMap::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let (neg, w) = image.pow(e);
            let key = m.without(v).mul(&w);
            let entry = acc.entry(key).or_insert_with(BigInt::zero);
            if neg {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        Self::from_hash(acc)
    }

    /// Evaluate at `v = 1`.
    pub fn specialize_one(&self, v: Var) -> LaurentPoly {
        self.substitute(v, &SignedMonomial::one())
    }

    /// `p(v^{-1})`
    pub fn invert_var(&self, v: Var) -> LaurentPoly {
        self.substitute(v, &SignedMonomial::pos(Monomial::var(v, -1)))
    }

    /// Exact division by `v^e - 1` (`e > 0`).
    ///
    /// The divisor involves only `v`, so the dividend splits into independent
    /// univariate problems, one per power product of the other variables.
    /// Returns `None` if any remainder is nonzero.
    pub fn div_binomial(&self, v: Var, e: i32) -> Option<LaurentPoly> {
        assert!(e > 0, "div_binomial needs a positive exponent");
        let mut groups: HashMap<Monomial, Vec<(i32, &BigInt)>> = HashMap::new();
        for (m, c) in &self.terms {
            groups.entry(m.without(v)).or_default().push((m.exp(v), c));
        }
        let mut out = HashMap::with_capacity(self.terms.len());
        for (rest, mut col) in groups {
            col.sort_unstable_by_key(|(k, _)| *k);
            let lo = col[0].0;
            let hi = col[col.len() - 1].0;
            if hi - lo < e {
                return None;
            }
            let width = (hi - lo + 1) as usize;
            let e = e as usize;
            // Peel the top term: c*v^k = c*v^{k-e}*(v^e - 1) + c*v^{k-e}.
            // Quotient coefficients are partial sums, bounded by width * max|c|.
            let bits = col.iter().map(|(_, c)| c.bits()).max().unwrap_or(0);
            if bits + 64 - (width as u64).leading_zeros() as u64 <= 120 {
                let mut dense = vec![0i128; width];
                for (k, c) in col {
                    dense[(k - lo) as usize] += c.to_i128().expect("bounded");
                }
                for idx in (e..width).rev() {
                    let c = std::mem::take(&mut dense[idx]);
                    if c == 0 {
                        continue;
                    }
                    dense[idx - e] += c;
                    let key = rest.mul(&Monomial::var(v, lo + (idx - e) as i32));
                    out.insert(key, BigInt::from(c));
                }
                if dense[..e].iter().any(|c| *c != 0) {
                    return None;
                }
                continue;
            }
            let mut dense = vec![BigInt::zero(); width];
            for (k, c) in col {
                dense[(k - lo) as usize] += c;
            }
            for idx in (e..width).rev() {
                if dense[idx].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut dense[idx]);
                dense[idx - e] += &c;
                let key = rest.mul(&Monomial::var(v, lo + (idx - e) as i32));
                out.insert(key, c);
            }
            if dense[..e].iter().any(|c| !c.is_zero()) {
                return None;
            }
        }
        Some(Self::from_hash(out))
    }

    /// Exact division by `{m}_q = q^m - q^{-m}` (`m != 0`).
    pub fn div_qbrace(&self, m: i32) -> Option<LaurentPoly> {
        assert!(m != 0, "{{0}}_q is zero");
        // q^m - q^-m = q^-m (q^{2m} - 1)
        let quotient = self.div_binomial(Var::Q, 2 * m.abs())?;
        let shifted = quotient.mul_monomial(&Monomial::var(Var::Q, m.abs()));
        Some(if m < 0 { -shifted } else { shifted })
    }

    /// `p(v^{-1}) == p`
    pub fn is_symmetric_in(&self, v: Var) -> bool {
        self.invert_var(v) == *self
    }

    /// `p(v^{-1}) == -p`
    pub fn is_skew_in(&self, v: Var) -> bool {
        self.invert_var(v) == -self
    }

    fn merge(&self, other: &LaurentPoly, negate_other: bool) -> LaurentPoly {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other {
                        -&b[j].1
                    } else {
                        b[j].1.clone()
                    };
                    terms.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        terms.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            terms.push((*m, if negate_other { -c } else { c.clone() }));
        }
        LaurentPoly { terms }
    }

    fn mul_impl(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if let Some((m, c)) = small.single_term() {
            let mut out = big.mul_monomial(m);
            if !c.is_one() {
                for t in out.terms.iter_mut() {
                    t.1 *= c;
                }
            }
            return out;
        }
        mul_grouped(small, big)
    }

    /// Largest absolute coefficient (0 for the zero polynomial).
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for t in self.terms.iter_mut() {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.merge(b, false));
forward_binop!(Sub, sub, |a, b| a.merge(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, true);
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}

/// Terms sharing the same non-`q` part, as `(rest, [(q_exp, coeff)])`.
fn group_by_q(p: &LaurentPoly) -> Vec<(Monomial, Vec<(i32, &BigInt)>)> {
    let mut groups: HashMap<Monomial, Vec<(i32, &BigInt)>> = HashMap::new();
    for (m, c) in &p.terms {
        groups
            .entry(m.without(Var::Q))
            .or_default()
            .push((m.exp(Var::Q), c));
    }
    groups.into_iter().collect()
}

/// Product by pairing groups with equal non-`q` parts and convolving densely in `q`.
/// Accumulates in `i128` when the coefficient bound allows it.
fn mul_grouped(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ga = group_by_q(a);
    let gb = group_by_q(b);
    let span = |g: &[(i32, &BigInt)]| {
        let lo = g.iter().map(|t| t.0).min().unwrap();
        let hi = g.iter().map(|t| t.0).max().unwrap();
        (lo, hi)
    };
    let sa: Vec<(i32, i32)> = ga.iter().map(|(_, g)| span(g)).collect();
    let sb: Vec<(i32, i32)> = gb.iter().map(|(_, g)| span(g)).collect();
    let mut ranges: HashMap<Monomial, (i32, i32)> = HashMap::new();
    for (x, (ra, _)) in ga.iter().enumerate() {
        for (y, (rb, _)) in gb.iter().enumerate() {
            let lo = sa[x].0 + sb[y].0;
            let hi = sa[x].1 + sb[y].1;
            let e = ranges.entry(ra.mul(rb)).or_insert((lo, hi));
            e.0 = e.0.min(lo);
            e.1 = e.1.max(hi);
        }
    }
    let bound = |p: &LaurentPoly| p.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0);
    let small_ints =
        bound(a) + bound(b) + 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64 <= 120;
    let mut out: Vec<(Monomial, BigInt)> = Vec::new();
    if small_ints {
        let to_i = |g: &[(i32, &BigInt)]| -> Vec<(i32, i128)> {
            g.iter()
                .map(|(e, c)| (*e, c.to_i128().expect("bounded")))
                .collect()
        };
        let ia: Vec<Vec<(i32, i128)>> = ga.iter().map(|(_, g)| to_i(g)).collect();
        let ib: Vec<Vec<(i32, i128)>> = gb.iter().map(|(_, g)| to_i(g)).collect();
        let mut acc: HashMap<Monomial, Vec<i128>> = ranges
            .iter()
            .map(|(m, (lo, hi))| (*m, vec![0i128; (hi - lo + 1) as usize]))
            .collect();
        for (x, (ra, _)) in ga.iter().enumerate() {
            for (y, (rb, _)) in gb.iter().enumerate() {
                let rest = ra.mul(rb);
                let lo = ranges[&rest].0;
                let dense = acc.get_mut(&rest).unwrap();
                for &(ea, ca) in &ia[x] {
                    for &(eb, cb) in &ib[y] {
                        dense[(ea + eb - lo) as usize] += ca * cb;
                    }
                }
            }
        }
        for (rest, dense) in acc {
            let lo = ranges[&rest].0;
            for (k, c) in dense.into_iter().enumerate() {
                if c != 0 {
                    out.push((
                        rest.mul(&Monomial::var(Var::Q, lo + k as i32)),
                        BigInt::from(c),
                    ));
                }
            }
        }
    } else {
        let mut acc: HashMap<Monomial, Vec<BigInt>> = ranges
            .iter()
            .map(|(m, (lo, hi))| (*m, vec![BigInt::zero(); (hi - lo + 1) as usize]))
            .collect();
        for (ra, ta) in &ga {
            for (rb, tb) in &gb {
                let rest = ra.mul(rb);
                let lo = ranges[&rest].0;
                let dense = acc.get_mut(&rest).unwrap();
                for &(ea, ca) in ta {
                    for &(eb, cb) in tb {
                        dense[(ea + eb - lo) as usize] += ca * cb;
                    }
                }
            }
        }
        for (rest, dense) in acc {
            let lo = ranges[&rest].0;
            for (k, c) in dense.into_iter().enumerate() {
                if !c.is_zero() {
                    out.push((rest.mul(&Monomial::var(Var::Q, lo + k as i32)), c));
                }
            }
        }
    }
    out.sort_unstable_by_key(|x| x.0);
    LaurentPoly { terms: out }
}
