use super::monomial::Var;
use super::poly::LaurentPoly;
use super::qfrac::QFraction;
use crate::error::{Error, Result};

/// Power series in one variable, truncated after `order`, with
/// [`QFraction`] coefficients. `coeffs[k]` multiplies the k-th power.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<QFraction>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![QFraction::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(QFraction::one(), order)
    }

    pub fn constant(c: QFraction, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads or truncates `coeffs` to length `order + 1`.
    pub fn from_coeffs(mut coeffs: Vec<QFraction>, order: usize) -> Self {
        coeffs.resize(order + 1, QFraction::zero());
        Self { order, coeffs }
    }

    /// Read a polynomial in `var` (nonnegative powers only) as a series.
    pub fn from_poly_in(p: &LaurentPoly, var: Var, order: usize) -> Result<Self> {
        let mut s = Self::zero(order);
        for (e, c) in p.split_by(var) {
            if e < 0 {
                return Err(Error::NegativeSeriesPower {
                    var: var.name(),
                    exp: e,
                });
            }
            if (e as usize) <= order {
                s.coeffs[e as usize] = QFraction::from_poly(c);
            }
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[QFraction] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &QFraction {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<F: Fn(&QFraction) -> QFraction>(&self, f: F) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn reduce(&self) -> Self {
        self.map(QFraction::reduce)
    }

    pub fn scale(&self, c: &QFraction) -> Self {
        self.map(|a| a * c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self {
            order,
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self {
            order,
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k)
                    .filter(|&j| !self.coeffs[j].is_zero() && !other.coeffs[k - j].is_zero())
                    .map(|j| &self.coeffs[j] * &other.coeffs[k - j])
                    .sum::<QFraction>()
                    .reduce()
            })
            .collect();
        Self { order, coeffs }
    }

    /// Multiplicative inverse; the constant term must be a unit `±w / ∏{m}`.
    pub fn invert(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonUnitConstantTerm)?;
        let mut out: Vec<QFraction> = Vec::with_capacity(self.order + 1);
        out.push(c0_inv.clone());
        for k in 1..=self.order {
            let acc: QFraction = (1..=k)
                .filter(|&j| !self.coeffs[j].is_zero() && !out[k - j].is_zero())
                .map(|j| &self.coeffs[j] * &out[k - j])
                .sum();
            out.push((-(&acc * &c0_inv)).reduce());
        }
        Ok(Self {
            order: self.order,
            coeffs: out,
        })
    }

    /// Coefficientwise value equality on the common truncation range.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        (0..=order).all(|k| self.coeffs[k] == other.coeffs[k])
    }
}
