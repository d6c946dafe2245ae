use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Monomial, TruncatedSeries, Var};
use crate::params::HeckeParams;
use crate::qcombo::{alpha, qint};

use super::series::{b_entry, gamma_const, lambda_gamma};

/// Largest `i` for which the determinant route is offered.
pub const DET_MAX_I: usize = 3;

/// The `2i × 2i` matrix `B_{2i}` with entries Laurent in `λ`.
#[derive(Clone, Debug)]
pub struct BMatrix {
    pub i: usize,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl BMatrix {
    pub fn new(i: usize, params: &HeckeParams) -> Result<Self> {
        let size = 2 * i;
        let mut entries = vec![vec![LaurentPoly::zero(); size]; size];
        for k in 1..=i {
            entries[0][2 * k - 1] = alpha(i as i32, k as i32)?;
        }
        let lam = |e: i32| LaurentPoly::var_pow(Var::Lambda, e);
        for n in 1..size {
            let row = &mut entries[n];
            row[0] = qint(n as u32, 2);
            for m in 1..n {
                row[m] = b_entry(n as i32, m as i32, params);
            }
            row[n] = gamma_const(n as i32, params) - lam(1) - lam(-1);
        }
        Ok(Self { i, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Determinant by expansion over column subsets.
    pub fn det(&self) -> LaurentPoly {
        let size = self.size();
        let mut layer: HashMap<u32, LaurentPoly> = HashMap::from([(0, LaurentPoly::one())]);
        for r in 0..size {
            let mut next: HashMap<u32, LaurentPoly> = HashMap::new();
            for (mask, acc) in &layer {
                for c in 0..size {
                    let entry = &self.entries[r][c];
                    if mask & (1 << c) != 0 || entry.is_zero() {
                        continue;
                    }
                    let inversions = (mask >> (c + 1)).count_ones();
                    let term = acc * entry;
                    let slot = next
                        .entry(mask | (1 << c))
                        .or_insert_with(LaurentPoly::zero);
                    if inversions % 2 == 0 {
                        *slot += &term;
                    } else {
                        *slot -= &term;
                    }
                }
            }
            layer = next;
        }
        layer
            .remove(&((1u32 << size) - 1))
            .unwrap_or_else(LaurentPoly::zero)
    }
}

/// `det(B_{2i}) / ∏_{N=1}^{2i-1} γ_N` as a series in `λ`, for `i <= 3`.
pub fn tildec_det(i: usize, order: usize, params: &HeckeParams) -> Result<TruncatedSeries> {
    if i == 0 || i > DET_MAX_I {
        return Err(Error::RouteUnavailable {
            route: "det",
            reason: format!("determinant route supports 1 <= i <= {DET_MAX_I}, got i={i}"),
        });
    }
    let b = BMatrix::new(i, params)?;
    // clear λ^{-1}: multiply numerator and each γ_N by λ
    let num = b
        .det()
        .mul_monomial(&Monomial::var(Var::Lambda, 2 * i as i32 - 1));
    let num = TruncatedSeries::from_poly_in(&num, Var::Lambda, order)?;
    let mut den = TruncatedSeries::one(order);
    for n in 1..2 * i as i32 {
        den = den.mul(&lambda_gamma(n, params, order));
    }
    Ok(num.mul(&den.invert()?).reduce())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::series::tildec_series;
    use crate::exactalg::QFraction;

    #[test]
    fn i1_determinant() {
        let p = HeckeParams::formal();
        let b = BMatrix::new(1, &p).unwrap();
        assert_eq!(b.det(), LaurentPoly::constant(-1));
        // -1/γ_1 = λ / (1 - cλ + λ^2)
        let s = tildec_det(1, 3, &p).unwrap();
        let c = gamma_const(1, &p);
        assert!(s.coeff(0).is_zero());
        assert!(s.coeff(1) == &QFraction::one());
        assert!(s.coeff(2) == &QFraction::from_poly(c.clone()));
        assert!(s.coeff(3) == &QFraction::from_poly(c.pow(2) - LaurentPoly::one()));
    }

    #[test]
    fn det_matches_series() {
        let p = HeckeParams::formal();
        for i in 1..=2 {
            let a = tildec_det(i, 5, &p).unwrap();
            let b = tildec_series(i, 5, &p).unwrap();
            assert!(a.agrees_with(&b), "i={i}");
        }
    }

    #[test]
    fn det_route_capped() {
        assert!(matches!(
            tildec_det(4, 4, &HeckeParams::formal()),
            Err(Error::RouteUnavailable { .. })
        ));
    }
}
