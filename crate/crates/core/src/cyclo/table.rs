use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, QFraction};
use crate::params::HeckeParams;
use crate::qcombo::cyclotomic_braces;

use super::a_coef;

/// Triangular table of `a_{n,p}`, `1 <= p <= n <= nmax`.
#[derive(Clone, Debug)]
pub struct ATable {
    params: HeckeParams,
    /// `rows[n][p]` for `0 <= p <= n`; row 0 and column 0 are zero.
    rows: Vec<Vec<QFraction>>,
}

impl ATable {
    /// Fill rows from `a_{1,1} = 1` with
    /// `a_{n+1,p} = A_p a_{n,p-1} + (A_p - A_{p+1}) a_{n,p} + A_{-p} a_{n,p+1} - a_{n-1,p}`.
    pub fn build(nmax: usize, params: &HeckeParams) -> Self {
        assert!(nmax >= 1, "ATable needs nmax >= 1");
        let mut table = Self {
            params: *params,
            rows: vec![
                vec![QFraction::zero()],
                vec![QFraction::zero(), QFraction::one()],
            ],
        };
        let top = nmax as i32 + 2;
        let coefs: Vec<QFraction> = (-top..=top).map(|p| a_coef(p, params)).collect();
        let a = |p: i32| &coefs[(p + top) as usize];
        for n in 1..nmax {
            let row: Vec<QFraction> = (0..=n as i32 + 1)
                .map(|p| {
                    if p == 0 {
                        return QFraction::zero();
                    }
                    let terms = [
                        a(p) * &table.get(n, p - 1),
                        &(a(p) - a(p + 1)) * &table.get(n, p),
                        a(-p) * &table.get(n, p + 1),
                        -table.get(n - 1, p),
                    ];
                    terms.into_iter().sum::<QFraction>().reduce()
                })
                .collect();
            table.rows.push(row);
        }
        table
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn params(&self) -> &HeckeParams {
        &self.params
    }

    /// `a_{n,p}` with `a_{n,-p} = -a_{n,p}`, `a_{n,0} = 0` and zero for `|p| > n`.
    pub fn get(&self, n: usize, p: i32) -> QFraction {
        let row = &self.rows[n];
        match row.get(p.unsigned_abs() as usize) {
            None => QFraction::zero(),
            Some(v) if p < 0 => -v,
            Some(v) => v.clone(),
        }
    }

    pub fn row(&self, n: usize) -> &[QFraction] {
        &self.rows[n]
    }

    /// `ĉ_{n,i-1} = Σ_p (-1)^{n+p} a_{n,p} c_{p,i-1}`, reduced to a Laurent polynomial.
    pub fn tildec_sum(&self, n: usize, i: usize) -> Result<LaurentPoly> {
        check_index(n, i, self.nmax())?;
        if i > n {
            return Ok(LaurentPoly::zero());
        }
        let sum: QFraction = (i..=n)
            .map(|p| {
                let term = self.rows[n][p]
                    .clone()
                    .div_brace(2)
                    .mul_braces(cyclotomic_braces(p as i32, i as i32))
                    .reduce();
                if (n + p).is_multiple_of(2) {
                    term
                } else {
                    -term
                }
            })
            .sum();
        integral(sum, n, i)
    }
}

pub(super) fn check_index(n: usize, i: usize, nmax: usize) -> Result<()> {
    if n < 1 || i < 1 {
        return Err(Error::Index(format!(
            "need n >= 1 and i >= 1, got n={n}, i={i}"
        )));
    }
    if n > nmax {
        return Err(Error::Index(format!("n={n} exceeds table size {nmax}")));
    }
    Ok(())
}

pub(super) fn integral(f: QFraction, n: usize, i: usize) -> Result<LaurentPoly> {
    let r = f.reduce();
    r.to_poly().ok_or_else(|| {
        Error::IntegralityViolation(format!(
            "generalized coefficient (n={n}, i={i}) keeps denominator {:?}",
            r.den_factors()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::oracle_a_rows;
    use crate::qcombo::cyclotomic_c;

    #[test]
    fn boundary_rows() {
        let p = HeckeParams::formal();
        let t = ATable::build(5, &p);
        assert!(t.get(1, 1) == QFraction::one());
        for n in 1..=5 {
            assert!(t.get(n, 0).is_zero());
            assert!(t.get(n, n as i32 + 1).is_zero());
            // a_{n,n} = A_2 ... A_n
            let diag: QFraction =
                (2..=n as i32).fold(QFraction::one(), |acc, k| &acc * &a_coef(k, &p));
            assert!(t.get(n, n as i32) == diag, "n={n}");
        }
        // a_{n,n-1} = A_2 ... A_{n-1} (A_1 - A_n)
        for n in 2..=5 {
            let lead: QFraction =
                (2..n as i32).fold(QFraction::one(), |acc, k| &acc * &a_coef(k, &p));
            let expect = &lead * &(&a_coef(1, &p) - &a_coef(n as i32, &p));
            assert!(t.get(n, n as i32 - 1) == expect, "n={n}");
        }
    }

    #[test]
    fn matches_operator_oracle() {
        let p = HeckeParams::formal();
        let t = ATable::build(5, &p);
        let oracle = oracle_a_rows(5, &p).unwrap();
        for n in 1..=5 {
            assert_eq!(t.row(n), oracle[n].as_slice(), "n={n}");
        }
    }

    #[test]
    fn classical_collapse() {
        let t = ATable::build(6, &HeckeParams::classical());
        for n in 1..=6 {
            for i in 1..=n {
                assert_eq!(
                    t.tildec_sum(n, i).unwrap(),
                    cyclotomic_c(n as i32, i as i32).unwrap()
                );
            }
        }
    }

    #[test]
    fn top_coefficient() {
        let p = HeckeParams::formal();
        let t = ATable::build(4, &p);
        for n in 1..=4 {
            let prod = (2..=n as i32).fold(QFraction::one(), |acc, k| &acc * &a_coef(k, &p));
            let expect = prod.mul_poly(&cyclotomic_c(n as i32, n as i32).unwrap());
            assert!(QFraction::from_poly(t.tildec_sum(n, n).unwrap()) == expect);
        }
    }

    #[test]
    fn vanishing_and_index_errors() {
        let t = ATable::build(3, &HeckeParams::formal());
        assert!(t.tildec_sum(2, 3).unwrap().is_zero());
        assert!(matches!(t.tildec_sum(4, 1), Err(Error::Index(_))));
        assert!(matches!(t.tildec_sum(2, 0), Err(Error::Index(_))));
    }
}
