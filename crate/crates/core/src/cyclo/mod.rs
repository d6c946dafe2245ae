//! The `a_{n,p}` recurrence and the generalized cyclotomic coefficients
//! `ĉ_{n,i-1}(q, t1, t2)` by four independent routes.

mod det;
mod series;
mod table;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::{qpow, LaurentPoly, Monomial, QFraction, SignedMonomial, Var};
use crate::macdonald::rogers_c;
use crate::params::{HeckeParams, Param};
use crate::qcombo::cyclotomic_c;

pub use det::{tildec_det, BMatrix, DET_MAX_I};
pub use series::{b_entry, gamma_const, solve_f, tildec_series, tildec_t2one_series};
pub use table::ATable;

/// `A_p = (q^{2p-1} t1^{-1} - q^{1-2p} t1 + t̄2) / {2p-1}`
pub fn a_coef(p: i32, params: &HeckeParams) -> QFraction {
    let num =
        &qpow(2 * p - 1) * &params.t_inv(1) - &qpow(1 - 2 * p) * &params.t(1) + params.tbar(2);
    QFraction::new(num, [2 * p - 1]).reduce()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// `Σ_p (-1)^{n+p} a_{n,p} c_{p,i-1}` over the recurrence table.
    Sum,
    /// λ-series solution of the triangular system.
    Series,
    /// Determinant of `B_{2i}`, `i <= 3`.
    Det,
    /// Rogers polynomial closed form, `t2 = 1` only.
    Macdonald,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Sum, Route::Series, Route::Det, Route::Macdonald];

    pub fn name(self) -> &'static str {
        match self {
            Route::Sum => "sum",
            Route::Series => "series",
            Route::Det => "det",
            Route::Macdonald => "macdonald",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown route {s:?}")))
    }
}

fn require_t2_one(params: &HeckeParams) -> Result<()> {
    if params.t2 != Param::One {
        return Err(Error::RouteUnavailable {
            route: "macdonald",
            reason: "the Rogers closed form needs t2 = 1".into(),
        });
    }
    Ok(())
}

/// `ĉ_{n,i-1}` at `t2 = 1` as
/// `c_{i,i-1} q^{-2(n-i)(i-1)} C_{n-i}(q^{2i} t1^{-1}; q^{4i} | q^4) ∏_{k=2}^i A_k`.
pub fn tildec_t2one(n: usize, i: usize, params: &HeckeParams) -> Result<LaurentPoly> {
    require_t2_one(params)?;
    table::check_index(n, i, usize::MAX)?;
    if i > n {
        return Ok(LaurentPoly::zero());
    }
    let (n_i, i_i) = (n as i32, i as i32);
    let mut x_image = Monomial::var(Var::Q, 2 * i_i);
    if params.t1 == Param::Formal {
        x_image = x_image.mul(&Monomial::var(Var::T1, -1));
    }
    let rogers = rogers_c(n - i, i)
        .value
        .substitute(Var::SmallX, &SignedMonomial::pos(x_image));
    let mut out = rogers
        .mul_poly(&cyclotomic_c(i_i, i_i)?)
        .mul_monomial(&Monomial::var(Var::Q, -2 * (n_i - i_i) * (i_i - 1)));
    for k in 2..=i_i {
        out = &out * &a_coef(k, params);
    }
    table::integral(out, n, i)
}

/// One coefficient `ĉ_{n,i-1}` by the chosen route.
pub fn tildec(n: usize, i: usize, params: &HeckeParams, route: Route) -> Result<LaurentPoly> {
    table::check_index(n, i, usize::MAX)?;
    match route {
        Route::Sum => ATable::build(n, params).tildec_sum(n, i),
        Route::Series => series_coeff(&tildec_series(i, n, params)?, n, i),
        Route::Det => series_coeff(&tildec_det(i, n, params)?, n, i),
        Route::Macdonald => tildec_t2one(n, i, params),
    }
}

fn series_coeff(s: &crate::exactalg::TruncatedSeries, n: usize, i: usize) -> Result<LaurentPoly> {
    table::integral(s.coeff(n).clone(), n, i)
}

/// Classical and generalized coefficients for `1 <= i <= n <= nmax`.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    pub nmax: usize,
    pub route: Route,
    pub params: HeckeParams,
    classical: Vec<Vec<LaurentPoly>>,
    generalized: Vec<Vec<LaurentPoly>>,
}

impl CoeffTable {
    pub fn build(nmax: usize, params: &HeckeParams, route: Route) -> Result<Self> {
        if nmax == 0 {
            return Err(Error::Index("coefficient table needs nmax >= 1".into()));
        }
        if route == Route::Det && nmax > DET_MAX_I {
            return Err(Error::RouteUnavailable {
                route: "det",
                reason: format!(
                    "a full table needs i up to {nmax}, the determinant route stops at {DET_MAX_I}"
                ),
            });
        }
        if route == Route::Macdonald {
            require_t2_one(params)?;
        }
        let mut classical = vec![Vec::new()];
        let mut generalized = vec![Vec::new()];
        let a_table = (route == Route::Sum).then(|| ATable::build(nmax, params));
        let mut per_i = vec![None];
        for i in 1..=nmax {
            per_i.push(match route {
                Route::Series => Some(tildec_series(i, nmax, params)?),
                Route::Det => Some(tildec_det(i, nmax, params)?),
                _ => None,
            });
        }
        for n in 1..=nmax {
            let mut c_row = vec![LaurentPoly::zero()];
            let mut g_row = vec![LaurentPoly::zero()];
            for i in 1..=n {
                c_row.push(cyclotomic_c(n as i32, i as i32)?);
                g_row.push(match (route, &a_table, &per_i[i]) {
                    (Route::Sum, Some(t), _) => t.tildec_sum(n, i)?,
                    (Route::Macdonald, _, _) => tildec_t2one(n, i, params)?,
                    (_, _, Some(s)) => series_coeff(s, n, i)?,
                    _ => unreachable!("route data prepared above"),
                });
            }
            classical.push(c_row);
            generalized.push(g_row);
        }
        Ok(Self {
            nmax,
            route,
            params: *params,
            classical,
            generalized,
        })
    }

    pub fn classical(&self, n: usize, i: usize) -> &LaurentPoly {
        &self.classical[n][i]
    }

    pub fn generalized(&self, n: usize, i: usize) -> &LaurentPoly {
        &self.generalized[n][i]
    }
}
