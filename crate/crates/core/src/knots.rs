//! Knot records given by Habiro polynomials, and assembly of classical and
//! generalized colored Jones polynomials from them.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Value;

use crate::cyclo::{tildec_det, tildec_series, tildec_t2one, ATable, Route, DET_MAX_I};
use crate::error::{Error, Result};
use crate::exactalg::{qpow, LaurentPoly, Monomial, QFraction, Var};
use crate::params::HeckeParams;
use crate::qcombo::{cyclotomic_c, qint};

/// The sequence `H_0, H_1, ...` of a knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Habiro {
    /// Listed terms, zero afterwards.
    FiniteSupport(Vec<LaurentPoly>),
    /// Listed terms only; later terms are unknown.
    Prefix(Vec<LaurentPoly>),
    /// `H_k = 1` for every `k`.
    AllOnes,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub habiro: Habiro,
}

#[derive(Deserialize)]
struct RawRecord {
    name: String,
    #[serde(default)]
    habiro: Vec<Vec<Vec<Value>>>,
    #[serde(default)]
    all_ones: bool,
}

fn parse_term(term: &[Value], k: usize) -> Result<(i32, BigInt)> {
    let bad = |what: &str| Error::KnotRecord(format!("H_{k}: {what}"));
    let [e, c] = term else {
        return Err(bad("each term must be [q_exponent, coefficient]"));
    };
    let e = e
        .as_i64()
        .and_then(|e| i32::try_from(e).ok())
        .ok_or_else(|| bad(&format!("exponent {e} is not an integer")))?;
    let c = match c {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string().parse::<BigInt>().unwrap(),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| bad(&format!("coefficient {s:?} is not an integer")))?,
        other => return Err(bad(&format!("coefficient {other} is not an integer"))),
    };
    Ok((e, c))
}

impl KnotRecord {
    pub fn unknot() -> Self {
        Self {
            name: "unknot".into(),
            habiro: Habiro::FiniteSupport(vec![LaurentPoly::one()]),
        }
    }

    pub fn figure_eight() -> Self {
        Self {
            name: "figure-eight".into(),
            habiro: Habiro::AllOnes,
        }
    }

    pub fn builtins() -> Vec<Self> {
        vec![Self::unknot(), Self::figure_eight()]
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "unknot" | "0_1" => Ok(Self::unknot()),
            "figure-eight" | "figure8" | "4_1" => Ok(Self::figure_eight()),
            other => Err(Error::UnknownKnot(other.to_string())),
        }
    }

    /// Parse `{"name": ..., "habiro": [[[q_exp, coeff], ...], ...], "all_ones": bool}`.
    /// Listed sequences are treated as prefixes.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawRecord =
            serde_json::from_str(text).map_err(|e| Error::KnotRecord(e.to_string()))?;
        if raw.all_ones {
            return Ok(Self {
                name: raw.name,
                habiro: Habiro::AllOnes,
            });
        }
        let mut polys = Vec::with_capacity(raw.habiro.len());
        for (k, terms) in raw.habiro.iter().enumerate() {
            let mut p = LaurentPoly::zero();
            for t in terms {
                let (e, c) = parse_term(t, k)?;
                p += &LaurentPoly::monomial(c, Monomial::var(Var::Q, e));
            }
            polys.push(p);
        }
        Ok(Self {
            name: raw.name,
            habiro: Habiro::Prefix(polys),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    /// `H_k`.
    pub fn habiro_poly(&self, k: usize) -> Result<LaurentPoly> {
        match &self.habiro {
            Habiro::AllOnes => Ok(LaurentPoly::one()),
            Habiro::FiniteSupport(v) => Ok(v.get(k).cloned().unwrap_or_default()),
            Habiro::Prefix(v) => v.get(k).cloned().ok_or_else(|| Error::MissingHabiro {
                knot: self.name.clone(),
                needed: k,
                available: v.len(),
            }),
        }
    }

    /// `H_0, ..., H_{n-1}`.
    pub fn habiro_upto(&self, n: usize) -> Result<Vec<LaurentPoly>> {
        (0..n).map(|k| self.habiro_poly(k)).collect()
    }
}

/// `J_n = Σ_{i=1}^n c_{n,i-1} H_{i-1}`; `J_0 = 0`.
pub fn classical_jones(knot: &KnotRecord, n: usize) -> Result<LaurentPoly> {
    let h = knot.habiro_upto(n)?;
    let mut out = LaurentPoly::zero();
    for (k, hk) in h.iter().enumerate().filter(|(_, hk)| !hk.is_zero()) {
        out += &(&cyclotomic_c(n as i32, k as i32 + 1)? * hk);
    }
    Ok(out)
}

/// `J_n(q, t1, t2) = Σ_{i=1}^n ĉ_{n,i-1} H_{i-1}` with coefficients from `route`.
pub fn generalized_jones(
    knot: &KnotRecord,
    n: usize,
    params: &HeckeParams,
    route: Route,
) -> Result<LaurentPoly> {
    let h = knot.habiro_upto(n)?;
    let needed: Vec<usize> = (1..=n).filter(|&i| !h[i - 1].is_zero()).collect();
    if route == Route::Det {
        if let Some(&i) = needed.iter().find(|&&i| i > DET_MAX_I) {
            return Err(Error::RouteUnavailable {
                route: "det",
                reason: format!(
                    "needs the coefficient for i={i}, the determinant route stops at {DET_MAX_I}"
                ),
            });
        }
    }
    let table = (route == Route::Sum && n > 0).then(|| ATable::build(n, params));
    let mut out = LaurentPoly::zero();
    for i in needed {
        let c = match route {
            Route::Sum => table.as_ref().expect("built for n > 0").tildec_sum(n, i)?,
            Route::Series => coeff_at(tildec_series(i, n, params)?.coeff(n), n, i)?,
            Route::Det => coeff_at(tildec_det(i, n, params)?.coeff(n), n, i)?,
            Route::Macdonald => tildec_t2one(n, i, params)?,
        };
        out += &(&c * &h[i - 1]);
    }
    Ok(out)
}

fn coeff_at(c: &QFraction, n: usize, i: usize) -> Result<LaurentPoly> {
    c.to_poly().ok_or_else(|| {
        Error::IntegralityViolation(format!("series coefficient (n={n}, i={i}) is not integral"))
    })
}

/// Formal combination `Σ_p coeffs[p]·[V_p]` of irreducible classes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RepClass {
    pub coeffs: BTreeMap<usize, QFraction>,
}

/// `[Ṽ_n] = Σ_p (-1)^{n+p} a_{n,p} [V_p]`.
pub fn tilde_v(n: usize, table: &ATable) -> Result<RepClass> {
    if n == 0 || n > table.nmax() {
        return Err(Error::Index(format!(
            "tilde_V needs 1 <= n <= {}, got {n}",
            table.nmax()
        )));
    }
    let coeffs = (1..=n)
        .filter_map(|p| {
            let a = table.get(n, p as i32);
            let c = if (n + p).is_multiple_of(2) { a } else { -a };
            (!c.is_zero()).then_some((p, c))
        })
        .collect();
    Ok(RepClass { coeffs })
}

/// Quantum trace of `σ_k` on `V_n`: `[n]_v ∏_{i=1}^k (χ_n^2 - (v^i + v^{-i})^2)`
/// with `v = q^2` and Casimir scalar `χ_n = v^n + v^{-n}`.
pub fn sigma_trace(k: usize, n: usize) -> LaurentPoly {
    let v = |e: i32| qpow(2 * e);
    let chi = v(n as i32) + v(-(n as i32));
    let chi_sq = &chi * &chi;
    (1..=k as i32).fold(qint(n as u32, 2), |acc, i| {
        let s = v(i) + v(-i);
        &acc * &(&chi_sq - &(&s * &s))
    })
}

/// `J_n(q, t1, t2)` as the pairing of `Σ_k H_k σ_k` with `[Ṽ_n]` through quantum traces.
pub fn universal_eval(knot: &KnotRecord, n: usize, params: &HeckeParams) -> Result<LaurentPoly> {
    if n == 0 {
        return Ok(LaurentPoly::zero());
    }
    let h = knot.habiro_upto(n)?;
    let class = tilde_v(n, &ATable::build(n, params))?;
    let mut total = QFraction::zero();
    for (&p, c) in &class.coeffs {
        let trace: LaurentPoly = h
            .iter()
            .enumerate()
            .take(p)
            .filter(|(_, hk)| !hk.is_zero())
            .map(|(k, hk)| &sigma_trace(k, p) * hk)
            .sum();
        total = &total + &c.mul_poly(&trace);
    }
    let r = total.reduce();
    r.to_poly().ok_or_else(|| {
        Error::IntegralityViolation(format!(
            "universal evaluation for {} at n={n} keeps denominator {:?}",
            knot.name,
            r.den_factors()
        ))
    })
}
