//! Named self-checks exposed through `genjones verify`. Each check fails fast
//! with its identifier.

use crate::cyclo::{tildec_det, tildec_series, tildec_t2one, ATable, Route, DET_MAX_I};
use crate::daha::{
    eval_z_closed, hecke_defect, oracle_a_rows, HeckeGen, Representation, UModuleElem,
};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Monomial, QFraction, SignedMonomial, Var};
use crate::knots::{classical_jones, generalized_jones, sigma_trace, universal_eval, KnotRecord};
use crate::macdonald::{mac_genfun_check, mac_p_table, rogers_c, rogers_from_recurrence};
use crate::params::{HeckeParams, Param};
use crate::qcombo::{alpha, cyclotomic_c, p_poly};

type CheckFn = fn(Option<usize>) -> Result<()>;

/// Registered checks in execution order.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("integrality", check_integrality),
    ("classical", check_classical),
    ("routes.series", check_routes_series),
    ("routes.det", check_routes_det),
    ("routes.macdonald", check_routes_macdonald),
    ("oracle", check_oracle),
    ("unknot", check_unknot),
    ("figure-eight", check_figure_eight),
    ("z-eval", check_z_eval),
    ("hecke", check_hecke),
    ("macdonald", check_macdonald),
    ("trace", check_trace),
    ("alpha-p", check_alpha_p),
    ("universal", check_universal),
];

/// Suite names accepted by [`run_suite`]: `all`, `routes`, or a single check id.
pub fn suite_names() -> Vec<&'static str> {
    let mut names = vec!["all", "routes"];
    names.extend(CHECKS.iter().map(|(id, _)| *id));
    names
}

/// Run every check of `suite`, stopping at the first failure.
/// Returns the identifiers that passed.
pub fn run_suite(suite: &str, nmax: Option<usize>) -> Result<Vec<&'static str>> {
    let selected: Vec<&(&str, CheckFn)> = match suite {
        "all" => CHECKS.iter().collect(),
        "routes" => CHECKS
            .iter()
            .filter(|(id, _)| id.starts_with("routes."))
            .collect(),
        name => CHECKS.iter().filter(|(id, _)| *id == name).collect(),
    };
    if selected.is_empty() {
        return Err(Error::Validation(format!(
            "unknown suite {suite:?}; expected one of {}",
            suite_names().join(", ")
        )));
    }
    let mut passed = Vec::new();
    for (id, check) in selected {
        check(nmax).map_err(|e| match e {
            Error::CheckFailed { .. } => e,
            other => fail(id, other.to_string()),
        })?;
        passed.push(*id);
    }
    Ok(passed)
}

fn fail(id: &str, detail: impl Into<String>) -> Error {
    Error::CheckFailed {
        id: id.to_string(),
        detail: detail.into(),
    }
}

fn ensure(id: &str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(id, detail()))
    }
}

fn t2_one() -> HeckeParams {
    HeckeParams::new(Param::Formal, Param::One)
}

fn check_integrality(nmax: Option<usize>) -> Result<()> {
    let n_top = nmax.unwrap_or(10);
    let table = ATable::build(n_top, &HeckeParams::formal());
    for n in 1..=n_top {
        for i in 1..=n {
            table
                .tildec_sum(n, i)
                .map_err(|e| fail("integrality", format!("n={n} i={i}: {e}")))?;
        }
    }
    Ok(())
}

fn check_classical(nmax: Option<usize>) -> Result<()> {
    let n_top = nmax.unwrap_or(10);
    let table = ATable::build(n_top, &HeckeParams::classical());
    for n in 1..=n_top {
        for i in 1..=n {
            let ok = table.tildec_sum(n, i)? == cyclotomic_c(n as i32, i as i32)?;
            ensure("classical", ok, || format!("n={n} i={i}"))?;
        }
    }
    Ok(())
}

fn check_routes_series(nmax: Option<usize>) -> Result<()> {
    let n_top = nmax.unwrap_or(8);
    let p = HeckeParams::formal();
    let table = ATable::build(n_top, &p);
    for i in 1..=n_top.min(4) {
        let s = tildec_series(i, n_top, &p)?;
        for n in 1..=n_top {
            let ok = s.coeff(n) == &QFraction::from_poly(table.tildec_sum(n, i)?);
            ensure("routes.series", ok, || format!("n={n} i={i}"))?;
        }
    }
    Ok(())
}

fn check_routes_det(nmax: Option<usize>) -> Result<()> {
    let order = nmax.unwrap_or(8);
    let p = HeckeParams::formal();
    for i in 1..=DET_MAX_I {
        let d = tildec_det(i, order, &p)?;
        let s = tildec_series(i, order, &p)?;
        ensure("routes.det", d.agrees_with(&s), || {
            format!("i={i} order={order}")
        })?;
    }
    Ok(())
}

fn check_routes_macdonald(nmax: Option<usize>) -> Result<()> {
    let n_top = nmax.unwrap_or(8);
    let p = t2_one();
    let table = ATable::build(n_top, &p);
    for n in 1..=n_top {
        for i in 1..=n {
            let ok = tildec_t2one(n, i, &p)? == table.tildec_sum(n, i)?;
            ensure("routes.macdonald", ok, || format!("n={n} i={i}"))?;
        }
    }
    Ok(())
}

fn check_oracle(nmax: Option<usize>) -> Result<()> {
    let n_top = nmax.unwrap_or(10);
    let p = HeckeParams::formal();
    let table = ATable::build(n_top, &p);
    let oracle = oracle_a_rows(n_top, &p)?;
    for n in 1..=n_top {
        ensure("oracle", table.row(n) == oracle[n].as_slice(), || {
            format!("row n={n}")
        })?;
    }
    Ok(())
}

/// `[n]` in the variable `y = q^2 t1^{-1}`.
fn unknot_closed_form(n: usize) -> LaurentPoly {
    let y = SignedMonomial::pos(Monomial::from_pairs(&[(Var::Q, 2), (Var::T1, -1)]));
    (0..n as i32)
        .map(|j| LaurentPoly::var_pow(Var::X, n as i32 - 1 - 2 * j))
        .sum::<LaurentPoly>()
        .substitute(Var::X, &y)
}

fn check_unknot(nmax: Option<usize>) -> Result<()> {
    let p = t2_one();
    for n in 1..=nmax.unwrap_or(10) {
        let got = generalized_jones(&KnotRecord::unknot(), n, &p, Route::Sum)?;
        ensure("unknot", got == unknot_closed_form(n), || format!("n={n}"))?;
    }
    Ok(())
}

fn check_figure_eight(nmax: Option<usize>) -> Result<()> {
    let k = KnotRecord::figure_eight();
    for n in 1..=nmax.unwrap_or(8) {
        let got = generalized_jones(&k, n, &HeckeParams::classical(), Route::Sum)?;
        let expect: LaurentPoly = (1..=n as i32)
            .map(|i| cyclotomic_c(n as i32, i))
            .sum::<Result<LaurentPoly>>()?;
        ensure("figure-eight", got == expect, || format!("n={n}"))?;
    }
    Ok(())
}

fn check_z_eval(nmax: Option<usize>) -> Result<()> {
    let p = HeckeParams::formal();
    let n_top = nmax.unwrap_or(5).min(5) as i32;
    for k in -6..=6 {
        let f = UModuleElem::u_pow(k);
        let direct = f.act_z(&p);
        for n in 1..=n_top {
            let ok = eval_z_closed(&f, n, &p) == direct.eval_at(n);
            ensure("z-eval", ok, || format!("k={k} N={n}"))?;
        }
    }
    Ok(())
}

fn check_hecke(nmax: Option<usize>) -> Result<()> {
    let p = HeckeParams::all_formal();
    let top = nmax.unwrap_or(8) as i32;
    for n in -top..=top {
        for g in [HeckeGen::T1, HeckeGen::T3] {
            let d = hecke_defect(n, g, &p, Representation::Polynomial)?;
            ensure("hecke", d.is_zero(), || format!("{g:?} on X^{n}"))?;
        }
    }
    Ok(())
}

fn check_macdonald(nmax: Option<usize>) -> Result<()> {
    let n_top = nmax.unwrap_or(8);
    for i in 1..=4 {
        for n in 0..=n_top {
            let ok = rogers_from_recurrence(n, i)? == rogers_c(n, i).value;
            ensure("macdonald", ok, || {
                format!("recurrence vs explicit n={n} i={i}")
            })?;
        }
        ensure("macdonald", mac_genfun_check(i, n_top), || {
            format!("generating series i={i}")
        })?;
    }
    let schur_top = n_top.max(10);
    let table = mac_p_table(schur_top, 4, 4)?;
    let x = |e: i32| LaurentPoly::var_pow(Var::SmallX, e);
    for n in 1..=schur_top {
        let lhs = table[n - 1].value.mul_poly(&(x(1) - x(-1)));
        let ok = lhs == QFraction::from_poly(x(n as i32) - x(-(n as i32)));
        ensure("macdonald", ok, || format!("Schur collapse n={n}"))?;
    }
    Ok(())
}

fn check_trace(nmax: Option<usize>) -> Result<()> {
    for n in 1..=nmax.unwrap_or(10) {
        for k in 0..n + 2 {
            let expect = if k < n {
                cyclotomic_c(n as i32, k as i32 + 1)?
            } else {
                LaurentPoly::zero()
            };
            ensure("trace", sigma_trace(k, n) == expect, || {
                format!("k={k} n={n}")
            })?;
        }
    }
    Ok(())
}

fn check_alpha_p(nmax: Option<usize>) -> Result<()> {
    let x = |e: i32| LaurentPoly::var_pow(Var::X, e);
    for i in 1..=nmax.unwrap_or(6) as i32 {
        let lhs = &(x(1) - x(-1)) * &p_poly(i);
        let mut rhs = LaurentPoly::zero();
        for k in 1..=i {
            rhs += &(&alpha(i, k)? * &(x(2 * k - 1) - x(1 - 2 * k)));
        }
        ensure("alpha-p", lhs == rhs, || format!("i={i}"))?;
    }
    Ok(())
}

fn check_universal(nmax: Option<usize>) -> Result<()> {
    let p = HeckeParams::formal();
    for k in KnotRecord::builtins() {
        for n in 1..=nmax.unwrap_or(8) {
            let ok = universal_eval(&k, n, &p)? == generalized_jones(&k, n, &p, Route::Sum)?;
            ensure("universal", ok, || format!("{} n={n}", k.name))?;
            let classical = universal_eval(&k, n, &HeckeParams::classical())?;
            ensure("universal", classical == classical_jones(&k, n)?, || {
                format!("{} classical n={n}", k.name)
            })?;
        }
    }
    Ok(())
}
