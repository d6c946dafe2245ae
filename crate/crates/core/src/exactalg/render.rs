//! Text, JSON and LaTeX renderings of polynomials and fractions.
//!
//! Text form: terms in canonical order joined by ` + ` / ` - `, each written
//! `c*q^a*t1^b*...` with zero exponents omitted, unit coefficients dropped and
//! exponent 1 written bare. The zero polynomial renders as `0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

use super::monomial::{Monomial, Var};
use super::poly::LaurentPoly;
use super::qfrac::QFraction;

fn mono_text(m: &Monomial) -> String {
    m.support()
        .map(|(v, e)| {
            if e == 1 {
                v.name().to_string()
            } else {
                format!("{}^{}", v.name(), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn term_text(m: &Monomial, c_abs: &BigInt) -> String {
    let mono = mono_text(m);
    match (mono.is_empty(), c_abs.is_one()) {
        (true, _) => c_abs.to_string(),
        (false, true) => mono,
        (false, false) => format!("{}*{}", c_abs, mono),
    }
}

pub fn poly_text(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let body = term_text(m, &c.abs());
        match (idx, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub fn frac_text(f: &QFraction) -> String {
    if f.den().is_empty() {
        return poly_text(f.num());
    }
    let den = f
        .den()
        .iter()
        .map(|(m, k)| {
            if *k == 1 {
                format!("{{{}}}", m)
            } else {
                format!("{{{}}}^{}", m, k)
            }
        })
        .collect::<Vec<_>>()
        .join("*");
    format!("({}) / ({})", poly_text(f.num()), den)
}

fn mono_latex(m: &Monomial) -> String {
    m.support()
        .map(|(v, e)| {
            if e == 1 {
                v.latex().to_string()
            } else {
                format!("{}^{{{}}}", v.latex(), e)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn poly_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        let mono = mono_latex(m);
        let abs = c.abs();
        let body = match (mono.is_empty(), abs.is_one()) {
            (true, _) => abs.to_string(),
            (false, true) => mono,
            (false, false) => format!("{} {}", abs, mono),
        };
        let sign = match (idx, c.is_negative()) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sign);
        out.push_str(&body);
    }
    out
}

pub fn frac_latex(f: &QFraction) -> String {
    if f.den().is_empty() {
        return poly_latex(f.num());
    }
    let den = f
        .den()
        .iter()
        .map(|(m, k)| {
            if *k == 1 {
                format!("\\{{{}\\}}_q", m)
            } else {
                format!("\\{{{}\\}}_q^{{{}}}", m, k)
            }
        })
        .collect::<Vec<_>>()
        .join(" ");
    format!("\\frac{{{}}}{{{}}}", poly_latex(f.num()), den)
}

fn coeff_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

/// Variables listed in JSON output: always `q, t1, t2`, then any other
/// variable that occurs, in canonical order.
pub fn json_vars(p: &LaurentPoly) -> Vec<Var> {
    let present = p.vars();
    Var::ALL
        .iter()
        .copied()
        .filter(|v| matches!(v, Var::Q | Var::T1 | Var::T2) || present.contains(v))
        .collect()
}

/// `{"vars": [...], "terms": [[exps..., coeff], ...]}`; coefficients outside
/// the i64 range are emitted as decimal strings.
pub fn poly_json(p: &LaurentPoly) -> Value {
    let vars = json_vars(p);
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut row: Vec<Value> = vars.iter().map(|&v| json!(m.exp(v))).collect();
            row.push(coeff_json(c));
            Value::Array(row)
        })
        .collect();
    json!({
        "vars": vars.iter().map(|v| v.name()).collect::<Vec<_>>(),
        "terms": terms,
    })
}

pub fn frac_json(f: &QFraction) -> Value {
    let mut v = poly_json(f.num());
    if !f.den().is_empty() {
        v["den_braces"] = json!(f.den_factors());
    }
    v
}
