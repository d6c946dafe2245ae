//! Exact sparse arithmetic: Laurent polynomials, q-brace fractions and
//! truncated power series.

mod monomial;
mod poly;
mod qfrac;
pub mod render;
mod series;

pub use monomial::{Monomial, Var, NVARS};
pub use poly::{LaurentPoly, SignedMonomial};
pub use qfrac::QFraction;
pub use series::TruncatedSeries;

/// `a op b` for the three ring operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &LaurentPoly, b: &LaurentPoly, op: PolyOp) -> LaurentPoly {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

/// `frac_reduce`: cancel q-brace factors of the denominator that divide the numerator.
pub fn frac_reduce(f: &QFraction) -> QFraction {
    f.reduce()
}

/// Shorthand for `q^e`.
pub fn qpow(e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Var::Q, e)
}
