//! Hecke parameters `t1..t4`, each either a formal variable or specialized to 1.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exactalg::{LaurentPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Formal,
    One,
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "1" => Ok(Param::One),
            "t" | "t1" | "t2" | "formal" => Ok(Param::Formal),
            other => Err(Error::Validation(format!(
                "specialization must be 1 or a formal variable, got {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Formal => f.write_str("formal"),
            Param::One => f.write_str("1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HeckeParams {
    pub t1: Param,
    pub t2: Param,
    pub t3: Param,
    pub t4: Param,
}

impl HeckeParams {
    /// `t1`, `t2` as given; `t3 = t4 = 1`.
    pub fn new(t1: Param, t2: Param) -> Self {
        Self {
            t1,
            t2,
            t3: Param::One,
            t4: Param::One,
        }
    }

    pub fn formal() -> Self {
        Self::new(Param::Formal, Param::Formal)
    }

    pub fn classical() -> Self {
        Self::new(Param::One, Param::One)
    }

    pub fn all_formal() -> Self {
        Self {
            t1: Param::Formal,
            t2: Param::Formal,
            t3: Param::Formal,
            t4: Param::Formal,
        }
    }

    pub fn is_classical(&self) -> bool {
        self.t1 == Param::One && self.t2 == Param::One
    }

    fn slot(&self, i: usize) -> (Param, Var) {
        match i {
            1 => (self.t1, Var::T1),
            2 => (self.t2, Var::T2),
            3 => (self.t3, Var::T3),
            4 => (self.t4, Var::T4),
            _ => panic!("Hecke parameter index {i} out of range 1..=4"),
        }
    }

    /// `t_i^e`
    pub fn t_pow(&self, i: usize, e: i32) -> LaurentPoly {
        match self.slot(i) {
            (Param::One, _) => LaurentPoly::one(),
            (Param::Formal, v) => LaurentPoly::var_pow(v, e),
        }
    }

    pub fn t(&self, i: usize) -> LaurentPoly {
        self.t_pow(i, 1)
    }

    pub fn t_inv(&self, i: usize) -> LaurentPoly {
        self.t_pow(i, -1)
    }

    /// `t̄_i = t_i - t_i^{-1}`
    pub fn tbar(&self, i: usize) -> LaurentPoly {
        self.t(i) - self.t_inv(i)
    }

    /// Specialize every variable that this parameter set fixes to 1.
    pub fn specialize(&self, p: &LaurentPoly) -> LaurentPoly {
        (1..=4).fold(p.clone(), |acc, i| match self.slot(i) {
            (Param::One, v) => acc.specialize_one(v),
            (Param::Formal, _) => acc,
        })
    }
}
