use std::fmt;
use std::ops::{Index, IndexMut};

/// The fixed variable set. Declaration order is the canonical term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T1,
    T2,
    T3,
    T4,
    /// Module variable of the solid-torus side.
    U,
    /// Polynomial-representation variable.
    X,
    /// Macdonald variable.
    SmallX,
    /// Generating-function variable.
    Lambda,
}

pub const NVARS: usize = 9;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Q,
        Var::T1,
        Var::T2,
        Var::T3,
        Var::T4,
        Var::U,
        Var::X,
        Var::SmallX,
        Var::Lambda,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T1 => "t1",
            Var::T2 => "t2",
            Var::T3 => "t3",
            Var::T4 => "t4",
            Var::U => "U",
            Var::X => "X",
            Var::SmallX => "x",
            Var::Lambda => "lambda",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T1 => "t_1",
            Var::T2 => "t_2",
            Var::T3 => "t_3",
            Var::T4 => "t_4",
            Var::U => "U",
            Var::X => "X",
            Var::SmallX => "x",
            Var::Lambda => "\\lambda",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s || (s == "λ" && *v == Var::Lambda))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A power product of the fixed variables with signed exponents.
///
/// Stored densely; an absent variable is simply a zero slot. The derived
/// ordering is lexicographic in [`Var`] declaration order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: i32) -> Self {
        let mut m = Self::ONE;
        m.0[v.index()] = exp;
        m
    }

    pub fn from_pairs(pairs: &[(Var, i32)]) -> Self {
        let mut m = Self::ONE;
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    #[inline]
    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o += e;
        }
        out
    }

    pub fn inverse(&self) -> Monomial {
        let mut out = *self;
        for e in out.0.iter_mut() {
            *e = -*e;
        }
        out
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut out = *self;
        for e in out.0.iter_mut() {
            *e *= k;
        }
        out
    }

    /// Copy with the exponent of `v` cleared.
    pub fn without(&self, v: Var) -> Monomial {
        let mut out = *self;
        out.0[v.index()] = 0;
        out
    }

    /// Variables with nonzero exponent, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        Var::ALL
            .iter()
            .copied()
            .filter_map(move |v| match self.exp(v) {
                0 => None,
                e => Some((v, e)),
            })
    }
}

impl Index<Var> for Monomial {
    type Output = i32;
    fn index(&self, v: Var) -> &i32 {
        &self.0[v.index()]
    }
}

impl IndexMut<Var> for Monomial {
    fn index_mut(&mut self, v: Var) -> &mut i32 {
        &mut self.0[v.index()]
    }
}
