// index loops mirror the triangular (n, p) and (n, i) indexing of the formulas
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod cyclo;
pub mod daha;
pub mod error;
pub mod exactalg;
pub mod knots;
pub mod macdonald;
pub mod params;
pub mod qcombo;
pub mod verify;

pub use error::{Error, Result};
