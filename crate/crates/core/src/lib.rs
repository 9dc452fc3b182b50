//! Exact computations with standard graded Artinian algebras over the
//! rationals: Gröbner bases, Hilbert series, weak and strong Lefschetz
//! checks, Jordan types of multiplication maps, central simple modules and
//! associated graded algebras.

pub mod artinian;
pub mod cli;
pub mod error;
pub mod gr;
pub mod groebner;
pub mod jordan;
pub mod lefschetz;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
