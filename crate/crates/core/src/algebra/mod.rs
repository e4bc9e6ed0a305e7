//! Exact arithmetic: fields, polynomials, matrices and certificates.

pub mod charpoly;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod psd;
pub mod quadratic;

pub use charpoly::char_poly;
pub use field::{fmt_rational, rat, ratio, Field};
pub use matrix::{IntMatrix, SymMatrix};
pub use poly::{AlgebraicReal, Identified, IntPoly, LargestRoot, Sturm};
pub use psd::{psd_status, solve_symmetric, Ldl, PsdCertificate};
pub use quadratic::QuadraticNumber;
