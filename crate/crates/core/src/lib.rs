//! Exact tools for Seidel matrices, switching classes, root lattices and
//! the extension problem for equiangular line systems.

pub mod algebra;
pub mod check;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod maximality;
pub mod report;
pub mod seidel;

pub use algebra::{IntPoly, QuadraticNumber, SymMatrix};
pub use graph::{Graph, GraphSpec};
pub use check::{CheckReport, Status};
pub use error::{Error, Result};
pub use report::{run_suite, SuiteReport};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Symmetric matrix over one real quadratic field.
pub type FieldSymMatrix = SymMatrix<QuadraticNumber>;
/// Symmetric matrix over the rationals.
pub type RationalMatrix = SymMatrix<Rational>;
/// Floating-point symmetric matrix, for cross-checks only.
pub type FloatMatrix = SymMatrix<f64>;
