//! Exact integer and floating-point linear algebra used by the operators.

mod int;
mod poly;
mod real;
mod roots;

pub use int::{charpoly_exact, max_abs_entry, IntMatrix};
pub use poly::IntPolynomial;
pub use real::{symmetric_eigen, RealMatrix, SymmetricEigen};
pub use roots::real_roots;
