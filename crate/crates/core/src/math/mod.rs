//! Exact scalars, dense linear algebra, and integer lattices.

pub mod field;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod roots;

pub use field::{Cyclotomic, Field, Scalar};
pub use lattice::{lattice_meet_line, IntLattice};
pub use matrix::{char_poly, kernel_basis, solve_linear, Matrix};
pub use roots::{integer_roots, integer_roots_of_scalars, IntegerRoots};
