pub mod algebra;
pub mod constructors;
pub mod error;
pub mod frobenius;
pub mod fusion;
pub mod hopf;
pub mod io;
pub mod math;
pub mod rep;
pub mod report;

pub use algebra::{Algebra, Element};
pub use error::{Error, Result};
pub use frobenius::FrobeniusStructure;
pub use fusion::FusionRing;
pub use hopf::Hopf;
pub use math::{Field, Matrix, Scalar};
pub use report::{Clause, Status};
pub use rep::{Representation, WeakForm};
