//! Exact computations with finite-dimensional Hopf algebras and their modules.

pub mod expr;
pub mod field;
pub mod hopf;
pub mod linalg;

pub use field::{Field, FieldError, FieldSpec, Rational, Scalar};
pub use hopf::{AbelianGroup, GroupAction, HopfAlgebra, HopfError};
pub use linalg::{ColumnBasis, LinalgError, Matrix, Rref, Subspace};
pub mod module;
pub mod variety;

pub use module::{Module, ModuleError, ModuleMap};
pub mod projective;
pub mod scenarios;
pub mod workspace;
