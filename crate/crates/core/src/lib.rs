//! Exact computational Lie theory for holonomy-type questions: root systems,
//! weight systems of irreducible modules, weight-combinatorial screening of
//! orthogonal representations, explicit matrix Lie algebras, and curvature
//! and prolongation spaces computed by exact linear algebra.

pub mod criteria;
pub mod curvature;
pub mod matalg;
pub mod field;
pub mod linalg;
pub mod par;
pub mod repweights;
pub mod rootsys;

pub use field::{Gauss, Rat, Scalar};
pub use linalg::{Arithmetic, Mat};
pub use par::Parallelism;
pub use rootsys::{Family, RootSystem, RootSystemError, WeightVector};
