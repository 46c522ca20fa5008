//! Exact computations of momentum polytopes and critical points of the norm-square
//! of the momentum map for projective orbits of compact Lie group representations.

pub mod budget;
pub mod catalog;
pub mod error;
pub mod geomkernel;
pub mod kirwan;
pub mod linalg;
pub mod polytope;
pub mod qubits;
pub mod rational;
pub mod rootsys;
pub mod weights;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use rational::Q;
pub use rootsys::{Family, RootSystem, WeightVec};
