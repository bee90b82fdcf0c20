//! Exact SU(N)_L face models: cyclotomic arithmetic, Boltzmann weights,
//! exterior comodules, modular data and an SU(2) state-sum invariant of
//! closed 3-manifolds.

pub mod boltzmann;
pub mod cyclo;
pub mod error;
pub mod exterior;
pub mod fusion;
pub mod lattice;
pub mod linalg;
pub mod report;
pub mod statesum;
pub mod su2;
pub mod suites;

pub use boltzmann::{Model, ModelParams};
pub use cyclo::{qfact, qint, CycNum, QuadNum};
pub use error::{Error, Result};
pub use report::{Check, Report};
