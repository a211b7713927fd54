//! Exact-arithmetic workbench for root-system computations around
//! generalized Gelfand–Graev characters of finite groups of Lie type.
//!
//! * [`rootsys`]: root systems of the simple types, subsystems, type identification.
//! * [`grading`]: weighted Dynkin diagrams and the gradings they induce.
//! * [`ohmori`]: the integer systems `Σ n_j ⟨α, ω_j⟩ = c` and their exact solution.
//! * [`torus`]: torus elements `h(g^{m_1}, …, g^{m_l})`, their orders and kernels.
//! * [`multiplicity`]: symmetric-group bookkeeping for Kawanaka's multiplicity formula.
//! * [`scenarios`]: the fixed case studies and their verification reports.
//!
//! Nothing here uses floating point.

pub mod error;
pub mod grading;
pub mod linalg;
pub mod multiplicity;
pub mod ohmori;
pub mod rootsys;
pub mod scenarios;
pub mod torus;

pub use error::{Error, Result};
pub use rootsys::{CartanMatrix, Family, Root, RootSystem, SimpleType, Subsystem};
