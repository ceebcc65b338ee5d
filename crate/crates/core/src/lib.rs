//! Exact-arithmetic toolkit for twisted Yetter-Drinfeld modules over finite-dimensional
//! Hopf algebras and the G-braided categories they assemble into.
//!
//! The layers, bottom-up:
//!
//! - [`exactlin`]: exact scalars, dense matrices, Kronecker products, leg permutations.
//! - [`hopfcore`]: Hopf algebras by structure constants and their axiom checks.
//! - [`autoact`]: comonoidal bialgebra automorphisms, gauge transformations, group actions.
//! - [`ydmod`]: twisted Yetter-Drinfeld modules and the coaction/half-braiding dictionary.
//! - [`eqcenter`]: the G-graded tensor product, crossed action, G-braiding and coherence checks.
//! - [`gdouble`]: Hopf pairings, the twisted double `D_f`, and the Hopf G-coalgebra.
//! - [`catalog`]: the named algebras, actions and object families used as a test bed.
//! - [`project`]: text project files, named check suites and report emission.
//!
//! Every check is an exact matrix identity; reports carry a witness for each failure.

pub mod autoact;
pub mod catalog;
pub mod eqcenter;
pub mod exactlin;
pub mod gdouble;
pub mod group;
pub mod hopfcore;
pub mod project;
pub mod report;
pub mod ydmod;

pub use exactlin::{Mat, Scalar};
pub use report::{CheckResult, Report};
