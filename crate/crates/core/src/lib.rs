//! Numerical machinery for time-frequency independence questions: exact
//! ℚ-linear structure of frequency sets, simultaneous approximation on the
//! torus, shifted lonely-runner witness searches, and Gabor-system
//! independence verification for small point configurations.
//!
//! Scans are data-parallel via rayon under the default `parallel` feature;
//! building with `--no-default-features` gives a sequential fallback with
//! identical results.

pub mod config;
pub mod error;
pub mod exact;
pub mod gabor;
pub mod instances;
pub mod relations;
pub mod runner;
pub mod scan;
pub mod torus;
pub mod verify;

pub use error::InputError;
pub use exact::{ExactReal, RealBasis, Rational};
pub use gabor::{FunctionModel, Frequency, PointSet, TFPoint};
pub use relations::{affine_dimension, relation_lattice, subgroup_basis, RelationLattice};
pub use runner::{find_lonely_time, runner_margin, select_spectator, RunnerInstance};
pub use torus::{classify_sequence, kronecker_witness, torus_norm, ApproxTask};
pub use verify::{classify_4pt, verify_4pt, verify_theorem_1_4, Verdict, WitnessReport};
