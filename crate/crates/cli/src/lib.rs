//! Instance files, serialization, random instance generation and verification
//! suites around `matroid-torsion`, shared by the `mtorsion` binary and its tests.

pub mod error;
pub mod formats;
pub mod generator;
pub mod instance;
pub mod parallel;
pub mod suites;

pub use error::{CliError, ExitCode};
pub use instance::InstanceSpec;
