//! Support code for the `hyper3` binary: input loading, parameter grids and
//! the verification harness.

mod error;
pub mod grid;
pub mod input;
pub mod report;
pub mod verify;

pub use error::CliError;
