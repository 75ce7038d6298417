//! Exact structure constants of the symmetric group and symmetric
//! functions.
//!
//! - [`partitions`]: partitions, cycle types, hook-length dimensions, box counts
//! - [`tableaux`]: Kostka numbers and Littlewood–Richardson coefficients
//! - [`characters`]: Murnaghan–Nakayama characters and character tables
//! - [`symfunc`]: symmetric polynomials, Schur expansion, plethysm
//! - [`kronecker`]: Kronecker and reduced Kronecker coefficients
//! - [`plethysm`]: plethysm coefficients and `h_d[h_n]`
//! - [`verify`]: exhaustive property and conjecture checks
//! - [`cli`]: the `symcomb` command line
//!
//! Every value is an arbitrary-precision integer; nothing passes through
//! floating point.

pub mod characters;
pub mod cli;
pub mod error;
pub mod kronecker;
pub mod partitions;
pub mod plethysm;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
