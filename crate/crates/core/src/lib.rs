//! Exact Chern classes and Chern characters of the tangent and tautological
//! bundles on the Hilbert scheme of `n` points in the plane, written in the
//! power-sum basis of the ring of symmetric functions.
//!
//! Modules, bottom-up:
//!
//! * [`partitions`]: partitions, Young diagrams, hooks, `z_λ`;
//! * [`characters`]: `χ^λ_μ` by Murnaghan–Nakayama, Frobenius map, Schur functions;
//! * [`symfun`]: the ring `ℚ[p₁, p₂, …]` with truncated `exp`/`log` and Lehn's operator;
//! * [`hilbert`]: fixed-point formulas and generating series for the bundles;
//! * [`identities`]: the Catalan, Pochhammer, hypergeometric and Stirling identities;
//! * [`verify`]: the verification suites behind `hilbchern verify`.

pub mod characters;
pub mod hilbert;
pub mod identities;
pub mod number;
pub mod partitions;
pub mod symfun;
pub mod verify;

pub use characters::{char_on_full_cycle, frobenius_image, mn_character, schur_in_p, ClassFunction};
pub use hilbert::{HilbertError, WeightAssignment};
pub use number::Rational;
pub use partitions::{partitions_of, Cell, Partition, PartitionError};
pub use symfun::{SymFunc, SymFuncError, Truncation};
