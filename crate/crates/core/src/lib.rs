//! Exact-arithmetic kernel for signed counts of real simple rational functions.
//!
//! The crate is organised around five building blocks:
//!
//! - [`algebra`]: the g-reduced polynomial algebra in `q`, `f`, `g` over exact
//!   rationals (`f^2 + g^2 = 1`), the differential operator `D = q d/dq`,
//!   bidegrees, truncated series expansion and linear-independence checks.
//! - [`alternations`]: ordinary and broken alternations, their recursions and
//!   brute-force oracle, the generating series `f`, `g`, `u`, `v` and the
//!   operator families `f_c`, `g_c`, `g~_c`, `u_c`, `v_c`.
//! - [`bwgraphs`]: canonical encodings of real black-and-white unicyclic plane
//!   graphs, exhaustive enumeration by degree partitions, signs, and the
//!   flip / cyclic-shift / rotation operations.
//! - [`profiles`]: reduced ramification profiles, their statistics, vanishing
//!   predicates, degree bounds and simple-base enumeration.
//! - [`snumbers`]: base descriptors, assembly of the per-base generating
//!   series, the empty-profile pipeline and growth diagnostics.
//!
//! Everything is computed in exact rational arithmetic; floating point only
//! appears in the (`std`-gated) growth diagnostics. The crate is `no_std`
//! compatible (requires `alloc`) when built without the `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod alternations;
pub mod bwgraphs;
pub mod profiles;
pub mod rng;
pub mod snumbers;

pub use algebra::{BiDegree, Degree, GElement, QFPolynomial, Rational, TruncatedSeries};
pub use alternations::AlternationTables;
pub use bwgraphs::RealBwGraph;
pub use profiles::{Parity, Partition, ProfileStats, ReducedProfiles};
pub use snumbers::{BaseDescriptor, BaseType};
