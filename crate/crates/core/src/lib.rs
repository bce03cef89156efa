//! Ribbon bases for rank-selected and Whitney homology of geometric
//! lattices, S_n characters of these modules, and representation-stability
//! scans.

pub mod acceptance;
pub mod config;
pub mod error;
pub mod homology;
pub mod io;
pub mod lattices;
pub mod linalg;
pub mod matroid;
pub mod partition;
pub mod perm;
pub mod poset;
pub mod repstab;
pub mod scalar;
pub mod setpartition;
pub mod shelling;
pub mod tableaux;

/// Exact rationals, the default coefficient field.
pub type Rational = num_rational::BigRational;
