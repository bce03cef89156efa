//! Chain complexes of rank-selected subposets, ribbon bases and the
//! Orlik–Solomon comparison.

pub mod basis;
pub mod betti;
pub mod chains;
pub mod os;

pub use basis::{
    action_coordinates, check_beta_basis, check_wh_basis, homology_facets, ribbon_basis_beta, ribbon_basis_wh,
    trace, verify_basis, wh_homology_facets, BasisElement, BasisReport,
};
pub use betti::{betti_numbers, betti_top, betti_top_below, check_dd_zero, faces};
pub use chains::{bar_f_chain, ChainMode, ChainVector};
pub use os::{os_dimension, verify_os, OsReport};
