//! S_n characters of chain, homology and Whitney homology modules, the
//! symmetric function layer, and stability scans.

pub mod classfn;
pub mod modules;
pub mod stability;
pub mod symfunc;

pub use classfn::{decompose, irreducible_character, ClassFunction, IrrepDecomposition, PaddedDecomposition};
pub use modules::{
    character_alpha, character_beta, character_wh, character_wh_by_alpha, character_wh_by_beta, essential_part,
    essential_part_symfunc, wh_component, wh_symfunc, Family,
};
pub use stability::{chain_module_stability, component_bound_check, stability_scan, StabilityReport, Verdict};
pub use symfunc::{frobenius, ribbon_schur, SymFunc};
