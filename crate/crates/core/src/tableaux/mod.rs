//! Ribbons, tabloids, Young tableaux and symmetrizers.

pub mod ribbon;
pub mod swappable;
pub mod tabloid;
pub mod young;

pub use ribbon::{ribbon_of, ribbon_wh, RibbonFilling, RibbonShape};
pub use tabloid::{polytabloid, TabloidVector};
pub use young::{standard_tableaux, syt_count_with_descent_set, young_symmetrizer_apply, YoungTableau};
