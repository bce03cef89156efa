//! Desk-scale resource guards.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Largest Boolean lattice B_n.
    pub boolean_max_n: usize,
    /// Largest partition lattice Π_n.
    pub partition_max_n: usize,
    /// Largest number of flats in a lattice of flats.
    pub flats_cap: usize,
    /// Largest number of poset elements or enumerated chains.
    pub element_cap: usize,
    /// Largest number of group elements summed over by a symmetrizer.
    pub groupsum_cap: u128,
    /// Largest n for character decomposition.
    pub decompose_max_n: usize,
    /// Largest degree of a plethysm result.
    pub plethysm_max_degree: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            boolean_max_n: 12,
            partition_max_n: 10,
            flats_cap: 1 << 16,
            element_cap: 4_000_000,
            groupsum_cap: 10_000_000,
            decompose_max_n: 12,
            plethysm_max_degree: 20,
        }
    }
}

impl Guards {
    pub fn check(&self, what: &'static str, value: usize, cap: usize) -> Result<()> {
        if value > cap {
            Err(Error::Guard {
                what,
                value: value as u128,
                cap: cap as u128,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_elements(&self, what: &'static str, value: usize) -> Result<()> {
        self.check(what, value, self.element_cap)
    }

    pub fn check_groupsum(&self, value: u128) -> Result<()> {
        if value > self.groupsum_cap {
            Err(Error::Guard {
                what: "group-sum size",
                value,
                cap: self.groupsum_cap,
            })
        } else {
            Ok(())
        }
    }
}
